// Command-line front end: list the corpus, analyze one group, or run the
// statement catalogue and emit a report.  Exit codes: 0 clean, 1 at least
// one violated conclusion, 2 usage or parse errors.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "icphi/analysis.hpp"
#include "icphi/classify.hpp"
#include "icphi/common.hpp"
#include "icphi/corpus.hpp"
#include "icphi/report.hpp"
#include "icphi/series.hpp"
#include "icphi/verify.hpp"

namespace {

using namespace icphi;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The builtin corpus bounded by max_order, or a manifest file filtered the
// same way, so one flag means the same thing for both sources.
Corpus load_corpus(const std::string& path, int max_order) {
  if (path.empty()) return build_corpus(max_order);
  Corpus c = parse_manifest(read_file(path));
  Corpus kept;
  kept.notices = c.notices;
  for (CorpusMember& m : c.members)
    if (m.group.order() <= max_order) kept.members.push_back(std::move(m));
  return kept;
}

std::string census_line(const std::vector<int>& sorted_values) {
  std::string out;
  for (size_t i = 0; i < sorted_values.size();) {
    size_t j = i;
    while (j < sorted_values.size() && sorted_values[j] == sorted_values[i])
      ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(sorted_values[i]) + ':' + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "-" : out;
}

int cmd_list(const std::string& corpus_path, int max_order,
             const std::string& format) {
  Corpus c = load_corpus(corpus_path, max_order);
  for (const std::string& m : c.notices) std::cerr << "notice: " << m << "\n";
  if (format == "json") {
    // The manifest form round-trips through --corpus.
    std::cout << print_manifest(c);
    return 0;
  }
  size_t name_w = 5;
  for (const CorpusMember& m : c.members)
    name_w = std::max(name_w, m.name.size());
  std::ostringstream out;
  for (const CorpusMember& m : c.members) {
    std::string order = std::to_string(m.group.order());
    out << std::string(5 - std::min<size_t>(5, order.size()), ' ') << order
        << "  " << m.name << std::string(name_w + 2 - m.name.size(), ' ')
        << m.provenance << "\n";
  }
  out << c.members.size() << " groups\n";
  std::cout << out.str();
  return 0;
}

int cmd_analyze(const std::string& input, const std::string& corpus_path,
                int max_order) {
  NamedGroup named = [&] {
    if (std::filesystem::exists(input)) return parse_group(read_file(input));
    Corpus c = load_corpus(corpus_path, max_order);
    for (CorpusMember& m : c.members)
      if (m.name == input) return NamedGroup{m.name, std::move(m.group)};
    throw UsageError("no file or corpus member named '" + input +
                     "'; `list` prints the member names");
  }();
  const Group& g = named.group;
  Analysis a(g);
  const SubgroupLattice& l = a.lattice();
  GroupFingerprint fp = fingerprint(g, l);

  std::ostringstream out;
  out << "group: " << named.name << " (order " << g.order() << ", degree "
      << g.degree() << ")\n";

  out << "fingerprint:\n";
  out << "  element orders: " << census_line(fp.element_orders) << "\n";
  out << "  center order: " << fp.center_order << "\n";
  out << "  derived order: " << fp.derived_order << "\n";
  out << "  abelianization: " << census_line(fp.abelianization_orders) << "\n";

  out << "predicates:\n";
  out << "  abelian: " << (is_abelian(g) ? "true" : "false") << "\n";
  out << "  cyclic: " << (is_cyclic(g) ? "true" : "false") << "\n";
  out << "  nilpotent: " << (a.nilpotent() ? "true" : "false") << "\n";
  out << "  solvable: " << (a.solvable() ? "true" : "false") << "\n";
  out << "  supersolvable: " << (a.supersolvable() ? "true" : "false") << "\n";
  out << "  q8-free: " << (a.q8_free() ? "true" : "false") << "\n";
  out << "  2-closed: " << (is_2_closed(g, l) ? "true" : "false") << "\n";
  for (int p : prime_divisors(g.order()))
    out << "  " << p << "-nilpotent: "
        << (is_p_nilpotent(g, l, p) ? "true" : "false") << "\n";

  out << "characteristic subgroups (orders):\n";
  out << "  frattini: " << l.order_of(l.frattini_of(l.top())) << "\n";
  out << "  center: " << center_mask(g).count() << "\n";
  out << "  hypercenter: " << a.hypercenter_mask().count() << "\n";
  out << "  fitting: " << fitting(g, l).order << "\n";
  out << "  generalized fitting: " << a.fstar_of(l.top()).count() << "\n";
  out << "  u-hypercenter: " << a.u_hypercenter_mask().count() << "\n";

  std::map<int, std::pair<int, int>> by_order;  // order -> {count, icphi}
  int icphi_total = 0;
  for (int i = 0; i < l.size(); ++i) {
    auto& slot = by_order[l.order_of(i)];
    ++slot.first;
    if (a.icphi(i)) {
      ++slot.second;
      ++icphi_total;
    }
  }
  out << "subgroups: " << l.size() << " total, " << icphi_total
      << " icphi\n";
  for (const auto& [order, counts] : by_order)
    out << "  order " << order << ": " << counts.first << " subgroups, "
        << counts.second << " icphi\n";

  // A full roster is only readable for small lattices.
  if (l.size() <= 64) {
    out << "subgroup roster (index, order, normal, icphi, elements):\n";
    for (int i = 0; i < l.size(); ++i) {
      out << "  #" << i << "  order " << l.order_of(i)
          << (l.normal(i) ? "  normal" : "        ")
          << (a.icphi(i) ? "  icphi  {" : "  -      {");
      bool first = true;
      l.mask(i).for_each([&](int r) {
        if (!first) out << ' ';
        out << r;
        first = false;
      });
      out << "}\n";
    }
  }
  std::cout << out.str();
  return 0;
}

int cmd_verify(const std::string& corpus_path, int max_order,
               const std::vector<std::string>& statement_names,
               const std::string& format, int jobs,
               const std::string& out_path) {
  RunConfig cfg;
  cfg.max_order = max_order;
  cfg.jobs = jobs;
  if (!corpus_path.empty()) cfg.corpus_source = corpus_path;
  for (const std::string& name : statement_names) {
    std::optional<StatementId> id = statement_from_string(name);
    if (!id) throw UsageError("unknown statement id: " + name);
    cfg.statements.push_back(*id);
  }

  auto t0 = std::chrono::steady_clock::now();
  Corpus corpus = load_corpus(corpus_path, max_order);
  RunReport report = run_verification(corpus, cfg);
  std::chrono::duration<double> wall = std::chrono::steady_clock::now() - t0;

  std::string rendered =
      format == "json" ? render_json(report) : render_text(report);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open " + out_path);
    out << rendered;
  }

  // Timings are diagnostics: stderr only, so reports stay byte-identical
  // across runs.
  std::cerr << std::fixed;
  std::cerr.precision(3);
  for (const StatementTally& t : report.tallies)
    std::cerr << "time " << to_string(t.statement) << " " << t.seconds
              << "s\n";
  std::cerr << "time total " << wall.count() << "s\n";
  return report.violations() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group engine: corpus, analysis and statement checks"};
  app.require_subcommand(1);

  std::string corpus_path;
  int max_order = 64;
  auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", corpus_path,
                    "load the corpus from a manifest file instead of "
                    "building the builtin one");
    cmd->add_option("--max-order", max_order,
                    "largest group order to keep (builtin or loaded)")
        ->check(CLI::Range(1, kOrderBudget));
  };

  CLI::App* list = app.add_subcommand("list", "print the corpus members");
  add_shared(list);
  std::string list_format = "text";
  list->add_option("--format", list_format,
                   "text table or the json manifest form")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full structural breakdown of one group");
  std::string input;
  analyze
      ->add_option("group", input,
                   "corpus member name or path to a group record file")
      ->required();
  add_shared(analyze);

  CLI::App* verify =
      app.add_subcommand("verify", "check statements across the corpus");
  add_shared(verify);
  std::vector<std::string> statement_names;
  verify->add_option("--statement", statement_names,
                     "statement id to check (repeatable; default all)");
  std::string format = "text";
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  int jobs = 1;
  verify->add_option("--jobs", jobs, "worker threads over groups")
      ->check(CLI::Range(1, 64));
  std::string out_path;
  verify->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) return cmd_list(corpus_path, max_order, list_format);
    if (analyze->parsed()) return cmd_analyze(input, corpus_path, max_order);
    return cmd_verify(corpus_path, max_order, statement_names, format, jobs,
                      out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
