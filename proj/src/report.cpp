#include "icphi/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "icphi/analysis.hpp"
#include "icphi/common.hpp"

namespace icphi {

namespace {

// Verdicts for one corpus member.  An analysis that blows a budget gives
// every requested statement a not-satisfied verdict carrying the message,
// so one oversized group cannot take down a batch run.
std::vector<Verdict> evaluate_member(const Group& g,
                                     const std::vector<StatementId>& stmts,
                                     std::vector<double>& seconds) {
  std::vector<Verdict> out;
  out.reserve(stmts.size());
  try {
    Analysis a(g);
    for (size_t k = 0; k < stmts.size(); ++k) {
      auto t0 = std::chrono::steady_clock::now();
      out.push_back(verify_statement(a, stmts[k]));
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      seconds[k] += dt.count();
    }
  } catch (const BudgetError& e) {
    out.clear();
    for (StatementId s : stmts)
      out.push_back(Verdict{s, Hypothesis::NotSatisfied,
                            Conclusion::NotEvaluated,
                            std::string("budget exceeded: ") + e.what()});
  }
  return out;
}

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

}  // namespace

int RunReport::violations() const {
  int n = 0;
  for (const StatementTally& t : tallies) n += t.violated;
  return n;
}

RunReport run_verification(const Corpus& corpus, const RunConfig& config) {
  RunReport report;
  report.config = config;
  if (report.config.statements.empty())
    report.config.statements = all_statements();
  require(report.config.jobs >= 1, "run_verification: jobs must be positive");
  const std::vector<StatementId>& stmts = report.config.statements;

  int n = static_cast<int>(corpus.members.size());
  report.group_count = n;
  report.notices = corpus.notices;

  int workers = std::min(report.config.jobs, std::max(n, 1));
  std::vector<std::vector<Verdict>> results(n);
  std::vector<std::vector<double>> seconds(
      workers, std::vector<double>(stmts.size(), 0.0));

  // Groups are claimed from a shared counter; slot i of `results` belongs
  // to member i alone, so merging in index order keeps the report
  // independent of scheduling.
  std::atomic<int> next{0};
  auto work = [&](int w) {
    for (int i; (i = next.fetch_add(1)) < n;)
      results[i] = evaluate_member(corpus.members[i].group, stmts, seconds[w]);
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }

  report.rows.reserve(static_cast<size_t>(n) * stmts.size());
  for (int i = 0; i < n; ++i)
    for (Verdict& v : results[i])
      report.rows.push_back(VerdictRow{corpus.members[i].name,
                                       corpus.members[i].group.order(), v});

  for (size_t k = 0; k < stmts.size(); ++k) {
    StatementTally t;
    t.statement = stmts[k];
    for (const std::vector<double>& s : seconds) t.seconds += s[k];
    report.tallies.push_back(t);
  }
  for (const VerdictRow& row : report.rows) {
    StatementTally& t =
        *std::find_if(report.tallies.begin(), report.tallies.end(),
                      [&](const StatementTally& c) {
                        return c.statement == row.verdict.statement;
                      });
    switch (row.verdict.hypothesis) {
      case Hypothesis::Satisfied:
        ++t.satisfied;
        break;
      case Hypothesis::Vacuous:
        ++t.vacuous;
        break;
      case Hypothesis::NotSatisfied:
        ++t.not_satisfied;
        break;
    }
    if (row.verdict.conclusion == Conclusion::Verified) ++t.verified;
    if (row.verdict.conclusion == Conclusion::Violated) ++t.violated;
  }
  return report;
}

std::string render_text(const RunReport& report) {
  std::string out;
  out += "verification report\n";
  out += "  corpus: " + report.config.corpus_source + " (max order " +
         std::to_string(report.config.max_order) + "), " +
         std::to_string(report.group_count) + " groups\n";
  out += "  statements: " +
         std::to_string(report.config.statements.size()) + "\n";
  for (StatementId s : report.config.statements) {
    out += "    ";
    out += pad(to_string(s), 5);
    out += statement_summary(s);
    out += "\n";
  }
  if (!report.notices.empty()) {
    out += "\nnotices:\n";
    for (const std::string& m : report.notices) out += "  " + m + "\n";
  }

  out += "\nsummary (rows per hypothesis and conclusion):\n";
  out += "  statement  satisfied  vacuous  not-satisfied  verified  violated\n";
  for (const StatementTally& t : report.tallies) {
    out += "  " + pad(to_string(t.statement), 11);
    auto cell = [&](int v, size_t w) { out += pad(std::to_string(v), w); };
    cell(t.satisfied, 11);
    cell(t.vacuous, 9);
    cell(t.not_satisfied, 15);
    cell(t.verified, 10);
    cell(t.violated, 8);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }

  size_t gw = 5, ow = 5;
  for (const VerdictRow& r : report.rows) {
    gw = std::max(gw, r.group.size());
    ow = std::max(ow, std::string(to_string(r.verdict.statement)).size());
  }
  out += "\nverdicts:\n";
  for (const VerdictRow& r : report.rows) {
    out += "  " + pad(r.group, gw + 2) +
           pad(to_string(r.verdict.statement), ow + 2) +
           pad(to_string(r.verdict.hypothesis), 15) +
           pad(to_string(r.verdict.conclusion), 15);
    if (!r.verdict.witness.empty()) out += r.verdict.witness;
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }

  out += "\nresult: " + std::to_string(report.violations()) + " violations\n";
  return out;
}

std::string render_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  nlohmann::ordered_json cfg;
  cfg["corpus"] = report.config.corpus_source;
  cfg["max_order"] = report.config.max_order;
  std::vector<std::string> names;
  for (StatementId s : report.config.statements)
    names.emplace_back(to_string(s));
  cfg["statements"] = names;
  j["config"] = cfg;
  j["group_count"] = report.group_count;
  j["notices"] = report.notices;

  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (const StatementTally& t : report.tallies) {
    nlohmann::ordered_json row;
    row["statement"] = to_string(t.statement);
    row["satisfied"] = t.satisfied;
    row["vacuous"] = t.vacuous;
    row["not_satisfied"] = t.not_satisfied;
    row["verified"] = t.verified;
    row["violated"] = t.violated;
    summary.push_back(std::move(row));
  }
  j["summary"] = std::move(summary);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const VerdictRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["group"] = r.group;
    row["order"] = r.order;
    row["statement"] = to_string(r.verdict.statement);
    row["hypothesis"] = to_string(r.verdict.hypothesis);
    row["conclusion"] = to_string(r.verdict.conclusion);
    row["witness"] = r.verdict.witness;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["violations"] = report.violations();
  return j.dump(2) + "\n";
}

}  // namespace icphi
