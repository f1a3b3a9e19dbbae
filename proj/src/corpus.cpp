#include "icphi/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "icphi/classify.hpp"
#include "icphi/common.hpp"
#include "icphi/construct.hpp"

namespace icphi {

namespace {

// Cap on generator-image combinations tried per action enumeration.  Hit
// only by elementary abelian acting groups with several generators; the
// caller skips the pair and logs a notice.
constexpr long kActionComboBudget = 1'000'000;

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

GroupRecipe make(RecipeKind kind, int n, int k) {
  GroupRecipe r;
  r.kind = kind;
  r.n = n;
  r.k = k;
  return r;
}

}  // namespace

GroupRecipe cyclic_recipe(int n) {
  require(n >= 1, "cyclic recipe: order must be at least 1");
  return make(RecipeKind::Cyclic, n, 0);
}

GroupRecipe dihedral_recipe(int n) {
  require(n >= 3, "dihedral recipe: polygon needs at least 3 vertices");
  return make(RecipeKind::Dihedral, n, 0);
}

GroupRecipe dicyclic_recipe(int order) {
  require(order >= 8 && order % 4 == 0,
          "dicyclic recipe: order must be a multiple of 4, at least 8");
  return make(RecipeKind::Dicyclic, order, 0);
}

GroupRecipe symmetric_recipe(int n) {
  require(n >= 1 && n <= 8, "symmetric recipe: degree out of range");
  return make(RecipeKind::Symmetric, n, 0);
}

GroupRecipe alternating_recipe(int n) {
  require(n >= 3 && n <= 8, "alternating recipe: degree out of range");
  return make(RecipeKind::Alternating, n, 0);
}

GroupRecipe elementary_abelian_recipe(int p, int k) {
  require(is_prime(p), "elementary abelian recipe: p must be prime");
  require(k >= 1 && k <= 16, "elementary abelian recipe: exponent out of range");
  return make(RecipeKind::ElementaryAbelian, p, k);
}

GroupRecipe direct_product_recipe(GroupRecipe a, GroupRecipe b) {
  GroupRecipe r = make(RecipeKind::DirectProduct, 0, 0);
  r.parts.push_back(std::move(a));
  r.parts.push_back(std::move(b));
  return r;
}

GroupRecipe semidirect_recipe(GroupRecipe a, GroupRecipe b, int action_index) {
  require(action_index >= 0, "semidirect recipe: action index must be nonnegative");
  GroupRecipe r = make(RecipeKind::Semidirect, 0, action_index);
  r.parts.push_back(std::move(a));
  r.parts.push_back(std::move(b));
  return r;
}

GroupRecipe explicit_recipe(std::string name) {
  require(name == "Q8" || name == "SL(2,3)",
          "explicit recipe: unknown group name '" + name + "'");
  GroupRecipe r = make(RecipeKind::Explicit, 0, 0);
  r.target = std::move(name);
  return r;
}

int predicted_order(const GroupRecipe& r) {
  switch (r.kind) {
    case RecipeKind::Cyclic:
      return r.n;
    case RecipeKind::Dihedral:
      return 2 * r.n;
    case RecipeKind::Dicyclic:
      return r.n;
    case RecipeKind::Symmetric:
      return static_cast<int>(factorial(r.n));
    case RecipeKind::Alternating:
      return static_cast<int>(factorial(r.n) / 2);
    case RecipeKind::ElementaryAbelian: {
      int o = 1;
      for (int i = 0; i < r.k; ++i) o *= r.n;
      return o;
    }
    case RecipeKind::DirectProduct:
    case RecipeKind::Semidirect:
      return predicted_order(r.parts[0]) * predicted_order(r.parts[1]);
    case RecipeKind::Explicit:
      return r.target == "Q8" ? 8 : 24;
  }
  throw CheckError("predicted_order: unhandled recipe kind");
}

std::string recipe_string(const GroupRecipe& r) {
  switch (r.kind) {
    case RecipeKind::Cyclic:
      return "cyclic(" + std::to_string(r.n) + ")";
    case RecipeKind::Dihedral:
      return "dihedral(" + std::to_string(r.n) + ")";
    case RecipeKind::Dicyclic:
      return "dicyclic(" + std::to_string(r.n) + ")";
    case RecipeKind::Symmetric:
      return "symmetric(" + std::to_string(r.n) + ")";
    case RecipeKind::Alternating:
      return "alternating(" + std::to_string(r.n) + ")";
    case RecipeKind::ElementaryAbelian:
      return "elementary_abelian(" + std::to_string(r.n) + "," +
             std::to_string(r.k) + ")";
    case RecipeKind::DirectProduct:
      return "direct_product(" + recipe_string(r.parts[0]) + ", " +
             recipe_string(r.parts[1]) + ")";
    case RecipeKind::Semidirect:
      return "semidirect(" + recipe_string(r.parts[0]) + ", " +
             recipe_string(r.parts[1]) + ", " + std::to_string(r.k) + ")";
    case RecipeKind::Explicit:
      return "explicit(" + r.target + ")";
  }
  throw CheckError("recipe_string: unhandled recipe kind");
}

namespace {

Group materialize_impl(const GroupRecipe& r) {
  switch (r.kind) {
    case RecipeKind::Cyclic:
      return construct::cyclic(r.n);
    case RecipeKind::Dihedral:
      return construct::dihedral(r.n);
    case RecipeKind::Dicyclic:
      return construct::dicyclic(r.n);
    case RecipeKind::Symmetric:
      return construct::symmetric(r.n);
    case RecipeKind::Alternating:
      return construct::alternating(r.n);
    case RecipeKind::ElementaryAbelian:
      return construct::elementary_abelian(r.n, r.k);
    case RecipeKind::DirectProduct:
      return construct::direct_product(materialize(r.parts[0]),
                                       materialize(r.parts[1]));
    case RecipeKind::Semidirect: {
      Group a = materialize(r.parts[0]);
      Group b = materialize(r.parts[1]);
      std::vector<SemidirectAction> actions = enumerate_semidirect_actions(a, b);
      require(r.k < static_cast<int>(actions.size()),
              "semidirect recipe: action index out of range");
      return construct::semidirect_product(a, b, actions[r.k]);
    }
    case RecipeKind::Explicit:
      return r.target == "Q8" ? construct::quaternion8() : construct::sl23();
  }
  throw CheckError("materialize: unhandled recipe kind");
}

}  // namespace

Group materialize(const GroupRecipe& r) {
  Group g = materialize_impl(r);
  check(g.order() == predicted_order(r),
        "materialize: order differs from the recipe's prediction");
  return g;
}

namespace {

// Enumeration core shared by the public entry point and the corpus
// builder: all homomorphisms from b into aut, as rank vectors over aut.
std::vector<std::vector<int>> action_rank_vectors(const Group& aut,
                                                  const Group& b) {
  const int nb = b.order();
  const auto& gens = b.generator_ranks();
  const int ng = static_cast<int>(gens.size());

  // Reach every element of b from the identity by right-multiplying
  // generators, remembering which product got there first.  A choice of
  // generator images then extends along these paths in one sweep.
  std::vector<int> via_from(nb, -1), via_gen(nb, -1);
  std::vector<int> reach;
  reach.reserve(nb);
  reach.push_back(b.id_rank());
  via_from[b.id_rank()] = b.id_rank();
  for (size_t q = 0; q < reach.size(); ++q)
    for (int gi = 0; gi < ng; ++gi) {
      const int to = b.mul(reach[q], gens[gi]);
      if (via_from[to] != -1) continue;
      via_from[to] = reach[q];
      via_gen[to] = gi;
      reach.push_back(to);
    }
  check(static_cast<int>(reach.size()) == nb,
        "semidirect actions: generators fail to span the acting group");

  // A generator's image must have order dividing the generator's; nothing
  // else can extend to a homomorphism.
  std::vector<std::vector<int>> cand(ng);
  long combos = 1;
  for (int gi = 0; gi < ng; ++gi) {
    const int go = b.elem_order(gens[gi]);
    for (int ar = 0; ar < aut.order(); ++ar)
      if (go % aut.elem_order(ar) == 0) cand[gi].push_back(ar);
    combos *= static_cast<long>(cand[gi].size());
    if (combos > kActionComboBudget)
      throw BudgetError(
          "semidirect actions: generator-image combinations exceed the cap");
  }

  // The product convention downstream is (x1, y1)(x2, y2) =
  // (x1 * phi(y1)(x2), y1 y2), which forces phi(y1 y2) = phi(y1) o phi(y2)
  // with phi(y2) applied first.  Group multiplication composes the other
  // way around (mul(u, v) applies u first), so the homomorphism law reads
  // f[x y] = aut.mul(f[y], f[x]) in table terms.
  std::vector<std::vector<int>> out;
  std::vector<int> pick(ng, 0);
  std::vector<int> f(nb);
  while (true) {
    f[b.id_rank()] = aut.id_rank();
    for (size_t q = 1; q < reach.size(); ++q) {
      const int x = reach[q];
      f[x] = aut.mul(cand[via_gen[x]][pick[via_gen[x]]], f[via_from[x]]);
    }
    bool hom = true;
    for (int x = 0; x < nb && hom; ++x)
      for (int y = 0; y < nb; ++y)
        if (f[b.mul(x, y)] != aut.mul(f[y], f[x])) {
          hom = false;
          break;
        }
    if (hom) out.push_back(f);
    int pos = ng - 1;
    while (pos >= 0 && pick[pos] + 1 == static_cast<int>(cand[pos].size()))
      pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  return out;
}

SemidirectAction action_from_ranks(const Group& aut, const std::vector<int>& f) {
  SemidirectAction act;
  act.reserve(f.size());
  for (int r : f) act.push_back(aut.element(r));
  return act;
}

}  // namespace

std::vector<SemidirectAction> enumerate_semidirect_actions(const Group& a,
                                                           const Group& b) {
  const Group aut = automorphism_group(a);
  std::vector<SemidirectAction> out;
  for (const std::vector<int>& f : action_rank_vectors(aut, b))
    out.push_back(action_from_ranks(aut, f));
  return out;
}

namespace {

bool is_trivial_ranks(const Group& aut, const std::vector<int>& f) {
  for (int r : f)
    if (r != aut.id_rank()) return false;
  return true;
}

// Conjugating an action pointwise by one automorphism of the acted-on group
// yields an isomorphic product ((x, y) -> (alpha(x), y) is an isomorphism),
// so only the lexicographically least conjugate of each action needs
// materializing.
std::vector<int> conjugation_canonical(const Group& aut,
                                       const std::vector<int>& f) {
  std::vector<int> best = f;
  std::vector<int> c(f.size());
  for (int al = 0; al < aut.order(); ++al) {
    const int ali = aut.inv(al);
    for (size_t y = 0; y < f.size(); ++y)
      c[y] = aut.mul(aut.mul(al, f[y]), ali);
    if (c < best) best = c;
  }
  return best;
}

// For an elementary abelian acting group the kernel always splits off as a
// direct factor, so the product class depends only on the image subgroup of
// the automorphism group: it is (A x| S) x E with S the image acting on A
// naturally and E elementary abelian of the kernel's rank.  Conjugate
// images give isomorphic products, so the canonical key is the image as a
// rank set, minimized over conjugation.
std::vector<int> image_canonical(const Group& aut, const std::vector<int>& f) {
  std::vector<int> img = f;
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  std::vector<int> best = img;
  std::vector<int> c(img.size());
  for (int al = 0; al < aut.order(); ++al) {
    const int ali = aut.inv(al);
    for (size_t s = 0; s < img.size(); ++s)
      c[s] = aut.mul(aut.mul(al, img[s]), ali);
    std::sort(c.begin(), c.end());
    if (c < best) best = c;
  }
  return best;
}

// Product names splice factor names together; wrap a factor that is itself
// a product so the result still parses by eye.
std::string factor_name(const std::string& s) {
  if (s.find_first_of("x:#") == std::string::npos) return s;
  return "(" + s + ")";
}

struct CorpusBuilder {
  int max_order = 1;
  std::vector<CorpusMember> members;
  std::vector<GroupRecipe> recipes;  // parallel to members
  std::vector<std::string> notices;

  // Admits the candidate unless an existing member of the same order is
  // isomorphic to it.  A comparison that blows the isomorphism budget never
  // rejects: the candidate stays, flagged by a notice, which inflates the
  // corpus but keeps every verdict sound.
  bool try_add(std::string name, GroupRecipe r, Group g) {
    std::string budget_note;
    for (const CorpusMember& m : members) {
      if (m.group.order() != g.order()) continue;
      try {
        if (isomorphic(m.group, g)) return false;
      } catch (const BudgetError& e) {
        if (budget_note.empty())
          budget_note = "isomorphism check between " + m.name + " and " + name +
                        " gave up (" + e.what() + "); keeping both";
      }
    }
    if (!budget_note.empty()) notices.push_back(std::move(budget_note));
    members.push_back(CorpusMember{std::move(name), recipe_string(r), std::move(g)});
    recipes.push_back(std::move(r));
    return true;
  }

  void seed(std::string name, GroupRecipe r) {
    if (predicted_order(r) > max_order) return;
    Group g = materialize(r);
    try_add(std::move(name), std::move(r), std::move(g));
  }

  // Seeding order decides which name survives deduplication, so the named
  // families go in before any product is formed.
  void seed_all() {
    for (int n = 1; n <= max_order; ++n)
      seed("C" + std::to_string(n), cyclic_recipe(n));
    if (max_order >= 8) seed("Q8", explicit_recipe("Q8"));
    if (max_order >= 24) seed("SL(2,3)", explicit_recipe("SL(2,3)"));
    for (int n = 2; n <= 5; ++n)
      if (factorial(n) <= max_order) seed("S" + std::to_string(n), symmetric_recipe(n));
    for (int n = 3; n <= 5; ++n)
      if (factorial(n) / 2 <= max_order)
        seed("A" + std::to_string(n), alternating_recipe(n));
    for (int n = 3; 2 * n <= max_order; ++n)
      seed("D" + std::to_string(n), dihedral_recipe(n));
    for (int m = 8; m <= max_order; m += 4) {
      // Two-power orders are the generalized quaternion groups.
      std::string name = is_p_power(m, 2) ? "Q" + std::to_string(m)
                                          : "Dic" + std::to_string(m / 4);
      seed(std::move(name), dicyclic_recipe(m));
    }
    for (int p = 2; p * p <= max_order; ++p) {
      if (!is_prime(p)) continue;
      int o = p * p;
      for (int k = 2; o <= max_order; ++k, o *= p)
        seed("C" + std::to_string(p) + "^" + std::to_string(k),
             elementary_abelian_recipe(p, k));
    }
  }

  // Direct products are commutative and associative up to isomorphism, and
  // abelian factors are pinned down by their cyclic prime-power pieces, so
  // a candidate's class is determined by its multiset of nonabelian leaf
  // recipes plus the multiset of those pieces.  One candidate per key.
  using DirectKey = std::pair<std::vector<std::string>, std::vector<int>>;
  std::set<DirectKey> seen_direct;

  static void direct_key_parts(const GroupRecipe& r, DirectKey& key) {
    switch (r.kind) {
      case RecipeKind::DirectProduct:
        direct_key_parts(r.parts[0], key);
        direct_key_parts(r.parts[1], key);
        return;
      case RecipeKind::Cyclic:
        for (int p : prime_divisors(r.n)) key.second.push_back(p_part(r.n, p));
        return;
      case RecipeKind::ElementaryAbelian:
        for (int t = 0; t < r.k; ++t) key.second.push_back(r.n);
        return;
      default:
        // Every other recipe the builder feeds into products is nonabelian.
        key.first.push_back(recipe_string(r));
        return;
    }
  }

  void add_direct(size_t i, size_t j) {
    GroupRecipe r = direct_product_recipe(recipes[i], recipes[j]);
    DirectKey key;
    direct_key_parts(r, key);
    std::sort(key.first.begin(), key.first.end());
    std::sort(key.second.begin(), key.second.end());
    if (!seen_direct.insert(std::move(key)).second) return;
    std::string name = factor_name(members[i].name) + "x" + factor_name(members[j].name);
    Group g = construct::direct_product(members[i].group, members[j].group);
    try_add(std::move(name), std::move(r), std::move(g));
  }

  // Adding a member reallocates `members`, so nothing here may hold a
  // reference across a try_add call; every factor access re-indexes.
  void add_semidirects(size_t i, size_t j) {
    std::vector<std::vector<int>> homs;
    Group aut(1, {});
    try {
      aut = automorphism_group(members[i].group);
      homs = action_rank_vectors(aut, members[j].group);
    } catch (const BudgetError& e) {
      notices.push_back("semidirect actions skipped for (" + members[i].name +
                        ", " + members[j].name + "): " + e.what());
      return;
    }
    // One representative per provably-isomorphic batch of actions keeps the
    // corpus from drowning in copies the isomorphism budget cannot merge.
    // Precomposing with an automorphism of the acting group preserves the
    // product ((x, y) -> (x, beta^{-1}(y)) is an isomorphism), so canonical
    // forms also range over Aut(B) where that group is within budget; for
    // elementary abelian B the image key subsumes precomposition already.
    const bool by_image = is_elementary_abelian(members[j].group);
    std::vector<Perm> betas;
    if (!by_image) {
      try {
        const Group autb = automorphism_group(members[j].group);
        betas = autb.elements();
      } catch (const BudgetError&) {
        betas = {Perm::identity(members[j].group.order())};
      }
    }
    std::set<std::vector<int>> seen;
    std::vector<int> f2(homs.empty() ? 0 : homs[0].size());
    for (int idx = 0; idx < static_cast<int>(homs.size()); ++idx) {
      const std::vector<int>& f = homs[idx];
      // The trivial action rebuilds the direct product, which the direct
      // pass has already offered.
      if (is_trivial_ranks(aut, f)) continue;
      std::vector<int> key;
      if (by_image) {
        key = image_canonical(aut, f);
      } else {
        for (const Perm& beta : betas) {
          for (size_t y = 0; y < f.size(); ++y) f2[y] = f[beta.images[y]];
          std::vector<int> c = conjugation_canonical(aut, f2);
          if (key.empty() || c < key) key = std::move(c);
        }
      }
      if (!seen.insert(std::move(key)).second) continue;
      std::string name = factor_name(members[i].name) + ":" +
                         factor_name(members[j].name) + "#" + std::to_string(idx);
      Group g = construct::semidirect_product(members[i].group, members[j].group,
                                              action_from_ranks(aut, f));
      try_add(std::move(name), semidirect_recipe(recipes[i], recipes[j], idx),
              std::move(g));
    }
  }

  // Rounds of a settled frontier: a pair is processed in the first round
  // where at least one side is new, so every pair is visited exactly once
  // no matter how many rounds the closure takes.
  void close() {
    size_t settled = 0;
    while (settled < members.size()) {
      const size_t limit = members.size();
      for (size_t i = 0; i < limit; ++i) {
        if (members[i].group.order() < 2) continue;
        for (size_t j = i; j < limit; ++j) {
          if (i < settled && j < settled) continue;
          if (members[j].group.order() < 2) continue;
          long o = static_cast<long>(members[i].group.order()) * members[j].group.order();
          if (o <= max_order) add_direct(i, j);
        }
      }
      for (size_t i = 0; i < limit; ++i) {
        if (members[i].group.order() < 2) continue;
        for (size_t j = 0; j < limit; ++j) {
          if (i < settled && j < settled) continue;
          if (members[j].group.order() < 2) continue;
          long o = static_cast<long>(members[i].group.order()) * members[j].group.order();
          if (o <= max_order) add_semidirects(i, j);
        }
      }
      settled = limit;
    }
  }
};

}  // namespace

Corpus build_corpus(int max_order) {
  require(max_order >= 1 && max_order <= kOrderBudget,
          "build_corpus: max_order must be between 1 and " +
              std::to_string(kOrderBudget));
  CorpusBuilder b;
  b.max_order = max_order;
  b.seed_all();
  b.close();
  std::sort(b.members.begin(), b.members.end(),
            [](const CorpusMember& x, const CorpusMember& y) {
              if (x.group.order() != y.group.order())
                return x.group.order() < y.group.order();
              return x.name < y.name;
            });
  Corpus c;
  c.members = std::move(b.members);
  c.notices = std::move(b.notices);
  return c;
}

namespace {

nlohmann::json group_record(const std::string& name, const Group& g) {
  nlohmann::json rec;
  rec["name"] = name;
  rec["degree"] = g.degree();
  nlohmann::json gens = nlohmann::json::array();
  for (int r : g.generator_ranks()) {
    const Perm& p = g.element(r);
    gens.push_back(std::vector<int>(p.images.begin(), p.images.end()));
  }
  rec["generators"] = std::move(gens);
  return rec;
}

NamedGroup group_from_record(const nlohmann::json& rec) {
  require(rec.is_object(), "group record: expected an object");
  require(rec.contains("name") && rec["name"].is_string(),
          "group record: missing string field 'name'");
  require(rec.contains("degree") && rec["degree"].is_number_integer(),
          "group record: missing integer field 'degree'");
  require(rec.contains("generators") && rec["generators"].is_array(),
          "group record: missing array field 'generators'");
  const int degree = rec["degree"].get<int>();
  require(degree >= 1 && degree <= 4096, "group record: degree out of range");
  std::vector<Perm> gens;
  for (const auto& arr : rec["generators"]) {
    require(arr.is_array() && static_cast<int>(arr.size()) == degree,
            "group record: generator image list must match the degree");
    std::vector<uint16_t> im;
    im.reserve(degree);
    for (const auto& v : arr) {
      require(v.is_number_integer(), "group record: images must be integers");
      const long x = v.get<long>();
      require(x >= 0 && x < degree, "group record: image out of range");
      im.push_back(static_cast<uint16_t>(x));
    }
    gens.push_back(Perm(std::move(im)));  // rejects non-bijections
  }
  return NamedGroup{rec["name"].get<std::string>(), Group(degree, std::move(gens))};
}

}  // namespace

std::string print_group(const std::string& name, const Group& g) {
  return group_record(name, g).dump(2) + "\n";
}

NamedGroup parse_group(const std::string& text) {
  nlohmann::json rec = nlohmann::json::parse(text, nullptr, false);
  if (rec.is_discarded()) throw UsageError("group record: not valid JSON");
  return group_from_record(rec);
}

std::string print_manifest(const Corpus& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CorpusMember& m : c.members) {
    nlohmann::json rec = group_record(m.name, m.group);
    rec["recipe"] = m.provenance;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

Corpus parse_manifest(const std::string& text) {
  nlohmann::json arr = nlohmann::json::parse(text, nullptr, false);
  if (arr.is_discarded()) throw UsageError("manifest: not valid JSON");
  require(arr.is_array(), "manifest: expected a list of group records");
  Corpus c;
  for (const auto& rec : arr) {
    NamedGroup ng = group_from_record(rec);
    std::string recipe;
    if (rec.contains("recipe") && rec["recipe"].is_string())
      recipe = rec["recipe"].get<std::string>();
    c.members.push_back(
        CorpusMember{std::move(ng.name), std::move(recipe), std::move(ng.group)});
  }
  return c;
}

}  // namespace icphi
