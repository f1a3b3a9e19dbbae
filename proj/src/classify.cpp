#include "icphi/classify.hpp"

#include <algorithm>
#include <functional>

#include "icphi/series.hpp"

namespace icphi {

GroupFingerprint fingerprint(const Group& g, const SubgroupLattice& l) {
  GroupFingerprint f;
  f.order = g.order();
  for (int r = 0; r < g.order(); ++r)
    f.element_orders.push_back(g.elem_order(r));
  std::sort(f.element_orders.begin(), f.element_orders.end());

  f.center_order = center_mask(g).count();
  Subgroup whole = full_subgroup(g);
  Subgroup derived = commutator_subgroup(g, whole, whole);
  f.derived_order = derived.order;

  for (int r = 0; r < g.order(); ++r) {
    int k = 1, x = r;
    while (!derived.mask.test(x)) {
      x = g.mul(x, r);
      ++k;
    }
    f.abelianization_orders.push_back(k);
  }
  std::sort(f.abelianization_orders.begin(), f.abelianization_orders.end());

  for (int i = 0; i < l.size(); ++i) {
    if (!f.subgroup_counts.empty() &&
        f.subgroup_counts.back().first == l.order_of(i))
      ++f.subgroup_counts.back().second;
    else
      f.subgroup_counts.push_back({l.order_of(i), 1});
  }
  return f;
}

bool fingerprints_match(const GroupFingerprint& a, const GroupFingerprint& b) {
  return a.order == b.order && a.element_orders == b.element_orders &&
         a.center_order == b.center_order &&
         a.derived_order == b.derived_order &&
         a.abelianization_orders == b.abelianization_orders &&
         a.subgroup_counts == b.subgroup_counts;
}

bool is_abelian(const Group& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_cyclic(const Group& g) {
  for (int r = 0; r < g.order(); ++r)
    if (g.elem_order(r) == g.order()) return true;
  return false;
}

bool is_elementary_abelian(const Group& g) {
  if (!is_abelian(g)) return false;
  int shared = 0;
  for (int r = 0; r < g.order(); ++r) {
    if (r == g.id_rank()) continue;
    int o = g.elem_order(r);
    if (shared == 0) shared = o;
    if (o != shared) return false;
  }
  return shared == 0 || is_prime(shared);
}

bool is_nilpotent(const Group& g, const SubgroupLattice& l) {
  for (int p : prime_divisors(g.order()))
    if (!l.normal(l.sylow_index(p))) return false;
  return true;
}

bool is_solvable(const Group& g) {
  Subgroup cur = full_subgroup(g);
  while (true) {
    Subgroup next = commutator_subgroup(g, cur, cur);
    if (next.order == 1) return true;
    if (next.mask == cur.mask) return false;
    cur = next;
  }
}

bool is_supersolvable(const Group& g, const SubgroupLattice& l) {
  (void)g;
  for (int d : chief_factor_orders(l))
    if (!is_prime(d)) return false;
  return true;
}

bool is_p_nilpotent(const Group& g, const SubgroupLattice& l, int p) {
  require(is_prime(p), "p must be prime: " + std::to_string(p));
  return o_p_prime(g, l, p).order == g.order() / p_part(g.order(), p);
}

bool is_2_closed(const Group& g, const SubgroupLattice& l) {
  (void)g;
  return l.normal(l.sylow_index(2));
}

namespace {

int involution_count(const Group& g) {
  int c = 0;
  for (int r = 0; r < g.order(); ++r)
    if (g.elem_order(r) == 2) ++c;
  return c;
}

}  // namespace

bool is_q8(const Group& g) {
  return g.order() == 8 && !is_abelian(g) && involution_count(g) == 1;
}

bool is_generalized_quaternion(const Group& g) {
  return g.order() >= 8 && is_p_power(g.order(), 2) &&
         involution_count(g) == 1 && !is_cyclic(g);
}

// Coset-order census of an order-8 section H/N without building the
// quotient: exactly one involution coset and six order-4 cosets pins down
// the quaternion group among the five groups of order 8.
bool section_is_q8(const Group& g, const ElemMask& h, const ElemMask& n) {
  int ones = 0, twos = 0, fours = 0;
  ElemMask covered;
  h.for_each([&](int x) {
    if (covered.test(x)) return;
    n.for_each([&](int y) { covered.set(g.mul(y, x)); });
    int k = 1, z = x;
    while (!n.test(z)) {
      z = g.mul(z, x);
      ++k;
    }
    if (k == 1)
      ++ones;
    else if (k == 2)
      ++twos;
    else if (k == 4)
      ++fours;
  });
  return ones == 1 && twos == 1 && fours == 6;
}

bool is_q8_free(const Group& g, const SubgroupLattice& l) {
  (void)g;
  return is_q8_free_entry(l, l.top());
}

bool is_q8_free_entry(const SubgroupLattice& l, int i) {
  const Group& g = l.group();
  for (int hi = 0; hi < l.size(); ++hi) {
    if (!l.contains(hi, i)) continue;
    if (l.order_of(hi) % 8 != 0) continue;
    const int want = l.order_of(hi) / 8;
    for (int ni = 0; ni < l.size(); ++ni) {
      if (l.order_of(ni) != want || !l.contains(ni, hi)) continue;
      if (!entry_normal_in(l, ni, hi)) continue;
      if (section_is_q8(g, l.mask(hi), l.mask(ni))) return false;
    }
  }
  return true;
}

bool is_minimal_non_nilpotent(const Group& g, const SubgroupLattice& l) {
  if (is_nilpotent(g, l)) return false;
  bool maximals_nilpotent = true;
  for (int i : l.maximal_subgroups_of(l.top()))
    if (!is_nilpotent_entry(l, i)) {
      maximals_nilpotent = false;
      break;
    }
  // Every proper subgroup sits inside a maximal one and subgroups of
  // nilpotent groups are nilpotent, so the maximal scan settles the
  // question.  Cross-check that while the lattice is small enough.
  bool all_nilpotent = true;
  for (int i = 0; all_nilpotent && i < l.size() - 1; ++i)
    all_nilpotent = is_nilpotent_entry(l, i);
  check(maximals_nilpotent == all_nilpotent,
        "maximal-subgroup nilpotence scan disagrees with the full scan");
  return maximals_nilpotent;
}

bool is_simple(const Group& g) {
  if (g.order() == 1) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.id_rank()) continue;
    Subgroup h = subgroup_from_gens(g, {static_cast<uint16_t>(x)});
    if (normal_closure(g, h).order != g.order()) return false;
  }
  return true;
}

bool is_abelian_entry(const SubgroupLattice& l, int i) {
  const Group& g = l.group();
  const auto& gens = l.gens(i);
  for (size_t s = 0; s < gens.size(); ++s)
    for (size_t t = s + 1; t < gens.size(); ++t)
      if (g.mul(gens[s], gens[t]) != g.mul(gens[t], gens[s])) return false;
  return true;
}

bool is_nilpotent_entry(const SubgroupLattice& l, int i) {
  if (is_abelian_entry(l, i)) return true;
  // Nilpotent means one Sylow subgroup per prime; all of the entry's Sylow
  // subgroups are lattice members contained in it.
  for (int p : prime_divisors(l.order_of(i))) {
    int d = p_part(l.order_of(i), p);
    int found = 0;
    for (int j = 0; j < l.size() && found < 2; ++j)
      if (l.order_of(j) == d && l.contains(j, i)) ++found;
    if (found != 1) return false;
  }
  return true;
}

namespace {

// Backtracking over images of a fixed generating tuple.  A partial
// assignment is kept as a bijection between the subgroups generated so far,
// extended product by product; any inconsistency prunes the branch.
struct IsoSearch {
  const Group& a;
  const Group& b;
  std::vector<uint16_t> gens;
  std::vector<uint16_t> images;
  std::vector<int16_t> fwd, rev;
  std::vector<uint16_t> mapped;
  long nodes = 0;

  IsoSearch(const Group& a_, const Group& b_) : a(a_), b(b_) {
    gens = greedy_generators(a, a.full_mask());
    if (static_cast<int>(gens.size()) > kIsoTupleCap)
      throw BudgetError("isomorphism search: generating tuple exceeds cap");
    images.resize(gens.size());
    fwd.assign(a.order(), -1);
    rev.assign(b.order(), -1);
    fwd[a.id_rank()] = static_cast<int16_t>(b.id_rank());
    rev[b.id_rank()] = static_cast<int16_t>(a.id_rank());
    mapped.push_back(static_cast<uint16_t>(a.id_rank()));
  }

  bool assign(int t, int h) {
    images[t] = static_cast<uint16_t>(h);
    const int gsrc = gens[t];
    check(fwd[gsrc] == -1, "generator already mapped");
    const size_t old = mapped.size();
    fwd[gsrc] = static_cast<int16_t>(h);
    rev[h] = static_cast<int16_t>(gsrc);
    mapped.push_back(static_cast<uint16_t>(gsrc));
    for (size_t qi = 0; qi < mapped.size(); ++qi) {
      const int x = mapped[qi];
      const int fx = fwd[x];
      // Elements mapped before this assignment have already been closed
      // under the earlier generators.
      for (int s = (qi < old) ? t : 0; s <= t; ++s) {
        if (++nodes > kIsoNodeBudget)
          throw BudgetError("isomorphism search exceeded its node budget");
        const int y = a.mul(x, gens[s]);
        const int fy = b.mul(fx, images[s]);
        if (fwd[y] == -1 && rev[fy] == -1) {
          fwd[y] = static_cast<int16_t>(fy);
          rev[fy] = static_cast<int16_t>(y);
          mapped.push_back(static_cast<uint16_t>(y));
        } else if (fwd[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  void rollback(size_t watermark) {
    while (mapped.size() > watermark) {
      const int x = mapped.back();
      mapped.pop_back();
      rev[fwd[x]] = -1;
      fwd[x] = -1;
    }
  }

  // Calls cb for every complete assignment; cb returns false to stop.
  // Returns false when the search was stopped early.
  bool run(int t, const std::function<bool(const std::vector<int16_t>&)>& cb) {
    if (t == static_cast<int>(gens.size())) {
      check(static_cast<int>(mapped.size()) == a.order(),
            "complete assignment must cover the whole group");
      return cb(fwd);
    }
    const int want = a.elem_order(gens[t]);
    for (int h = 0; h < b.order(); ++h) {
      if (b.elem_order(h) != want || rev[h] != -1) continue;
      const size_t watermark = mapped.size();
      if (assign(t, h)) {
        if (!run(t + 1, cb)) {
          rollback(watermark);
          return false;
        }
      }
      rollback(watermark);
    }
    return true;
  }
};

}  // namespace

bool isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;

  std::vector<int> ao, bo;
  for (int r = 0; r < a.order(); ++r) ao.push_back(a.elem_order(r));
  for (int r = 0; r < b.order(); ++r) bo.push_back(b.elem_order(r));
  std::sort(ao.begin(), ao.end());
  std::sort(bo.begin(), bo.end());
  if (ao != bo) return false;

  const bool aab = is_abelian(a);
  if (aab != is_abelian(b)) return false;
  // A finite abelian group is pinned down by its element-order census: the
  // census determines, prime by prime, the partition behind the primary
  // decomposition.
  if (aab) return true;

  if (center_mask(a).count() != center_mask(b).count()) return false;
  Subgroup wa = full_subgroup(a), wb = full_subgroup(b);
  if (commutator_subgroup(a, wa, wa).order !=
      commutator_subgroup(b, wb, wb).order)
    return false;

  IsoSearch search(a, b);
  std::vector<int16_t> found;
  search.run(0, [&](const std::vector<int16_t>& f) {
    found = f;
    return false;
  });
  if (found.empty()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      check(found[a.mul(x, y)] == b.mul(found[x], found[y]),
            "isomorphism search returned a non-homomorphism");
  return true;
}

Group automorphism_group(const Group& g) {
  if (g.order() > kAutOrderBudget)
    throw BudgetError("automorphism_group: input order above " +
                      std::to_string(kAutOrderBudget));
  IsoSearch search(g, g);
  std::vector<Perm> perms;
  search.run(0, [&](const std::vector<int16_t>& f) {
    std::vector<uint16_t> im(f.begin(), f.end());
    perms.push_back(Perm(std::move(im)));
    if (static_cast<int>(perms.size()) > kOrderBudget)
      throw BudgetError("automorphism group larger than the order budget");
    return true;
  });
  const int found = static_cast<int>(perms.size());
  Group aut(g.order(), std::move(perms));
  check(aut.order() == found, "automorphisms do not close under composition");
  return aut;
}

}  // namespace icphi
