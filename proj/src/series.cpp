#include "icphi/series.hpp"

#include <algorithm>

#include "icphi/classify.hpp"

namespace icphi {

ElemMask QuotientGroup::project_mask(const ElemMask& m) const {
  ElemMask r;
  m.for_each([&](int x) { r.set(projection[x]); });
  return r;
}

ElemMask QuotientGroup::preimage_mask(const ElemMask& m) const {
  ElemMask r;
  for (int x = 0; x < source.order(); ++x)
    if (m.test(projection[x])) r.set(x);
  return r;
}

QuotientGroup quotient(const Group& g, const Subgroup& n) {
  require(n.parent == &g, "kernel belongs to a different group");
  require(is_normal(g, n), "quotient kernel must be normal");

  const int order = g.order();
  const int m = order / n.order;

  // Right cosets Nx, numbered in order of their smallest member.
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int r = 0; r < order; ++r) {
    if (coset_of[r] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(r);
    n.mask.for_each([&](int x) { coset_of[g.mul(x, r)] = c; });
  }
  check(static_cast<int>(reps.size()) == m, "coset count mismatch");

  // Right multiplication permutes the cosets; with N normal this action of
  // G has kernel exactly N, so it realizes G/N faithfully.
  auto action_of = [&](int x) {
    std::vector<uint16_t> im(m);
    for (int c = 0; c < m; ++c)
      im[c] = static_cast<uint16_t>(coset_of[g.mul(reps[c], x)]);
    return Perm(std::move(im));
  };

  std::vector<Perm> gen_perms;
  for (uint16_t t : g.generator_ranks()) gen_perms.push_back(action_of(t));
  Group q(m, std::move(gen_perms));
  check(q.order() == m, "quotient group has the wrong order");

  std::vector<uint16_t> projection(order);
  for (int x = 0; x < order; ++x) {
    int img = q.rank_of(action_of(x));
    projection[x] = static_cast<uint16_t>(img);
    check((img == q.id_rank()) == n.mask.test(x),
          "projection kernel differs from the given subgroup");
  }
  for (uint16_t a : g.generator_ranks())
    for (uint16_t b : g.generator_ranks())
      check(projection[g.mul(a, b)] == q.mul(projection[a], projection[b]),
            "projection is not a homomorphism");

  QuotientGroup out{g, n.mask, std::move(q), std::move(projection)};
  return out;
}

std::vector<int> ChiefSeries::factor_orders() const {
  std::vector<int> v;
  for (size_t i = 0; i + 1 < terms.size(); ++i)
    v.push_back(terms[i + 1].count() / terms[i].count());
  return v;
}

namespace {

// Ascending walk through the normal subgroups: each step takes the first
// normal subgroup in lattice order strictly above the current one.
// Anything normal strictly between would be smaller and so would have been
// found first, hence every step is a chief factor.
std::vector<int> chief_term_indices(const SubgroupLattice& l) {
  std::vector<int> terms{l.bottom()};
  const std::vector<int> normals = l.normal_indices();
  int cur = l.bottom();
  while (cur != l.top()) {
    int next = -1;
    for (int cand : normals) {
      if (cand != cur && l.contains(cur, cand)) {
        next = cand;
        break;
      }
    }
    check(next >= 0, "no normal subgroup above the current term");
    terms.push_back(next);
    cur = next;
  }
  return terms;
}

}  // namespace

std::vector<int> chief_factor_orders(const SubgroupLattice& l) {
  const std::vector<int> terms = chief_term_indices(l);
  std::vector<int> v;
  for (size_t i = 0; i + 1 < terms.size(); ++i)
    v.push_back(l.order_of(terms[i + 1]) / l.order_of(terms[i]));
  return v;
}

ChiefSeries chief_series(const Group& g, const SubgroupLattice& l) {
  ChiefSeries s;
  for (int idx : chief_term_indices(l)) s.terms.push_back(l.mask(idx));
  for (size_t i = 0; i + 1 < s.terms.size(); ++i) {
    Group src = as_group(subgroup_from_mask(g, s.terms[i + 1]));
    ElemMask k;
    s.terms[i].for_each([&](int r) { k.set(src.rank_of(g.element(r))); });
    s.factors.push_back(quotient(src, subgroup_from_mask(src, k)));
  }
  return s;
}

ChiefSeries chief_series(const Group& g) {
  SubgroupLattice l(g);
  return chief_series(g, l);
}

Subgroup hypercenter(const Group& g) {
  // Ascending central series without building quotients: once z is normal,
  // x lies in the next term exactly when [x, t] lands in z for every
  // generator t.
  ElemMask z;
  z.set(g.id_rank());
  while (true) {
    ElemMask next;
    for (int x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (uint16_t t : g.generator_ranks()) {
        if (!z.test(g.comm(x, t))) {
          ok = false;
          break;
        }
      }
      if (ok) next.set(x);
    }
    if (next == z) break;
    z = next;
  }
  return subgroup_from_mask(g, z);
}

Subgroup fitting(const Group& g, const SubgroupLattice& l) {
  std::vector<uint16_t> gens;
  for (int p : prime_divisors(g.order())) {
    Subgroup op = core(g, l.subgroup(l.sylow_index(p)));
    gens.insert(gens.end(), op.gens.begin(), op.gens.end());
  }
  Subgroup f = subgroup_from_mask(g, mask_closure(g, gens));
  int fi = l.index_of(f.mask);
  check(l.normal(fi), "Fitting subgroup came out non-normal");
  check(is_nilpotent_entry(l, fi), "Fitting subgroup came out non-nilpotent");
  return f;
}

std::vector<Subgroup> components(const Group& g, const SubgroupLattice& l) {
  std::vector<Subgroup> out;
  for (int i = 0; i < l.size(); ++i) {
    // No nontrivial perfect group is smaller than the order-60 alternating
    // group, so anything below that cannot be quasisimple.
    if (l.order_of(i) < 60) continue;
    Subgroup h = l.subgroup(i);
    if (!(commutator_subgroup(g, h, h).mask == h.mask)) continue;
    if (!is_subnormal(g, h)) continue;
    ElemMask zm;
    h.mask.for_each([&](int x) {
      bool central = true;
      for (uint16_t t : h.gens) {
        if (g.mul(x, t) != g.mul(t, x)) {
          central = false;
          break;
        }
      }
      if (central) zm.set(x);
    });
    Group hs = as_group(h);
    ElemMask zs;
    zm.for_each([&](int r) { zs.set(hs.rank_of(g.element(r))); });
    QuotientGroup central_quot = quotient(hs, subgroup_from_mask(hs, zs));
    if (is_simple(central_quot.group)) out.push_back(h);
  }
  return out;
}

Subgroup generalized_fitting(const Group& g, const SubgroupLattice& l) {
  Subgroup f = fitting(g, l);
  std::vector<uint16_t> gens = f.gens;
  for (const Subgroup& c : components(g, l))
    gens.insert(gens.end(), c.gens.begin(), c.gens.end());
  Subgroup fstar = subgroup_from_mask(g, mask_closure(g, gens));
  check(f.mask.subset_of(fstar.mask), "F(G) must lie inside F*(G)");
  check(l.normal(l.index_of(fstar.mask)), "F*(G) came out non-normal");
  return fstar;
}

namespace {

// Walks the deterministic G-chief series from the bottom up to the normal
// subgroup at `target`; true when every factor along the way has prime
// order.  The factor multiset is series-independent, so one walk decides.
bool chief_factors_below_are_prime(const SubgroupLattice& l, int target,
                                   const std::vector<int>& normals) {
  int cur = l.bottom();
  while (cur != target) {
    int next = -1;
    for (int cand : normals) {
      if (cand == cur || !l.contains(cand, target)) continue;
      if (!l.contains(cur, cand)) continue;
      next = cand;
      break;
    }
    check(next >= 0, "no normal step toward the target");
    if (!is_prime(l.order_of(next) / l.order_of(cur))) return false;
    cur = next;
  }
  return true;
}

}  // namespace

Subgroup u_hypercenter(const Group& g, const SubgroupLattice& l) {
  const std::vector<int> normals = l.normal_indices();
  std::vector<uint16_t> gens;
  for (int n : normals) {
    if (chief_factors_below_are_prime(l, n, normals)) {
      const auto& ng = l.gens(n);
      gens.insert(gens.end(), ng.begin(), ng.end());
    }
  }
  Subgroup z = subgroup_from_mask(g, mask_closure(g, gens));
  int zi = l.index_of(z.mask);
  check(l.normal(zi), "join of normal subgroups came out non-normal");
  check(chief_factors_below_are_prime(l, zi, normals),
        "join lost the prime-factor property");
  return z;
}

Subgroup o_p_prime(const Group& g, const SubgroupLattice& l, int p) {
  require(is_prime(p), "p must be prime: " + std::to_string(p));
  std::vector<uint16_t> gens;
  for (int n : l.normal_indices()) {
    if (l.order_of(n) % p != 0) {
      const auto& ng = l.gens(n);
      gens.insert(gens.end(), ng.begin(), ng.end());
    }
  }
  Subgroup r = subgroup_from_mask(g, mask_closure(g, gens));
  check(r.order % p != 0, "join of normal p'-subgroups is not a p'-group");
  check(l.normal(l.index_of(r.mask)), "largest normal p'-subgroup not normal");
  return r;
}

}  // namespace icphi
