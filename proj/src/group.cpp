#include "icphi/group.hpp"

#include <algorithm>
#include <unordered_map>

namespace icphi {

Group::Group(int degree, std::vector<Perm> generators) : degree_(degree) {
  require(degree >= 1 && degree <= kOrderBudget,
          "group degree out of range: " + std::to_string(degree));
  for (const Perm& g : generators)
    require(g.degree() == degree, "generator degree mismatch");

  // Breadth-first closure under right multiplication.  Words in the
  // generators already form a subgroup when everything is finite, so no
  // explicit inverses are needed.
  std::unordered_map<Perm, int, PermHash> seen;
  std::vector<Perm> found;
  found.push_back(Perm::identity(degree));
  seen.emplace(found.back(), 0);
  for (size_t i = 0; i < found.size(); ++i) {
    for (const Perm& g : generators) {
      Perm next = compose(found[i], g);
      if (seen.emplace(next, static_cast<int>(found.size())).second) {
        found.push_back(std::move(next));
        if (found.size() > static_cast<size_t>(kOrderBudget))
          throw BudgetError("group order exceeds " +
                            std::to_string(kOrderBudget));
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Perm& a, const Perm& b) { return a.images < b.images; });
  elements_ = std::move(found);
  order_ = static_cast<int>(elements_.size());

  seen.clear();
  for (int r = 0; r < order_; ++r) seen.emplace(elements_[r], r);

  id_rank_ = seen.at(Perm::identity(degree));

  for (const Perm& g : generators) {
    if (g.is_identity()) continue;
    auto r = static_cast<uint16_t>(seen.at(g));
    if (std::find(gen_ranks_.begin(), gen_ranks_.end(), r) == gen_ranks_.end())
      gen_ranks_.push_back(r);
  }

  mul_.resize(static_cast<size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      mul_[static_cast<size_t>(a) * order_ + b] =
          static_cast<uint16_t>(seen.at(compose(elements_[a], elements_[b])));

  inv_.resize(order_);
  for (int a = 0; a < order_; ++a)
    inv_[a] = static_cast<uint16_t>(seen.at(inverse(elements_[a])));

  elem_order_.resize(order_);
  for (int a = 0; a < order_; ++a) {
    int k = 1;
    int x = a;
    while (x != id_rank_) {
      x = mul(x, a);
      ++k;
    }
    elem_order_[a] = static_cast<uint16_t>(k);
  }
}

int Group::rank_of(const Perm& p) const {
  auto it = std::lower_bound(
      elements_.begin(), elements_.end(), p,
      [](const Perm& a, const Perm& b) { return a.images < b.images; });
  check(it != elements_.end() && *it == p,
        "permutation is not an element of this group");
  return static_cast<int>(it - elements_.begin());
}

int Group::power(int a, int k) const {
  check(k >= 0, "negative exponent");
  int x = id_rank_;
  for (int i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

ElemMask Group::full_mask() const {
  ElemMask m;
  for (int r = 0; r < order_; ++r) m.set(r);
  return m;
}

ElemMask mask_closure(const Group& g, const std::vector<uint16_t>& seeds) {
  ElemMask m;
  std::vector<uint16_t> queue;
  m.set(g.id_rank());
  queue.push_back(static_cast<uint16_t>(g.id_rank()));
  for (uint16_t s : seeds) {
    if (!m.test(s)) {
      m.set(s);
      queue.push_back(s);
    }
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (uint16_t s : seeds) {
      int y = g.mul(queue[i], s);
      if (!m.test(y)) {
        m.set(y);
        queue.push_back(static_cast<uint16_t>(y));
      }
    }
  }
  return m;
}

std::vector<uint16_t> greedy_generators(const Group& g, const ElemMask& mask) {
  std::vector<uint16_t> gens;
  ElemMask cur;
  cur.set(g.id_rank());
  if (cur == mask) return gens;
  for (int r = 0; r < g.order(); ++r) {
    if (!mask.test(r) || cur.test(r)) continue;
    gens.push_back(static_cast<uint16_t>(r));
    cur = mask_closure(g, gens);
    if (cur == mask) return gens;
    check(cur.subset_of(mask), "mask is not closed under multiplication");
  }
  check(false, "mask is not closed under multiplication");
  return gens;
}

Subgroup subgroup_from_mask(const Group& g, const ElemMask& mask) {
  check(mask.subset_of(g.full_mask()), "mask has bits beyond the group");
  check(mask.test(g.id_rank()), "subgroup mask lacks the identity");
  Subgroup h;
  h.parent = &g;
  h.mask = mask;
  h.gens = greedy_generators(g, mask);
  h.order = mask.count();
  check(g.order() % h.order == 0, "subgroup order fails Lagrange");
  return h;
}

Subgroup subgroup_from_gens(const Group& g,
                            const std::vector<uint16_t>& gens) {
  return subgroup_from_mask(g, mask_closure(g, gens));
}

Subgroup trivial_subgroup(const Group& g) {
  return subgroup_from_mask(g, ElemMask::single(g.id_rank()));
}

Subgroup full_subgroup(const Group& g) {
  return subgroup_from_mask(g, g.full_mask());
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& a,
                             const Subgroup& b) {
  ElemMask seen;
  std::vector<uint16_t> seeds;
  a.mask.for_each([&](int x) {
    b.mask.for_each([&](int y) {
      int c = g.comm(x, y);
      if (!seen.test(c)) {
        seen.set(c);
        seeds.push_back(static_cast<uint16_t>(c));
      }
    });
  });
  return subgroup_from_mask(g, mask_closure(g, seeds));
}

ElemMask center_mask(const Group& g) {
  ElemMask m;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (uint16_t gen : g.generator_ranks()) {
      if (g.mul(x, gen) != g.mul(gen, x)) {
        central = false;
        break;
      }
    }
    if (central) m.set(x);
  }
  return m;
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  ElemMask m;
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (uint16_t gen : h.gens) {
      if (g.mul(x, gen) != g.mul(gen, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) m.set(x);
  }
  return subgroup_from_mask(g, m);
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  ElemMask m;
  for (int x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (uint16_t gen : h.gens) {
      if (!h.mask.test(g.conj(gen, x))) {
        fixes = false;
        break;
      }
    }
    if (fixes) m.set(x);
  }
  check(h.mask.subset_of(m), "subgroup not inside its own normalizer");
  return subgroup_from_mask(g, m);
}

namespace {

ElemMask conjugate_mask(const Group& g, const ElemMask& m, int by) {
  ElemMask r;
  m.for_each([&](int x) { r.set(g.conj(x, by)); });
  return r;
}

}  // namespace

Subgroup core(const Group& g, const Subgroup& h) {
  ElemMask k = h.mask;
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint16_t gen : g.generator_ranks()) {
      ElemMask next = k & conjugate_mask(g, k, gen);
      if (!(next == k)) {
        k = next;
        changed = true;
      }
    }
  }
  return subgroup_from_mask(g, k);
}

Subgroup normal_closure_in(const Group& g, const ElemMask& within,
                           const Subgroup& h) {
  check(h.mask.subset_of(within), "normal closure seed outside the ambient");
  std::vector<uint16_t> wgens = greedy_generators(g, within);
  std::vector<uint16_t> seeds = h.gens;
  ElemMask k = mask_closure(g, seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint16_t> fresh;
    k.for_each([&](int x) {
      for (uint16_t w : wgens) {
        int y = g.conj(x, w);
        if (!k.test(y)) fresh.push_back(static_cast<uint16_t>(y));
      }
    });
    if (!fresh.empty()) {
      seeds.insert(seeds.end(), fresh.begin(), fresh.end());
      k = mask_closure(g, seeds);
      grew = true;
    }
  }
  return subgroup_from_mask(g, k);
}

Subgroup normal_closure(const Group& g, const Subgroup& h) {
  return normal_closure_in(g, g.full_mask(), h);
}

bool is_normal_in(const Group& g, const ElemMask& ambient,
                  const ElemMask& h) {
  std::vector<uint16_t> hgens = greedy_generators(g, h);
  std::vector<uint16_t> agens = greedy_generators(g, ambient);
  for (uint16_t a : agens)
    for (uint16_t x : hgens)
      if (!h.test(g.conj(x, a))) return false;
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (uint16_t a : g.generator_ranks())
    for (uint16_t x : h.gens)
      if (!h.mask.test(g.conj(x, a))) return false;
  return true;
}

bool is_subnormal(const Group& g, const Subgroup& h) {
  ElemMask k = g.full_mask();
  while (true) {
    ElemMask next = normal_closure_in(g, k, h).mask;
    if (next == k) break;
    k = next;
  }
  return k == h.mask;
}

Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, int by) {
  return subgroup_from_mask(g, conjugate_mask(g, h.mask, by));
}

Group as_group(const Subgroup& h) {
  const Group& g = *h.parent;
  std::vector<Perm> gens;
  gens.reserve(h.gens.size());
  for (uint16_t r : h.gens) gens.push_back(g.element(r));
  Group result(g.degree(), std::move(gens));
  check(result.order() == h.order, "subgroup rebuild changed the order");
  return result;
}

}  // namespace icphi
