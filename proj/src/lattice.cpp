#include "icphi/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace icphi {

namespace {

ElemMask conjugate_mask(const Group& g, const ElemMask& m, int by) {
  ElemMask r;
  m.for_each([&](int x) { r.set(g.conj(x, by)); });
  return r;
}

}  // namespace

SubgroupLattice::SubgroupLattice(const Group& g) : g_(&g) {
  const int n = g.order();

  // Discovery.  Cyclic subgroups seed the search; joining existing finds
  // with cyclic seeds until nothing new appears reaches every subgroup,
  // since any subgroup is an iterated join of the cyclic subgroups of its
  // own elements.
  struct Found {
    ElemMask mask;
    std::vector<uint16_t> seed_gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElemMask, int, MaskHash> where;
  auto discover = [&](const ElemMask& m, std::vector<uint16_t> gens) {
    if (where.emplace(m, static_cast<int>(found.size())).second)
      found.push_back({m, std::move(gens)});
  };

  discover(ElemMask::single(g.id_rank()), {});

  struct CyclicSeed {
    uint16_t gen;
    ElemMask mask;
  };
  std::vector<CyclicSeed> seeds;
  for (int x = 0; x < n; ++x) {
    if (x == g.id_rank()) continue;
    ElemMask m;
    m.set(g.id_rank());
    for (int y = x; y != g.id_rank(); y = g.mul(y, x)) m.set(y);
    if (!where.count(m)) seeds.push_back({static_cast<uint16_t>(x), m});
    discover(m, {static_cast<uint16_t>(x)});
  }

  for (size_t i = 0; i < found.size(); ++i) {
    for (const CyclicSeed& s : seeds) {
      if (s.mask.subset_of(found[i].mask)) continue;
      std::vector<uint16_t> join_gens = found[i].seed_gens;
      join_gens.push_back(s.gen);
      ElemMask joined = mask_closure(g, join_gens);
      discover(joined, std::move(join_gens));
    }
  }

  // Canonical order: by order, then by mask.
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    int ca = a.mask.count(), cb = b.mask.count();
    if (ca != cb) return ca < cb;
    return a.mask < b.mask;
  });

  const int sz = static_cast<int>(found.size());
  masks_.reserve(sz);
  gens_.reserve(sz);
  orders_.reserve(sz);
  cyclic_.reserve(sz);
  for (const Found& f : found) {
    masks_.push_back(f.mask);
    gens_.push_back(greedy_generators(g, f.mask));
    int ord = f.mask.count();
    orders_.push_back(ord);
    check(n % ord == 0, "lattice entry fails Lagrange");
    bool cyc = false;
    f.mask.for_each([&](int x) { cyc = cyc || g.elem_order(x) == ord; });
    cyclic_.push_back(cyc);
  }

  // Containment, both directions, as packed index bitsets.
  row_words_ = (sz + 63) / 64;
  down_.assign(static_cast<size_t>(sz) * row_words_, 0);
  up_.assign(static_cast<size_t>(sz) * row_words_, 0);
  for (int i = 0; i < sz; ++i) {
    for (int j = 0; j < sz; ++j) {
      if (orders_[i] % orders_[j] != 0) continue;
      if (!masks_[j].subset_of(masks_[i])) continue;
      down_[static_cast<size_t>(i) * row_words_ + (j >> 6)] |=
          uint64_t(1) << (j & 63);
      up_[static_cast<size_t>(j) * row_words_ + (i >> 6)] |= uint64_t(1)
                                                             << (i & 63);
    }
  }

  // j is maximal in i exactly when the interval [j, i] is just {j, i}.
  maximals_.resize(sz);
  for (int i = 0; i < sz; ++i) {
    for (int j = 0; j < sz; ++j) {
      if (j == i || !contains(j, i)) continue;
      if (up_down_count_is_two(j, i)) maximals_[i].push_back(j);
    }
  }

  frattini_.resize(sz);
  for (int i = 0; i < sz; ++i) {
    if (maximals_[i].empty()) {
      // Only the trivial subgroup has no maximal subgroup.
      check(orders_[i] == 1, "nontrivial subgroup without maximal subgroups");
      frattini_[i] = i;
      continue;
    }
    ElemMask m = masks_[i];
    for (int j : maximals_[i]) m &= masks_[j];
    frattini_[i] = index_of(m);
  }

  // Conjugation orbits; a one-element orbit is a normal subgroup.
  class_of_.assign(sz, -1);
  normal_.assign(sz, false);
  for (int i = 0; i < sz; ++i) {
    if (class_of_[i] >= 0) continue;
    int id = static_cast<int>(classes_.size());
    std::vector<int> orbit{i};
    class_of_[i] = id;
    for (size_t k = 0; k < orbit.size(); ++k) {
      for (uint16_t gen : g.generator_ranks()) {
        int j = index_of(conjugate_mask(g, masks_[orbit[k]], gen));
        if (class_of_[j] < 0) {
          class_of_[j] = id;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes_.push_back(std::move(orbit));
  }
  for (int i = 0; i < sz; ++i)
    normal_[i] = classes_[class_of_[i]].size() == 1;
}

bool SubgroupLattice::up_down_count_is_two(int lo, int hi) const {
  const uint64_t* u = &up_[static_cast<size_t>(lo) * row_words_];
  const uint64_t* d = &down_[static_cast<size_t>(hi) * row_words_];
  int c = 0;
  for (int k = 0; k < row_words_; ++k) {
    c += std::popcount(u[k] & d[k]);
    if (c > 2) return false;
  }
  return c == 2;
}

Subgroup SubgroupLattice::subgroup(int i) const {
  Subgroup h;
  h.parent = g_;
  h.mask = masks_[i];
  h.gens = gens_[i];
  h.order = orders_[i];
  return h;
}

int SubgroupLattice::index_of(const ElemMask& m) const {
  auto cmp = [](const ElemMask& a, const ElemMask& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  };
  auto it = std::lower_bound(masks_.begin(), masks_.end(), m, cmp);
  check(it != masks_.end() && *it == m, "mask is not a subgroup of this group");
  return static_cast<int>(it - masks_.begin());
}

bool SubgroupLattice::contains(int inner, int outer) const {
  return (down_[static_cast<size_t>(outer) * row_words_ + (inner >> 6)] >>
          (inner & 63)) &
         1;
}

const std::vector<int>& SubgroupLattice::n_maximal(int n) const {
  check(n >= 0, "negative chain length");
  if (nmax_levels_.empty()) nmax_levels_.push_back({top()});
  while (static_cast<int>(nmax_levels_.size()) <= n) {
    std::vector<bool> seen(size(), false);
    std::vector<int> next;
    for (int m : nmax_levels_.back())
      for (int j : maximals_[m])
        if (!seen[j]) {
          seen[j] = true;
          next.push_back(j);
        }
    std::sort(next.begin(), next.end());
    nmax_levels_.push_back(std::move(next));
  }
  return nmax_levels_[n];
}

std::vector<int> SubgroupLattice::normal_indices() const {
  std::vector<int> r;
  for (int i = 0; i < size(); ++i)
    if (normal_[i]) r.push_back(i);
  return r;
}

std::vector<int> SubgroupLattice::minimal_normal_indices() const {
  std::vector<int> norm = normal_indices();
  std::vector<int> r;
  for (int i : norm) {
    if (i == bottom()) continue;
    bool minimal = true;
    for (int j : norm) {
      if (j == bottom() || j == i) continue;
      if (contains(j, i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) r.push_back(i);
  }
  return r;
}

int SubgroupLattice::sylow_index(int p) const {
  require(is_prime(p), "sylow prime must be prime: " + std::to_string(p));
  int pp = p_part(g_->order(), p);
  for (int i = 0; i < size(); ++i)
    if (orders_[i] == pp) return i;
  check(false, "no subgroup of the full p-part order");
  return -1;
}

SubgroupLattice all_subgroups(const Group& g) { return SubgroupLattice(g); }

namespace {

std::vector<Subgroup> pick(const SubgroupLattice& l,
                           const std::vector<int>& idx) {
  std::vector<Subgroup> r;
  r.reserve(idx.size());
  for (int i : idx) r.push_back(l.subgroup(i));
  return r;
}

}  // namespace

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& l) {
  return pick(l, l.maximal_subgroups_of(l.top()));
}

std::vector<Subgroup> n_maximal_subgroups(const SubgroupLattice& l, int n) {
  require(n >= 1, "chain length must be at least 1");
  return pick(l, l.n_maximal(n));
}

Subgroup frattini(const SubgroupLattice& l) {
  return l.subgroup(l.frattini_of(l.top()));
}

std::vector<Subgroup> normal_subgroups(const SubgroupLattice& l) {
  return pick(l, l.normal_indices());
}

std::vector<Subgroup> minimal_normal_subgroups(const SubgroupLattice& l) {
  return pick(l, l.minimal_normal_indices());
}

Subgroup sylow_subgroup(const SubgroupLattice& l, int p) {
  return l.subgroup(l.sylow_index(p));
}

bool is_maximal_chain(const SubgroupLattice& l, const MaximalChain& c) {
  if (c.links.empty() || c.links.back() != l.top()) return false;
  for (size_t k = 0; k + 1 < c.links.size(); ++k) {
    const std::vector<int>& m = l.maximal_subgroups_of(c.links[k + 1]);
    if (std::find(m.begin(), m.end(), c.links[k]) == m.end()) return false;
  }
  return true;
}

bool entry_normal_in(const SubgroupLattice& l, int inner, int outer) {
  require(l.contains(inner, outer), "entry_normal_in: inner not inside outer");
  const Group& g = l.group();
  const ElemMask& m = l.mask(inner);
  // Conjugating the generators of inner by the generators of outer into the
  // subgroup suffices: conjugation by a fixed element is an automorphism of
  // the ambient group, so it maps inner onto a subgroup of equal order.
  for (uint16_t a : l.gens(outer))
    for (uint16_t x : l.gens(inner))
      if (!m.test(g.conj(x, a))) return false;
  return true;
}

}  // namespace icphi
