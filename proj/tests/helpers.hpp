#pragma once

// Builders for the small groups the tests reason about, plus brute-force
// oracles that recompute structures by definition so the fast paths have
// something independent to agree with.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "icphi/group.hpp"
#include "icphi/mask.hpp"
#include "icphi/perm.hpp"

namespace testutil {

using icphi::ElemMask;
using icphi::Group;
using icphi::Perm;

inline Perm P(std::vector<uint16_t> images) { return Perm(std::move(images)); }

inline Group cyclic_group(int n) {
  std::vector<uint16_t> im(n);
  for (int i = 0; i < n; ++i) im[i] = static_cast<uint16_t>((i + 1) % n);
  return Group(n, {Perm(im)});
}

inline Group symmetric_group(int n) {
  std::vector<uint16_t> cyc(n), swap(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = static_cast<uint16_t>((i + 1) % n);
    swap[i] = static_cast<uint16_t>(i);
  }
  swap[0] = 1;
  swap[1] = 0;
  return Group(n, {Perm(swap), Perm(cyc)});
}

inline Group alternating_group(int n) {
  // 3-cycle (0 1 2) plus an n-cycle (n odd) or (n-1)-cycle on 1..n-1 (n even).
  std::vector<uint16_t> three(n), big(n);
  for (int i = 0; i < n; ++i) three[i] = big[i] = static_cast<uint16_t>(i);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = static_cast<uint16_t>((i + 1) % n);
  } else {
    for (int i = 1; i < n; ++i) big[i] = static_cast<uint16_t>(i % (n - 1) + 1);
  }
  return Group(n, {Perm(three), Perm(big)});
}

// Dihedral group acting on the n vertices of a polygon; order 2n.
inline Group dihedral_group(int n) {
  std::vector<uint16_t> rot(n), flip(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = static_cast<uint16_t>((i + 1) % n);
    flip[i] = static_cast<uint16_t>((n - i) % n);
  }
  return Group(n, {Perm(rot), Perm(flip)});
}

inline Group klein_four() { return Group(4, {P({1, 0, 2, 3}), P({0, 1, 3, 2})}); }

// Quaternion group by right multiplication on {1,-1,i,-i,j,-j,k,-k}.
inline Group quaternion_group() {
  return Group(8, {P({2, 3, 1, 0, 7, 6, 4, 5}), P({4, 5, 6, 7, 1, 0, 3, 2})});
}

// SL(2,3) acting on the 8 nonzero vectors of F_3^2 (lex order: (0,1), (0,2),
// (1,0), (1,1), (1,2), (2,0), (2,1), (2,2)), generated by the transvections
// [[1,1],[0,1]] and [[1,0],[1,1]].
inline Group sl_2_3() {
  return Group(8, {P({0, 1, 3, 4, 2, 7, 5, 6}), P({3, 7, 2, 6, 1, 5, 0, 4})});
}

// Isomorphic copy of g obtained by renaming the points with sigma.
inline Group relabel(const Group& g, const Perm& sigma) {
  std::vector<Perm> gens;
  for (uint16_t r : g.generator_ranks())
    gens.push_back(compose(compose(inverse(sigma), g.element(r)), sigma));
  return Group(g.degree(), gens);
}

inline int euler_phi(int n) {
  int c = 0;
  for (int k = 1; k <= n; ++k) {
    int a = n, b = k;
    while (b) {
      int t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++c;
  }
  return c;
}

inline std::vector<int> sorted_element_orders(const Group& g) {
  std::vector<int> v;
  for (int r = 0; r < g.order(); ++r) v.push_back(g.elem_order(r));
  std::sort(v.begin(), v.end());
  return v;
}

// Every subgroup, by definition: each divisor-sized subset of the elements
// that contains the identity and is closed under the product.  Exponential,
// so callers stay at order <= 16 or so.
inline std::vector<ElemMask> exhaustive_subgroups(const Group& g) {
  const int n = g.order();
  icphi::check(n <= 20, "exhaustive subgroup oracle needs a tiny group");
  std::vector<ElemMask> out;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    if (!(s >> g.id_rank() & 1)) continue;
    if (n % std::popcount(s) != 0) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = 0; b < n; ++b) {
        if (!(s >> b & 1)) continue;
        if (!(s >> g.mul(a, b) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    ElemMask m;
    for (int r = 0; r < n; ++r)
      if (s >> r & 1) m.set(r);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const ElemMask& a, const ElemMask& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

// Maximality read off the oracle list directly: a < b with nothing between.
inline bool oracle_maximal_in(const std::vector<ElemMask>& subs,
                              const ElemMask& a, const ElemMask& b) {
  if (a == b || !a.subset_of(b)) return false;
  for (const ElemMask& c : subs) {
    if (c == a || c == b) continue;
    if (a.subset_of(c) && c.subset_of(b)) return false;
  }
  return true;
}

// Level sets of maximal chains descending from the whole group, computed
// from the oracle subgroup list alone.
inline std::vector<std::vector<ElemMask>> oracle_nmax_levels(
    const Group& g, const std::vector<ElemMask>& subs, int depth) {
  std::vector<std::vector<ElemMask>> levels;
  levels.push_back({g.full_mask()});
  for (int d = 0; d < depth; ++d) {
    std::vector<ElemMask> next;
    for (const ElemMask& b : levels.back())
      for (const ElemMask& a : subs)
        if (oracle_maximal_in(subs, a, b) &&
            std::find(next.begin(), next.end(), a) == next.end())
          next.push_back(a);
    std::sort(next.begin(), next.end(),
              [](const ElemMask& x, const ElemMask& y) {
                int cx = x.count(), cy = y.count();
                if (cx != cy) return cx < cy;
                return x < y;
              });
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace testutil
