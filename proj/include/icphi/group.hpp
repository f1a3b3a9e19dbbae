#pragma once

// Concrete finite groups.  A Group owns a sorted element list plus dense
// multiplication, inverse and element-order tables, all built eagerly at
// construction.  Everything downstream (subgroups, lattices, verification)
// works with element ranks into that list, so the permutation representation
// only matters here and in perm.cpp.

#include <cstdint>
#include <vector>

#include "icphi/common.hpp"
#include "icphi/mask.hpp"
#include "icphi/perm.hpp"

namespace icphi {

class Group {
 public:
  // Enumerates the closure of `generators` under composition.  Throws
  // BudgetError as soon as the closure is seen to exceed kOrderBudget.
  Group(int degree, std::vector<Perm> generators);

  int order() const { return static_cast<int>(elements_.size()); }
  int degree() const { return degree_; }

  const Perm& element(int rank) const { return elements_[rank]; }
  const std::vector<Perm>& elements() const { return elements_; }

  // Ranks of the construction generators (deduplicated, identity dropped,
  // original order kept).  Empty only for the trivial group.
  const std::vector<uint16_t>& generator_ranks() const { return gen_ranks_; }

  int id_rank() const { return id_rank_; }

  // Rank lookup; throws CheckError if the permutation is not an element.
  int rank_of(const Perm& p) const;

  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int elem_order(int a) const { return elem_order_[a]; }

  int power(int a, int k) const;

  // g^{-1} a g.
  int conj(int a, int g) const { return mul(mul(inv(g), a), g); }

  // a^{-1} b^{-1} a b.
  int comm(int a, int b) const {
    return mul(mul(mul(inv(a), inv(b)), a), b);
  }

  ElemMask full_mask() const;

 private:
  int degree_;
  int order_ = 0;
  int id_rank_ = 0;
  std::vector<Perm> elements_;
  std::vector<uint16_t> gen_ranks_;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> inv_;
  std::vector<uint16_t> elem_order_;
};

// A subgroup is a mask over the parent's element ranks plus a small
// generating set.  Build one through the helpers below, which check closure
// and Lagrange rather than trusting the caller.
struct Subgroup {
  const Group* parent = nullptr;
  ElemMask mask;
  std::vector<uint16_t> gens;
  int order = 0;
};

// Closure of the seed ranks under multiplication (identity always included).
ElemMask mask_closure(const Group& g, const std::vector<uint16_t>& seeds);

// Minimal-ish generating set for a closed mask: ascending-rank greedy scan.
// Deterministic; the trivial subgroup yields an empty set.
std::vector<uint16_t> greedy_generators(const Group& g, const ElemMask& mask);

Subgroup subgroup_from_mask(const Group& g, const ElemMask& mask);
Subgroup subgroup_from_gens(const Group& g, const std::vector<uint16_t>& gens);
Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);

// <{ [a,b] : a in A, b in B }>.
Subgroup commutator_subgroup(const Group& g, const Subgroup& a,
                             const Subgroup& b);

ElemMask center_mask(const Group& g);

// Elements commuting with every generator of h (equivalently with all of h).
Subgroup centralizer(const Group& g, const Subgroup& h);

// Elements whose conjugation maps h onto itself.  Checks h <= result.
Subgroup normalizer(const Group& g, const Subgroup& h);

// Largest subgroup of h normal in g, via the conjugation-stability fixpoint.
Subgroup core(const Group& g, const Subgroup& h);

// Smallest subgroup containing h that `within` normalizes.  With
// within = the full group this is the usual normal closure.
Subgroup normal_closure_in(const Group& g, const ElemMask& within,
                           const Subgroup& h);
Subgroup normal_closure(const Group& g, const Subgroup& h);

bool is_normal_in(const Group& g, const ElemMask& ambient, const ElemMask& h);
bool is_normal(const Group& g, const Subgroup& h);

// Descending normal-closure chain test.
bool is_subnormal(const Group& g, const Subgroup& h);

Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, int by);

// The subgroup as a standalone Group (same permutation degree).
Group as_group(const Subgroup& h);

}  // namespace icphi
