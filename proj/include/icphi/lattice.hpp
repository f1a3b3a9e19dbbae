#pragma once

// Full subgroup lattice of a group: every subgroup, the inclusion relation,
// maximal-subgroup lists, Frattini subgroups, conjugacy classes and Sylow
// picks.  Construction is eager; lookups afterwards are table reads.

#include <cstdint>
#include <vector>

#include "icphi/group.hpp"
#include "icphi/mask.hpp"

namespace icphi {

class SubgroupLattice {
 public:
  // The lattice keeps a pointer to g, so g must outlive it; constructing
  // from a temporary is rejected outright.
  explicit SubgroupLattice(const Group& g);
  explicit SubgroupLattice(Group&&) = delete;

  const Group& group() const { return *g_; }
  int size() const { return static_cast<int>(masks_.size()); }

  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  const ElemMask& mask(int i) const { return masks_[i]; }
  int order_of(int i) const { return orders_[i]; }
  bool cyclic(int i) const { return cyclic_[i]; }
  bool normal(int i) const { return normal_[i]; }
  const std::vector<uint16_t>& gens(int i) const { return gens_[i]; }

  Subgroup subgroup(int i) const;

  // Index of an exact mask; throws CheckError when absent (the lattice is
  // complete, so absence means the mask is not a subgroup).
  int index_of(const ElemMask& m) const;

  // Whether subgroup #inner is contained in subgroup #outer.
  bool contains(int inner, int outer) const;

  const std::vector<int>& maximal_subgroups_of(int i) const {
    return maximals_[i];
  }

  // Index of the Frattini subgroup of subgroup #i, computed inside #i.
  int frattini_of(int i) const { return frattini_[i]; }

  // Subgroups reachable from the top by n rounds of "maximal subgroup of".
  // Memoized; n = 0 gives {top}.
  const std::vector<int>& n_maximal(int n) const;

  std::vector<int> normal_indices() const;
  std::vector<int> minimal_normal_indices() const;

  // First lattice entry whose order is the full p-part of |G|; the trivial
  // subgroup when p does not divide |G|.
  int sylow_index(int p) const;

  int conjugacy_class_of(int i) const { return class_of_[i]; }
  const std::vector<std::vector<int>>& conjugacy_classes() const {
    return classes_;
  }

 private:
  bool up_down_count_is_two(int lo, int hi) const;

  const Group* g_;
  std::vector<ElemMask> masks_;
  std::vector<std::vector<uint16_t>> gens_;
  std::vector<int> orders_;
  std::vector<bool> cyclic_;
  std::vector<bool> normal_;
  // Containment matrices as packed bitsets: down_ row i marks all j with
  // mask(j) subset of mask(i); up_ row i marks all j with mask(i) subset of
  // mask(j).
  int row_words_ = 0;
  std::vector<uint64_t> down_;
  std::vector<uint64_t> up_;
  std::vector<std::vector<int>> maximals_;
  std::vector<int> frattini_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  mutable std::vector<std::vector<int>> nmax_levels_;
};

SubgroupLattice all_subgroups(const Group& g);

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& l);
std::vector<Subgroup> n_maximal_subgroups(const SubgroupLattice& l, int n);
Subgroup frattini(const SubgroupLattice& l);
std::vector<Subgroup> normal_subgroups(const SubgroupLattice& l);
std::vector<Subgroup> minimal_normal_subgroups(const SubgroupLattice& l);
Subgroup sylow_subgroup(const SubgroupLattice& l, int p);

// An ascending chain of lattice indices ending at the whole group, each link
// maximal in the next.
struct MaximalChain {
  std::vector<int> links;
};

bool is_maximal_chain(const SubgroupLattice& l, const MaximalChain& c);

// Whether subgroup #inner is normal in subgroup #outer.  Checked on the
// generators of #outer; #inner must be contained in #outer.
bool entry_normal_in(const SubgroupLattice& l, int inner, int outer);

}  // namespace icphi
