#pragma once

// Per-group verification context.  Bundles the subgroup lattice with every
// quantity the statement checkers share, so one group is analyzed once no
// matter how many statements run against it.  The ICPhi flags are filled in
// eagerly; everything else on first use.

#include <optional>
#include <vector>

#include "icphi/group.hpp"
#include "icphi/lattice.hpp"
#include "icphi/mask.hpp"

namespace icphi {

class Analysis {
 public:
  // Keeps a pointer to g for its lifetime, like the lattice does.
  explicit Analysis(const Group& g);
  explicit Analysis(Group&&) = delete;

  const Group& group() const { return *g_; }
  const SubgroupLattice& lattice() const { return l_; }

  // Whether lattice entry #i meets the intersection condition
  // H n [H,G] <= Phi(H).
  bool icphi(int i) const { return icphi_[i] != 0; }

  bool nilpotent() const;
  bool solvable() const;
  bool supersolvable() const;

  bool q8_free() const { return entry_q8_free(l_.top()); }

  // Q8-freeness of entry #i, from one bottom-up pass over the lattice.
  bool entry_q8_free(int i) const;

  const ElemMask& derived_mask() const;
  const ElemMask& hypercenter_mask() const;
  const ElemMask& u_hypercenter_mask() const;

  // Supersolvability of G/N for the normal entry #i.
  bool quotient_supersolvable(int i) const;

  // Generalized Fitting subgroup of entry #i viewed as a group of its own,
  // returned as a mask over the parent's element ranks.
  const ElemMask& fstar_of(int i) const;

  // Whether entry #i has a normal p-complement, p prime.
  bool entry_p_nilpotent(int i, int p) const;

 private:
  const Group* g_;
  SubgroupLattice l_;
  std::vector<char> icphi_;
  mutable std::optional<bool> nilpotent_;
  mutable std::optional<bool> solvable_;
  mutable std::optional<bool> supersolvable_;
  mutable std::vector<char> q8f_;  // empty until first entry_q8_free call
  mutable std::optional<ElemMask> derived_;
  mutable std::optional<ElemMask> hyper_;
  mutable std::optional<ElemMask> uhyper_;
  mutable std::vector<signed char> qss_;  // -1 unknown, else 0/1
  mutable std::vector<std::optional<ElemMask>> fstar_;
};

}  // namespace icphi
