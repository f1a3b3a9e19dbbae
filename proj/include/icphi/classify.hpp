#pragma once

// Group-class predicates, the isomorphism test and automorphism groups.

#include <utility>
#include <vector>

#include "icphi/group.hpp"
#include "icphi/lattice.hpp"

namespace icphi {

// Cheap necessary conditions for isomorphism.  Equal fingerprints do not
// prove anything; unequal ones refute.
struct GroupFingerprint {
  int order = 0;
  std::vector<int> element_orders;         // sorted
  int center_order = 0;
  int derived_order = 0;
  // Order of x*G' in G/G' for every element x, sorted; each coset shows up
  // once per element it holds.
  std::vector<int> abelianization_orders;
  std::vector<std::pair<int, int>> subgroup_counts;  // (order, count)
};

GroupFingerprint fingerprint(const Group& g, const SubgroupLattice& l);
bool fingerprints_match(const GroupFingerprint& a, const GroupFingerprint& b);

bool is_abelian(const Group& g);
bool is_cyclic(const Group& g);
bool is_elementary_abelian(const Group& g);

bool is_nilpotent(const Group& g, const SubgroupLattice& l);
bool is_solvable(const Group& g);
bool is_supersolvable(const Group& g, const SubgroupLattice& l);
bool is_p_nilpotent(const Group& g, const SubgroupLattice& l, int p);
bool is_2_closed(const Group& g, const SubgroupLattice& l);

bool is_q8(const Group& g);
bool is_generalized_quaternion(const Group& g);
bool is_q8_free(const Group& g, const SubgroupLattice& l);
bool is_minimal_non_nilpotent(const Group& g, const SubgroupLattice& l);

// No proper nontrivial normal subgroup (and nontrivial), decided through
// normal closures of single elements.
bool is_simple(const Group& g);

// Predicates applied to one lattice entry, read off the parent's lattice.
bool is_abelian_entry(const SubgroupLattice& l, int i);
bool is_nilpotent_entry(const SubgroupLattice& l, int i);

// Q8-freeness of the subgroup at entry i: no section H/N with H below the
// entry is a quaternion group of order eight.
bool is_q8_free_entry(const SubgroupLattice& l, int i);

// Whether H/N is the order-8 quaternion group, decided by the coset-order
// census {1:1, 2:1, 4:6}, which no other order-8 group matches.  N must be
// normal in H with index 8.
bool section_is_q8(const Group& g, const ElemMask& h, const ElemMask& n);

// Fingerprint prefilter, then backtracking over generator images with the
// found map verified on every element pair.  Throws BudgetError instead of
// guessing when the search would be too large.
bool isomorphic(const Group& a, const Group& b);

// All isomorphisms g -> g as permutations of g's element ranks.  Rejects
// |g| above kAutOrderBudget, and gives up with BudgetError when the result
// would exceed kOrderBudget elements.
Group automorphism_group(const Group& g);

}  // namespace icphi
