#pragma once

// Quotient groups and the characteristic-subgroup machinery: chief series,
// hypercenter, Fitting and generalized Fitting subgroups, the supersolvable
// hypercenter and the largest normal p'-subgroup.

#include <vector>

#include "icphi/group.hpp"
#include "icphi/lattice.hpp"

namespace icphi {

// G/N realized concretely: the source group acts on the right cosets of N,
// giving a faithful permutation representation of the quotient.  The source
// is stored by value so the record stays self-contained.
struct QuotientGroup {
  Group source;
  ElemMask kernel_mask;
  Group group;
  // projection[r] is the quotient rank of the image of source rank r.
  std::vector<uint16_t> projection;

  Subgroup kernel() const { return subgroup_from_mask(source, kernel_mask); }
  int project(int source_rank) const { return projection[source_rank]; }
  ElemMask project_mask(const ElemMask& m) const;
  ElemMask preimage_mask(const ElemMask& m) const;
};

// Throws UsageError when n is not normal in g.
QuotientGroup quotient(const Group& g, const Subgroup& n);

// Ascending series 1 = terms[0] < ... < terms[k] = G with every term normal
// in G and nothing normal strictly between consecutive terms.  factors[i]
// realizes terms[i+1]/terms[i] as a standalone quotient record.
struct ChiefSeries {
  std::vector<ElemMask> terms;
  std::vector<QuotientGroup> factors;

  std::vector<int> factor_orders() const;
};

ChiefSeries chief_series(const Group& g, const SubgroupLattice& l);
ChiefSeries chief_series(const Group& g);

// Just the factor orders, skipping the quotient-record construction.
std::vector<int> chief_factor_orders(const SubgroupLattice& l);

// Limit of the ascending central series.
Subgroup hypercenter(const Group& g);

// Largest nilpotent normal subgroup, assembled from the Sylow cores.
Subgroup fitting(const Group& g, const SubgroupLattice& l);

// Subnormal subgroups that are perfect with simple central quotient.
std::vector<Subgroup> components(const Group& g, const SubgroupLattice& l);

// Join of the Fitting subgroup with all components.
Subgroup generalized_fitting(const Group& g, const SubgroupLattice& l);

// Join of all normal subgroups whose chief factors under G all have prime
// order.
Subgroup u_hypercenter(const Group& g, const SubgroupLattice& l);

// Largest normal subgroup of order coprime to p.
Subgroup o_p_prime(const Group& g, const SubgroupLattice& l, int p);

}  // namespace icphi
