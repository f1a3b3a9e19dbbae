#pragma once

// Permutation realizations of the standard small-group families.  These are
// the building blocks the corpus recipes and the verifiers draw from.

#include <vector>

#include "icphi/group.hpp"

namespace icphi {
namespace construct {

// Rotation on n points; n = 1 gives the trivial group.
Group cyclic(int n);

// Order 2n, acting on the n vertices of a regular polygon.  Requires n >= 3
// (the degenerate cases are covered by cyclic and elementary_abelian).
Group dihedral(int n);

// Dicyclic group of the given order (divisible by 4, at least 8), in its
// regular representation.  Order 8 gives the quaternion group; orders 2^k
// give the generalized quaternion groups.
Group dicyclic(int order);

Group symmetric(int n);

// Requires n >= 3.
Group alternating(int n);

// Direct power of k copies of the cyclic group of prime order p, one
// p-cycle per copy.
Group elementary_abelian(int p, int k);

// Acts on the disjoint union of the factors' points.
Group direct_product(const Group& a, const Group& b);

// Semidirect product of a by b for the given action: action[r] is the
// automorphism of a (a permutation of a's element ranks) attached to the
// element of b with rank r.  The caller guarantees the family respects
// action[y1 y2] = action[y1] o action[y2], with action[y2] applied first;
// the order assertion catches anything else.  Realized by right
// multiplication on the |a|*|b| pairs.
Group semidirect_product(const Group& a, const Group& b,
                         const std::vector<Perm>& action);

// The quaternion group of order 8.
Group quaternion8();

// The special linear group of 2x2 determinant-1 matrices over the field
// with three elements, acting on the 8 nonzero vectors of its natural
// module.
Group sl23();

}  // namespace construct
}  // namespace icphi
