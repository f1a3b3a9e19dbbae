#pragma once

// The verification corpus: recipes for building groups, closure of the
// combinators up to an order bound with isomorphism deduplication, and the
// text format groups and corpora are stored in.

#include <string>
#include <vector>

#include "icphi/group.hpp"

namespace icphi {

enum class RecipeKind {
  Cyclic,
  Dihedral,
  Dicyclic,
  Symmetric,
  Alternating,
  ElementaryAbelian,
  DirectProduct,
  Semidirect,
  Explicit,
};

// A construction plan for one group.  `n` is the primary size parameter
// (polygon size for dihedral, full order for dicyclic, the prime for
// elementary abelian); `k` is the secondary one (exponent for elementary
// abelian, action index for semidirect products); `parts` holds the factor
// recipes of a product; `target` names an explicit group.
struct GroupRecipe {
  RecipeKind kind = RecipeKind::Explicit;
  int n = 0;
  int k = 0;
  std::vector<GroupRecipe> parts;
  std::string target;
};

GroupRecipe cyclic_recipe(int n);
GroupRecipe dihedral_recipe(int n);
GroupRecipe dicyclic_recipe(int order);
GroupRecipe symmetric_recipe(int n);
GroupRecipe alternating_recipe(int n);
GroupRecipe elementary_abelian_recipe(int p, int k);
GroupRecipe direct_product_recipe(GroupRecipe a, GroupRecipe b);
GroupRecipe semidirect_recipe(GroupRecipe a, GroupRecipe b, int action_index);

// Accepts "Q8" and "SL(2,3)".
GroupRecipe explicit_recipe(std::string name);

int predicted_order(const GroupRecipe& r);

// Readable one-line form, e.g. "semidirect(cyclic(3), cyclic(2), 1)".
std::string recipe_string(const GroupRecipe& r);

// Builds the group and asserts its order equals predicted_order.
Group materialize(const GroupRecipe& r);

// One semidirect action in the shape construct::semidirect_product takes:
// the automorphism of A attached to each element rank of B.
using SemidirectAction = std::vector<Perm>;

// Every homomorphism from b into the automorphism group of a, in a fixed
// deterministic order; a semidirect recipe's action index is a position in
// this list.  Throws BudgetError when the automorphism group or the
// generator-image search is out of reach.
std::vector<SemidirectAction> enumerate_semidirect_actions(const Group& a,
                                                           const Group& b);

struct CorpusMember {
  std::string name;
  std::string provenance;  // recipe_string of the construction that won
  Group group;
};

struct Corpus {
  // Sorted by (order, name); no two members isomorphic unless a notice
  // says the comparison blew its budget.
  std::vector<CorpusMember> members;
  std::vector<std::string> notices;
};

// Seeds the standard families (cyclic, dihedral, dicyclic, symmetric and
// alternating up to degree 5, elementary abelian, Q8, SL(2,3)) up to
// max_order, then closes under direct and semidirect products of members.
Corpus build_corpus(int max_order);

// One group as a text record: name, permutation degree, generator images.
std::string print_group(const std::string& name, const Group& g);

struct NamedGroup {
  std::string name;
  Group group;
};

// Inverse of print_group.  The parsed group equals the printed one as a
// permutation set.  Throws UsageError on malformed input.
NamedGroup parse_group(const std::string& text);

// A corpus as a list of group records, each with its recipe string.
std::string print_manifest(const Corpus& c);
Corpus parse_manifest(const std::string& text);

}  // namespace icphi
