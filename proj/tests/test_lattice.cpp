#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "helpers.hpp"
#include "icphi/group.hpp"
#include "icphi/lattice.hpp"

using namespace icphi;
using namespace testutil;

namespace {

std::map<int, int> counts_by_order(const SubgroupLattice& l) {
  std::map<int, int> c;
  for (int i = 0; i < l.size(); ++i) ++c[l.order_of(i)];
  return c;
}

}  // namespace

TEST_CASE("enumeration agrees with the exhaustive subset oracle") {
  std::vector<Group> gs;
  gs.push_back(cyclic_group(7));
  gs.push_back(cyclic_group(12));
  gs.push_back(cyclic_group(16));
  gs.push_back(klein_four());
  gs.push_back(symmetric_group(3));
  gs.push_back(quaternion_group());
  gs.push_back(dihedral_group(4));
  gs.push_back(dihedral_group(8));
  gs.push_back(alternating_group(4));
  for (const Group& g : gs) {
    SubgroupLattice l(g);
    std::vector<ElemMask> oracle = exhaustive_subgroups(g);
    REQUIRE(l.size() == (int)oracle.size());
    for (int i = 0; i < l.size(); ++i) CHECK(l.mask(i) == oracle[i]);
  }
}

TEST_CASE("known subgroup totals") {
  Group q8 = quaternion_group(), s3 = symmetric_group(3), c7 = cyclic_group(7);
  CHECK(SubgroupLattice(q8).size() == 6);
  CHECK(SubgroupLattice(s3).size() == 6);
  CHECK(SubgroupLattice(c7).size() == 2);
}

TEST_CASE("maximal subgroups of small groups") {
  Group gq8 = quaternion_group();
  SubgroupLattice q8(gq8);
  auto qmax = q8.maximal_subgroups_of(q8.top());
  REQUIRE(qmax.size() == 3);
  for (int i : qmax) CHECK(q8.order_of(i) == 4);

  Group gsl = sl_2_3();
  SubgroupLattice sl(gsl);
  auto smax = sl.maximal_subgroups_of(sl.top());
  std::vector<int> orders;
  for (int i : smax) orders.push_back(sl.order_of(i));
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{6, 6, 6, 6, 8});

  Group gc5 = cyclic_group(5);
  SubgroupLattice cp(gc5);
  auto cmax = cp.maximal_subgroups_of(cp.top());
  REQUIRE(cmax.size() == 1);
  CHECK(cmax[0] == cp.bottom());
}

TEST_CASE("n-maximal levels match a chain search over the oracle") {
  std::vector<Group> gs;
  gs.push_back(symmetric_group(3));
  gs.push_back(quaternion_group());
  gs.push_back(dihedral_group(4));
  gs.push_back(alternating_group(4));
  gs.push_back(cyclic_group(12));
  for (const Group& g : gs) {
    SubgroupLattice l(g);
    auto oracle_levels = oracle_nmax_levels(g, exhaustive_subgroups(g), 5);
    for (int n = 0; n <= 5; ++n) {
      const auto& got = l.n_maximal(n);
      std::vector<ElemMask> masks;
      for (int i : got) masks.push_back(l.mask(i));
      CHECK(masks == oracle_levels[n]);
    }
  }
}

TEST_CASE("specific n-maximal facts") {
  Group gs3 = symmetric_group(3);
  SubgroupLattice s3(gs3);
  auto two = s3.n_maximal(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == s3.bottom());

  Group gsl = sl_2_3();
  SubgroupLattice sl(gsl);
  auto three = sl.n_maximal(3);
  REQUIRE(three.size() == 2);
  CHECK(three[0] == sl.bottom());
  CHECK(sl.order_of(three[1]) == 2);
  // That order-2 member is the center.
  CHECK(sl.mask(three[1]) == center_mask(sl.group()));

  // Splicing: members of level n+1 are exactly maximal subgroups of level-n
  // members, and every such maximal subgroup shows up.
  for (int n = 0; n < 4; ++n) {
    std::vector<int> spliced;
    for (int m : sl.n_maximal(n))
      for (int j : sl.maximal_subgroups_of(m))
        if (std::find(spliced.begin(), spliced.end(), j) == spliced.end())
          spliced.push_back(j);
    std::sort(spliced.begin(), spliced.end());
    CHECK(spliced == sl.n_maximal(n + 1));
  }
}

TEST_CASE("frattini subgroups") {
  Group gq8 = quaternion_group();
  SubgroupLattice q8(gq8);
  int phi = q8.frattini_of(q8.top());
  CHECK(q8.order_of(phi) == 2);
  CHECK(q8.mask(phi) == center_mask(q8.group()));

  Group gs3 = symmetric_group(3);
  SubgroupLattice s3(gs3);
  CHECK(s3.frattini_of(s3.top()) == s3.bottom());

  Group gv4 = klein_four();
  SubgroupLattice v4(gv4);
  CHECK(v4.frattini_of(v4.top()) == v4.bottom());

  // Inside a proper subgroup: the frattini of a cyclic order-4 entry of the
  // quaternion group is its order-2 subgroup.
  for (int i = 0; i < q8.size(); ++i)
    if (q8.order_of(i) == 4) CHECK(q8.order_of(q8.frattini_of(i)) == 2);

  // Frattini of the whole group is always normal.
  for (const Group& g : {sl_2_3(), dihedral_group(6), cyclic_group(16)}) {
    SubgroupLattice l(g);
    CHECK(l.normal(l.frattini_of(l.top())));
  }
}

TEST_CASE("normal and minimal normal subgroups") {
  Group gsl = sl_2_3();
  SubgroupLattice sl(gsl);
  auto mins = sl.minimal_normal_indices();
  REQUIRE(mins.size() == 1);
  CHECK(sl.order_of(mins[0]) == 2);

  // Every subgroup of an abelian group is normal.
  Group gc12 = cyclic_group(12);
  SubgroupLattice c12(gc12);
  CHECK(c12.normal_indices().size() == (size_t)c12.size());

  Group gs4 = symmetric_group(4);
  SubgroupLattice s4(gs4);
  std::vector<int> orders;
  for (int i : s4.normal_indices()) orders.push_back(s4.order_of(i));
  CHECK(orders == std::vector<int>{1, 4, 12, 24});
}

TEST_CASE("sylow picks") {
  Group gsl = sl_2_3();
  SubgroupLattice sl(gsl);
  int syl2 = sl.sylow_index(2);
  CHECK(sl.order_of(syl2) == 8);
  CHECK(sl.normal(syl2));
  CHECK(sl.order_of(sl.sylow_index(3)) == 3);
  CHECK(sl.sylow_index(5) == sl.bottom());
  CHECK_THROWS_AS(sl.sylow_index(4), UsageError);

  Group gs3 = symmetric_group(3);
  SubgroupLattice s3(gs3);
  CHECK(s3.order_of(s3.sylow_index(3)) == 3);

  // Sylow counting: the number of conjugates is 1 mod p.
  for (const Group& g : {symmetric_group(4), alternating_group(4),
                         dihedral_group(6), sl_2_3()}) {
    SubgroupLattice l(g);
    for (int p : prime_divisors(g.order())) {
      int syl = l.sylow_index(p);
      int n_conj =
          (int)l.conjugacy_classes()[l.conjugacy_class_of(syl)].size();
      CHECK(n_conj % p == 1);
    }
  }
}

TEST_CASE("conjugacy classes of subgroups") {
  Group gs3 = symmetric_group(3);
  SubgroupLattice s3(gs3);
  // Classes: trivial, the three reflections, the rotation subgroup, S3.
  CHECK(s3.conjugacy_classes().size() == 4);
  for (const auto& cls : s3.conjugacy_classes()) {
    for (int i : cls) CHECK(s3.order_of(i) == s3.order_of(cls.front()));
    for (int i : cls) CHECK(s3.normal(i) == (cls.size() == 1));
  }
}

TEST_CASE("subgroup counts are stable under relabeling points") {
  Group d4 = dihedral_group(4);
  Group moved = relabel(d4, Perm({2, 0, 3, 1}));
  CHECK(counts_by_order(SubgroupLattice(d4)) ==
        counts_by_order(SubgroupLattice(moved)));

  Group s4 = symmetric_group(4);
  Group s4m = relabel(s4, Perm({3, 1, 0, 2}));
  CHECK(counts_by_order(SubgroupLattice(s4)) ==
        counts_by_order(SubgroupLattice(s4m)));
}

TEST_CASE("cyclic subgroup counts follow the element-order census") {
  for (const Group& g : {sl_2_3(), symmetric_group(4), dihedral_group(8)}) {
    SubgroupLattice l(g);
    std::map<int, int> cyclic_count, elems_of_order;
    for (int i = 0; i < l.size(); ++i)
      if (l.cyclic(i)) ++cyclic_count[l.order_of(i)];
    for (int r = 0; r < g.order(); ++r) ++elems_of_order[g.elem_order(r)];
    for (auto [d, n] : cyclic_count)
      CHECK(n * euler_phi(d) == elems_of_order[d]);
  }
}

TEST_CASE("containment queries and maximal chains") {
  Group g = symmetric_group(3);
  SubgroupLattice l(g);
  int a3 = l.index_of(mask_closure(g, {(uint16_t)g.rank_of(Perm({1, 2, 0}))}));
  CHECK(l.contains(l.bottom(), a3));
  CHECK(l.contains(a3, l.top()));
  CHECK(!l.contains(l.top(), a3));

  CHECK(is_maximal_chain(l, {{a3, l.top()}}));
  CHECK(is_maximal_chain(l, {{l.bottom(), a3, l.top()}}));
  CHECK(!is_maximal_chain(l, {{l.bottom(), l.top()}}));
  CHECK(!is_maximal_chain(l, {{a3}}));
}

TEST_CASE("lattice entries carry usable generators") {
  Group g = dihedral_group(6);
  SubgroupLattice l(g);
  for (int i = 0; i < l.size(); ++i) {
    CHECK(mask_closure(g, l.gens(i)) == l.mask(i));
    Subgroup s = l.subgroup(i);
    CHECK(s.order == l.order_of(i));
  }
}
