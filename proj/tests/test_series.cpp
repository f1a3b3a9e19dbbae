#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "icphi/classify.hpp"
#include "icphi/lattice.hpp"
#include "icphi/series.hpp"

using namespace icphi;
using namespace testutil;

namespace {

int rank_of_order(const Group& g, int want) {
  for (int r = 0; r < g.order(); ++r)
    if (g.elem_order(r) == want) return r;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("quotient of S3 by its rotation subgroup") {
  Group g = symmetric_group(3);
  Subgroup a3 = subgroup_from_gens(g, {static_cast<uint16_t>(rank_of_order(g, 3))});
  REQUIRE(a3.order == 3);

  QuotientGroup q = quotient(g, a3);
  CHECK(q.group.order() == 2);
  CHECK(q.kernel().mask == a3.mask);

  // The projection's kernel is exactly the subgroup we divided out.
  for (int x = 0; x < g.order(); ++x)
    CHECK((q.project(x) == q.group.id_rank()) == a3.mask.test(x));

  // Homomorphism on every pair, not just generators.
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      CHECK(q.project(g.mul(x, y)) ==
            q.group.mul(q.project(x), q.project(y)));
}

TEST_CASE("quotient by the trivial subgroup reproduces the group") {
  Group g = quaternion_group();
  QuotientGroup q = quotient(g, trivial_subgroup(g));
  CHECK(q.group.order() == 8);
  CHECK(isomorphic(q.group, g));
}

TEST_CASE("SL(2,3) modulo its center is the alternating group on four points") {
  Group g = sl_2_3();
  Subgroup z = subgroup_from_mask(g, center_mask(g));
  REQUIRE(z.order == 2);

  QuotientGroup q = quotient(g, z);
  CHECK(q.group.order() == 12);
  Group a4 = alternating_group(4);
  CHECK(isomorphic(q.group, a4));
}

TEST_CASE("Q8 modulo its center is elementary abelian of order four") {
  Group g = quaternion_group();
  QuotientGroup q = quotient(g, subgroup_from_mask(g, center_mask(g)));
  CHECK(q.group.order() == 4);
  CHECK(is_elementary_abelian(q.group));
  CHECK_FALSE(is_cyclic(q.group));
}

TEST_CASE("projecting and pulling back subgroup masks") {
  Group g = sl_2_3();
  Subgroup z = subgroup_from_mask(g, center_mask(g));
  QuotientGroup q = quotient(g, z);

  // Image of the Sylow 2-subgroup Q8 is the Klein four-subgroup of A4.
  SubgroupLattice l(g);
  ElemMask sylow2 = l.mask(l.sylow_index(2));
  REQUIRE(sylow2.count() == 8);
  ElemMask image = q.project_mask(sylow2);
  CHECK(image.count() == 4);

  // Pulling the image back recovers the original (it contains the kernel).
  CHECK(q.preimage_mask(image) == sylow2);
  CHECK(q.preimage_mask(ElemMask::single(q.group.id_rank())) == z.mask);
}

TEST_CASE("quotient rejects a non-normal kernel") {
  Group g = symmetric_group(3);
  Subgroup refl = subgroup_from_gens(g, {static_cast<uint16_t>(rank_of_order(g, 2))});
  CHECK_THROWS_AS(quotient(g, refl), UsageError);
}

TEST_CASE("chief factor orders of small groups") {
  Group q8 = quaternion_group();
  SubgroupLattice lq(q8);
  CHECK(chief_factor_orders(lq) == std::vector<int>{2, 2, 2});

  Group s4 = symmetric_group(4);
  SubgroupLattice ls(s4);
  CHECK(chief_factor_orders(ls) == std::vector<int>{4, 3, 2});

  Group c8 = cyclic_group(8);
  SubgroupLattice lc(c8);
  CHECK(chief_factor_orders(lc) == std::vector<int>{2, 2, 2});

  Group c1 = cyclic_group(1);
  SubgroupLattice l1(c1);
  CHECK(chief_factor_orders(l1).empty());
}

TEST_CASE("chief series records are internally consistent") {
  Group g = symmetric_group(4);
  SubgroupLattice l(g);
  ChiefSeries s = chief_series(g, l);

  REQUIRE(s.terms.size() == s.factors.size() + 1);
  CHECK(s.terms.front().count() == 1);
  CHECK(s.terms.back() == g.full_mask());
  CHECK(s.factor_orders() == chief_factor_orders(l));

  for (size_t i = 0; i < s.factors.size(); ++i) {
    CHECK(s.factors[i].group.order() ==
          s.terms[i + 1].count() / s.terms[i].count());
    CHECK(s.terms[i].subset_of(s.terms[i + 1]));
    CHECK(is_normal(g, subgroup_from_mask(g, s.terms[i])));
  }

  // The bottom factor is the Klein four-subgroup: order four, not cyclic.
  CHECK(s.factors[0].group.order() == 4);
  CHECK_FALSE(is_cyclic(s.factors[0].group));
  CHECK(is_elementary_abelian(s.factors[0].group));
}

TEST_CASE("chief factor multiset survives relabeling") {
  struct Case {
    Group g;
    Perm sigma;
  };
  std::vector<Case> cases;
  cases.push_back({sl_2_3(), P({5, 3, 7, 1, 0, 6, 2, 4})});
  cases.push_back({symmetric_group(4), P({2, 0, 3, 1})});
  cases.push_back({dihedral_group(6), P({4, 0, 5, 1, 3, 2})});

  for (const Case& c : cases) {
    SubgroupLattice l(c.g);
    std::vector<int> a = chief_factor_orders(l);

    Group h = relabel(c.g, c.sigma);
    SubgroupLattice lh(h);
    std::vector<int> b = chief_factor_orders(lh);

    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("hypercenter of specific groups") {
  Group sl = sl_2_3();
  CHECK(hypercenter(sl).mask == center_mask(sl));
  CHECK(hypercenter(sl).order == 2);

  Group s3 = symmetric_group(3);
  CHECK(hypercenter(s3).order == 1);

  // Upper central series of D4 climbs in two steps.
  Group d4 = dihedral_group(4);
  CHECK(center_mask(d4).count() == 2);
  CHECK(hypercenter(d4).order == 8);
}

TEST_CASE("hypercenter reaches the whole group exactly for nilpotent groups") {
  std::vector<Group> groups;
  groups.push_back(symmetric_group(3));
  groups.push_back(symmetric_group(4));
  groups.push_back(alternating_group(4));
  groups.push_back(dihedral_group(4));
  groups.push_back(dihedral_group(6));
  groups.push_back(quaternion_group());
  groups.push_back(cyclic_group(12));
  groups.push_back(sl_2_3());

  for (const Group& g : groups) {
    SubgroupLattice l(g);
    CHECK((hypercenter(g).order == g.order()) == is_nilpotent(g, l));
  }
}

TEST_CASE("fitting subgroup of specific groups") {
  Group s4 = symmetric_group(4);
  SubgroupLattice ls(s4);
  Subgroup f4 = fitting(s4, ls);
  CHECK(f4.order == 4);
  // The Klein four-subgroup: every nonidentity member is an involution.
  f4.mask.for_each([&](int r) { CHECK(s4.elem_order(r) <= 2); });

  Group a5 = alternating_group(5);
  SubgroupLattice la(a5);
  CHECK(fitting(a5, la).order == 1);

  Group sl = sl_2_3();
  SubgroupLattice lsl(sl);
  CHECK(fitting(sl, lsl).order == 8);

  Group q8 = quaternion_group();
  SubgroupLattice lq(q8);
  CHECK(fitting(q8, lq).order == 8);

  Group d6 = dihedral_group(6);
  SubgroupLattice ld(d6);
  CHECK(fitting(d6, ld).order == 6);
}

TEST_CASE("fitting subgroup contains every nilpotent normal entry") {
  std::vector<Group> groups;
  groups.push_back(symmetric_group(4));
  groups.push_back(alternating_group(4));
  groups.push_back(dihedral_group(6));
  groups.push_back(sl_2_3());

  for (const Group& g : groups) {
    SubgroupLattice l(g);
    Subgroup f = fitting(g, l);
    for (int i : l.normal_indices())
      if (is_nilpotent_entry(l, i)) CHECK(l.mask(i).subset_of(f.mask));
  }
}

TEST_CASE("components and the generalized Fitting subgroup") {
  Group a5 = alternating_group(5);
  SubgroupLattice la(a5);
  std::vector<Subgroup> comps = components(a5, la);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].mask == a5.full_mask());
  CHECK(generalized_fitting(a5, la).order == 60);
  CHECK(fitting(a5, la).order == 1);

  Group s4 = symmetric_group(4);
  SubgroupLattice ls(s4);
  CHECK(components(s4, ls).empty());
  CHECK(generalized_fitting(s4, ls).mask == fitting(s4, ls).mask);

  Group sl = sl_2_3();
  SubgroupLattice lsl(sl);
  CHECK(components(sl, lsl).empty());
  CHECK(generalized_fitting(sl, lsl).order == 8);
}

TEST_CASE("generalized Fitting subgroup is normal and contains Fitting") {
  std::vector<Group> groups;
  groups.push_back(symmetric_group(4));
  groups.push_back(alternating_group(5));
  groups.push_back(dihedral_group(5));
  groups.push_back(sl_2_3());

  for (const Group& g : groups) {
    SubgroupLattice l(g);
    Subgroup f = fitting(g, l);
    Subgroup fstar = generalized_fitting(g, l);
    CHECK(f.mask.subset_of(fstar.mask));
    CHECK(is_normal(g, fstar));
  }
}

TEST_CASE("supersolvable hypercenter of specific groups") {
  Group s3 = symmetric_group(3);
  SubgroupLattice ls3(s3);
  CHECK(u_hypercenter(s3, ls3).order == 6);

  Group a4 = alternating_group(4);
  SubgroupLattice la4(a4);
  CHECK(u_hypercenter(a4, la4).order == 1);

  Group c12 = cyclic_group(12);
  SubgroupLattice lc(c12);
  CHECK(u_hypercenter(c12, lc).order == 12);

  // S4: the only candidate normal subgroups are V4 and A4, and both sit
  // above a non-cyclic chief factor of order four.
  Group s4 = symmetric_group(4);
  SubgroupLattice ls4(s4);
  CHECK(u_hypercenter(s4, ls4).order == 1);

  // SL(2,3): the center qualifies, the Sylow 2-subgroup above it does not.
  Group sl = sl_2_3();
  SubgroupLattice lsl(sl);
  CHECK(u_hypercenter(sl, lsl).mask == center_mask(sl));
}

TEST_CASE("supersolvable hypercenter is everything exactly for supersolvable groups") {
  std::vector<Group> groups;
  groups.push_back(symmetric_group(3));
  groups.push_back(symmetric_group(4));
  groups.push_back(alternating_group(4));
  groups.push_back(alternating_group(5));
  groups.push_back(dihedral_group(6));
  groups.push_back(quaternion_group());
  groups.push_back(cyclic_group(12));
  groups.push_back(sl_2_3());

  for (const Group& g : groups) {
    SubgroupLattice l(g);
    CHECK((u_hypercenter(g, l).order == g.order()) == is_supersolvable(g, l));
  }
}

TEST_CASE("largest normal subgroup of order coprime to p") {
  Group s3 = symmetric_group(3);
  SubgroupLattice ls3(s3);
  CHECK(o_p_prime(s3, ls3, 2).order == 3);
  CHECK(o_p_prime(s3, ls3, 3).order == 1);
  // p does not divide the order: the whole group qualifies.
  CHECK(o_p_prime(s3, ls3, 5).order == 6);

  Group sl = sl_2_3();
  SubgroupLattice lsl(sl);
  CHECK(o_p_prime(sl, lsl, 3).order == 8);
  CHECK(o_p_prime(sl, lsl, 2).order == 1);

  Group q8 = quaternion_group();
  SubgroupLattice lq(q8);
  CHECK(o_p_prime(q8, lq, 2).order == 1);

  CHECK_THROWS_AS(o_p_prime(s3, ls3, 4), UsageError);
}
