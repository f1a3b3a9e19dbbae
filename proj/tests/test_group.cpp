#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "icphi/group.hpp"

using namespace icphi;
using namespace testutil;

namespace {

// Recomputes <{[a,b] : a in A, b in B}> with raw permutation arithmetic
// only, bypassing the rank tables entirely.
std::vector<Perm> raw_commutator_closure(const std::vector<Perm>& as,
                                         const std::vector<Perm>& bs) {
  std::vector<Perm> seeds;
  for (const Perm& a : as)
    for (const Perm& b : bs) {
      Perm c = compose(compose(compose(inverse(a), inverse(b)), a), b);
      if (std::find(seeds.begin(), seeds.end(), c) == seeds.end())
        seeds.push_back(c);
    }
  std::vector<Perm> out{Perm::identity(as.front().degree())};
  for (size_t i = 0; i < out.size(); ++i)
    for (const Perm& s : seeds) {
      Perm next = compose(out[i], s);
      if (std::find(out.begin(), out.end(), next) == out.end())
        out.push_back(next);
    }
  return out;
}

std::vector<Perm> mask_elements(const Group& g, const ElemMask& m) {
  std::vector<Perm> v;
  m.for_each([&](int r) { v.push_back(g.element(r)); });
  return v;
}

bool same_element_set(std::vector<Perm> a, std::vector<Perm> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("multiplication tables agree with raw permutation products") {
  for (const Group& g : {symmetric_group(3), quaternion_group()}) {
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.element(g.inv(a)) == inverse(g.element(a)));
      for (int b = 0; b < g.order(); ++b)
        CHECK(g.element(g.mul(a, b)) ==
              compose(g.element(a), g.element(b)));
    }
  }
}

TEST_CASE("element orders match repeated composition") {
  Group g = sl_2_3();
  CHECK(g.order() == 24);
  for (int r = 0; r < g.order(); ++r) {
    Perm x = g.element(r);
    Perm acc = x;
    int k = 1;
    while (!acc.is_identity()) {
      acc = compose(acc, x);
      ++k;
    }
    CHECK(g.elem_order(r) == k);
  }
}

TEST_CASE("familiar element-order censuses") {
  CHECK(sorted_element_orders(symmetric_group(3)) ==
        std::vector<int>{1, 2, 2, 2, 3, 3});
  CHECK(sorted_element_orders(quaternion_group()) ==
        std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});
  std::vector<int> sl(24);
  // 1, the single involution, 8 cube roots, 6 of order 4, 8 of order 6.
  std::vector<int> expect{1, 2};
  expect.insert(expect.end(), 8, 3);
  expect.insert(expect.end(), 6, 4);
  expect.insert(expect.end(), 8, 6);
  CHECK(sorted_element_orders(sl_2_3()) == expect);
}

TEST_CASE("conjugation helper matches raw conjugation") {
  Group g = symmetric_group(3);
  for (int x = 0; x < g.order(); ++x)
    for (int s = 0; s < g.order(); ++s)
      CHECK(g.element(g.conj(x, s)) ==
            compose(compose(inverse(g.element(s)), g.element(x)),
                    g.element(s)));
}

TEST_CASE("closure stops at the order budget") {
  // Degree-7 symmetric group has order 5040.
  CHECK_THROWS_AS(symmetric_group(7), BudgetError);
}

TEST_CASE("subgroup construction validates its input") {
  Group g = symmetric_group(3);
  Subgroup a3 = subgroup_from_gens(g, {(uint16_t)g.rank_of(Perm({1, 2, 0}))});
  CHECK(a3.order == 3);
  CHECK(a3.gens.size() == 1);

  ElemMask not_closed;
  not_closed.set(g.id_rank());
  not_closed.set(g.rank_of(Perm({1, 2, 0})));
  CHECK_THROWS_AS(subgroup_from_mask(g, not_closed), CheckError);

  CHECK(trivial_subgroup(g).order == 1);
  CHECK(full_subgroup(g).order == 6);
  CHECK(greedy_generators(g, g.full_mask()).size() == 2);
}

TEST_CASE("commutator subgroups agree with the raw-permutation closure") {
  struct Case {
    Group g;
    int derived_order;
  };
  Case cases[] = {{symmetric_group(3), 3},
                  {quaternion_group(), 2},
                  {sl_2_3(), 8},
                  {dihedral_group(4), 2},
                  {klein_four(), 1}};
  for (const Case& c : cases) {
    Subgroup whole = full_subgroup(c.g);
    Subgroup derived = commutator_subgroup(c.g, whole, whole);
    CHECK(derived.order == c.derived_order);
    auto raw = raw_commutator_closure(c.g.elements(), c.g.elements());
    CHECK(same_element_set(mask_elements(c.g, derived.mask), raw));
  }
}

TEST_CASE("mixed commutator [H,G] for a non-normal H") {
  Group g = symmetric_group(3);
  Subgroup h = subgroup_from_gens(g, {(uint16_t)g.rank_of(Perm({1, 0, 2}))});
  Subgroup hg = commutator_subgroup(g, h, full_subgroup(g));
  CHECK(hg.order == 3);
  auto raw =
      raw_commutator_closure(mask_elements(g, h.mask), g.elements());
  CHECK(same_element_set(mask_elements(g, hg.mask), raw));
}

TEST_CASE("centers of familiar groups") {
  CHECK(center_mask(symmetric_group(3)).count() == 1);
  CHECK(center_mask(cyclic_group(12)).count() == 12);
  Group q8 = quaternion_group();
  ElemMask z = center_mask(q8);
  CHECK(z.count() == 2);
  z.for_each([&](int r) {
    CHECK((r == q8.id_rank() || q8.elem_order(r) == 2));
  });
}

TEST_CASE("centralizer and normalizer in the degree-3 symmetric group") {
  Group g = symmetric_group(3);
  Subgroup refl = subgroup_from_gens(g, {(uint16_t)g.rank_of(Perm({1, 0, 2}))});
  Subgroup rot = subgroup_from_gens(g, {(uint16_t)g.rank_of(Perm({1, 2, 0}))});
  CHECK(centralizer(g, refl).order == 2);
  CHECK(normalizer(g, refl).order == 2);
  CHECK(centralizer(g, rot).order == 3);
  CHECK(normalizer(g, rot).order == 6);
  CHECK(is_normal(g, rot));
  CHECK(!is_normal(g, refl));
}

TEST_CASE("core and normal closure bracket a subgroup") {
  Group g = symmetric_group(3);
  Subgroup refl = subgroup_from_gens(g, {(uint16_t)g.rank_of(Perm({1, 0, 2}))});
  CHECK(core(g, refl).order == 1);
  CHECK(normal_closure(g, refl).order == 6);

  Group q8 = quaternion_group();
  // Any order-4 subgroup of the quaternion group is normal.
  int i4 = 0;
  while (q8.elem_order(i4) != 4) ++i4;
  Subgroup c4 = subgroup_from_gens(q8, {(uint16_t)i4});
  CHECK(c4.order == 4);
  CHECK(core(q8, c4).mask == c4.mask);
  CHECK(normal_closure(q8, c4).mask == c4.mask);
}

TEST_CASE("subnormality distinguishes the two involution types in S4") {
  Group s4 = symmetric_group(4);
  Subgroup double_swap =
      subgroup_from_gens(s4, {(uint16_t)s4.rank_of(Perm({1, 0, 3, 2}))});
  Subgroup single_swap =
      subgroup_from_gens(s4, {(uint16_t)s4.rank_of(Perm({1, 0, 2, 3}))});
  CHECK(is_subnormal(s4, double_swap));
  CHECK(!is_subnormal(s4, single_swap));
  CHECK(is_subnormal(s4, full_subgroup(s4)));
  CHECK(is_subnormal(s4, trivial_subgroup(s4)));
}

TEST_CASE("conjugate subgroups and standalone rebuilds") {
  Group g = symmetric_group(3);
  Subgroup refl = subgroup_from_gens(g, {(uint16_t)g.rank_of(Perm({1, 0, 2}))});
  int rot = g.rank_of(Perm({1, 2, 0}));
  Subgroup moved = conjugate_subgroup(g, refl, rot);
  CHECK(moved.order == 2);
  CHECK(!(moved.mask == refl.mask));

  Group a3 = as_group(subgroup_from_gens(
      g, {(uint16_t)g.rank_of(Perm({1, 2, 0}))}));
  CHECK(a3.order() == 3);
  CHECK(sorted_element_orders(a3) == std::vector<int>{1, 3, 3});
  CHECK_THROWS_AS(a3.rank_of(Perm({1, 0, 2})), CheckError);
}
