#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unordered_set>

#include "icphi/common.hpp"
#include "icphi/perm.hpp"

using icphi::compose;
using icphi::inverse;
using icphi::Perm;
using icphi::PermHash;
using icphi::UsageError;

TEST_CASE("composition applies the left factor first") {
  Perm a({1, 0, 2});  // (0 1)
  Perm b({0, 2, 1});  // (1 2)
  Perm c = compose(a, b);
  CHECK(c.images == std::vector<uint16_t>{2, 0, 1});
  CHECK(c(0) == 2);
  // The other order gives the other 3-cycle.
  CHECK(compose(b, a).images == std::vector<uint16_t>{1, 2, 0});
}

TEST_CASE("identity behaves neutrally") {
  Perm e = Perm::identity(5);
  CHECK(e.is_identity());
  Perm a({4, 3, 2, 1, 0});
  CHECK(compose(a, e) == a);
  CHECK(compose(e, a) == a);
}

TEST_CASE("inverse undoes a permutation") {
  Perm a({1, 2, 0});
  CHECK(inverse(a).images == std::vector<uint16_t>{2, 0, 1});
  CHECK(compose(a, inverse(a)).is_identity());
  CHECK(compose(inverse(a), a).is_identity());
  CHECK(inverse(Perm::identity(4)).is_identity());
}

TEST_CASE("cycle notation") {
  CHECK(icphi::cycle_string(Perm::identity(3)) == "()");
  CHECK(icphi::cycle_string(Perm({2, 0, 1})) == "(0 2 1)");
  CHECK(icphi::cycle_string(Perm({1, 0, 3, 2})) == "(0 1)(2 3)");
  CHECK(icphi::cycle_string(Perm({0, 1, 3, 2})) == "(2 3)");
}

TEST_CASE("malformed image arrays are rejected") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), UsageError);
  CHECK_THROWS_AS(Perm({3, 0, 1}), UsageError);
  CHECK_THROWS_AS(compose(Perm({0, 1}), Perm({0, 1, 2})), UsageError);
}

TEST_CASE("hashing is usable for dedup") {
  std::unordered_set<Perm, PermHash> seen;
  seen.insert(Perm({1, 0, 2}));
  seen.insert(Perm({1, 0, 2}));
  seen.insert(Perm({0, 2, 1}));
  CHECK(seen.size() == 2);
  CHECK(PermHash{}(Perm({1, 0, 2})) == PermHash{}(Perm({1, 0, 2})));
}
