#include "icphi/construct.hpp"

#include <cstdint>
#include <numeric>
#include <utility>

#include "icphi/common.hpp"

namespace icphi {
namespace construct {

namespace {

Perm perm_from(std::vector<int> images) {
  std::vector<uint16_t> im(images.begin(), images.end());
  return Perm(std::move(im));
}

}  // namespace

Group cyclic(int n) {
  require(n >= 1, "cyclic: order must be positive");
  if (n == 1) return Group(1, {});
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return Group(n, {perm_from(std::move(rot))});
}

Group dihedral(int n) {
  require(n >= 3, "dihedral: need at least 3 vertices");
  std::vector<int> rot(n), flip(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return Group(n, {perm_from(std::move(rot)), perm_from(std::move(flip))});
}

Group dicyclic(int order) {
  require(order >= 8 && order % 4 == 0,
          "dicyclic: order must be a multiple of 4, at least 8");
  // Elements are a^i (points 0..2k-1) and a^i b (points 2k..4k-1), with
  // a^(2k) = 1, b^2 = a^k, and b a = a^(-1) b.  The generators act by right
  // multiplication.
  int k = order / 4;
  int m = 2 * k;
  std::vector<int> pa(order), pb(order);
  for (int i = 0; i < m; ++i) {
    pa[i] = (i + 1) % m;              // a^i . a = a^(i+1)
    pa[m + i] = m + (i + m - 1) % m;  // a^i b . a = a^(i-1) b
    pb[i] = m + i;                    // a^i . b = a^i b
    pb[m + i] = (i + k) % m;          // a^i b . b = a^(i+k)
  }
  Group g(order, {perm_from(std::move(pa)), perm_from(std::move(pb))});
  check(g.order() == order, "dicyclic: wrong order from presentation");
  return g;
}

Group symmetric(int n) {
  require(n >= 1, "symmetric: degree must be positive");
  if (n == 1) return Group(1, {});
  std::vector<int> swap01(n), cyc(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  swap01[0] = 1;
  swap01[1] = 0;
  if (n == 2) return Group(2, {perm_from(std::move(swap01))});
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return Group(n, {perm_from(std::move(swap01)), perm_from(std::move(cyc))});
}

Group alternating(int n) {
  require(n >= 3, "alternating: need degree at least 3");
  std::vector<int> tri(n);
  std::iota(tri.begin(), tri.end(), 0);
  tri[0] = 1;
  tri[1] = 2;
  tri[2] = 0;
  std::vector<int> ring(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) ring[i] = (i + 1) % n;
  } else {
    // An n-cycle is odd for even n; rotate the points 1..n-1 instead.
    ring[0] = 0;
    for (int i = 1; i < n; ++i) ring[i] = i % (n - 1) + 1;
  }
  long long half = 1;
  for (int i = 3; i <= n; ++i) half *= i;
  Group g(n, {perm_from(std::move(tri)), perm_from(std::move(ring))});
  check(g.order() == half, "alternating: generated group has the wrong order");
  return g;
}

Group elementary_abelian(int p, int k) {
  require(is_prime(p), "elementary_abelian: p must be prime");
  require(k >= 1, "elementary_abelian: need at least one factor");
  int degree = p * k;
  std::vector<Perm> gens;
  gens.reserve(k);
  for (int j = 0; j < k; ++j) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    for (int i = 0; i < p; ++i) im[j * p + i] = j * p + (i + 1) % p;
    gens.push_back(perm_from(std::move(im)));
  }
  return Group(degree, std::move(gens));
}

Group direct_product(const Group& a, const Group& b) {
  int da = a.degree();
  int db = b.degree();
  std::vector<Perm> gens;
  for (int r : a.generator_ranks()) {
    std::vector<int> im(da + db);
    std::iota(im.begin(), im.end(), 0);
    const Perm& p = a.element(r);
    for (int i = 0; i < da; ++i) im[i] = p.images[i];
    gens.push_back(perm_from(std::move(im)));
  }
  for (int r : b.generator_ranks()) {
    std::vector<int> im(da + db);
    std::iota(im.begin(), im.end(), 0);
    const Perm& p = b.element(r);
    for (int i = 0; i < db; ++i) im[da + i] = da + p.images[i];
    gens.push_back(perm_from(std::move(im)));
  }
  Group g(da + db, std::move(gens));
  check(g.order() == a.order() * b.order(),
        "direct_product: factors do not commute pointwise");
  return g;
}

Group semidirect_product(const Group& a, const Group& b,
                         const std::vector<Perm>& action) {
  int na = a.order();
  int nb = b.order();
  require(static_cast<int>(action.size()) == nb,
          "semidirect_product: one automorphism per element of b");
  // Pairs (x, y) with x an element rank of a and y one of b multiply as
  // (x1, y1)(x2, y2) = (x1 * phi(y1)(x2), y1 y2).  Point x*nb + y carries the
  // pair; each generator acts by right multiplication.
  std::vector<Perm> gens;
  for (int r : a.generator_ranks()) {
    std::vector<int> im(na * nb);
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < nb; ++y)
        im[x * nb + y] = a.mul(x, action[y].images[r]) * nb + y;
    gens.push_back(perm_from(std::move(im)));
  }
  for (int r : b.generator_ranks()) {
    std::vector<int> im(na * nb);
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < nb; ++y) im[x * nb + y] = x * nb + b.mul(y, r);
    gens.push_back(perm_from(std::move(im)));
  }
  if (gens.empty()) return Group(1, {});
  Group g(na * nb, std::move(gens));
  check(g.order() == na * nb, "semidirect_product: action is not an action");
  return g;
}

Group quaternion8() { return dicyclic(8); }

Group sl23() {
  // Acting on the eight nonzero vectors of F_3^2; the generators are the two
  // standard transvections, which square to order-4 elements.
  return Group(8, {perm_from({0, 1, 3, 4, 2, 7, 5, 6}),
                   perm_from({3, 7, 2, 6, 1, 5, 0, 4})});
}

}  // namespace construct
}  // namespace icphi
