#pragma once

// Permutations of {0, ..., degree-1} stored as image arrays.
//
// Composition convention used throughout: compose(a, b) applies a first and
// b second, i.e. the result maps i to b(a(i)).  Every algorithm and every
// frozen test value in this project depends on that choice.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace icphi {

struct Perm {
  std::vector<uint16_t> images;

  Perm() = default;
  explicit Perm(std::vector<uint16_t> im);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images.size()); }
  uint16_t operator()(uint16_t point) const { return images[point]; }
  bool is_identity() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;
};

// b after a: result maps i to b.images[a.images[i]].
Perm compose(const Perm& a, const Perm& b);

Perm inverse(const Perm& p);

// Disjoint cycle notation, fixed points omitted; identity prints as "()".
std::string cycle_string(const Perm& p);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

}  // namespace icphi
