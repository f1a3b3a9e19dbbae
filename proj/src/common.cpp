#include "icphi/common.hpp"

namespace icphi {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

int p_part(int n, int p) {
  check(n >= 1 && p >= 2, "p_part: bad arguments");
  int q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

bool is_p_power(int n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  auto ps = prime_divisors(n);
  return ps.size() == 1;
}

}  // namespace icphi
