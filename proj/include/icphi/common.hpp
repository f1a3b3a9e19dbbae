#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace icphi {

// Hard ceiling on group order for lattice-grade computations. Inputs past
// this are rejected with BudgetError instead of running unbounded.
inline constexpr int kOrderBudget = 360;

// automorphism_group only accepts groups up to this order (its output is
// still subject to kOrderBudget like any other group).
inline constexpr int kAutOrderBudget = 60;

// Isomorphism search: generating tuples longer than this abort, as does a
// search that visits more than kIsoNodeBudget extension steps.
inline constexpr int kIsoTupleCap = 4;
inline constexpr long kIsoNodeBudget = 5'000'000;

// Caller misuse: mismatched degrees, non-prime p, malformed input.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but too large for the configured budgets.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant failed; always fatal, never caught for control flow.
struct CheckError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check(bool ok, const char* msg) {
  if (!ok) throw CheckError(msg);
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

bool is_prime(int n);
std::vector<int> prime_divisors(int n);

// Largest power of p dividing n (n >= 1, p prime).
int p_part(int n, int p);

// n == p^k for some k >= 0.
bool is_p_power(int n, int p);

// n == p^k for some prime p and k >= 1.
bool is_prime_power(int n);

}  // namespace icphi
