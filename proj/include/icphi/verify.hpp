#pragma once

// The statement catalogue and its verification engine.  Each statement is an
// implication checked against one concrete group: decide whether the
// hypothesis holds there, and if it does, test the conclusion.  A Violated
// verdict means the engine found a counterexample to a proved statement,
// which is always a bug somewhere and is treated as fatal by the harness.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icphi/analysis.hpp"
#include "icphi/group.hpp"

namespace icphi {

enum class StatementId {
  T11,
  T12,
  T13,
  T14,
  T15,
  T16,
  T17,
  T18,
  T19,
  L01,
  L02,
  L03,
  L04,
  L05,
  L06,
  L07,
  L08,
  L09,
  L10,
  L11,
  L12,
  L13,
  L14,
  L15,
  L16,
  L17,
  L18,
};

const std::vector<StatementId>& all_statements();

const char* to_string(StatementId s);
std::optional<StatementId> statement_from_string(std::string_view name);

// One-line description of what the statement claims.
const char* statement_summary(StatementId s);

// Vacuous is reserved for the statements whose hypothesis includes an
// existence clause (a nontrivial n-maximal subgroup); everything else
// degrades to NotSatisfied when the hypothesis fails.
enum class Hypothesis { Satisfied, Vacuous, NotSatisfied };

// NotEvaluated whenever the hypothesis did not hold.
enum class Conclusion { Verified, Violated, NotEvaluated };

const char* to_string(Hypothesis h);
const char* to_string(Conclusion c);

struct Verdict {
  StatementId statement;
  Hypothesis hypothesis = Hypothesis::NotSatisfied;
  Conclusion conclusion = Conclusion::NotEvaluated;
  // Which subgroup or parameter decided the verdict, for the report.
  std::string witness = {};
};

// The central predicate, standalone: H n [H,G] <= Phi(H), with Phi(H)
// computed from H's own subgroup lattice.
bool is_icphi_subgroup(const Group& g, const Subgroup& h);

// Runs one statement against the analyzed group.  A BudgetError inside a
// checker is reported as a NotSatisfied verdict carrying the budget message,
// never as a crash.
Verdict verify_statement(const Analysis& a, StatementId s);

// Every statement, in catalogue order.
std::vector<Verdict> verify_all(const Analysis& a);

}  // namespace icphi
