#pragma once

// Batch verification over a corpus, and the two report renderers.  The
// engine produces one verdict per (group, statement) pair; renderers never
// include wall-clock times, so repeated runs with the same configuration
// emit byte-identical reports.  Timings are kept in the report object for
// the harness to log elsewhere.

#include <string>
#include <vector>

#include "icphi/corpus.hpp"
#include "icphi/verify.hpp"

namespace icphi {

struct RunConfig {
  int max_order = 64;
  std::string corpus_source = "builtin";
  // Empty means the full catalogue.
  std::vector<StatementId> statements = {};
  // Number of worker threads; groups are distributed, results are merged
  // in corpus order, so the report does not depend on this.
  int jobs = 1;
};

struct VerdictRow {
  std::string group;
  int order = 0;
  Verdict verdict;
};

struct StatementTally {
  StatementId statement;
  int satisfied = 0;
  int vacuous = 0;
  int not_satisfied = 0;
  int verified = 0;
  int violated = 0;
  // Total time spent in this statement's checker across all groups.
  double seconds = 0.0;
};

struct RunReport {
  RunConfig config;
  int group_count = 0;
  // Sorted by corpus position (order, then name), statements in
  // catalogue order within each group.
  std::vector<VerdictRow> rows;
  std::vector<StatementTally> tallies;
  std::vector<std::string> notices;

  int violations() const;
};

// Runs every configured statement against every corpus member.  A group
// whose analysis blows a budget contributes not-satisfied verdicts carrying
// the budget message instead of aborting the run.
RunReport run_verification(const Corpus& corpus, const RunConfig& config);

std::string render_text(const RunReport& report);

// Versioned machine-readable form (top-level schema_version field).
std::string render_json(const RunReport& report);

}  // namespace icphi
