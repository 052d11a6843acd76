#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "distdom/domination.hpp"
#include "distdom/independence.hpp"
#include "distdom/instances.hpp"
#include "distdom/oracles.hpp"
#include "distdom/ordering.hpp"

namespace distdom {

struct AnalyzeOptions {
  std::optional<int> r;                    // overrides the instance radius
  OrderingStrategy strategy = OrderingStrategy::Degeneracy;  // when the instance has no ordering
  SweepOrder sweep = SweepOrder::Augmentation;
  std::uint64_t seed = 7;
  std::optional<MatchingStrategy> matching;  // default: exact when it fits, else threshold+greedy
  std::optional<NumericMode> mode;           // default: exact below `exact_below` vertices
  int exact_below = 200;
  int verify_below = 2000;                   // exhaustive (DIST) check up to this size
  bool use_orientation = true;               // r = 1 with a certified orientation
  bool oracles = true;
  OracleBudget budget = OracleBudget::from_env();
  std::uint64_t lower_bound_nodes = 2'000'000;  // gamma lower-bound search beyond the budget
  int lower_bound_below = 200;
  MatchingLimits matching_limits;
};

/// Raw measurements of one pipeline run. Pass/fail verdicts are never stored;
/// evaluate_checks derives them from these numbers.
struct ChainReport {
  std::string id;
  int n = 0;
  std::size_t m = 0;
  int r = 0;
  NumericMode mode = NumericMode::Exact;
  std::string ordering_source;
  std::string augmentation_source;
  std::string error_stage;  // nonempty when a stage aborted
  std::string error;

  // Ordering profile and its augmentations.
  std::vector<int> wcol;            // wcol[k] of the ordering, k = 0..2r
  std::vector<int> delta_ordering;  // Delta_k of the ordering augmentation at radius 2r
  std::vector<int> delta;           // Delta profile of the rounding augmentation
  std::optional<std::size_t> aug_violations;    // rounding augmentation; nullopt if not verified
  std::optional<std::size_t> aug2r_violations;
  std::string first_violation;
  std::optional<int> orientation_d;  // certified orientation bound, when used

  std::int64_t a = 0;
  Rational gamma_star, alpha_star;
  double gamma_star_f = 0, alpha_star_f = 0;

  std::size_t x0_size = 0, x_size = 0;
  bool x_dominating = false;

  std::string matching;
  bool matching_exact = false;
  int k = 0;
  std::size_t y_size = 0;
  int y_max_ball = 0;
  int max_out_count = 0;
  std::int64_t d = 0;
  std::size_t y1_size = 0;
  bool y1_independent = false;
  int conflict_max_indegree = 0;
  std::size_t conflict_unoriented = 0;

  std::optional<int> gamma, alpha_2r, alpha_2rb;
  std::optional<int> gamma_lower;  // proven lower bound when the exact oracle is out of budget

  struct Timing {
    std::string stage;
    double ms;
  };
  std::vector<Timing> timings;
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

/// Inequalities that apply to the report (skipped ones are omitted).
std::vector<Check> evaluate_checks(const ChainReport& report);
bool all_pass(const ChainReport& report);

ChainReport analyze(const CorpusInstance& instance, const AnalyzeOptions& options = {});

/// Runs `analyze` on every instance with `workers` threads; results keep the
/// input order.
std::vector<ChainReport> analyze_all(const std::vector<CorpusInstance>& instances, const AnalyzeOptions& options,
                                     int workers);

nlohmann::json report_to_json(const ChainReport& report, bool with_timings = true);

/// Versioned CSV: a "# distdom-chain v1" comment, a header row, one row per
/// report. Timing columns come last.
std::string csv_header(bool with_timings = true);
std::string csv_row(const ChainReport& report, bool with_timings = true);

}  // namespace distdom
