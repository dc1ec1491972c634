#pragma once

// Verification harness: samples parameters, integrates each catalog entry
// numerically, compares with the closed form and aggregates the outcomes.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "betaquad/catalog.hpp"

namespace betaquad::verify {

enum class Status { pass, fail, quad_nonconverged, sample_error };

[[nodiscard]] const char* to_string(Status status) noexcept;

struct Outcome {
  std::string entry_id;
  std::uint64_t sample_index = 0;
  catalog::ParamSet params;
  double numeric = 0.0;
  double closed = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::size_t evaluations = 0;
  Status status = Status::sample_error;
  double elapsed_ms = 0.0;
  /// Populated for sample_error and non-converged outcomes.
  std::string detail;
};

struct RunConfig {
  std::uint64_t seed = 7;
  std::size_t samples_per_entry = 20;
  std::optional<double> rtol_override;
  double atol = 1e-12;
  /// Empty means the whole roster.
  std::vector<std::string> entry_filter;
  unsigned parallelism = 1;
  /// Requested quadrature tolerance.
  double quad_tol = quad::kDefaultTolerance;
  /// Record elapsed times; off by default so reports are reproducible.
  bool record_timings = false;

  /// Throws std::invalid_argument on bad settings and
  /// catalog::unknown_id_error on unknown filter ids.
  void validate() const;
};

struct EntrySummary {
  std::string entry_id;
  std::size_t outcomes = 0;
  std::size_t passes = 0;
  double worst_rel_err = 0.0;
  std::size_t evaluations = 0;
};

struct Report {
  /// Sorted by (entry_id, sample_index).
  std::vector<Outcome> outcomes;
  /// One row per entry id, in the order of `outcomes`.
  std::vector<EntrySummary> entries;
  std::size_t passes = 0;
  std::size_t failures = 0;
  double worst_rel_err = 0.0;
  std::size_t evaluations = 0;
  double wall_ms = 0.0;

  [[nodiscard]] bool passed() const noexcept {
    return failures == 0 && !outcomes.empty();
  }

  /// Appends the outcomes of `other`, re-sorts and recomputes the totals.
  void merge(Report other);
};

/// Effective tolerances of a record under a configuration.
[[nodiscard]] double effective_rtol(const catalog::IdentityRecord& rec,
                                    const RunConfig& cfg) noexcept;
[[nodiscard]] double effective_atol(const catalog::IdentityRecord& rec,
                                    const RunConfig& cfg) noexcept;

/// Integrates the record at `params` and classifies the result.
[[nodiscard]] Outcome evaluate(const catalog::IdentityRecord& rec,
                               const catalog::ParamSet& params,
                               const RunConfig& cfg);

/// cfg.samples_per_entry outcomes for one record, in sample order.
[[nodiscard]] std::vector<Outcome> verify_entry(
    const catalog::IdentityRecord& rec, const RunConfig& cfg);

/// All (filtered) records, running up to cfg.parallelism tasks at once.
/// The report does not depend on the parallelism level.
[[nodiscard]] Report verify_all(const RunConfig& cfg);

/// Identity suites that need no quadrature of catalog entries beyond the
/// fake-parameter pairs: reflection and duplication grids, beta symmetry,
/// the 3.249.5 duplication chain and fake-parameter invariance.
[[nodiscard]] Report cross_check_consistency(const RunConfig& cfg);

/// One JSON object per outcome, then the summary object.
void write_json_lines(std::ostream& os, const Report& report);

/// Fixed-width table, one row per entry, then a verdict line.
void write_text(std::ostream& os, const Report& report);

}  // namespace betaquad::verify
