#pragma once

// Machine-checkable roster of beta-function integral identities.
//
// Each record pairs an integrand and its integral shape with a closed-form
// right-hand side built on specfun, plus the parameter region where both the
// integral converges and the closed form is finite.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betaquad/quad.hpp"

namespace betaquad::catalog {

enum class Group { A, B, C, D, E, F, G, H, I, J };

enum class ToleranceClass { standard, principal_value, combined };

enum class ParamKind { real, integer };

[[nodiscard]] char to_char(Group group) noexcept;
[[nodiscard]] const char* to_string(ToleranceClass tc) noexcept;
[[nodiscard]] const char* to_string(ParamKind kind) noexcept;

/// Relative tolerance of a class: 1e-8, 1e-6 and 1e-7 respectively.
[[nodiscard]] double relative_tolerance(ToleranceClass tc) noexcept;

/// An assignment of values to named parameters, in declaration order.
class ParamSet {
 public:
  ParamSet() = default;
  ParamSet(std::initializer_list<std::pair<std::string, double>> values)
      : values_(values) {}

  void set(std::string_view name, double value);
  [[nodiscard]] bool contains(std::string_view name) const noexcept;
  /// Throws std::out_of_range for undeclared names.
  [[nodiscard]] double operator[](std::string_view name) const;
  [[nodiscard]] int integer(std::string_view name) const;

  [[nodiscard]] std::span<const std::pair<std::string, double>> items() const {
    return values_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  std::vector<std::pair<std::string, double>> values_;
};

struct ParamRange {
  std::string name;
  ParamKind kind = ParamKind::real;
  double lo = 0.0;
  double hi = 1.0;
  bool lo_open = true;
  bool hi_open = false;
  /// Removable points of the closed form carved out with the margin radius.
  std::vector<double> excluded;
};

/// Strict constraint between parameters: holds when slack(params) exceeds
/// min_slack.
struct Relation {
  std::string text;
  std::function<double(const ParamSet&)> slack;
  double min_slack = 0.0;
};

struct ParamDomain {
  std::vector<ParamRange> params;
  std::vector<Relation> relations;
  double margin = 0.05;

  /// Lower/upper sampling bounds after the margin shrink of open ends.
  [[nodiscard]] std::pair<double, double> sampling_bounds(
      const ParamRange& range) const;

  /// True when every range (margin-shrunk, carve-outs removed) and every
  /// relation, with its minimum slack, holds. This is the sampling region.
  [[nodiscard]] bool contains(const ParamSet& params) const;

  /// True on the unshrunk validity domain: ranges with their own open/closed
  /// ends, excluded points removed exactly, relations with positive slack.
  [[nodiscard]] bool admits(const ParamSet& params) const;

  /// Throws std::logic_error if a range is empty after shrinking.
  void validate() const;
};

struct IdentityRecord {
  std::string id;
  Group group = Group::A;
  std::string citation;
  ParamDomain domain;
  /// For principal-value records (poles declared by `spec`) this is the
  /// pole-free factor g with f(x) = g(x) / prod (x - pole).
  std::function<quad::Integrand(const ParamSet&)> integrand;
  std::function<quad::IntegralSpec(const ParamSet&)> spec;
  std::function<double(const ParamSet&)> closed_form;
  ToleranceClass tolerance_class = ToleranceClass::standard;
  /// Absolute tolerance floor for identities whose value is zero.
  double atol = 0.0;
  /// Name of the parameter a scaling removes, when there is one.
  std::string fake_param;

  [[nodiscard]] bool is_principal_value(const ParamSet& params) const {
    return !spec(params).poles.empty();
  }
};

class unknown_id_error : public std::out_of_range {
 public:
  unknown_id_error(const std::string& what, std::vector<std::string> near)
      : std::out_of_range(what), near_matches_(std::move(near)) {}
  [[nodiscard]] const std::vector<std::string>& near_matches() const noexcept {
    return near_matches_;
  }

 private:
  std::vector<std::string> near_matches_;
};

class domain_too_tight_error : public std::runtime_error {
 public:
  explicit domain_too_tight_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Number of records in the roster.
inline constexpr std::size_t kRosterSize = 80;

/// The full immutable roster, in section order. Ids are unique.
[[nodiscard]] const std::vector<IdentityRecord>& all_entries();

/// Lookup by id; throws unknown_id_error listing near matches.
[[nodiscard]] const IdentityRecord& entry(std::string_view id);

/// Deterministic sample for (id, seed, index): reals uniform on the
/// margin-shrunk ranges, integers uniform; resampled until every relation
/// holds (at most 1000 attempts, then domain_too_tight_error).
[[nodiscard]] ParamSet sample_params(const IdentityRecord& rec,
                                     std::uint64_t seed, std::uint64_t index);

/// A fixed point near the middle of the validity domain: range midpoints,
/// falling back to sample (seed 0, index 0) when those violate a relation.
[[nodiscard]] ParamSet reference_params(const IdentityRecord& rec);

/// The closed-form right-hand side; throws on params outside the domain.
[[nodiscard]] double closed_form_value(const IdentityRecord& rec,
                                       const ParamSet& params);

enum class Endpoint { lower, upper };

/// Log-log slope of |integrand| approaching a finite endpoint, measured at
/// the smallest distances where the integrand is representable and nonzero.
/// Returns NaN when no usable pair of distances exists.
[[nodiscard]] double endpoint_slope(const IdentityRecord& rec,
                                    const ParamSet& params, Endpoint end);

/// The roster as the catalog.json document.
[[nodiscard]] std::string catalog_json();

/// Stable 64-bit seed for the sample stream of (seed, id, index).
[[nodiscard]] std::uint64_t sample_stream_seed(std::uint64_t seed,
                                               std::string_view id,
                                               std::uint64_t index) noexcept;

}  // namespace betaquad::catalog
