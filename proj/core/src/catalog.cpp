#include "betaquad/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "json.hpp"

#include "roster.hpp"

namespace betaquad::catalog {

char to_char(Group group) noexcept {
  return static_cast<char>('A' + static_cast<int>(group));
}

const char* to_string(ToleranceClass tc) noexcept {
  switch (tc) {
    case ToleranceClass::standard:
      return "standard";
    case ToleranceClass::principal_value:
      return "principal_value";
    case ToleranceClass::combined:
      return "combined";
  }
  return "?";
}

const char* to_string(ParamKind kind) noexcept {
  return kind == ParamKind::integer ? "integer" : "real";
}

double relative_tolerance(ToleranceClass tc) noexcept {
  switch (tc) {
    case ToleranceClass::standard:
      return 1e-8;
    case ToleranceClass::principal_value:
      return 1e-6;
    case ToleranceClass::combined:
      return 1e-7;
  }
  return 1e-8;
}

// ---------------------------------------------------------------- ParamSet

void ParamSet::set(std::string_view name, double value) {
  for (auto& [n, v] : values_) {
    if (n == name) {
      v = value;
      return;
    }
  }
  values_.emplace_back(std::string(name), value);
}

bool ParamSet::contains(std::string_view name) const noexcept {
  return std::any_of(values_.begin(), values_.end(),
                     [&](const auto& kv) { return kv.first == name; });
}

double ParamSet::operator[](std::string_view name) const {
  for (const auto& [n, v] : values_) {
    if (n == name) return v;
  }
  throw std::out_of_range("parameter '" + std::string(name) + "' is not set");
}

int ParamSet::integer(std::string_view name) const {
  return static_cast<int>(std::lround((*this)[name]));
}

// ------------------------------------------------------------- ParamDomain

std::pair<double, double> ParamDomain::sampling_bounds(
    const ParamRange& range) const {
  if (range.kind == ParamKind::integer) return {range.lo, range.hi};
  const double shrink = margin * (range.hi - range.lo);
  return {range.lo_open ? range.lo + shrink : range.lo,
          range.hi_open ? range.hi - shrink : range.hi};
}

namespace {

bool is_integral(double v) { return std::isfinite(v) && v == std::round(v); }

// Range membership; `shrunk` selects the sampling region.
bool in_range(const ParamDomain& dom, const ParamRange& r, double v,
              bool shrunk) {
  if (!std::isfinite(v)) return false;
  if (r.kind == ParamKind::integer) {
    return is_integral(v) && v >= r.lo && v <= r.hi;
  }
  if (shrunk) {
    const auto [lo, hi] = dom.sampling_bounds(r);
    if (v < lo || v > hi) return false;
    const double radius = dom.margin * (r.hi - r.lo);
    return std::none_of(r.excluded.begin(), r.excluded.end(),
                        [&](double e) { return std::fabs(v - e) < radius; });
  }
  if (r.lo_open ? !(v > r.lo) : !(v >= r.lo)) return false;
  if (r.hi_open ? !(v < r.hi) : !(v <= r.hi)) return false;
  return std::none_of(r.excluded.begin(), r.excluded.end(),
                      [&](double e) { return v == e; });
}

bool holds(const ParamDomain& dom, const ParamSet& params, bool shrunk) {
  for (const auto& r : dom.params) {
    if (!params.contains(r.name)) return false;
    if (!in_range(dom, r, params[r.name], shrunk)) return false;
  }
  return std::all_of(dom.relations.begin(), dom.relations.end(),
                     [&](const Relation& rel) {
                       const double s = rel.slack(params);
                       return shrunk ? s > rel.min_slack : s > 0.0;
                     });
}

}  // namespace

bool ParamDomain::contains(const ParamSet& params) const {
  return holds(*this, params, true);
}

bool ParamDomain::admits(const ParamSet& params) const {
  return holds(*this, params, false);
}

void ParamDomain::validate() const {
  for (const auto& r : params) {
    const auto [lo, hi] = sampling_bounds(r);
    if (!(lo <= hi)) {
      throw std::logic_error("parameter '" + r.name +
                             "' has an empty range after the margin shrink");
    }
  }
}

// ------------------------------------------------------------------ roster

namespace {

std::vector<IdentityRecord> build_roster() {
  std::vector<IdentityRecord> all;
  all.reserve(kRosterSize);
  roster::add_group_a(all);
  roster::add_group_b(all);
  roster::add_group_c(all);
  roster::add_group_d(all);
  roster::add_group_e(all);
  roster::add_group_f(all);
  roster::add_group_g(all);
  roster::add_group_h(all);
  roster::add_group_i(all);
  roster::add_group_j(all);

  std::unordered_set<std::string> seen;
  for (const auto& rec : all) {
    if (!seen.insert(rec.id).second) {
      throw std::logic_error("duplicate catalog id " + rec.id);
    }
    rec.domain.validate();
  }
  if (all.size() != kRosterSize) {
    throw std::logic_error("catalog size " + std::to_string(all.size()) +
                           " differs from kRosterSize");
  }
  return all;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

const std::vector<IdentityRecord>& all_entries() {
  static const std::vector<IdentityRecord> roster = build_roster();
  return roster;
}

const IdentityRecord& entry(std::string_view id) {
  const auto& all = all_entries();
  for (const auto& rec : all) {
    if (rec.id == id) return rec;
  }
  // Prefix matches rank ahead of plain edit-distance neighbours.
  std::vector<std::tuple<bool, std::size_t, std::string>> scored;
  for (const auto& rec : all) {
    const std::size_t d = edit_distance(id, rec.id);
    const bool prefix = id.size() >= 3 && (rec.id.starts_with(id) ||
                                           id.starts_with(rec.id));
    if (d <= 2 || prefix) scored.emplace_back(!prefix, d, rec.id);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> near;
  for (std::size_t i = 0; i < scored.size() && i < 5; ++i) {
    near.push_back(std::get<2>(scored[i]));
  }
  std::string msg = "unknown catalog id '" + std::string(id) + "'";
  if (!near.empty()) {
    msg += "; did you mean";
    for (std::size_t i = 0; i < near.size(); ++i) {
      msg += (i == 0 ? " " : ", ") + near[i];
    }
    msg += "?";
  }
  throw unknown_id_error(msg, std::move(near));
}

// ---------------------------------------------------------------- sampling

std::uint64_t sample_stream_seed(std::uint64_t seed, std::string_view id,
                                 std::uint64_t index) noexcept {
  // FNV-1a over the id, then splitmix64 finalization of the mix.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ h) ^ index);
}

ParamSet sample_params(const IdentityRecord& rec, std::uint64_t seed,
                       std::uint64_t index) {
  std::mt19937_64 rng(sample_stream_seed(seed, rec.id, index));
  // Explicit mapping instead of std::uniform_real_distribution, whose output
  // differs between standard libraries.
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const ParamDomain& dom = rec.domain;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ParamSet params;
    for (const auto& r : dom.params) {
      double v;
      if (r.kind == ParamKind::integer) {
        const double count = r.hi - r.lo + 1;
        v = r.lo + std::min(std::floor(unit() * count), count - 1);
      } else {
        const auto [lo, hi] = dom.sampling_bounds(r);
        v = lo + unit() * (hi - lo);
      }
      params.set(r.name, v);
    }
    if (dom.contains(params)) return params;
  }
  throw domain_too_tight_error("no admissible parameters for " + rec.id +
                               " after 1000 attempts");
}

ParamSet reference_params(const IdentityRecord& rec) {
  ParamSet params;
  for (const auto& r : rec.domain.params) {
    const auto [lo, hi] = rec.domain.sampling_bounds(r);
    double mid = 0.5 * (lo + hi);
    if (r.kind == ParamKind::integer) mid = std::round(mid);
    params.set(r.name, mid);
  }
  if (rec.domain.contains(params)) return params;
  return sample_params(rec, 0, 0);
}

double closed_form_value(const IdentityRecord& rec, const ParamSet& params) {
  if (!rec.domain.admits(params)) {
    throw std::domain_error("parameters outside the validity domain of " +
                            rec.id);
  }
  return rec.closed_form(params);
}

// ------------------------------------------------------------ slope audit

double endpoint_slope(const IdentityRecord& rec, const ParamSet& params,
                      Endpoint end) {
  const quad::IntegralSpec spec = rec.spec(params);
  const bool lower = end == Endpoint::lower;
  if (lower ? !spec.has_finite_lo() : !spec.has_finite_hi()) {
    throw std::invalid_argument("endpoint_slope: endpoint of " + rec.id +
                                " is not finite");
  }
  const quad::Integrand f = rec.integrand(params);
  const double width = spec.hi - spec.lo;  // inf on half-lines
  auto at = [&](double d) {
    const double other = width - d;
    return lower ? quad::Abscissa{spec.lo + d, d, other}
                 : quad::Abscissa{spec.hi - d, other, d};
  };
  static constexpr double kDistances[] = {1e-200, 1e-150, 1e-100, 1e-60,
                                          1e-30,  1e-12,  1e-9,   1e-7};
  const double ratio = 10.0;
  for (double d : kDistances) {
    const double f1 = std::fabs(f(at(d)));
    const double f2 = std::fabs(f(at(ratio * d)));
    if (f1 > 0.0 && f2 > 0.0 && std::isfinite(f1) && std::isfinite(f2)) {
      return std::log(f2 / f1) / std::log(ratio);
    }
  }
  return std::nan("");
}

// -------------------------------------------------------------------- JSON

namespace {

std::string format_bound(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

}  // namespace

std::string catalog_json() {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& rec : all_entries()) {
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    std::vector<std::string> relations;
    for (const auto& r : rec.domain.params) {
      params.push_back({{"name", r.name},
                        {"kind", to_string(r.kind)},
                        {"lo", r.lo},
                        {"hi", r.hi}});
      for (double e : r.excluded) {
        relations.push_back(r.name + " != " + format_bound(e));
      }
    }
    for (const auto& rel : rec.domain.relations) relations.push_back(rel.text);
    doc.push_back({{"id", rec.id},
                   {"group", std::string(1, to_char(rec.group))},
                   {"citation", rec.citation},
                   {"params", params},
                   {"relations", relations},
                   {"tolerance_class", to_string(rec.tolerance_class)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace betaquad::catalog
