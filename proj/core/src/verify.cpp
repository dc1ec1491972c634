#include "betaquad/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "betaquad/specfun.hpp"

namespace betaquad::verify {

namespace sf = betaquad::specfun;
using catalog::IdentityRecord;
using catalog::ParamSet;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kRelFloor = 1e-300;
constexpr double kPi = 3.14159265358979323846;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

double relative(double abs_err, double closed) {
  return abs_err / std::max(std::fabs(closed), kRelFloor);
}

// Runs body(i) for i in [0, n) on up to `workers` threads.
template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

void sort_outcomes(std::vector<Outcome>& outcomes) {
  std::stable_sort(outcomes.begin(), outcomes.end(),
                   [](const Outcome& a, const Outcome& b) {
                     if (a.entry_id != b.entry_id) return a.entry_id < b.entry_id;
                     return a.sample_index < b.sample_index;
                   });
}

void summarize(Report& report) {
  report.entries.clear();
  report.passes = report.failures = report.evaluations = 0;
  report.worst_rel_err = 0.0;
  for (const auto& o : report.outcomes) {
    if (report.entries.empty() || report.entries.back().entry_id != o.entry_id) {
      report.entries.push_back({.entry_id = o.entry_id});
    }
    EntrySummary& row = report.entries.back();
    ++row.outcomes;
    row.evaluations += o.evaluations;
    report.evaluations += o.evaluations;
    if (o.status == Status::pass) {
      ++row.passes;
      ++report.passes;
    } else {
      ++report.failures;
    }
    // Zero-valued closed forms are judged by atol alone; their relative
    // error is meaningless and stays out of the worst-case figure.
    if (o.closed != 0.0) {
      const double r = std::isnan(o.rel_err)
                           ? std::numeric_limits<double>::infinity()
                           : o.rel_err;
      row.worst_rel_err = std::max(row.worst_rel_err, r);
      report.worst_rel_err = std::max(report.worst_rel_err, r);
    }
  }
}

Report finish(std::vector<Outcome> outcomes, Clock::time_point start,
              const RunConfig& cfg) {
  Report report;
  report.outcomes = std::move(outcomes);
  sort_outcomes(report.outcomes);
  summarize(report);
  if (cfg.record_timings) report.wall_ms = ms_since(start);
  return report;
}

}  // namespace

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::quad_nonconverged:
      return "quad_nonconverged";
    case Status::sample_error:
      return "sample_error";
  }
  return "?";
}

void RunConfig::validate() const {
  if (samples_per_entry < 1) {
    throw std::invalid_argument("samples_per_entry must be at least 1");
  }
  if (rtol_override && !(*rtol_override > 0.0 && std::isfinite(*rtol_override))) {
    throw std::invalid_argument("rtol must be a positive finite number");
  }
  if (!(atol > 0.0 && std::isfinite(atol))) {
    throw std::invalid_argument("atol must be a positive finite number");
  }
  if (!(quad_tol > 0.0 && std::isfinite(quad_tol))) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
  if (parallelism < 1) {
    throw std::invalid_argument("parallelism must be at least 1");
  }
  for (const auto& id : entry_filter) (void)catalog::entry(id);
}

void Report::merge(Report other) {
  outcomes.insert(outcomes.end(),
                  std::make_move_iterator(other.outcomes.begin()),
                  std::make_move_iterator(other.outcomes.end()));
  sort_outcomes(outcomes);
  summarize(*this);
  wall_ms += other.wall_ms;
}

double effective_rtol(const IdentityRecord& rec, const RunConfig& cfg) noexcept {
  return cfg.rtol_override.value_or(
      catalog::relative_tolerance(rec.tolerance_class));
}

double effective_atol(const IdentityRecord& rec, const RunConfig& cfg) noexcept {
  return std::max(cfg.atol, rec.atol);
}

Outcome evaluate(const IdentityRecord& rec, const ParamSet& params,
                 const RunConfig& cfg) {
  const auto start = Clock::now();
  Outcome out;
  out.entry_id = rec.id;
  out.params = params;
  try {
    out.closed = catalog::closed_form_value(rec, params);
    if (!std::isfinite(out.closed)) {
      throw std::domain_error("closed form is not finite");
    }
    const quad::IntegralSpec spec = rec.spec(params);
    const quad::QuadratureResult res =
        quad::integrate(rec.integrand(params), spec, cfg.quad_tol);
    out.numeric = res.value;
    out.evaluations = res.evaluations;
    out.abs_err = std::fabs(res.value - out.closed);
    out.rel_err = relative(out.abs_err, out.closed);
    if (!res.converged) {
      out.status = Status::quad_nonconverged;
      out.detail = quad::to_string(res.status);
    } else {
      const double bound =
          effective_atol(rec, cfg) + effective_rtol(rec, cfg) * std::fabs(out.closed);
      out.status = out.abs_err <= bound ? Status::pass : Status::fail;
    }
  } catch (const std::exception& e) {
    out.status = Status::sample_error;
    out.detail = e.what();
  }
  if (cfg.record_timings) out.elapsed_ms = ms_since(start);
  return out;
}

namespace {

Outcome sampled_outcome(const IdentityRecord& rec, std::uint64_t index,
                        const RunConfig& cfg) {
  Outcome out;
  try {
    out = evaluate(rec, catalog::sample_params(rec, cfg.seed, index), cfg);
  } catch (const std::exception& e) {
    out.entry_id = rec.id;
    out.status = Status::sample_error;
    out.detail = e.what();
  }
  out.sample_index = index;
  return out;
}

}  // namespace

std::vector<Outcome> verify_entry(const IdentityRecord& rec,
                                  const RunConfig& cfg) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(cfg.samples_per_entry);
  for (std::size_t i = 0; i < cfg.samples_per_entry; ++i) {
    outcomes.push_back(sampled_outcome(rec, i, cfg));
  }
  return outcomes;
}

Report verify_all(const RunConfig& cfg) {
  const auto start = Clock::now();
  std::vector<const IdentityRecord*> records;
  if (cfg.entry_filter.empty()) {
    for (const auto& rec : catalog::all_entries()) records.push_back(&rec);
  } else {
    for (const auto& id : cfg.entry_filter) {
      const IdentityRecord* rec = &catalog::entry(id);
      if (std::find(records.begin(), records.end(), rec) == records.end()) {
        records.push_back(rec);
      }
    }
  }
  const std::size_t per = cfg.samples_per_entry;
  std::vector<Outcome> outcomes(records.size() * per);
  parallel_for(outcomes.size(), cfg.parallelism, [&](std::size_t k) {
    outcomes[k] = sampled_outcome(*records[k / per], k % per, cfg);
  });
  return finish(std::move(outcomes), start, cfg);
}

// ------------------------------------------------------- consistency suites

namespace {

// Outcome of a grid suite: `numeric` carries the worst normalized residual.
Outcome grid_outcome(std::string id, double points, double worst,
                     double limit) {
  Outcome out;
  out.entry_id = std::move(id);
  out.params.set("points", points);
  out.numeric = worst;
  out.closed = 0.0;
  out.abs_err = worst;
  out.rel_err = relative(worst, 0.0);
  out.status = worst <= limit ? Status::pass : Status::fail;
  return out;
}

Outcome reflection_suite() {
  constexpr int n = 1000;
  double worst = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double a = static_cast<double>(i) / (n + 1);
    const double r = std::fabs(sf::reflection_residual(a)) /
                     std::fabs(kPi / sf::sin_pi(a));
    worst = std::max(worst, std::isnan(r) ? 1.0 : r);
  }
  return grid_outcome("check:reflection", n, worst, 1e-12);
}

Outcome duplication_suite() {
  constexpr int n = 500;
  double worst = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double a = 20.0 * i / n;
    const double r =
        std::fabs(sf::duplication_residual(a)) / std::fabs(sf::gamma(a + 0.5));
    worst = std::max(worst, std::isnan(r) ? 1.0 : r);
  }
  return grid_outcome("check:duplication", n, worst, 1e-12);
}

Outcome beta_symmetry_suite(std::uint64_t seed) {
  constexpr int n = 1000;
  std::mt19937_64 rng(catalog::sample_stream_seed(seed, "check:beta-symmetry", 0));
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  int mismatches = 0;
  for (int i = 0; i < n; ++i) {
    const double a = 0.05 + 9.95 * unit();
    const double b = 0.05 + 9.95 * unit();
    if (sf::beta(a, b) != sf::beta(b, a)) ++mismatches;
  }
  return grid_outcome("check:beta-symmetry", n, mismatches, 0.0);
}

Outcome chain_outcome(std::uint64_t seed, std::uint64_t index) {
  const IdentityRecord& rec = catalog::entry("3.249.5");
  Outcome out;
  out.entry_id = "check:3.249.5-chain";
  out.sample_index = index;
  try {
    out.params = catalog::sample_params(rec, seed, index);
    const double b = out.params["b"];
    out.closed = catalog::closed_form_value(rec, out.params);
    out.numeric = std::exp2(2 * b - 2) * sf::beta(b, b);
    out.abs_err = std::fabs(out.numeric - out.closed);
    out.rel_err = relative(out.abs_err, out.closed);
    out.status = out.rel_err <= 1e-12 ? Status::pass : Status::fail;
  } catch (const std::exception& e) {
    out.status = Status::sample_error;
    out.detail = e.what();
  }
  return out;
}

// Integral at two values of the fake parameter: `closed` holds the first,
// `numeric` the second. Both must also match the closed form.
Outcome fake_param_outcome(const IdentityRecord& rec, const RunConfig& cfg,
                           std::uint64_t index) {
  Outcome out;
  out.entry_id = "check:fake-" + rec.id;
  out.sample_index = index;
  try {
    const ParamSet first = catalog::sample_params(rec, cfg.seed, index);
    ParamSet second = catalog::sample_params(rec, cfg.seed + 1, index);
    second.set("p", first["p"]);
    if (!rec.domain.contains(second)) {
      throw std::domain_error("second fake-parameter sample left the domain");
    }
    out.params = first;
    out.params.set(rec.fake_param + "2", second[rec.fake_param]);
    const double expected = catalog::closed_form_value(rec, first);
    const auto r1 = quad::integrate(rec.integrand(first), rec.spec(first),
                                    cfg.quad_tol);
    const auto r2 = quad::integrate(rec.integrand(second), rec.spec(second),
                                    cfg.quad_tol);
    out.closed = r1.value;
    out.numeric = r2.value;
    out.evaluations = r1.evaluations + r2.evaluations;
    out.abs_err = std::fabs(r1.value - r2.value);
    out.rel_err = relative(out.abs_err, out.closed);
    const double rtol = cfg.rtol_override.value_or(
        catalog::relative_tolerance(catalog::ToleranceClass::combined));
    const double bound = cfg.atol + rtol * std::fabs(expected);
    const bool matches = std::fabs(r1.value - expected) <= bound &&
                         std::fabs(r2.value - expected) <= bound;
    if (!r1.converged || !r2.converged) {
      out.status = Status::quad_nonconverged;
    } else {
      out.status = out.abs_err <= 2e-7 && matches ? Status::pass : Status::fail;
    }
  } catch (const std::exception& e) {
    out.status = Status::sample_error;
    out.detail = e.what();
  }
  if (out.status != Status::pass && out.detail.empty()) {
    out.detail = "fake-parameter values disagree or miss the closed form";
  }
  return out;
}

}  // namespace

Report cross_check_consistency(const RunConfig& cfg) {
  const auto start = Clock::now();
  std::vector<const IdentityRecord*> fakes;
  for (const auto& rec : catalog::all_entries()) {
    if (!rec.fake_param.empty()) fakes.push_back(&rec);
  }
  const std::size_t per = cfg.samples_per_entry;
  // Three grid suites, the chain, then one block per fake-parameter entry.
  const std::size_t total = 3 + per + fakes.size() * per;
  std::vector<Outcome> outcomes(total);
  parallel_for(total, cfg.parallelism, [&](std::size_t k) {
    const auto t0 = Clock::now();
    if (k == 0) {
      outcomes[k] = reflection_suite();
    } else if (k == 1) {
      outcomes[k] = duplication_suite();
    } else if (k == 2) {
      outcomes[k] = beta_symmetry_suite(cfg.seed);
    } else if (k < 3 + per) {
      outcomes[k] = chain_outcome(cfg.seed, k - 3);
    } else {
      const std::size_t j = k - 3 - per;
      outcomes[k] = fake_param_outcome(*fakes[j / per], cfg, j % per);
    }
    if (cfg.record_timings) outcomes[k].elapsed_ms = ms_since(t0);
  });
  return finish(std::move(outcomes), start, cfg);
}

// ------------------------------------------------------------------ output

void write_json_lines(std::ostream& os, const Report& report) {
  for (const auto& o : report.outcomes) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : o.params.items()) params[name] = value;
    const nlohmann::ordered_json line = {
        {"entry_id", o.entry_id},       {"sample_index", o.sample_index},
        {"params", params},             {"numeric", o.numeric},
        {"closed", o.closed},           {"abs_err", o.abs_err},
        {"rel_err", o.rel_err},         {"evaluations", o.evaluations},
        {"status", to_string(o.status)}, {"elapsed", o.elapsed_ms},
    };
    os << line.dump() << '\n';
  }
  const nlohmann::ordered_json summary = {
      {"entries", report.entries.size()},
      {"outcomes", report.outcomes.size()},
      {"passes", report.passes},
      {"failures", report.failures},
      {"worst_rel_err", report.worst_rel_err},
      {"wall_ms", report.wall_ms},
      {"verdict", report.passed() ? "pass" : "fail"},
  };
  os << summary.dump() << '\n';
}

void write_text(std::ostream& os, const Report& report) {
  auto sci = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return std::string(buf);
  };
  os << std::left << std::setw(24) << "entry" << std::right << std::setw(10)
     << "passed" << std::setw(12) << "worst_rel" << std::setw(14)
     << "evaluations" << '\n';
  for (const auto& row : report.entries) {
    const std::string passed =
        std::to_string(row.passes) + "/" + std::to_string(row.outcomes);
    os << std::left << std::setw(24) << row.entry_id << std::right
       << std::setw(10) << passed << std::setw(12) << sci(row.worst_rel_err)
       << std::setw(14) << row.evaluations << '\n';
  }
  for (const auto& o : report.outcomes) {
    if (o.status == Status::pass) continue;
    os << "  " << to_string(o.status) << ": " << o.entry_id << " #"
       << o.sample_index;
    if (!o.detail.empty()) os << " (" << o.detail << ")";
    os << '\n';
  }
  os << "entries " << report.entries.size() << ", outcomes "
     << report.outcomes.size() << ", passes " << report.passes
     << ", failures " << report.failures << ", worst rel err "
     << sci(report.worst_rel_err) << ", verdict "
     << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace betaquad::verify
