#include "betaquad/verify.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using namespace betaquad::verify;
namespace cat = betaquad::catalog;
namespace quad = betaquad::quad;

namespace {

std::string json_report(const Report& r) {
  std::ostringstream os;
  write_json_lines(os, r);
  return os.str();
}

std::vector<nlohmann::ordered_json> parse_lines(const std::string& text) {
  std::vector<nlohmann::ordered_json> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    lines.push_back(nlohmann::ordered_json::parse(line));
  }
  return lines;
}

std::vector<std::string> keys_of(const nlohmann::ordered_json& obj) {
  std::vector<std::string> keys;
  for (auto it = obj.begin(); it != obj.end(); ++it) keys.push_back(it.key());
  return keys;
}

cat::IdentityRecord synthetic(quad::Integrand f, quad::IntegralSpec spec,
                              std::function<double(const cat::ParamSet&)> closed) {
  cat::IdentityRecord rec;
  rec.id = "synthetic";
  rec.group = cat::Group::A;
  rec.domain.params = {{.name = "a", .lo = 0.0, .hi = 1.0}};
  rec.integrand = [f](const cat::ParamSet&) { return f; };
  rec.spec = [spec](const cat::ParamSet&) { return spec; };
  rec.closed_form = std::move(closed);
  return rec;
}

}  // namespace

TEST_CASE("verify_entry produces one outcome per sample") {
  RunConfig cfg;
  cfg.seed = 42;
  const auto outcomes = verify_entry(cat::entry("3.191.3"), cfg);
  REQUIRE(outcomes.size() == 20);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    CHECK(outcomes[i].sample_index == i);
    CHECK(outcomes[i].entry_id == "3.191.3");
    CHECK(outcomes[i].status == Status::pass);
    CHECK(outcomes[i].evaluations > 0);
    CHECK(outcomes[i].elapsed_ms == 0.0);
    CHECK(outcomes[i].rel_err ==
          outcomes[i].abs_err / std::max(std::fabs(outcomes[i].closed), 1e-300));
  }
  const auto again = verify_entry(cat::entry("3.191.3"), cfg);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    CHECK(again[i].params == outcomes[i].params);
    CHECK(again[i].numeric == outcomes[i].numeric);
  }
}

TEST_CASE("zero-valued entries pass on the absolute tolerance") {
  RunConfig cfg;
  for (const auto& o : verify_entry(cat::entry("eq-11.5"), cfg)) {
    CHECK(o.closed == 0.0);
    CHECK(std::fabs(o.numeric) <= 1e-9);
    CHECK(o.status == Status::pass);
  }
  const auto pv = evaluate(cat::entry("3.313.1"), {{"mu", 0.5}}, cfg);
  CHECK(pv.status == Status::pass);
  CHECK(std::fabs(pv.numeric) <= 1e-8);
  CHECK(std::fabs(pv.closed) <= 1e-15);
}

TEST_CASE("pass rule uses atol + rtol |closed|") {
  RunConfig cfg;
  const auto& rec = cat::entry("3.191.3");
  CHECK(effective_rtol(rec, cfg) == 1e-8);
  CHECK(effective_rtol(cat::entry("eq-4.10"), cfg) == 1e-6);
  CHECK(effective_rtol(cat::entry("3.218"), cfg) == 1e-7);
  CHECK(effective_atol(rec, cfg) == 1e-12);
  CHECK(effective_atol(cat::entry("eq-11.5"), cfg) == 1e-9);

  // a closed form off by 1e-6 relative fails standard and passes a looser rtol
  auto rec_off = synthetic([](double x) { return 2 * x; },
                           quad::IntegralSpec::finite(0, 1),
                           [](const cat::ParamSet&) { return 1.0 + 1e-6; });
  const auto strict = evaluate(rec_off, {{"a", 0.5}}, cfg);
  CHECK(strict.status == Status::fail);
  CHECK(strict.abs_err == doctest::Approx(1e-6).epsilon(1e-6));
  cfg.rtol_override = 2e-6;
  CHECK(evaluate(rec_off, {{"a", 0.5}}, cfg).status == Status::pass);
}

TEST_CASE("non-convergence and sampling problems get their own status") {
  RunConfig cfg;
  auto divergent = synthetic([](const quad::Abscissa& p) { return 1 / p.from_lo; },
                             quad::IntegralSpec::finite(0, 1),
                             [](const cat::ParamSet&) { return 1.0; });
  const auto nc = evaluate(divergent, {{"a", 0.5}}, cfg);
  CHECK(nc.status == Status::quad_nonconverged);
  CHECK_FALSE(nc.detail.empty());

  auto throwing = synthetic([](double) { return 1.0; },
                            quad::IntegralSpec::finite(0, 1),
                            [](const cat::ParamSet&) -> double {
                              throw std::domain_error("no closed form here");
                            });
  const auto se = evaluate(throwing, {{"a", 0.5}}, cfg);
  CHECK(se.status == Status::sample_error);
  CHECK(se.detail == "no closed form here");

  auto tight = synthetic([](double) { return 1.0; },
                         quad::IntegralSpec::finite(0, 1),
                         [](const cat::ParamSet&) { return 1.0; });
  tight.domain.relations = {
      {.text = "never", .slack = [](const cat::ParamSet&) { return -1.0; }}};
  cfg.samples_per_entry = 2;
  const auto outcomes = verify_entry(tight, cfg);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].status == Status::sample_error);
  CHECK(outcomes[1].sample_index == 1);
}

TEST_CASE("run configuration validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.samples_per_entry = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.rtol_override = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.atol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.parallelism = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.entry_filter = {"3.191.3", "nope"};
  CHECK_THROWS_AS(cfg.validate(), cat::unknown_id_error);
}

TEST_CASE("filtered run over the fake-parameter entries") {
  RunConfig cfg;
  cfg.entry_filter = {"3.217", "3.218"};
  const Report r = verify_all(cfg);
  CHECK(r.passed());
  CHECK(r.outcomes.size() == 40);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].entry_id == "3.217");
  CHECK(r.entries[1].entry_id == "3.218");
  CHECK(r.worst_rel_err <= 1e-7);
}

TEST_CASE("reports are independent of parallelism and reruns") {
  RunConfig cfg;
  cfg.samples_per_entry = 1;
  cfg.parallelism = 1;
  const std::string serial = json_report(verify_all(cfg));
  CHECK(serial == json_report(verify_all(cfg)));
  cfg.parallelism = 6;
  CHECK(serial == json_report(verify_all(cfg)));

  cfg.samples_per_entry = 3;
  cfg.parallelism = 1;
  const std::string checks = json_report(cross_check_consistency(cfg));
  cfg.parallelism = 5;
  CHECK(checks == json_report(cross_check_consistency(cfg)));
}

TEST_CASE("full roster report totals") {
  RunConfig cfg;
  cfg.parallelism = 4;
  const Report r = verify_all(cfg);
  CHECK(r.outcomes.size() == 20 * cat::kRosterSize);
  CHECK(r.entries.size() == cat::kRosterSize);
  std::size_t outcomes = 0, passes = 0, evaluations = 0;
  for (const auto& e : r.entries) {
    outcomes += e.outcomes;
    passes += e.passes;
    evaluations += e.evaluations;
  }
  CHECK(outcomes == r.outcomes.size());
  CHECK(passes == r.passes);
  CHECK(r.passes + r.failures == r.outcomes.size());
  CHECK(evaluations == r.evaluations);
  CHECK(r.passed());
  for (const auto& o : r.outcomes) CHECK(o.status != Status::sample_error);
  CHECK(std::is_sorted(r.outcomes.begin(), r.outcomes.end(),
                       [](const Outcome& a, const Outcome& b) {
                         return a.entry_id != b.entry_id
                                    ? a.entry_id < b.entry_id
                                    : a.sample_index < b.sample_index;
                       }));
}

TEST_CASE("consistency suites") {
  RunConfig cfg;
  const Report r = cross_check_consistency(cfg);
  CHECK(r.passed());
  std::set<std::string> ids;
  for (const auto& o : r.outcomes) ids.insert(o.entry_id);
  CHECK(ids == std::set<std::string>{"check:3.249.5-chain", "check:beta-symmetry",
                                     "check:duplication", "check:fake-3.217",
                                     "check:fake-3.218", "check:reflection"});
  for (const auto& o : r.outcomes) {
    if (o.entry_id == "check:reflection") CHECK(o.params["points"] == 1000);
    if (o.entry_id == "check:duplication") CHECK(o.params["points"] == 500);
    if (o.entry_id == "check:beta-symmetry") CHECK(o.numeric == 0.0);
    if (o.entry_id.starts_with("check:fake-")) CHECK(o.abs_err <= 2e-7);
  }
}

TEST_CASE("merge keeps totals consistent") {
  RunConfig cfg;
  cfg.samples_per_entry = 2;
  cfg.entry_filter = {"eq-4.3"};
  Report a = verify_all(cfg);
  cfg.entry_filter = {"3.191.3"};
  a.merge(verify_all(cfg));
  CHECK(a.outcomes.size() == 4);
  CHECK(a.entries.size() == 2);
  CHECK(a.outcomes.front().entry_id == "3.191.3");
  CHECK(a.passes == 4);
}

TEST_CASE("JSON lines schema") {
  RunConfig cfg;
  cfg.samples_per_entry = 2;
  cfg.entry_filter = {"3.223.3", "3.248.3"};
  const auto lines = parse_lines(json_report(verify_all(cfg)));
  REQUIRE(lines.size() == 5);
  const std::vector<std::string> outcome_keys{
      "entry_id", "sample_index", "params",      "numeric", "closed",
      "abs_err",  "rel_err",      "evaluations", "status",  "elapsed"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(keys_of(lines[i]) == outcome_keys);
    CHECK(lines[i]["status"] == "pass");
    CHECK(lines[i]["params"].is_object());
    CHECK(lines[i]["elapsed"] == 0.0);
  }
  CHECK(lines[0]["params"].contains("mu"));
  CHECK(keys_of(lines[4]) ==
        std::vector<std::string>{"entries", "outcomes", "passes", "failures",
                                 "worst_rel_err", "wall_ms", "verdict"});
  CHECK(lines[4]["entries"] == 2);
  CHECK(lines[4]["outcomes"] == 4);
  CHECK(lines[4]["verdict"] == "pass");
  CHECK(lines[4]["wall_ms"] == 0.0);
}

TEST_CASE("timings are recorded only on request") {
  RunConfig cfg;
  cfg.samples_per_entry = 1;
  cfg.entry_filter = {"3.224"};
  cfg.record_timings = true;
  const Report r = verify_all(cfg);
  CHECK(r.outcomes[0].elapsed_ms > 0.0);
  CHECK(r.wall_ms > 0.0);
}

TEST_CASE("text report") {
  RunConfig cfg;
  cfg.samples_per_entry = 3;
  cfg.entry_filter = {"eq-4.3", "3.192.1"};
  std::ostringstream os;
  write_text(os, verify_all(cfg));
  const std::string text = os.str();
  CHECK(text.find("3.192.1") != std::string::npos);
  CHECK(text.find("3/3") != std::string::npos);
  CHECK(text.find("verdict PASS") != std::string::npos);

  cfg.rtol_override = 1e-300;
  cfg.atol = 1e-300;
  std::ostringstream failing;
  const Report bad = verify_all(cfg);
  write_text(failing, bad);
  REQUIRE_FALSE(bad.passed());
  CHECK(failing.str().find("verdict FAIL") != std::string::npos);
  CHECK(failing.str().find("fail: ") != std::string::npos);
}
