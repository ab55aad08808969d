#include <set>

#include "doctest.h"
#include "wignerlift/error.hpp"
#include "wignerlift/harness.hpp"

using namespace wignerlift;

namespace {

TrialPlan quick_plan() {
  TrialPlan plan;
  plan.trials = 6;
  return plan;
}

}  // namespace

TEST_CASE("proposition ids parse in full and short form") {
  for (PropositionId id : all_propositions()) {
    CHECK(parse_proposition(to_string(id)) == id);
  }
  CHECK(parse_proposition("ADD1") == PropositionId::MeasurementIndependence);
  CHECK(parse_proposition("s6") == PropositionId::FtpgLift);
  CHECK(parse_proposition("EQ3") == PropositionId::ProbabilityPreservation);
  CHECK_THROWS_AS(parse_proposition("S4"), Error);
}

TEST_CASE("plan validation") {
  const auto code = [](const TrialPlan& p) {
    try {
      p.validate();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  TrialPlan empty;
  empty.propositions.clear();
  CHECK(code(empty) == ErrorCode::InvalidPlan);
  TrialPlan zero_trials;
  zero_trials.trials = 0;
  CHECK(code(zero_trials) == ErrorCode::InvalidPlan);
  TrialPlan big;
  big.dims = {2, 17};
  CHECK(code(big) == ErrorCode::InvalidPlan);
  TrialPlan bad_tol;
  bad_tol.tolerances.eq_tol = 2.0;
  CHECK(code(bad_tol) == ErrorCode::InvalidPlan);
  CHECK_THROWS_AS(run_suite(empty), Error);
}

TEST_CASE("every proposition passes on valid instances") {
  const VerificationReport report = run_suite(quick_plan());
  CHECK(report.propositions.size() == 10);
  for (const auto& p : report.propositions) {
    INFO(to_string(p.id), " ", p.detail);
    CHECK(p.pass);
    CHECK(p.trials == 6);
    CHECK(p.max_residual < 1e-9);
  }
  CHECK(report.pass());
}

TEST_CASE("negative controls cover every proposition and are all detected") {
  std::set<std::string> generators;
  std::set<PropositionId> covered;
  for (const auto& c : negative_controls()) {
    generators.insert(c.generator);
    covered.insert(c.proposition);
  }
  CHECK(generators.size() == 10);
  CHECK(covered.size() == 10);

  TrialPlan plan = quick_plan();
  plan.trials = 2;
  plan.negative_controls = true;
  const VerificationReport report = run_suite(plan);
  for (const auto& c : report.controls) {
    INFO(c.generator, " -> ", to_string(c.proposition), ": ", c.detail);
    CHECK(c.detected);
  }
  CHECK(report.generators_detected() == 10);
  CHECK(report.generators_total() == 10);
  CHECK(report.pass());
}

TEST_CASE("controls follow the proposition selection") {
  TrialPlan plan = quick_plan();
  plan.trials = 1;
  plan.negative_controls = true;
  plan.propositions = {PropositionId::Totality};
  const auto report = run_suite(plan);
  REQUIRE(report.controls.size() == 1);
  CHECK(report.controls[0].generator == "zeroed-tensor-slice");
}

TEST_CASE("reports are deterministic apart from timing") {
  TrialPlan plan = quick_plan();
  plan.negative_controls = true;
  const auto first = report_to_json(run_suite(plan), false).dump();
  plan.workers = 4;
  const auto second = report_to_json(run_suite(plan), false).dump();
  CHECK(first == second);
}

TEST_CASE("report JSON round-trips") {
  TrialPlan plan = quick_plan();
  plan.trials = 2;
  plan.negative_controls = true;
  const auto report = run_suite(plan);
  const auto j = report_to_json(report);
  CHECK(j["schema"] == 1);
  const auto back = report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(report_to_json(back) == j);
}

TEST_CASE("run_proposition restricts the suite") {
  TrialPlan plan = quick_plan();
  const auto report = run_proposition(PropositionId::MeasurementIndependence, plan);
  REQUIRE(report.propositions.size() == 1);
  CHECK(report.propositions[0].pass);
  CHECK(report.propositions[0].max_residual < 1e-12);
}

TEST_CASE("adding a proposition leaves other instances untouched") {
  TrialPlan one = quick_plan();
  one.propositions = {PropositionId::CompositeTheorem};
  TrialPlan two = quick_plan();
  two.propositions = {PropositionId::Totality, PropositionId::CompositeTheorem};
  const auto a = run_suite(one).propositions.at(0);
  const auto b = run_suite(two).propositions.at(1);
  CHECK(a.max_residual == b.max_residual);
  CHECK(a.worst_seed == b.worst_seed);
}

TEST_CASE("verdicts are stable across master seeds") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TrialPlan plan = quick_plan();
    plan.trials = 4;
    plan.seed = seed * 7919 + 1;
    const auto report = run_suite(plan);
    for (const auto& p : report.propositions) {
      INFO("seed ", plan.seed, " ", to_string(p.id), " ", p.detail);
      CHECK(p.pass);
    }
  }
}

TEST_CASE("text report is line-oriented") {
  TrialPlan plan = quick_plan();
  plan.trials = 1;
  plan.propositions = {PropositionId::Totality};
  const std::string text = report_to_text(run_suite(plan));
  CHECK(text.find("PROP S3-totality PASS residual=") != std::string::npos);
  CHECK(text.find("OVERALL PASS") != std::string::npos);
}
