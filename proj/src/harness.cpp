#include "wignerlift/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "wignerlift/controls.hpp"
#include "wignerlift/error.hpp"
#include "wignerlift/lift.hpp"
#include "wignerlift/projective.hpp"
#include "wignerlift/tensor_factor.hpp"

namespace wignerlift {

namespace {

constexpr std::array<std::string_view, 10> kIds = {
    "S1-single-born",
    "S2-span-surjectivity",
    "S3-totality",
    "S5-statistical-independence",
    "S6-ftpg-lift",
    "S7-bilinearity",
    "S8-basis-carryover",
    "T1-composite-theorem",
    "ADD1-measurement-independence",
    "EQ3-probability-preservation",
};

constexpr int kMaxLiftDim = 8;
constexpr int kMaxProductDim = 36;
// Random samples per instance inside each check.
constexpr std::size_t kInnerSamples = 8;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Instance {
  int dim = 2;
  std::pair<int, int> dims{2, 2};
  std::uint64_t seed = 0;
  ToleranceConfig tol;
};

struct TrialOutcome {
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

TrialOutcome from_check(const CheckReport& r) { return {r.pass, r.residual, r.detail}; }

TrialOutcome worse(TrialOutcome a, const TrialOutcome& b) {
  const bool take_b = b.residual > a.residual || (!b.pass && a.pass);
  const bool pass = a.pass && b.pass;
  if (take_b) a = b;
  a.pass = pass;
  return a;
}

BilinearComposition random_rotated(const Instance& in, Rng& rng) {
  const auto [da, db] = in.dims;
  return BilinearComposition::rotated(da, db, random_unitary(da * db, rng));
}

TrialOutcome run_lift_trial(const Instance& in) {
  Rng rng(in.seed);
  const ComplexMatrix u = random_unitary(in.dim, rng);
  const bool conjugate = (in.seed >> 7) & 1U;
  const RayMapOracle map = RayMapOracle::matrix_induced(u, conjugate, in.tol);
  LiftOptions options;
  options.tol = in.tol;
  options.validation_seed = mix64(in.seed);
  const SemilinearLift l = lift(map, in.dim, in.dim, options);
  if (l.antilinear != conjugate) {
    return {false, 1.0, "misclassified " + std::string(conjugate ? "antilinear" : "linear") +
                            " oracle in dim " + std::to_string(in.dim)};
  }
  const PreservationReport verified = verify_lift(l, map, kInnerSamples, mix64(in.seed + 1), in.tol);
  const double generator_gap = phase_aligned_deviation(l.matrix, u);
  const double residual = std::max({generator_gap, l.residual, verified.max_abs_deviation});
  std::ostringstream msg;
  msg << "dim " << in.dim << (conjugate ? " antilinear" : " linear")
      << ": generator gap " << generator_gap << ", verify " << verified.max_abs_deviation;
  return {verified.pass && residual < in.tol.eq_tol, residual, msg.str()};
}

TrialOutcome run_composite_trial(const Instance& in) {
  Rng rng(in.seed);
  const auto [da, db] = in.dims;
  const ComplexMatrix u = random_unitary(da * db, rng);
  IsomorphismOptions options;
  options.tol = in.tol;
  options.trials = kInnerSamples;
  options.seed = mix64(in.seed);
  const IsomorphismResult iso =
      construct_isomorphism(BilinearComposition::rotated(da, db, u), options);
  const double generator_gap = (iso.iso - u).cwiseAbs().maxCoeff();
  const double residual =
      std::max({generator_gap, iso.unitarity_residual, iso.factorization_residual});
  std::ostringstream msg;
  msg << "dims (" << da << "," << db << "): iso gap " << generator_gap << ", unitarity "
      << iso.unitarity_residual << ", factorization " << iso.factorization_residual;
  return {residual < in.tol.eq_tol, residual, msg.str()};
}

TrialOutcome run_trial(PropositionId id, const Instance& in) {
  const std::uint64_t inner_seed = mix64(in.seed ^ 0xa5a5a5a5ULL);
  switch (id) {
    case PropositionId::SingleBorn: {
      Rng rng(in.seed);
      return from_check(check_single_system_born(random_rotated(in, rng), kInnerSamples,
                                                 inner_seed, in.tol));
    }
    case PropositionId::SpanSurjectivity: {
      Rng rng(in.seed);
      return from_check(check_span_surjectivity(random_rotated(in, rng), in.tol));
    }
    case PropositionId::Totality: {
      Rng rng(in.seed);
      return from_check(check_totality(random_rotated(in, rng), kInnerSamples, inner_seed, in.tol));
    }
    case PropositionId::StatisticalIndependence: {
      Rng rng(in.seed);
      const IndependenceReport r =
          check_composite_independence(random_rotated(in, rng), kInnerSamples, inner_seed, in.tol);
      return worse(from_check(r.a_side), from_check(r.b_side));
    }
    case PropositionId::FtpgLift:
      return run_lift_trial(in);
    case PropositionId::Bilinearity: {
      Rng rng(in.seed);
      return from_check(check_bilinearity(CompositionOracle::wrap(random_rotated(in, rng)),
                                          kInnerSamples, inner_seed, in.tol));
    }
    case PropositionId::BasisCarryover: {
      Rng rng(in.seed);
      const BasisReport r = map_basis(random_rotated(in, rng), in.tol);
      std::ostringstream msg;
      msg << r.vectors.size() << " basis images, max |Gram - I| = " << r.gram_deviation;
      return {r.pass, r.gram_deviation, msg.str()};
    }
    case PropositionId::CompositeTheorem:
      return run_composite_trial(in);
    case PropositionId::MeasurementIndependence: {
      const auto [da, db] = in.dims;
      return from_check(
          check_composite_independence(da, db, kInnerSamples, in.seed, in.tol).factorization);
    }
    case PropositionId::ProbabilityPreservation: {
      Rng rng(in.seed);
      const BilinearComposition m = random_rotated(in, rng);
      const TrialOutcome product =
          from_check(check_probability_product(m, kInnerSamples, inner_seed, in.tol));
      const RayMapOracle slice =
          RayMapOracle::composite(m, random_state(m.dim_b(), rng), FrozenSlot::B);
      const PreservationReport p =
          check_probability_preservation(slice, m.dim_a(), kInnerSamples, mix64(inner_seed), in.tol);
      return worse(product, {p.pass, p.max_abs_deviation,
                             "M_b preservation deviation " + std::to_string(p.max_abs_deviation)});
    }
  }
  throw Error(ErrorCode::UnknownProposition, "unregistered proposition");
}

std::vector<int> instance_dims(PropositionId id, const TrialPlan& plan) {
  std::vector<int> out;
  for (int d : plan.dims) out.push_back(id == PropositionId::FtpgLift ? std::min(d, kMaxLiftDim) : d);
  return out;
}

std::vector<std::pair<int, int>> instance_pairs(const TrialPlan& plan) {
  std::vector<std::pair<int, int>> out;
  for (int da : plan.dims) {
    for (int db : plan.dims) {
      if (da * db <= kMaxProductDim) out.emplace_back(da, db);
    }
  }
  if (out.empty()) {
    const int smallest = *std::min_element(plan.dims.begin(), plan.dims.end());
    out.emplace_back(smallest, smallest);
  }
  return out;
}

PropositionResult evaluate_proposition(PropositionId id, const TrialPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  const auto dims = instance_dims(id, plan);
  const auto pairs = instance_pairs(plan);
  PropositionResult result;
  result.id = id;
  result.pass = true;
  double worst = -1.0;
  std::string first_failure;
  for (std::size_t t = 0; t < plan.trials; ++t) {
    Instance in;
    in.seed = derive_seed(plan.seed, to_string(id), t);
    in.dim = dims[t % dims.size()];
    in.dims = pairs[t % pairs.size()];
    in.tol = plan.tolerances;
    TrialOutcome outcome;
    try {
      outcome = run_trial(id, in);
    } catch (const Error& e) {
      outcome = {false, 1.0, e.what()};
    }
    if (!std::isfinite(outcome.residual)) outcome.residual = 1.0;
    ++result.trials;
    if (outcome.residual > worst) {
      worst = outcome.residual;
      result.worst_seed = in.seed;
      if (result.pass) result.detail = outcome.detail;
    }
    if (!outcome.pass && result.pass) {
      result.pass = false;
      result.detail = "trial " + std::to_string(t) + ": " + outcome.detail;
    }
  }
  result.max_residual = std::max(worst, 0.0);
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

template <class Fn>
std::pair<bool, std::string> expect_error(ErrorCode expected, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.code() == expected, e.what()};
  }
  return {false, "accepted: no error raised"};
}

std::pair<bool, std::string> expect_fail(const CheckReport& r) { return {!r.pass, r.detail}; }

std::vector<NegativeControl> build_controls() {
  using P = PropositionId;
  std::vector<NegativeControl> out;

  out.push_back({"constant-ray-map", P::ProbabilityPreservation,
                 [](const ToleranceConfig& tol, std::uint64_t seed) -> std::pair<bool, std::string> {
                   const auto r = check_probability_preservation(controls::constant_ray_map(3), 3,
                                                                 16, seed, tol);
                   return {!r.pass && r.max_abs_deviation > 0.5,
                           "deviation " + std::to_string(r.max_abs_deviation)};
                 }});
  out.push_back({"constant-ray-map", P::FtpgLift, [](const ToleranceConfig& tol, std::uint64_t) {
                   LiftOptions o;
                   o.tol = tol;
                   return expect_error(ErrorCode::NotProbabilityPreserving,
                                       [&] { lift(controls::constant_ray_map(3), 3, 3, o); });
                 }});
  out.push_back({"perturbed-unitary", P::ProbabilityPreservation,
                 [](const ToleranceConfig& tol, std::uint64_t seed) -> std::pair<bool, std::string> {
                   const auto r = check_probability_preservation(
                       controls::perturbed_unitary_map(3, seed), 3, 16, seed, tol);
                   return {!r.pass && r.max_abs_deviation > 1e-4,
                           "deviation " + std::to_string(r.max_abs_deviation)};
                 }});
  out.push_back({"perturbed-unitary", P::FtpgLift,
                 [](const ToleranceConfig& tol, std::uint64_t seed) {
                   LiftOptions o;
                   o.tol = tol;
                   return expect_error(ErrorCode::NotProbabilityPreserving, [&] {
                     lift(controls::perturbed_unitary_map(3, seed), 3, 3, o);
                   });
                 }});
  out.push_back({"zeroed-tensor-slice", P::Totality,
                 [](const ToleranceConfig& tol, std::uint64_t seed) -> std::pair<bool, std::string> {
                   const auto r = check_totality(controls::zeroed_slice(2, 3), 8, seed, tol);
                   const bool at_first = r.basis_pair && *r.basis_pair == std::pair<Eigen::Index, Eigen::Index>{0, 0};
                   return {!r.pass && at_first, r.detail};
                 }});
  out.push_back({"zeroed-tensor-slice", P::CompositeTheorem,
                 [](const ToleranceConfig& tol, std::uint64_t seed) -> std::pair<bool, std::string> {
                   try {
                     construct_isomorphism(controls::zeroed_slice(2, 3), {tol, 8, seed});
                   } catch (const PreconditionError& e) {
                     return {e.condition() == "H1", e.what()};
                   }
                   return {false, "accepted"};
                 }});
  out.push_back({"doubled-coefficient", P::BasisCarryover,
                 [](const ToleranceConfig& tol, std::uint64_t) -> std::pair<bool, std::string> {
                   const auto r = map_basis(controls::doubled_coefficient(2, 3), tol);
                   return {!r.pass && std::abs(r.gram(0, 0) - Complex(4.0)) < tol.eq_tol,
                           "max |Gram - I| = " + std::to_string(r.gram_deviation)};
                 }});
  out.push_back({"doubled-coefficient", P::CompositeTheorem,
                 [](const ToleranceConfig& tol, std::uint64_t seed) -> std::pair<bool, std::string> {
                   try {
                     construct_isomorphism(controls::doubled_coefficient(2, 3), {tol, 8, seed});
                   } catch (const PreconditionError& e) {
                     return {e.condition() == "basis", e.what()};
                   }
                   return {false, "accepted"};
                 }});
  out.push_back({"doubled-coefficient", P::SingleBorn,
                 [](const ToleranceConfig& tol, std::uint64_t seed) {
                   return expect_fail(
                       check_single_system_born(controls::doubled_coefficient(2, 3), 8, seed, tol));
                 }});
  out.push_back({"doubled-coefficient", P::StatisticalIndependence,
                 [](const ToleranceConfig& tol, std::uint64_t seed) -> std::pair<bool, std::string> {
                   const auto r = check_composite_independence(controls::doubled_coefficient(2, 3),
                                                               8, seed, tol);
                   return {!r.a_side.pass || !r.b_side.pass, r.a_side.detail};
                 }});
  out.push_back({"doubled-coefficient", P::MeasurementIndependence,
                 [](const ToleranceConfig& tol, std::uint64_t seed) {
                   return expect_fail(check_composite_independence(
                                          controls::doubled_coefficient(2, 3), 8, seed, tol)
                                          .factorization);
                 }});
  out.push_back({"zero-padded-codomain", P::SpanSurjectivity,
                 [](const ToleranceConfig& tol, std::uint64_t) -> std::pair<bool, std::string> {
                   const auto r = check_span_surjectivity(controls::zero_padded(2, 3, 7), tol);
                   return {!r.pass && r.rank == 6, r.detail};
                 }});
  out.push_back({"zero-padded-codomain", P::CompositeTheorem,
                 [](const ToleranceConfig& tol, std::uint64_t seed) -> std::pair<bool, std::string> {
                   try {
                     construct_isomorphism(controls::zero_padded(2, 2, 5), {tol, 8, seed});
                   } catch (const PreconditionError& e) {
                     return {e.condition() == "H3", e.what()};
                   }
                   return {false, "accepted"};
                 }});
  out.push_back({"non-homogeneous-oracle", P::Bilinearity,
                 [](const ToleranceConfig& tol, std::uint64_t seed) {
                   return expect_fail(
                       check_bilinearity(controls::non_homogeneous(2, 3), 8, seed, tol));
                 }});
  out.push_back({"noisy-bilinear-oracle", P::Bilinearity,
                 [](const ToleranceConfig& tol, std::uint64_t seed) {
                   return expect_fail(
                       check_bilinearity(controls::noisy_bilinear(2, 3, seed), 8, seed, tol));
                 }});
  out.push_back({"dim1-tau-ambiguity", P::FtpgLift, [](const ToleranceConfig& tol, std::uint64_t) {
                   LiftOptions o;
                   o.tol = tol;
                   return expect_error(ErrorCode::AmbiguousTau,
                                       [&] { lift(controls::one_dimensional_map(), 1, 1, o); });
                 }});
  out.push_back({"inconsistent-tau-table", P::FtpgLift,
                 [](const ToleranceConfig& tol, std::uint64_t seed) {
                   LiftOptions o;
                   o.tol = tol;
                   return expect_error(ErrorCode::InconsistentTau, [&] {
                     lift(controls::inconsistent_tau_table(seed), 3, 3, o);
                   });
                 }});
  out.push_back({"non-unimodular-k-table", P::FtpgLift,
                 [](const ToleranceConfig& tol, std::uint64_t seed) {
                   LiftOptions o;
                   o.tol = tol;
                   return expect_error(ErrorCode::NonUnimodularK, [&] {
                     lift(controls::non_unimodular_k_table(seed), 2, 2, o);
                   });
                 }});
  return out;
}

std::vector<ControlResult> run_controls(const TrialPlan& plan) {
  const std::set<PropositionId> selected(plan.propositions.begin(), plan.propositions.end());
  std::vector<ControlResult> out;
  for (const auto& control : negative_controls()) {
    if (!selected.contains(control.proposition)) continue;
    ControlResult r;
    r.generator = control.generator;
    r.proposition = control.proposition;
    const std::uint64_t seed = derive_seed(plan.seed, "control:" + control.generator, 0);
    try {
      std::tie(r.detected, r.detail) = control.run(plan.tolerances, seed);
    } catch (const std::exception& e) {
      r.detected = false;
      r.detail = std::string("unexpected error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  // Registry order is grouped by generator; report in proposition order.
  std::stable_sort(out.begin(), out.end(), [](const ControlResult& a, const ControlResult& b) {
    return static_cast<int>(a.proposition) < static_cast<int>(b.proposition);
  });
  return out;
}

}  // namespace

const std::array<PropositionId, 10>& all_propositions() {
  static const std::array<PropositionId, 10> ids = {
      PropositionId::SingleBorn,       PropositionId::SpanSurjectivity,
      PropositionId::Totality,         PropositionId::StatisticalIndependence,
      PropositionId::FtpgLift,         PropositionId::Bilinearity,
      PropositionId::BasisCarryover,   PropositionId::CompositeTheorem,
      PropositionId::MeasurementIndependence, PropositionId::ProbabilityPreservation,
  };
  return ids;
}

std::string_view to_string(PropositionId id) { return kIds[static_cast<std::size_t>(id)]; }

PropositionId parse_proposition(std::string_view text) {
  const std::string wanted = lower(text);
  for (std::size_t k = 0; k < kIds.size(); ++k) {
    const std::string full = lower(kIds[k]);
    if (wanted == full || wanted == full.substr(0, full.find('-'))) {
      return all_propositions()[k];
    }
  }
  throw Error(ErrorCode::UnknownProposition, std::string(text));
}

void TrialPlan::validate() const {
  if (propositions.empty()) throw Error(ErrorCode::InvalidPlan, "no propositions selected");
  if (trials < 1) throw Error(ErrorCode::InvalidPlan, "trials must be at least 1");
  if (dims.empty()) throw Error(ErrorCode::InvalidPlan, "no dims given");
  for (int d : dims) {
    if (d < 2 || d > 16) {
      throw Error(ErrorCode::InvalidPlan, "dim " + std::to_string(d) + " outside 2..16");
    }
  }
  if (workers < 1) throw Error(ErrorCode::InvalidPlan, "worker budget must be at least 1");
  try {
    tolerances.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidPlan, e.what());
  }
}

bool VerificationReport::pass() const {
  const bool props = std::all_of(propositions.begin(), propositions.end(),
                                 [](const PropositionResult& p) { return p.pass; });
  const bool ctrls = std::all_of(controls.begin(), controls.end(),
                                 [](const ControlResult& c) { return c.detected; });
  return props && ctrls;
}

std::size_t VerificationReport::generators_total() const {
  std::set<std::string> names;
  for (const auto& c : controls) names.insert(c.generator);
  return names.size();
}

std::size_t VerificationReport::generators_detected() const {
  std::map<std::string, bool> detected;
  for (const auto& c : controls) {
    auto [it, inserted] = detected.emplace(c.generator, c.detected);
    if (!inserted) it->second = it->second && c.detected;
  }
  return static_cast<std::size_t>(
      std::count_if(detected.begin(), detected.end(), [](const auto& kv) { return kv.second; }));
}

const std::vector<NegativeControl>& negative_controls() {
  static const std::vector<NegativeControl> registry = build_controls();
  return registry;
}

VerificationReport run_suite(const TrialPlan& plan) {
  plan.validate();
  VerificationReport report;
  report.tolerances = plan.tolerances;
  report.master_seed = plan.seed;
  report.trials = plan.trials;
  report.dims = plan.dims;
  report.negative_controls = plan.negative_controls;

  // Fixed registry order regardless of the order given or completion order.
  std::vector<PropositionId> ids;
  for (PropositionId id : all_propositions()) {
    if (std::find(plan.propositions.begin(), plan.propositions.end(), id) !=
        plan.propositions.end()) {
      ids.push_back(id);
    }
  }
  report.propositions.resize(ids.size());
  for (std::size_t begin = 0; begin < ids.size(); begin += plan.workers) {
    const std::size_t end = std::min(ids.size(), begin + plan.workers);
    std::vector<std::future<PropositionResult>> batch;
    for (std::size_t k = begin; k < end; ++k) {
      batch.push_back(std::async(plan.workers > 1 ? std::launch::async : std::launch::deferred,
                                 evaluate_proposition, ids[k], std::cref(plan)));
    }
    for (std::size_t k = begin; k < end; ++k) report.propositions[k] = batch[k - begin].get();
  }
  if (plan.negative_controls) report.controls = run_controls(plan);
  return report;
}

VerificationReport run_proposition(PropositionId id, const TrialPlan& plan) {
  TrialPlan single = plan;
  single.propositions = {id};
  return run_suite(single);
}

nlohmann::json report_to_json(const VerificationReport& report, bool include_timing) {
  using nlohmann::json;
  json props = json::array();
  for (const auto& p : report.propositions) {
    json entry{{"id", to_string(p.id)},
               {"pass", p.pass},
               {"trials", p.trials},
               {"max_residual", p.max_residual},
               {"worst_seed", p.worst_seed},
               {"detail", p.detail}};
    if (include_timing) entry["elapsed_ms"] = p.elapsed_ms;
    props.push_back(std::move(entry));
  }
  json ctrls = json::array();
  for (const auto& c : report.controls) {
    ctrls.push_back(json{{"generator", c.generator},
                         {"proposition", to_string(c.proposition)},
                         {"detected", c.detected},
                         {"detail", c.detail}});
  }
  return json{
      {"schema", report.schema},
      {"version", report.version},
      {"rng", {{"engine", "mt19937_64"}, {"stream_version", kRandomStreamVersion}}},
      {"master_seed", report.master_seed},
      {"trials", report.trials},
      {"dims", report.dims},
      {"tolerances", {{"eq_tol", report.tolerances.eq_tol}, {"rank_tol", report.tolerances.rank_tol}}},
      {"negative_controls_enabled", report.negative_controls},
      {"pass", report.pass()},
      {"propositions", std::move(props)},
      {"negative_controls", std::move(ctrls)},
      {"controls_summary",
       {{"generators_detected", report.generators_detected()},
        {"generators_total", report.generators_total()}}},
  };
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != kReportSchema) {
      throw Error(ErrorCode::ParseError, "unsupported report schema " + std::to_string(r.schema));
    }
    r.version = j.at("version").get<std::string>();
    r.master_seed = j.at("master_seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::size_t>();
    r.dims = j.at("dims").get<std::vector<int>>();
    r.tolerances.eq_tol = j.at("tolerances").at("eq_tol").get<double>();
    r.tolerances.rank_tol = j.at("tolerances").at("rank_tol").get<double>();
    r.negative_controls = j.at("negative_controls_enabled").get<bool>();
    for (const auto& p : j.at("propositions")) {
      PropositionResult pr;
      pr.id = parse_proposition(p.at("id").get<std::string>());
      pr.pass = p.at("pass").get<bool>();
      pr.trials = p.at("trials").get<std::size_t>();
      pr.max_residual = p.at("max_residual").get<double>();
      pr.worst_seed = p.at("worst_seed").get<std::uint64_t>();
      pr.detail = p.at("detail").get<std::string>();
      if (p.contains("elapsed_ms")) pr.elapsed_ms = p.at("elapsed_ms").get<double>();
      r.propositions.push_back(std::move(pr));
    }
    for (const auto& c : j.at("negative_controls")) {
      ControlResult cr;
      cr.generator = c.at("generator").get<std::string>();
      cr.proposition = parse_proposition(c.at("proposition").get<std::string>());
      cr.detected = c.at("detected").get<bool>();
      cr.detail = c.at("detail").get<std::string>();
      r.controls.push_back(std::move(cr));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "wignerlift " << report.version << " seed=" << report.master_seed
      << " trials=" << report.trials << " eq_tol=" << report.tolerances.eq_tol
      << " rank_tol=" << report.tolerances.rank_tol << "\n";
  for (const auto& p : report.propositions) {
    out << "PROP " << to_string(p.id) << (p.pass ? " PASS" : " FAIL")
        << " residual=" << std::setprecision(3) << std::scientific << p.max_residual
        << std::defaultfloat << " trials=" << p.trials << " worst_seed=" << p.worst_seed;
    if (!p.pass) out << " detail=\"" << p.detail << "\"";
    out << "\n";
  }
  for (const auto& c : report.controls) {
    out << "CONTROL " << c.generator << " " << to_string(c.proposition)
        << (c.detected ? " DETECTED" : " MISSED") << "\n";
  }
  if (!report.controls.empty()) {
    out << "CONTROLS " << report.generators_detected() << "/" << report.generators_total()
        << " generators detected\n";
  }
  out << "OVERALL " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace wignerlift
