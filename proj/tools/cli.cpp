#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wignerlift/error.hpp"
#include "wignerlift/harness.hpp"
#include "wignerlift/lift.hpp"
#include "wignerlift/serialize.hpp"
#include "wignerlift/tensor_factor.hpp"

namespace wignerlift::cli {

namespace {

// Flag and file problems, reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: " + s);
  }
  if (used != s.size()) throw InputError("not an integer: " + s);
  return value;
}

// "2,3,4", "2..4" or a mix such as "2..4,6".
std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      dims.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots));
    const int hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw InputError("empty range " + item);
    for (int d = lo; d <= hi; ++d) dims.push_back(d);
  }
  if (dims.empty()) throw InputError("no dims given");
  return dims;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

struct VerifyArgs {
  std::string props;
  std::string dims;
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  double tol = ToleranceConfig{}.eq_tol;
  bool negative_controls = false;
  unsigned jobs = 1;
  std::string out;
  std::string format = "json";
};

int run_verify(const VerifyArgs& a, bool seed_from_flag, std::ostream& out, std::ostream& err) {
  TrialPlan plan;
  if (!a.props.empty()) {
    plan.propositions.clear();
    for (const auto& p : split(a.props, ',')) plan.propositions.push_back(parse_proposition(p));
  }
  if (!a.dims.empty()) plan.dims = parse_dims(a.dims);
  plan.trials = a.trials;
  plan.seed = a.seed;
  if (const char* env = std::getenv("WIGNERLIFT_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0') throw InputError(std::string("WIGNERLIFT_SEED is not an integer: ") + env);
    plan.seed = value;
    if (seed_from_flag) err << "note: WIGNERLIFT_SEED overrides --seed\n";
  }
  plan.tolerances.eq_tol = a.tol;
  plan.negative_controls = a.negative_controls;
  plan.workers = a.jobs;

  const VerificationReport report = run_suite(plan);
  const std::string text =
      a.format == "text" ? report_to_text(report) : report_to_json(report).dump(2) + "\n";
  emit(text, a.out, out);
  return report.pass() ? kExitPass : kExitCheckFailed;
}

int run_lift(const std::string& map_path, const std::string& out_path, double tol,
             std::ostream& out, std::ostream& err) {
  LiftOptions options;
  options.tol.eq_tol = tol;
  const RayMapOracle map = ray_table_from_json(read_json(map_path), options.tol);
  try {
    const SemilinearLift l = lift(map, map.domain_dim(), map.codomain_dim(), options);
    emit(lift_to_json(l).dump(2) + "\n", out_path, out);
    return kExitPass;
  } catch (const LiftError& e) {
    Json report{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (e.report().samples > 0) report["report"] = preservation_to_json(e.report());
    err << e.what() << "\n";
    emit(report.dump(2) + "\n", out_path, out);
    return kExitCheckFailed;
  }
}

int run_factor(const std::string& path, const std::string& out_path, double tol,
               std::ostream& out) {
  const BilinearComposition m = composition_from_json(read_json(path));
  ToleranceConfig t;
  t.eq_tol = tol;
  IsomorphismOptions options;
  options.tol = t;
  bool ok = true;
  const auto verdict = [](bool pass) { return pass ? "PASS" : "FAIL"; };

  const CheckReport h1 = check_totality(m, options.trials, options.seed, t);
  out << "H1 totality " << verdict(h1.pass) << " " << h1.detail << "\n";
  out << "H2 bilinearity PASS bilinear by representation\n";
  const CheckReport h3 = check_span_surjectivity(m, t);
  out << "H3 span-surjectivity " << verdict(h3.pass) << " (rank " << *h3.rank << ")\n";
  const BasisReport basis = map_basis(m, t);
  out << "basis " << verdict(basis.pass) << " max|Gram-I|=" << basis.gram_deviation << " count "
      << basis.vectors.size() << "\n";
  const CheckReport product = check_probability_product(m, options.trials, options.seed, t);
  out << "probability-product " << verdict(product.pass) << " " << product.detail << "\n";
  ok = h1.pass && h3.pass && basis.pass && product.pass;

  if (m.dim_a() < 2) {
    out << "convention undetermined (dim_a = 1)\n";
  } else {
    try {
      const Convention c = composition_convention(m, options.seed, t);
      out << "convention " << (c == Convention::Linear ? "linear" : "antilinear") << "\n";
    } catch (const Error& e) {
      out << "convention undetermined (" << e.what() << ")\n";
    }
  }

  if (!ok) {
    out << "isomorphism SKIPPED\n";
    try {
      construct_isomorphism(m, options);
    } catch (const PreconditionError& e) {
      out << "PreconditionFailed(" << e.condition() << ")\n";
    } catch (const Error& e) {
      out << e.what() << "\n";
    }
    return kExitCheckFailed;
  }
  try {
    const IsomorphismResult iso = construct_isomorphism(m, options);
    const bool accepted = iso.unitarity_residual < t.eq_tol && iso.factorization_residual < t.eq_tol;
    const bool identity =
        (iso.iso - ComplexMatrix::Identity(iso.iso.rows(), iso.iso.cols())).cwiseAbs().maxCoeff() <
        t.eq_tol;
    out << "isomorphism " << verdict(accepted) << " unitarity_residual=" << iso.unitarity_residual
        << " factorization_residual=" << iso.factorization_residual << "\n";
    if (identity) out << "iso = identity\n";
    const std::string json = isomorphism_to_json(iso).dump(2) + "\n";
    if (out_path.empty()) {
      out << json;
    } else {
      emit(json, out_path, out);
    }
    return accepted ? kExitPass : kExitCheckFailed;
  } catch (const Error& e) {
    out << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective-map lifts and tensor-product factorization checks", "wignerlift"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the proposition suite");
  verify_cmd->add_option("--props", verify.props, "Comma-separated proposition ids");
  verify_cmd->add_option("--dims", verify.dims, "Dims, e.g. 2,3,4 or 2..4");
  verify_cmd->add_option("--trials", verify.trials, "Trials per proposition")->check(CLI::PositiveNumber);
  auto* seed_opt = verify_cmd->add_option("--seed", verify.seed, "Master seed");
  verify_cmd->add_option("--tol", verify.tol, "Equality tolerance (eq_tol)");
  verify_cmd->add_flag("--negative-controls", verify.negative_controls,
                       "Also run every counterexample generator");
  verify_cmd->add_option("--jobs", verify.jobs, "Propositions evaluated concurrently")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", verify.out, "Write the report here instead of stdout");
  verify_cmd->add_option("--format", verify.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string map_path, lift_out;
  double lift_tol = ToleranceConfig{}.eq_tol;
  auto* lift_cmd = app.add_subcommand("lift", "Lift a tabulated ray map");
  lift_cmd->add_option("--map", map_path, "Ray table JSON")->required();
  lift_cmd->add_option("--out", lift_out, "Write the result here instead of stdout");
  lift_cmd->add_option("--tol", lift_tol, "Equality tolerance (eq_tol)");

  std::string bilinear_path, factor_out;
  double factor_tol = ToleranceConfig{}.eq_tol;
  auto* factor_cmd = app.add_subcommand("factor", "Factor a composition map through the tensor product");
  factor_cmd->add_option("--bilinear", bilinear_path, "Composition coefficients JSON")->required();
  factor_cmd->add_option("--out", factor_out, "Write the isomorphism JSON here");
  factor_cmd->add_option("--tol", factor_tol, "Equality tolerance (eq_tol)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify, seed_opt->count() > 0, out, err);
    if (lift_cmd->parsed()) return run_lift(map_path, lift_out, lift_tol, out, err);
    if (factor_cmd->parsed()) return run_factor(bilinear_path, factor_out, factor_tol, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    // Everything here comes from reading inputs or building the plan;
    // check failures are reported through the exit code above.
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace wignerlift::cli
