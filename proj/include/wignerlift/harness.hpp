#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wignerlift/hilbert.hpp"

namespace wignerlift {

inline constexpr std::string_view kVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

enum class PropositionId {
  SingleBorn,
  SpanSurjectivity,
  Totality,
  StatisticalIndependence,
  FtpgLift,
  Bilinearity,
  BasisCarryover,
  CompositeTheorem,
  MeasurementIndependence,
  ProbabilityPreservation,
};

/// Registry order; reports always list propositions in this order.
const std::array<PropositionId, 10>& all_propositions();

/// "S1-single-born", "ADD1-measurement-independence", ...
std::string_view to_string(PropositionId id);

/// Accepts the full id or its short prefix ("S6", "ADD1"), case-insensitive.
/// Throws UnknownProposition.
PropositionId parse_proposition(std::string_view text);

struct TrialPlan {
  std::vector<PropositionId> propositions{all_propositions().begin(), all_propositions().end()};
  std::vector<int> dims{2, 3, 4};
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  ToleranceConfig tolerances;
  bool negative_controls = false;
  /// Upper bound on propositions evaluated concurrently.
  unsigned workers = 1;

  /// Throws InvalidPlan.
  void validate() const;
};

struct PropositionResult {
  PropositionId id{};
  bool pass = false;
  std::size_t trials = 0;
  double max_residual = 0.0;
  std::uint64_t worst_seed = 0;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct ControlResult {
  std::string generator;
  PropositionId proposition{};
  bool detected = false;
  std::string detail;
};

struct VerificationReport {
  int schema = kReportSchema;
  std::string version{kVersion};
  ToleranceConfig tolerances;
  std::uint64_t master_seed = 0;
  std::size_t trials = 0;
  std::vector<int> dims;
  bool negative_controls = false;
  std::vector<PropositionResult> propositions;
  std::vector<ControlResult> controls;

  bool pass() const;
  /// Distinct generators whose every application was detected.
  std::size_t generators_detected() const;
  std::size_t generators_total() const;
};

/// A deliberately invalid instance together with the verdict it must draw.
struct NegativeControl {
  std::string generator;
  PropositionId proposition;
  /// Returns (detected, detail). Must not throw for a working checker.
  std::function<std::pair<bool, std::string>(const ToleranceConfig&, std::uint64_t seed)> run;
};

/// Every registered control application; ten distinct generators.
const std::vector<NegativeControl>& negative_controls();

VerificationReport run_suite(const TrialPlan& plan);

/// run_suite restricted to one proposition.
VerificationReport run_proposition(PropositionId id, const TrialPlan& plan);

nlohmann::json report_to_json(const VerificationReport& report, bool include_timing = true);
VerificationReport report_from_json(const nlohmann::json& j);

/// One "PROP <id> PASS|FAIL residual=..." line per proposition, then the
/// controls and an OVERALL line.
std::string report_to_text(const VerificationReport& report);

}  // namespace wignerlift
