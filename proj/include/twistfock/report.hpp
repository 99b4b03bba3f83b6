#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twistfock/statistics_zoo.hpp"

namespace twistfock {

enum class QuotientMode { None, FullKernel, Generators };
enum class OutputFormat { Text, Json };

/// One diagnostic run, as read from a JSON config. Matrices are row-major in
/// lexicographic pair order with [re, im] scalars. Exactly one twist source:
/// a preset name or explicit twist / twist_tilde matrices.
struct RunConfig {
  int dim = 1;
  int n_max = 4;
  double tolerance = 1e-9;
  std::optional<PresetId> preset;
  std::optional<Matrix> twist_cross;
  std::optional<Matrix> twist_braid;
  std::optional<Matrix> b_op;
  std::optional<Complex> mu;
  QuotientMode quotient = QuotientMode::None;
  std::vector<Vector> generators;
  OutputFormat format = OutputFormat::Text;
};

/// Parse and validate a JSON config. Config errors carry the field path.
/// TWISTFOCK_TOL in the environment replaces the built-in default tolerance
/// when the config does not set one.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

/// Ready-to-run config for a named preset.
std::string emit_preset_config(const PresetId& preset, int dim, int n_max);

struct QuotientSummary {
  QuotientMode mode = QuotientMode::None;
  std::vector<std::int64_t> dims;
  std::vector<GramReport> levels;
  std::optional<AxiomVerdict> ideal_invariance;
};

struct DiagnosticsReport {
  RunConfig config;
  std::vector<AxiomVerdict> axioms;
  std::vector<GramReport> levels;  // tensor levels
  std::optional<QuotientSummary> quotient;
  std::optional<AxiomVerdict> wick;
  std::optional<double> adjointness;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::Failed;
  std::vector<std::string> failures;
};

/// Run the full battery: twist axioms, level Grams, optional quotient, Wick
/// relation, final verdict. Deterministic given the config; module errors
/// surface as a failed report, never an exception.
DiagnosticsReport run_diagnostics(const RunConfig& config);

std::string report_to_json(const DiagnosticsReport& report);
DiagnosticsReport report_from_json(const std::string& payload);
std::string report_to_text(const DiagnosticsReport& report);

const char* verdict_name(Verdict verdict);
const char* quotient_mode_name(QuotientMode mode);

/// 0 when well-defined, 1 otherwise. Config errors exit with 2 at the CLI.
int exit_code(const DiagnosticsReport& report);

}  // namespace twistfock
