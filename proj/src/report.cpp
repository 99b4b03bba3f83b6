#include "twistfock/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace twistfock {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

const ordered_json& require_field(const ordered_json& j, const char* key,
                                  const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

int get_int(const ordered_json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

double get_number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::string get_string(const ordered_json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Complex get_complex(const ordered_json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
  return {get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]")};
}

Matrix get_matrix(const ordered_json& j, std::int64_t rows, std::int64_t cols,
                  const std::string& path) {
  if (!j.is_array() || static_cast<std::int64_t>(j.size()) != rows)
    fail(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != cols)
      fail(rpath, "expected " + std::to_string(cols) + " entries");
    for (std::int64_t c = 0; c < cols; ++c)
      m(r, c) = get_complex(row[static_cast<std::size_t>(c)],
                            rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

Eigen::MatrixXi get_int_matrix(const ordered_json& j, int rows, int cols,
                               const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(path, "expected " + std::to_string(rows) + " rows");
  Eigen::MatrixXi m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(rpath, "expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m(r, c) = get_int(row[static_cast<std::size_t>(c)],
                        rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

ordered_json complex_to_json(Complex z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json int_matrix_to_json(const Eigen::MatrixXi& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vector_to_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

Vector get_vector(const ordered_json& j, std::int64_t size, const std::string& path) {
  if (!j.is_array() || static_cast<std::int64_t>(j.size()) != size)
    fail(path, "expected " + std::to_string(size) + " entries");
  Vector v(size);
  for (std::int64_t k = 0; k < size; ++k)
    v(k) = get_complex(j[static_cast<std::size_t>(k)],
                       path + "[" + std::to_string(k) + "]");
  return v;
}

double default_tolerance() {
  if (const char* env = std::getenv("TWISTFOCK_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0))
      throw ConfigError("TWISTFOCK_TOL: expected a nonnegative number");
    return v;
  }
  return 1e-9;
}

constexpr std::int64_t kMaxLevelDim = 4096;

RunConfig config_from_json(const ordered_json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  static const std::vector<std::string> known = {
      "dim",  "n_max",   "tolerance", "preset",     "q",     "epsilon", "twist",
      "twist_tilde", "B", "mu",        "quotient",  "generators", "format"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      fail(path + "." + it.key(), "unknown field");
  }

  RunConfig c;
  c.dim = get_int(require_field(j, "dim", path), path + ".dim");
  if (c.dim < 1) fail(path + ".dim", "must be >= 1");
  c.n_max = j.contains("n_max") ? get_int(j["n_max"], path + ".n_max") : 4;
  if (c.n_max < 1) fail(path + ".n_max", "must be >= 1");
  try {
    if (StateSpace(c.dim, c.n_max).level_dim(c.n_max) > kMaxLevelDim)
      fail(path + ".n_max", "dim^n_max exceeds the supported level size");
  } catch (const DimensionError&) {
    fail(path + ".n_max", "dim^n_max exceeds the supported level size");
  }
  c.tolerance = j.contains("tolerance")
                    ? get_number(j["tolerance"], path + ".tolerance")
                    : default_tolerance();
  if (!(c.tolerance >= 0.0)) fail(path + ".tolerance", "must be nonnegative");

  const auto d2 = StateSpace(c.dim, c.n_max).level_dim(2);

  const bool has_explicit = j.contains("twist") || j.contains("twist_tilde");
  if (j.contains("preset") && has_explicit)
    fail(path, "give either a preset or explicit twist matrices, not both");
  if (!j.contains("preset") && !has_explicit) fail(path, "missing twist source");

  if (j.contains("preset")) {
    PresetId preset = preset_from_name(get_string(j["preset"], path + ".preset"));
    if (preset.kind == Preset::QFlip) {
      preset.q = get_complex(require_field(j, "q", path), path + ".q");
    } else if (j.contains("q")) {
      fail(path + ".q", "only valid with the qflip preset");
    }
    if (preset.kind == Preset::Epsilon) {
      const auto& ej = require_field(j, "epsilon", path);
      const std::string epath = path + ".epsilon";
      if (!ej.is_object()) fail(epath, "expected an object");
      for (auto it = ej.begin(); it != ej.end(); ++it)
        if (it.key() != "sigma" && it.key() != "omega" && it.key() != "q")
          fail(epath + "." + it.key(), "unknown field");
      EpsilonSpec spec;
      spec.sigma = get_int_matrix(require_field(ej, "sigma", epath), c.dim, c.dim,
                                  epath + ".sigma");
      spec.omega = get_int_matrix(require_field(ej, "omega", epath), c.dim, c.dim,
                                  epath + ".omega");
      spec.q = get_complex(require_field(ej, "q", epath), epath + ".q");
      preset.epsilon = std::move(spec);
      if (j.contains("B")) fail(path + ".B", "fixed by the epsilon preset");
    } else if (j.contains("epsilon")) {
      fail(path + ".epsilon", "only valid with the epsilon preset");
    }
    c.preset = std::move(preset);
  } else if (j.contains("q") || j.contains("epsilon")) {
    fail(path, "q and epsilon are preset parameters");
  }

  if (j.contains("twist"))
    c.twist_cross = get_matrix(j["twist"], d2, d2, path + ".twist");
  if (j.contains("twist_tilde"))
    c.twist_braid = get_matrix(j["twist_tilde"], d2, d2, path + ".twist_tilde");
  if (j.contains("B")) c.b_op = get_matrix(j["B"], d2, d2, path + ".B");
  if (j.contains("mu")) {
    c.mu = get_complex(j["mu"], path + ".mu");
    if (*c.mu == Complex{0.0, 0.0}) fail(path + ".mu", "must be nonzero");
  }

  if (j.contains("quotient")) {
    const std::string mode = get_string(j["quotient"], path + ".quotient");
    if (mode == "none")
      c.quotient = QuotientMode::None;
    else if (mode == "full-kernel")
      c.quotient = QuotientMode::FullKernel;
    else if (mode == "generators")
      c.quotient = QuotientMode::Generators;
    else
      fail(path + ".quotient", "expected none, full-kernel or generators");
  }
  if (j.contains("generators")) {
    if (c.quotient != QuotientMode::Generators)
      fail(path + ".generators", "only valid with quotient = generators");
    const auto& gj = j["generators"];
    if (!gj.is_array()) fail(path + ".generators", "expected an array");
    for (std::size_t k = 0; k < gj.size(); ++k)
      c.generators.push_back(get_vector(
          gj[k], d2, path + ".generators[" + std::to_string(k) + "]"));
  } else if (c.quotient == QuotientMode::Generators) {
    fail(path + ".generators", "missing field");
  }

  if (j.contains("format")) {
    const std::string f = get_string(j["format"], path + ".format");
    if (f == "text")
      c.format = OutputFormat::Text;
    else if (f == "json")
      c.format = OutputFormat::Json;
    else
      fail(path + ".format", "expected text or json");
  }
  return c;
}

ordered_json config_to_json(const RunConfig& c) {
  ordered_json j;
  j["dim"] = c.dim;
  j["n_max"] = c.n_max;
  j["tolerance"] = c.tolerance;
  if (c.preset) {
    j["preset"] = preset_name(c.preset->kind);
    if (c.preset->kind == Preset::QFlip) j["q"] = complex_to_json(c.preset->q);
    if (c.preset->kind == Preset::Epsilon && c.preset->epsilon) {
      ordered_json e;
      e["sigma"] = int_matrix_to_json(c.preset->epsilon->sigma);
      e["omega"] = int_matrix_to_json(c.preset->epsilon->omega);
      e["q"] = complex_to_json(c.preset->epsilon->q);
      j["epsilon"] = std::move(e);
    }
  }
  if (c.twist_cross) j["twist"] = matrix_to_json(*c.twist_cross);
  if (c.twist_braid) j["twist_tilde"] = matrix_to_json(*c.twist_braid);
  if (c.b_op) j["B"] = matrix_to_json(*c.b_op);
  if (c.mu) j["mu"] = complex_to_json(*c.mu);
  j["quotient"] = quotient_mode_name(c.quotient);
  if (c.quotient == QuotientMode::Generators) {
    ordered_json g = ordered_json::array();
    for (const auto& v : c.generators) g.push_back(vector_to_json(v));
    j["generators"] = std::move(g);
  }
  j["format"] = c.format == OutputFormat::Json ? "json" : "text";
  return j;
}

ordered_json verdict_to_json(const AxiomVerdict& v) {
  ordered_json j;
  j["name"] = v.name;
  j["residual"] = v.residual;
  j["passed"] = v.passed;
  return j;
}

AxiomVerdict verdict_from_json(const ordered_json& j, const std::string& path) {
  AxiomVerdict v;
  v.name = get_string(require_field(j, "name", path), path + ".name");
  v.residual = get_number(require_field(j, "residual", path), path + ".residual");
  v.passed = require_field(j, "passed", path).get<bool>();
  return v;
}

ordered_json gram_to_json(const GramReport& g) {
  ordered_json j;
  j["level"] = g.level;
  j["hermitian"] = g.hermitian;
  j["min_eigenvalue"] = g.min_eigenvalue;
  j["rank"] = g.rank;
  j["kernel_dim"] = g.kernel_dim;
  j["positive_semidefinite"] = g.positive_semidefinite;
  j["nondegenerate"] = g.nondegenerate;
  return j;
}

GramReport gram_from_json(const ordered_json& j, const std::string& path) {
  GramReport g;
  g.level = get_int(require_field(j, "level", path), path + ".level");
  g.hermitian = require_field(j, "hermitian", path).get<bool>();
  g.min_eigenvalue =
      get_number(require_field(j, "min_eigenvalue", path), path + ".min_eigenvalue");
  g.rank = require_field(j, "rank", path).get<std::int64_t>();
  g.kernel_dim = require_field(j, "kernel_dim", path).get<std::int64_t>();
  g.positive_semidefinite =
      require_field(j, "positive_semidefinite", path).get<bool>();
  g.nondegenerate = require_field(j, "nondegenerate", path).get<bool>();
  return g;
}

TwistSpec twist_from_config(const RunConfig& c, const StateSpace& space,
                            Tolerance tol) {
  if (c.preset) {
    TwistSpec base = preset_twist(*c.preset, space, tol);
    if (!c.mu && !c.b_op) return base;
    std::optional<Matrix> b = base.b();
    if (c.b_op) b = c.b_op;
    return TwistSpec(space, base.cross(), base.braid(), std::move(b), c.mu,
                     base.involution_expected(), tol);
  }
  return TwistSpec(space, c.twist_cross, c.twist_braid, c.b_op, c.mu, false, tol);
}

}  // namespace

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::WellDefined: return "well-defined";
    case Verdict::DegenerateNeedsQuotient: return "degenerate-needs-quotient";
    case Verdict::Failed: return "failed";
  }
  throw Error("unreachable verdict");
}

const char* quotient_mode_name(QuotientMode mode) {
  switch (mode) {
    case QuotientMode::None: return "none";
    case QuotientMode::FullKernel: return "full-kernel";
    case QuotientMode::Generators: return "generators";
  }
  throw Error("unreachable quotient mode");
}

RunConfig parse_config(std::istream& in) {
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(j, "config");
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in);
}

std::string emit_preset_config(const PresetId& preset, int dim, int n_max) {
  RunConfig c;
  c.dim = dim;
  c.n_max = n_max;
  c.tolerance = 1e-9;
  c.preset = preset;
  if (preset.kind == Preset::Epsilon && !preset.epsilon) {
    // colour exterior algebra defaults: eps_ii = -1, eps_ij = 1 off diagonal
    EpsilonSpec spec;
    spec.sigma = Eigen::MatrixXi::Identity(dim, dim);
    spec.omega = Eigen::MatrixXi::Zero(dim, dim);
    spec.q = Complex{1.0, 0.0};
    c.preset->epsilon = std::move(spec);
  }
  const bool degenerate_family = preset.kind == Preset::Boson ||
                                 preset.kind == Preset::Fermion ||
                                 preset.kind == Preset::Epsilon;
  c.quotient = degenerate_family ? QuotientMode::FullKernel : QuotientMode::None;
  return config_to_json(c).dump(2);
}

DiagnosticsReport run_diagnostics(const RunConfig& config) {
  DiagnosticsReport rep;
  rep.config = config;
  const Tolerance tol{config.tolerance};
  try {
    const StateSpace space(config.dim, config.n_max);
    const TwistSpec twist = twist_from_config(config, space, tol);

    rep.axioms.push_back(check_star_convention(space, twist.cross(), tol));
    rep.axioms.push_back(check_yang_baxter(space, twist.braid(), tol));
    rep.axioms.push_back(check_norm_bound(twist.braid(), tol));
    if (twist.b()) {
      auto triple = check_consistency(space, twist.braid(), twist.b(), tol);
      for (auto& v : triple) rep.axioms.push_back(std::move(v));
    }
    if (twist.mu()) rep.axioms.push_back(check_hecke(twist.braid(), *twist.mu(), tol));
    if (twist.involution_expected())
      rep.axioms.push_back(check_involution(twist.braid(), tol));

    const FockModel model(twist, tol);
    for (int n = 0; n <= space.n_max; ++n)
      rep.levels.push_back(positivity_report(model.gram(n), n, tol));

    for (const auto& axiom : rep.axioms)
      if (!axiom.passed) rep.failures.push_back(axiom.name);

    WellDefinedReport wd;
    if (config.quotient == QuotientMode::None) {
      wd = well_defined_report(model, tol);
    } else {
      QuotientModel quotient =
          config.quotient == QuotientMode::FullKernel
              ? build_full_kernel_quotient(model, tol)
              : [&] {
                  const auto d2 = space.level_dim(2);
                  Matrix gens(d2, static_cast<Eigen::Index>(config.generators.size()));
                  for (std::size_t k = 0; k < config.generators.size(); ++k)
                    gens.col(static_cast<Eigen::Index>(k)) = config.generators[k];
                  return build_quotient(model, gens, tol);
                }();
      wd = well_defined_report(model, quotient, tol);
      QuotientSummary summary;
      summary.mode = config.quotient;
      summary.dims = quotient.dims;
      summary.levels = wd.levels;
      summary.ideal_invariance = check_ideal_invariance(model, quotient, tol, space.n_max);
      rep.quotient = std::move(summary);
    }
    rep.wick = wd.wick;
    rep.adjointness = wd.adjointness;
    for (const auto& f : wd.failures) rep.failures.push_back(f);
    for (const auto& n : wd.notes) rep.notes.push_back(n);
    rep.verdict = !rep.failures.empty() ? Verdict::Failed : wd.verdict;
  } catch (const Error& e) {
    rep.failures.push_back(std::string("error: ") + e.what());
    rep.verdict = Verdict::Failed;
  }
  return rep;
}

std::string report_to_json(const DiagnosticsReport& report) {
  ordered_json j;
  j["config"] = config_to_json(report.config);
  ordered_json axioms = ordered_json::array();
  for (const auto& a : report.axioms) axioms.push_back(verdict_to_json(a));
  j["axioms"] = std::move(axioms);
  ordered_json levels = ordered_json::array();
  for (const auto& g : report.levels) levels.push_back(gram_to_json(g));
  j["levels"] = std::move(levels);
  if (report.quotient) {
    ordered_json q;
    q["mode"] = quotient_mode_name(report.quotient->mode);
    q["dims"] = report.quotient->dims;
    ordered_json qlevels = ordered_json::array();
    for (const auto& g : report.quotient->levels) qlevels.push_back(gram_to_json(g));
    q["levels"] = std::move(qlevels);
    if (report.quotient->ideal_invariance)
      q["ideal_invariance"] = verdict_to_json(*report.quotient->ideal_invariance);
    j["quotient"] = std::move(q);
  }
  if (report.wick) j["wick_relation"] = verdict_to_json(*report.wick);
  if (report.adjointness) j["adjointness_residual"] = *report.adjointness;
  j["notes"] = report.notes;
  j["verdict"] = verdict_name(report.verdict);
  j["failed_checks"] = report.failures;
  return j.dump(2);
}

DiagnosticsReport report_from_json(const std::string& payload) {
  ordered_json j;
  try {
    j = ordered_json::parse(payload);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  DiagnosticsReport rep;
  rep.config = config_from_json(require_field(j, "config", "report"), "report.config");
  for (const auto& a : require_field(j, "axioms", "report"))
    rep.axioms.push_back(verdict_from_json(a, "report.axioms"));
  for (const auto& g : require_field(j, "levels", "report"))
    rep.levels.push_back(gram_from_json(g, "report.levels"));
  if (j.contains("quotient")) {
    const auto& q = j["quotient"];
    QuotientSummary summary;
    const std::string mode = get_string(require_field(q, "mode", "report.quotient"),
                                        "report.quotient.mode");
    summary.mode = mode == "full-kernel" ? QuotientMode::FullKernel
                   : mode == "generators" ? QuotientMode::Generators
                                          : QuotientMode::None;
    for (const auto& d : require_field(q, "dims", "report.quotient"))
      summary.dims.push_back(d.get<std::int64_t>());
    for (const auto& g : require_field(q, "levels", "report.quotient"))
      summary.levels.push_back(gram_from_json(g, "report.quotient.levels"));
    if (q.contains("ideal_invariance"))
      summary.ideal_invariance =
          verdict_from_json(q["ideal_invariance"], "report.quotient.ideal_invariance");
    rep.quotient = std::move(summary);
  }
  if (j.contains("wick_relation"))
    rep.wick = verdict_from_json(j["wick_relation"], "report.wick_relation");
  if (j.contains("adjointness_residual"))
    rep.adjointness =
        get_number(j["adjointness_residual"], "report.adjointness_residual");
  for (const auto& n : require_field(j, "notes", "report"))
    rep.notes.push_back(n.get<std::string>());
  const std::string verdict =
      get_string(require_field(j, "verdict", "report"), "report.verdict");
  rep.verdict = verdict == "well-defined" ? Verdict::WellDefined
                : verdict == "degenerate-needs-quotient"
                    ? Verdict::DegenerateNeedsQuotient
                    : Verdict::Failed;
  for (const auto& f : require_field(j, "failed_checks", "report"))
    rep.failures.push_back(f.get<std::string>());
  return rep;
}

namespace {

std::string fmt_residual(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

std::string report_to_text(const DiagnosticsReport& report) {
  std::ostringstream out;
  out << "twist diagnostics (N=" << report.config.dim
      << ", n_max=" << report.config.n_max << ", tol=" << report.config.tolerance
      << ")\n";
  if (report.config.preset)
    out << "preset: " << preset_name(report.config.preset->kind) << "\n";
  out << "axioms:\n";
  for (const auto& a : report.axioms)
    out << "  " << a.name << "  residual " << fmt_residual(a.residual) << "  "
        << (a.passed ? "pass" : "FAIL") << "\n";
  out << "levels:\n";
  for (const auto& g : report.levels)
    out << "  level " << g.level << ": rank " << g.rank << ", kernel "
        << g.kernel_dim << ", min eig " << fmt_residual(g.min_eigenvalue) << ", "
        << (g.hermitian ? "hermitian" : "NOT hermitian") << ", "
        << (g.positive_semidefinite ? "psd" : "NOT psd") << ", "
        << (g.nondegenerate ? "nondegenerate" : "degenerate") << "\n";
  if (report.quotient) {
    out << "quotient (" << quotient_mode_name(report.quotient->mode) << "): dims";
    for (auto d : report.quotient->dims) out << " " << d;
    out << "\n";
    for (const auto& g : report.quotient->levels)
      out << "  quotient level " << g.level << ": dim " << g.rank + g.kernel_dim
          << ", min eig " << fmt_residual(g.min_eigenvalue) << ", "
          << (g.positive_semidefinite ? "psd" : "NOT psd") << ", "
          << (g.nondegenerate ? "nondegenerate" : "degenerate") << "\n";
    if (report.quotient->ideal_invariance) {
      const auto& v = *report.quotient->ideal_invariance;
      out << "  " << v.name << "  residual " << fmt_residual(v.residual) << "  "
          << (v.passed ? "pass" : "FAIL") << "\n";
    }
  }
  if (report.wick)
    out << "wick relation: residual " << fmt_residual(report.wick->residual) << "  "
        << (report.wick->passed ? "pass" : "FAIL") << "\n";
  if (report.adjointness)
    out << "adjointness residual: " << fmt_residual(*report.adjointness) << "\n";
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << "verdict: " << verdict_name(report.verdict);
  if (!report.failures.empty()) {
    out << " (";
    for (std::size_t k = 0; k < report.failures.size(); ++k)
      out << (k ? ", " : "") << report.failures[k];
    out << ")";
  }
  out << "\n";
  return out.str();
}

int exit_code(const DiagnosticsReport& report) {
  return report.verdict == Verdict::WellDefined ? 0 : 1;
}

}  // namespace twistfock
