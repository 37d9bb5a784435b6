#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "treeharm/errors.hpp"
#include "treeharm/norms.hpp"
#include "treeharm/operators.hpp"
#include "treeharm/spectral.hpp"
#include "treeharm/transforms.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

// Verdict thresholds frozen from calibration runs (q = 2 defaults).  Each
// constant records the values observed on the run that froze it.
namespace calib {

// Non-eigen certificate: the least-squares residual ||Lf - lambda* f||_2 /
// ||f||_2 of a two-shell combination scales with the eigenvalue separation
// |gamma(z1) - gamma(z2)|, so the floor is a fraction of that separation.
// Observed residual/separation on the calibration run: 0.25 for the
// introduction pair (residual 0.0297 at R=10), 0.124/0.076/0.027 for
// annulus pairs at p = 1.25/1.5/1.8, and 0.44 for the item-3 pair.
inline constexpr double non_eigen_separation_fraction = 0.02;
inline constexpr double non_eigen_absolute_floor = 1e-6;

// Envelope for truncated-quasinorm ratios of exact eigenfunctions, with both
// quasinorms taken on the common interior B_{R-k} so ball shrinkage cancels.
// Observed ratios 1 +- 3e-10 for Theorem A (z=0.3, R=12) and Theorem B
// part 1 (p=1.5).
inline constexpr double ratio_envelope = 3.0;

// Growth-curve classification.  "Bounded" means the top-decade ratio
// curve(R_max)/curve(R_max/2) stays under 1.1.  "Divergent at rate R^alpha"
// means the log-log slope over [R_max/2, R_max] lands in a +-0.15 window
// around alpha (the linear rate keeps the wider [0.8, 1.2] window).
// Observed slopes: 0.979 for the weak-L2 curve of phi_0 (alpha = 1), 0.496
// for the L2 curve of phi_{tau/8} (alpha = 1/2), 0.344 for the L3 curve of
// phi_{i delta_{p'}} at p = 1.5 (alpha = 1/3).
inline constexpr double bounded_ratio_max = 1.1;
inline constexpr double linear_slope_lo = 0.8;
inline constexpr double linear_slope_hi = 1.2;
inline constexpr double rate_window = 0.15;

// The repaired sup bound of sharpness item 1 is identically 1 in exact
// arithmetic; dividing by gamma(0)^k ~ 0.057^k amplifies roundoff to ~3.2e-9
// at k = 5 (observed), so the check allows 1e-7.
inline constexpr double repaired_bound_tolerance = 1e-7;

// Seminorm-equivalence consistency: largest ratio between nu_m(f) and the
// matching weighted lambda seminorms over the random corpora.  Observed max
// is exactly 1.0 (attained by the delta member); ceiling kept generous since
// the equivalence constant C(p, m) is unspecified.
inline constexpr double seminorm_ratio_max = 100.0;

}  // namespace calib

// Threshold for the non-eigen certificate of a pair with the given
// eigenvalue separation.
inline double non_eigen_threshold(double separation) {
  return std::max(calib::non_eigen_separation_fraction * separation,
                  calib::non_eigen_absolute_floor);
}

// -----------------------------------------------------------------------------

struct ExperimentConfig {
  int q = 2;
  double p = 1.5;
  complex_t z{0.3, 0.0};
  int radius = 12;
  int boundary_depth = 0;  // 0 = derived from radius
  int k_min = 0;
  int k_max = 5;
  std::uint64_t seed = 7;
  std::string output_path = "out";
  std::string experiment;
};

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "eigencheck", "spectrum-map", "roe-counterexample", "theorem-a",
      "theorem-b",  "sharpness",    "zcase",              "isomorphism"};
  return names;
}

// Per-experiment defaults; every value can be overridden by a config file.
inline ExperimentConfig default_config(const std::string& experiment) {
  ExperimentConfig cfg;
  cfg.experiment = experiment;
  if (experiment == "eigencheck") {
    cfg.radius = 12;
  } else if (experiment == "spectrum-map") {
    cfg.p = 1.5;
  } else if (experiment == "roe-counterexample") {
    cfg.p = 1.0;
    cfg.z = {1.0, 0.0};  // real part read as the target |lambda|
    cfg.radius = 10;
    cfg.k_min = -50;
    cfg.k_max = 50;
  } else if (experiment == "theorem-a") {
    cfg.z = {0.3, 0.0};
    cfg.radius = 12;
  } else if (experiment == "theorem-b") {
    cfg.p = 1.5;
    cfg.radius = 12;
  } else if (experiment == "sharpness") {
    cfg.p = 1.5;
    cfg.radius = 10;
  } else if (experiment == "zcase") {
    cfg.z = {std::numbers::pi / 3.0, 0.0};  // real part read as alpha
    cfg.radius = 40;                        // window half-width
  } else if (experiment == "isomorphism") {
    cfg.radius = 10;
  } else {
    throw ConfigError("unknown experiment: " + experiment);
  }
  return cfg;
}

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  return nlohmann::json{{"q", cfg.q},
                        {"p", cfg.p},
                        {"z", {cfg.z.real(), cfg.z.imag()}},
                        {"radius", cfg.radius},
                        {"boundary_depth", cfg.boundary_depth},
                        {"k_range", {cfg.k_min, cfg.k_max}},
                        {"seed", cfg.seed},
                        {"output_path", cfg.output_path},
                        {"experiment", cfg.experiment}};
}

// Parse a config file on top of the experiment defaults.  Unknown keys are
// rejected; a mismatched "experiment" key is rejected as well.
inline ExperimentConfig parse_config(const nlohmann::json& j, const std::string& experiment) {
  ExperimentConfig cfg = default_config(experiment);
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "q") {
        cfg.q = value.get<int>();
      } else if (key == "p") {
        cfg.p = value.get<double>();
      } else if (key == "z") {
        if (!value.is_array() || value.size() != 2)
          throw ConfigError("config key 'z' must be [re, im]");
        cfg.z = complex_t(value[0].get<double>(), value[1].get<double>());
      } else if (key == "radius") {
        cfg.radius = value.get<int>();
      } else if (key == "boundary_depth") {
        cfg.boundary_depth = value.get<int>();
      } else if (key == "k_range") {
        if (!value.is_array() || value.size() != 2)
          throw ConfigError("config key 'k_range' must be [k_min, k_max]");
        cfg.k_min = value[0].get<int>();
        cfg.k_max = value[1].get<int>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "output_path") {
        cfg.output_path = value.get<std::string>();
      } else if (key == "experiment") {
        const std::string name = value.get<std::string>();
        if (name != experiment)
          throw ConfigError("config experiment '" + name + "' does not match subcommand '" +
                            experiment + "'");
      } else {
        throw ConfigError("unknown config key: " + key);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
  if (cfg.q < 2) throw ConfigError("config: q must be >= 2");
  if (cfg.radius < 0) throw ConfigError("config: radius must be >= 0");
  if (cfg.k_min > cfg.k_max) throw ConfigError("config: k_range must satisfy k_min <= k_max");
  return cfg;
}

inline ExperimentConfig load_config_file(const std::string& path, const std::string& experiment) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j, experiment);
}

// -----------------------------------------------------------------------------

enum class Verdict { pass, fail, na };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "na";
  }
}

struct CheckResult {
  std::string name;
  double value = 0.0;
  std::string criterion;  // human-readable threshold, e.g. "< 1e-9"
  bool pass = false;
  bool informational = false;  // does not affect the verdict
};

struct MetricTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ExperimentReport {
  std::string experiment;
  ExperimentConfig config;
  std::vector<CheckResult> checks;
  std::vector<MetricTable> tables;
  std::vector<std::pair<std::string, double>> tolerances;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  Verdict verdict() const {
    bool any = false;
    for (const auto& c : checks) {
      if (c.informational) continue;
      any = true;
      if (!c.pass) return Verdict::fail;
    }
    return any ? Verdict::pass : Verdict::na;
  }

  void check(std::string name, double value, std::string criterion, bool pass,
             bool informational = false) {
    checks.push_back({std::move(name), value, std::move(criterion), pass, informational});
  }

  void tol(std::string name, double value) { tolerances.emplace_back(std::move(name), value); }
};

// CSV cells carry 17 significant digits so doubles round-trip bit-exactly.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_report(const ExperimentReport& report, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::vector<std::string> csv_files;
  for (const auto& table : report.tables) {
    const std::string file = report.experiment + "_" + table.name + ".csv";
    std::ofstream out(fs::path(out_dir) / file, std::ios::binary);
    if (!out) throw Error("cannot write " + file);
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << format_g17(row[i]);
      out << "\n";
    }
    csv_files.push_back(file);
  }

  nlohmann::json j;
  j["experiment"] = report.experiment;
  j["config"] = config_to_json(report.config);
  j["verdict"] = to_string(report.verdict());
  j["wall_seconds"] = report.wall_seconds;
  j["tables"] = csv_files;
  j["notes"] = report.notes;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"criterion", c.criterion},
                      {"pass", c.pass},
                      {"informational", c.informational}});
  }
  j["checks"] = checks;
  nlohmann::json tol = nlohmann::json::object();
  for (const auto& [name, value] : report.tolerances) tol[name] = value;
  j["tolerances"] = tol;

  std::ofstream out(fs::path(out_dir) / "report.json", std::ios::binary);
  if (!out) throw Error("cannot write report.json");
  out << j.dump(2) << "\n";
}

// -----------------------------------------------------------------------------
// shared helpers

// Rectangular grid in the closed strip S_1: n_re points across [0, tau/2]
// (evenness and periodicity cover the rest) times n_im points across
// [-1/2, 1/2].  Corners include both degenerate lattice branches.
inline std::vector<complex_t> s1_grid(const TreeParams& params, int n_re, int n_im) {
  std::vector<complex_t> grid;
  grid.reserve(static_cast<std::size_t>(n_re) * n_im);
  for (int i = 0; i < n_re; ++i) {
    const double re = (n_re == 1) ? 0.0 : (params.tau / 2.0) * i / (n_re - 1);
    for (int j = 0; j < n_im; ++j) {
      const double im = (n_im == 1) ? 0.0 : -0.5 + static_cast<double>(j) / (n_im - 1);
      grid.emplace_back(re, im);
    }
  }
  return grid;
}

inline complex_t random_unit_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double re = u(rng);
    const double im = u(rng);
    if (re * re + im * im <= 1.0) return {re, im};
  }
}

inline BoundaryData random_boundary_data(const TreeParams& params, int depth,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<complex_t> values(static_cast<std::size_t>(sphere_size(params, depth)));
  for (auto& v : values) v = random_unit_disk(rng);
  return BoundaryData(params, depth, std::move(values));
}

namespace detail {

// Least-squares eigenvalue and relative residual of f on the common interior:
// lambda* = <Lf, f>/<f, f>, residual = ||Lf - lambda* f||_2 / ||f||_2, with
// radial inner products weighted by sphere sizes.
struct NonEigenCertificate {
  complex_t lambda;
  double residual;
};

inline NonEigenCertificate non_eigen_certificate(const TreeParams& params,
                                                 const RadialProfile& f) {
  const RadialProfile lf = laplacian_radial(params, f);
  complex_t num = 0.0;
  double den = 0.0;
  for (int n = 0; n <= lf.radius(); ++n) {
    const double w = static_cast<double>(sphere_size(params, n));
    num += w * lf[n] * std::conj(f[n]);
    den += w * std::norm(f[n]);
  }
  const complex_t lambda = num / den;
  double err = 0.0;
  for (int n = 0; n <= lf.radius(); ++n) {
    const double w = static_cast<double>(sphere_size(params, n));
    err += w * std::norm(lf[n] - lambda * f[n]);
  }
  return {lambda, std::sqrt(err / den)};
}

inline std::vector<int> curve_radii(int r_max) {
  std::vector<int> radii;
  for (int r = 20; r <= r_max; r += 20) radii.push_back(r);
  return radii;
}

inline MetricTable curve_table(const std::string& name, const GrowthCurve& curve) {
  MetricTable t{name, {"radius", "partial_quasinorm"}, {}};
  for (std::size_t i = 0; i < curve.radii.size(); ++i)
    t.rows.push_back({static_cast<double>(curve.radii[i]), curve.values[i]});
  return t;
}

}  // namespace detail

// -----------------------------------------------------------------------------
// experiment runners

// Eigenfunction identity L phi_z = gamma(z) phi_z checked with the full-ball
// Laplacian over a z-grid in S_1.
inline ExperimentReport run_eigencheck(const ExperimentConfig& cfg) {
  if (cfg.radius < 2) throw ConfigError("eigencheck: radius must be >= 2 (no interior)");
  const TreeParams params(cfg.q);
  ExperimentReport report;
  report.experiment = "eigencheck";
  report.config = cfg;
  report.tol("eigen_residual_max", 1e-9);

  MetricTable table{"residuals", {"z_re", "z_im", "gamma_re", "gamma_im", "residual"}, {}};
  double worst = 0.0;
  for (const complex_t z : s1_grid(params, 5, 5)) {
    const RadialProfile phi = phi_profile(params, z, cfg.radius);
    const BallFunction ball = embed_radial(params, phi);
    const BallFunction lap = laplacian(ball);
    const complex_t g = gamma_map(params, z);
    double residual = 0.0;
    std::int64_t offset = 0;
    for (int n = 0; n <= lap.radius; ++n) {
      const std::int64_t count = sphere_size(params, n);
      for (std::int64_t r = 0; r < count; ++r)
        residual = std::max(residual, std::abs(lap[offset + r] - g * phi[n]));
      offset += count;
    }
    worst = std::max(worst, residual);
    table.rows.push_back({z.real(), z.imag(), g.real(), g.imag(), residual});
  }
  report.tables.push_back(std::move(table));
  report.check("eigen_residual_max", worst, "< 1e-9", worst < 1e-9);
  return report;
}

// Boundary image gamma(dS_p) against the spectrum ellipse, plus a rectangular
// membership grid.  p = 2 degenerates to the segment [1-b, 1+b].
inline ExperimentReport run_spectrum_map(const ExperimentConfig& cfg) {
  if (cfg.p < 1.0) throw ConfigError("spectrum-map: p must be in [1, inf)");
  const TreeParams params(cfg.q);
  ExperimentReport report;
  report.experiment = "spectrum-map";
  report.config = cfg;
  report.tol("boundary_residual_max", 1e-10);
  report.tol("segment_endpoint_error", 1e-12);

  const double dp = std::abs(delta_p(cfg.p));
  const bool degenerate = dp == 0.0;

  MetricTable boundary{"boundary", {"s", "w_re", "w_im", "residual"}, {}};
  double worst = 0.0;
  constexpr int n_samples = 200;
  for (int j = 0; j < n_samples; ++j) {
    const double s = -params.tau / 2.0 + j * params.tau / n_samples;
    const complex_t w = gamma_map(params, complex_t(s, dp));
    double residual;
    if (degenerate) {
      residual = std::abs(w.imag());  // segment: boundary samples stay on the axis
    } else {
      residual = std::abs(ellipse_residual(params, w, cfg.p));
    }
    worst = std::max(worst, residual);
    boundary.rows.push_back({s, w.real(), w.imag(), residual});
  }
  report.tables.push_back(std::move(boundary));
  report.check("boundary_residual_max", worst, "< 1e-10", worst < 1e-10);

  const double end_lo = std::abs(gamma_map(params, complex_t(0.0, 0.0)) - (1.0 - params.b));
  const double end_hi =
      std::abs(gamma_map(params, complex_t(params.tau / 2.0, 0.0)) - (1.0 + params.b));
  const double end_err = std::max(end_lo, end_hi);
  report.check("segment_endpoint_error", end_err, "< 1e-12", end_err < 1e-12);

  MetricTable grid{"membership", {"w_re", "w_im", "member", "residual"}, {}};
  constexpr int n_re = 51, n_im = 25;
  for (int i = 0; i < n_re; ++i) {
    const double re = -0.25 + 2.5 * i / (n_re - 1);
    for (int j = 0; j < n_im; ++j) {
      const double im = -1.2 + 2.4 * j / (n_im - 1);
      const auto m = spectrum_membership(params, complex_t(re, im), cfg.p);
      grid.rows.push_back({re, im, m.member ? 1.0 : 0.0, m.residual});
    }
  }
  report.tables.push_back(std::move(grid));
  return report;
}

// The introduction's counterexample: f_k = gamma(z1)^k phi_{z1} + gamma(z2)^k
// phi_{z2} with |gamma(z1)| = |gamma(z2)|.  Uniformly bounded when the shell
// modulus is 1, yet f_0 is provably far from every eigenfunction.
inline ExperimentReport run_roe_counterexample(const ExperimentConfig& cfg) {
  const TreeParams params(cfg.q);
  const double modulus = cfg.z.real();
  if (modulus <= 0.0)
    throw ConfigError("roe-counterexample: z[0] (the target |lambda|) must be positive");
  if (cfg.radius < 2) throw ConfigError("roe-counterexample: radius must be >= 2");

  std::pair<SpectralPoint, SpectralPoint> pair = [&] {
    try {
      return find_unimodular_pair(params, modulus, cfg.p);
    } catch (const NoSolution& e) {
      throw ConfigError(std::string("roe-counterexample: ") + e.what());
    }
  }();

  ExperimentReport report;
  report.experiment = "roe-counterexample";
  report.config = cfg;
  report.tol("sup_bound", 2.0 + 1e-9);
  report.tol("non_eigen_separation_fraction", calib::non_eigen_separation_fraction);
  report.tol("bounded_ratio_max", calib::bounded_ratio_max);

  const complex_t g1 = gamma_map(params, pair.first);
  const complex_t g2 = gamma_map(params, pair.second);
  const double residual_floor = non_eigen_threshold(std::abs(g1 - g2));
  const RadialProfile phi1 = phi_profile(params, pair.first, cfg.radius);
  const RadialProfile phi2 = phi_profile(params, pair.second, cfg.radius);

  MetricTable sups{"sup_per_k", {"k", "sup_abs"}, {}};
  double overall_sup = 0.0;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    const complex_t a = std::pow(g1, k);
    const complex_t b = std::pow(g2, k);
    double sup = 0.0;
    for (int n = 0; n <= cfg.radius; ++n)
      sup = std::max(sup, std::abs(a * phi1[n] + b * phi2[n]));
    overall_sup = std::max(overall_sup, sup);
    sups.rows.push_back({static_cast<double>(k), sup});
  }
  report.tables.push_back(std::move(sups));

  const bool unimodular = std::abs(modulus - 1.0) < 1e-12;
  if (unimodular) {
    report.check("sup_bound", overall_sup, "<= 2 + 1e-9", overall_sup <= 2.0 + 1e-9);
  } else {
    // annulus instance: boundedness lives in the L^{p',inf} truncations
    const double p_conj = cfg.p / (cfg.p - 1.0);
    const auto radii = detail::curve_radii(200);
    int which = 0;
    for (const SpectralPoint& zp : {pair.first, pair.second}) {
      ++which;
      const GrowthCurve curve = radial_growth_curve(
          params, [&](int n) { return phi_closed(params, zp.z, n); }, p_conj, radii);
      const double ratio = decade_ratio(curve);
      report.check("phi" + std::to_string(which) + "_weak_curve_ratio", ratio,
                   "< " + format_g17(calib::bounded_ratio_max), ratio < calib::bounded_ratio_max);
      report.tables.push_back(
          detail::curve_table("phi" + std::to_string(which) + "_weak_curve", curve));
    }
  }

  RadialProfile f0(cfg.radius);
  for (int n = 0; n <= cfg.radius; ++n) f0[n] = phi1[n] + phi2[n];
  const auto cert = detail::non_eigen_certificate(params, f0);
  report.tol("non_eigen_residual_min", residual_floor);
  report.check("non_eigen_residual", cert.residual, ">= " + format_g17(residual_floor),
               cert.residual >= residual_floor);

  MetricTable meta{"pair", {"z1_re", "z1_im", "z2_re", "z2_im", "gamma1_re", "gamma1_im",
                            "gamma2_re", "gamma2_im", "lsq_lambda_re", "lsq_lambda_im",
                            "non_eigen_residual"}, {}};
  meta.rows.push_back({pair.first.z.real(), pair.first.z.imag(), pair.second.z.real(),
                       pair.second.z.imag(), g1.real(), g1.imag(), g2.real(), g2.imag(),
                       cert.lambda.real(), cert.lambda.imag(), cert.residual});
  report.tables.push_back(std::move(meta));
  return report;
}

// Forward verification of Theorem A: a Poisson field with seeded random
// boundary data is an exact eigenfunction, so the normalized truncated
// weak-L2 quasinorms of L^k f stay within a fixed envelope of r_0.
inline ExperimentReport run_theorem_a(const ExperimentConfig& cfg) {
  const TreeParams params(cfg.q);
  if (cfg.z.imag() != 0.0) throw ConfigError("theorem-a: z must be real");
  if (detail::lattice_proximity(params, cfg.z).dist < eps_branch)
    throw DegenerateZ("theorem-a: z on (tau/2)Z is excluded");
  if (cfg.k_max < 0 || cfg.radius < cfg.k_max + 2)
    throw ConfigError("theorem-a: need radius >= k_max + 2");

  ExperimentReport report;
  report.experiment = "theorem-a";
  report.config = cfg;
  report.tol("ratio_envelope", calib::ratio_envelope);

  const int depth = cfg.boundary_depth > 0 ? cfg.boundary_depth : cfg.radius;
  if (depth < cfg.radius) throw ConfigError("theorem-a: boundary_depth < radius");
  const BoundaryData eta = random_boundary_data(params, depth, cfg.seed);
  const BallFunction field = poisson_field(params, cfg.z, eta, cfg.radius);
  const double gamma_abs = std::abs(gamma_map(params, cfg.z));

  // r_k and the k = 0 reference are both taken on the common interior
  // B_{R-k}, which cancels the truncation bias of the shrinking ball.
  MetricTable table{"ratios", {"k", "r_k", "r0_on_common_interior", "ratio"}, {}};
  double ratio_lo = 1.0, ratio_hi = 1.0;
  BallFunction iter = field;
  for (int k = 0; k <= cfg.k_max; ++k) {
    if (k > 0) iter = laplacian(iter);
    const double rk = weak_quasinorm(iter, 2.0) / std::pow(gamma_abs, k);
    BallFunction reference(params, cfg.radius - k);
    for (std::size_t i = 0; i < reference.values.size(); ++i)
      reference.values[i] = field.values[i];
    const double r0 = weak_quasinorm(reference, 2.0);
    const double ratio = rk / r0;
    ratio_lo = std::min(ratio_lo, ratio);
    ratio_hi = std::max(ratio_hi, ratio);
    table.rows.push_back({static_cast<double>(k), rk, r0, ratio});
  }
  report.tables.push_back(std::move(table));
  report.check("ratio_max", ratio_hi, "<= " + format_g17(calib::ratio_envelope),
               ratio_hi <= calib::ratio_envelope);
  report.check("ratio_min", ratio_lo, ">= " + format_g17(1.0 / calib::ratio_envelope),
               ratio_lo >= 1.0 / calib::ratio_envelope);

  // Converse illustration: a two-shell combination meets the single-|gamma|
  // hypothesis yet fails the conclusion, as the introduction's example does.
  try {
    const auto pair = find_unimodular_pair(params, gamma_abs, 1.0);
    RadialProfile f0(cfg.radius);
    const RadialProfile w1 = phi_profile(params, pair.first.z, cfg.radius);
    const RadialProfile w2 = phi_profile(params, pair.second.z, cfg.radius);
    for (int n = 0; n <= cfg.radius; ++n) f0[n] = w1[n] + w2[n];
    const auto cert = detail::non_eigen_certificate(params, f0);
    const double floor = non_eigen_threshold(
        std::abs(gamma_map(params, pair.first) - gamma_map(params, pair.second)));
    report.check("converse_non_eigen_residual", cert.residual,
                 "informational (> " + format_g17(floor) + " expected)", cert.residual > floor,
                 /*informational=*/true);
    report.notes.push_back(
        "converse: two-shell combination at |gamma| = " + format_g17(gamma_abs) +
        " meets the single-shell size hypothesis but is not an eigenfunction");
  } catch (const NoSolution&) {
    report.notes.push_back("converse illustration skipped: |gamma(z)| outside the S_1 annulus");
  }
  return report;
}

// Forward verification of Theorem B at the strip boundary.  Part 1 iterates
// the Laplacian on phi_{i delta_{p'}}; part 2 realizes negative powers by
// dividing the eigenfunction by gamma^k (the only desk-scale realization;
// see the report note), and checks the Lorentz membership dichotomy.
inline ExperimentReport run_theorem_b(const ExperimentConfig& cfg) {
  if (!(cfg.p > 1.0 && cfg.p < 2.0)) throw ConfigError("theorem-b: requires 1 < p < 2");
  if (cfg.k_max < 0 || cfg.radius < cfg.k_max + 2)
    throw ConfigError("theorem-b: need radius >= k_max + 2");
  const TreeParams params(cfg.q);
  const double p_conj = cfg.p / (cfg.p - 1.0);
  const double dpp = delta_p(p_conj);  // delta_{p'} < 0

  ExperimentReport report;
  report.experiment = "theorem-b";
  report.config = cfg;
  report.tol("ratio_envelope", calib::ratio_envelope);
  report.tol("bounded_ratio_max", calib::bounded_ratio_max);

  // part 1: z = i delta_{p'}; quasinorms normalized on the common interior
  const complex_t z1(0.0, dpp);
  const double gamma_abs = std::abs(gamma_map(params, z1));
  const RadialProfile phi1 = phi_profile(params, z1, cfg.radius);
  MetricTable part1{"part1_ratios", {"k", "r_k", "r0_on_common_interior", "ratio"}, {}};
  double ratio_lo = 1.0, ratio_hi = 1.0;
  RadialProfile iter = phi1;
  for (int k = 0; k <= cfg.k_max; ++k) {
    if (k > 0) iter = laplacian_radial(params, iter);
    const double rk = weak_quasinorm(params, iter, p_conj) / std::pow(gamma_abs, k);
    RadialProfile reference(cfg.radius - k);
    for (int n = 0; n <= cfg.radius - k; ++n) reference[n] = phi1[n];
    const double r0 = weak_quasinorm(params, reference, p_conj);
    ratio_lo = std::min(ratio_lo, rk / r0);
    ratio_hi = std::max(ratio_hi, rk / r0);
    part1.rows.push_back({static_cast<double>(k), rk, r0, rk / r0});
  }
  report.tables.push_back(std::move(part1));
  report.check("part1_ratio_max", ratio_hi, "<= " + format_g17(calib::ratio_envelope),
               ratio_hi <= calib::ratio_envelope);
  report.check("part1_ratio_min", ratio_lo, ">= " + format_g17(1.0 / calib::ratio_envelope),
               ratio_lo >= 1.0 / calib::ratio_envelope);

  // part 2: z = tau/2 + i delta_{p'}, negative powers on the eigenfunction
  const complex_t z2(params.tau / 2.0, dpp);
  const complex_t g2 = gamma_map(params, z2);
  MetricTable part2{"part2_ratios", {"k", "r_minus_k", "ratio_to_r0"}, {}};
  const RadialProfile phi2 = phi_profile(params, z2, cfg.radius);
  const double w0 = weak_quasinorm(params, phi2, p_conj);
  for (int k = 0; k <= cfg.k_max; ++k) {
    // L^{-k} phi = gamma^{-k} phi on the eigenfunction
    RadialProfile scaled = phi2;
    const complex_t inv_gk = std::pow(g2, -k);
    for (auto& v : scaled.values) v *= inv_gk;
    const double rk = weak_quasinorm(params, scaled, p_conj) * std::pow(std::abs(g2), k);
    part2.rows.push_back({static_cast<double>(-k), rk, rk / w0});
  }
  report.tables.push_back(std::move(part2));
  report.notes.push_back(
      "part 2 realizes L^{-k} by dividing the eigenfunction by gamma^k; no truncated resolvent "
      "is attempted");

  // Lorentz dichotomy at the strip boundary (part 2's spectral point):
  // weak-L^{p'} plateau, L^{p'} divergence
  const auto radii = detail::curve_radii(200);
  const GrowthCurve weak_curve = radial_growth_curve(
      params, [&](int n) { return phi_closed(params, z2, n); }, p_conj, radii,
      NormKind::weak_quasinorm);
  const GrowthCurve lp_curve = radial_growth_curve(
      params, [&](int n) { return phi_closed(params, z2, n); }, p_conj, radii, NormKind::lp_norm);
  const double weak_ratio = decade_ratio(weak_curve);
  const double lp_slope = loglog_slope(lp_curve);
  const double expected = 1.0 / p_conj;
  report.tables.push_back(detail::curve_table("weak_curve", weak_curve));
  report.tables.push_back(detail::curve_table("lp_curve", lp_curve));
  report.check("weak_curve_ratio", weak_ratio, "< " + format_g17(calib::bounded_ratio_max),
               weak_ratio < calib::bounded_ratio_max);
  report.check("lp_curve_slope", lp_slope,
               "in [" + format_g17(expected - calib::rate_window) + ", " +
                   format_g17(expected + calib::rate_window) + "]",
               lp_slope >= expected - calib::rate_window &&
                   lp_slope <= expected + calib::rate_window);
  return report;
}

// Sharpness suite: the five failure modes around Theorems A and B.
inline ExperimentReport run_sharpness(const ExperimentConfig& cfg) {
  if (!(cfg.p > 1.0 && cfg.p < 2.0)) throw ConfigError("sharpness: requires 1 < p < 2");
  if (cfg.radius < 7) throw ConfigError("sharpness: radius must be >= 7");
  const TreeParams params(cfg.q);
  ExperimentReport report;
  report.experiment = "sharpness";
  report.config = cfg;
  report.tol("non_eigen_separation_fraction", calib::non_eigen_separation_fraction);
  report.tol("bounded_ratio_max", calib::bounded_ratio_max);
  report.tol("linear_slope_window_lo", calib::linear_slope_lo);
  report.tol("linear_slope_window_hi", calib::linear_slope_hi);
  report.tol("repaired_bound_tolerance", calib::repaired_bound_tolerance);

  const auto radii = detail::curve_radii(200);

  // item 1: phi_0 escapes weak-L2 at a linear rate ...
  const GrowthCurve phi0_curve = radial_growth_curve(
      params, [&](int n) { return phi_closed(params, complex_t(0.0, 0.0), n); }, 2.0, radii);
  const double slope0 = loglog_slope(phi0_curve);
  report.tables.push_back(detail::curve_table("item1_phi0_weak_curve", phi0_curve));
  report.check("item1_phi0_weak_slope", slope0,
               "in [" + format_g17(calib::linear_slope_lo) + ", " +
                   format_g17(calib::linear_slope_hi) + "]",
               slope0 >= calib::linear_slope_lo && slope0 <= calib::linear_slope_hi);

  // ... while the repaired bound sup |phi_0^{-1} L^k phi_0| / gamma(0)^k is
  // identically 1 (up to the gamma(0)^{-k} roundoff amplification).
  {
    const double g0 = std::abs(gamma_map(params, complex_t(0.0, 0.0)));
    RadialProfile phi0 = phi_profile(params, complex_t(0.0, 0.0), cfg.radius);
    RadialProfile iter = phi0;
    double worst = 0.0;
    for (int k = 0; k <= std::min(cfg.k_max, cfg.radius - 2); ++k) {
      if (k > 0) iter = laplacian_radial(params, iter);
      double sup = 0.0;
      for (int n = 0; n <= iter.radius(); ++n)
        sup = std::max(sup, std::abs(iter[n] / phi0[n]) / std::pow(g0, k));
      worst = std::max(worst, std::abs(sup - 1.0));
    }
    report.check("item1_repaired_bound_error", worst,
                 "< " + format_g17(calib::repaired_bound_tolerance),
                 worst < calib::repaired_bound_tolerance);
  }

  // item 2: real non-degenerate z gives a bounded weak-L2 curve but a
  // divergent L^{2,2} = L^2 curve (rate R^{1/2}).
  const complex_t z_nd(params.tau / 8.0, 0.0);
  const GrowthCurve weak_nd = radial_growth_curve(
      params, [&](int n) { return phi_closed(params, z_nd, n); }, 2.0, radii);
  const GrowthCurve l2_nd = radial_growth_curve(
      params, [&](int n) { return phi_closed(params, z_nd, n); }, 2.0, radii, NormKind::lp_norm);
  const double ratio_nd = decade_ratio(weak_nd);
  const double slope_l2 = loglog_slope(l2_nd);
  report.tables.push_back(detail::curve_table("item2_weak_curve", weak_nd));
  report.tables.push_back(detail::curve_table("item2_l2_curve", l2_nd));
  report.check("item2_weak_curve_ratio", ratio_nd, "< " + format_g17(calib::bounded_ratio_max),
               ratio_nd < calib::bounded_ratio_max);
  report.check("item2_l2_slope", slope_l2,
               "in [" + format_g17(0.5 - calib::rate_window) + ", " +
                   format_g17(0.5 + calib::rate_window) + "]",
               slope_l2 >= 0.5 - calib::rate_window && slope_l2 <= 0.5 + calib::rate_window);

  // item 3: a single k is not enough in Theorem A.
  {
    const double s1 = params.tau / 8.0, s2 = params.tau / 6.0;
    RadialProfile f(cfg.radius);
    const RadialProfile w1 = phi_profile(params, complex_t(s1, 0.0), cfg.radius);
    const RadialProfile w2 = phi_profile(params, complex_t(s2, 0.0), cfg.radius);
    for (int n = 0; n <= cfg.radius; ++n) f[n] = w1[n] + w2[n];
    const auto cert = detail::non_eigen_certificate(params, f);
    const double floor = non_eigen_threshold(std::abs(
        gamma_map(params, complex_t(s1, 0.0)) - gamma_map(params, complex_t(s2, 0.0))));
    report.check("item3_non_eigen_residual", cert.residual, ">= " + format_g17(floor),
                 cert.residual >= floor);
    report.notes.push_back("item 3 uses s1 = tau/8, s2 = tau/6 with gamma(s_i) <= gamma(tau/5)");
  }

  // items 4-5: boundary-shift counterexamples strictly inside the annulus.
  {
    const double dp = std::abs(delta_p(cfg.p));
    const double lo = 1.0 - params.b * std::cosh(dp * params.log_q);
    const double hi = 1.0 + params.b * std::cosh(dp * params.log_q);
    const double modulus = 0.5 * (lo + hi);
    const auto pair = find_unimodular_pair(params, modulus, cfg.p);
    const double p_conj = cfg.p / (cfg.p - 1.0);
    int which = 0;
    for (const SpectralPoint& zp : {pair.first, pair.second}) {
      ++which;
      const GrowthCurve curve = radial_growth_curve(
          params, [&](int n) { return phi_closed(params, zp.z, n); }, p_conj, radii);
      const double ratio = decade_ratio(curve);
      report.check("item45_phi" + std::to_string(which) + "_weak_curve_ratio", ratio,
                   "< " + format_g17(calib::bounded_ratio_max), ratio < calib::bounded_ratio_max);
    }
    RadialProfile f(cfg.radius);
    const RadialProfile w1 = phi_profile(params, pair.first.z, cfg.radius);
    const RadialProfile w2 = phi_profile(params, pair.second.z, cfg.radius);
    for (int n = 0; n <= cfg.radius; ++n) f[n] = w1[n] + w2[n];
    const auto cert = detail::non_eigen_certificate(params, f);
    const double floor = non_eigen_threshold(
        std::abs(gamma_map(params, pair.first) - gamma_map(params, pair.second)));
    report.check("item45_non_eigen_residual", cert.residual, ">= " + format_g17(floor),
                 cert.residual >= floor);
  }
  return report;
}

namespace detail {

// Least-squares projection of f onto the span of the given lattice functions
// over f's window; returns the relative L2 residual.
inline double projection_residual(const LatticeFunction& f,
                                  const std::vector<LatticeFunction>& basis) {
  const std::size_t m = basis.size();
  std::vector<std::vector<complex_t>> gram(m, std::vector<complex_t>(m, 0.0));
  std::vector<complex_t> rhs(m, 0.0);
  const std::size_t n = f.values.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      complex_t s = 0.0;
      for (std::size_t t = 0; t < n; ++t) s += basis[j].values[t] * std::conj(basis[i].values[t]);
      gram[i][j] = s;
    }
    complex_t s = 0.0;
    for (std::size_t t = 0; t < n; ++t) s += f.values[t] * std::conj(basis[i].values[t]);
    rhs[i] = s;
  }
  // Gaussian elimination with partial pivoting
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < m; ++row)
      if (std::abs(gram[row][col]) > std::abs(gram[pivot][col])) pivot = row;
    std::swap(gram[col], gram[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    if (std::abs(gram[col][col]) == 0.0) throw Error("projection: singular Gram matrix");
    for (std::size_t row = col + 1; row < m; ++row) {
      const complex_t factor = gram[row][col] / gram[col][col];
      for (std::size_t c = col; c < m; ++c) gram[row][c] -= factor * gram[col][c];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<complex_t> coef(m, 0.0);
  for (std::size_t row = m; row-- > 0;) {
    complex_t s = rhs[row];
    for (std::size_t c = row + 1; c < m; ++c) s -= gram[row][c] * coef[c];
    coef[row] = s / gram[row][row];
  }
  double err = 0.0, den = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    complex_t approx = 0.0;
    for (std::size_t i = 0; i < m; ++i) approx += coef[i] * basis[i].values[t];
    err += std::norm(f.values[t] - approx);
    den += std::norm(f.values[t]);
  }
  return std::sqrt(err / den);
}

}  // namespace detail

// The q = 1 story on Z (and the Z^2 remark): plane waves are eigenfunctions
// with eigenvalue 1 - cos(alpha), and degree-1 polynomial-times-wave chains
// stay inside their four-dimensional span under the Laplacian.
inline ExperimentReport run_zcase(const ExperimentConfig& cfg) {
  const double alpha = cfg.z.real();
  if (!(alpha > 0.0 && alpha <= std::numbers::pi))
    throw ConfigError("zcase: alpha (z[0]) must lie in (0, pi]");
  if (cfg.radius < 8) throw ConfigError("zcase: window half-width (radius) must be >= 8");

  const int w = cfg.radius;
  ExperimentReport report;
  report.experiment = "zcase";
  report.config = cfg;
  report.tol("plane_wave_residual", 1e-12);
  report.tol("projection_residual", 1e-9);

  const double eig = 1.0 - std::cos(alpha);
  const auto wave = [&](double a) {
    return [a](const std::vector<int>& m) { return std::polar(1.0, a * m[0]); };
  };

  // (a) plane-wave eigen identity on Z
  {
    const LatticeFunction f = make_lattice({{-w, w}}, wave(alpha));
    const LatticeFunction lf = laplacian_lattice(f);
    double residual = 0.0;
    for (int m = -w + 1; m <= w - 1; ++m) {
      const std::vector<int> idx{m};
      residual = std::max(residual, std::abs(lf.at(idx) - eig * f.at(idx)));
    }
    report.check("plane_wave_residual", residual, "< 1e-12", residual < 1e-12);
    report.check("eigenvalue", eig, "= 1 - cos(alpha)", true, /*informational=*/true);
  }

  // (b) degree-1 chain f_{k+1} = L f_k / (1 - cos alpha) stays in
  // span{e^{im a}, m e^{im a}, e^{-im a}, m e^{-im a}}
  {
    LatticeFunction f = make_lattice({{-w, w}}, [&](const std::vector<int>& m) {
      const complex_t plus = std::polar(1.0, alpha * m[0]);
      const complex_t minus = std::polar(1.0, -alpha * m[0]);
      return (0.5 * m[0] + 1.0) * plus + (complex_t(-0.25, 0.0) * static_cast<double>(m[0]) +
                                          complex_t(0.0, 0.75)) * minus;
    });
    const int k_steps = std::min(cfg.k_max, w - 8);
    double worst = 0.0;
    MetricTable chain{"chain", {"k", "projection_residual"}, {}};
    for (int k = 0; k <= k_steps; ++k) {
      if (k > 0) {
        f = laplacian_lattice(f);
        for (auto& v : f.values) v /= eig;
      }
      const int lo = f.window[0].first, hi = f.window[0].second;
      std::vector<LatticeFunction> basis;
      basis.push_back(make_lattice({{lo, hi}}, wave(alpha)));
      basis.push_back(make_lattice({{lo, hi}}, [&](const std::vector<int>& m) {
        return static_cast<double>(m[0]) * std::polar(1.0, alpha * m[0]);
      }));
      basis.push_back(make_lattice({{lo, hi}}, wave(-alpha)));
      basis.push_back(make_lattice({{lo, hi}}, [&](const std::vector<int>& m) {
        return static_cast<double>(m[0]) * std::polar(1.0, -alpha * m[0]);
      }));
      const double residual = detail::projection_residual(f, basis);
      worst = std::max(worst, residual);
      chain.rows.push_back({static_cast<double>(k), residual});
    }
    report.tables.push_back(std::move(chain));
    report.check("projection_residual_max", worst, "< 1e-9", worst < 1e-9);
  }

  // (c) Z^2 plane wave, the sublinear-growth remark's setting
  {
    const double beta = std::numbers::pi / 2.0;
    const LatticeFunction g = make_lattice({{-10, 10}, {-10, 10}}, [&](const std::vector<int>& m) {
      return std::polar(1.0, beta * m[0] + beta * m[1]);
    });
    const LatticeFunction lg = laplacian_lattice(g);
    const double eig2 = 1.0 - (std::cos(beta) + std::cos(beta)) / 2.0;
    double residual = 0.0;
    for (int m0 = -9; m0 <= 9; ++m0)
      for (int m1 = -9; m1 <= 9; ++m1) {
        const std::vector<int> idx{m0, m1};
        residual = std::max(residual, std::abs(lg.at(idx) - eig2 * g.at(idx)));
      }
    report.check("z2_plane_wave_residual", residual, "< 1e-12", residual < 1e-12);
    report.check("z2_eigenvalue", eig2, "= 1 - (cos a + cos b)/2", true, /*informational=*/true);
  }
  return report;
}

// Computable consequences of the isomorphism theorem: reconstruction from
// Abel coefficients, support and evenness of the coefficient sequence, and
// the seminorm-equivalence ratio table.
inline ExperimentReport run_isomorphism(const ExperimentConfig& cfg) {
  if (cfg.radius < 1 || cfg.radius > 14)
    throw ConfigError("isomorphism: support radius must be in [1, 14]");
  const TreeParams params(cfg.q);
  ExperimentReport report;
  report.experiment = "isomorphism";
  report.config = cfg;
  report.tol("reconstruction_residual", 1e-10);
  report.tol("support_leak", 1e-10);
  report.tol("evenness_error", 1e-12);
  report.tol("seminorm_ratio_max", calib::seminorm_ratio_max);

  constexpr int corpus_size = 50;
  std::mt19937_64 rng(cfg.seed);
  std::vector<RadialProfile> corpus;
  corpus.reserve(corpus_size);
  {
    RadialProfile delta(cfg.radius);
    delta[0] = 1.0;
    corpus.push_back(std::move(delta));
  }
  for (int i = 1; i < corpus_size; ++i) {
    RadialProfile f(cfg.radius);
    for (int n = 0; n <= cfg.radius; ++n) f[n] = random_unit_disk(rng);
    corpus.push_back(std::move(f));
  }

  double worst_recon = 0.0, worst_leak = 0.0, worst_even = 0.0;
  for (const auto& f : corpus) {
    const CoefficientSequence coeffs = abel_coefficients(params, f);
    // (i) reconstruction on a 64-point real grid
    for (int j = 0; j < 64; ++j) {
      const double s = -params.tau / 2.0 + j * params.tau / 64.0;
      const complex_t direct = spherical_ft(params, f, complex_t(s, 0.0));
      const complex_t series = evaluate_coefficients(params, coeffs, complex_t(s, 0.0));
      worst_recon = std::max(worst_recon, std::abs(direct - series));
    }
    // (ii) evenness and support cutoff via oversampling
    for (int n = 1; n <= coeffs.n_max; ++n)
      worst_even = std::max(worst_even, std::abs(coeffs.at(n) - coeffs.at(-n)));
    const int n_over = cfg.radius + 4;
    const TorusSamples oversampled = sample_torus(params, 2 * n_over + 2, [&](double s) {
      return spherical_ft(params, f, complex_t(s, 0.0));
    });
    const CoefficientSequence wide = fourier_coefficients(params, oversampled, n_over);
    for (int n = cfg.radius + 1; n <= n_over; ++n)
      worst_leak = std::max({worst_leak, std::abs(wide.at(n)), std::abs(wide.at(-n))});
  }
  report.check("reconstruction_residual_max", worst_recon, "< 1e-10", worst_recon < 1e-10);
  report.check("support_leak_max", worst_leak, "< 1e-10", worst_leak < 1e-10);
  report.check("evenness_error_max", worst_even, "< 1e-12", worst_even < 1e-12);

  {
    const CoefficientSequence dc = abel_coefficients(params, corpus.front());
    double err = std::abs(dc.at(0) - 1.0);
    for (int n = 1; n <= dc.n_max; ++n)
      err = std::max({err, std::abs(dc.at(n)), std::abs(dc.at(-n))});
    report.check("delta_coefficients_error", err, "< 1e-12", err < 1e-12);
  }

  // (iii) seminorm-equivalence ratios, reported informally
  MetricTable ratios{"seminorm_ratios",
                     {"m", "p", "lambda_lower_over_nu_max", "nu_over_lambda_max"}, {}};
  double worst_ratio = 0.0;
  for (int m : {2, 3, 4}) {
    for (double p : {1.25, 1.5, 2.0}) {
      double r1_max = 0.0, r2_max = 0.0;
      for (const auto& f : corpus) {
        const CoefficientSequence coeffs = abel_coefficients(params, f);
        const double nu = schwartz_seminorm(params, f, m, p);
        const double lam_low = lambda_seminorm(params, coeffs, m - 2, p);
        const double lam_high = lambda_seminorm(params, coeffs, m, p);
        if (nu <= 0.0 || lam_high <= 0.0) throw Error("isomorphism: vanishing seminorm");
        r1_max = std::max(r1_max, lam_low / nu);
        r2_max = std::max(r2_max, nu / lam_high);
      }
      worst_ratio = std::max({worst_ratio, r1_max, r2_max});
      ratios.rows.push_back({static_cast<double>(m), p, r1_max, r2_max});
    }
  }
  report.tables.push_back(std::move(ratios));
  report.check("seminorm_ratio_max", worst_ratio,
               "< " + format_g17(calib::seminorm_ratio_max) + " (consistency only)",
               worst_ratio < calib::seminorm_ratio_max, /*informational=*/true);
  return report;
}

inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  if (cfg.experiment == "eigencheck") report = run_eigencheck(cfg);
  else if (cfg.experiment == "spectrum-map") report = run_spectrum_map(cfg);
  else if (cfg.experiment == "roe-counterexample") report = run_roe_counterexample(cfg);
  else if (cfg.experiment == "theorem-a") report = run_theorem_a(cfg);
  else if (cfg.experiment == "theorem-b") report = run_theorem_b(cfg);
  else if (cfg.experiment == "sharpness") report = run_sharpness(cfg);
  else if (cfg.experiment == "zcase") report = run_zcase(cfg);
  else if (cfg.experiment == "isomorphism") report = run_isomorphism(cfg);
  else throw ConfigError("unknown experiment: " + cfg.experiment);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace treeharm
