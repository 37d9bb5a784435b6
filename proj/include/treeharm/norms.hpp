#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "treeharm/errors.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

namespace detail {

inline std::vector<double> magnitudes(const BallFunction& f) {
  std::vector<double> out(f.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(f.values[i]);
  return out;
}

// (|value|, multiplicity) pairs sorted by decreasing value; multiplicities are
// kept as reals so radii in the hundreds stay cheap.
inline std::vector<std::pair<double, double>> radial_levels(const TreeParams& params,
                                                            const RadialProfile& f) {
  std::vector<std::pair<double, double>> levels;
  levels.reserve(f.values.size());
  for (int n = 0; n <= f.radius(); ++n)
    levels.emplace_back(std::abs(f[n]), sphere_size_real(params, n));
  std::sort(levels.begin(), levels.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return levels;
}

}  // namespace detail

// L^p norm on counting measure; p = inf gives the sup norm.
inline double lp_norm(const std::vector<double>& magnitudes, double p) {
  if (p < 1.0) throw Error("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double best = 0.0;
    for (double v : magnitudes) best = std::max(best, v);
    return best;
  }
  double sum = 0.0;
  for (double v : magnitudes) sum += std::pow(v, p);
  return std::pow(sum, 1.0 / p);
}

inline double lp_norm(const BallFunction& f, double p) { return lp_norm(detail::magnitudes(f), p); }

inline double lp_norm(const TreeParams& params, const RadialProfile& f, double p) {
  if (p < 1.0) throw Error("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double best = 0.0;
    for (const auto& v : f.values) best = std::max(best, std::abs(v));
    return best;
  }
  double sum = 0.0;
  for (int n = 0; n <= f.radius(); ++n)
    sum += std::pow(std::abs(f[n]), p) * sphere_size_real(params, n);
  return std::pow(sum, 1.0 / p);
}

// Weak quasinorm ||f||_{p,inf} = max_k k^{1/p} a_k over the decreasing
// rearrangement a_1 >= a_2 >= ... of |f| (counting measure); equals
// sup_{t>0} t |{|f| > t}|^{1/p}.
inline double weak_quasinorm(std::vector<double> magnitudes, double p) {
  if (p <= 1.0) throw Error("weak_quasinorm: p must be > 1");
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<double>());
  double best = 0.0;
  for (std::size_t k = 0; k < magnitudes.size(); ++k)
    best = std::max(best, std::pow(static_cast<double>(k + 1), 1.0 / p) * magnitudes[k]);
  return best;
}

inline double weak_quasinorm(const BallFunction& f, double p) {
  return weak_quasinorm(detail::magnitudes(f), p);
}

// Radial version: within one level the maximum of k^{1/p} a is attained at
// the last index, so only cumulative sphere counts enter.
inline double weak_quasinorm(const TreeParams& params, const RadialProfile& f, double p) {
  if (p <= 1.0) throw Error("weak_quasinorm: p must be > 1");
  double best = 0.0;
  double cumulative = 0.0;
  for (const auto& [value, count] : detail::radial_levels(params, f)) {
    cumulative += count;
    best = std::max(best, std::pow(cumulative, 1.0 / p) * value);
  }
  return best;
}

// Lorentz quasinorm ||f||_{p,r} = (sum_k k^{r/p-1} a_k^r)^{1/r}; r = inf
// routes to the weak quasinorm.
inline double lorentz_norm(std::vector<double> magnitudes, double p, double r) {
  if (p <= 1.0) throw Error("lorentz_norm: p must be > 1");
  if (r < 1.0) throw Error("lorentz_norm: r must be >= 1");
  if (std::isinf(r)) return weak_quasinorm(std::move(magnitudes), p);
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<double>());
  double sum = 0.0;
  for (std::size_t k = 0; k < magnitudes.size(); ++k)
    sum += std::pow(static_cast<double>(k + 1), r / p - 1.0) * std::pow(magnitudes[k], r);
  return std::pow(sum, 1.0 / r);
}

inline double lorentz_norm(const BallFunction& f, double p, double r) {
  return lorentz_norm(detail::magnitudes(f), p, r);
}

// --- growth diagnostics -------------------------------------------------------

enum class NormKind { weak_quasinorm, lp_norm };

// Partial quasinorms of the truncations f|B_R, one entry per requested radius.
struct GrowthCurve {
  std::vector<int> radii;
  std::vector<double> values;
};

// Curve of truncated norms of a radial function given by a per-radius
// generator; rearrangements use sphere cardinalities, never vertices.
inline GrowthCurve radial_growth_curve(const TreeParams& params,
                                       const std::function<complex_t(int)>& f, double p,
                                       const std::vector<int>& radii,
                                       NormKind kind = NormKind::weak_quasinorm) {
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw Error("radial_growth_curve: radii must be increasing");
  GrowthCurve curve;
  if (radii.empty()) return curve;
  RadialProfile profile(radii.back());
  for (int n = 0; n <= radii.back(); ++n) profile[n] = f(n);
  for (int radius : radii) {
    RadialProfile trunc(radius);
    for (int n = 0; n <= radius; ++n) trunc[n] = profile[n];
    const double v = (kind == NormKind::weak_quasinorm) ? weak_quasinorm(params, trunc, p)
                                                        : lp_norm(params, trunc, p);
    curve.radii.push_back(radius);
    curve.values.push_back(v);
  }
  return curve;
}

// Ratio curve(R_max) / curve(R_half) with R_half the first radius >= R_max/2.
// Values near 1 indicate a plateau (truncations already saturated).
inline double decade_ratio(const GrowthCurve& curve) {
  if (curve.radii.size() < 2) throw Error("decade_ratio: need at least two radii");
  const int r_max = curve.radii.back();
  std::size_t i_half = 0;
  while (i_half < curve.radii.size() && curve.radii[i_half] * 2 < r_max) ++i_half;
  const double denom = curve.values[i_half];
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  return curve.values.back() / denom;
}

// Least-squares slope of log(value) against log(R) over radii in
// [R_max/2, R_max]; the exponent of the observed growth rate.
inline double loglog_slope(const GrowthCurve& curve) {
  const int r_max = curve.radii.empty() ? 0 : curve.radii.back();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < curve.radii.size(); ++i) {
    if (2 * curve.radii[i] < r_max) continue;
    if (curve.values[i] <= 0.0) continue;
    const double x = std::log(static_cast<double>(curve.radii[i]));
    const double y = std::log(curve.values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw Error("loglog_slope: need at least two usable points in the fit window");
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace treeharm
