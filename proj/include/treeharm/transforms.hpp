#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "treeharm/errors.hpp"
#include "treeharm/spectral.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

// Samples of a tau-periodic function at s_j = -tau/2 + j*tau/N, j = 0..N-1.
// The grid is half-open and always starts at -tau/2.
struct TorusSamples {
  int n_samples = 0;
  std::vector<complex_t> values;

  static double node(const TreeParams& params, int n_samples, int j) {
    return -params.tau / 2.0 + j * params.tau / n_samples;
  }
};

template <typename Fn>
inline TorusSamples sample_torus(const TreeParams& params, int n_samples, Fn&& fn) {
  if (n_samples < 1) throw Error("sample_torus: need at least one sample");
  TorusSamples out;
  out.n_samples = n_samples;
  out.values.resize(static_cast<std::size_t>(n_samples));
  for (int j = 0; j < n_samples; ++j)
    out.values[static_cast<std::size_t>(j)] = fn(TorusSamples::node(params, n_samples, j));
  return out;
}

// Two-sided coefficient sequence F(n), |n| <= n_max.
struct CoefficientSequence {
  int n_max = 0;
  std::vector<complex_t> coeffs;  // index n + n_max

  explicit CoefficientSequence(int n_max_arg = 0)
      : n_max(n_max_arg), coeffs(static_cast<std::size_t>(2 * n_max_arg + 1)) {}

  complex_t& at(int n) { return coeffs[static_cast<std::size_t>(n + n_max)]; }
  const complex_t& at(int n) const { return coeffs[static_cast<std::size_t>(n + n_max)]; }
};

// Spherical Fourier transform of a finitely supported radial function:
// fhat(z) = sum_n f(n) |S_n| phi_z(n).
inline complex_t spherical_ft(const TreeParams& params, const RadialProfile& f, complex_t z) {
  const RadialProfile phi = phi_profile(params, z, f.radius());
  complex_t sum = 0.0;
  for (int n = 0; n <= f.radius(); ++n)
    sum += f[n] * static_cast<double>(sphere_size(params, n)) * phi[n];
  return sum;
}

inline complex_t spherical_ft(const TreeParams& params, const RadialProfile& f,
                              const SpectralPoint& z) {
  return spherical_ft(params, f, z.z);
}

// F(n) = (1/N) sum_j g(s_j) q^{-i n s_j}.  Exact to roundoff for
// trigonometric polynomials in q^{is} of degree <= n_max once N >= 2 n_max + 1.
inline CoefficientSequence fourier_coefficients(const TreeParams& params, const TorusSamples& g,
                                                int n_max) {
  const int n_samples = g.n_samples;
  if (n_samples < 2 * n_max + 1)
    throw Undersampled("fourier_coefficients: N = " + std::to_string(n_samples) +
                       " < 2*n_max + 1 = " + std::to_string(2 * n_max + 1));
  CoefficientSequence out(n_max);
  for (int n = -n_max; n <= n_max; ++n) {
    complex_t sum = 0.0;
    for (int j = 0; j < n_samples; ++j) {
      const double s = TorusSamples::node(params, n_samples, j);
      const double angle = -n * s * params.log_q;
      sum += g.values[static_cast<std::size_t>(j)] * std::polar(1.0, angle);
    }
    out.at(n) = sum / static_cast<double>(n_samples);
  }
  return out;
}

// Abel coefficients of a radial function with support radius R: the torus
// Fourier coefficients of its spherical transform, with N = 2R+2 samples
// (one slack sample, so an out-of-support leak shows up as aliasing).
// Reconstruction fhat(z) = sum_n Af(n) q^{inz} holds to roundoff.
inline CoefficientSequence abel_coefficients(const TreeParams& params, const RadialProfile& f) {
  const int support = f.radius();
  const TorusSamples samples = sample_torus(
      params, 2 * support + 2, [&](double s) { return spherical_ft(params, f, complex_t(s, 0.0)); });
  return fourier_coefficients(params, samples, support);
}

// sum_n F(n) q^{inz} on the strip.
inline complex_t evaluate_coefficients(const TreeParams& params, const CoefficientSequence& F,
                                       complex_t z) {
  const complex_t iz(-z.imag(), z.real());
  complex_t sum = F.at(0);
  for (int n = 1; n <= F.n_max; ++n) {
    const complex_t w = std::exp(iz * (params.log_q * n));
    sum += F.at(n) * w + F.at(-n) / w;
  }
  return sum;
}

// --- Schwartz-type seminorms --------------------------------------------------

// nu_m(f) = max over the support of (1+|x|)^m q^{|x|/p} |f(x)|.
inline double schwartz_seminorm(const TreeParams& params, const RadialProfile& f, int m,
                                double p) {
  if (m < 0) throw Error("schwartz_seminorm: m must be >= 0");
  double best = 0.0;
  for (int n = 0; n <= f.radius(); ++n) {
    const double w = std::pow(1.0 + n, m) * std::exp(n * params.log_q / p);
    best = std::max(best, w * std::abs(f[n]));
  }
  return best;
}

inline double schwartz_seminorm(const TreeParams& params, const BallFunction& f, int m, double p) {
  if (m < 0) throw Error("schwartz_seminorm: m must be >= 0");
  double best = 0.0;
  std::int64_t offset = 0;
  for (int n = 0; n <= f.radius; ++n) {
    const std::int64_t count = sphere_size(params, n);
    const double w = std::pow(1.0 + n, m) * std::exp(n * params.log_q / p);
    for (std::int64_t r = 0; r < count; ++r)
      best = std::max(best, w * std::abs(f[offset + r]));
    offset += count;
  }
  return best;
}

// lambda_m of the weighted sequence q^{delta_p |n|} F(n):
// max_n (1+|n|)^m q^{delta_p |n|} |F(n)|.
inline double lambda_seminorm(const TreeParams& params, const CoefficientSequence& F, int m,
                              double p) {
  if (m < 0) throw Error("lambda_seminorm: m must be >= 0");
  const double dp = delta_p(p);
  double best = 0.0;
  for (int n = -F.n_max; n <= F.n_max; ++n) {
    const double w = std::pow(1.0 + std::abs(n), m) * std::exp(dp * std::abs(n) * params.log_q);
    best = std::max(best, w * std::abs(F.at(n)));
  }
  return best;
}

// Estimate of mu_m(g) = sup_{S_p} |g^(m)| for g holomorphic on the strip:
// samples the m-th derivative on the two boundary lines Im z = +-|delta_p|
// over one period (maximum modulus pushes the sup there).  Derivatives come
// from Cauchy-integral quadrature on small circles; the trapezoidal rule on a
// circle converges spectrally, which keeps m >= 3 usable.  This is an
// estimator, not a certified bound.
inline double strip_seminorm(const TreeParams& params,
                             const std::function<complex_t(complex_t)>& g, int m, double p,
                             int grid = 128) {
  if (m < 0) throw Error("strip_seminorm: m must be >= 0");
  if (grid < 64) throw Error("strip_seminorm: grid resolution must be >= 64");
  const double half_width = std::abs(delta_p(p));
  const double circle_radius =
      (half_width > 0.0) ? std::min(half_width / 2.0, params.tau / grid) : params.tau / grid;

  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;

  std::vector<double> lines = {half_width};
  if (half_width > 0.0) lines.push_back(-half_width);

  constexpr int cauchy_nodes = 64;
  double best = 0.0;
  for (double t : lines) {
    for (int j = 0; j < grid; ++j) {
      const complex_t z0(-params.tau / 2.0 + j * params.tau / grid, t);
      if (m == 0) {
        best = std::max(best, std::abs(g(z0)));
        continue;
      }
      complex_t acc = 0.0;
      for (int k = 0; k < cauchy_nodes; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / cauchy_nodes;
        const complex_t zeta = z0 + std::polar(circle_radius, theta);
        acc += g(zeta) * std::polar(1.0, -m * theta);
      }
      acc *= fact / (cauchy_nodes * std::pow(circle_radius, m));
      best = std::max(best, std::abs(acc));
    }
  }
  return best;
}

}  // namespace treeharm
