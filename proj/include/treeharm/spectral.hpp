#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include "treeharm/errors.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

// Branch selection around the degenerate lattice (tau/2)*Z.  Inside
// eps_branch the exact degenerate formula is used; between eps_branch and
// eps_recur_fallback the closed form would cancel catastrophically in the
// c-function, so evaluation falls back to the radial eigen-recurrence.
inline constexpr double eps_branch = 1e-9;
inline constexpr double eps_recur_fallback = 1e-4;

// delta_p = 1/p - 1/2 with the conventions delta_1 = 1/2, delta_inf = -1/2.
inline double delta_p(double p) {
  if (p < 1.0) throw Error("delta_p: p must be >= 1");
  if (std::isinf(p)) return -0.5;
  return 1.0 / p - 0.5;
}

// Strip S_p = { z : |Im z| <= |delta_p| }.
struct Strip {
  double p;
  double delta;
  double half_width;

  explicit Strip(double p_arg) : p(p_arg), delta(delta_p(p_arg)), half_width(std::abs(delta)) {}

  bool contains(complex_t z) const { return std::abs(z.imag()) <= half_width; }
};

// Spectral parameter with its torus representative, Re z in [-tau/2, tau/2).
// All spectral quantities are even and tau-periodic, so the canonical
// representative additionally folds Re z into [0, tau/2].
struct SpectralPoint {
  complex_t z;
  complex_t reduced;

  SpectralPoint(const TreeParams& params, complex_t z_arg) : z(z_arg) {
    double re = std::fmod(z_arg.real() + params.tau / 2.0, params.tau);
    if (re < 0) re += params.tau;
    reduced = complex_t(re - params.tau / 2.0, z_arg.imag());
  }

  complex_t canonical() const {
    return complex_t(std::abs(reduced.real()), reduced.real() < 0 ? -reduced.imag() : reduced.imag());
  }
};

namespace detail {

// Distance from z to the nearest point of (tau/2)Z together with that
// point's parity: 0 for tau*Z, 1 for tau/2 + tau*Z.
struct LatticeProximity {
  double dist;
  int parity;
};

inline LatticeProximity lattice_proximity(const TreeParams& params, complex_t z) {
  const double half = params.tau / 2.0;
  const double k = std::round(z.real() / half);
  const double dre = z.real() - k * half;
  const double dist = std::hypot(dre, z.imag());
  const long long ki = static_cast<long long>(k);
  return {dist, static_cast<int>(((ki % 2) + 2) % 2)};
}

}  // namespace detail

// gamma(z) = 1 - (q^{1/2+iz} + q^{1/2-iz})/(q+1) = 1 - b cos(z log q).
// The cosine form is the evaluation form; the exponential form is kept as a
// test oracle.
inline complex_t gamma_map(const TreeParams& params, complex_t z) {
  return 1.0 - params.b * std::cos(z * params.log_q);
}

inline complex_t gamma_map(const TreeParams& params, const SpectralPoint& z) {
  return gamma_map(params, z.z);
}

// c(z) = (sqrt q/(q+1)) (q^{1/2+iz} - q^{-1/2-iz}) / (q^{iz} - q^{-iz}),
// meromorphic with poles on (tau/2)Z.  Written in sine/cosine form so the
// denominator 2i sin(z log q) keeps full relative accuracy near the poles.
inline complex_t c_func(const TreeParams& params, complex_t z) {
  const auto prox = detail::lattice_proximity(params, z);
  if (prox.dist < eps_branch)
    throw NearPole("c_func: z within eps_branch of (tau/2)Z");
  const double sq = std::sqrt(static_cast<double>(params.q));
  const complex_t cos_z = std::cos(z * params.log_q);
  const complex_t sin_z = std::sin(z * params.log_q);
  const complex_t num = (sq - 1.0 / sq) * cos_z + complex_t(0, 1) * (sq + 1.0 / sq) * sin_z;
  const complex_t den = complex_t(0, 2) * sin_z;
  return sq / (params.q + 1) * num / den;
}

inline complex_t c_func(const TreeParams& params, const SpectralPoint& z) {
  return c_func(params, z.z);
}

// Unique radial solution of L(phi) = gamma(z) phi with phi(o) = 1, generated
// by the radial three-term recurrence.  Serves as an independent oracle for
// the closed form and stays stable near the degenerate lattice.
inline RadialProfile phi_recur(const TreeParams& params, complex_t z, int n_max) {
  if (n_max < 0) throw Error("phi_recur: negative radius");
  RadialProfile phi(n_max);
  const complex_t g = gamma_map(params, z);
  phi[0] = 1.0;
  if (n_max >= 1) phi[1] = 1.0 - g;
  const double qd = params.q;
  for (int n = 1; n < n_max; ++n)
    phi[n + 1] = ((qd + 1.0) * (1.0 - g) * phi[n] - phi[n - 1]) / qd;
  return phi;
}

inline RadialProfile phi_recur(const TreeParams& params, const SpectralPoint& z, int n_max) {
  return phi_recur(params, z.z, n_max);
}

namespace detail {

inline complex_t phi_degenerate(const TreeParams& params, int parity, int n) {
  const double head = (static_cast<double>(params.q - 1) / (params.q + 1)) * n + 1.0;
  const double decay = std::pow(static_cast<double>(params.q), -0.5 * n);
  double sign = 1.0;
  if (parity == 1 && (n % 2 != 0)) sign = -1.0;
  return head * decay * sign;
}

}  // namespace detail

// Spherical function phi_z(n) by its closed form: the two degenerate
// branches on (tau/2)Z, otherwise c(z)q^{(iz-1/2)n} + c(-z)q^{(-iz-1/2)n}.
// In the annulus (eps_branch, eps_recur_fallback) around a degenerate point
// the recurrence is used instead.
inline complex_t phi_closed(const TreeParams& params, complex_t z, int n) {
  if (n < 0) throw Error("phi_closed: negative radius");
  const auto prox = detail::lattice_proximity(params, z);
  if (prox.dist < eps_branch) return detail::phi_degenerate(params, prox.parity, n);
  if (prox.dist < eps_recur_fallback) {
    const RadialProfile p = phi_recur(params, z, n);
    return p[n];
  }
  const complex_t cz = c_func(params, z);
  const complex_t cmz = c_func(params, -z);
  const complex_t iz(-z.imag(), z.real());
  const complex_t expo_plus = (iz - 0.5) * (params.log_q * n);
  const complex_t expo_minus = (-iz - 0.5) * (params.log_q * n);
  return cz * std::exp(expo_plus) + cmz * std::exp(expo_minus);
}

inline complex_t phi_closed(const TreeParams& params, const SpectralPoint& z, int n) {
  return phi_closed(params, z.z, n);
}

// Closed-form profile on 0..n_max; one branch decision for the whole range.
inline RadialProfile phi_profile(const TreeParams& params, complex_t z, int n_max) {
  if (n_max < 0) throw Error("phi_profile: negative radius");
  const auto prox = detail::lattice_proximity(params, z);
  if (prox.dist < eps_branch) {
    RadialProfile out(n_max);
    for (int n = 0; n <= n_max; ++n) out[n] = detail::phi_degenerate(params, prox.parity, n);
    return out;
  }
  if (prox.dist < eps_recur_fallback) return phi_recur(params, z, n_max);
  RadialProfile out(n_max);
  const complex_t cz = c_func(params, z);
  const complex_t cmz = c_func(params, -z);
  const complex_t iz(-z.imag(), z.real());
  for (int n = 0; n <= n_max; ++n) {
    out[n] = cz * std::exp((iz - 0.5) * (params.log_q * n)) +
             cmz * std::exp((-iz - 0.5) * (params.log_q * n));
  }
  return out;
}

inline RadialProfile phi_profile(const TreeParams& params, const SpectralPoint& z, int n_max) {
  return phi_profile(params, z.z, n_max);
}

// --- L^p spectrum of the Laplacian ------------------------------------------

struct MembershipResult {
  bool member;
  double residual;  // E(w) - 1 on the elliptic path; signed distance proxy at p = 2
};

// Elliptic level function of the L^p spectrum.  Throws on the degenerate
// p = 2 axis, where the ellipse collapses to a segment.
inline double ellipse_residual(const TreeParams& params, complex_t w, double p) {
  const double d = delta_p(p);
  const double ch = std::cosh(d * params.log_q);
  const double sh = std::sinh(d * params.log_q);
  if (sh == 0.0)
    throw DegenerateAxis("ellipse_residual: p = 2 collapses the ellipse; use the segment test");
  const double u = (1.0 - w.real()) / (params.b * ch);
  const double v = w.imag() / (params.b * sh);
  return u * u + v * v - 1.0;
}

// Membership of w in the L^p spectrum, the image of S_p under gamma.
// p = 2 routes to the segment test on [1-b, 1+b].  The boolean carries a
// roundoff allowance so exact boundary points do not flip on the last ulp.
inline MembershipResult spectrum_membership(const TreeParams& params, complex_t w, double p) {
  constexpr double eps_boundary = 1e-12;
  if (p < 1.0) throw Error("spectrum_membership: p must be in [1, inf]");
  if (delta_p(p) == 0.0) {
    const double lo = 1.0 - params.b;
    const double hi = 1.0 + params.b;
    const bool member = (w.imag() == 0.0) && (w.real() >= lo) && (w.real() <= hi);
    const double off_axis = std::abs(w.imag());
    const double off_seg = std::max({0.0, lo - w.real(), w.real() - hi});
    return {member, std::max(off_axis, off_seg)};
  }
  const double r = ellipse_residual(params, w, p);
  return {r <= eps_boundary, r};
}

// --- eigenvalue shells and the counterexample pair ---------------------------

namespace detail {

// |gamma(s+it)| is increasing in s on [0, tau/2] for fixed t, so the shell
// |gamma| = modulus can be located by bisection on each horizontal line.
inline double abs_gamma_on_line(const TreeParams& params, double s, double t) {
  return std::abs(gamma_map(params, complex_t(s, t)));
}

inline bool attainable_on_line(const TreeParams& params, double modulus, double t) {
  const double ch = std::cosh(t * params.log_q);
  return std::abs(1.0 - params.b * ch) < modulus && modulus < 1.0 + params.b * ch;
}

inline double bisect_shell(const TreeParams& params, double modulus, double t) {
  double lo = 0.0, hi = params.tau / 2.0;
  for (int iter = 0; iter < 64 && hi - lo > 1e-13; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (abs_gamma_on_line(params, mid, t) < modulus)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Two spectral points z1 != z2 in S_p with |gamma(z1)| = |gamma(z2)| = modulus
// and gamma(z1) != gamma(z2).  The admissible moduli form the open annulus
// (gamma(i delta_p'), gamma(tau/2 + i delta_p')); roots are searched on the
// horizontal lines t = 0 and t = |delta_p'|/2 first, then on lines moving
// toward the strip boundary.
inline std::pair<SpectralPoint, SpectralPoint> find_unimodular_pair(const TreeParams& params,
                                                                    double modulus, double p) {
  const double dp = std::abs(delta_p(p));
  const double lo = 1.0 - params.b * std::cosh(dp * params.log_q);
  const double hi = 1.0 + params.b * std::cosh(dp * params.log_q);
  if (!(modulus > lo && modulus < hi))
    throw NoSolution("find_unimodular_pair: modulus outside the open annulus (" +
                     std::to_string(lo) + ", " + std::to_string(hi) + ")");

  std::vector<double> lines = {0.0, dp / 2.0};
  for (int j = 1; j <= 48; ++j) lines.push_back(dp * (1.0 - std::ldexp(1.0, -j - 1)));
  lines.push_back(dp);

  std::vector<SpectralPoint> found;
  std::vector<double> used_t;
  for (double t : lines) {
    if (found.size() == 2) break;
    if (!detail::attainable_on_line(params, modulus, t)) continue;
    if (!used_t.empty() && std::abs(t - used_t.back()) < 1e-15) continue;
    const double s = detail::bisect_shell(params, modulus, t);
    found.emplace_back(params, complex_t(s, t));
    used_t.push_back(t);
  }
  if (found.size() < 2)
    throw NoSolution("find_unimodular_pair: could not locate two shell points");

  const complex_t g1 = gamma_map(params, found[0]);
  const complex_t g2 = gamma_map(params, found[1]);
  if (std::abs(g1 - g2) < 1e-10)
    throw NoSolution("find_unimodular_pair: degenerate pair, gamma values coincide");
  return {found[0], found[1]};
}

}  // namespace treeharm
