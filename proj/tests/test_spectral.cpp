#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "treeharm/operators.hpp"
#include "treeharm/spectral.hpp"
#include "treeharm/transforms.hpp"

using namespace treeharm;

namespace {

std::vector<complex_t> strip_grid(const TreeParams& params, int n_re, int n_im) {
  std::vector<complex_t> grid;
  for (int i = 0; i < n_re; ++i)
    for (int j = 0; j < n_im; ++j)
      grid.emplace_back(-params.tau / 2.0 + params.tau * i / n_re,
                        -0.5 + 1.0 * j / std::max(n_im - 1, 1));
  return grid;
}

}  // namespace

TEST_CASE("gamma: printed form, pinned values, symmetry") {
  const TreeParams params(2);
  CHECK_THAT(gamma_map(params, complex_t(0, 0)).real(),
             Catch::Matchers::WithinAbs(1.0 - 2.0 * std::sqrt(2.0) / 3.0, 1e-12));
  CHECK_THAT(gamma_map(params, complex_t(params.tau / 2, 0)).real(),
             Catch::Matchers::WithinAbs(1.0 + 2.0 * std::sqrt(2.0) / 3.0, 1e-12));
  CHECK(std::abs(gamma_map(params, complex_t(params.tau / 4, 0)) - 1.0) < 1e-12);

  for (int q : {2, 3, 5}) {
    const TreeParams p(q);
    for (const complex_t z : strip_grid(p, 9, 5)) {
      CHECK(std::abs(gamma_map(p, z) - oracles::gamma_printed(p, z)) < 1e-12);
      CHECK(std::abs(gamma_map(p, z) - gamma_map(p, -z)) < 1e-12);
      CHECK(std::abs(gamma_map(p, z) - gamma_map(p, z + p.tau)) < 1e-12);
    }
  }
}

TEST_CASE("gamma real range is [1-b, 1+b]") {
  const TreeParams params(2);
  double lo = 1e9, hi = -1e9;
  for (int i = 0; i <= 2000; ++i) {
    const double s = -params.tau / 2.0 + params.tau * i / 2000.0;
    const double g = gamma_map(params, complex_t(s, 0)).real();
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  CHECK_THAT(lo, Catch::Matchers::WithinAbs(1.0 - params.b, 1e-12));
  CHECK_THAT(hi, Catch::Matchers::WithinAbs(1.0 + params.b, 1e-12));
}

TEST_CASE("c-function: value at tau/4, functional identity, reflection, poles") {
  const TreeParams params(2);
  CHECK(std::abs(c_func(params, complex_t(params.tau / 4, 0)) - 0.5) < 1e-13);

  for (int i = 1; i < 40; ++i) {
    const complex_t z(params.tau / 2.0 * i / 40.0, (i % 5 - 2) * 0.1);
    if (detail::lattice_proximity(params, z).dist < 1e-3) continue;
    CHECK(std::abs(c_func(params, z) + c_func(params, -z) - 1.0) < 1e-11);
  }

  // Schwarz reflection on the real line
  const complex_t z(params.tau / 8.0, 0.0);
  CHECK(std::abs(c_func(params, -z) - std::conj(c_func(params, z))) < 1e-13);

  CHECK_THROWS_AS(c_func(params, complex_t(0, 0)), NearPole);
  CHECK_THROWS_AS(c_func(params, complex_t(params.tau / 2, 0)), NearPole);
  CHECK_THROWS_AS(c_func(params, complex_t(params.tau + 1e-10, 0)), NearPole);
}

TEST_CASE("phi: closed form pinned values") {
  const TreeParams params(2);
  for (const complex_t z : {complex_t(0.4, 0.1), complex_t(0, 0), complex_t(params.tau / 2, 0)})
    CHECK(std::abs(phi_closed(params, z, 0) - 1.0) < 1e-14);

  CHECK_THAT(phi_closed(params, complex_t(0, 0), 1).real(),
             Catch::Matchers::WithinAbs((1.0 / 3.0 + 1.0) / std::sqrt(2.0), 1e-12));
  CHECK_THAT(phi_closed(params, complex_t(params.tau / 2, 0), 2).real(),
             Catch::Matchers::WithinAbs(5.0 / 6.0, 1e-12));
}

TEST_CASE("phi: recurrence and closed form are mutual oracles") {
  for (int q : {2, 3}) {
    const TreeParams params(q);
    std::vector<complex_t> zs = strip_grid(params, 14, 7);  // 98 points
    zs.emplace_back(0.0, 0.0);
    zs.emplace_back(params.tau / 2.0, 0.0);
    REQUIRE(zs.size() == 100);
    double worst = 0.0;
    for (const complex_t z : zs) {
      const RadialProfile recur = phi_recur(params, z, 30);
      for (int n = 0; n <= 30; ++n)
        worst = std::max(worst, std::abs(recur[n] - phi_closed(params, z, n)));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("phi: recurrence fallback annulus is seamless") {
  const TreeParams params(2);
  // just outside the fallback annulus: direct c-function route
  // just inside: recurrence route; both must agree with phi_recur
  for (const double offset : {2e-4, 0.5e-4, 2e-6, 2e-9}) {
    for (const double base : {0.0, params.tau / 2.0}) {
      const complex_t z(base + offset, 0.0);
      const RadialProfile recur = phi_recur(params, z, 20);
      for (int n = 0; n <= 20; ++n)
        CHECK(std::abs(phi_closed(params, z, n) - recur[n]) < 1e-10);
    }
  }
  // exactly on the lattice: the degenerate branch
  CHECK(std::abs(phi_closed(params, complex_t(0, 0), 3) -
                 phi_recur(params, complex_t(0, 0), 3)[3]) < 1e-13);
}

TEST_CASE("phi: bounded by 1 on S_1, even and periodic") {
  const TreeParams params(2);
  for (const complex_t z : strip_grid(params, 10, 5)) {
    const RadialProfile phi = phi_recur(params, z, 30);
    for (int n = 0; n <= 30; ++n) {
      CHECK(std::abs(phi[n]) <= 1.0 + 1e-10);
      CHECK(std::abs(phi[n] - phi_closed(params, -z, n)) < 1e-10);
      CHECK(std::abs(phi[n] - phi_closed(params, z + params.tau, n)) < 1e-10);
    }
  }
}

TEST_CASE("phi_z(n) is a trigonometric polynomial of degree <= n in z") {
  const TreeParams params(2);
  for (const int n : {3, 7}) {
    const int n_over = n + 5;
    const TorusSamples samples = sample_torus(params, 2 * n_over + 2, [&](double s) {
      return phi_closed(params, complex_t(s, 0.0), n);
    });
    const CoefficientSequence coeffs = fourier_coefficients(params, samples, n_over);
    for (int m = n + 1; m <= n_over; ++m) {
      CHECK(std::abs(coeffs.at(m)) < 1e-10);
      CHECK(std::abs(coeffs.at(-m)) < 1e-10);
    }
  }
}

TEST_CASE("eigen-identity against the radial Laplacian across the strip") {
  for (int q : {2, 3}) {
    const TreeParams params(q);
    double worst = 0.0;
    for (const complex_t z : strip_grid(params, 8, 4)) {
      const RadialProfile phi = phi_recur(params, z, 31);
      const RadialProfile lap = laplacian_radial(params, phi);
      const complex_t g = gamma_map(params, z);
      for (int n = 0; n <= 30; ++n) worst = std::max(worst, std::abs(lap[n] - g * phi[n]));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("spectral point reduction") {
  const TreeParams params(2);
  const SpectralPoint z(params, complex_t(params.tau * 2.25, 0.3));
  CHECK_THAT(z.reduced.real(), Catch::Matchers::WithinAbs(params.tau / 4.0, 1e-12));
  CHECK(z.reduced.imag() == 0.3);
  CHECK(z.canonical().real() >= 0.0);
  // spectral quantities are blind to the reduction
  CHECK(std::abs(gamma_map(params, z.z) - gamma_map(params, z.reduced)) < 1e-12);
}

TEST_CASE("spectrum membership: ellipse identity and segment degeneration") {
  const TreeParams params(2);

  for (const double p : {1.0, 1.25, 1.5}) {
    const double dp = std::abs(delta_p(p));
    for (int i = 0; i < 64; ++i) {
      const double s = -params.tau / 2.0 + params.tau * i / 64.0;
      const complex_t w = gamma_map(params, complex_t(s, dp));
      CHECK(std::abs(ellipse_residual(params, w, p)) < 1e-10);
      CHECK(spectrum_membership(params, w, p).member);
    }
    // interior point and exterior point
    CHECK(spectrum_membership(params, complex_t(1.0, 0.0), p).member);
    CHECK_FALSE(spectrum_membership(params, complex_t(-1.0, 0.0), p).member);
  }

  // p = 2: the segment [1-b, 1+b]
  CHECK(spectrum_membership(params, complex_t(1.0 - params.b, 0.0), 2.0).member);
  CHECK(spectrum_membership(params, complex_t(1.0 + params.b, 0.0), 2.0).member);
  CHECK_FALSE(spectrum_membership(params, complex_t(0.0, 0.0), 2.0).member);
  CHECK_FALSE(spectrum_membership(params, complex_t(1.0, 1e-9), 2.0).member);
  CHECK_THROWS_AS(ellipse_residual(params, complex_t(1.0, 0.0), 2.0), DegenerateAxis);
}

TEST_CASE("strip helpers") {
  CHECK(delta_p(1.0) == 0.5);
  CHECK(delta_p(2.0) == 0.0);
  CHECK(delta_p(std::numeric_limits<double>::infinity()) == -0.5);
  const double p = 1.5;
  const double pc = p / (p - 1.0);
  CHECK_THAT(delta_p(p), Catch::Matchers::WithinAbs(-delta_p(pc), 1e-15));
  CHECK(Strip(1.5).contains(complex_t(1.0, 0.16)));
  CHECK_FALSE(Strip(1.5).contains(complex_t(1.0, 0.2)));
}

TEST_CASE("find_unimodular_pair: introduction case and annulus") {
  const TreeParams params(2);

  // modulus 1 in S_1: one root is tau/4 with gamma = 1 exactly
  const auto pair = find_unimodular_pair(params, 1.0, 1.0);
  const complex_t g1 = gamma_map(params, pair.first);
  const complex_t g2 = gamma_map(params, pair.second);
  CHECK(std::abs(std::abs(g1) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(g2) - 1.0) < 1e-12);
  CHECK(std::abs(g1 - 1.0) < 1e-12);
  CHECK(std::abs(g1 - g2) > 1e-6);
  CHECK(std::abs(pair.first.z - complex_t(params.tau / 4, 0.0)) < 1e-12);
  CHECK(pair.second.z.imag() != 0.0);

  // annulus instances across p
  for (const double p : {1.25, 1.5, 1.8}) {
    const double dp = std::abs(delta_p(p));
    const double lo = 1.0 - params.b * std::cosh(dp * params.log_q);
    const double hi = 1.0 + params.b * std::cosh(dp * params.log_q);
    for (const double frac : {0.25, 0.5, 0.9}) {
      const double modulus = lo + frac * (hi - lo);
      const auto [za, zb] = find_unimodular_pair(params, modulus, p);
      CHECK(std::abs(std::abs(gamma_map(params, za)) - modulus) < 1e-12);
      CHECK(std::abs(std::abs(gamma_map(params, zb)) - modulus) < 1e-12);
      CHECK(std::abs(gamma_map(params, za) - gamma_map(params, zb)) > 1e-8);
      CHECK(std::abs(za.z.imag()) <= dp + 1e-15);
      CHECK(std::abs(zb.z.imag()) <= dp + 1e-15);
    }
    // open annulus: both endpoints rejected
    CHECK_THROWS_AS(find_unimodular_pair(params, lo, p), NoSolution);
    CHECK_THROWS_AS(find_unimodular_pair(params, hi, p), NoSolution);
  }
}
