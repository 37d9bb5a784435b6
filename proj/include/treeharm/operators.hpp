#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "treeharm/errors.hpp"
#include "treeharm/spectral.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

// eta in L^inf(Omega), constant on each depth-D cylinder.  Values are stored
// in the canonical rank order of sphere D, which makes the Poisson integral
// an exact finite sum.
struct BoundaryData {
  int q = 2;
  int depth = 1;
  std::vector<complex_t> values;

  BoundaryData() = default;
  BoundaryData(const TreeParams& params, int depth_arg, std::vector<complex_t> values_arg)
      : q(params.q), depth(depth_arg), values(std::move(values_arg)) {
    if (depth < 1) throw Error("BoundaryData: depth must be >= 1");
    if (static_cast<std::int64_t>(values.size()) != sphere_size(params, depth))
      throw Error("BoundaryData: value count does not match cylinder count");
  }

  static BoundaryData constant(const TreeParams& params, int depth, complex_t value) {
    std::vector<complex_t> v(static_cast<std::size_t>(sphere_size(params, depth)), value);
    return BoundaryData(params, depth, std::move(v));
  }

  // Indicator of the cylinder under the given prefix, refined to max(depth,1).
  static BoundaryData indicator(const TreeParams& params, const RayPrefix& prefix) {
    const int d = std::max(prefix.depth(), 1);
    std::vector<complex_t> v(static_cast<std::size_t>(sphere_size(params, d)), 0.0);
    if (prefix.depth() == 0) {
      std::fill(v.begin(), v.end(), complex_t(1.0));
      return BoundaryData(params, d, std::move(v));
    }
    const std::int64_t rank = word_rank(params, prefix.word());
    v[static_cast<std::size_t>(rank)] = 1.0;
    return BoundaryData(params, d, std::move(v));
  }

  // One refinement step: each cylinder value is copied to its q children.
  BoundaryData refined() const {
    const TreeParams params(q);
    std::vector<complex_t> v(values.size() * static_cast<std::size_t>(params.q));
    for (std::size_t r = 0; r < values.size(); ++r)
      for (int c = 0; c < params.q; ++c) v[r * params.q + c] = values[r];
    BoundaryData out;
    out.q = q;
    out.depth = depth + 1;
    out.values = std::move(v);
    return out;
  }

  BoundaryData refined_to(int target_depth) const {
    if (target_depth < depth) throw Error("refined_to: cannot coarsen boundary data");
    BoundaryData out = *this;
    while (out.depth < target_depth) out = out.refined();
    return out;
  }
};

namespace detail {

// Integrals of eta d(nu) over every cylinder of depth <= D, laid out in ball
// order.  Leaves carry eta * nu(cylinder); internal prefixes sum their
// children, so entry 0 is the full boundary integral.
inline std::vector<complex_t> cylinder_integrals(const TreeParams& params,
                                                 const BoundaryData& eta) {
  const int d = eta.depth;
  std::vector<complex_t> tree(static_cast<std::size_t>(ball_size(params, d)));
  const double leaf_measure =
      1.0 / static_cast<double>(cylinder_measure_exact(params, d).den);
  std::int64_t off = ball_size(params, d - 1);
  for (std::size_t r = 0; r < eta.values.size(); ++r)
    tree[static_cast<std::size_t>(off) + r] = eta.values[r] * leaf_measure;
  for (int n = d - 1; n >= 1; --n) {
    const std::int64_t off_n = ball_size(params, n - 1);
    const std::int64_t off_child = ball_size(params, n);
    const std::int64_t count = sphere_size(params, n);
    for (std::int64_t r = 0; r < count; ++r) {
      complex_t sum = 0.0;
      for (int c = 0; c < params.q; ++c) sum += tree[static_cast<std::size_t>(off_child + r * params.q + c)];
      tree[static_cast<std::size_t>(off_n + r)] = sum;
    }
  }
  complex_t total = 0.0;
  for (int c = 0; c <= params.q; ++c) total += tree[static_cast<std::size_t>(1 + c)];
  tree[0] = total;
  return tree;
}

// Poisson evaluation at the sphere-m vertex of given rank, using the
// cylinder-integral tree.  Cylinders are grouped by the depth at which they
// part from the geodesic to the vertex; on each group the kernel
// q^{(1/2+iz) h} is constant with h = 2j - m.
inline complex_t poisson_from_integrals(const TreeParams& params, complex_t z,
                                        const std::vector<complex_t>& tree, int m,
                                        std::int64_t rank) {
  const complex_t expo = (0.5 + complex_t(-z.imag(), z.real())) * params.log_q;
  // prefix integrals T_j along the vertex word, j = 0..m
  complex_t result = 0.0;
  complex_t t_deeper = 0.0;  // T_{j+1} while scanning j = m..0
  std::int64_t r = rank;
  for (int j = m; j >= 1; --j) {
    const complex_t t_j = tree[static_cast<std::size_t>(ball_size(params, j - 1) + r)];
    const int h = 2 * j - m;
    if (j == m)
      result += std::exp(expo * static_cast<double>(h)) * t_j;
    else
      result += std::exp(expo * static_cast<double>(h)) * (t_j - t_deeper);
    t_deeper = t_j;
    r /= params.q;
  }
  const complex_t t_0 = tree[0];
  if (m >= 1)
    result += std::exp(expo * static_cast<double>(-m)) * (t_0 - t_deeper);
  else
    result = t_0;
  return result;
}

}  // namespace detail

// Poisson transform of eta at a single vertex: the exact finite sum
// sum_cylinders q^{(1/2+iz) h_omega(x)} eta(cyl) nu(cyl).
inline complex_t poisson(const TreeParams& params, complex_t z, const BoundaryData& eta,
                         const Vertex& x, bool auto_refine = false) {
  if (eta.q != params.q) throw Error("poisson: boundary data built for different q");
  BoundaryData data = eta;
  if (eta.depth < x.length()) {
    if (!auto_refine)
      throw DepthTooShallow("poisson: eta.depth " + std::to_string(eta.depth) + " < |x| = " +
                            std::to_string(x.length()));
    data = eta.refined_to(x.length());
  }
  const auto tree = detail::cylinder_integrals(params, data);
  const std::int64_t rank = word_rank(params, x.word());
  return detail::poisson_from_integrals(params, z, tree, x.length(), rank);
}

inline complex_t poisson(const TreeParams& params, const SpectralPoint& z,
                         const BoundaryData& eta, const Vertex& x, bool auto_refine = false) {
  return poisson(params, z.z, eta, x, auto_refine);
}

// Poisson transform evaluated on the whole ball B_R.  Per-vertex summation
// order is fixed by the canonical cylinder order, so results are
// deterministic regardless of traversal.
inline BallFunction poisson_field(const TreeParams& params, complex_t z, const BoundaryData& eta,
                                  int radius, bool auto_refine = true) {
  if (eta.q != params.q) throw Error("poisson_field: boundary data built for different q");
  BoundaryData data = eta;
  if (eta.depth < radius) {
    if (!auto_refine)
      throw DepthTooShallow("poisson_field: eta.depth < radius and auto-refine disabled");
    data = eta.refined_to(radius);
  }
  const auto tree = detail::cylinder_integrals(params, data);
  BallFunction out(params, radius);
  out[0] = detail::poisson_from_integrals(params, z, tree, 0, 0);
  for (int n = 1; n <= radius; ++n) {
    const std::int64_t off = ball_size(params, n - 1);
    const std::int64_t count = sphere_size(params, n);
    for (std::int64_t r = 0; r < count; ++r)
      out[off + r] = detail::poisson_from_integrals(params, z, tree, n, r);
  }
  return out;
}

inline BallFunction poisson_field(const TreeParams& params, const SpectralPoint& z,
                                  const BoundaryData& eta, int radius, bool auto_refine = true) {
  return poisson_field(params, z.z, eta, radius, auto_refine);
}

// (Lf)(x) = f(x) - (1/(q+1)) sum_{d(x,y)=1} f(y), defined on the interior
// B_{R-1}.
inline BallFunction laplacian(const BallFunction& f) {
  if (f.radius < 1) throw EmptyInterior("laplacian: ball radius must be >= 1");
  const TreeParams params(f.q);
  BallFunction out(params, f.radius - 1);
  const double inv = 1.0 / (params.q + 1);
  {
    complex_t nb = 0.0;
    for (int c = 0; c <= params.q; ++c) nb += f[1 + c];
    out[0] = f[0] - inv * nb;
  }
  for (int n = 1; n <= f.radius - 1; ++n) {
    const std::int64_t off = ball_size(params, n - 1);
    const std::int64_t off_parent = (n == 1) ? 0 : ball_size(params, n - 2);
    const std::int64_t off_child = ball_size(params, n);
    const std::int64_t count = sphere_size(params, n);
    for (std::int64_t r = 0; r < count; ++r) {
      complex_t nb = f[off_parent + (n == 1 ? 0 : r / params.q)];
      for (int c = 0; c < params.q; ++c) nb += f[off_child + r * params.q + c];
      out[off + r] = f[off + r] - inv * nb;
    }
  }
  return out;
}

// Radial form of the Laplacian: one parent, q forward neighbours.
inline RadialProfile laplacian_radial(const TreeParams& params, const RadialProfile& f) {
  if (f.radius() < 1) throw EmptyInterior("laplacian_radial: profile needs length >= 2");
  RadialProfile out(f.radius() - 1);
  const double qd = params.q;
  out[0] = f[0] - f[1];
  for (int n = 1; n <= f.radius() - 1; ++n)
    out[n] = f[n] - (f[n - 1] + qd * f[n + 1]) / (qd + 1.0);
  return out;
}

inline BallFunction laplacian_iter(const BallFunction& f, int k) {
  if (k < 0) throw Error("laplacian_iter: negative power");
  if (f.radius < k) throw EmptyInterior("laplacian_iter: radius smaller than power");
  BallFunction out = f;
  for (int i = 0; i < k; ++i) out = laplacian(out);
  return out;
}

inline RadialProfile laplacian_iter(const TreeParams& params, const RadialProfile& f, int k) {
  if (k < 0) throw Error("laplacian_iter: negative power");
  if (f.radius() < k) throw EmptyInterior("laplacian_iter: radius smaller than power");
  RadialProfile out = f;
  for (int i = 0; i < k; ++i) out = laplacian_radial(params, out);
  return out;
}

// --- lattice Laplacian on Z^d ------------------------------------------------

// Function on an axis-aligned window of Z^d, row-major over the box.
struct LatticeFunction {
  std::vector<std::pair<int, int>> window;  // inclusive [lo, hi] per dimension
  std::vector<complex_t> values;

  int dims() const { return static_cast<int>(window.size()); }

  std::int64_t extent(int d) const { return window[static_cast<std::size_t>(d)].second -
                                            window[static_cast<std::size_t>(d)].first + 1; }

  std::int64_t count() const {
    std::int64_t n = 1;
    for (int d = 0; d < dims(); ++d) n *= extent(d);
    return n;
  }

  std::int64_t flat_index(const std::vector<int>& m) const {
    std::int64_t idx = 0;
    for (int d = 0; d < dims(); ++d)
      idx = idx * extent(d) + (m[static_cast<std::size_t>(d)] - window[static_cast<std::size_t>(d)].first);
    return idx;
  }

  complex_t& at(const std::vector<int>& m) { return values[static_cast<std::size_t>(flat_index(m))]; }
  const complex_t& at(const std::vector<int>& m) const {
    return values[static_cast<std::size_t>(flat_index(m))];
  }
};

template <typename Fn>
inline LatticeFunction make_lattice(std::vector<std::pair<int, int>> window, Fn&& fn) {
  LatticeFunction f;
  f.window = std::move(window);
  f.values.resize(static_cast<std::size_t>(f.count()));
  std::vector<int> m(static_cast<std::size_t>(f.dims()));
  for (int d = 0; d < f.dims(); ++d) m[static_cast<std::size_t>(d)] = f.window[static_cast<std::size_t>(d)].first;
  for (std::int64_t i = 0; i < f.count(); ++i) {
    f.values[static_cast<std::size_t>(i)] = fn(m);
    for (int d = f.dims() - 1; d >= 0; --d) {
      auto& md = m[static_cast<std::size_t>(d)];
      if (++md <= f.window[static_cast<std::size_t>(d)].second) break;
      md = f.window[static_cast<std::size_t>(d)].first;
    }
  }
  return f;
}

// (Lf)(m) = f(m) - (1/2d) sum_{|m-k|=1} f(k); the window shrinks by one on
// every side (no padding, no wrap).
inline LatticeFunction laplacian_lattice(const LatticeFunction& f) {
  const int d = f.dims();
  if (d < 1) throw Error("laplacian_lattice: dimension must be >= 1");
  std::vector<std::pair<int, int>> shrunk(f.window);
  for (auto& [lo, hi] : shrunk) {
    ++lo;
    --hi;
    if (lo > hi) throw EmptyInterior("laplacian_lattice: window has no interior");
  }
  const double inv = 1.0 / (2.0 * d);
  LatticeFunction out;
  out.window = shrunk;
  out.values.resize(static_cast<std::size_t>(out.count()));
  std::vector<int> m(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)] = shrunk[static_cast<std::size_t>(i)].first;
  for (std::int64_t i = 0; i < out.count(); ++i) {
    complex_t nb = 0.0;
    std::vector<int> k = m;
    for (int dim = 0; dim < d; ++dim) {
      auto& kd = k[static_cast<std::size_t>(dim)];
      kd -= 1;
      nb += f.at(k);
      kd += 2;
      nb += f.at(k);
      kd -= 1;
    }
    out.values[static_cast<std::size_t>(i)] = f.at(m) - inv * nb;
    for (int dim = d - 1; dim >= 0; --dim) {
      auto& md = m[static_cast<std::size_t>(dim)];
      if (++md <= shrunk[static_cast<std::size_t>(dim)].second) break;
      md = shrunk[static_cast<std::size_t>(dim)].first;
    }
  }
  return out;
}

}  // namespace treeharm
