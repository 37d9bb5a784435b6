#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "treeharm/errors.hpp"

namespace treeharm {

using complex_t = std::complex<double>;

// Homogeneous tree of degree q+1 rooted at o.  Vertices are addressed by
// non-backtracking words: the first letter picks one of the q+1 edges at the
// root, every later letter one of the q forward edges, so word length equals
// the distance to the root and no adjacency structure is ever stored.
struct TreeParams {
  int q;         // branching parameter, every vertex has q+1 neighbours
  double log_q;
  double tau;    // spectral period 2*pi/log q
  double b;      // 2*sqrt(q)/(q+1), half-width of the L^2 spectrum

  explicit TreeParams(int q_arg) : q(q_arg) {
    if (q < 2) throw Error("TreeParams: q must be >= 2");
    log_q = std::log(static_cast<double>(q));
    tau = 2.0 * std::numbers::pi / log_q;
    b = 2.0 * std::sqrt(static_cast<double>(q)) / (q + 1);
  }
};

namespace detail {

inline void validate_word(const TreeParams& params, const std::vector<int>& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int limit = (i == 0) ? params.q : params.q - 1;
    if (word[i] < 0 || word[i] > limit)
      throw Error("word letter out of range for q=" + std::to_string(params.q));
  }
}

inline int common_prefix_length(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return static_cast<int>(i);
}

}  // namespace detail

// Word-addressed vertex; the empty word is the root o.
class Vertex {
 public:
  Vertex() = default;
  Vertex(const TreeParams& params, std::vector<int> word) : word_(std::move(word)) {
    detail::validate_word(params, word_);
  }

  static Vertex root() { return {}; }

  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  Vertex parent() const {
    if (word_.empty()) throw Error("root has no parent");
    Vertex v;
    v.word_.assign(word_.begin(), word_.end() - 1);
    return v;
  }

  Vertex child(const TreeParams& params, int label) const {
    const int limit = word_.empty() ? params.q : params.q - 1;
    if (label < 0 || label > limit) throw Error("child label out of range");
    Vertex v;
    v.word_ = word_;
    v.word_.push_back(label);
    return v;
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  std::vector<int> word_;
};

// Finite prefix of a boundary ray, i.e. the depth-|word| cylinder of rays
// through that vertex.  Depth 0 stands for the whole boundary.
class RayPrefix {
 public:
  RayPrefix() = default;
  RayPrefix(const TreeParams& params, std::vector<int> word) : word_(std::move(word)) {
    detail::validate_word(params, word_);
  }

  int depth() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  // n-th vertex on the underlying rays (all rays in the cylinder share it).
  Vertex vertex_at(const TreeParams& params, int n) const {
    if (n < 0 || n > depth()) throw PrefixTooShort("vertex_at: n beyond prefix depth");
    return Vertex(params, std::vector<int>(word_.begin(), word_.begin() + n));
  }

  friend bool operator==(const RayPrefix&, const RayPrefix&) = default;

 private:
  std::vector<int> word_;
};

inline std::int64_t sphere_size(const TreeParams& params, int n) {
  if (n < 0) throw Error("sphere_size: negative radius");
  if (n == 0) return 1;
  std::int64_t size = params.q + 1;
  for (int i = 1; i < n; ++i) {
    if (size > (std::int64_t{1} << 62) / params.q)
      throw Error("sphere_size: radius too large for exact counting");
    size *= params.q;
  }
  return size;
}

inline std::int64_t ball_size(const TreeParams& params, int radius) {
  if (radius < 0) throw Error("ball_size: negative radius");
  std::int64_t total = 1;
  for (int n = 1; n <= radius; ++n) total += sphere_size(params, n);
  return total;
}

// Floating-point sphere/ball counts for radii far beyond exact range.
inline double sphere_size_real(const TreeParams& params, int n) {
  if (n == 0) return 1.0;
  return (params.q + 1) * std::pow(static_cast<double>(params.q), n - 1);
}

inline double ball_size_real(const TreeParams& params, int radius) {
  // 1 + (q+1)(q^R - 1)/(q - 1)
  const double q = params.q;
  return 1.0 + (q + 1) * (std::pow(q, radius) - 1.0) / (q - 1.0);
}

inline int distance(const Vertex& x, const Vertex& y) {
  const int lcp = detail::common_prefix_length(x.word(), y.word());
  return x.length() + y.length() - 2 * lcp;
}

// Horocycle index h_omega(x) = lim_n (n - d(x, omega_n)).  The limit is
// reached once the ray prefix covers the whole of x, hence the precondition.
inline int height(const Vertex& x, const RayPrefix& omega) {
  if (omega.depth() < x.length())
    throw PrefixTooShort("height: prefix depth " + std::to_string(omega.depth()) +
                         " < |x| = " + std::to_string(x.length()));
  const int lcp = detail::common_prefix_length(x.word(), omega.word());
  return 2 * lcp - x.length();
}

// Exact cylinder measure as numerator/denominator; depth capped so the
// denominator (q+1)q^(n-1) stays inside 64 bits.
struct Rational {
  std::uint64_t num;
  std::uint64_t den;
};

inline Rational cylinder_measure_exact(const TreeParams& params, int depth) {
  if (depth < 0) throw Error("cylinder_measure: negative depth");
  if (depth == 0) return {1, 1};
  std::uint64_t den = static_cast<std::uint64_t>(params.q) + 1;
  for (int i = 1; i < depth; ++i) {
    if (den > (std::uint64_t{1} << 62) / params.q)
      throw Error("cylinder_measure: depth too large for exact arithmetic");
    den *= params.q;
  }
  return {1, den};
}

inline double cylinder_measure(const TreeParams& params, const RayPrefix& omega) {
  const Rational r = cylinder_measure_exact(params, omega.depth());
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

// --- canonical ordering -----------------------------------------------------
//
// Within sphere n, a word (w0, w1, ..., w_{n-1}) gets the rank
//   w0*q^(n-1) + w1*q^(n-2) + ... + w_{n-1},
// which is exactly lexicographic order.  Ball order is radius-major:
// index = ball_size(n-1) + rank.  Parent/child moves are rank/q and
// rank*q + c, so no word needs to be materialized in the hot loops.

inline std::int64_t word_rank(const TreeParams& params, const std::vector<int>& word) {
  if (word.empty()) return 0;
  std::int64_t rank = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) rank = rank * params.q + word[i];
  return rank;
}

inline std::vector<int> rank_to_word(const TreeParams& params, int n, std::int64_t rank) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 1; --i) {
    word[static_cast<std::size_t>(i)] = static_cast<int>(rank % params.q);
    rank /= params.q;
  }
  if (n > 0) word[0] = static_cast<int>(rank);
  return word;
}

inline std::int64_t ball_index(const TreeParams& params, const Vertex& x) {
  if (x.length() == 0) return 0;
  return ball_size(params, x.length() - 1) + word_rank(params, x.word());
}

// Complex-valued function on the truncated ball B_R, stored in canonical order.
struct BallFunction {
  int q = 2;
  int radius = 0;
  std::vector<complex_t> values;

  BallFunction() = default;
  BallFunction(const TreeParams& params, int radius_arg)
      : q(params.q),
        radius(radius_arg),
        values(static_cast<std::size_t>(ball_size(params, radius_arg))) {}

  complex_t& operator[](std::int64_t index) { return values[static_cast<std::size_t>(index)]; }
  const complex_t& operator[](std::int64_t index) const {
    return values[static_cast<std::size_t>(index)];
  }

  complex_t& at(const TreeParams& params, const Vertex& x) {
    return values[static_cast<std::size_t>(ball_index(params, x))];
  }
  const complex_t& at(const TreeParams& params, const Vertex& x) const {
    return values[static_cast<std::size_t>(ball_index(params, x))];
  }

  std::size_t size() const { return values.size(); }
};

// Radial function stored as one value per radius 0..R.
struct RadialProfile {
  std::vector<complex_t> values;

  RadialProfile() = default;
  explicit RadialProfile(int radius) : values(static_cast<std::size_t>(radius) + 1) {}

  int radius() const { return static_cast<int>(values.size()) - 1; }
  complex_t& operator[](int n) { return values[static_cast<std::size_t>(n)]; }
  const complex_t& operator[](int n) const { return values[static_cast<std::size_t>(n)]; }
};

// Sphere averaging: the combinatorial realization of averaging over the
// stabilizer of o.  Projects any ball function onto radial functions.
inline RadialProfile radialize(const BallFunction& f) {
  const TreeParams params(f.q);
  RadialProfile out(f.radius);
  std::int64_t offset = 0;
  for (int n = 0; n <= f.radius; ++n) {
    const std::int64_t count = sphere_size(params, n);
    complex_t sum = 0.0;
    for (std::int64_t r = 0; r < count; ++r) sum += f[offset + r];
    out[n] = sum / static_cast<double>(count);
    offset += count;
  }
  return out;
}

inline BallFunction embed_radial(const TreeParams& params, const RadialProfile& f) {
  BallFunction out(params, f.radius());
  std::int64_t offset = 0;
  for (int n = 0; n <= f.radius(); ++n) {
    const std::int64_t count = sphere_size(params, n);
    for (std::int64_t r = 0; r < count; ++r) out[offset + r] = f[n];
    offset += count;
  }
  return out;
}

}  // namespace treeharm
