// Test-only oracles, kept independent of the library paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "treeharm/tree.hpp"

namespace oracles {

using treeharm::complex_t;
using treeharm::TreeParams;

// Explicit adjacency model of the ball B_R, built by breadth-first child
// expansion of words.  Deliberately naive: everything is materialized.
struct ExplicitBall {
  std::vector<std::vector<int>> words;
  std::vector<std::vector<std::size_t>> adjacency;
  std::map<std::vector<int>, std::size_t> index;

  ExplicitBall(const TreeParams& params, int radius) {
    words.push_back({});
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto w = words[i];  // copy: push_back below may reallocate
      if (static_cast<int>(w.size()) >= radius) continue;
      const int limit = w.empty() ? params.q : params.q - 1;
      for (int c = 0; c <= limit; ++c) {
        auto child = w;
        child.push_back(c);
        words.push_back(std::move(child));
      }
    }
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    adjacency.resize(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].empty()) continue;
      auto parent = words[i];
      parent.pop_back();
      const std::size_t j = index.at(parent);
      adjacency[i].push_back(j);
      adjacency[j].push_back(i);
    }
  }

  std::vector<int> bfs_distances(std::size_t source) const {
    std::vector<int> dist(words.size(), -1);
    std::queue<std::size_t> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adjacency[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push(v);
        }
    }
    return dist;
  }
};

// The printed form of the gamma map, kept as an oracle for the cosine form.
inline complex_t gamma_printed(const TreeParams& params, complex_t z) {
  const complex_t iz(-z.imag(), z.real());
  const complex_t a = std::exp((0.5 + iz) * params.log_q);
  const complex_t b = std::exp((0.5 - iz) * params.log_q);
  return 1.0 - (a + b) / static_cast<double>(params.q + 1);
}

// sup_{t>0} t |{|f| > t}|^{1/p} evaluated over a t-grid containing every
// distinct |f| value (the sup is attained there).
inline double weak_quasinorm_sup_t(std::vector<double> magnitudes, double p) {
  double best = 0.0;
  for (double t : magnitudes) {
    if (t <= 0.0) continue;
    // just below the level t, the superlevel set {|f| >= t} is counted
    std::size_t count = 0;
    for (double v : magnitudes)
      if (v >= t) ++count;
    best = std::max(best, t * std::pow(static_cast<double>(count), 1.0 / p));
  }
  return best;
}

inline std::vector<double> random_magnitudes(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_real_distribution<double> mag(0.0, 10.0);
  std::vector<double> out(static_cast<std::size_t>(len(rng)));
  for (auto& v : out) v = mag(rng);
  return out;
}

inline complex_t random_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double re = u(rng), im = u(rng);
    if (re * re + im * im <= 1.0) return {re, im};
  }
}

}  // namespace oracles
