#pragma once

#include <stdexcept>
#include <string>

namespace treeharm {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Ray prefix is shorter than the vertex it must resolve a height for.
struct PrefixTooShort : Error {
  using Error::Error;
};

// Spectral parameter too close to a pole of the c-function.
struct NearPole : Error {
  using Error::Error;
};

// Laplacian asked for on a ball/window with no interior left.
struct EmptyInterior : Error {
  using Error::Error;
};

// Boundary data is coarser than the evaluation point requires.
struct DepthTooShallow : Error {
  using Error::Error;
};

// Torus sample count below the exactness bound for the requested degree.
struct Undersampled : Error {
  using Error::Error;
};

// Requested |eigenvalue| outside the admissible annulus.
struct NoSolution : Error {
  using Error::Error;
};

// Elliptic membership formula evaluated on the degenerate p = 2 axis.
struct DegenerateAxis : Error {
  using Error::Error;
};

// Spectral parameter sits on the excluded half-period lattice.
struct DegenerateZ : Error {
  using Error::Error;
};

// Experiment configuration invalid (schema, ranges, preconditions).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace treeharm
