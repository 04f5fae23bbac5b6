#pragma once

#include <stdexcept>

namespace expara {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid parameter values: a tangency parameter in {0, 1}, a ratio of
// non-collinear points, normalization of a point at infinity, an axis
// point outside its admissible region.
class DomainError : public Error {
public:
  using Error::Error;
};

// Degenerate geometry: flat triangles, collinear Bezier control nets.
class DegenerateInput : public Error {
public:
  using Error::Error;
};

// Results that are mathematically impossible for the given input; indicates
// a numerical failure rather than a caller mistake.
class NumericalError : public Error {
public:
  using Error::Error;
};

// The focal-triangle iteration hit its step cap before converging.
class IterationCapExceeded : public Error {
public:
  using Error::Error;
};

} // namespace expara
