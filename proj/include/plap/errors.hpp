#pragma once

#include <stdexcept>
#include <string>

namespace plap {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed user input (config, weight schema, parameter domain).
struct InputError : Error {
  using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

/// Sign-change isolation inside a weight piece failed validation.
struct RootIsolationError : Error {
  using Error::Error;
};

/// Bracketed root search for the representation constant did not converge.
struct RootFindError : Error {
  RootFindError(const std::string& msg, double lo, double hi, double residual)
      : Error(msg), bracket_lo(lo), bracket_hi(hi), last_residual(residual) {}
  double bracket_lo, bracket_hi, last_residual;
};

/// The weight has no positive part, so no supersolution can be built.
struct ZeroPositivePart : Error {
  using Error::Error;
};

/// The weight has a nontrivial negative part where nonnegativity is required.
struct NegativePart : Error {
  using Error::Error;
};

/// No cone entry: either S(m) is not in the interior of the positive cone or
/// no epsilon makes the subsolution cone invariant.
struct NoConeEntry : Error {
  using Error::Error;
};

/// A quantitative hypothesis of the sufficient condition fails.
struct HypothesisFailed : Error {
  using Error::Error;
};

/// Fixed-point or Newton iteration exhausted its budget.
struct NonConvergence : Error {
  NonConvergence(const std::string& msg, int iters, double last_gap)
      : Error(msg), iterations(iters), gap(last_gap) {}
  int iterations;
  double gap;
};

/// A profile that must be positive in the interior is not.
struct NonPositive : Error {
  using Error::Error;
};

/// The sampled envelope bounds c_f xi^-gamma <= f <= C_f xi^-gamma fail.
struct EnvelopeViolation : Error {
  using Error::Error;
};

}  // namespace plap
