#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point outside the metric's chart domain.
struct DomainError : Error {
  using Error::Error;
};

// Tangent vector y = 0 passed where F is undefined.
struct ZeroVector : Error {
  using Error::Error;
};

// Fundamental tensor fails the strong-convexity eigenvalue floor.
struct NotConvex : Error {
  using Error::Error;
};

// g_ij not invertible at the pivot tolerance.
struct SingularMetric : Error {
  using Error::Error;
};

// -Ric_ik failed positive-definiteness (theorem-3 precondition).
struct NotNegativeDefinite : Error {
  using Error::Error;
};

// Unit-speed drift exceeded the integrator's acceptance threshold.
struct StepTooLarge : Error {
  using Error::Error;
};

// Q samples do not cover the requested solution grid.
struct GridMismatch : Error {
  using Error::Error;
};

// |p'(s)| below tolerance where the Schwarzian needs p' != 0.
struct CriticalPoint : Error {
  using Error::Error;
};

// Moebius/closed-form coefficients with vanishing determinant.
struct DegenerateCoefficients : Error {
  using Error::Error;
};

// principal_solution asked for in an oscillatory direction.
struct NotNonoscillatory : Error {
  using Error::Error;
};

// Interval closures fail to cover the analyzed window.
struct CoverageGap : Error {
  using Error::Error;
};

// Consecutive chain segments disagree at the shared point.
struct BrokenChain : Error {
  using Error::Error;
};

// Lemma-2 rescaling exceeds the verified sweep of the projective parameter.
struct ParameterNotGlobal : Error {
  using Error::Error;
};

// Two-point shooting failed within budget.
struct NoGeodesicFound : Error {
  using Error::Error;
};

// Malformed descriptor / run configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace finsler
