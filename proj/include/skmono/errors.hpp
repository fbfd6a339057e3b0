#pragma once

#include <stdexcept>
#include <string>

namespace skmono {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- exact core ---
struct NonPositiveDeterminant : Error {
  using Error::Error;
};
struct NotUnimodular : Error {
  using Error::Error;
};
struct RankDeficient : Error {
  using Error::Error;
};

// --- modular group machinery ---
struct IndexCapExceeded : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};
struct NotConjugateIntoIntegral : Error {
  using Error::Error;
};
struct PullbackNotIntegral : Error {
  using Error::Error;
};

// --- fiber classification ---
struct HyperbolicMonodromy : Error {
  using Error::Error;
};
struct ForbiddenOrientation : Error {
  using Error::Error;
};
struct NonIntegralRescale : Error {
  using Error::Error;
};

// --- numerics ---
struct OutsideDomain : Error {
  using Error::Error;
};
struct NonPositiveDensity : Error {
  using Error::Error;
};
struct BranchTrackingFailure : Error {
  using Error::Error;
};
struct QuadratureFailure : Error {
  using Error::Error;
};
struct DegenerateSamples : Error {
  using Error::Error;
};
struct StencilOutsideDomain : Error {
  using Error::Error;
};

// --- parsing ---
struct ParseError : Error {
  using Error::Error;
};

}  // namespace skmono
