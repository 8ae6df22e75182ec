#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatcyc {

enum class Errc {
  InvalidArgument,
  NonPrime,
  ReduciblePoly,
  UnsupportedResidueDegree,
  NotAUnit,
  ZeroPolynomial,
  WitnessCountMismatch,
  DuplicateWitness,
  GapTooSmall,
  TooFewPoints,
  NotMonic,
  NotSquare,
  LeadingCoeffVanishes,
  NotSimpleRoot,
  SizeMismatch,
  EvenPrime,
  DegenerateForm,
  TooLargeToEnumerate,
  IsotropicVector,
  NotAnIsometry,
  NotSpecialOrthogonal,
  NotHyperbolic,
  NotSplit,
  RepeatedRootModP,
  NoUnitEigenvector,
  EigenvaluePlusMinusOne,
  NonUnitPairing,
  BadLeadingCoefficient,
  BadPrime,
  HypothesisOneViolated,
  HypothesisTwoViolated,
  ZeroDenominator,
  BadPrimeForCase,
  Ramified,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace flatcyc
