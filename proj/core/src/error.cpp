#include "flatcyc/error.hpp"

namespace flatcyc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReduciblePoly: return "ReduciblePoly";
    case Errc::UnsupportedResidueDegree: return "UnsupportedResidueDegree";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::WitnessCountMismatch: return "WitnessCountMismatch";
    case Errc::DuplicateWitness: return "DuplicateWitness";
    case Errc::GapTooSmall: return "GapTooSmall";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotSquare: return "NotSquare";
    case Errc::LeadingCoeffVanishes: return "LeadingCoeffVanishes";
    case Errc::NotSimpleRoot: return "NotSimpleRoot";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case Errc::IsotropicVector: return "IsotropicVector";
    case Errc::NotAnIsometry: return "NotAnIsometry";
    case Errc::NotSpecialOrthogonal: return "NotSpecialOrthogonal";
    case Errc::NotHyperbolic: return "NotHyperbolic";
    case Errc::NotSplit: return "NotSplit";
    case Errc::RepeatedRootModP: return "RepeatedRootModP";
    case Errc::NoUnitEigenvector: return "NoUnitEigenvector";
    case Errc::EigenvaluePlusMinusOne: return "EigenvaluePlusMinusOne";
    case Errc::NonUnitPairing: return "NonUnitPairing";
    case Errc::BadLeadingCoefficient: return "BadLeadingCoefficient";
    case Errc::BadPrime: return "BadPrime";
    case Errc::HypothesisOneViolated: return "HypothesisOneViolated";
    case Errc::HypothesisTwoViolated: return "HypothesisTwoViolated";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::BadPrimeForCase: return "BadPrimeForCase";
    case Errc::Ramified: return "Ramified";
  }
  return "Unknown";
}

}  // namespace flatcyc
