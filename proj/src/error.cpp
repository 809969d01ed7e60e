#include "eisres/error.hpp"

namespace eisres {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::NotTotallyReal: return "NotTotallyReal";
        case ErrorCode::BasisNotRing: return "BasisNotRing";
        case ErrorCode::RegulatorZero: return "RegulatorZero";
        case ErrorCode::InvalidUnit: return "InvalidUnit";
        case ErrorCode::SingularGram: return "SingularGram";
        case ErrorCode::NotAnIdeal: return "NotAnIdeal";
        case ErrorCode::LevelTooSmall: return "LevelTooSmall";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::TwistInIdeal: return "TwistInIdeal";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::OrbitTermNotInvariant: return "OrbitTermNotInvariant";
        case ErrorCode::ZeroGamma: return "ZeroGamma";
        case ErrorCode::NotUpperHalfPlane: return "NotUpperHalfPlane";
        case ErrorCode::Precondition: return "Precondition";
        case ErrorCode::NotCertified: return "NotCertified";
        case ErrorCode::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

}  // namespace eisres
