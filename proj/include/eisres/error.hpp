#ifndef EISRES_ERROR_HPP
#define EISRES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace eisres {

// Numeric values are part of the CLI report format; never renumber.
enum class ErrorCode {
    InvalidInput = 1,
    ParseError = 2,
    NotMonic = 10,
    NotSquarefree = 11,
    NotTotallyReal = 12,
    BasisNotRing = 13,
    RegulatorZero = 14,
    InvalidUnit = 15,
    SingularGram = 16,
    NotAnIdeal = 17,
    LevelTooSmall = 20,
    ZeroElement = 21,
    TwistInIdeal = 30,
    NotConverged = 31,
    NotCoprime = 32,
    OrbitTermNotInvariant = 33,
    ZeroGamma = 40,
    NotUpperHalfPlane = 41,
    Precondition = 50,
    NotCertified = 60,
    Inconclusive = 61,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace eisres

#endif
