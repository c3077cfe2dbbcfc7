#pragma once

#include <stdexcept>
#include <string>

namespace jbt {

// Failure codes cover three distinct situations and callers are expected to
// treat them differently:
//   * input rejection (ParseError, ConfigError, SystemMismatch, ...)
//   * honest mathematical obstructions (NotLe2, InvariantObstruction, ...)
//   * numerical breakdowns that indicate a bug or an ill-posed input
//     (NoConvergence, LinkVerificationFailed, DegenerateBasis, ...)
enum class Errc {
    NotNormal,
    NoConvergence,
    NotSymmetricUnitary,
    NotAntisymmetricUnitary,
    OddDimension,
    NotInEmbeddedAlgebra,
    DegenerateBasis,
    SystemMismatch,
    MembershipViolation,
    AmbiguousRank,
    RankUnachievable,
    NoUnitaryExists,
    CompletionFailed,
    NotUnitary,
    NotTripotent,
    RootOutsideSystem,
    NotLe2,
    InvariantObstruction,
    LinkVerificationFailed,
    UnsupportedFamily,
    ParseError,
    ConfigError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace jbt
