#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equigo {

/// Failure categories raised by the library.
///
/// The first group reports bad caller input (schema problems); the second
/// reports broken arithmetic invariants, which indicate a bug rather than a
/// user mistake.  `is_internal()` tells the two apart.
enum class Errc {
    // input / schema
    InvalidArgument,
    TruncationMismatch,
    NonUnitConstantTerm,
    BadConstantTerm,
    FractionalPrefactor,
    NegativePrefactor,
    NonIntegralExponent,
    UnsupportedOrder,
    InvalidSurface,
    ParseError,
    // invariant violations
    NonIntegralMultiplicity,
    NegativeMultiplicity,
    NonPolynomialQuotient,
    NonIntegralCoefficient,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

    bool is_internal() const noexcept {
        switch (code_) {
        case Errc::NonIntegralMultiplicity:
        case Errc::NegativeMultiplicity:
        case Errc::NonPolynomialQuotient:
        case Errc::NonIntegralCoefficient:
            return true;
        default:
            return false;
        }
    }

private:
    Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::TruncationMismatch: return "TruncationMismatch";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::BadConstantTerm: return "BadConstantTerm";
    case Errc::FractionalPrefactor: return "FractionalPrefactor";
    case Errc::NegativePrefactor: return "NegativePrefactor";
    case Errc::NonIntegralExponent: return "NonIntegralExponent";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::InvalidSurface: return "InvalidSurface";
    case Errc::ParseError: return "ParseError";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::NonPolynomialQuotient: return "NonPolynomialQuotient";
    case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
    }
    return "Unknown";
}

} // namespace equigo
