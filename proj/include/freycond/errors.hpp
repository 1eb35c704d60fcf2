#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freycond {

enum class ErrorKind {
    ZeroInput,
    NonIntegralCoefficient,
    ZeroElement,
    DivisionByZero,
    InexactDivision,
    ValuationAmbiguous,
    NonIntegral,
    DegreeViolation,
    SingularChange,
    NotTwistable,
    ZeroDelta,
    PointNotOnCurve,
    NonReducedFiber,
    FieldMismatch,
    NotOddPrime,
    DegenerateParameter,
    HypothesisViolated,
    AssertionFailed,
    NotCovered,
    Usage,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::ValuationAmbiguous: return "ValuationAmbiguous";
        case ErrorKind::NonIntegral: return "NonIntegral";
        case ErrorKind::DegreeViolation: return "DegreeViolation";
        case ErrorKind::SingularChange: return "SingularChange";
        case ErrorKind::NotTwistable: return "NotTwistable";
        case ErrorKind::ZeroDelta: return "ZeroDelta";
        case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorKind::NonReducedFiber: return "NonReducedFiber";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotOddPrime: return "NotOddPrime";
        case ErrorKind::DegenerateParameter: return "DegenerateParameter";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::AssertionFailed: return "AssertionFailed";
        case ErrorKind::NotCovered: return "NotCovered";
        case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace freycond
