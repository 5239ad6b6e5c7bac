#pragma once

#include <stdexcept>
#include <string>

namespace fcx {

// Broad classes used to map failures onto CLI exit statuses and C API codes.
enum class ErrorClass {
    Parse,      // malformed input, unknown fields, bad schema
    Domain,     // mathematically invalid request (wrong sizes, violated preconditions)
    Precision,  // the p-adic budget ran out before the answer was certified
    Budget,     // enumeration limits exceeded
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string name, const std::string& what)
        : std::runtime_error(what), cls_(cls), name_(std::move(name)) {}

    ErrorClass error_class() const { return cls_; }
    // Stable machine-readable identifier, e.g. "NotHNReducible".
    const std::string& name() const { return name_; }

private:
    ErrorClass cls_;
    std::string name_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorClass::Parse, "ParseError", what) {}
};

struct DomainError : Error {
    DomainError(const std::string& name, const std::string& what)
        : Error(ErrorClass::Domain, name, what) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what)
        : Error(ErrorClass::Precision, "PrecisionExhausted", what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what)
        : Error(ErrorClass::Budget, "BudgetExceeded", what) {}
};

inline DomainError not_prime(const std::string& w) { return DomainError("NotPrime", w); }
inline DomainError height_mismatch(const std::string& w) { return DomainError("HeightMismatch", w); }
inline DomainError not_invertible(const std::string& w) { return DomainError("NotInvertible", w); }
inline DomainError not_separable(const std::string& w) { return DomainError("NotSeparable", w); }
inline DomainError invalid_grading(const std::string& w) { return DomainError("InvalidGrading", w); }
inline DomainError degree_mismatch(const std::string& w) { return DomainError("DegreeMismatch", w); }
inline DomainError multiplicity_violation(const std::string& w) { return DomainError("MultiplicityViolation", w); }
inline DomainError not_hn_reducible(const std::string& w) { return DomainError("NotHNReducible", w); }
inline DomainError inconsistent_orbit(const std::string& w) { return DomainError("InconsistentOrbit", w); }
inline DomainError uncovered_case(const std::string& w) { return DomainError("UncoveredCase", w); }

}  // namespace fcx
