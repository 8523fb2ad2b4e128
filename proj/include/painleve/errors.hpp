#pragma once

#include <stdexcept>
#include <string>

namespace painleve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact division by zero (rational or scalar arithmetic).
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A map iteration step hit a vanishing denominator. Carries the step index
/// and a description of the offending state.
struct SingularStep : Error {
    long n;
    explicit SingularStep(long n_, const std::string& what) : Error(what), n(n_) {}
};

/// eRCG leading coefficient vanished; carries the three coefficient values.
struct IndeterminateStep : Error {
    long n;
    std::string coefficients;
    IndeterminateStep(long n_, std::string coeffs, const std::string& what)
        : Error(what), n(n_), coefficients(std::move(coeffs)) {}
};

/// K_defect evaluated at w = 1/z.
struct BasePointProximity : Error {
    explicit BasePointProximity(const std::string& what) : Error(what) {}
};

/// s_i applied at a state with f_i = 0.
struct PoleOfAction : Error {
    int generator;
    PoleOfAction(int gen, const std::string& what) : Error(what), generator(gen) {}
};

/// Quadrature or series evaluation missed its error target.
struct PrecisionError : Error {
    using Error::Error;
};

/// Input outside the operation's domain (k = 1 divergence, grid touching an
/// axis, P6 span containing a fixed singularity, ...).
struct DomainError : Error {
    using Error::Error;
};

/// poly exact-divide failed; carries the offending term.
struct ExactDivideError : Error {
    std::string term;
    ExactDivideError(std::string term_, const std::string& what)
        : Error(what), term(std::move(term_)) {}
};

/// Violated internal invariant (should be unreachable on valid inputs).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace painleve
