#pragma once

#include <stdexcept>

namespace trio {

// Input outside the mathematical domain of a formula (e.g. |tan(theta)| >= sqrt(2)).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation requested at (or too close to) a genuine pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Binary series operation on operands with different variable caps.
struct CapMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Reciprocal of a series whose constant term vanishes.
struct ZeroConstantTerm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coefficient access beyond the configured truncation caps.
struct OutOfCaps : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Angle reconstruction requires two distinct eigenvalues.
struct DegenerateEigenvalues : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature failed its self-convergence check.
struct GridTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fock-space truncation failed its self-convergence check.
struct CutoffTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace trio
