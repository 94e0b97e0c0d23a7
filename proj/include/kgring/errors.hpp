#pragma once

#include <stdexcept>
#include <string>

namespace kgring {

/// Input lies outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Candidate energy outside the bound-state window |E| < mu.
struct OutOfBoundWindow : DomainError {
    using DomainError::DomainError;
};

/// Radicand of an energy condition turned negative.
struct NegativeDiscriminant : DomainError {
    using DomainError::DomainError;
};

/// Ring coupling too strong: the effective angular momentum would be complex.
struct NoRealAngularMomentum : DomainError {
    using DomainError::DomainError;
};

/// Energy scan found no sign change inside the bound-state window.
struct NoBoundState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative scheme exhausted its budget before reaching tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kgring
