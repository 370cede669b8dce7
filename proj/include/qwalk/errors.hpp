#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A recursion or formula hit a (numerically) vanishing denominator.
struct SingularEvaluation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Radial limit or adaptive depth failed to settle.
struct NumericalLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Radial limit diverges: the angle carries a point mass.
struct SingularPoint : NumericalLimitError {
    using NumericalLimitError::NumericalLimitError;
};

}  // namespace qwalk
