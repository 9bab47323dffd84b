#pragma once

#include <stdexcept>
#include <string>

namespace loday {

/// Precondition/dimension violations (caller bugs).
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// A bilinear form required to be nondegenerate has a nontrivial kernel.
struct DegenerateForm : std::runtime_error {
    int kernel_dim;
    explicit DegenerateForm(int kernel_dimension)
        : std::runtime_error("degenerate bilinear form (kernel dimension " +
                             std::to_string(kernel_dimension) + ")"),
          kernel_dim(kernel_dimension) {}
};

/// An input algebra/coalgebra failed the kind verification a construction requires.
struct InvalidInputKind : std::runtime_error {
    explicit InvalidInputKind(const std::string& what) : std::runtime_error(what) {}
};

/// A pair of linear map families failed the representation identities.
struct InvalidRepresentation : std::runtime_error {
    explicit InvalidRepresentation(const std::string& what) : std::runtime_error(what) {}
};

/// (algebra, form) failed the quadratic verification (skew + nondegenerate + invariant).
struct InvalidQuadraticStructure : std::runtime_error {
    explicit InvalidQuadraticStructure(const std::string& what) : std::runtime_error(what) {}
};

/// A claimed bialgebra produced an inconsistent double (diagnostic error).
struct InconsistentBialgebra : std::runtime_error {
    explicit InconsistentBialgebra(const std::string& what) : std::runtime_error(what) {}
};

/// File/JSON parsing problems.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computation routes disagreed; indicates a library bug.
struct CrossCheckFailure : std::logic_error {
    explicit CrossCheckFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace loday
