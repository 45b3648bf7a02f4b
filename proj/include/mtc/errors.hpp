#pragma once

#include <stdexcept>
#include <string>

namespace mtc {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A Schellekens algebra was requested on a support outside the effective center.
struct SupportNotInEffectiveCenter : std::domain_error {
  using std::domain_error::domain_error;
};

/// The masked modular-invariant search space is larger than the configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigen-decomposition into orthogonal eigenspaces needs a symmetric matrix.
struct NonSymmetric : std::domain_error {
  using std::domain_error::domain_error;
};

/// An internal consistency check failed (relation residual, ζ branch search, ...).
struct InternalCheckFailed : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mtc
