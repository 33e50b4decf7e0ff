#ifndef DQCA_ERRORS_HPP
#define DQCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dqca {

/// A numeric argument lies outside its documented domain.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Vector / matrix sizes do not match the operator they are fed to.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds an exhaustive-enumeration or dense-matrix budget.
/// Raised instead of silently truncating.
struct BudgetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// File could not be opened or written; message carries the path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dqca

#endif
