#pragma once

#include <stdexcept>
#include <string>

namespace waxman {

/// A computation ran but produced no usable answer (breakdown, no root,
/// degenerate normalization). Bad arguments raise std::invalid_argument.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The requested coupling has no bound state in the requested sector.
class NoSolutionError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

} // namespace waxman
