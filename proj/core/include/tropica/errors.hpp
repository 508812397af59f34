#pragma once

#include <stdexcept>
#include <string>

namespace tropica {

/// Invalid parameters supplied by the caller (bad partition, negative count, ...).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs that are well formed but outside what the library models
/// (degenerate cover data, genus beyond the desk-scale range).
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Refusal to run a computation whose search space is too large without an override.
class SizeGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Contraction of a loop edge was requested.
class LoopContractionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Two independent computations of the same quantity disagreed.
class CrossCheckError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tropica
