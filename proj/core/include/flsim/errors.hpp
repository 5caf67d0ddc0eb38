#pragma once

#include <stdexcept>
#include <string>

namespace flsim {

/// Raised when an input violates a documented bound. The message names the
/// offending field (dotted path where available) and the bound.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numerical procedure (quadrature, sampling) fails to reach
/// its stated accuracy.
class NumericalDiagnostic : public std::runtime_error {
 public:
  explicit NumericalDiagnostic(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flsim
