#pragma once

#include <stdexcept>
#include <string>

namespace bss {

/// A numerical procedure failed on admissible input (factorisation,
/// root bracketing, non-finite result). Distinct from argument errors,
/// which use std::invalid_argument / std::domain_error.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bss
