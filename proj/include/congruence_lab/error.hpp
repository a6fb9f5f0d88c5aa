#pragma once

#include <stdexcept>
#include <string>

namespace congruence_lab {

enum class Errc {
  NonInvertible,
  ZeroInput,
  ZeroDenominator,
  NotPAdicInteger,
  NotPIntegral,
  NotCommonMultiple,
  InvalidWeights,
  PNotDivisor,
  ExactPowerViolated,
  ModulusMismatch,
  NonInvertibleTerm,
  PreconditionViolated,
  PDividesM,
  PDividesS,
  UnknownLemma,
  ConfigError,
};

const char* to_string(Errc code) noexcept;

// Every precondition failure in the library surfaces as this type; callers
// dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace congruence_lab
