#pragma once

#include <stdexcept>
#include <string>

namespace hgff {

enum class Errc {
  NotPrime,
  BudgetExceeded,
  DivisionByZero,
  FieldMismatch,
  LogOfZero,
  NotASubfieldPair,
  NotAMultiple,
  IncompatibleCongruence,
  OrderDoesNotDivide,
  NotInteger,
  DegenerateLambda,
  NotPrimitive,
  UnknownIdentity,
  NonIntegral,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Resource limits. HGFF_BUDGET (read by the CLI) overrides q_max.
struct Budget {
  unsigned long q_max = 1ul << 20;
  unsigned long phi_max = 4096;
};

Budget& budget();

}  // namespace hgff
