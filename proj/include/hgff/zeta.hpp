#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hgff/hyperfn.hpp"

namespace hgff {

// P over F_{q^r} with every character composed with the norm and lambda
// embedded. The value has order q-1.
CycloNum lifted_period(const HGSpec& spec, const FieldElement& lambda, unsigned r);

// Coefficients z_0..z_rmax of exp(sum_r P_r T^r / r).
std::vector<CycloNum> zeta_series(const HGSpec& spec, const FieldElement& lambda, unsigned rmax);

// 1 - tr T + det T^2 with tr = -P(q) and det = (P(q)^2 + P(q^2)) / 2.
// For characters of order N > 2 the coefficients lie in Z[zeta_{q-1}].
struct ZetaFactor {
  std::uint64_t q = 0;
  std::vector<CycloNum> coeffs;   // constant term first
  std::vector<CycloNum> periods;  // P_1, ..., P_rmax
  bool primitive = true;
  bool newton_ok = true;          // P_r for r >= 3 agree with the quadratic

  unsigned degree() const { return static_cast<unsigned>(coeffs.size() - 1); }
  CycloNum trace() const { return -coeffs.at(1); }
  CycloNum det() const { return coeffs.at(2); }
  bool rational() const;
  std::string str() const;
};

unsigned default_rmax(const FiniteField& F);

// Builds the factor for any n = 1 spec; imprimitive specs are marked.
ZetaFactor zeta_factor(const HGSpec& spec, const FieldElement& lambda, unsigned rmax = 0);
// Requires a primitive spec and lambda != 0, 1.
ZetaFactor charpoly_2(const HGSpec& spec, const FieldElement& lambda, unsigned rmax = 0);

struct PurityReport {
  std::string status;  // "pass", "fail" or "impure"
  bool exact_ok = false;
  bool float_ok = false;
  std::complex<double> roots[2];
  double max_deviation = 0;  // max | |root| - sqrt(q) |
  std::string witness;
};

PurityReport weil_purity_check(const ZetaFactor& factor);

}  // namespace hgff
