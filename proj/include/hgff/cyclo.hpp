#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgff/error.hpp"

namespace hgff {

namespace detail {
struct CycloCtx;
}

// Phi_M with integer coefficients, constant term first.
std::vector<long> cyclotomic_polynomial(unsigned M);
unsigned euler_phi(unsigned M);

// An element of Q(zeta_M) in the power basis 1, z, ..., z^{phi(M)-1}
// reduced mod Phi_M. Coefficients are num[i] / den with den > 0 and
// gcd(den, num...) = 1, so equal values of equal order compare equal
// coefficientwise.
class CycloNum {
 public:
  CycloNum();  // 0 in Q
  CycloNum(long n, unsigned M = 1);

  static CycloNum integer(const mpz_class& n, unsigned M = 1);
  static CycloNum rational(const mpq_class& r, unsigned M = 1);
  static CycloNum root(unsigned M, std::int64_t k);
  // sum over e of counts[e] * z^e, counts.size() == M
  static CycloNum from_counts(unsigned M, const std::vector<std::int64_t>& counts);
  // coefficients num[i]/den in the power basis, length phi(M)
  static CycloNum from_coeffs(unsigned M, std::vector<mpz_class> num, mpz_class den = 1);

  unsigned order() const;
  unsigned degree() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  mpq_class coeff(unsigned i) const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const { return den_ == 1; }
  std::optional<mpq_class> as_rational() const;
  std::optional<mpz_class> as_rational_integer() const;

  CycloNum embed(unsigned M2) const;
  CycloNum conj() const;
  CycloNum inverse() const;
  CycloNum pow(long k) const;

  CycloNum& operator+=(const CycloNum& b);
  CycloNum& operator-=(const CycloNum& b);
  CycloNum& operator*=(const CycloNum& b);
  CycloNum& operator/=(const CycloNum& b);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;
  CycloNum scaled(const mpq_class& r) const;

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  std::complex<long double> to_complex_long() const;
  std::string str() const;

 private:
  void normalize();
  void lift_pair(CycloNum& other);

  const detail::CycloCtx* ctx_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

enum class CycloOp { add, sub, mul, div };
CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op);
unsigned lcm_order(unsigned a, unsigned b);

}  // namespace hgff
