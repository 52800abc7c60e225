#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgff/cyclo.hpp"
#include "hgff/field.hpp"

namespace hgff {

// chi_m : g^k -> zeta_{q-1}^{m k}, chi_m(0) = 0 for every m.
struct MultChar {
  const FiniteField* field = nullptr;
  std::int64_t m = 0;  // in [0, q-2]

  static MultChar of(const FiniteField& F, std::int64_t m);
  static MultChar trivial(const FiniteField& F) { return of(F, 0); }
  // requires q odd
  static MultChar quadratic(const FiniteField& F);

  std::uint64_t modulus() const { return field->units(); }
  std::uint64_t order() const;
  bool is_trivial() const { return m == 0; }
  MultChar conj() const;
  MultChar pow(std::int64_t k) const;
  // chi(-1) as +1 or -1
  int sign() const;
  // exponent e with chi(x) = zeta_{q-1}^e, or -1 when x = 0
  std::int64_t exponent_at(std::uint32_t code) const;
  std::string name() const;

  friend MultChar operator*(const MultChar& a, const MultChar& b);
  friend MultChar operator/(const MultChar& a, const MultChar& b);
  friend bool operator==(const MultChar& a, const MultChar& b) { return a.field == b.field && a.m == b.m; }
  friend bool operator!=(const MultChar& a, const MultChar& b) { return !(a == b); }
  friend bool operator<(const MultChar& a, const MultChar& b) { return a.m < b.m; }
};

CycloNum char_value(const MultChar& chi, const FieldElement& x);
CycloNum char_value(const MultChar& chi, std::uint32_t code);
// chi(-1) as a CycloNum (rational)
CycloNum char_sign(const MultChar& chi);

int delta_char(const MultChar& chi);
int delta_elem(const FieldElement& x);
inline int delta_code(std::uint32_t code) { return code == 0 ? 1 : 0; }

// A composed with the norm from F_{q^r}
MultChar lift_norm(const MultChar& chi, unsigned r);

struct RationalParam {
  std::int64_t i = 0;
  std::int64_t m = 1;

  // reduced to lowest terms with 0 <= i < m
  static RationalParam make(std::int64_t i, std::int64_t m);
  static RationalParam parse(const std::string& s);
  std::string str() const;
  friend bool operator==(const RationalParam& a, const RationalParam& b) { return a.i == b.i && a.m == b.m; }
};

MultChar iota(const RationalParam& a, const FiniteField& F);
RationalParam kappa(const MultChar& chi, std::int64_t m);

std::vector<MultChar> all_characters(const FiniteField& F);
std::vector<MultChar> characters_of_order(const FiniteField& F, std::uint64_t N);
std::vector<MultChar> characters_dividing(const FiniteField& F, std::uint64_t N);

// "chi^m", "order:N,index:k" (k-th character of exact order N, ascending
// exponent), "eps", "phi", or a bare exponent.
MultChar parse_char(const FiniteField& F, const std::string& s);

}  // namespace hgff
