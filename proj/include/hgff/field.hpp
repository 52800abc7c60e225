#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgff/error.hpp"

namespace hgff {

class FiniteField;

// A nonzero-or-zero element of F_q. The code is the base-p encoding
// c0 + c1 p + ... of the polynomial-basis coefficient vector.
struct FieldElement {
  const FiniteField* field = nullptr;
  std::uint32_t code = 0;

  bool is_zero() const { return code == 0; }
  std::vector<std::uint32_t> coeffs() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field == b.field && a.code == b.code;
  }
};

struct Extension;

// F_{p^e} with exp/log tables against the canonical generator.
// Instances are interned: get() returns the same object for the same (p, e).
class FiniteField {
 public:
  static const FiniteField& get(std::uint64_t p, unsigned e);

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint64_t q() const { return q_; }
  // size of the multiplicative group, q - 1
  std::uint64_t units() const { return q_ - 1; }

  // c0..c_{e-1} of the monic modulus; the leading coefficient is implicit
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t generator() const { return generator_; }

  FieldElement elem(std::uint32_t code) const;
  FieldElement from_int(std::int64_t n) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t k) const;
  std::uint32_t int_code(std::int64_t n) const;

  std::int64_t log(std::uint32_t a) const;
  std::uint32_t exp(std::int64_t k) const;
  std::uint32_t trace(std::uint32_t a) const { return trace_[a]; }
  std::uint32_t one_minus(std::uint32_t a) const { return one_minus_[a]; }
  // log of -1
  std::int64_t log_neg_one() const { return p_ == 2 ? 0 : static_cast<std::int64_t>(units() / 2); }

  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::int32_t>& log_table() const { return log_; }

  std::vector<std::uint32_t> coeffs(std::uint32_t code) const;
  std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const;

  // Emits "0" or "g^k"; parse() also accepts "[c0,c1,...]" and plain
  // integers (read as prime-field elements).
  std::string format(std::uint32_t code) const;
  std::uint32_t parse(const std::string& s) const;
  std::string modulus_string() const;

  const Extension& extension(unsigned r) const;

  // FNV-1a over the exp and log tables.
  std::uint64_t table_checksum() const;

 private:
  FiniteField(std::uint64_t p, unsigned e);

  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const;

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::int32_t> log_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::uint32_t> one_minus_;
};

// F_{q^r} built as F_{p^{er}} together with the embedding of F_q.
struct Extension {
  const FiniteField* base = nullptr;
  const FiniteField* big = nullptr;
  unsigned r = 1;
  std::vector<std::uint32_t> embed;    // base code -> big code
  std::vector<std::int32_t> restriction;  // big code -> base code, -1 off the subfield
  std::uint64_t norm_exponent = 1;     // (Q-1)/(q-1)
  std::int64_t log_scale = 1;          // embed(g) = G^{log_scale * norm_exponent}
  std::int64_t log_scale_inv = 1;      // inverse of log_scale mod q-1

  FieldElement embed_elem(const FieldElement& x) const;
  // N_{F_{q^r}/F_q}
  std::uint32_t norm(std::uint32_t big_code) const;
};

bool is_prime(std::uint64_t n);

enum class FieldOp { add, sub, mul, div };

const FiniteField& construct_field(std::uint64_t p, unsigned e);
FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);
std::int64_t dlog(const FieldElement& x);
FieldElement trace_to_prime(const FieldElement& x);
FieldElement norm_to_subfield(const FieldElement& x, const FiniteField& target);

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

}  // namespace hgff
