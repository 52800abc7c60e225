#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgff/charsums.hpp"

namespace hgff {

// Upper characters A_1..A_{n+1} and lower characters B_1..B_n.
struct HGSpec {
  std::vector<MultChar> upper;
  std::vector<MultChar> lower;

  static HGSpec make(std::vector<MultChar> upper, std::vector<MultChar> lower);
  const FiniteField& field() const { return *upper.front().field; }
  std::size_t n() const { return lower.size(); }
  std::string str() const;
};

// conj(A)(1 - x)
CycloNum p1_0(const MultChar& A, const FieldElement& x);

// Nested sum over F_q^n, exact, O(q^n).
CycloNum period_direct(const HGSpec& spec, const FieldElement& lambda);
// Same sum on an arbitrary field with character exponents whose values lie
// in mu_L; the result has order L.
CycloNum period_direct_raw(const FiniteField& F, const std::vector<std::int64_t>& upper,
                           const std::vector<std::int64_t>& lower, std::uint32_t lambda, std::uint64_t L);

// Sum over chi of binomial products, plus the delta(lambda) Jacobi term.
CycloNum period_spectral(const HGSpec& spec, const FieldElement& lambda);

// prod_i J(A_{i+1}, B_i conj(A_{i+1}))
CycloNum normalization(const HGSpec& spec);
CycloNum f_normalized(const HGSpec& spec, const FieldElement& lambda);

// Greene's and McCarthy's functions from their defining character sums.
CycloNum greene_F(const HGSpec& spec, const FieldElement& lambda);
CycloNum mccarthy_F(const HGSpec& spec, const FieldElement& lambda);

bool is_primitive(const HGSpec& spec);

HGSpec rational_spec(const std::vector<RationalParam>& upper, const std::vector<RationalParam>& lower,
                     const FiniteField& F);

}  // namespace hgff
