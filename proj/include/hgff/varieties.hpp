#pragma once

#include <cstdint>
#include <vector>

#include "hgff/hyperfn.hpp"

namespace hgff {

// y^N = prod_s x_s^{i_s} (1 - x_s)^{j_s} (1 - lambda x_1...x_n)^k
struct HGVariety {
  unsigned N = 2;
  std::vector<std::int64_t> i, j;
  std::int64_t k = 1;
  FieldElement lambda;
};

// y^N = x^i (1 - x)^j (1 - lambda x)^k
struct GLCurve {
  unsigned N = 2;
  std::int64_t i = 1, j = 1, k = 1;
  FieldElement lambda;

  HGVariety variety() const { return HGVariety{N, {i}, {j}, k, lambda}; }
};

std::int64_t count_affine_brute(const HGVariety& V);

// 1 + q^n + sum_{m=1}^{N-1} P_m. The leading 1 is the single point at
// infinity, so this equals count_affine_brute + 1.
std::int64_t count_via_periods(const HGVariety& V);

// The same total under the two conventions for eps(0).
struct CountBookkeeping {
  std::int64_t period_sum = 0;     // sum_{m=1}^{N-1} P_m
  std::int64_t main_eps1 = 0;      // q^n, the m = 0 term with eps(0) = 1
  std::int64_t main_eps0 = 0;      // m = 0 term with eps(0) = 0
  std::int64_t zero_fibres = 0;    // x-tuples where the right side vanishes
  std::int64_t total_eps1() const { return main_eps1 + period_sum; }
  std::int64_t total_eps0() const { return main_eps0 + zero_fibres + period_sum; }
};
CountBookkeeping count_bookkeeping(const HGVariety& V);

// q + 1 + P[phi, phi; eps; lambda]
std::int64_t legendre_count(const FieldElement& lambda);
// 1 + #{(x, y) : y^2 = x (x - 1)(x - lambda)}
std::int64_t legendre_count_brute(const FieldElement& lambda);

// -sum over m in (Z/N)^x of P[eta^{-mk}, eta^{mi}; eta^{m(i+j)}; lambda]
CycloNum glc_trace(const GLCurve& C);

std::int64_t genus(std::int64_t N, std::int64_t i, std::int64_t j, std::int64_t k);

}  // namespace hgff
