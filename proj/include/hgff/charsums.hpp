#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "hgff/characters.hpp"

namespace hgff {

// Gauss sums at order p(q-1) and Jacobi sums at order q-1 for one field.
// Lookups are thread-safe; returned references stay valid for the
// lifetime of the cache.
class GaussJacobiCache {
 public:
  static GaussJacobiCache& of(const FiniteField& F);

  const CycloNum& gauss(std::int64_t m);
  const CycloNum& jacobi(std::int64_t a, std::int64_t b);
  // 1 / g(chi_m)
  const CycloNum& gauss_inverse(std::int64_t m);

 private:
  explicit GaussJacobiCache(const FiniteField& F) : F_(&F) {}

  const FiniteField* F_;
  std::mutex mu_;
  std::unordered_map<std::int64_t, CycloNum> gauss_, gauss_inv_, jacobi_;
};

// Sums for characters whose values lie in mu_L, L | q-1 (exponents
// multiples of (q-1)/L). Results have order p L and L respectively.
CycloNum gauss_sum_raw(const FiniteField& F, std::int64_t m, std::uint64_t L);
CycloNum jacobi_sum_raw(const FiniteField& F, std::int64_t a, std::int64_t b, std::uint64_t L);

CycloNum gauss_sum(const MultChar& A);
CycloNum jacobi_sum(const MultChar& A, const MultChar& B);
CycloNum jacobi_from_gauss(const MultChar& A, const MultChar& B);
// -chi(-1) J(A, conj chi)
CycloNum binomial(const MultChar& A, const MultChar& chi);
// g(A chi) / g(A)
CycloNum rising(const MultChar& A, const MultChar& chi);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

CheckResult hasse_davenport_product_check(const MultChar& psi, std::uint64_t m);
CheckResult hasse_davenport_lift_check(const MultChar& A, unsigned r);

}  // namespace hgff
