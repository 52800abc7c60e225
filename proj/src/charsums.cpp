#include "hgff/charsums.hpp"

#include <map>

namespace hgff {

namespace {

std::int64_t key(const FiniteField& F, std::int64_t a, std::int64_t b) {
  return a * static_cast<std::int64_t>(F.units()) + b;
}

}  // namespace

GaussJacobiCache& GaussJacobiCache::of(const FiniteField& F) {
  static std::mutex mu;
  static std::map<const FiniteField*, std::unique_ptr<GaussJacobiCache>> caches;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = caches[&F];
  if (!slot) slot.reset(new GaussJacobiCache(F));
  return *slot;
}

const CycloNum& GaussJacobiCache::gauss(std::int64_t m) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gauss_.find(m);
    if (it != gauss_.end()) return it->second;
  }
  CycloNum v = gauss_sum_raw(*F_, m, F_->units());
  std::lock_guard<std::mutex> lock(mu_);
  return gauss_.try_emplace(m, std::move(v)).first->second;
}

const CycloNum& GaussJacobiCache::gauss_inverse(std::int64_t m) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gauss_inv_.find(m);
    if (it != gauss_inv_.end()) return it->second;
  }
  // 1/g(A) = A(-1) g(conj A) / q for A nontrivial; g(eps) = -1
  const auto n = static_cast<std::int64_t>(F_->units());
  CycloNum v = m == 0 ? CycloNum(-1)
                      : gauss((n - m) % n).scaled(mpq_class(MultChar::of(*F_, m).sign(), F_->q()));
  std::lock_guard<std::mutex> lock(mu_);
  return gauss_inv_.try_emplace(m, std::move(v)).first->second;
}

const CycloNum& GaussJacobiCache::jacobi(std::int64_t a, std::int64_t b) {
  const std::int64_t k = key(*F_, a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = jacobi_.find(k);
    if (it != jacobi_.end()) return it->second;
  }
  CycloNum v = jacobi_sum_raw(*F_, a, b, F_->units());
  std::lock_guard<std::mutex> lock(mu_);
  return jacobi_.try_emplace(k, std::move(v)).first->second;
}

CycloNum gauss_sum_raw(const FiniteField& F, std::int64_t m, std::uint64_t L) {
  const std::uint64_t n = F.units();
  if (L == 0 || n % L != 0) throw Error(Errc::InvalidArgument, "value order must divide q-1");
  const std::uint64_t step = n / L;
  const std::uint64_t p = F.p();
  const std::uint64_t M = p * L;
  if (euler_phi(static_cast<unsigned>(M)) > budget().phi_max)
    throw Error(Errc::BudgetExceeded, "Gauss sums over F_" + std::to_string(F.q()) + " need phi(" +
                                          std::to_string(M) + ") > phi_max");
  std::int64_t mm = m % static_cast<std::int64_t>(n);
  if (mm < 0) mm += n;
  if (static_cast<std::uint64_t>(mm) % step != 0)
    throw Error(Errc::InvalidArgument, "character values do not lie in mu_L");
  std::vector<std::int64_t> counts(M, 0);
  // zeta_L = zeta_M^p, zeta_p = zeta_M^L
  const auto& logs = F.log_table();
  for (std::uint32_t x = 1; x < F.q(); ++x) {
    const std::uint64_t e = (static_cast<std::uint64_t>(mm) * static_cast<std::uint64_t>(logs[x]) % n) / step;
    ++counts[(e * p + static_cast<std::uint64_t>(F.trace(x)) * L) % M];
  }
  return CycloNum::from_counts(static_cast<unsigned>(M), counts);
}

CycloNum jacobi_sum_raw(const FiniteField& F, std::int64_t a, std::int64_t b, std::uint64_t L) {
  const std::uint64_t n = F.units();
  if (L == 0 || n % L != 0) throw Error(Errc::InvalidArgument, "value order must divide q-1");
  const std::uint64_t step = n / L;
  auto norm = [&](std::int64_t x) {
    x %= static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(x < 0 ? x + static_cast<std::int64_t>(n) : x);
  };
  const std::uint64_t ua = norm(a), ub = norm(b);
  if (ua % step || ub % step) throw Error(Errc::InvalidArgument, "character values do not lie in mu_L");
  std::vector<std::int64_t> counts(L, 0);
  const auto& logs = F.log_table();
  for (std::uint32_t x = 2; x < F.q(); ++x) {
    const std::uint32_t y = F.one_minus(x);
    if (y == 0) continue;
    const std::uint64_t e = (ua * static_cast<std::uint64_t>(logs[x]) + ub * static_cast<std::uint64_t>(logs[y])) % n;
    ++counts[e / step];
  }
  return CycloNum::from_counts(static_cast<unsigned>(L), counts);
}

CycloNum gauss_sum(const MultChar& A) { return GaussJacobiCache::of(*A.field).gauss(A.m); }

CycloNum jacobi_sum(const MultChar& A, const MultChar& B) {
  if (A.field != B.field) throw Error(Errc::FieldMismatch, "characters on different fields");
  return GaussJacobiCache::of(*A.field).jacobi(A.m, B.m);
}

CycloNum jacobi_from_gauss(const MultChar& A, const MultChar& B) {
  auto& cache = GaussJacobiCache::of(*A.field);
  const MultChar AB = A * B;
  CycloNum r = cache.gauss(A.m) * cache.gauss(B.m) * cache.gauss_inverse(AB.m);
  if (AB.is_trivial()) r += CycloNum(static_cast<long>(A.field->units()) * B.sign());
  return r;
}

CycloNum binomial(const MultChar& A, const MultChar& chi) {
  return -(jacobi_sum(A, chi.conj()) * char_sign(chi));
}

CycloNum rising(const MultChar& A, const MultChar& chi) {
  auto& cache = GaussJacobiCache::of(*A.field);
  return cache.gauss((A * chi).m) * cache.gauss_inverse(A.m);
}

CheckResult hasse_davenport_product_check(const MultChar& psi, std::uint64_t m) {
  const FiniteField& F = *psi.field;
  if (m == 0 || F.units() % m != 0)
    throw Error(Errc::IncompatibleCongruence, "q = " + std::to_string(F.q()) + " is not 1 mod " + std::to_string(m));
  auto& cache = GaussJacobiCache::of(F);
  CycloNum lhs(1), prod(1);
  for (const MultChar& chi : characters_dividing(F, m)) {
    lhs *= cache.gauss((chi * psi).m);
    prod *= cache.gauss(chi.m);
  }
  // psi(m^{-m})
  const std::uint32_t mm = F.pow(F.inv(F.int_code(static_cast<std::int64_t>(m))), static_cast<std::int64_t>(m));
  const CycloNum rhs = -(cache.gauss(psi.pow(static_cast<std::int64_t>(m)).m) * char_value(psi, mm) * prod);
  CheckResult r;
  r.pass = lhs == rhs;
  if (!r.pass) r.witness = "q=" + std::to_string(F.q()) + " psi=" + psi.name() + " m=" + std::to_string(m);
  return r;
}

CheckResult hasse_davenport_lift_check(const MultChar& A, unsigned r) {
  const FiniteField& F = *A.field;
  const MultChar Ar = lift_norm(A, r);
  // A_r takes values in mu_{q-1}, so g(A_r) lives at order p(q-1)
  const CycloNum lifted = gauss_sum_raw(*Ar.field, Ar.m, F.units());
  CycloNum rhs = GaussJacobiCache::of(F).gauss(A.m).pow(r);
  if (r % 2 == 0) rhs = -rhs;
  CheckResult res;
  res.pass = lifted == rhs;
  if (!res.pass)
    res.witness = "q=" + std::to_string(F.q()) + " A=" + A.name() + " r=" + std::to_string(r);
  return res;
}

}  // namespace hgff
