#include "hgff/hyperfn.hpp"

namespace hgff {

namespace {

void check_field(const HGSpec& spec, const FieldElement& x) {
  if (x.field != &spec.field()) throw Error(Errc::FieldMismatch, "argument is not in the field of the spec");
}

}  // namespace

HGSpec HGSpec::make(std::vector<MultChar> upper, std::vector<MultChar> lower) {
  if (upper.size() != lower.size() + 1 || upper.empty())
    throw Error(Errc::InvalidArgument, "need exactly one more upper character than lower");
  const FiniteField* F = upper.front().field;
  for (const auto& c : upper)
    if (c.field != F) throw Error(Errc::FieldMismatch, "spec characters on different fields");
  for (const auto& c : lower)
    if (c.field != F) throw Error(Errc::FieldMismatch, "spec characters on different fields");
  return HGSpec{std::move(upper), std::move(lower)};
}

std::string HGSpec::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < upper.size(); ++i) s += (i ? "," : "") + upper[i].name();
  s += ";";
  for (std::size_t i = 0; i < lower.size(); ++i) s += (i ? "," : "") + lower[i].name();
  return s + "]";
}

CycloNum p1_0(const MultChar& A, const FieldElement& x) {
  if (x.field != A.field) throw Error(Errc::FieldMismatch, "argument is not in the field of the character");
  return char_value(A.conj(), A.field->one_minus(x.code));
}

CycloNum period_direct_raw(const FiniteField& F, const std::vector<std::int64_t>& upper,
                           const std::vector<std::int64_t>& lower, std::uint32_t lambda, std::uint64_t L) {
  const std::size_t n = lower.size();
  if (upper.size() != n + 1) throw Error(Errc::InvalidArgument, "need exactly one more upper character than lower");
  const std::uint64_t units = F.units();
  if (L == 0 || units % L != 0) throw Error(Errc::InvalidArgument, "value order must divide q-1");
  const std::uint64_t step = units / L;
  double work = 1;
  for (std::size_t i = 0; i < n; ++i) work *= static_cast<double>(F.q());
  if (work > static_cast<double>(std::uint64_t(1) << 28))
    throw Error(Errc::BudgetExceeded, "q^n = " + std::to_string(work) + " exceeds the direct-sum budget");
  auto norm = [&](std::int64_t x) {
    x %= static_cast<std::int64_t>(units);
    return static_cast<std::uint64_t>(x < 0 ? x + static_cast<std::int64_t>(units) : x);
  };
  for (auto e : upper)
    if (norm(e) % step) throw Error(Errc::InvalidArgument, "character values do not lie in mu_L");
  for (auto e : lower)
    if (norm(e) % step) throw Error(Errc::InvalidArgument, "character values do not lie in mu_L");

  const auto& logs = F.log_table();
  const std::uint32_t q = static_cast<std::uint32_t>(F.q());
  // weight[i][y] = exponent of A_{i+1}(y) conj(A_{i+1}) B_i (1-y) for y != 0, 1
  std::vector<std::uint32_t> ys;
  for (std::uint32_t y = 1; y < q; ++y)
    if (F.one_minus(y) != 0) ys.push_back(y);
  std::vector<std::vector<std::uint64_t>> weight(n, std::vector<std::uint64_t>(ys.size()));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = norm(upper[i + 1]), b = norm(lower[i] - upper[i + 1]);
    for (std::size_t t = 0; t < ys.size(); ++t)
      weight[i][t] = (a * logs[ys[t]] + b * logs[F.one_minus(ys[t])]) % units;
  }
  const std::uint64_t a1 = norm(-upper[0]);
  std::vector<std::uint64_t> ylog(ys.size());
  for (std::size_t t = 0; t < ys.size(); ++t) ylog[t] = logs[ys[t]];
  const std::int64_t lam_log = lambda ? logs[lambda] : -1;

  std::vector<std::int64_t> counts(L, 0);
  auto finish = [&](std::uint64_t e, std::uint64_t prod_log) {
    const std::uint32_t arg = lam_log < 0 ? 0 : F.exp(static_cast<std::int64_t>((prod_log + lam_log) % units));
    const std::uint32_t z = F.one_minus(arg);
    if (z == 0) return;
    ++counts[((e + a1 * logs[z]) % units) / step];
  };
  if (n == 0) {
    finish(0, 0);
  } else {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::uint64_t e = 0, pl = 0;
      for (std::size_t i = 0; i < n; ++i) {
        e += weight[i][idx[i]];
        pl += ylog[idx[i]];
      }
      finish(e % units, pl % units);
      std::size_t k = 0;
      while (k < n && ++idx[k] == ys.size()) idx[k++] = 0;
      if (k == n) break;
    }
  }
  return CycloNum::from_counts(static_cast<unsigned>(L), counts);
}

CycloNum period_direct(const HGSpec& spec, const FieldElement& lambda) {
  check_field(spec, lambda);
  std::vector<std::int64_t> up, lo;
  for (const auto& c : spec.upper) up.push_back(c.m);
  for (const auto& c : spec.lower) lo.push_back(c.m);
  const FiniteField& F = spec.field();
  return period_direct_raw(F, up, lo, lambda.code, F.units());
}

CycloNum normalization(const HGSpec& spec) {
  auto& cache = GaussJacobiCache::of(spec.field());
  CycloNum r(1);
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const MultChar& A = spec.upper[i + 1];
    r *= cache.jacobi(A.m, (spec.lower[i] / A).m);
  }
  return r;
}

CycloNum period_spectral(const HGSpec& spec, const FieldElement& lambda) {
  check_field(spec, lambda);
  const FiniteField& F = spec.field();
  const auto units = static_cast<unsigned>(F.units());
  auto& cache = GaussJacobiCache::of(F);
  // binomial(A, B) = -B(-1) J(A, conj B)
  auto binom = [&](const MultChar& A, const MultChar& B) {
    CycloNum j = cache.jacobi(A.m, B.conj().m);
    return B.sign() > 0 ? -j : j;
  };
  CycloNum sum(0, units);
  if (!lambda.is_zero()) {
    for (const auto& chi : all_characters(F)) {
      CycloNum term = binom(spec.upper[0] * chi, chi);
      for (std::size_t i = 0; i < spec.n(); ++i) term *= binom(spec.upper[i + 1] * chi, spec.lower[i] * chi);
      sum += term * char_value(chi, lambda.code);
    }
    int sign = spec.n() % 2 == 0 ? -1 : 1;
    for (std::size_t i = 0; i < spec.n(); ++i) sign *= (spec.upper[i + 1] * spec.lower[i]).sign();
    sum = sum.scaled(mpq_class(sign, units));
  } else {
    sum += normalization(spec);
  }
  return sum;
}

CycloNum f_normalized(const HGSpec& spec, const FieldElement& lambda) {
  return period_direct(spec, lambda) / normalization(spec);
}

CycloNum greene_F(const HGSpec& spec, const FieldElement& lambda) {
  check_field(spec, lambda);
  const FiniteField& F = spec.field();
  const auto units = static_cast<unsigned>(F.units());
  const long q = static_cast<long>(F.q());
  auto& cache = GaussJacobiCache::of(F);
  // Greene's binomial B(-1)/q J(A, conj B); the 1/q factors are applied once
  auto binom = [&](const MultChar& A, const MultChar& B) {
    CycloNum j = cache.jacobi(A.m, B.conj().m);
    return B.sign() > 0 ? j : -j;
  };
  CycloNum sum(0, units);
  if (lambda.is_zero()) return sum;
  for (const auto& chi : all_characters(F)) {
    CycloNum term = binom(spec.upper[0] * chi, chi);
    for (std::size_t i = 0; i < spec.n(); ++i) term *= binom(spec.upper[i + 1] * chi, spec.lower[i] * chi);
    sum += term * char_value(chi, lambda.code);
  }
  mpz_class qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), spec.n());
  mpq_class scale(1, qn * units);
  scale.canonicalize();
  return sum.scaled(scale);
}

CycloNum mccarthy_F(const HGSpec& spec, const FieldElement& lambda) {
  check_field(spec, lambda);
  const FiniteField& F = spec.field();
  const auto units = static_cast<long>(F.units());
  auto& cache = GaussJacobiCache::of(F);
  CycloNum sum(0, static_cast<unsigned>(F.p() * F.units()));
  if (lambda.is_zero()) return sum;
  CycloNum denom(1);
  for (const auto& A : spec.upper) denom *= cache.gauss_inverse(A.m);
  for (const auto& B : spec.lower) denom *= cache.gauss_inverse(B.conj().m);
  for (const auto& chi : all_characters(F)) {
    CycloNum term = cache.gauss(chi.conj().m);
    for (const auto& A : spec.upper) term *= cache.gauss((A * chi).m);
    for (const auto& B : spec.lower) term *= cache.gauss((B * chi).conj().m);
    if (spec.n() % 2 == 0 && chi.sign() < 0) term = -term;
    sum += term * char_value(chi, lambda.code);
  }
  return (sum * denom).scaled(mpq_class(1, units));
}

bool is_primitive(const HGSpec& spec) {
  for (const auto& A : spec.upper) {
    if (A.is_trivial()) return false;
    for (const auto& B : spec.lower)
      if (A == B) return false;
  }
  return true;
}

HGSpec rational_spec(const std::vector<RationalParam>& upper, const std::vector<RationalParam>& lower,
                     const FiniteField& F) {
  std::vector<MultChar> up, lo;
  for (const auto& a : upper) up.push_back(iota(a, F));
  for (const auto& b : lower) lo.push_back(iota(b, F));
  return HGSpec::make(std::move(up), std::move(lo));
}

}  // namespace hgff
