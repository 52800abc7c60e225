#include "hgff/varieties.hpp"

#include <cmath>
#include <numeric>

namespace hgff {

namespace {

void validate(const HGVariety& V) {
  if (V.N < 2) throw Error(Errc::InvalidArgument, "N must be at least 2");
  if (V.i.empty() || V.i.size() != V.j.size()) throw Error(Errc::InvalidArgument, "need n >= 1 exponent pairs");
  if (!V.lambda.field) throw Error(Errc::InvalidArgument, "lambda has no field");
}

void require_positive(const HGVariety& V) {
  bool ok = V.k > 0;
  for (std::size_t s = 0; s < V.i.size(); ++s) ok = ok && V.i[s] > 0 && V.j[s] > 0;
  if (!ok) throw Error(Errc::InvalidArgument, "the period formula needs positive exponents");
}

std::int64_t to_integer(const CycloNum& v, const char* what) {
  const auto z = v.as_rational_integer();
  if (!z || !z->fits_slong_p()) throw Error(Errc::NotInteger, std::string(what) + " is not a rational integer: " + v.str());
  return z->get_si();
}

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

MultChar eta(const FiniteField& F, unsigned N) { return iota(RationalParam::make(1, N), F); }

}  // namespace

std::int64_t count_affine_brute(const HGVariety& V) {
  validate(V);
  const FiniteField& F = *V.lambda.field;
  const std::size_t n = V.i.size();
  for (std::size_t s = 0; s < n; ++s)
    if (V.i[s] < 0 || V.j[s] < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  if (V.k < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  if (std::pow(static_cast<double>(F.q()), static_cast<double>(n)) > std::pow(2.0, 28))
    throw Error(Errc::BudgetExceeded, "q^n exceeds the enumeration budget");
  const std::uint64_t g = std::gcd<std::uint64_t>(V.N, F.units());
  std::int64_t count = 0;
  std::vector<std::uint32_t> x(n, 0);
  while (true) {
    std::uint32_t r = 1, prod = 1;
    for (std::size_t s = 0; s < n; ++s) {
      r = F.mul(r, F.mul(F.pow(x[s], V.i[s]), F.pow(F.one_minus(x[s]), V.j[s])));
      prod = F.mul(prod, x[s]);
    }
    r = F.mul(r, F.pow(F.one_minus(F.mul(V.lambda.code, prod)), V.k));
    if (r == 0)
      count += 1;
    else if (static_cast<std::uint64_t>(F.log(r)) % g == 0)
      count += static_cast<std::int64_t>(g);
    std::size_t s = 0;
    while (s < n && ++x[s] == F.q()) x[s++] = 0;
    if (s == n) break;
  }
  return count;
}

CountBookkeeping count_bookkeeping(const HGVariety& V) {
  validate(V);
  require_positive(V);
  const FiniteField& F = *V.lambda.field;
  if (F.units() % V.N != 0)
    throw Error(Errc::IncompatibleCongruence, "q = " + std::to_string(F.q()) + " is not 1 mod " + std::to_string(V.N));
  const std::size_t n = V.i.size();
  const MultChar e = eta(F, V.N);
  CycloNum sum(0);
  for (unsigned m = 1; m < V.N; ++m) {
    std::vector<MultChar> up{e.pow(-static_cast<std::int64_t>(m) * V.k)}, lo;
    for (std::size_t s = n; s-- > 0;) {
      up.push_back(e.pow(m * V.i[s]));
      lo.push_back(e.pow(m * (V.i[s] + V.j[s])));
    }
    sum += period_direct(HGSpec::make(up, lo), V.lambda);
  }
  CountBookkeeping b;
  b.period_sum = to_integer(sum, "period sum");
  b.main_eps1 = ipow(static_cast<std::int64_t>(F.q()), n);
  // m = 0 with eps(0) = 0 counts the tuples where the right side is nonzero
  std::vector<std::uint32_t> x(n, 0);
  while (true) {
    std::uint32_t prod = 1;
    bool zero = false;
    for (std::size_t s = 0; s < n; ++s) {
      zero = zero || x[s] == 0 || F.one_minus(x[s]) == 0;
      prod = F.mul(prod, x[s]);
    }
    zero = zero || F.one_minus(F.mul(V.lambda.code, prod)) == 0;
    if (zero)
      ++b.zero_fibres;
    else
      ++b.main_eps0;
    std::size_t s = 0;
    while (s < n && ++x[s] == F.q()) x[s++] = 0;
    if (s == n) break;
  }
  return b;
}

std::int64_t count_via_periods(const HGVariety& V) { return 1 + count_bookkeeping(V).total_eps1(); }

std::int64_t legendre_count(const FieldElement& lambda) {
  const FiniteField& F = *lambda.field;
  if (lambda.code == 0 || lambda.code == 1) throw Error(Errc::DegenerateLambda, "lambda must not be 0 or 1");
  const MultChar phi = MultChar::quadratic(F);
  const CycloNum P = period_direct(HGSpec::make({phi, phi}, {MultChar::trivial(F)}), lambda);
  return static_cast<std::int64_t>(F.q()) + 1 + to_integer(P, "Legendre period");
}

std::int64_t legendre_count_brute(const FieldElement& lambda) {
  const FiniteField& F = *lambda.field;
  if (lambda.code == 0 || lambda.code == 1) throw Error(Errc::DegenerateLambda, "lambda must not be 0 or 1");
  std::int64_t count = 1;
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    const std::uint32_t r = F.mul(x, F.mul(F.sub(x, 1), F.sub(x, lambda.code)));
    if (r == 0)
      count += 1;
    else if (F.log(r) % 2 == 0)
      count += 2;
  }
  return count;
}

CycloNum glc_trace(const GLCurve& C) {
  const FiniteField& F = *C.lambda.field;
  if (C.N < 2 || C.i <= 0 || C.j <= 0 || C.k <= 0 || C.i >= C.N || C.j >= C.N || C.k >= C.N)
    throw Error(Errc::InvalidArgument, "need 0 < i, j, k < N");
  if (F.units() % C.N != 0)
    throw Error(Errc::IncompatibleCongruence, "q = " + std::to_string(F.q()) + " is not 1 mod " + std::to_string(C.N));
  if (C.lambda.code == 0 || C.lambda.code == 1) throw Error(Errc::DegenerateLambda, "lambda must not be 0 or 1");
  const MultChar e = eta(F, C.N);
  CycloNum sum(0);
  for (std::int64_t m = 1; m < C.N; ++m) {
    if (std::gcd<std::int64_t>(m, C.N) != 1) continue;
    sum += period_direct(HGSpec::make({e.pow(-m * C.k), e.pow(m * C.i)}, {e.pow(m * (C.i + C.j))}), C.lambda);
  }
  return -sum;
}

std::int64_t genus(std::int64_t N, std::int64_t i, std::int64_t j, std::int64_t k) {
  if (N < 2 || i < 1 || j < 1 || k < 1 || i >= N || j >= N || k >= N)
    throw Error(Errc::InvalidArgument, "need 1 <= i, j, k < N");
  const std::int64_t s = std::gcd(N, i + j + k) + std::gcd(N, i) + std::gcd(N, j) + std::gcd(N, k);
  if (s % 2 != 0) throw Error(Errc::NonIntegral, "genus formula is not integral for these exponents");
  return 1 + N - s / 2;
}

}  // namespace hgff
