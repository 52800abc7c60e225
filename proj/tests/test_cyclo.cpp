#include <doctest.h>

#include <random>

#include "hgff/cyclo.hpp"

using namespace hgff;

namespace {

using Poly = std::vector<long>;

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly divexact(Poly a, const Poly& b) {
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- > b.size() - 1;) {
    const long c = a[k] / b.back();
    q[k - b.size() + 1] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k - b.size() + 1 + i] -= c * b[i];
  }
  return q;
}

int mobius(unsigned n) {
  int m = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

// prod_{d | M} (x^d - 1)^{mu(M/d)}
Poly mobius_cyclotomic(unsigned M) {
  Poly num{1}, den{1};
  for (unsigned d = 1; d <= M; ++d) {
    if (M % d) continue;
    Poly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    const int mu = mobius(M / d);
    if (mu == 1) num = mul(num, f);
    if (mu == -1) den = mul(den, f);
  }
  return divexact(num, den);
}

CycloNum z(unsigned M, long k = 1) { return CycloNum::root(M, k); }

CycloNum random_elem(std::mt19937_64& rng, unsigned M) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<mpz_class> c(euler_phi(M));
  for (auto& x : c) x = d(rng);
  return CycloNum::from_coeffs(M, c, 1 + rng() % 3);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == Poly{-1, 1});
  CHECK(cyclotomic_polynomial(12) == Poly{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(7) == Poly(7, 1));
  for (unsigned M = 1; M <= 210; ++M) CHECK(cyclotomic_polynomial(M) == mobius_cyclotomic(M));
}

TEST_CASE("arithmetic examples") {
  CHECK((CycloNum(1) + z(4)) * (CycloNum(1) - z(4)) == CycloNum(2));
  CHECK(CycloNum(1) + z(3) == z(6));
  CHECK((CycloNum(1) + z(3)).order() == 3);
  for (unsigned M : {5u, 12u, 30u}) CHECK(CycloNum(1) / z(M) == z(M, M - 1));
  CHECK_THROWS_AS(CycloNum(1) / CycloNum(0, 7), Error);
}

TEST_CASE("embed, conj, integer extraction") {
  CHECK(z(2).embed(4) == CycloNum(-1));
  CHECK(CycloNum(3).embed(20).as_rational_integer() == mpz_class(3));
  CHECK(z(3).embed(12).numerators() == z(12, 4).numerators());
  CHECK_THROWS_AS(z(3).embed(8), Error);
  CHECK(z(5).conj() == z(5, 4));
  CHECK(CycloNum::rational(mpq_class(2, 3)).conj() == CycloNum::rational(mpq_class(2, 3)));
  CHECK(!z(3).as_rational_integer());
  CHECK(*(z(3) + z(3, 2)).as_rational_integer() == -1);
}

TEST_CASE("ring axioms and homomorphisms on random samples") {
  std::mt19937_64 rng(7);
  for (unsigned M : {1u, 3u, 4u, 8u, 9u, 12u, 15u, 20u, 36u, 60u, 35u}) {
    for (int t = 0; t < 12; ++t) {
      auto a = random_elem(rng, M), b = random_elem(rng, M), c = random_elem(rng, M);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * (b * c) == (a * b) * c);
      CHECK(a * b == b * a);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a * a.conj()) == (a * a.conj()).conj());
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK((a * b).embed(2 * M) == a.embed(2 * M) * b.embed(2 * M));
      CHECK(a.embed(2 * M).embed(6 * M) == a.embed(6 * M));
      const auto za = a.to_complex(), zb = b.to_complex();
      CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-8);
    }
  }
}

TEST_CASE("mixed orders and counts") {
  CHECK(z(4) * z(6) == z(12, 5));
  std::vector<std::int64_t> counts(12, 0);
  counts[1] = 3;
  counts[7] = -2;
  CHECK(CycloNum::from_counts(12, counts) == z(12).scaled(3) - z(12, 7).scaled(2));
  std::vector<std::int64_t> all(9, 1);
  CHECK(CycloNum::from_counts(9, all).is_zero());
}

TEST_CASE("non-normed inverse uses the Euclidean path") {
  const CycloNum a = CycloNum(2, 7) + z(7) + z(7, 3).scaled(5);
  CHECK(a * a.inverse() == CycloNum(1));
  const CycloNum b = CycloNum::rational(mpq_class(3, 7), 13) + z(13, 5);
  CHECK(b / b == CycloNum(1));
}

TEST_CASE("complex approximation") {
  CHECK(std::abs(z(4).to_complex() - std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs((z(12, 4) - z(12, 2) + CycloNum(1)).to_complex()) < 1e-10);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(CycloNum(1, 10007), Error);
}
