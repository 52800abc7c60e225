#include <doctest.h>

#include "hgff/zeta.hpp"

using namespace hgff;

namespace {

const FiniteField& fq(int q) {
  switch (q) {
    case 9: return construct_field(3, 2);
    default: return construct_field(q, 1);
  }
}

}  // namespace

TEST_CASE("lifted periods") {
  const auto& f5 = fq(5);
  const auto phi = MultChar::quadratic(f5), eps = MultChar::trivial(f5);
  const auto leg = HGSpec::make({phi, phi}, {eps});
  CHECK(lifted_period(leg, f5.elem(2), 1) == period_direct(leg, f5.elem(2)));
  // brute count over F_25: #E = q^2 + 1 + P_2
  const auto& ext = f5.extension(2);
  const auto& big = *ext.big;
  const auto lam = ext.embed[2];
  long count = 1;
  for (std::uint32_t x = 0; x < big.q(); ++x) {
    const auto r = big.mul(x, big.mul(big.sub(x, 1), big.sub(x, lam)));
    count += r == 0 ? 1 : (big.log(r) % 2 == 0 ? 2 : 0);
  }
  CHECK(lifted_period(leg, f5.elem(2), 2) == CycloNum(count - 26));
  const auto triv = HGSpec::make({eps, eps}, {eps});
  for (unsigned r = 1; r <= 3; ++r) CHECK(lifted_period(triv, f5.elem(3), r).is_rational());
}

TEST_CASE("Legendre charpoly") {
  const auto& f5 = fq(5);
  const auto phi = MultChar::quadratic(f5), eps = MultChar::trivial(f5);
  const auto f = charpoly_2(HGSpec::make({phi, phi}, {eps}), f5.elem(2));
  CHECK(f.trace() == CycloNum(-2));
  CHECK(f.det() == CycloNum(5));
  CHECK(f.newton_ok);
  const auto rep = weil_purity_check(f);
  CHECK(rep.status == "pass");
  CHECK(std::abs(rep.roots[0] * rep.roots[1] - std::complex<double>(5, 0)) < 1e-12);
  CHECK(std::abs(rep.roots[0].real() + 1) < 1e-12);
  CHECK(std::abs(std::abs(rep.roots[0].imag()) - 2) < 1e-12);
  CHECK(f.str() == "1 + 2T + 5T^2");
  const auto z = zeta_series(HGSpec::make({phi, phi}, {eps}), f5.elem(2), 4);
  CHECK(z[1] == f.coeffs[1]);
  CHECK(z[2] == f.coeffs[2]);
  CHECK(z[3].is_zero());
  CHECK(z[4].is_zero());
}

TEST_CASE("purity over all primitive specs") {
  for (int q : {5, 7}) {
    const auto& F = fq(q);
    for (const auto& a : all_characters(F))
      for (const auto& b : all_characters(F))
        for (const auto& c : all_characters(F)) {
          const auto s = HGSpec::make({a, b}, {c});
          if (!is_primitive(s)) continue;
          for (std::uint32_t x = 2; x < F.q(); ++x) {
            const auto f = charpoly_2(s, F.elem(x), 3);
            CHECK(weil_purity_check(f).status == "pass");
          }
        }
  }
}

TEST_CASE("negative paths") {
  const auto& f7 = fq(7);
  const auto eps = MultChar::trivial(f7), phi = MultChar::quadratic(f7);
  CHECK_THROWS_AS(charpoly_2(HGSpec::make({eps, phi}, {phi}), f7.elem(3)), Error);
  CHECK_THROWS_AS(charpoly_2(HGSpec::make({phi, phi}, {eps}), f7.elem(1)), Error);
  const auto imp = zeta_factor(HGSpec::make({eps, phi}, {MultChar::of(f7, 2)}), f7.elem(3), 3);
  CHECK(weil_purity_check(imp).status == "impure");
  ZetaFactor bogus;
  bogus.q = 7;
  bogus.coeffs = {CycloNum(1), CycloNum(1), CycloNum(6)};
  const auto rep = weil_purity_check(bogus);
  CHECK(rep.status == "fail");
  CHECK(!rep.witness.empty());
}

TEST_CASE("degenerate factorizations") {
  for (int q : {5, 7}) {
    const auto& F = fq(q);
    for (const auto& A : all_characters(F))
      for (const auto& B : all_characters(F))
        for (const auto& C : all_characters(F)) {
          if (A == C) continue;
          const auto z = zeta_series(HGSpec::make({A, B}, {C}), F.elem(1), 3);
          CHECK(z[1] == jacobi_sum(B, (A * B).conj() * C));
          CHECK(z[2].is_zero());
          CHECK(z[3].is_zero());
        }
    for (const auto& B : all_characters(F))
      for (const auto& D : all_characters(F)) {
        const auto C = D.pow(2);
        if (B.pow(2) == C) continue;
        const auto z = zeta_series(HGSpec::make({B, C}, {C / B}), F.elem(F.neg(1)), 3);
        const auto j1 = jacobi_sum(D, B.conj()), j2 = jacobi_sum(D * MultChar::quadratic(F), B.conj());
        CHECK(z[1] == j1 + j2);
        CHECK(z[2] == j1 * j2);
        CHECK(z[3].is_zero());
      }
  }
}

TEST_CASE("roots near a double root stay on the circle") {
  const auto& F = fq(13);
  const auto s = HGSpec::make({MultChar::of(F, 2), MultChar::of(F, 10)}, {MultChar::of(F, 6)});
  const auto rep = weil_purity_check(charpoly_2(s, F.elem(F.exp(11)), 2));
  CHECK(rep.status == "pass");
  CHECK(rep.max_deviation < 1e-12);
}
