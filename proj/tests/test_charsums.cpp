#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "hgff/charsums.hpp"

using namespace hgff;

namespace {

const FiniteField& F(int p, int e = 1) { return construct_field(p, e); }

std::complex<double> gauss_numeric(const MultChar& A) {
  const auto& K = *A.field;
  std::complex<double> s = 0;
  for (std::uint32_t x = 1; x < K.q(); ++x) {
    const double t = 2 * M_PI * (static_cast<double>(A.exponent_at(x)) / K.units() +
                                 static_cast<double>(K.trace(x)) / K.p());
    s += std::polar(1.0, t);
  }
  return s;
}

}  // namespace

TEST_CASE("Gauss sum examples") {
  for (int p : {3, 5, 7}) CHECK(gauss_sum(MultChar::trivial(F(p))) == CycloNum(-1));
  const auto phi = MultChar::quadratic(F(5));
  CHECK(gauss_sum(phi) * gauss_sum(phi) == CycloNum(5));
  CHECK(std::abs(std::abs(gauss_sum(phi).to_complex()) - std::sqrt(5.0)) < 1e-12);
  CHECK(gauss_sum(phi).order() == 20);
}

TEST_CASE("Gauss sums match a floating-point oracle") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 1}, {7, 1}, {2, 3}, {13, 1}}) {
    for (const auto& A : all_characters(F(p, e)))
      CHECK(std::abs(gauss_sum(A).to_complex() - gauss_numeric(A)) < 1e-9);
  }
}

TEST_CASE("Jacobi sum examples") {
  const auto& f5 = F(5);
  CHECK(jacobi_sum(MultChar::quadratic(f5), MultChar::quadratic(f5)) == CycloNum(-1));
  for (const auto& A : all_characters(F(7))) {
    if (!A.is_trivial()) CHECK(jacobi_sum(A, MultChar::trivial(F(7))) == CycloNum(-1));
    CHECK(jacobi_sum(A, A.conj()) == CycloNum(-A.sign() + 6 * delta_char(A)));
  }
  const auto eps = MultChar::trivial(f5);
  CHECK(jacobi_from_gauss(eps, eps) == CycloNum(3));
  CHECK(jacobi_from_gauss(MultChar::quadratic(f5), MultChar::quadratic(f5)) == CycloNum(-1));
}

TEST_CASE("reflection, Jacobi-Gauss relation and Lemma 1") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
    const auto& K = F(p, e);
    const long q = static_cast<long>(K.q());
    for (const auto& A : all_characters(K)) {
      const CycloNum g = gauss_sum(A), gb = gauss_sum(A.conj());
      const int d = delta_char(A);
      CHECK(g * gb == CycloNum(q * A.sign() - (q - 1) * d));
      CHECK((g * gb).inverse() == CycloNum::rational(mpq_class(A.sign(), q) + mpq_class((q - 1) * d, q)));
      CHECK(gb == CycloNum(q * A.sign()) / g + CycloNum((q - 1) * d));
      CHECK(gb.inverse() == g.scaled(mpq_class(A.sign(), q)) - CycloNum::rational(mpq_class((q - 1) * d, q)));
      for (const auto& B : all_characters(K)) {
        const CycloNum J = jacobi_sum(A, B);
        CHECK(J == jacobi_from_gauss(A, B));
        CHECK(jacobi_sum(A, B.conj()) == jacobi_sum(A, B * A.conj()) * char_sign(A));
        CHECK(binomial(A, B) == binomial(A, A / B));
        if (!A.is_trivial() && !B.is_trivial() && !(A * B).is_trivial()) CHECK(J * J.conj() == CycloNum(q));
      }
      if (!A.is_trivial()) CHECK(binomial(A, MultChar::trivial(K)) == CycloNum(1));
      CHECK(rising(A, MultChar::trivial(K)) == CycloNum(1));
    }
  }
}

TEST_CASE("duplication and rising-factorial cocycle") {
  for (int p : {3, 5, 7, 11}) {
    const auto& K = F(p);
    const auto phi = MultChar::quadratic(K);
    for (const auto& A : all_characters(K)) {
      if (!A.is_trivial())
        CHECK(jacobi_sum(A, A) == char_value(A.conj(), K.int_code(4)) * jacobi_sum(A, phi));
      CHECK(gauss_sum(A) * gauss_sum(phi * A) ==
            gauss_sum(A.pow(2)) * gauss_sum(phi) * char_value(A.conj(), K.int_code(4)));
    }
  }
  const auto& K = F(7);
  for (const auto& A : all_characters(K))
    for (const auto& c1 : all_characters(K))
      for (const auto& c2 : all_characters(K))
        CHECK(rising(A, c1 * c2) == rising(A, c1) * rising(A * c1, c2));
}

TEST_CASE("multiplication formula in rising-factorial form") {
  for (auto [p, e, m] : std::vector<std::array<int, 3>>{{5, 1, 2}, {7, 1, 2}, {7, 1, 3}, {13, 1, 3}, {3, 2, 2}, {2, 2, 3}}) {
    const auto& K = F(p, e);
    for (const auto& A : all_characters(K))
      for (const auto& psi : all_characters(K)) {
        CycloNum rhs = char_value(psi, K.pow(K.int_code(m), m));
        for (const auto& chi : characters_dividing(K, m)) rhs *= rising(A * chi, psi);
        CHECK(rising(A.pow(m), psi.pow(m)) == rhs);
      }
  }
}

TEST_CASE("Hasse-Davenport product") {
  for (const auto& psi : all_characters(F(5))) CHECK(hasse_davenport_product_check(psi, 2).pass);
  for (const auto& psi : all_characters(F(7))) {
    CHECK(hasse_davenport_product_check(psi, 3).pass);
    CHECK(hasse_davenport_product_check(psi, 1).pass);
  }
  CHECK_THROWS_AS(hasse_davenport_product_check(MultChar::trivial(F(5)), 3), Error);
}

TEST_CASE("Hasse-Davenport lift") {
  const auto phi2 = lift_norm(MultChar::quadratic(F(5)), 2);
  CHECK(gauss_sum_raw(*phi2.field, phi2.m, 4) == CycloNum(-5));
  CHECK(gauss_sum(phi2) == CycloNum(-5));
  for (unsigned r : {1u, 2u, 3u}) CHECK(hasse_davenport_lift_check(MultChar::trivial(F(5)), r).pass);
  for (const auto& A : all_characters(F(7))) CHECK(hasse_davenport_lift_check(A, 2).pass);
  for (const auto& A : all_characters(F(2, 2))) CHECK(hasse_davenport_lift_check(A, 3).pass);
}
