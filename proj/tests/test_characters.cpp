#include <doctest.h>

#include <array>
#include <numeric>
#include <random>

#include "hgff/characters.hpp"

using namespace hgff;

TEST_CASE("character values") {
  const auto& f5 = construct_field(5, 1);
  for (std::uint32_t q : {5u, 7u, 9u}) {
    const auto& F = q == 9 ? construct_field(3, 2) : construct_field(q, 1);
    CHECK(char_value(MultChar::trivial(F), F.elem(0)).is_zero());
  }
  const auto phi = MultChar::quadratic(f5);
  CHECK(char_value(phi, f5.elem(4)) == CycloNum(1));
  CHECK(char_value(phi, f5.elem(2)) == CycloNum(-1));
  CHECK(char_value(phi, f5.elem(2)).as_rational_integer() == mpz_class(-1));
  CHECK_THROWS_AS(char_value(phi, construct_field(7, 1).elem(1)), Error);
}

TEST_CASE("delta") {
  const auto& f7 = construct_field(7, 1);
  CHECK(delta_char(MultChar::trivial(f7)) == 1);
  CHECK(delta_char(MultChar::quadratic(f7)) == 0);
  CHECK(delta_elem(f7.elem(0)) == 1);
  CHECK(delta_elem(f7.elem(3)) == 0);
}

TEST_CASE("group structure") {
  const auto& F = construct_field(13, 1);
  for (const auto& a : all_characters(F)) {
    CHECK(a.order() == 12 / std::gcd<std::int64_t>(a.m, 12));
    CHECK((a * a.conj()).is_trivial());
    for (std::uint32_t x = 1; x < 13; ++x) {
      CHECK(char_value(a.conj(), x) == char_value(a, x).conj());
      CHECK(char_value(a, F.mul(x, 5)) == char_value(a, x) * char_value(a, 5));
    }
    CHECK(char_sign(a) == char_value(a, F.neg(1)));
  }
  CHECK(characters_of_order(F, 12).size() == 4);
  CHECK(characters_of_order(F, 5).empty());
  CHECK(characters_dividing(F, 4).size() == 4);
}

TEST_CASE("orthogonality and delta expansion") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {2, 3}, {13, 1}, {5, 2}, {3, 3}, {7, 2}}) {
    const auto& F = construct_field(p, e);
    const auto n = static_cast<long>(F.units());
    for (const auto& chi : all_characters(F)) {
      CycloNum s(0, n);
      for (std::uint32_t x = 1; x < F.q(); ++x) s += char_value(chi, x);
      CHECK(s == CycloNum(n * delta_char(chi)));
    }
    if (F.q() > 27) continue;
    for (std::uint32_t a = 1; a < F.q(); ++a)
      for (std::uint32_t x = 0; x < F.q(); ++x) {
        CycloNum s(0, n);
        for (const auto& chi : all_characters(F)) s += char_value(chi, F.div(x, a));
        CHECK(s.scaled(mpq_class(1, n)) == CycloNum(delta_code(F.sub(x, a))));
      }
  }
}

TEST_CASE("expansion uniqueness") {
  std::mt19937_64 rng(11);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{5, 1}, {3, 2}, {7, 1}, {3, 3}}) {
    const auto& F = construct_field(p, e);
    const auto n = static_cast<unsigned>(F.units());
    std::vector<CycloNum> f;
    for (std::uint32_t x = 0; x < F.q(); ++x)
      f.push_back(CycloNum(static_cast<long>(rng() % 7) - 3, n) + CycloNum::root(n, rng() % n));
    std::vector<CycloNum> coeff;
    for (const auto& chi : all_characters(F)) {
      CycloNum c(0, n);
      for (std::uint32_t y = 0; y < F.q(); ++y) c += f[y] * char_value(chi.conj(), y);
      coeff.push_back(c.scaled(mpq_class(1, n)));
    }
    for (std::uint32_t x = 0; x < F.q(); ++x) {
      CycloNum r = f[0].scaled(delta_code(x));
      for (const auto& chi : all_characters(F)) r += coeff[chi.m] * char_value(chi, x);
      CHECK(r == f[x]);
    }
  }
}

TEST_CASE("norm lifting") {
  const auto& f5 = construct_field(5, 1);
  const auto phi2 = lift_norm(MultChar::quadratic(f5), 2);
  const auto& ext = f5.extension(2);
  CHECK(char_value(phi2, ext.embed[2]) == CycloNum(1));
  CHECK(lift_norm(MultChar::trivial(f5), 3).is_trivial());
  for (auto [p, e, r] : std::vector<std::array<int, 3>>{{5, 1, 2}, {5, 1, 3}, {7, 1, 2}, {3, 2, 2}, {2, 2, 3}}) {
    const auto& F = construct_field(p, e);
    const auto& X = F.extension(r);
    for (const auto& A : all_characters(F)) {
      const auto Ar = lift_norm(A, r);
      CHECK(Ar.order() == A.order());
      for (std::uint32_t y = 0; y < X.big->q(); ++y)
        CHECK(char_value(Ar, y) == char_value(A, X.norm(y)));
      for (std::uint32_t x = 1; x < F.q(); ++x) CHECK(char_value(Ar, X.embed[x]) == char_value(A, x).pow(r));
    }
  }
}

TEST_CASE("iota and kappa") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}, {13, 1}}) {
    const auto& F = construct_field(p, e);
    CHECK(iota(RationalParam::make(1, 2), F) == MultChar::quadratic(F));
    CHECK(iota(RationalParam::make(0, 1), F).is_trivial());
  }
  CHECK_THROWS_AS(iota(RationalParam::make(1, 3), construct_field(5, 1)), Error);
  const auto& f13 = construct_field(13, 1);
  CHECK(kappa(MultChar::quadratic(f13), 2) == RationalParam{1, 2});
  CHECK(kappa(MultChar::trivial(f13), 4) == RationalParam{0, 1});
  for (int i = 0; i < 12; ++i) {
    const auto a = RationalParam::make(i, 12);
    CHECK(kappa(iota(a, f13), 12) == a);
    for (int j = 0; j < 12; ++j) CHECK(iota(a, f13) * iota(RationalParam::make(j, 12), f13) == iota(RationalParam::make(i + j, 12), f13));
  }
  CHECK(iota(RationalParam::make(5, 12), f13).order() == 12);
  CHECK_THROWS_AS(kappa(iota(RationalParam::make(1, 12), f13), 6), Error);
}

TEST_CASE("parsing") {
  const auto& f13 = construct_field(13, 1);
  CHECK(parse_char(f13, "chi^5").m == 5);
  CHECK(parse_char(f13, "order:12,index:1").m == 5);
  CHECK(parse_char(f13, "phi").m == 6);
  CHECK(parse_char(f13, "-1").m == 11);
  CHECK_THROWS_AS(parse_char(f13, "order:5,index:0"), Error);
  CHECK_THROWS_AS(parse_char(f13, "x7"), Error);
  CHECK(RationalParam::parse("5/12") == RationalParam{5, 12});
  CHECK(RationalParam::parse("-1/3") == RationalParam{2, 3});
}
