#include <doctest.h>

#include <array>

#include "hgff/field.hpp"

using namespace hgff;

TEST_CASE("canonical modulus and generator") {
  const auto& f5 = construct_field(5, 1);
  CHECK(f5.generator() == 2);
  const auto& f9 = construct_field(3, 2);
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0});
  CHECK(f9.modulus_string() == "t^2 + 1");
  CHECK(&construct_field(3, 2) == &f9);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(construct_field(4, 1), Error);
  try {
    construct_field(4, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
  try {
    construct_field(2, 21);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("arithmetic examples") {
  const auto& f5 = construct_field(5, 1);
  CHECK(field_arith(f5.elem(3), f5.elem(4), FieldOp::mul).code == 2);
  CHECK_THROWS_AS(field_arith(f5.elem(1), f5.elem(0), FieldOp::div), Error);
  const auto& f9 = construct_field(3, 2);
  const auto t = f9.elem(3);
  CHECK((t * t).code == 2);
  const auto& f7 = construct_field(7, 1);
  CHECK_THROWS_AS(field_arith(f5.elem(1), f7.elem(1), FieldOp::add), Error);
}

TEST_CASE("dlog") {
  const auto& f5 = construct_field(5, 1);
  CHECK(dlog(f5.elem(1)) == 0);
  CHECK(dlog(f5.elem(4)) == 2);
  CHECK_THROWS_AS(dlog(f5.elem(0)), Error);
}

TEST_CASE("exp and log are inverse; field axioms against brute polynomial arithmetic") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 5}, {13, 1}}) {
    const auto& F = construct_field(p, e);
    for (std::uint32_t x = 1; x < F.q(); ++x) CHECK(F.exp(F.log(x)) == x);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(F.units()); ++k) CHECK(F.log(F.exp(k)) == k);
    CHECK(F.pow(F.generator(), F.units()) == 1);
    for (std::uint32_t x = 0; x < F.q(); ++x)
      for (std::uint32_t y = 0; y < F.q(); ++y) {
        CHECK(F.sub(F.add(x, y), y) == x);
        if (y) CHECK(F.mul(F.div(x, y), y) == x);
      }
  }
}

TEST_CASE("trace") {
  const auto& f9 = construct_field(3, 2);
  CHECK(trace_to_prime(f9.elem(3)).code == 0);
  CHECK(trace_to_prime(f9.elem(1)).code == 2);
  const auto& f7 = construct_field(7, 1);
  for (std::uint32_t x = 0; x < 7; ++x) CHECK(trace_to_prime(f7.elem(x)).code == x);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {3, 4}, {11, 2}}) {
    const auto& F = construct_field(p, e);
    std::vector<int> hits(p, 0);
    for (std::uint32_t x = 0; x < F.q(); ++x) {
      // x + x^p + ... computed directly
      std::uint32_t s = 0, y = x;
      for (int i = 0; i < e; ++i) {
        s = F.add(s, y);
        y = F.pow(y, p);
      }
      CHECK(F.trace(x) == s);
      CHECK(s < static_cast<std::uint32_t>(p));
      ++hits[s];
      for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(p); ++a) {
        const std::uint32_t y2 = (x * 7 + 3) % F.q();
        CHECK(F.trace(F.add(F.mul(a, x), y2)) == F.add(F.mul(a, F.trace(x)), F.trace(y2)));
      }
    }
    for (int c : hits) CHECK(c > 0);
  }
}

TEST_CASE("norm to subfield") {
  const auto& f5 = construct_field(5, 1);
  const auto& f25 = construct_field(5, 2);
  const auto& ext = f5.extension(2);
  CHECK(ext.big == &f25);
  for (std::uint32_t x = 0; x < 5; ++x) {
    const auto X = ext.embed_elem(f5.elem(x));
    CHECK(norm_to_subfield(X, f5).code == f5.mul(x, x));
  }
  const auto g = f25.elem(f25.generator());
  const auto n = norm_to_subfield(g, f5);
  CHECK(n.code == f25.pow(g.code, 6));
  CHECK(f5.pow(n.code, 2) != 1);
  CHECK(f5.pow(n.code, 4) == 1);
  CHECK(norm_to_subfield(f25.elem(0), f5).code == 0);
  CHECK_THROWS_AS(norm_to_subfield(g, construct_field(7, 1)), Error);
}

TEST_CASE("norm is multiplicative and matches x^((Q-1)/(q-1))") {
  for (auto [p, e, r] : std::vector<std::array<int, 3>>{{5, 1, 2}, {5, 1, 3}, {3, 1, 5}, {2, 2, 2}, {3, 2, 2}, {7, 1, 2}, {5, 1, 5}}) {
    const auto& base = construct_field(p, e);
    const auto& ext = base.extension(r);
    const auto& big = *ext.big;
    for (std::uint32_t x = 1; x < big.q(); ++x) {
      const std::uint32_t direct = big.pow(x, ext.norm_exponent);
      CHECK(static_cast<std::uint32_t>(ext.restriction[direct]) == ext.norm(x));
    }
    for (std::uint32_t x = 0; x < big.q(); x += 3)
      for (std::uint32_t y = 0; y < big.q(); y += 5)
        CHECK(ext.norm(big.mul(x, y)) == base.mul(ext.norm(x), ext.norm(y)));
    for (std::uint32_t a = 0; a < base.q(); ++a)
      for (std::uint32_t b = 0; b < base.q(); ++b) {
        CHECK(ext.embed[base.add(a, b)] == big.add(ext.embed[a], ext.embed[b]));
        CHECK(ext.embed[base.mul(a, b)] == big.mul(ext.embed[a], ext.embed[b]));
      }
  }
}

TEST_CASE("parse and format") {
  const auto& f9 = construct_field(3, 2);
  for (std::uint32_t x = 0; x < 9; ++x) CHECK(f9.parse(f9.format(x)) == x);
  CHECK(f9.parse("[0,1]") == 3);
  CHECK(f9.parse("2") == 2);
  CHECK(f9.parse("-1") == 2);
  CHECK(f9.format(0) == "0");
}

TEST_CASE("deterministic construction") {
  const auto& a = construct_field(7, 3);
  CHECK(a.table_checksum() == construct_field(7, 3).table_checksum());
}
