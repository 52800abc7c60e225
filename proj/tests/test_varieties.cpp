#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>

#include "hgff/varieties.hpp"

using namespace hgff;

namespace {

const FiniteField& fq(int q) {
  switch (q) {
    case 9: return construct_field(3, 2);
    case 25: return construct_field(5, 2);
    default: return construct_field(q, 1);
  }
}

}  // namespace

TEST_CASE("brute counts") {
  const auto& f5 = fq(5);
  HGVariety V{2, {1}, {1}, 1, f5.elem(2)};
  CHECK(count_affine_brute(V) == 7);
  CHECK(count_via_periods(V) == 8);
  CHECK(legendre_count(f5.elem(2)) == 8);
  CHECK(legendre_count_brute(f5.elem(2)) == 8);
}

TEST_CASE("point-count formula matches enumeration") {
  struct Case {
    unsigned N;
    std::vector<std::int64_t> i, j;
    std::int64_t k;
  };
  const std::vector<Case> cases{{2, {1}, {1}, 1}, {3, {1}, {1}, 1}, {3, {1}, {2}, 2}, {4, {1}, {3}, 1},
                                {4, {2}, {1}, 3}, {6, {4}, {3}, 1}, {3, {1, 2}, {1, 1}, 1}, {2, {1, 1}, {1, 1}, 1}};
  for (const auto& c : cases)
    for (int q : {7, 13}) {
      const auto& F = fq(q);
      if (F.units() % c.N) continue;
      for (std::uint32_t x = 0; x < F.q(); ++x) {
        HGVariety V{c.N, c.i, c.j, c.k, F.elem(x)};
        CHECK(count_via_periods(V) == count_affine_brute(V) + 1);
        const auto b = count_bookkeeping(V);
        CHECK(b.total_eps0() == b.total_eps1());
      }
    }
  HGVariety bad{3, {1}, {1}, 1, fq(5).elem(2)};
  CHECK_THROWS_AS(count_via_periods(bad), Error);
}

TEST_CASE("Legendre family") {
  for (int q : {5, 7, 9, 11, 13, 25, 101}) {
    const auto& F = fq(q);
    for (std::uint32_t x = 2; x < F.q(); ++x) {
      const auto n = legendre_count(F.elem(x));
      CHECK(n == legendre_count_brute(F.elem(x)));
      CHECK(std::abs(static_cast<double>(n - q - 1)) <= 2 * std::sqrt(static_cast<double>(q)));
      const CycloNum t = glc_trace(GLCurve{2, 1, 1, 1, F.elem(x)});
      CHECK(t == CycloNum(q + 1 - n));
    }
  }
  CHECK_THROWS_AS(legendre_count(fq(7).elem(1)), Error);
}

TEST_CASE("generalized Legendre trace") {
  const auto& F = fq(13);
  for (std::uint32_t x = 2; x < 13; ++x) {
    const CycloNum t = glc_trace(GLCurve{6, 4, 3, 1, F.elem(x)});
    REQUIRE(t.as_rational_integer());
    CHECK(std::abs(t.as_rational_integer()->get_d()) <= 2 * 2 * std::sqrt(13.0));
  }
  for (auto [N, i, j, k] : std::vector<std::array<int, 4>>{{3, 1, 1, 1}, {4, 1, 2, 3}, {12, 5, 7, 1}})
    for (std::uint32_t x = 2; x < 13; ++x) {
      const CycloNum t = glc_trace(GLCurve{static_cast<unsigned>(N), i, j, k, F.elem(x)});
      REQUIRE(t.as_rational_integer());
      int phiN = 0;
      for (int m = 1; m < N; ++m) phiN += std::gcd(m, N) == 1;
      CHECK(std::abs(t.as_rational_integer()->get_d()) <= phiN * 2 * std::sqrt(13.0) + 1e-6);
    }
  CHECK_THROWS_AS(glc_trace(GLCurve{3, 1, 1, 1, fq(7).elem(1)}), Error);
}

TEST_CASE("genus") {
  CHECK(genus(4, 1, 1, 1) == 3);
  CHECK(genus(2, 1, 1, 1) == 1);
  CHECK(genus(5, 3, 4, 4) == 4);
  CHECK_THROWS_AS(genus(4, 0, 2, 2), Error);
  CHECK_THROWS_AS(genus(4, 1, 4, 2), Error);
}
