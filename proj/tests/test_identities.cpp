#include <doctest.h>

#include <algorithm>
#include <set>

#include "hgff/error.hpp"
#include "hgff/identities.hpp"

using namespace hgff;

namespace {

const FiniteField& fq(std::uint64_t q) { return field_of_order(q); }

std::string arg_of(const FiniteField& F, std::int64_t n) {
  return "g^" + std::to_string(dlog(F.from_int(n)));
}

std::string arg_of(const FiniteField& F, std::int64_t num, std::int64_t den) {
  return "g^" + std::to_string(dlog(F.from_int(num) / F.from_int(den)));
}

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("registry ids are unique and every entry is complete") {
  std::set<std::string> ids;
  for (const auto& r : identity_registry()) {
    CHECK(ids.insert(r.id).second);
    CHECK(!r.summary.empty());
    CHECK(r.applies);
    CHECK(r.eval);
    CHECK(!r.default_q.empty());
  }
  CHECK(ids.size() >= 60);
  CHECK(error_code([] { find_identity("no-such-identity"); }) == Errc::UnknownIdentity);
  CHECK(error_code([] { verify("no-such-identity", fq(7)); }) == Errc::UnknownIdentity);
}

TEST_CASE("verify mode parsing") {
  CHECK(VerifyMode::parse("exhaustive").exhaustive);
  auto m = VerifyMode::parse("sample:500:42");
  CHECK(!m.exhaustive);
  CHECK(m.samples == 500);
  CHECK(m.seed == 42);
  CHECK(m.str() == "sample:500:42");
  CHECK(VerifyMode::parse(m.str()).str() == m.str());
  CHECK(error_code([] { VerifyMode::parse("sample:x"); }) == Errc::InvalidArgument);
  CHECK(error_code([] { VerifyMode::parse("everything"); }) == Errc::InvalidArgument);
}

TEST_CASE("evaluation context periods agree with the spectral sum") {
  const FiniteField& F = fq(11);
  EvalCtx c(F);
  for (std::int64_t a : {1, 3, 5})
    for (std::int64_t b : {0, 2, 7})
      for (std::uint32_t x : {0u, 1u, 4u, 9u}) {
        auto spec = HGSpec::make({MultChar::of(F, 2), MultChar::of(F, a)}, {MultChar::of(F, b)});
        CHECK(c.P2(2, a, b, x) == period_spectral(spec, F.elem(x)));
        CHECK(c.F2(2, a, b, x) == f_normalized(spec, F.elem(x)));
      }
}

TEST_CASE("evaluation context element arithmetic") {
  const FiniteField& F = fq(9);
  EvalCtx c(F);
  CHECK(c.add(c.k(1), c.k(2)) == 0);
  CHECK(c.div(c.k(1), 0) == EvalCtx::kInf);
  CHECK(c.add(EvalCtx::kInf, 1) == EvalCtx::kInf);
  CHECK(c.roots(c.k(1), 2).size() == 2);
  CHECK(c.roots(0, 3).size() == 1);
  CHECK(c.quad(0) == 0);
  CHECK(c.quad(c.k(2)) == 1);  // -1 is a square in F_9
}

TEST_CASE("gauss evaluation sweeps every character triple") {
  auto r = verify("gauss-eval", fq(7));
  CHECK(r.status == VerifyStatus::pass);
  CHECK(r.tuples_checked == 216);
  CHECK(r.failure_count == 0);
}

TEST_CASE("quadratic transformation of 2F1 passes on F_13") {
  auto r = verify("quad-2F1", fq(13));
  CHECK(r.status == VerifyStatus::pass);
  CHECK(r.tuples_checked > 0);
}

TEST_CASE("stanton involution passes for every z in F_9") {
  auto r = verify("stanton-involution", fq(9));
  CHECK(r.status == VerifyStatus::pass);
  CHECK(r.tuples_checked == 9);
}

TEST_CASE("unit ratio and isogeny trace hold on every field q = 1 mod 12 in the sweep") {
  for (int q : {13, 25, 37}) {
    CAPTURE(q);
    CHECK(verify("r-eta-unit", fq(q)).status == VerifyStatus::pass);
    auto r = verify("isogeny-trace", fq(q));
    CHECK(r.status == VerifyStatus::pass);
    CHECK(r.tuples_checked > 0);
  }
}

TEST_CASE("field lookup by order") {
  CHECK(fq(49).p() == 7);
  CHECK(fq(49).e() == 2);
  CHECK(error_code([] { fq(12); }) == Errc::NotPrime);
}

TEST_CASE("identity on a field outside its congruence is inapplicable") {
  auto r = verify("r-eta-unit", fq(7));
  CHECK(r.status == VerifyStatus::inapplicable);
  CHECK(r.tuples_checked == 0);
}

TEST_CASE("every theorem passes on its default fields") {
  for (const auto& rec : identity_registry()) {
    if (rec.status != IdentityStatus::theorem) continue;
    // the slowest entries are covered by the acceptance sweep
    if (rec.id == "deg24-234") continue;
    for (auto q : rec.default_q) {
      if (q > 37) continue;
      CAPTURE(rec.id);
      CAPTURE(q);
      auto r = verify(rec.id, fq(q));
      CHECK(r.status == VerifyStatus::pass);
      CHECK(r.tuples_checked > 0);
    }
  }
}

TEST_CASE("delta terms are necessary and supported exactly where predicted") {
  SUBCASE("quad-2F1 at x = 1 and x = -1") {
    const FiniteField& F = fq(13);
    auto a = delta_audit("quad-2F1", F);
    CHECK(a.has_delta);
    CHECK(a.exact_support);
    CHECK(!a.failures.empty());
    CHECK(a.failing_args == sorted({arg_of(F, 1), arg_of(F, -1)}));
  }
  SUBCASE("gs-cubic at x = 1 and x = 1/3") {
    const FiniteField& F = fq(13);
    auto a = delta_audit("gs-cubic", F);
    CHECK(a.exact_support);
    CHECK(a.failing_args == sorted({arg_of(F, 1), arg_of(F, 1, 3)}));
  }
  SUBCASE("bailey-cubic-1 at x = 1 and x = -2") {
    const FiniteField& F = fq(13);
    auto a = delta_audit("bailey-cubic-1", F);
    CHECK(a.exact_support);
    CHECK(a.failing_args == sorted({arg_of(F, 1), arg_of(F, -2)}));
  }
  SUBCASE("identity without delta terms gives an empty diff") {
    auto a = delta_audit("gauss-eval", fq(7));
    CHECK(!a.has_delta);
    CHECK(a.failures.empty());
    CHECK(a.failing_args.empty());
  }
}

TEST_CASE("dropping one stated exclusion produces counterexamples") {
  const FiniteField& F = fq(13);
  for (const char* id : {"quad-2F1", "clausen", "bailey-cubic-1"}) {
    const auto& rec = find_identity(id);
    REQUIRE(rec.exclusions > 0);
    for (int i = 0; i < rec.exclusions; ++i) {
      CAPTURE(id);
      CAPTURE(i);
      RunOptions o;
      o.eval.relax = i;
      auto r = verify(id, F, {}, o);
      CHECK(r.status == VerifyStatus::fail);
      CHECK(r.failure_count > 0);
      CHECK(!r.failures.empty());
    }
  }
}

TEST_CASE("sampling is deterministic and independent of the worker count") {
  auto mode = VerifyMode::sample(300, 7);
  RunOptions one, four;
  one.workers = 1;
  four.workers = 4;
  auto a = verify("quad-2F1", fq(25), mode, one);
  auto b = verify("quad-2F1", fq(25), mode, four);
  auto c = verify("quad-2F1", fq(25), mode, one);
  CHECK(a.tuples_checked == 300);
  CHECK(a.status == VerifyStatus::pass);
  CHECK(a.tuples_checked == b.tuples_checked);
  CHECK(a.tuples_checked == c.tuples_checked);
  CHECK(a.mode == "sample:300:7");

  RunOptions relaxed1 = one, relaxed4 = four;
  relaxed1.eval.relax = relaxed4.eval.relax = 0;
  auto f1 = verify("quad-2F1", fq(13), {}, relaxed1);
  auto f4 = verify("quad-2F1", fq(13), {}, relaxed4);
  REQUIRE(f1.failures.size() == f4.failures.size());
  for (std::size_t i = 0; i < f1.failures.size(); ++i) {
    CHECK(f1.failures[i].assignment == f4.failures[i].assignment);
    CHECK(f1.failures[i].lhs == f4.failures[i].lhs);
  }
}

TEST_CASE("conjecture entries report observations, never failures") {
  auto r = verify("cohen-4F3", fq(13));
  CHECK(r.kind == IdentityStatus::conjecture);
  CHECK(r.status == VerifyStatus::observed);
  CHECK(r.tuples_checked > 0);
}

TEST_CASE("verify_all over an empty field list is empty") {
  CHECK(verify_all({}).empty());
  auto all = verify_all({&fq(5)});
  auto applicable = std::count_if(identity_registry().begin(), identity_registry().end(),
                                  [](const IdentityRecord& r) { return r.applies(fq(5)); });
  CHECK(all.size() == static_cast<std::size_t>(applicable));
  for (const auto& r : all) CHECK(r.status != VerifyStatus::fail);
}
