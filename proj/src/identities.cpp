#include "hgff/identities.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace hgff {

// ---------------------------------------------------------------- EvalCtx

EvalCtx::EvalCtx(const FiniteField& field)
    : F(field),
      L(static_cast<std::int64_t>(field.units())),
      phi(field.p() == 2 ? 0 : static_cast<std::int64_t>(field.units() / 2)),
      q(field.q()),
      gj_(&GaussJacobiCache::of(field)) {}

std::int64_t EvalCtx::e(std::int64_t m) const {
  m %= L;
  return m < 0 ? m + L : m;
}

std::uint64_t EvalCtx::order(std::int64_t m) const {
  return static_cast<std::uint64_t>(L / std::gcd(e(m), L));
}

CycloNum EvalCtx::v(std::int64_t m, std::uint32_t x) const {
  if (x == kInf) throw Error(Errc::DivisionByZero, "character evaluated at infinity");
  if (x == 0) return CycloNum();
  return CycloNum::root(static_cast<unsigned>(L), e(e(m) * F.log(x)));
}

int EvalCtx::s(std::int64_t m) const {
  if (F.p() == 2) return 1;
  return e(m) % 2 == 0 ? 1 : -1;
}

CycloNum EvalCtx::J(std::int64_t a, std::int64_t b) { return gj_->jacobi(e(a), e(b)); }
CycloNum EvalCtx::g(std::int64_t m) { return gj_->gauss(e(m)); }

CycloNum EvalCtx::P2(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::uint32_t x) {
  return Pn({a1, a2}, {b1}, x);
}

CycloNum EvalCtx::F2(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::uint32_t x) {
  return Fn({a1, a2}, {b1}, x);
}

CycloNum EvalCtx::Pn(const std::vector<std::int64_t>& upper, const std::vector<std::int64_t>& lower,
                     std::uint32_t x) {
  if (x == kInf) throw Error(Errc::DivisionByZero, "hypergeometric argument at infinity");
  std::vector<std::int64_t> up, lo;
  for (auto a : upper) up.push_back(e(a));
  for (auto b : lower) lo.push_back(e(b));
  return period_direct_raw(F, up, lo, x, static_cast<std::uint64_t>(L));
}

CycloNum EvalCtx::Fn(const std::vector<std::int64_t>& upper, const std::vector<std::int64_t>& lower,
                     std::uint32_t x) {
  CycloNum norm(1);
  for (std::size_t i = 0; i < lower.size(); ++i) norm *= J(upper[i + 1], lower[i] - upper[i + 1]);
  return Pn(upper, lower, x) / norm;
}

std::uint32_t EvalCtx::add(std::uint32_t a, std::uint32_t b) const {
  return a == kInf || b == kInf ? kInf : F.add(a, b);
}
std::uint32_t EvalCtx::sub(std::uint32_t a, std::uint32_t b) const {
  return a == kInf || b == kInf ? kInf : F.sub(a, b);
}
std::uint32_t EvalCtx::mul(std::uint32_t a, std::uint32_t b) const {
  return a == kInf || b == kInf ? kInf : F.mul(a, b);
}
std::uint32_t EvalCtx::div(std::uint32_t a, std::uint32_t b) const {
  return a == kInf || b == kInf || b == 0 ? kInf : F.div(a, b);
}
std::uint32_t EvalCtx::pw(std::uint32_t a, unsigned n) const { return a == kInf ? kInf : F.pow(a, n); }

std::vector<std::uint32_t> EvalCtx::roots(std::uint32_t a, unsigned n) const {
  std::vector<std::uint32_t> out;
  if (a == kInf) return out;
  if (a == 0) return {0};
  for (std::uint32_t x = 1; x < q; ++x)
    if (F.pow(x, n) == a) out.push_back(x);
  return out;
}

int EvalCtx::quad(std::uint32_t x) const {
  if (x == kInf) throw Error(Errc::DivisionByZero, "character evaluated at infinity");
  if (x == 0) return 0;
  return F.log(x) % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- statuses

std::string to_string(IdentityStatus s) { return s == IdentityStatus::theorem ? "theorem" : "conjecture"; }

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::observed: return "observed";
    case VerifyStatus::refuted: return "refuted";
    case VerifyStatus::inapplicable: return "inapplicable";
  }
  return "?";
}

VerifyMode VerifyMode::parse(const std::string& s) {
  if (s == "exhaustive") return {};
  if (s.rfind("sample:", 0) == 0) {
    auto rest = s.substr(7);
    auto colon = rest.find(':');
    try {
      std::size_t used = 0;
      if (colon == std::string::npos) {
        auto n = std::stoull(rest, &used);
        if (used == rest.size() && n > 0) return sample(n, 0);
      } else {
        auto ns = rest.substr(0, colon), ss = rest.substr(colon + 1);
        auto n = std::stoull(ns, &used);
        if (used == ns.size() && n > 0) {
          auto seed = std::stoull(ss, &used);
          if (used == ss.size()) return sample(n, seed);
        }
      }
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::InvalidArgument, "mode must be exhaustive or sample:N:SEED, got '" + s + "'");
}

std::string VerifyMode::str() const {
  if (exhaustive) return "exhaustive";
  return "sample:" + std::to_string(samples) + ":" + std::to_string(seed);
}

// ---------------------------------------------------------------- registry

namespace {

using Tuple = std::vector<std::int64_t>;
using Out = std::vector<Sides>;
using U = std::uint32_t;
constexpr U kInf = EvalCtx::kInf;

bool ex(const EvalOptions& o, int idx, bool cond) { return cond && o.relax != idx; }

// d * f(), or 0 when delta terms are stripped
template <class Fn>
CycloNum dterm(const EvalOptions& o, long d, Fn&& f) {
  if (o.strip_delta || d == 0) return CycloNum();
  return CycloNum(d) * f();
}

// pre * f(), skipping f when pre vanishes
template <class Fn>
CycloNum guarded(const CycloNum& pre, Fn&& f) {
  if (pre.is_zero()) return pre;
  return pre * f();
}

CycloNum half(long n) { return CycloNum(n).scaled(mpq_class(1, 2)); }

std::vector<std::int64_t> range_values(std::uint64_t n) {
  std::vector<std::int64_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Slot chars(const std::string& name) {
  return {name, SlotKind::character, [](const FiniteField& F) { return range_values(F.units()); }};
}

Slot chars_of_order(const std::string& name, std::uint64_t N) {
  return {name, SlotKind::character, [N](const FiniteField& F) {
            std::vector<std::int64_t> v;
            const auto L = static_cast<std::int64_t>(F.units());
            for (std::int64_t m = 0; m < L; ++m)
              if (static_cast<std::uint64_t>(L / std::gcd(m, L)) == N) v.push_back(m);
            return v;
          }};
}

Slot elems(const std::string& name) {
  return {name, SlotKind::element, [](const FiniteField& F) { return range_values(F.q()); }};
}

// roots in F_q of x^n = c
Slot elem_roots(const std::string& name, std::int64_t c, unsigned n) {
  return {name, SlotKind::element, [c, n](const FiniteField& F) {
            std::vector<std::int64_t> v;
            const U target = F.int_code(c);
            for (U x = 0; x < F.q(); ++x)
              if (F.pow(x, n) == target) v.push_back(x);
            return v;
          }};
}

Slot ints(const std::string& name, std::vector<std::int64_t> vals) {
  return {name, SlotKind::integer, [vals](const FiniteField&) { return vals; }};
}

bool odd_q(const FiniteField& F) { return F.p() != 2; }
auto q_mod(std::uint64_t m, std::uint64_t r) {
  return [m, r](const FiniteField& F) { return F.q() % m == r; };
}
auto p_mod(std::uint64_t m, std::uint64_t r) {
  return [m, r](const FiniteField& F) { return F.e() == 1 && F.q() % m == r; };
}
bool any_q(const FiniteField&) { return true; }
auto at_least(std::uint64_t n) {
  return [n](const FiniteField& F) { return F.q() >= n; };
}
auto odd_from(std::uint64_t n) {
  return [n](const FiniteField& F) { return F.p() != 2 && F.q() >= n; };
}
template <class P1, class P2>
auto both(P1 a, P2 b) {
  return [a, b](const FiniteField& F) { return a(F) && b(F); };
}
bool has_root(const FiniteField& F, std::int64_t c, unsigned n) {
  const U target = F.int_code(c);
  for (U x = 0; x < F.q(); ++x)
    if (F.pow(x, n) == target) return true;
  return false;
}
// x^3 + 3 and x^2 + 2 both split off a root
bool has_tuyang_roots(const FiniteField& F) { return has_root(F, -3, 3) && has_root(F, -2, 2); }

Out one(CycloNum lhs, CycloNum rhs) {
  Out o;
  o.push_back({std::move(lhs), std::move(rhs)});
  return o;
}

// ---- Kummer relations for the period function

Out kummer_ind(EvalCtx& c, const Tuple& t, const EvalOptions& o, int which) {
  auto a = t[0], b = t[1], C = t[2];
  U x = static_cast<U>(t[3]);
  CycloNum lhs = c.P2(a, b, C, x);
  CycloNum dt = dterm(o, c.del(x), [&] { return c.J(b, C - b); });
  const int sg = c.s(a + b + C);
  switch (which) {
    case 1: return one(lhs, sg * guarded(c.v(-C, x), [&] { return c.P2(b - C, a - C, -C, x); }) + dt);
    case 2:
      return one(lhs, sg * guarded(c.v(-a, x), [&] { return c.P2(a, a - C, a - b, c.div(1, x)); }) + dt);
    default: return one(lhs, c.s(b) * c.P2(a, b, a + b - C, c.sub(1, x)));
  }
}

Out pfaff_euler(EvalCtx& c, const Tuple& t, const EvalOptions& o, int which) {
  auto a = t[0], b = t[1], C = t[2];
  U x = static_cast<U>(t[3]);
  U omx = c.sub(1, x);
  U y = c.div(x, c.sub(x, 1));
  CycloNum lhs = c.P2(a, b, C, x);
  CycloNum dt = dterm(o, c.del(omx), [&] { return c.J(b, C - a - b); });
  switch (which) {
    case 1: return one(lhs, guarded(c.v(-a, omx), [&] { return c.P2(a, C - b, C, y); }) + dt);
    case 2: return one(lhs, guarded(c.v(-b, omx), [&] { return c.P2(C - a, b, C, y); }) + dt);
    default: return one(lhs, c.v(C - a - b, omx) * c.P2(C - a, C - b, C, x) + dt);
  }
}

Out kummer_normalized(EvalCtx& c, const Tuple& t, const EvalOptions& o, int which) {
  auto a = t[0], b = t[1], C = t[2];
  U x = static_cast<U>(t[3]);
  U omx = c.sub(1, x);
  U y = c.div(x, c.sub(x, 1));
  CycloNum N = c.J(b, C - b);
  CycloNum lhs = c.F2(a, b, C, x);
  const int sg = c.s(a + b + C);
  CycloNum d1 = dterm(o, c.del(omx), [&] { return c.J(b, C - a - b) / N; });
  switch (which) {
    case 1:
      return one(lhs, sg * guarded(c.v(-C, x), [&] { return c.J(a - C, -a) / N * c.F2(b - C, a - C, -C, x); }) +
                          dterm(o, c.del(x), [] { return CycloNum(1); }));
    case 2:
      return one(lhs, sg * guarded(c.v(-a, x),
                                   [&] { return c.J(a - C, C - b) / N * c.F2(a, a - C, a - b, c.div(1, x)); }) +
                          dterm(o, c.del(x), [] { return CycloNum(1); }));
    case 3: return one(lhs, c.J(b, C - a - b) / N * c.F2(a, b, a + b - C, omx));
    case 4: return one(lhs, guarded(c.v(-a, omx), [&] { return c.F2(a, C - b, C, y); }) + d1);
    case 5: return one(lhs, guarded(c.v(-b, omx), [&] { return c.F2(C - a, b, C, y); }) + d1);
    default: return one(lhs, c.v(C - a - b, omx) * c.F2(C - a, C - b, C, x) + d1);
  }
}

// ---- quadratic Pfaff-Saalschutz sums

// sum over chi of g(A chi^2) g(B chi) g(C conj chi) g(phi conj(ABC chi)) g(conj chi) conj chi(-4)
CycloNum quad_ps_sum(EvalCtx& c, std::int64_t a, std::int64_t b, std::int64_t C) {
  CycloNum s;
  const U m4 = c.k(-4);
  for (std::int64_t x = 0; x < c.L; ++x)
    s += c.g(a + 2 * x) * c.g(b + x) * c.g(C - x) * c.g(c.phi - a - b - C - x) * c.g(-x) * c.v(-x, m4);
  return s;
}

// sum over chi^3 = conj(A)^3 of g(conj chi) g(phi conj(B chi)) g(B conj(A^3 chi)) / (g(phi conj B) g(conj(A^3) B) g(A^3)) conj chi(u)
CycloNum bailey_sum(EvalCtx& c, std::int64_t a, std::int64_t b, U u) {
  CycloNum s;
  const std::int64_t third = c.L / 3;
  CycloNum den = c.g(c.phi - b) * c.g(b - 3 * a) * c.g(3 * a);
  for (int j = 0; j < 3; ++j) {
    std::int64_t x = -a + j * third;
    s += c.g(-x) * c.g(c.phi - b - x) * c.g(b - 3 * a - x) * c.v(-x, u);
  }
  return s / den;
}

bool bailey_excluded(EvalCtx& c, const EvalOptions& o, std::int64_t a, std::int64_t b) {
  const auto h = c.phi;
  return ex(o, 0, c.triv(3 * a)) || ex(o, 1, c.triv(b)) || ex(o, 2, c.triv(3 * a - 2 * b)) ||
         ex(o, 3, c.triv(6 * a - 3 * b)) || ex(o, 4, c.triv(h + 3 * a - b)) || ex(o, 5, c.triv(h + 3 * a - 3 * b));
}

// (1 + phi(w))/2 * (chi(f(r)) + chi(f(-r))) with r^2 = w
template <class Fn>
CycloNum dihedral_rhs(EvalCtx& c, U w, Fn&& term) {
  auto rs = c.roots(w, 2);
  if (rs.empty()) return CycloNum();
  U r = rs.front();
  return half(1 + c.quad(w)) * (term(r) + term(c.sub(0, r)));
}

// f not in {0, 1, infinity}
bool generic(U f) { return f != kInf && f != 0 && f != 1; }

std::vector<IdentityRecord> build_registry() {
  std::vector<IdentityRecord> R;
  auto add = [&](IdentityRecord r) { R.push_back(std::move(r)); };
  using IS = IdentityStatus;

  // Kummer relations, unnormalized
  const char* ind_sum[] = {"", "reflection through the lower character, same argument",
                           "inversion of the argument", "argument 1 - x with the Euler lower parameter"};
  for (int w = 1; w <= 3; ++w)
    add({.id = "kummer24-ind-" + std::to_string(w),
         .status = IS::theorem,
         .summary = std::string("Kummer relation for the period function: ") + ind_sum[w],
         .requirement = "any q",
         .applies = any_q,
         .slots = {chars("A"), chars("B"), chars("C"), elems("x")},
         .arg_slot = 3,
         .has_delta = w != 3,
         .eval = [w](EvalCtx& c, const Tuple& t, const EvalOptions& o) { return kummer_ind(c, t, o, w); }});
  const char* pe_sum[] = {"", "Pfaff form moving the first upper character",
                          "Pfaff form moving the second upper character", "Euler form at the same argument"};
  for (int w = 1; w <= 3; ++w)
    add({.id = "pfaff-euler-" + std::to_string(w),
         .status = IS::theorem,
         .summary = std::string("Pfaff and Euler transformation of the period function: ") + pe_sum[w],
         .requirement = "any q",
         .applies = any_q,
         .slots = {chars("A"), chars("B"), chars("C"), elems("x")},
         .arg_slot = 3,
         .has_delta = true,
         .eval = [w](EvalCtx& c, const Tuple& t, const EvalOptions& o) { return pfaff_euler(c, t, o, w); }});
  for (int w = 1; w <= 6; ++w)
    add({.id = "normalized-" + std::to_string(w),
         .status = IS::theorem,
         .summary = "Kummer relation for the normalized function, form " + std::to_string(w),
         .requirement = "any q",
         .applies = any_q,
         .slots = {chars("A"), chars("B"), chars("C"), elems("x")},
         .arg_slot = 3,
         .has_delta = w != 3,
         .eval = [w](EvalCtx& c, const Tuple& t, const EvalOptions& o) { return kummer_normalized(c, t, o, w); }});

  add({.id = "helversen-pasotto",
       .status = IS::theorem,
       .summary = "Helversen-Pasotto evaluation of a character average of four Gauss sums",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), chars("C"), chars("D")},
       .has_delta = true,
       .default_q = {5, 7, 9},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) {
         auto a = t[0], b = t[1], C = t[2], d = t[3];
         CycloNum s;
         for (std::int64_t x = 0; x < c.L; ++x) s += c.g(a + x) * c.g(b + x) * c.g(C - x) * c.g(d - x);
         s = s.scaled(mpq_class(1, c.L));
         CycloNum rhs = c.g(a + C) * c.g(a + d) * c.g(b + C) * c.g(b + d) / c.g(a + b + C + d) +
                        dterm(o, c.triv(a + b + C + d), [&] { return CycloNum(long(c.q * c.L) * c.s(a + b)); });
         return one(s, rhs);
       }});

  // imprimitive evaluations
  add({.id = "imprimitive-P-1",
       .status = IS::theorem,
       .summary = "period function with trivial first upper character",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("B"), chars("C"), elems("x")},
       .arg_slot = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto b = t[0], C = t[1];
         U x = static_cast<U>(t[2]);
         if (x == 0) return {};
         return one(c.P2(0, b, C, x), c.J(b, C - b) - c.v(-C, x) * c.v(C - b, c.sub(x, 1)));
       }});
  add({.id = "imprimitive-P-2",
       .status = IS::theorem,
       .summary = "period function with equal second upper and lower characters",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), elems("x")},
       .arg_slot = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto a = t[0], b = t[1];
         U x = static_cast<U>(t[2]);
         if (x == 0) return {};
         return one(c.P2(a, b, b, x), c.v(-b, x) * c.J(b, -a) - c.v(-a, c.sub(1, x)));
       }});
  add({.id = "imprimitive-P-3",
       .status = IS::theorem,
       .summary = "period function with equal first upper and lower characters",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), elems("x")},
       .arg_slot = 2,
       .has_delta = true,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         U x = static_cast<U>(t[2]);
         if (x == 0) return {};
         return one(c.P2(a, b, a, x), c.v(-b, c.sub(x, 1)) * c.J(b, -a) - c.s(b) * c.v(-a, x) +
                                          dterm(o, c.del(c.sub(1, x)) * c.triv(b), [&] { return CycloNum(c.L); }));
       }});
  add({.id = "imprimitive-P-4",
       .status = IS::theorem,
       .summary = "period function with trivial second upper character",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("C"), elems("x")},
       .arg_slot = 2,
       .has_delta = true,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], C = t[1];
         U x = static_cast<U>(t[2]);
         if (x == 0) return {};
         return one(c.P2(a, 0, C, x), c.v(-C, c.sub(0, x)) * c.v(C - a, c.sub(1, x)) * c.J(C, -a) - 1 +
                                          dterm(o, c.del(c.sub(1, x)) * c.triv(C - a), [&] { return CycloNum(c.L); }));
       }});
  add({.id = "imprimitive-F-1",
       .status = IS::theorem,
       .summary = "normalized function with trivial first upper character",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("B"), chars("C"), elems("x")},
       .arg_slot = 2,
       .exclusions = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto b = t[0], C = t[1];
         U x = static_cast<U>(t[2]);
         if (x == 0 || ex(o, 0, c.triv(b)) || ex(o, 1, c.triv(C))) return {};
         return one(c.F2(0, b, C, x), 1 - c.v(-C, x) * c.v(C - b, c.sub(x, 1)) / c.J(b, C - b));
       }});
  add({.id = "imprimitive-F-2",
       .status = IS::theorem,
       .summary = "normalized function with equal second upper and lower characters",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), elems("x")},
       .arg_slot = 2,
       .exclusions = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         U x = static_cast<U>(t[2]);
         if (x == 0 || ex(o, 0, c.triv(a)) || ex(o, 1, c.triv(b))) return {};
         return one(c.F2(a, b, b, x), c.v(-a, c.sub(1, x)) - c.v(-b, x) * c.J(b, -a));
       }});
  add({.id = "imprimitive-F-3",
       .status = IS::theorem,
       .summary = "normalized function with equal first upper and lower characters",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), elems("x")},
       .arg_slot = 2,
       .exclusions = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         U x = static_cast<U>(t[2]);
         if (x == 0 || ex(o, 0, c.triv(a)) || ex(o, 1, c.triv(b))) return {};
         return one(c.F2(a, b, a, x), c.v(-b, c.sub(1, x)) - c.v(-a, x) / c.J(-a, b));
       }});
  add({.id = "imprimitive-F-4",
       .status = IS::theorem,
       .summary = "normalized function with trivial second upper character",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("C"), elems("x")},
       .arg_slot = 2,
       .has_delta = true,
       .exclusions = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], C = t[1];
         U x = static_cast<U>(t[2]);
         if (x == 0 || ex(o, 0, c.triv(a)) || ex(o, 1, c.triv(C))) return {};
         return one(c.F2(a, 0, C, x), 1 - c.v(-C, c.sub(0, x)) * c.v(C - a, c.sub(1, x)) * c.J(C, -a) -
                                          dterm(o, c.del(c.sub(1, x)) * c.triv(C - a), [&] { return CycloNum(c.L); }));
       }});

  add({.id = "commute-conjugate-1",
       .status = IS::theorem,
       .summary = "swapping the two upper characters",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), chars("C"), elems("x")},
       .arg_slot = 3,
       .exclusions = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1], C = t[2];
         U x = static_cast<U>(t[3]);
         if (ex(o, 0, c.triv(a) || c.triv(b)) || ex(o, 1, c.e(a) == c.e(C) || c.e(b) == c.e(C))) return {};
         Out out = one(c.J(a, C - a) * c.P2(a, b, C, x), c.J(b, C - b) * c.P2(b, a, C, x));
         out.push_back({c.F2(a, b, C, x), c.F2(b, a, C, x)});
         return out;
       }});
  add({.id = "commute-conjugate-2",
       .status = IS::theorem,
       .summary = "conjugating all characters",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), chars("C"), elems("x")},
       .arg_slot = 3,
       .exclusions = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1], C = t[2];
         U x = static_cast<U>(t[3]);
         if (x == 0 || x == 1) return {};
         if (ex(o, 0, c.triv(a) || c.triv(b)) || ex(o, 1, c.e(a) == c.e(C) || c.e(b) == c.e(C))) return {};
         CycloNum pre = c.v(-C, x) * c.v(C - a - b, c.sub(x, 1));
         Out out = one(c.P2(a, b, C, x), pre * c.J(b, C - b) / c.J(a, C - a) * c.P2(-a, -b, -C, x));
         out.push_back({c.F2(a, b, C, x), pre * c.J(-b, b - C) / c.J(a, C - a) * c.F2(-a, -b, -C, x)});
         return out;
       }});
  add({.id = "continuation-2x",
       .status = IS::theorem,
       .summary = "analytic continuation to the inverted argument as a sum of two solutions",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), chars("C"), elems("x")},
       .arg_slot = 3,
       .exclusions = 2,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1], C = t[2];
         U x = static_cast<U>(t[3]);
         if (x == 0) return {};
         if (ex(o, 0, c.triv(a) || c.triv(b)) || ex(o, 1, c.e(a) == c.e(C) || c.e(b) == c.e(C))) return {};
         U ix = c.div(1, x);
         const int sg = c.s(a + b + C);
         Out out = one(2 * c.P2(a, b, C, x),
                       sg * c.v(-a, x) * c.P2(a, a - C, a - b, ix) +
                           sg * c.v(-b, x) * c.J(b, C - b) / c.J(a, C - a) * c.P2(b, b - C, b - a, ix));
         out.push_back({2 * c.F2(a, b, C, x),
                        sg * c.v(-a, x) * c.J(a - C, C - b) / c.J(b, C - b) * c.F2(a, a - C, a - b, ix) +
                            sg * c.v(-b, x) * c.J(C - a, b - C) / c.J(a, C - a) * c.F2(b, b - C, b - a, ix)});
         return out;
       }});

  // evaluations at 1 and -1
  add({.id = "gauss-eval",
       .status = IS::theorem,
       .summary = "Gauss evaluation of the period function at 1",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), chars("C")},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) {
         return one(c.P2(t[0], t[1], t[2], 1), c.J(t[1], t[2] - t[0] - t[1]));
       }});
  add({.id = "kummer-eval-P",
       .status = IS::theorem,
       .summary = "Kummer evaluation of the period function at -1",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("B"), chars("D")},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) {
         auto b = t[0], d = t[1], C = 2 * t[1];
         return one(c.P2(b, C, C - b, c.k(-1)), c.J(d, -b) + c.J(d + c.phi, -b));
       }});
  add({.id = "kummer-eval-F",
       .status = IS::theorem,
       .summary = "Kummer evaluation of the normalized function at -1",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("B"), chars("D")},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) {
         auto b = t[0], d = t[1], C = 2 * t[1];
         return one(c.F2(b, C, C - b, c.k(-1)), (c.J(d, -b) + c.J(-b, d + c.phi)) / c.J(C, -b));
       }});

  add({.id = "pfaff-saalschutz-P",
       .status = IS::theorem,
       .summary = "Pfaff-Saalschutz evaluation of a balanced 3P2 at 1",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), chars("C"), chars("D")},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) {
         auto a = t[0], b = t[1], C = t[2], d = t[3];
         return one(c.Pn({a, b, C}, {d, a + b + C - d}, 1),
                    c.s(b) * c.J(C, a - d) * c.J(b, C - d) - c.s(b + d) * c.J(d - b, -a));
       }});
  add({.id = "pfaff-saalschutz-J",
       .status = IS::theorem,
       .summary = "Pfaff-Saalschutz as a character average of three Jacobi sums",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), chars("B"), chars("C"), chars("D")},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) {
         auto a = t[0], b = t[1], C = t[2], d = t[3];
         CycloNum s;
         for (std::int64_t x = 0; x < c.L; ++x)
           s += c.s(C + x) * c.J(a + x, -x) * c.J(b + x, -d - x) * c.J(C + x, d - a - b - C - x);
         return one(s.scaled(mpq_class(1, c.L)), c.J(C, a - d) * c.J(b, C - d) - c.s(d) * c.J(d - b, -a));
       }});

  add({.id = "quad-pfaff-saalschutz-1",
       .status = IS::theorem,
       .summary = "quadratic Pfaff-Saalschutz sum, generic case",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("A"), chars("B"), chars("C")},
       .exclusions = 3,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1], C = t[2];
         const auto h = c.phi;
         if (ex(o, 0, c.triv(a) && c.triv(b) && c.triv(C)) || ex(o, 1, c.e(C + a) == h) ||
             ex(o, 2, c.e(C + b) == h))
           return {};
         CycloNum pre = c.s(a + b) * c.v(C, c.k(4)) * c.J(h + a + C, -a - b - 2 * C) / c.g(h);
         CycloNum lhs = (pre * quad_ps_sum(c, a, b, C)).scaled(mpq_class(1, c.q * c.L));
         CycloNum rhs = c.J(-a - b - 2 * C, a + 2 * C) * c.J(a, 2 * b + 2 * C) -
                        c.J(-a - b - 2 * C, h + a + C) * c.v(a + 2 * C, c.k(2));
         return one(lhs, rhs);
       }});
  add({.id = "quad-pfaff-saalschutz-2",
       .status = IS::theorem,
       .summary = "quadratic Pfaff-Saalschutz sum when CB is quadratic",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("A"), chars("B")},
       .has_delta = true,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) {
         auto a = t[0], b = t[1];
         const auto h = c.phi;
         const long q = static_cast<long>(c.q);
         CycloNum lhs = (quad_ps_sum(c, a, b, h - b) / c.g(h)).scaled(mpq_class(1, c.L));
         CycloNum rhs = q * c.v(b, c.k(4)) * c.s(a + b) * c.J(b, b - a) - q * c.s(a + b) * c.v(a, c.k(2)) -
                        dterm(o, c.triv(a), [&] { return c.L * c.s(b) * c.J(b, h); });
         return one(lhs, rhs);
       }});
  add({.id = "quad-pfaff-saalschutz-3",
       .status = IS::theorem,
       .summary = "quadratic Pfaff-Saalschutz sum when CA is quadratic",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("A"), chars("B")},
       .has_delta = true,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) {
         auto a = t[0], b = t[1];
         const auto h = c.phi;
         const long q = static_cast<long>(c.q);
         CycloNum lhs = (quad_ps_sum(c, a, b, h - a) / c.g(h)).scaled(mpq_class(1, c.L));
         CycloNum rhs = -c.v(b, c.k(4)) * c.J(h, b) * c.J(a - 2 * b, h + b - a) - q * c.s(a + b) * c.v(a, c.k(2)) +
                        dterm(o, c.triv(a), [&] { return CycloNum(q * c.L * c.s(b)); }) -
                        dterm(o, c.triv(h + b), [&] { return CycloNum(c.L * c.s(a + b)); });
         return one(lhs, rhs);
       }});

  // dihedral evaluations
  add({.id = "dihedral-1",
       .status = IS::theorem,
       .summary = "dihedral evaluation with quadratic lower character",
       .requirement = "q odd, q >= 5",
       .applies = odd_from(5),
       .slots = {chars("A"), elems("z")},
       .arg_slot = 1,
       .exclusions = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0];
         U z = static_cast<U>(t[1]);
         if (z == 0 || ex(o, 0, c.triv(2 * a))) return {};
         return one(c.F2(a, a + c.phi, c.phi, z),
                    dihedral_rhs(c, z, [&](U r) { return c.v(-2 * a, c.add(1, r)); }));
       }});
  add({.id = "dihedral-2",
       .status = IS::theorem,
       .summary = "dihedral evaluation with lower character A squared",
       .requirement = "q odd, q >= 5",
       .applies = odd_from(5),
       .slots = {chars("A"), elems("z")},
       .arg_slot = 1,
       .exclusions = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0];
         U z = static_cast<U>(t[1]);
         if (z == 0 || ex(o, 0, c.triv(2 * a))) return {};
         const U half2 = c.div(1, c.k(2));
         return one(c.F2(a, a + c.phi, 2 * a, z), dihedral_rhs(c, c.sub(1, z), [&](U r) {
                      return c.v(-2 * a, c.mul(c.add(1, r), half2));
                    }));
       }});

  auto product_excluded = [](EvalCtx& c, const EvalOptions& o, std::int64_t a, std::int64_t b) {
    return ex(o, 0, c.triv(2 * a)) || ex(o, 1, c.triv(2 * b)) || ex(o, 2, c.triv(2 * (a + b))) ||
           ex(o, 3, c.triv(2 * (a - b)));
  };
  add({.id = "product-2F1-1",
       .status = IS::theorem,
       .summary = "product of two dihedral functions with lower characters A^2 and B^2",
       .requirement = "q odd, q >= 9",
       .applies = odd_from(9),
       .slots = {chars("A"), chars("B"), elems("z")},
       .arg_slot = 2,
       .has_delta = true,
       .exclusions = 4,
       .eval = [product_excluded](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         U z = static_cast<U>(t[2]);
         if (product_excluded(c, o, a, b)) return {};
         const auto h = c.phi;
         CycloNum lhs = c.F2(a, a + h, 2 * a, z) * c.F2(b, b + h, 2 * b, z);
         CycloNum rhs = c.F2(a + b, a + b + h, 2 * (a + b), z) +
                        c.v(-2 * b, c.div(z, c.k(4))) * c.F2(a - b, a - b + h, 2 * (a - b), z) -
                        dterm(o, c.del(c.sub(1, z)), [&] { return c.v(a + b, c.k(4)); });
         return one(lhs, rhs);
       }});
  add({.id = "product-2F1-2",
       .status = IS::theorem,
       .summary = "product of two dihedral functions with quadratic lower character",
       .requirement = "q odd, q >= 9",
       .applies = odd_from(9),
       .slots = {chars("A"), chars("B"), elems("z")},
       .arg_slot = 2,
       .has_delta = true,
       .exclusions = 4,
       .eval = [product_excluded](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         U z = static_cast<U>(t[2]);
         if (product_excluded(c, o, a, b)) return {};
         const auto h = c.phi;
         CycloNum lhs = c.F2(a, a + h, h, z) * c.F2(b, b + h, h, z);
         CycloNum rhs = c.F2(a + b, a + b + h, h, z) + c.v(-2 * b, c.sub(1, z)) * c.F2(a - b, a - b + h, h, z) -
                        dterm(o, c.del(z), [] { return CycloNum(1); });
         return one(lhs, rhs);
       }});

  add({.id = "slater-1521",
       .status = IS::theorem,
       .summary = "evaluation of the function with upper A^2, A and lower A",
       .requirement = "any q",
       .applies = any_q,
       .slots = {chars("A"), elems("z")},
       .arg_slot = 1,
       .exclusions = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0];
         U z = static_cast<U>(t[1]);
         if (z == 0 || ex(o, 0, c.triv(a))) return {};
         return one(c.F2(2 * a, a, a, z), c.v(-2 * a, c.sub(1, z)) - c.v(-a, z) * c.J(a, -2 * a));
       }});

  add({.id = "mth-multiplication",
       .status = IS::theorem,
       .summary = "m-th multiplication evaluation as a sum over m-th roots of the argument",
       .requirement = "q odd, q >= 5; each m in {2, 3, 4} with q = 1 mod m",
       .applies = odd_from(5),
       .slots = {ints("m", {2, 3, 4}), ints("j", {1, 2, 3}), chars("A"), elems("z")},
       .arg_slot = 3,
       .exclusions = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         const auto m = t[0], j = t[1], a = t[2];
         U z = static_cast<U>(t[3]);
         if (c.L % m != 0 || j >= m || std::gcd(j, m) != 1 || z == 0) return {};
         if (ex(o, 0, c.triv(m * a))) return {};
         const auto eta = j * (c.L / m);
         std::vector<std::int64_t> up{a}, lo;
         for (std::int64_t i = 1; i < m; ++i) {
           up.push_back(a + i * eta);
           lo.push_back(i * eta);
         }
         CycloNum pre;
         for (std::int64_t i = 0; i < m; ++i) pre += c.v(i * eta, z);
         pre = pre.scaled(mpq_class(1, m));
         CycloNum rhs = guarded(pre, [&] {
           CycloNum s;
           for (U r : c.roots(z, static_cast<unsigned>(m))) s += c.v(-m * a, c.sub(1, r));
           return s;
         });
         return one(c.Fn(up, lo, z), rhs);
       }});

  add({.id = "eg18-gsq",
       .status = IS::theorem,
       .summary = "squares of two order-12 functions and their cube-root evaluation",
       .requirement = "q = 1 mod 12",
       .applies = q_mod(12, 1),
       .slots = {chars_of_order("eta", 12), elems("lambda")},
       .arg_slot = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U lam = static_cast<U>(t[1]);
         if (lam == 0 || lam == 1) return {};
         U x = c.div(lam, c.sub(lam, 1));
         CycloNum f1 = c.F2(3 * e, -3 * e, 4 * e, x), f2 = c.F2(3 * e, -3 * e, -4 * e, x);
         CycloNum sq1 = f1 * f1, sq2 = f2 * f2;
         CycloNum rhs;
         auto rs = c.roots(lam, 3);
         if (!rs.empty()) {
           rhs = 1;
           for (std::size_t i = 0; i < rs.size(); ++i)
             for (std::size_t j = i + 1; j < rs.size(); ++j)
               rhs += c.v(6 * e, c.mul(c.sub(1, rs[i]), c.sub(1, rs[j])));
         } else {
           rhs = c.v(4 * e, lam);
         }
         Out out = one(c.v(8 * e, lam) * sq1, sq2);
         out.push_back({sq2, rhs});
         return out;
       }});

  auto clausen_excluded = [](EvalCtx& c, const EvalOptions& o, std::int64_t C, std::int64_t s) {
    return ex(o, 0, c.e(C) == c.phi) || ex(o, 1, c.triv(2 * s)) || ex(o, 2, c.e(2 * s) == c.e(C)) ||
           ex(o, 3, c.e(2 * s) == c.e(2 * C));
  };
  add({.id = "clausen",
       .status = IS::theorem,
       .summary = "Clausen formula: square of a 2F1 as a 3F2",
       .requirement = "q odd, q >= 5",
       .applies = odd_from(5),
       .slots = {chars("C"), chars("S"), elems("lambda")},
       .arg_slot = 2,
       .has_delta = true,
       .exclusions = 4,
       .default_q = {9, 13},
       .eval = [clausen_excluded](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto C = t[0], s = t[1];
         U lam = static_cast<U>(t[2]);
         if (lam == 1 || clausen_excluded(c, o, C, s)) return {};
         const auto h = c.phi;
         CycloNum f = c.F2(C - s + h, s, C, lam);
         CycloNum rhs = c.Fn({2 * C - 2 * s, 2 * s, C + h}, {2 * C, C}, lam) +
                        c.quad(c.sub(1, lam)) * c.v(-C, lam) *
                            (c.J(-2 * s, 2 * C) / c.J(-C, h) + dterm(o, c.triv(C), [&] { return CycloNum(c.L); }));
         return one(f * f, rhs);
       }});
  add({.id = "clausen-at-1",
       .status = IS::theorem,
       .summary = "evaluation of the Clausen 3F2 at 1",
       .requirement = "q odd, q >= 5",
       .applies = odd_from(5),
       .slots = {chars("C"), chars("S")},
       .exclusions = 4,
       .eval = [clausen_excluded](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto C = t[0], s = t[1];
         if (clausen_excluded(c, o, C, s)) return {};
         const auto h = c.phi;
         CycloNum lhs = c.Fn({2 * C - 2 * s, 2 * s, C + h}, {2 * C, C}, 1);
         CycloNum r1, r2;
         for (auto d : {s, s + h}) {
           CycloNum num = c.J(d, C - 2 * s) * c.J(2 * s - C, h - d);
           r1 += c.s(h) * num / (c.J(h, h + C) * c.J(2 * s, 2 * C - 2 * s));
           r2 += num / (c.J(h + s, -C) * c.J(s, -C));
         }
         Out out = one(lhs, r1);
         out.push_back({lhs, r2});
         return out;
       }});

  add({.id = "ramanujan-quarter",
       .status = IS::theorem,
       .summary = "Ramanujan-type evaluation of the quadratic 3P2 at 1/4",
       .requirement = "q odd, 3 does not divide q",
       .applies = [](const FiniteField& F) { return F.p() != 2 && F.p() != 3; },
       .slots = {},
       .eval = [](EvalCtx& c, const Tuple&, const EvalOptions&) {
         const auto h = c.phi;
         const long q = static_cast<long>(c.q);
         CycloNum rhs(q);
         if (c.q % 3 == 1) {
           const auto eta = c.L / 3;
           rhs += c.J(h, eta) * c.J(h, eta) + c.J(h, -eta) * c.J(h, -eta);
         }
         return one(c.Pn({h, h, h}, {0, 0}, c.div(1, c.k(4))), c.s(h) * rhs);
       }});
  add({.id = "ramanujan-eighth",
       .status = IS::theorem,
       .summary = "Ramanujan-type evaluation of the quadratic 3P2 at -1/8",
       .requirement = "q odd, 3 does not divide q",
       .applies = [](const FiniteField& F) { return F.p() != 2 && F.p() != 3; },
       .slots = {},
       .eval = [](EvalCtx& c, const Tuple&, const EvalOptions&) {
         const auto h = c.phi;
         const long q = static_cast<long>(c.q);
         CycloNum rhs(q);
         if (c.q % 4 == 1) {
           const auto eta = c.L / 4;
           rhs += c.J(h, eta) * c.J(h, eta) + c.J(h, -eta) * c.J(h, -eta);
         }
         return one(c.Pn({h, h, h}, {0, 0}, c.div(c.k(-1), c.k(8))), c.quad(c.k(-2)) * rhs);
       }});

  add({.id = "bb-cubic",
       .status = IS::theorem,
       .summary = "cubic transformation of the order-3 period function",
       .requirement = "q = 1 mod 3",
       .applies = q_mod(3, 1),
       .slots = {chars_of_order("eta", 3), elems("z")},
       .arg_slot = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U z = static_cast<U>(t[1]);
         U den = c.add(1, c.mul(c.k(2), z));
         if (den == 0) return {};
         U y = c.pw(c.div(c.sub(1, z), den), 3);
         Out out = one(c.P2(e, 2 * e, 0, c.sub(1, c.pw(z, 3))), c.P2(e, 2 * e, 0, y));
         out.push_back({c.F2(e, 2 * e, 0, c.sub(1, c.pw(z, 3))), c.F2(e, 2 * e, 0, y)});
         return out;
       }});

  add({.id = "ec-degree6",
       .status = IS::theorem,
       .summary = "degree-6 transformation relating order-12 and quadratic functions",
       .requirement = "q = p prime, p = 1 mod 12",
       .applies = p_mod(12, 1),
       .slots = {chars_of_order("eta", 12), elems("lambda")},
       .arg_slot = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U lam = static_cast<U>(t[1]);
         U m1 = c.k(-1);
         if (lam == m1 || lam == c.k(2) || lam == c.div(1, c.k(2))) return {};
         U poly = c.add(c.sub(c.mul(lam, lam), lam), 1);
         if (poly == 0) return {};
         U lm1 = c.sub(lam, 1);
         U arg = c.div(c.mul(c.mul(c.k(27), c.mul(lam, lam)), c.mul(lm1, lm1)), c.mul(c.k(4), c.pw(poly, 3)));
         const auto h = c.phi;
         Out out = one(c.P2(e, 5 * e, 0, arg), c.s(e) * c.v(3 * e, poly) * c.P2(h, h, 0, lam));
         out.push_back({c.F2(e, 5 * e, 0, arg), c.v(3 * e, poly) * c.F2(h, h, 0, lam)});
         return out;
       }});

  add({.id = "quad-2F1",
       .status = IS::theorem,
       .summary = "quadratic transformation with argument -4x/(1-x)^2",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("B"), chars("D"), elems("x")},
       .arg_slot = 2,
       .has_delta = true,
       .exclusions = 2,
       .default_q = {9, 13, 25},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto b = t[0], d = t[1], C = 2 * t[1];
         U x = static_cast<U>(t[2]);
         const auto h = c.phi;
         if (ex(o, 0, c.e(d) == h) || ex(o, 1, c.e(b) == c.e(d))) return {};
         U omx = c.sub(1, x);
         CycloNum lhs = guarded(c.v(-C, omx), [&] {
           return c.F2(d + h - b, d, C - b, c.div(c.mul(c.k(-4), x), c.mul(omx, omx)));
         });
         CycloNum rhs = c.F2(b, C, C - b, x) -
                        dterm(o, c.del(omx), [&] { return c.J(C, -2 * b) / c.J(C, -b); }) -
                        dterm(o, c.del(c.add(1, x)), [&] { return c.J(-b, d + h) / c.J(C, -b); });
         return one(lhs, rhs);
       }});
  add({.id = "quad-lemma",
       .status = IS::theorem,
       .summary = "Jacobi sum identity behind the quadratic transformation",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("D"), chars("K"), chars("chi")},
       .has_delta = true,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) {
         auto d = t[0], k = t[1], x = t[2], C = 2 * t[0];
         const auto h = c.phi;
         const long q = static_cast<long>(c.q);
         CycloNum lhs = c.J(-C - 2 * k, k - x);
         CycloNum main = c.s(x + d + h) * c.g(k - x) * c.g(C + k + x) * c.g(d) * c.g(d + h) * c.g(h - d - k) /
                         (c.v(k, c.k(4)) * c.g(d + k) * c.g(C));
         CycloNum rhs = main.scaled(mpq_class(1, q)) +
                        dterm(o, c.triv(d + x + h) * c.triv(d + k + h),
                              [&] { return CycloNum(c.L * c.L).scaled(mpq_class(1, q)); }) +
                        dterm(o, c.triv(d + k), [&] { return CycloNum(c.L); });
         return one(lhs, rhs);
       }});
  add({.id = "quad-aux-44",
       .status = IS::theorem,
       .summary = "auxiliary Jacobi sum ratios for the quadratic transformation",
       .requirement = "q odd, q >= 5",
       .applies = odd_from(5),
       .slots = {chars("B"), chars("D")},
       .exclusions = 3,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto b = t[0], d = t[1], C = 2 * t[1];
         const auto h = c.phi;
         if (ex(o, 0, c.e(b) == c.e(C)) || ex(o, 1, c.triv(h + d - b)) || ex(o, 2, c.e(b) == c.e(d))) return {};
         Out out = one(c.v(-d, c.k(4)) * c.J(h - b, d) / c.J(d, d - b), c.J(C, -2 * b) / c.J(C, -b));
         out.push_back({c.J(-b, d + h) / c.J(C, -b), c.J(C - b, d + h) / c.J(C, d - b + h)});
         return out;
       }});
  add({.id = "quad-4z1z",
       .status = IS::theorem,
       .summary = "quadratic transformations with argument 4z(1-z)",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("X"), chars("Y"), elems("z")},
       .arg_slot = 2,
       .exclusions = 4,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto X = t[0], Y = t[1];
         U z = static_cast<U>(t[2]);
         const auto h = c.phi;
         if (z == 1 || z == c.div(1, c.k(2))) return {};
         U w = c.mul(c.mul(c.k(4), z), c.sub(1, z));
         Out out;
         // X = B, Y = D
         if (!ex(o, 0, c.e(Y) == h) && !ex(o, 1, c.e(X) == c.e(Y))) {
           auto b = X, d = Y, C = 2 * Y;
           out.push_back({c.F2(d + h - b, d, C - b, w), c.F2(C - 2 * b, C, C - b, z)});
         }
         // X = A, Y = B
         if (!ex(o, 2, c.triv(2 * X)) && !ex(o, 3, c.triv(2 * Y)))
           out.push_back({c.F2(X, Y, X + Y + h, w), c.F2(2 * X, 2 * Y, X + Y + h, z)});
         return out;
       }});
  add({.id = "kummer-quad",
       .status = IS::theorem,
       .summary = "Kummer quadratic transformation with argument 4z/(1+z)^2",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("A"), chars("B"), elems("z")},
       .arg_slot = 2,
       .exclusions = 3,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         U z = static_cast<U>(t[2]);
         const auto h = c.phi;
         if (z == 1 || z == c.k(-1)) return {};
         if (ex(o, 0, c.triv(b)) || ex(o, 1, c.triv(2 * b - a)) || ex(o, 2, c.triv(a - b + h))) return {};
         U opz = c.add(1, z);
         return one(c.F2(a, b, 2 * b, c.div(c.mul(c.k(4), z), c.mul(opz, opz))),
                    c.v(2 * a, opz) * c.F2(a, a + h - b, b + h, c.mul(z, z)));
       }});
  add({.id = "kummer-quad-eta4",
       .status = IS::theorem,
       .summary = "Kummer quadratic transformation twisted by an order-4 character",
       .requirement = "q = 1 mod 4",
       .applies = q_mod(4, 1),
       .slots = {chars_of_order("eta", 4), chars("A"), chars("B"), elems("z")},
       .arg_slot = 3,
       .exclusions = 3,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto eta = t[0], a = t[1], b = t[2];
         U z = static_cast<U>(t[3]);
         const auto h = c.phi;
         if (z == 0 || z == 1 || z == c.k(-1)) return {};
         if (ex(o, 0, c.triv(a + eta)) || ex(o, 1, c.triv(b + eta)) || ex(o, 2, c.triv(a - b + h))) return {};
         U opz = c.add(1, z);
         return one(c.F2(a + b, b + eta, h + 2 * b, c.div(c.mul(c.k(4), z), c.mul(opz, opz))),
                    c.v(2 * a + 2 * b, opz) * c.F2(a + b, a + eta, b - eta, c.mul(z, z)));
       }});

  add({.id = "gs-cubic",
       .status = IS::theorem,
       .summary = "cubic transformation with argument 27x(1-x)^2/4",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("A"), elems("x")},
       .arg_slot = 1,
       .has_delta = true,
       .default_q = {5, 7, 9, 11, 13},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) {
         auto a = t[0];
         U x = static_cast<U>(t[1]);
         const auto h = c.phi;
         U omx = c.sub(1, x);
         U arg = c.div(c.mul(c.mul(c.k(27), x), c.mul(omx, omx)), c.k(4));
         const int q3 = c.quad(c.k(-3));
         CycloNum rhs = c.F2(3 * a, -3 * a, h, c.div(c.mul(c.k(3), x), c.k(4))) -
                        dterm(o, q3 * c.del(omx), [] { return CycloNum(1); });
         // in characteristic 3 the coefficient phi(-3) vanishes
         if (c.F.p() != 3) rhs -= dterm(o, q3 * c.s(a) * c.del(c.sub(x, c.div(1, c.k(3)))), [] { return CycloNum(1); });
         return one(c.F2(a, -a, h, arg), rhs);
       }});
  add({.id = "gs-eval-34",
       .status = IS::theorem,
       .summary = "evaluation of a cubic 3F2 at 3/4 as a sum over cube roots",
       .requirement = "q = 1 mod 6, q >= 19",
       .applies = both(q_mod(6, 1), at_least(19)),
       .slots = {chars_of_order("eta", 3), chars("A"), chars("chi")},
       .exclusions = 4,
       .default_q = {19, 25, 31},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto eta = t[0], a = t[1], x = t[2];
         const auto h = c.phi;
         if (ex(o, 0, c.triv(6 * a)) || ex(o, 1, c.triv(6 * x)) || ex(o, 2, c.triv(3 * (a + x))) ||
             ex(o, 3, c.triv(3 * (x - a))))
           return {};
         CycloNum lhs = c.Fn({3 * a, -3 * a, -x}, {h, -3 * x}, c.div(c.k(3), c.k(4)));
         CycloNum r1, r2;
         for (int j = 0; j < 3; ++j) {
           auto b = a + j * (c.L / 3);
           r1 += c.J(b + x, eta) * c.J(x - b, -eta) / (c.J(b, x + eta) * c.J(-b, x - eta));
           r2 += c.J(b + x, x - b);
         }
         r2 = c.s(a) * r2 / c.J(eta + x, x - eta);
         Out out = one(lhs, r1);
         out.push_back({lhs, r2});
         return out;
       }});

  add({.id = "bailey-cubic-1",
       .status = IS::theorem,
       .summary = "Bailey cubic 3F2 transformation with argument 4x",
       .requirement = "q = 1 mod 6",
       .applies = q_mod(6, 1),
       .slots = {chars_of_order("eta", 3), chars("A"), chars("B"), elems("x")},
       .arg_slot = 3,
       .has_delta = true,
       .exclusions = 6,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto eta = t[0], a = t[1], b = t[2];
         U x = static_cast<U>(t[3]);
         const auto h = c.phi;
         if (bailey_excluded(c, o, a, b)) return {};
         U omx = c.sub(1, x);
         CycloNum lhs = guarded(c.v(-3 * a, omx), [&] {
           U arg = c.div(c.mul(c.k(27), c.mul(x, x)), c.mul(c.k(4), c.pw(omx, 3)));
           return c.Fn({a, a + eta, a - eta}, {h + b, 3 * a - b}, arg);
         });
         CycloNum rhs = c.Fn({3 * a, b, h + 3 * a - b}, {2 * b, 6 * a - 2 * b}, c.mul(c.k(4), x)) -
                        dterm(o, c.del(c.add(x, c.k(2))),
                              [&] { return c.g(h) * c.g(-3 * a) / (c.g(h - b) * c.g(b - 3 * a)); }) -
                        dterm(o, c.del(omx), [&] { return bailey_sum(c, a, b, c.k(-4)); });
         return one(lhs, rhs);
       }});
  add({.id = "bailey-cubic-2",
       .status = IS::theorem,
       .summary = "Bailey cubic 3F2 transformation with argument x/4",
       .requirement = "q = 1 mod 6",
       .applies = q_mod(6, 1),
       .slots = {chars_of_order("eta", 3), chars("A"), chars("B"), elems("x")},
       .arg_slot = 3,
       .has_delta = true,
       .exclusions = 6,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto eta = t[0], a = t[1], b = t[2];
         U x = static_cast<U>(t[3]);
         const auto h = c.phi;
         if (bailey_excluded(c, o, a, b)) return {};
         U omx = c.sub(1, x);
         CycloNum lhs = guarded(c.v(-3 * a, omx), [&] {
           U arg = c.div(c.mul(c.k(27), x), c.mul(c.k(4), c.pw(c.sub(x, 1), 3)));
           return c.Fn({a, a + eta, a - eta}, {h + b, 3 * a - b}, arg);
         });
         CycloNum rhs =
             c.Fn({3 * a, 3 * a - 2 * b, 2 * b - 3 * a}, {3 * a - b, h + b}, c.div(x, c.k(4))) -
             dterm(o, c.del(c.add(x, c.div(1, c.k(2)))),
                   [&] { return c.v(3 * a, c.k(2)) * c.g(h) * c.g(-3 * a) / (c.g(h - b) * c.g(b - 3 * a)); }) -
             dterm(o, c.del(omx), [&] { return bailey_sum(c, a, b, c.k(4)); });
         return one(lhs, rhs);
       }});
  add({.id = "bailey-eval-4",
       .status = IS::theorem,
       .summary = "evaluation of the Bailey 3F2 at 4",
       .requirement = "q = 1 mod 6",
       .applies = q_mod(6, 1),
       .slots = {chars("A"), chars("B")},
       .exclusions = 6,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         if (bailey_excluded(c, o, a, b)) return {};
         return one(c.Fn({3 * a, b, c.phi + 3 * a - b}, {2 * b, 6 * a - 2 * b}, c.k(4)),
                    bailey_sum(c, a, b, c.k(-4)));
       }});
  add({.id = "bailey-eval-14",
       .status = IS::theorem,
       .summary = "evaluation of the second Bailey 3F2 at 1/4",
       .requirement = "q = 1 mod 6",
       .applies = q_mod(6, 1),
       .slots = {chars("A"), chars("B")},
       .exclusions = 6,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         if (bailey_excluded(c, o, a, b)) return {};
         return one(c.Fn({3 * a, 3 * a - 2 * b, 2 * b - 3 * a}, {3 * a - b, c.phi + b}, c.div(1, c.k(4))),
                    bailey_sum(c, a, b, c.k(4)));
       }});
  add({.id = "bailey-degenerate",
       .status = IS::theorem,
       .summary = "cubic 2F1 transformation from a degenerate Bailey case",
       .requirement = "q = 1 mod 6, q >= 13",
       .applies = both(q_mod(6, 1), at_least(13)),
       .slots = {chars_of_order("eta", 3), chars("E"), elems("x")},
       .arg_slot = 2,
       .exclusions = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto eta = t[0], E = t[1];
         U x = static_cast<U>(t[2]);
         const auto h = c.phi;
         if (x == 0 || x == 1 || x == c.div(1, c.k(4)) || x == c.div(c.k(-1), c.k(8))) return {};
         if (ex(o, 0, c.triv(6 * E))) return {};
         U om4x = c.sub(1, c.mul(c.k(4), x));
         return one(c.F2(3 * E, eta - E, 2 * E + h + eta, x),
                    c.v(-3 * E, om4x) *
                        c.F2(E, E + eta, 2 * E + h + eta, c.div(c.mul(c.k(-27), x), c.pw(om4x, 3))));
       }});

  add({.id = "andrews-stanton",
       .status = IS::theorem,
       .summary = "Andrews-Stanton quadratic 3F2 transformation",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {chars("A"), chars("B"), elems("x")},
       .arg_slot = 2,
       .exclusions = 6,
       .default_q = {13, 25},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) -> Out {
         auto a = t[0], b = t[1];
         U x = static_cast<U>(t[2]);
         const auto h = c.phi;
         if (x == 1 || x == c.k(-1) || x == c.div(1, c.k(2))) return {};
         if (ex(o, 0, c.triv(a)) || ex(o, 1, c.triv(b)) || ex(o, 2, c.triv(b - 2 * a)) ||
             ex(o, 3, c.triv(3 * b - 2 * a)) || ex(o, 4, c.triv(3 * b + h - a)) || ex(o, 5, c.triv(a - 2 * b)))
           return {};
         std::vector<std::int64_t> up{a, b, a + h - b}, lo{2 * b, 2 * a - 2 * b};
         U omx = c.sub(1, x);
         return one(c.Fn(up, lo, c.mul(c.mul(c.k(4), x), omx)),
                    c.v(-2 * a, omx) * c.Fn(up, lo, c.div(c.mul(c.k(-4), x), c.mul(omx, omx))));
       }});

  add({.id = "deg24-234",
       .status = IS::theorem,
       .summary = "order-24 evaluation for the (2,3,4) triangle group",
       .requirement = "q = 1 mod 24",
       .applies = q_mod(24, 1),
       .slots = {chars_of_order("eta", 24), elems("x")},
       .arg_slot = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U x = static_cast<U>(t[1]);
         if (x == c.div(c.k(-1), c.k(8)) || x == c.div(1, c.k(4))) return {};
         U om4x = c.sub(1, c.mul(c.k(4), x));
         U den = c.mul(c.k(4), om4x);
         return one(c.F2(-e, 7 * e, 18 * e, c.div(c.mul(c.k(-27), x), c.pw(om4x, 3))),
                    dihedral_rhs(c, c.sub(1, x), [&](U r) {
                      U opr = c.add(1, r);
                      return c.v(3 * e, c.div(c.mul(opr, opr), den));
                    }));
       }});

  add({.id = "isogeny-trace",
       .status = IS::theorem,
       .summary = "order-12 quadratic transformation from a 2-isogeny",
       .requirement = "q = 1 mod 12",
       .applies = q_mod(12, 1),
       .slots = {chars_of_order("eta", 12), elems("lambda")},
       .arg_slot = 1,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U lam = static_cast<U>(t[1]);
         if (lam == 0 || lam == 1 || lam == c.k(-1)) return {};
         U oml = c.sub(1, lam);
         return one(c.P2(2 * e, 4 * e, -2 * e, lam),
                    c.v(-2 * e, oml) * c.J(4 * e, c.phi) / c.J(3 * e, -5 * e) *
                        c.P2(e, 3 * e, -2 * e, c.div(c.mul(c.k(-4), lam), c.mul(oml, oml))));
       }});
  add({.id = "r-eta-unit",
       .status = IS::theorem,
       .summary = "the Jacobi sum ratio J(eta^2, eta^5)/J(eta^3, eta^4) has absolute value 1",
       .requirement = "q = 1 mod 12",
       .applies = q_mod(12, 1),
       .slots = {chars_of_order("eta", 12)},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) {
         auto e = t[0];
         CycloNum r = c.J(2 * e, 5 * e) / c.J(3 * e, 4 * e);
         CycloNum r2 = c.J(4 * e, c.phi) / c.J(3 * e, -5 * e);
         Out out = one(r * r.conj(), CycloNum(1));
         out.push_back({r2 * r2.conj(), CycloNum(1)});
         return out;
       }});

  add({.id = "stanton-involution",
       .status = IS::theorem,
       .summary = "Stanton's involution built from the closed form of the dihedral function",
       .requirement = "q odd",
       .applies = odd_q,
       .slots = {elems("z")},
       .arg_slot = 0,
       .has_delta = true,
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions& o) {
         U z = static_cast<U>(t[0]);
         auto G = [&](U y) { return long(y != 0) + c.quad(c.sub(1, y)); };
         auto Fz = [&](U y) { return c.mul(y, c.k(G(y))); };
         const long p1 = 1 + c.quad(c.sub(1, z)), p2 = 1 + c.quad(c.sub(1, c.mul(c.k(2), z)));
         const long dz = o.strip_delta ? 0 : c.del(z);
         const long d1 = o.strip_delta ? 0 : c.del(c.sub(1, z)) * c.quad(c.k(-1));
         U rhs_elem = c.sub(c.mul(z, c.k(p1 * p2)), c.k(d1));
         Out out = one(CycloNum(long(Fz(Fz(z)))), CycloNum(long(rhs_elem)));
         out.push_back({CycloNum(G(z) * G(c.mul(z, c.k(G(z))))), CycloNum(p1 * p2 - 3 * dz - d1)});
         return out;
       }});

  // conjectures
  add({.id = "cohen-4F3",
       .status = IS::conjecture,
       .summary = "evaluation of an order-12 4F3 at 1 attached to a Calabi-Yau threefold",
       .requirement = "q = p prime, p = 1 mod 12",
       .applies = p_mod(12, 1),
       .slots = {chars_of_order("eta", 12)},
       .default_q = {13, 37, 61},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) {
         auto e = t[0];
         CycloNum j4 = c.J(4 * e, 4 * e), j8 = c.J(8 * e, 8 * e);
         return one(c.Fn({4 * e, 8 * e, 3 * e, 9 * e}, {0, 0, 0}, 1),
                    -(j4 * j4 * j4) - j8 * j8 * j8 + CycloNum(c.s(e) * long(c.q)));
       }});

  struct TuYang {
    U f, g, poly;
    bool ok;
  };
  auto tuyang_args = [](EvalCtx& c, U al, U be, U z) {
    TuYang r{};
    U omz = c.sub(1, z), opaz = c.add(1, c.mul(al, z));
    U fnum = c.mul(c.mul(c.mul(c.k(12), al), z), c.mul(c.mul(omz, omz), c.sub(1, c.mul(c.k(9), c.mul(z, z)))));
    r.f = c.div(fnum, c.pw(opaz, 6));
    U opb = c.add(1, be);
    U inner = c.add(1, c.div(c.mul(c.sub(c.mul(c.k(4), be), c.k(7)), c.mul(z, z)), c.k(3)));
    r.poly = c.sub(c.add(1, c.mul(c.add(c.k(4), c.mul(c.k(2), be)), z)), c.mul(c.add(1, c.mul(c.k(2), be)), c.mul(z, z)));
    U gnum = c.mul(c.mul(c.mul(c.k(-4), c.pw(opb, 4)), z), c.pw(inner, 4));
    U gden = c.mul(c.mul(c.add(1, z), c.sub(1, c.mul(c.k(3), z))), c.pw(r.poly, 4));
    r.g = c.div(gnum, gden);
    r.ok = generic(r.f) && generic(r.g);
    return r;
  };
  add({.id = "tuyang-466",
       .status = IS::conjecture,
       .summary = "algebraic transformation between order-24 functions for the (4,6,6) and (4,4,4) groups",
       .requirement = "q = p prime, p = 1 mod 24, with roots of x^3 + 3 and x^2 + 2",
       .applies = both(p_mod(24, 1), has_tuyang_roots),
       .slots = {chars_of_order("eta", 24), elem_roots("alpha", -3, 3), elem_roots("beta", -2, 2), elems("z")},
       .arg_slot = 3,
       .default_q = {73, 193},
       .eval = [tuyang_args](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U al = static_cast<U>(t[1]), be = static_cast<U>(t[2]), z = static_cast<U>(t[3]);
         auto a = tuyang_args(c, al, be, z);
         if (!a.ok) return {};
         CycloNum lhs = c.v(3 * e, c.mul(c.add(1, z), c.sub(1, c.mul(c.k(3), z)))) *
                        c.v(-6 * e, c.add(1, c.mul(al, z))) * c.F2(5 * e, 9 * e, -6 * e, a.f);
         return one(lhs, c.quad(a.poly) * c.F2(3 * e, 9 * e, -6 * e, a.g));
       }});
  add({.id = "tuyang-466b",
       .status = IS::conjecture,
       .summary = "companion order-24 transformation for the (4,6,6) and (4,4,4) groups",
       .requirement = "q = p prime, p = 1 mod 24, with roots of x^3 + 3 and x^2 + 2",
       .applies = both(p_mod(24, 1), has_tuyang_roots),
       .slots = {chars_of_order("eta", 24), elem_roots("alpha", -3, 3), elem_roots("beta", -2, 2), elems("z")},
       .arg_slot = 3,
       .default_q = {73, 193},
       .eval = [tuyang_args](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U al = static_cast<U>(t[1]), be = static_cast<U>(t[2]), z = static_cast<U>(t[3]);
         auto a = tuyang_args(c, al, be, z);
         if (!a.ok) return {};
         U u1 = c.mul(c.mul(c.sub(1, z), c.add(1, c.mul(c.k(3), z))), c.add(1, c.mul(al, z)));
         U u2 = c.mul(c.add(1, z), c.sub(1, c.mul(c.k(3), z)));
         CycloNum lhs = c.v(6 * e, u1) * c.v(-9 * e, u2) * c.F2(11 * e, -9 * e, -6 * e, a.f);
         return one(lhs, c.quad(a.poly) * c.F2(9 * e, -9 * e, 6 * e, a.g));
       }});
  add({.id = "tuyang-ord20",
       .status = IS::conjecture,
       .summary = "algebraic transformation of order-20 functions",
       .requirement = "q = p prime, p = 1 mod 20",
       .applies = p_mod(20, 1),
       .slots = {chars_of_order("eta", 20), elems("z")},
       .arg_slot = 1,
       .default_q = {41, 61},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U z = static_cast<U>(t[1]);
         if (z == 0) return {};
         U z2 = c.mul(z, z);
         U p1 = c.sub(c.sub(1, z), z2), omz2 = c.sub(1, z2), p2 = c.sub(c.add(1, c.mul(c.k(4), z)), z2);
         U f = c.div(c.mul(c.mul(c.k(64), z), c.pw(p1, 5)), c.mul(omz2, c.pw(p2, 5)));
         if (!generic(f)) return {};
         return one(c.F2(e, 5 * e, -4 * e, f), c.v(e, omz2) * c.v(5 * e, p2) * c.F2(6 * e, 8 * e, -2 * e, z2));
       }});
  add({.id = "tuyang-ord6",
       .status = IS::conjecture,
       .summary = "cubic transformation of order-6 functions",
       .requirement = "q = p prime, p = 1 mod 6, p >= 13",
       .applies = both(p_mod(6, 1), at_least(13)),
       .slots = {chars_of_order("eta", 6), chars("A"), elems("z")},
       .arg_slot = 2,
       .default_q = {13, 19},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0], a = t[1];
         U z = static_cast<U>(t[2]);
         if (c.triv(6 * a)) return {};
         if (z == 1 || z == c.k(-1) || z == c.k(3) || z == c.k(-3)) return {};
         const auto h = c.phi;
         U opz = c.add(1, z);
         U arg = c.div(c.mul(c.k(16), c.pw(z, 3)), c.mul(opz, c.pw(c.sub(c.k(3), z), 3)));
         CycloNum lhs = c.v(a + e, opz) * c.v(3 * a + h, c.sub(1, c.div(z, c.k(3)))) *
                        c.F2(2 * a + 2 * e, a + 2 * e, 3 * a, c.mul(z, z));
         return one(lhs, c.F2(a + e, a + h, 2 * a, arg));
       }});
  add({.id = "tuyang-ord12",
       .status = IS::conjecture,
       .summary = "cubic transformation of order-12 functions",
       .requirement = "q = p prime, p = 1 mod 12, p >= 37",
       .applies = both(p_mod(12, 1), at_least(37)),
       .slots = {chars_of_order("eta", 12), chars("A"), elems("z")},
       .arg_slot = 2,
       .default_q = {37, 61},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0], a = t[1];
         U z = static_cast<U>(t[2]);
         if (c.triv(12 * a)) return {};
         U omz = c.sub(1, z), om9z = c.sub(1, c.mul(c.k(9), z));
         U f1 = c.div(c.mul(c.mul(c.k(-27), c.mul(z, z)), omz), om9z);
         U f2 = c.div(c.mul(c.k(-64), c.pw(z, 3)), c.mul(c.pw(omz, 3), om9z));
         if (!generic(f1) || !generic(f2)) return {};
         return one(c.v(9 * a + 9 * e, omz) * c.F2(4 * a + 4 * e, 2 * a + 4 * e, 6 * a, f1),
                    c.v(a + e, om9z) * c.F2(3 * a + 3 * e, a + 3 * e, 4 * a, f2));
       }});
  add({.id = "dihedral-233",
       .status = IS::conjecture,
       .summary = "order-12 evaluation for the (2,3,3) triangle group",
       .requirement = "q = p prime, p = 1 mod 12",
       .applies = p_mod(12, 1),
       .slots = {chars_of_order("eta", 12), elems("z")},
       .arg_slot = 1,
       .default_q = {13, 37},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U z = static_cast<U>(t[1]);
         U z2 = c.mul(z, z);
         if (z == 0 || z == 1 || z == c.k(-1) || c.add(z2, c.k(3)) == 0) return {};
         U opz = c.add(1, z);
         U arg = c.div(c.mul(c.mul(c.k(2), z), c.add(c.k(3), z2)), c.pw(opz, 3));
         U w = c.add(1, c.div(z2, c.k(3)));
         U den = c.mul(c.k(2), opz);
         return one(c.F2(-e, 3 * e, c.phi, arg),
                    dihedral_rhs(c, w, [&](U r) { return c.v(3 * e, c.div(c.add(1, r), den)); }));
       }});
  add({.id = "vidunas",
       .status = IS::conjecture,
       .summary = "order-12 evaluation after Vidunas for the (2,3,3) triangle group",
       .requirement = "q = p prime, p = 1 mod 12",
       .applies = p_mod(12, 1),
       .slots = {chars_of_order("eta", 12), elems("u")},
       .arg_slot = 1,
       .default_q = {37, 61},
       .eval = [](EvalCtx& c, const Tuple& t, const EvalOptions&) -> Out {
         auto e = t[0];
         U u = static_cast<U>(t[1]);
         U u3 = c.pw(u, 3);
         U den = c.sub(c.mul(c.k(8), u3), 1);
         if (den == 0) return {};
         U w = c.pw(c.div(c.mul(c.mul(c.k(4), u), c.add(u3, 1)), den), 3);
         if (w == 0 || w == 1) return {};
         return one(c.F2(-e, 3 * e, -4 * e, w), 2 * c.v(-3 * e, c.sub(1, c.mul(c.k(8), u3))));
       }});

  return R;
}

// ---------------------------------------------------------------- default fields

const std::vector<std::uint64_t>& candidate_orders() {
  static const std::vector<std::uint64_t> qs = [] {
    std::vector<std::uint64_t> v;
    for (std::uint64_t q = 3; q <= 128; ++q) {
      std::uint64_t p = 2;
      while (q % p) ++p;
      std::uint64_t r = q;
      while (r % p == 0) r /= p;
      if (r == 1) v.push_back(q);
    }
    return v;
  }();
  return qs;
}

// smallest admissible q plus two more, with a non-prime among them when one
// exists below 128, merged with any headline list
void fill_default_q(IdentityRecord& r) {
  std::vector<std::uint64_t> picked;
  bool nonprime = false;
  std::uint64_t first_nonprime = 0;
  for (auto q : candidate_orders()) {
    const FiniteField& F = field_of_order(q);
    if (!r.applies(F)) continue;
    if (picked.size() < 3) {
      picked.push_back(q);
      nonprime |= F.e() > 1;
    } else if (!first_nonprime && F.e() > 1) {
      first_nonprime = q;
    }
    if (picked.size() >= 3 && (nonprime || first_nonprime)) break;
  }
  if (!nonprime && first_nonprime) picked.push_back(first_nonprime);
  if (r.status == IdentityStatus::conjecture && !r.default_q.empty()) return;
  for (auto q : r.default_q) picked.push_back(q);
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  r.default_q = picked;
}

// ---------------------------------------------------------------- runner

struct TupleResult {
  std::uint64_t index = 0;
  bool admissible = false;
  bool failed = false;
  Witness witness;
};

std::string format_slot(const FiniteField& F, const Slot& s, std::int64_t v) {
  switch (s.kind) {
    case SlotKind::character: return MultChar::of(F, v).name();
    case SlotKind::element: return F.format(static_cast<U>(v));
    case SlotKind::integer: return std::to_string(v);
  }
  return "?";
}

Witness make_witness(const IdentityRecord& r, const FiniteField& F, const Tuple& t) {
  Witness w;
  w.tuple = t;
  std::string a;
  for (std::size_t i = 0; i < r.slots.size(); ++i) {
    if (i) a += ", ";
    a += r.slots[i].name + "=" + format_slot(F, r.slots[i], t[i]);
  }
  w.assignment = a;
  if (r.arg_slot >= 0) w.arg = format_slot(F, r.slots[r.arg_slot], t[r.arg_slot]);
  return w;
}

TupleResult run_tuple(const IdentityRecord& r, EvalCtx& ctx, const Tuple& t, const EvalOptions& opts) {
  TupleResult res;
  try {
    Out out = r.eval(ctx, t, opts);
    if (out.empty()) return res;
    res.admissible = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].lhs == out[i].rhs) continue;
      res.failed = true;
      res.witness = make_witness(r, ctx.F, t);
      res.witness.display = static_cast<int>(i);
      res.witness.lhs = out[i].lhs.str();
      res.witness.rhs = out[i].rhs.str();
      res.witness.lhs_value = out[i].lhs;
      res.witness.rhs_value = out[i].rhs;
      break;
    }
  } catch (const Error& e) {
    res.admissible = true;
    res.failed = true;
    res.witness = make_witness(r, ctx.F, t);
    res.witness.lhs = "undefined";
    res.witness.rhs = e.what();
  }
  return res;
}

// Evaluates the tuples on a pool of workers; results come back in input order.
std::vector<TupleResult> run_tuples(const IdentityRecord& r, const FiniteField& F, const std::vector<Tuple>& tuples,
                                    const EvalOptions& opts, unsigned workers) {
  std::vector<TupleResult> results(tuples.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, tuples.size() / 16)));
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 16;
  auto work = [&] {
    EvalCtx ctx(F);
    for (;;) {
      std::size_t lo = next.fetch_add(kChunk);
      if (lo >= tuples.size()) break;
      std::size_t hi = std::min(tuples.size(), lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) {
        results[i] = run_tuple(r, ctx, tuples[i], opts);
        results[i].index = i;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return results;
}

std::vector<std::vector<std::int64_t>> slot_values(const IdentityRecord& r, const FiniteField& F) {
  std::vector<std::vector<std::int64_t>> vals;
  for (const auto& s : r.slots) vals.push_back(s.values(F));
  return vals;
}

std::vector<Tuple> all_tuples(const std::vector<std::vector<std::int64_t>>& vals) {
  std::uint64_t total = 1;
  for (const auto& v : vals) total *= v.size();
  std::vector<Tuple> out;
  out.reserve(total);
  Tuple t(vals.size());
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t rem = i;
    for (std::size_t k = vals.size(); k-- > 0;) {
      t[k] = vals[k][rem % vals[k].size()];
      rem /= vals[k].size();
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

const FiniteField& field_of_order(std::uint64_t q) {
  if (q < 2) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p) ++p;
  unsigned e = 0;
  std::uint64_t r = q;
  for (; r % p == 0; r /= p) ++e;
  if (r != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  return construct_field(p, e);
}

const std::vector<IdentityRecord>& identity_registry() {
  static const std::vector<IdentityRecord> reg = [] {
    auto r = build_registry();
    for (auto& rec : r) fill_default_q(rec);
    return r;
  }();
  return reg;
}

const IdentityRecord& find_identity(const std::string& id) {
  for (const auto& r : identity_registry())
    if (r.id == id) return r;
  throw Error(Errc::UnknownIdentity, "no identity named '" + id + "'");
}

VerifyReport verify(const std::string& id, const FiniteField& F, const VerifyMode& mode, const RunOptions& opts) {
  const IdentityRecord& r = find_identity(id);
  VerifyReport rep;
  rep.id = id;
  rep.q = F.q();
  rep.kind = r.status;
  rep.mode = mode.str();
  if (!r.applies(F)) {
    rep.status = VerifyStatus::inapplicable;
    return rep;
  }
  auto vals = slot_values(r, F);
  std::vector<TupleResult> results;
  if (mode.exhaustive) {
    results = run_tuples(r, F, all_tuples(vals), opts.eval, opts.workers);
  } else {
    bool empty = false;
    for (const auto& v : vals) empty |= v.empty();
    std::mt19937_64 rng(mode.seed);
    std::uint64_t admissible = 0, drawn = 0;
    const std::uint64_t max_draws = 50 * mode.samples;
    while (!empty && admissible < mode.samples && drawn < max_draws) {
      std::vector<Tuple> batch;
      for (std::uint64_t i = admissible; i < mode.samples && drawn < max_draws; ++i, ++drawn) {
        Tuple t(vals.size());
        for (std::size_t k = 0; k < vals.size(); ++k) {
          std::uniform_int_distribution<std::size_t> pick(0, vals[k].size() - 1);
          t[k] = vals[k][pick(rng)];
        }
        batch.push_back(std::move(t));
      }
      auto part = run_tuples(r, F, batch, opts.eval, opts.workers);
      for (auto& p : part) {
        if (!p.admissible) continue;
        if (admissible >= mode.samples) break;
        ++admissible;
        results.push_back(std::move(p));
      }
    }
  }
  for (auto& res : results) {
    if (!res.admissible) continue;
    ++rep.tuples_checked;
    if (!res.failed) continue;
    ++rep.failure_count;
    if (rep.failures.size() < opts.max_witnesses) rep.failures.push_back(std::move(res.witness));
  }
  if (rep.tuples_checked == 0)
    rep.status = VerifyStatus::inapplicable;
  else if (r.status == IdentityStatus::theorem)
    rep.status = rep.failure_count ? VerifyStatus::fail : VerifyStatus::pass;
  else
    rep.status = rep.failure_count ? VerifyStatus::refuted : VerifyStatus::observed;
  return rep;
}

std::vector<VerifyReport> verify_all(const std::vector<const FiniteField*>& fields, const VerifyMode& mode,
                                     const RunOptions& opts) {
  std::vector<VerifyReport> out;
  for (const auto& r : identity_registry())
    for (const FiniteField* F : fields)
      if (r.applies(*F)) out.push_back(verify(r.id, *F, mode, opts));
  return out;
}

DeltaAudit delta_audit(const std::string& id, const FiniteField& F, unsigned workers) {
  const IdentityRecord& r = find_identity(id);
  DeltaAudit a;
  a.id = id;
  a.q = F.q();
  a.has_delta = r.has_delta;
  if (!r.applies(F)) return a;
  auto tuples = all_tuples(slot_values(r, F));
  EvalOptions stripped;
  stripped.strip_delta = true;
  auto plain = run_tuples(r, F, tuples, EvalOptions{}, workers);
  auto bare = run_tuples(r, F, tuples, stripped, workers);
  std::set<std::string> args;
  // delta terms are predicted to matter where the full and stripped right
  // sides differ, i.e. where the stripped identity fails
  EvalCtx ctx(F);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (!plain[i].admissible) continue;
    ++a.tuples_checked;
    Out full = r.eval(ctx, tuples[i], EvalOptions{});
    Out bar = r.eval(ctx, tuples[i], stripped);
    bool predicted = false;
    for (std::size_t k = 0; k < full.size(); ++k) predicted |= full[k].rhs != bar[k].rhs || full[k].lhs != bar[k].lhs;
    if (predicted) ++a.predicted;
    if (bare[i].failed) {
      a.failures.push_back(bare[i].witness);
      args.insert(bare[i].witness.arg);
    }
    if (predicted != bare[i].failed || plain[i].failed) a.exact_support = false;
  }
  a.failing_args.assign(args.begin(), args.end());
  return a;
}

}  // namespace hgff
