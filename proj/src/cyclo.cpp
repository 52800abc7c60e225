#include "hgff/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hgff {

namespace detail {

struct CycloCtx {
  unsigned M = 1;
  unsigned phi = 1;
  std::vector<long> Phi;                            // monic, length phi + 1
  std::vector<std::pair<unsigned, long>> low;       // nonzero Phi_i for i < phi
  mutable std::once_flag red_once;
  mutable std::vector<std::int64_t> red;            // row e = z^e reduced, M rows
  bool tabulated = false;

  const std::int64_t* row(unsigned e) const {
    std::call_once(red_once, [this] { build_rows(); });
    return red.data() + static_cast<std::size_t>(e) * phi;
  }

  void build_rows() const {
    red.assign(static_cast<std::size_t>(M) * phi, 0);
    red[0] = 1;
    for (unsigned e = 1; e < M; ++e) {
      const std::int64_t* prev = red.data() + static_cast<std::size_t>(e - 1) * phi;
      std::int64_t* cur = red.data() + static_cast<std::size_t>(e) * phi;
      const std::int64_t carry = prev[phi - 1];
      for (unsigned j = phi; j-- > 1;) cur[j] = prev[j - 1];
      cur[0] = 0;
      if (carry != 0)
        for (auto [i, a] : low) cur[i] -= carry * a;
    }
  }
};

}  // namespace detail

namespace {

using detail::CycloCtx;

// Reduction tables are skipped above this many entries.
constexpr std::size_t kTableCap = std::size_t(1) << 24;

std::recursive_mutex& cyclo_mutex() {
  static std::recursive_mutex m;
  return m;
}

const CycloCtx& ctx_for(unsigned M) {
  if (M == 0) throw Error(Errc::InvalidArgument, "cyclotomic order must be positive");
  // contexts are never freed, so a per-thread index avoids the lock
  thread_local std::unordered_map<unsigned, const CycloCtx*> local;
  if (auto lt = local.find(M); lt != local.end()) return *lt->second;
  static std::map<unsigned, std::unique_ptr<CycloCtx>> cache;
  std::lock_guard<std::recursive_mutex> lock(cyclo_mutex());
  auto it = cache.find(M);
  if (it != cache.end()) {
    local.emplace(M, it->second.get());
    return *it->second;
  }
  const unsigned phi = euler_phi(M);
  if (phi > budget().phi_max)
    throw Error(Errc::BudgetExceeded, "phi(" + std::to_string(M) + ") = " + std::to_string(phi) +
                                          " exceeds phi_max = " + std::to_string(budget().phi_max));
  auto c = std::make_unique<CycloCtx>();
  c->M = M;
  c->phi = phi;
  c->Phi = cyclotomic_polynomial(M);
  for (unsigned i = 0; i < phi; ++i)
    if (c->Phi[i] != 0) c->low.emplace_back(i, c->Phi[i]);
  c->tabulated = static_cast<std::size_t>(M) * phi <= kTableCap;
  auto& slot = cache[M];
  slot = std::move(c);
  local.emplace(M, slot.get());
  return *slot;
}

void set_i128(mpz_class& out, __int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<unsigned long>(u >> 64);
  const auto lo = static_cast<unsigned long>(u);
  mpz_set_ui(out.get_mpz_t(), hi);
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), 64);
  mpz_add_ui(out.get_mpz_t(), out.get_mpz_t(), lo);
  if (negative) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

inline void addmul_si(mpz_class& acc, const mpz_class& a, long b) {
  if (b >= 0)
    mpz_addmul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  else
    mpz_submul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-b));
}

// t has arbitrary length; reduces in place mod Phi and truncates to phi
void reduce_poly(const CycloCtx& c, std::vector<mpz_class>& t) {
  const unsigned phi = c.phi;
  for (std::size_t k = t.size(); k-- > phi;) {
    if (sgn(t[k]) == 0) continue;
    const std::size_t base = k - phi;
    for (auto [i, a] : c.low) addmul_si(t[base + i], t[k], -a);
    t[k] = 0;
  }
  t.resize(phi);
}

// sum_i v[i] z^{(i * s + shift) mod M}, z of order c.M
std::vector<mpz_class> spread(const CycloCtx& c, const std::vector<mpz_class>& v, unsigned s, unsigned shift,
                              bool negate_exponent) {
  const unsigned M = c.M;
  auto exponent = [&](std::size_t i) {
    std::uint64_t e = (static_cast<std::uint64_t>(i) * s + shift) % M;
    if (negate_exponent) e = (M - e) % M;
    return static_cast<unsigned>(e);
  };
  std::vector<mpz_class> out(c.phi);
  if (c.tabulated) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      const std::int64_t* r = c.row(exponent(i));
      for (unsigned j = 0; j < c.phi; ++j)
        if (r[j] != 0) addmul_si(out[j], v[i], r[j]);
    }
    return out;
  }
  std::vector<mpz_class> t(M);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) t[exponent(i)] += v[i];
  reduce_poly(c, t);
  return t;
}

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  qtrim(rem);
  quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  while (rem.size() >= b.size() && !rem.empty()) {
    const std::size_t shift = rem.size() - b.size();
    mpq_class c = rem.back() / b.back();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem.pop_back();
    qtrim(rem);
  }
}

QPoly qmulsub(const QPoly& s0, const QPoly& q, const QPoly& s1) {
  QPoly r(std::max(s0.size(), q.empty() || s1.empty() ? 0 : q.size() + s1.size() - 1), 0);
  for (std::size_t i = 0; i < s0.size(); ++i) r[i] += s0[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < s1.size(); ++j) r[i + j] -= q[i] * s1[j];
  qtrim(r);
  return r;
}

}  // namespace

unsigned euler_phi(unsigned M) {
  unsigned result = M, n = M;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> cyclotomic_polynomial(unsigned M) {
  if (M == 0) throw Error(Errc::InvalidArgument, "cyclotomic order must be positive");
  if (euler_phi(M) > budget().phi_max)
    throw Error(Errc::BudgetExceeded, "phi(" + std::to_string(M) + ") exceeds phi_max");
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard<std::recursive_mutex> lock(cyclo_mutex());
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
  }
  // x^M - 1 divided exactly by Phi_d for the proper divisors d
  std::vector<long> num(M + 1, 0);
  num[0] = -1;
  num[M] = 1;
  for (unsigned d = 1; d < M; ++d) {
    if (M % d) continue;
    const std::vector<long> den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long> quo(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const long c = num[k];
      quo[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    num = std::move(quo);
  }
  std::lock_guard<std::recursive_mutex> lock(cyclo_mutex());
  cache[M] = num;
  return num;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

CycloNum::CycloNum() : ctx_(&ctx_for(1)), num_(1), den_(1) {}

CycloNum::CycloNum(long n, unsigned M) : ctx_(&ctx_for(M)), num_(ctx_->phi), den_(1) { num_[0] = n; }

CycloNum CycloNum::integer(const mpz_class& n, unsigned M) {
  CycloNum r(0, M);
  r.num_[0] = n;
  return r;
}

CycloNum CycloNum::rational(const mpq_class& v, unsigned M) {
  CycloNum r(0, M);
  r.num_[0] = v.get_num();
  r.den_ = v.get_den();
  r.normalize();
  return r;
}

CycloNum CycloNum::root(unsigned M, std::int64_t k) {
  CycloNum r(0, M);
  std::int64_t e = k % static_cast<std::int64_t>(M);
  if (e < 0) e += M;
  std::vector<mpz_class> one(1, 1);
  r.num_ = spread(*r.ctx_, one, 1, static_cast<unsigned>(e), false);
  return r;
}

CycloNum CycloNum::from_counts(unsigned M, const std::vector<std::int64_t>& counts) {
  if (counts.size() != M) throw Error(Errc::InvalidArgument, "count vector length must equal the order");
  CycloNum r(0, M);
  const CycloCtx& c = *r.ctx_;
  if (c.tabulated) {
    std::vector<__int128> acc(c.phi, 0);
    for (unsigned e = 0; e < M; ++e) {
      const std::int64_t n = counts[e];
      if (n == 0) continue;
      const std::int64_t* row = c.row(e);
      for (unsigned j = 0; j < c.phi; ++j) acc[j] += static_cast<__int128>(n) * row[j];
    }
    for (unsigned j = 0; j < c.phi; ++j) set_i128(r.num_[j], acc[j]);
    return r;
  }
  std::vector<mpz_class> t(M);
  for (unsigned e = 0; e < M; ++e) t[e] = static_cast<long>(counts[e]);
  reduce_poly(c, t);
  r.num_ = std::move(t);
  return r;
}

CycloNum CycloNum::from_coeffs(unsigned M, std::vector<mpz_class> num, mpz_class den) {
  CycloNum r(0, M);
  if (num.size() > r.ctx_->phi) {
    reduce_poly(*r.ctx_, num);
  }
  num.resize(r.ctx_->phi);
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

unsigned CycloNum::order() const { return ctx_->M; }
unsigned CycloNum::degree() const { return ctx_->phi; }

mpq_class CycloNum::coeff(unsigned i) const {
  mpq_class r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

void CycloNum::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  bool all_zero = true;
  for (const auto& x : num_) {
    if (sgn(x) == 0) continue;
    all_zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool CycloNum::is_zero() const {
  for (const auto& x : num_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (sgn(num_[i]) != 0) return false;
  return true;
}

std::optional<mpq_class> CycloNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  mpq_class r(num_[0], den_);
  r.canonicalize();
  return r;
}

std::optional<mpz_class> CycloNum::as_rational_integer() const {
  if (!is_rational() || den_ != 1) return std::nullopt;
  return num_[0];
}

CycloNum CycloNum::embed(unsigned M2) const {
  const unsigned M = ctx_->M;
  if (M2 == 0 || M2 % M != 0)
    throw Error(Errc::NotAMultiple, std::to_string(M2) + " is not a multiple of " + std::to_string(M));
  if (M2 == M) return *this;
  CycloNum r(0, M2);
  r.num_ = spread(*r.ctx_, num_, M2 / M, 0, false);
  r.den_ = den_;
  r.normalize();
  return r;
}

CycloNum CycloNum::conj() const {
  if (is_rational()) return *this;
  CycloNum r(0, ctx_->M);
  r.num_ = spread(*ctx_, num_, 1, 0, true);
  r.den_ = den_;
  return r;
}

void CycloNum::lift_pair(CycloNum& other) {
  if (ctx_ == other.ctx_) return;
  const unsigned L = std::lcm(ctx_->M, other.ctx_->M);
  if (ctx_->M != L) *this = embed(L);
  if (other.ctx_->M != L) other = other.embed(L);
}

CycloNum& CycloNum::operator+=(const CycloNum& b0) {
  if (b0.is_zero()) return *this;
  CycloNum b = b0;
  lift_pair(b);
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += b.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= b.den_;
      mpz_addmul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= b.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& b) { return *this += -b; }

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

CycloNum CycloNum::scaled(const mpq_class& s) const {
  CycloNum r = *this;
  if (sgn(s) == 0) return CycloNum(0, ctx_->M);
  for (auto& x : r.num_) x *= s.get_num();
  r.den_ *= s.get_den();
  r.normalize();
  return r;
}

CycloNum operator*(const CycloNum& a0, const CycloNum& b0) {
  if (a0.is_rational() || b0.is_rational()) {
    const CycloNum& r = a0.is_rational() ? a0 : b0;
    const CycloNum& o = a0.is_rational() ? b0 : a0;
    mpq_class s(r.num_[0], r.den_);
    s.canonicalize();
    if (r.ctx_ == o.ctx_ || o.ctx_->M % r.ctx_->M == 0) return o.scaled(s);
    CycloNum oo = o;
    CycloNum rr = r;
    oo.lift_pair(rr);
    return oo.scaled(s);
  }
  CycloNum a = a0, b = b0;
  a.lift_pair(b);
  const CycloCtx& c = *a.ctx_;
  const unsigned n = c.phi;
  thread_local std::vector<mpz_class> t;
  t.resize(2 * n - 1);
  for (auto& x : t) x = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (sgn(a.num_[i]) == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (sgn(b.num_[j]) == 0) continue;
      mpz_addmul(t[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  std::vector<mpz_class> tt(t.begin(), t.end());
  reduce_poly(c, tt);
  CycloNum r(0, c.M);
  r.num_ = std::move(tt);
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

CycloNum& CycloNum::operator*=(const CycloNum& b) {
  *this = *this * b;
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0");
  if (is_rational()) {
    mpq_class r(den_, num_[0]);
    r.canonicalize();
    return rational(r, ctx_->M);
  }
  // Gauss and Jacobi sums have rational norm to the real subfield
  const CycloNum c = conj();
  const CycloNum n = *this * c;
  if (n.is_rational()) {
    mpq_class r(n.den_, n.num_[0]);
    r.canonicalize();
    return c.scaled(r);
  }
  // extended Euclid against Phi_M over Q
  const CycloCtx& ctx = *ctx_;
  QPoly r0(ctx.Phi.begin(), ctx.Phi.end()), r1(num_.begin(), num_.end());
  qtrim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly quo, rem;
    qdivmod(r0, r1, quo, rem);
    QPoly s2 = qmulsub(s0, quo, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw Error(Errc::DivisionByZero, "element is not invertible");
  mpz_class common = 1;
  for (auto& x : s1) {
    x /= r1[0];
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> num(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) num[i] = s1[i].get_num() * (common / s1[i].get_den());
  // den_ of *this was dropped above: (num/den)^-1 = den * (num)^-1
  return from_coeffs(ctx.M, std::move(num), common).scaled(mpq_class(den_));
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by 0");
  return a * b.inverse();
}

CycloNum& CycloNum::operator/=(const CycloNum& b) {
  *this = *this / b;
  return *this;
}

CycloNum CycloNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloNum acc(1, ctx_->M), base = *this;
  for (; k; k >>= 1) {
    if (k & 1) acc *= base;
    if (k > 1) base *= base;
  }
  return acc;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.ctx_ == b.ctx_) return a.den_ == b.den_ && a.num_ == b.num_;
  if (a.is_rational() && b.is_rational()) return a.den_ == b.den_ && a.num_[0] == b.num_[0];
  CycloNum x = a, y = b;
  x.lift_pair(y);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

std::complex<double> CycloNum::to_complex() const {
  const auto z = to_complex_long();
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::complex<long double> CycloNum::to_complex_long() const {
  const long double two_pi = 6.283185307179586476925286766559L;
  long double re = 0, im = 0;
  const long double d = mpz_get_d(den_.get_mpz_t());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    const long double c = mpz_get_d(num_[i].get_mpz_t()) / d;
    const long double t = two_pi * static_cast<long double>(i) / ctx_->M;
    re += c * std::cos(t);
    im += c * std::sin(t);
  }
  return {re, im};
}

std::string CycloNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    mpq_class c = coeff(static_cast<unsigned>(i));
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0 || c != 1) os << c.get_str() << (i ? "*" : "");
    if (i == 1) os << "z";
    if (i > 1) os << "z^" << i;
  }
  if (first) os << "0";
  if (!is_rational()) os << " (z = zeta_" << ctx_->M << ")";
  return os.str();
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op) {
  switch (op) {
    case CycloOp::add: return a + b;
    case CycloOp::sub: return a - b;
    case CycloOp::mul: return a * b;
    case CycloOp::div: return a / b;
  }
  return {};
}

}  // namespace hgff
