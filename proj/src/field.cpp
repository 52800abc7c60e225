#include "hgff/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace hgff {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::NotASubfieldPair: return "NotASubfieldPair";
    case Errc::NotAMultiple: return "NotAMultiple";
    case Errc::IncompatibleCongruence: return "IncompatibleCongruence";
    case Errc::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case Errc::NotInteger: return "NotInteger";
    case Errc::DegenerateLambda: return "DegenerateLambda";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Budget& budget() {
  static Budget b;
  return b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t k = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - k * nt);
    std::tie(r, nr) = std::make_pair(nr, r - k * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(r, m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^i) - x for i = 1..e-1 must be coprime to f
bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  Poly h = poly_mod({0, 1}, f, p);
  for (std::size_t i = 1; i < e; ++i) {
    // h <- h^p
    Poly base = h, acc = {1};
    for (std::uint64_t k = p; k; k >>= 1) {
      if (k & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    h = acc;
    Poly t = h;
    t.resize(std::max<std::size_t>(t.size(), 2), 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    if (t.empty()) return false;
    if (poly_gcd(f, t, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned e) : p_(p), e_(e) {
  q_ = 1;
  for (unsigned i = 0; i < e; ++i) q_ *= p;

  // smallest monic irreducible, scanning c0 + c1 p + ... upward
  for (std::uint64_t enc = 0; enc < q_; ++enc) {
    Poly f(e + 1);
    std::uint64_t t = enc;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[e] = 1;
    if (e == 1 || irreducible(f, p)) {
      modulus_.assign(f.begin(), f.end() - 1);
      break;
    }
  }

  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
    std::uint32_t acc = 1, b = a;
    for (; k; k >>= 1) {
      if (k & 1) acc = poly_mul(acc, b);
      b = poly_mul(b, b);
    }
    return acc;
  };
  for (std::uint32_t c = 1; c < q_; ++c) {
    bool ok = true;
    for (auto r : factors)
      if (slow_pow(c, n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = c;
      break;
    }
  }

  exp_.resize(n);
  log_.assign(q_, -1);
  std::uint32_t x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    exp_[k] = x;
    log_[x] = static_cast<std::int32_t>(k);
    x = poly_mul(x, generator_);
  }

  one_minus_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) one_minus_[a] = sub(1, a);

  // trace is F_p-linear; tabulate it on the basis t^i first
  std::vector<std::uint32_t> basis_tr(e);
  for (unsigned i = 0; i < e; ++i) {
    std::uint32_t ti = 1;
    for (unsigned k = 0; k < i; ++k) ti *= static_cast<std::uint32_t>(p);
    std::uint32_t acc = 0, y = ti;
    for (unsigned j = 0; j < e; ++j) {
      acc = add(acc, y);
      y = pow(y, static_cast<std::int64_t>(p));
    }
    basis_tr[i] = acc;
  }
  trace_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint64_t s = 0, t = a;
    for (unsigned i = 0; i < e; ++i) {
      s += (t % p) * basis_tr[i];
      t /= p;
    }
    trace_[a] = static_cast<std::uint32_t>(s % p);
  }
}

const FiniteField& FiniteField::get(std::uint64_t p, unsigned e) {
  if (e == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  if (p >= (1ull << 32) || !is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > budget().q_max)
      throw Error(Errc::BudgetExceeded, "q = " + std::to_string(p) + "^" + std::to_string(e) +
                                            " exceeds q_max = " + std::to_string(budget().q_max));
  }
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = cache[{p, e}];
  if (!slot) slot.reset(new FiniteField(p, e));
  return *slot;
}

std::uint32_t FiniteField::poly_mul(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
  Poly pa(e_), pb(e_);
  std::uint64_t ta = a, tb = b;
  for (unsigned i = 0; i < e_; ++i) {
    pa[i] = ta % p_;
    ta /= p_;
    pb[i] = tb % p_;
    tb /= p_;
  }
  Poly m(modulus_.begin(), modulus_.end());
  m.push_back(1);
  Poly r = poly_mulmod(pa, pb, m, p_);
  std::uint64_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
  return static_cast<std::uint32_t>(code);
}

FieldElement FiniteField::elem(std::uint32_t code) const {
  if (code >= q_) throw Error(Errc::InvalidArgument, "element code out of range");
  return FieldElement{this, code};
}

std::uint32_t FiniteField::int_code(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r);
}

FieldElement FiniteField::from_int(std::int64_t n) const { return FieldElement{this, int_code(n)}; }

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) + b) % p_);
  if (p_ == 2) return a ^ b;
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a = static_cast<std::uint32_t>(a / p_);
    b = static_cast<std::uint32_t>(b / p_);
    scale *= p_;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (e_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
  if (p_ == 2) return a;
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a = static_cast<std::uint32_t>(a / p_);
    scale *= p_;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t k = static_cast<std::uint64_t>(log_[a]) + static_cast<std::uint64_t>(log_[b]);
  if (k >= units()) k -= units();
  return exp_[k];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0");
  return log_[a] == 0 ? 1 : exp_[units() - static_cast<std::uint64_t>(log_[a])];
}

std::uint32_t FiniteField::div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

std::uint32_t FiniteField::pow(std::uint32_t a, std::int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw Error(Errc::DivisionByZero, "negative power of 0");
    return 0;
  }
  return exp(static_cast<std::int64_t>(log_[a]) * (k % static_cast<std::int64_t>(units())));
}

std::int64_t FiniteField::log(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::LogOfZero, "log of 0");
  return log_[a];
}

std::uint32_t FiniteField::exp(std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(units());
  k %= n;
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

std::vector<std::uint32_t> FiniteField::coeffs(std::uint32_t code) const {
  std::vector<std::uint32_t> c(e_);
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = static_cast<std::uint32_t>(code % p_);
    code = static_cast<std::uint32_t>(code / p_);
  }
  return c;
}

std::uint32_t FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > e_) throw Error(Errc::InvalidArgument, "too many coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
  return static_cast<std::uint32_t>(code);
}

std::string FiniteField::format(std::uint32_t code) const {
  if (code == 0) return "0";
  return "g^" + std::to_string(log_[code]);
}

std::uint32_t FiniteField::parse(const std::string& s) const {
  auto fail = [&]() { return Error(Errc::InvalidArgument, "cannot parse field element '" + s + "'"); };
  try {
    if (s.rfind("g^", 0) == 0) return exp(std::stoll(s.substr(2)));
    if (!s.empty() && s.front() == '[') {
      if (s.back() != ']') throw fail();
      std::vector<std::uint32_t> c;
      std::stringstream ss(s.substr(1, s.size() - 2));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        long long v = std::stoll(tok);
        v %= static_cast<long long>(p_);
        if (v < 0) v += static_cast<long long>(p_);
        c.push_back(static_cast<std::uint32_t>(v));
      }
      return from_coeffs(c);
    }
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw fail();
    return int_code(v);
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw fail();
  }
}

std::string FiniteField::modulus_string() const {
  std::ostringstream os;
  os << "t^" << e_;
  for (unsigned i = e_; i-- > 0;) {
    if (modulus_[i] == 0) continue;
    os << " + " << modulus_[i];
    if (i >= 1) os << "*t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::uint64_t FiniteField::table_checksum() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (auto v : exp_) mix(v);
  for (auto v : log_) mix(static_cast<std::uint32_t>(v));
  return h;
}

const Extension& FiniteField::extension(unsigned r) const {
  if (r == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  const FiniteField& big = get(p_, e_ * r);
  static std::map<std::tuple<std::uint64_t, unsigned, unsigned>, std::unique_ptr<Extension>> cache;
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = cache.find({p_, e_, r});
    if (it != cache.end()) return *it->second;
  }
  auto ext = std::make_unique<Extension>();
  ext->base = this;
  ext->big = &big;
  ext->r = r;
  ext->norm_exponent = big.units() / units();

  // image of t: smallest root in F_Q of the base modulus
  std::uint32_t tau = 0;
  if (e_ > 1) {
    for (std::uint32_t c = 0; c < big.q(); ++c) {
      std::uint32_t v = 1;  // Horner, leading coefficient 1
      for (unsigned i = e_; i-- > 0;) v = big.add(big.mul(v, c), modulus_[i]);
      if (v == 0) {
        tau = c;
        break;
      }
    }
  }
  ext->embed.resize(q_);
  ext->restriction.assign(big.q(), -1);
  std::vector<std::uint32_t> tau_pow(e_, 1);
  for (unsigned i = 1; i < e_; ++i) tau_pow[i] = big.mul(tau_pow[i - 1], tau);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t v = 0, t = a;
    for (unsigned i = 0; i < e_; ++i) {
      v = big.add(v, big.mul(t % static_cast<std::uint32_t>(p_), tau_pow[i]));
      t /= static_cast<std::uint32_t>(p_);
    }
    ext->embed[a] = v;
    ext->restriction[v] = static_cast<std::int32_t>(a);
  }
  const auto lg = static_cast<std::uint64_t>(big.log(ext->embed[generator_]));
  ext->log_scale = static_cast<std::int64_t>(lg / ext->norm_exponent);
  ext->log_scale_inv = static_cast<std::int64_t>(inv_mod(static_cast<std::uint64_t>(ext->log_scale), units()));
  if (units() == 1) ext->log_scale_inv = 0;

  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = cache[{p_, e_, r}];
  if (!slot) slot = std::move(ext);
  return *slot;
}

FieldElement Extension::embed_elem(const FieldElement& x) const {
  if (x.field != base) throw Error(Errc::FieldMismatch, "element is not in the base field");
  return FieldElement{big, embed[x.code]};
}

std::uint32_t Extension::norm(std::uint32_t big_code) const {
  if (big_code == 0) return 0;
  const auto k = big->log(big_code);
  return base->exp(static_cast<std::int64_t>((static_cast<unsigned __int128>(k) * log_scale_inv) % base->units()));
}

const FiniteField& construct_field(std::uint64_t p, unsigned e) { return FiniteField::get(p, e); }

std::vector<std::uint32_t> FieldElement::coeffs() const { return field->coeffs(code); }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  if (a.field != b.field || a.field == nullptr) throw Error(Errc::FieldMismatch, "operands live in different fields");
  const FiniteField& F = *a.field;
  switch (op) {
    case FieldOp::add: return {&F, F.add(a.code, b.code)};
    case FieldOp::sub: return {&F, F.sub(a.code, b.code)};
    case FieldOp::mul: return {&F, F.mul(a.code, b.code)};
    case FieldOp::div:
      if (b.code == 0) throw Error(Errc::DivisionByZero, "division by 0");
      return {&F, F.div(a.code, b.code)};
  }
  return {};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return field_arith(a, b, FieldOp::add); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return field_arith(a, b, FieldOp::sub); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return field_arith(a, b, FieldOp::mul); }
FieldElement operator/(const FieldElement& a, const FieldElement& b) { return field_arith(a, b, FieldOp::div); }
FieldElement operator-(const FieldElement& a) { return {a.field, a.field->neg(a.code)}; }

std::int64_t dlog(const FieldElement& x) { return x.field->log(x.code); }

FieldElement trace_to_prime(const FieldElement& x) { return {x.field, x.field->trace(x.code)}; }

FieldElement norm_to_subfield(const FieldElement& x, const FiniteField& target) {
  const FiniteField& big = *x.field;
  if (big.p() != target.p() || big.e() % target.e() != 0)
    throw Error(Errc::NotASubfieldPair, "target is not a subfield");
  const Extension& ext = target.extension(big.e() / target.e());
  if (ext.big != &big) throw Error(Errc::NotASubfieldPair, "element field is not the cached extension");
  return {&target, ext.norm(x.code)};
}

}  // namespace hgff
