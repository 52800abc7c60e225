#include "hgff/characters.hpp"

#include <numeric>
#include <sstream>

namespace hgff {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

void same_field(const MultChar& a, const MultChar& b) {
  if (a.field != b.field) throw Error(Errc::FieldMismatch, "characters on different fields");
}

}  // namespace

MultChar MultChar::of(const FiniteField& F, std::int64_t m) {
  return MultChar{&F, mod(m, static_cast<std::int64_t>(F.units()))};
}

MultChar MultChar::quadratic(const FiniteField& F) {
  if (F.p() == 2) throw Error(Errc::IncompatibleCongruence, "no quadratic character in characteristic 2");
  return of(F, static_cast<std::int64_t>(F.units() / 2));
}

std::uint64_t MultChar::order() const {
  const auto n = static_cast<std::int64_t>(modulus());
  return static_cast<std::uint64_t>(n / std::gcd(m, n));
}

MultChar MultChar::conj() const { return of(*field, -m); }

MultChar MultChar::pow(std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(modulus());
  return MultChar{field, static_cast<std::int64_t>(mod(static_cast<__int128>(m) * mod(k, n) % n, n))};
}

int MultChar::sign() const {
  if (field->p() == 2) return 1;
  return (m % 2 == 0) ? 1 : -1;
}

std::int64_t MultChar::exponent_at(std::uint32_t code) const {
  if (code == 0) return -1;
  return (m * field->log(code)) % static_cast<std::int64_t>(modulus());
}

std::string MultChar::name() const {
  if (m == 0) return "eps";
  return "chi^" + std::to_string(m);
}

MultChar operator*(const MultChar& a, const MultChar& b) {
  same_field(a, b);
  return MultChar::of(*a.field, a.m + b.m);
}

MultChar operator/(const MultChar& a, const MultChar& b) {
  same_field(a, b);
  return MultChar::of(*a.field, a.m - b.m);
}

CycloNum char_value(const MultChar& chi, std::uint32_t code) {
  const auto n = static_cast<unsigned>(chi.modulus());
  const std::int64_t e = chi.exponent_at(code);
  if (e < 0) return CycloNum(0, n);
  return CycloNum::root(n, e);
}

CycloNum char_value(const MultChar& chi, const FieldElement& x) {
  if (x.field != chi.field) throw Error(Errc::FieldMismatch, "character and element on different fields");
  return char_value(chi, x.code);
}

CycloNum char_sign(const MultChar& chi) { return CycloNum(chi.sign(), static_cast<unsigned>(chi.modulus())); }

int delta_char(const MultChar& chi) { return chi.is_trivial() ? 1 : 0; }
int delta_elem(const FieldElement& x) { return x.is_zero() ? 1 : 0; }

MultChar lift_norm(const MultChar& chi, unsigned r) {
  const Extension& ext = chi.field->extension(r);
  // chi(N(G^K)) = zeta_{q-1}^{m s^{-1} K}
  const auto big_units = static_cast<std::int64_t>(ext.big->units());
  const __int128 e = static_cast<__int128>(mod(chi.m * ext.log_scale_inv, chi.modulus())) *
                     static_cast<std::int64_t>(ext.norm_exponent);
  return MultChar{ext.big, static_cast<std::int64_t>(e % big_units)};
}

RationalParam RationalParam::make(std::int64_t i, std::int64_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (m < 0) {
    i = -i;
    m = -m;
  }
  i = mod(i, m);
  if (i == 0) return {0, 1};
  const std::int64_t g = std::gcd(i, m);
  return {i / g, m / g};
}

RationalParam RationalParam::parse(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return make(std::stoll(s), 1);
    return make(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidArgument, "cannot parse rational parameter '" + s + "'");
  }
}

std::string RationalParam::str() const { return std::to_string(i) + "/" + std::to_string(m); }

MultChar iota(const RationalParam& a0, const FiniteField& F) {
  const RationalParam a = RationalParam::make(a0.i, a0.m);
  const auto n = static_cast<std::int64_t>(F.units());
  if (n % a.m != 0)
    throw Error(Errc::IncompatibleCongruence,
                "q = " + std::to_string(F.q()) + " is not 1 mod " + std::to_string(a.m));
  return MultChar::of(F, a.i * (n / a.m));
}

RationalParam kappa(const MultChar& chi, std::int64_t m) {
  if (m <= 0 || m % static_cast<std::int64_t>(chi.order()) != 0)
    throw Error(Errc::OrderDoesNotDivide,
                "order " + std::to_string(chi.order()) + " does not divide " + std::to_string(m));
  const auto n = static_cast<std::int64_t>(chi.modulus());
  return RationalParam::make(chi.m / (n / m), m);
}

std::vector<MultChar> all_characters(const FiniteField& F) {
  std::vector<MultChar> out;
  out.reserve(F.units());
  for (std::uint64_t m = 0; m < F.units(); ++m) out.push_back(MultChar{&F, static_cast<std::int64_t>(m)});
  return out;
}

std::vector<MultChar> characters_of_order(const FiniteField& F, std::uint64_t N) {
  std::vector<MultChar> out;
  if (N == 0 || F.units() % N != 0) return out;
  const std::uint64_t step = F.units() / N;
  for (std::uint64_t k = 0; k < N; ++k)
    if (std::gcd(k, N) == 1) out.push_back(MultChar{&F, static_cast<std::int64_t>(k * step)});
  return out;
}

std::vector<MultChar> characters_dividing(const FiniteField& F, std::uint64_t N) {
  std::vector<MultChar> out;
  const std::uint64_t g = std::gcd(N, F.units());
  const std::uint64_t step = F.units() / g;
  for (std::uint64_t k = 0; k < g; ++k) out.push_back(MultChar{&F, static_cast<std::int64_t>(k * step)});
  return out;
}

MultChar parse_char(const FiniteField& F, const std::string& s) {
  try {
    if (s == "eps" || s == "e") return MultChar::trivial(F);
    if (s == "phi") return MultChar::quadratic(F);
    if (s.rfind("chi^", 0) == 0) return MultChar::of(F, std::stoll(s.substr(4)));
    if (s.rfind("order:", 0) == 0) {
      const auto comma = s.find(",index:");
      if (comma == std::string::npos) throw Error(Errc::InvalidArgument, "expected order:N,index:k");
      const auto N = std::stoull(s.substr(6, comma - 6));
      const auto k = std::stoull(s.substr(comma + 7));
      const auto chars = characters_of_order(F, N);
      if (chars.empty())
        throw Error(Errc::IncompatibleCongruence, "no character of order " + std::to_string(N));
      if (k >= chars.size()) throw Error(Errc::InvalidArgument, "character index out of range");
      return chars[k];
    }
    std::size_t used = 0;
    const auto m = std::stoll(s, &used);
    if (used != s.size()) throw Error(Errc::InvalidArgument, "cannot parse character '" + s + "'");
    return MultChar::of(F, m);
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidArgument, "cannot parse character '" + s + "'");
  }
}

}  // namespace hgff
