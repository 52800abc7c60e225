#include "hgff/zeta.hpp"

#include <cmath>
#include <sstream>

namespace hgff {

CycloNum lifted_period(const HGSpec& spec, const FieldElement& lambda, unsigned r) {
  if (lambda.field != &spec.field())
    throw Error(Errc::FieldMismatch, "argument is not in the field of the spec");
  if (r == 0) throw Error(Errc::InvalidArgument, "r must be positive");
  if (r == 1) return period_direct(spec, lambda);
  const FiniteField& F = spec.field();
  const Extension& ext = F.extension(r);
  std::vector<std::int64_t> up, lo;
  for (const auto& c : spec.upper) up.push_back(lift_norm(c, r).m);
  for (const auto& c : spec.lower) lo.push_back(lift_norm(c, r).m);
  return period_direct_raw(*ext.big, up, lo, ext.embed[lambda.code], F.units());
}

std::vector<CycloNum> zeta_series(const HGSpec& spec, const FieldElement& lambda, unsigned rmax) {
  std::vector<CycloNum> P{CycloNum(0)};
  for (unsigned r = 1; r <= rmax; ++r) P.push_back(lifted_period(spec, lambda, r));
  // k z_k = sum_{i=1}^k P_i z_{k-i}
  std::vector<CycloNum> z{CycloNum(1)};
  for (unsigned k = 1; k <= rmax; ++k) {
    CycloNum s(0);
    for (unsigned i = 1; i <= k; ++i) s += P[i] * z[k - i];
    z.push_back(s.scaled(mpq_class(1, k)));
  }
  return z;
}

bool ZetaFactor::rational() const {
  for (const auto& c : coeffs)
    if (!c.is_rational()) return false;
  return true;
}

std::string ZetaFactor::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << " + ";
    const bool paren = !coeffs[i].is_rational();
    if (paren) os << "(";
    os << coeffs[i].str();
    if (paren) os << ")";
    if (i == 1) os << "T";
    if (i > 1) os << "T^" << i;
  }
  return os.str();
}

unsigned default_rmax(const FiniteField& F) {
  const double q = static_cast<double>(F.q());
  return q * q * q * q <= static_cast<double>(budget().q_max) ? 4 : 3;
}

ZetaFactor zeta_factor(const HGSpec& spec, const FieldElement& lambda, unsigned rmax) {
  if (spec.n() != 1) throw Error(Errc::InvalidArgument, "degree-2 factors are only assembled for n = 1");
  const FiniteField& F = spec.field();
  if (rmax == 0) rmax = default_rmax(F);
  if (rmax < 2) rmax = 2;
  ZetaFactor f;
  f.q = F.q();
  f.primitive = is_primitive(spec);
  for (unsigned r = 1; r <= rmax; ++r) f.periods.push_back(lifted_period(spec, lambda, r));
  const CycloNum& P1 = f.periods[0];
  const CycloNum tr = -P1;
  const CycloNum det = (P1 * P1 + f.periods[1]).scaled(mpq_class(1, 2));
  f.coeffs = {CycloNum(1), -tr, det};
  // power sums of the two roots: s_r = tr s_{r-1} - det s_{r-2}
  CycloNum s_prev = CycloNum(2), s = tr;
  for (unsigned r = 2; r <= rmax; ++r) {
    CycloNum next = tr * s - det * s_prev;
    s_prev = s;
    s = next;
    if (r >= 3 && f.periods[r - 1] != -s) f.newton_ok = false;
  }
  return f;
}

ZetaFactor charpoly_2(const HGSpec& spec, const FieldElement& lambda, unsigned rmax) {
  if (spec.n() != 1) throw Error(Errc::InvalidArgument, "charpoly_2 needs an n = 1 spec");
  if (!is_primitive(spec)) throw Error(Errc::NotPrimitive, "spec " + spec.str() + " is not primitive");
  if (lambda.code == 0 || lambda.code == 1) throw Error(Errc::DegenerateLambda, "lambda must not be 0 or 1");
  ZetaFactor f = zeta_factor(spec, lambda, rmax);
  for (const auto& c : f.coeffs)
    if (!c.is_integral()) throw Error(Errc::NotInteger, "zeta coefficient is not integral: " + c.str());
  return f;
}

PurityReport weil_purity_check(const ZetaFactor& f) {
  PurityReport rep;
  if (f.degree() != 2) throw Error(Errc::InvalidArgument, "purity check needs a degree-2 factor");
  const CycloNum tr = f.trace(), det = f.det();
  const auto q = static_cast<long>(f.q);
  // |alpha| = |beta| = sqrt(q) iff det conj(det) = q^2 and q tr = det conj(tr)
  rep.exact_ok = det * det.conj() == CycloNum(q * q) && tr.scaled(q) == det * tr.conj();
  if (f.rational()) {
    const mpq_class d = *det.as_rational(), t = *tr.as_rational();
    rep.exact_ok = rep.exact_ok && (d == q || d == -q) && t * t <= 4 * q;
  }
  // the discriminant is formed exactly; near a double root its floating
  // evaluation would otherwise lose half the digits to cancellation
  const std::complex<long double> t = tr.to_complex_long();
  const std::complex<long double> disc = std::sqrt((tr * tr - det.scaled(4)).to_complex_long());
  rep.roots[0] = std::complex<double>((t + disc) / 2.0L);
  rep.roots[1] = std::complex<double>((t - disc) / 2.0L);
  const double sq = std::sqrt(static_cast<double>(q));
  rep.max_deviation = std::max(std::abs(std::abs(rep.roots[0]) - sq), std::abs(std::abs(rep.roots[1]) - sq));
  rep.float_ok = rep.max_deviation < 1e-9;
  if (!f.primitive) {
    rep.status = "impure";
  } else if (rep.exact_ok && rep.float_ok && f.newton_ok) {
    rep.status = "pass";
  } else {
    rep.status = "fail";
    std::ostringstream os;
    os << "tr = " << tr.str() << ", det = " << det.str() << ", deviation " << rep.max_deviation;
    if (!f.newton_ok) os << ", Newton identities fail for r >= 3";
    rep.witness = os.str();
  }
  return rep;
}

}  // namespace hgff
