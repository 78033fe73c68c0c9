#include "mindisc/superelliptic.hpp"

#include <numeric>
#include <utility>

namespace mindisc {

SuperellipticCurve::SuperellipticCurve(int n, BinaryForm f)
    : n_(n), f_(std::move(f)) {
  if (n_ < 2) throw std::invalid_argument("superelliptic exponent must be at least 2");
  if (f_.degree() < 3)
    throw std::invalid_argument("superelliptic curve needs deg f >= 3");
  if (!f_.is_integral())
    throw std::invalid_argument("superelliptic model must have integer coefficients");
  if (f_.leading() == 0)
    throw std::invalid_argument("leading coefficient of f must be nonzero");
  Rational disc = mindisc::discriminant(f_);
  delta_ = Integer(disc.get_num());  // integral f gives an integral discriminant
  if (delta_ == 0)
    throw singular_curve_error("singular model: the discriminant vanishes");
}

SuperellipticCurve SuperellipticCurve::from_ascending(
    int n, const std::vector<Integer>& affine) {
  return SuperellipticCurve(n, BinaryForm::from_ascending(affine));
}

Integer SuperellipticCurve::affine_coeff(int k) const {
  return Integer(f_.coeff(degree() - k).get_num());
}

long SuperellipticCurve::threshold() const {
  const long d = degree();
  return static_cast<long>(n_) * d * (d - 1);
}

int SuperellipticCurve::genus() const {
  const int d = degree();
  return ((n_ - 1) * (d - 1) + 1 - std::gcd(n_, d)) / 2;
}

Integer curve_discriminant(const SuperellipticCurve& c) { return c.discriminant(); }

unsigned long scaling_exponent_at(const SuperellipticCurve& c, const Integer& p) {
  const int d = c.degree();
  const long n = c.exponent();
  unsigned long e = 0;
  bool first = true;
  for (int i = 0; i < d; ++i) {
    Integer ai = c.affine_coeff(i);
    if (ai == 0) continue;
    unsigned long cap = valuation(ai, p) / static_cast<unsigned long>(n * (d - i));
    e = first ? cap : std::min(e, cap);
    first = false;
    if (e == 0) break;
  }
  if (first)
    throw std::logic_error("scaling_exponent_at: f reduced to a pure power");
  // delta scales by u^{-nd(d-1)}, so the exponent can never exceed this bound.
  if (e > 0 &&
      e * static_cast<unsigned long>(c.threshold()) > valuation(c.discriminant(), p))
    throw std::logic_error("scaling_exponent_at: discriminant bound violated");
  return e;
}

ReduceResult reduce(const SuperellipticCurve& c) {
  const int d = c.degree();
  const long n = c.exponent();
  Integer g = 0;
  for (int i = 0; i < d; ++i) g = gcd(g, c.affine_coeff(i));
  Integer u = 1;
  if (g > 1)
    for (const auto& [p, unused] : factorize(g).factors) {
      unsigned long e = scaling_exponent_at(c, p);
      if (e > 0) u *= pow(p, e);
    }
  if (u == 1) return {c, {Integer(1), c.discriminant(), c.discriminant()}};

  // Binary-form index j carries Z^j, i.e. affine degree d - j: divide by u^{nj}.
  std::vector<Rational> coeffs = c.form().coeffs();
  for (int j = 1; j <= d; ++j) {
    Integer num(coeffs[j].get_num());
    coeffs[j] = Rational(exact_div(num, pow(u, static_cast<unsigned long>(n) * j)));
  }
  SuperellipticCurve reduced(c.exponent(), BinaryForm(std::move(coeffs)));
  if (reduced.discriminant() * pow(u, static_cast<unsigned long>(c.threshold())) !=
      c.discriminant())
    throw std::logic_error("reduce: discriminant scaling law violated");
  ScalingReduction scaling{std::move(u), c.discriminant(), reduced.discriminant()};
  return {std::move(reduced), std::move(scaling)};
}

Minimality minimality_at(const SuperellipticCurve& c, const Integer& p) {
  unsigned long v = valuation(c.discriminant(), p);
  return v < static_cast<unsigned long>(c.threshold()) ? Minimality::certified_minimal
                                                       : Minimality::inconclusive;
}

std::map<Integer, Minimality> minimality_certificate(const SuperellipticCurve& c) {
  std::map<Integer, Minimality> out;
  const unsigned long bound = static_cast<unsigned long>(c.threshold());
  for (const auto& [p, v] : factorize(c.discriminant()).factors)
    out[p] = v < bound ? Minimality::certified_minimal : Minimality::inconclusive;
  return out;
}

FactoredIdeal global_minimal_discriminant(const SuperellipticCurve& c) {
  return factorize(reduce(c).curve.discriminant());
}

}  // namespace mindisc
