// Superelliptic curves y^n = f(x) over Q: scaling reduction x -> u^n X,
// y -> u^d Y, per-prime minimality certificates, minimal discriminant ideal.
#pragma once

#include "mindisc/arith.hpp"
#include "mindisc/binary_form.hpp"

#include <map>
#include <vector>

namespace mindisc {

enum class Minimality { certified_minimal, inconclusive };

// y^n = a_d x^d + ... + a_1 x + a_0 with n >= 2, d >= 3, a_d != 0 and
// squarefree right-hand side (discriminant != 0); all enforced on construction.
class SuperellipticCurve {
 public:
  SuperellipticCurve(int n, BinaryForm f);
  static SuperellipticCurve from_ascending(int n, const std::vector<Integer>& affine);

  int exponent() const { return n_; }
  int degree() const { return f_.degree(); }
  const BinaryForm& form() const { return f_; }
  // coefficient of x^k in f(x, 1)
  Integer affine_coeff(int k) const;
  const Integer& discriminant() const { return delta_; }
  // n d(d-1): the exponent in delta' u^k = delta and the certificate bound
  long threshold() const;
  // ((n-1)(d-1) + 1 - gcd(n,d)) / 2, reported only
  int genus() const;

  bool operator==(const SuperellipticCurve& o) const {
    return n_ == o.n_ && f_ == o.f_;
  }

 private:
  int n_;
  BinaryForm f_;
  Integer delta_;
};

struct ScalingReduction {
  Integer u;
  Integer old_delta;
  Integer new_delta;  // new_delta * u^{n d(d-1)} == old_delta
};

using FactoredIdeal = Factorization;

Integer curve_discriminant(const SuperellipticCurve& c);

// Largest e with p^{n(d-i)e} | a_i for every i < d with a_i != 0; the bound
// e <= floor(v_p(delta) / nd(d-1)) is checked as a consistency condition.
unsigned long scaling_exponent_at(const SuperellipticCurve& c, const Integer& p);

struct ReduceResult {
  SuperellipticCurve curve;
  ScalingReduction scaling;
};

// Divides out u = prod p^{scaling_exponent_at(c, p)}; afterwards every prime
// has scaling exponent zero.
ReduceResult reduce(const SuperellipticCurve& c);

// v_p(delta) < n d(d-1) certifies minimality at p; otherwise inconclusive.
Minimality minimality_at(const SuperellipticCurve& c, const Integer& p);

// Statuses for the primes dividing delta (all others are trivially certified).
std::map<Integer, Minimality> minimality_certificate(const SuperellipticCurve& c);

// factorize(curve_discriminant(reduce(c).curve)); the sign is reported but is
// not part of the ideal.
FactoredIdeal global_minimal_discriminant(const SuperellipticCurve& c);

}  // namespace mindisc
