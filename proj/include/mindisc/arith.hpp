// Exact integer/rational kernel: factorization, valuations, prime powers.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>

namespace mindisc {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when an operation meets a curve whose discriminant vanishes.
class singular_curve_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// sign * prod p^e with every key prime and every exponent >= 1.
struct Factorization {
  int sign = 1;
  std::map<Integer, unsigned long> factors;

  Integer value() const;
  bool operator==(const Factorization&) const = default;
};

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

// d | n (true for d = 0 only when n = 0).
bool divides(const Integer& d, const Integer& n);

// n / d, requiring the division to be exact.
Integer exact_div(const Integer& n, const Integer& d);

// num/den in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Deterministic (fixed Miller-Rabin witness set) below 3.3e24, BPSW beyond.
bool is_prime(const Integer& n);

// Trial division to 10^6, then Brent's rho on certified-composite survivors.
// Rejects n = 0.
Factorization factorize(const Integer& n);

// v_p(n) for prime p and n != 0; both preconditions are enforced.
unsigned long valuation(const Integer& n, const Integer& p);

// Largest u > 0 with u^k | n, i.e. prod p^floor(v_p(n)/k).  Needs n != 0, k >= 1.
Integer max_power_unit(const Integer& n, unsigned long k);

}  // namespace mindisc
