#include "mindisc/arith.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace mindisc {

namespace {

// First 13 primes certify Miller-Rabin for n < 3317044064679887385961981.
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const Integer& deterministic_bound() {
  static const Integer bound("3317044064679887385961981");
  return bound;
}

// true if `base` proves n composite; n odd, n - 1 = d * 2^r.
bool witnesses_composite(const Integer& n, unsigned long base,
                         const Integer& d, unsigned long r) {
  Integer x, b(base);
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Integer n1 = n - 1;
  if (x == 1 || x == n1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n1) return false;
  }
  return true;
}

Integer random_below(std::mt19937_64& rng, const Integer& n) {
  Integer r(static_cast<unsigned long>(rng() >> 1));
  r = r % (n - 2) + 1;
  return r;
}

// Brent's cycle variant of Pollard rho; n odd, composite, no tiny factors.
Integer brent_rho(const Integer& n, std::mt19937_64& rng) {
  while (true) {
    Integer y = random_below(rng, n);
    Integer c = random_below(rng, n);
    Integer x, ys, q = 1, g = 1;
    long r = 1;
    const long batch = 128;
    while (g == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const long lim = std::min(batch, r - k);
        for (long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
    // Cycle absorbed the whole modulus; retry with fresh parameters.
  }
}

// Splits m completely into out.factors; m > 1 with no factor below 10^6.
void factor_large(Integer m, std::map<Integer, unsigned long>& out,
                  std::mt19937_64& rng) {
  std::vector<Integer> pending{std::move(m)};
  while (!pending.empty()) {
    Integer t = std::move(pending.back());
    pending.pop_back();
    if (is_prime(t)) {
      ++out[t];
      continue;
    }
    if (mpz_perfect_power_p(t.get_mpz_t())) {
      // Replace t by base^k to keep rho away from perfect powers.
      for (unsigned long k = 2; k <= mpz_sizeinbase(t.get_mpz_t(), 2); ++k) {
        Integer root, rem;
        mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), k);
        if (rem == 0) {
          for (unsigned long i = 0; i < k; ++i) pending.push_back(root);
          t = 0;
          break;
        }
      }
      if (t == 0) continue;
    }
    Integer d = brent_rho(t, rng);
    pending.push_back(exact_div(t, d));
    pending.push_back(std::move(d));
  }
}

}  // namespace

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) v *= pow(p, e);
  return v;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, unsigned long exp) {
  return make_rational(pow(Integer(base.get_num()), exp),
                       pow(Integer(base.get_den()), exp));
}

bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer exact_div(const Integer& n, const Integer& d) {
  if (d == 0 || !divides(d, n)) throw std::invalid_argument("inexact division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (mpz_cmp_ui(n.get_mpz_t(), p) == 0) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (mpz_cmp_ui(n.get_mpz_t(), 43 * 43) < 0) return true;
  Integer d = n - 1;
  const unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  if (n < deterministic_bound()) {
    for (unsigned long base : kWitnesses)
      if (witnesses_composite(n, base, d, r)) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factorize(const Integer& n) {
  if (n == 0) throw std::invalid_argument("zero has no factorization");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);

  auto strip = [&](unsigned long p) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
    Integer prime(p);
    out.factors[prime] =
        mpz_remove(m.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
  };

  strip(2);
  strip(3);
  strip(5);
  // mod-30 wheel
  static constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  constexpr unsigned long kTrialBound = 1000000;
  unsigned long p = 7;
  int w = 0;
  bool exhausted = false;  // trial division passed sqrt(m)
  while (p <= kTrialBound) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) {
      exhausted = true;
      break;
    }
    strip(p);
    p += kWheel[w];
    w = (w + 1) & 7;
  }
  if (m > 1) {
    if (exhausted) {
      ++out.factors[m];
    } else {
      // Deterministic seed so repeated runs factor identically.
      std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ mpz_get_ui(m.get_mpz_t()));
      factor_large(std::move(m), out.factors, rng);
    }
  }
  return out;
}

unsigned long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero is undefined");
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("valuation requires a prime p");
  Integer reduced;
  return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Integer max_power_unit(const Integer& n, unsigned long k) {
  if (n == 0) throw std::invalid_argument("max_power_unit of zero is undefined");
  if (k < 1) throw std::invalid_argument("max_power_unit requires k >= 1");
  Integer u = 1;
  for (const auto& [p, e] : factorize(n).factors)
    if (e >= k) u *= pow(p, e / k);
  return u;
}

}  // namespace mindisc
