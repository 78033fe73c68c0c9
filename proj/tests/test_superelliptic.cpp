#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mindisc/superelliptic.hpp"
#include "oracles.hpp"

#include <map>
#include <vector>

using namespace mindisc;

namespace {

SuperellipticCurve curve(int n, std::vector<Integer> ascending) {
  return SuperellipticCurve::from_ascending(n, ascending);
}

// a_i -> a_i * u^{n(d-i)}: the inverse of the reduction substitution.
SuperellipticCurve inflate(const SuperellipticCurve& c, const Integer& u) {
  std::vector<Integer> a;
  for (int i = 0; i <= c.degree(); ++i)
    a.push_back(c.affine_coeff(i) *
                pow(u, static_cast<unsigned long>(c.exponent()) * (c.degree() - i)));
  return SuperellipticCurve::from_ascending(c.exponent(), a);
}

}  // namespace

TEST_CASE("construction enforces the preconditions") {
  CHECK_THROWS_AS(curve(1, {1, 0, 0, 1}), std::invalid_argument);   // n < 2
  CHECK_THROWS_AS(curve(2, {1, 0, 1}), std::invalid_argument);      // d < 3
  CHECK_THROWS_AS(curve(3, {0, 0, 0, 0, 1}), singular_curve_error); // y^3 = x^4
  CHECK_THROWS_AS(curve(2, {0, 0, 1, 1}), singular_curve_error);    // double root 0
  SuperellipticCurve c = curve(3, {1, 0, 0, 0, 1});
  CHECK(c.exponent() == 3);
  CHECK(c.degree() == 4);
  CHECK(c.affine_coeff(0) == 1);
  CHECK(c.affine_coeff(3) == 0);
  CHECK(c.affine_coeff(4) == 1);
}

TEST_CASE("curve discriminants") {
  CHECK(curve(3, {1, 0, 0, 0, 1}).discriminant() == 256);   // disc(x^4 + 1)
  CHECK(curve(2, {0, -1, 0, 1}).discriminant() == 4);       // y^2 = x^3 - x
  CHECK(curve(3, {4096, 0, 0, 0, 1}).discriminant() ==
        pow(Integer(2), 44));                               // 256 * (2^12)^3
  CHECK(curve_discriminant(curve(3, {1, 0, 0, 0, 1})) == 256);
}

TEST_CASE("threshold and genus") {
  CHECK(curve(3, {1, 0, 0, 0, 1}).threshold() == 36);  // 3*4*3
  CHECK(curve(2, {0, -1, 0, 1}).threshold() == 12);    // 2*3*2
  CHECK(curve(2, {1, 1, 0, 0, 0, 0, 1}).threshold() == 60);
  // genus: ((n-1)(d-1) + 1 - gcd(n,d)) / 2
  CHECK(curve(2, {0, -1, 0, 1}).genus() == 1);            // elliptic
  CHECK(curve(2, {1, 1, 0, 0, 0, 0, 1}).genus() == 2);    // hyperelliptic d=6
  CHECK(curve(3, {1, 0, 0, 0, 1}).genus() == 3);          // (2*3 + 1 - 1)/2
  CHECK(curve(4, {1, 1, 0, 3}).genus() == 3);             // n=4, d=3
}

TEST_CASE("scaling exponents frozen values") {
  CHECK(scaling_exponent_at(curve(3, {4096, 0, 0, 0, 1}), 2) == 1);
  CHECK(scaling_exponent_at(curve(3, {1, 0, 0, 0, 1}), 2) == 0);
  CHECK(scaling_exponent_at(curve(2, {4096, 1024, 0, 0, 0, 0, 1}), 2) == 1);
  CHECK(scaling_exponent_at(curve(3, {4096, 0, 0, 0, 1}), 3) == 0);
  CHECK_THROWS_AS(scaling_exponent_at(curve(3, {1, 0, 0, 0, 1}), 4),
                  std::invalid_argument);
}

TEST_CASE("reduce frozen examples") {
  ReduceResult r = reduce(curve(3, {4096, 0, 0, 0, 1}));
  CHECK(r.curve == curve(3, {1, 0, 0, 0, 1}));
  CHECK(r.scaling.u == 2);
  CHECK(r.scaling.old_delta == pow(Integer(2), 44));
  CHECK(r.scaling.new_delta == 256);

  r = reduce(curve(2, {4096, 1024, 0, 0, 0, 0, 1}));
  CHECK(r.curve == curve(2, {1, 1, 0, 0, 0, 0, 1}));
  CHECK(r.scaling.u == 2);
  CHECK(r.scaling.old_delta == r.scaling.new_delta * pow(Integer(2), 60));

  r = reduce(curve(3, {3, 0, 0, 0, 1}));
  CHECK(r.curve == curve(3, {3, 0, 0, 0, 1}));
  CHECK(r.scaling.u == 1);
}

TEST_CASE("reduce recovers random inflations exactly") {
  std::mt19937_64 rng = oracles::test_rng(0xd1);
  int done = 0;
  while (done < 120) {
    int n = 2 + static_cast<int>(oracles::rand_int(rng, 0, 2).get_si());
    int d = 3 + static_cast<int>(oracles::rand_int(rng, 0, 5).get_si());
    long p = std::vector<long>{2, 3, 5}[done % 3];
    unsigned long e = 1 + (done % 2);

    std::vector<Integer> a(d + 1);
    for (Integer& x : a) x = oracles::rand_int(rng, -5, 5);
    if (a[d] == 0) a[d] = 1;
    if (a[0] % p == 0) a[0] += 1;  // block scaling at p in the base curve
    BinaryForm f = BinaryForm::from_ascending(a);
    if (discriminant(f) == 0) continue;
    ++done;

    SuperellipticCurve base(n, f);
    Integer u = pow(Integer(p), e);
    SuperellipticCurve big = inflate(base, u);
    CHECK(big.discriminant() ==
          base.discriminant() * pow(u, static_cast<unsigned long>(base.threshold())));

    ReduceResult r = reduce(big);
    CHECK(scaling_exponent_at(big, p) == e);
    CHECK(r.scaling.u % u == 0);  // at least the planted power comes out
    CHECK(r.scaling.new_delta * pow(r.scaling.u, static_cast<unsigned long>(base.threshold())) ==
          r.scaling.old_delta);
    CHECK(r.scaling.old_delta == big.discriminant());

    // exhaustion: no prime of the reduced discriminant admits further scaling
    for (const auto& [q, unused] : factorize(r.curve.discriminant()).factors)
      CHECK(scaling_exponent_at(r.curve, q) == 0);
  }
}

TEST_CASE("minimality certificates") {
  CHECK(minimality_at(curve(3, {1, 0, 0, 0, 1}), 5) == Minimality::certified_minimal);
  CHECK(minimality_at(curve(3, {4096, 0, 0, 0, 1}), 2) == Minimality::inconclusive);
  CHECK(minimality_at(curve(2, {0, -1, 0, 1}), 2) == Minimality::certified_minimal);

  std::map<Integer, Minimality> cert = minimality_certificate(curve(3, {4096, 0, 0, 0, 1}));
  CHECK((cert == std::map<Integer, Minimality>{{2, Minimality::inconclusive}}));
  cert = minimality_certificate(curve(2, {0, -1, 0, 1}));
  CHECK((cert == std::map<Integer, Minimality>{{2, Minimality::certified_minimal}}));
}

TEST_CASE("certified primes really are minimal") {
  std::mt19937_64 rng = oracles::test_rng(0xd2);
  int done = 0;
  while (done < 40) {
    std::vector<Integer> a(6);
    for (Integer& x : a) x = oracles::rand_int(rng, -6, 6);
    if (a[5] == 0) a[5] = 2;
    BinaryForm f = BinaryForm::from_ascending(a);
    if (discriminant(f) == 0) continue;
    ++done;
    SuperellipticCurve c(3, f);
    for (const auto& [p, status] : minimality_certificate(c)) {
      if (status != Minimality::certified_minimal) continue;
      // exhaustive search: scaling by p requires p^{n(d-i)} | a_i for all i < d
      bool scalable = true;
      for (int i = 0; i < c.degree() && scalable; ++i)
        scalable = divides(pow(p, static_cast<unsigned long>(c.exponent()) *
                                      (c.degree() - i)),
                           c.affine_coeff(i));
      CHECK_FALSE(scalable);
      CHECK(valuation(c.discriminant(), p) <
            static_cast<unsigned long>(c.threshold()));
    }
  }
}

TEST_CASE("global minimal discriminant") {
  FactoredIdeal small = global_minimal_discriminant(curve(3, {1, 0, 0, 0, 1}));
  FactoredIdeal big = global_minimal_discriminant(curve(3, {4096, 0, 0, 0, 1}));
  CHECK(small == big);  // reduction invariance
  CHECK(small == factorize(256));

  FactoredIdeal ideal = global_minimal_discriminant(curve(2, {0, -1, 0, 1}));
  CHECK(ideal.sign == 1);
  CHECK((ideal.factors == std::map<Integer, unsigned long>{{2, 2}}));
}

TEST_CASE("consistency with elliptic reduction for n=2, d=3") {
  std::mt19937_64 rng = oracles::test_rng(0xd3);
  int done = 0;
  while (done < 50) {
    Integer A = oracles::rand_int(rng, -20, 20);
    Integer B = oracles::rand_int(rng, -20, 20);
    if (4 * A * A * A + 27 * B * B == 0) continue;
    Integer u0 = oracles::rand_int(rng, 1, 4);
    A *= pow(u0, 4);
    B *= pow(u0, 6);
    ++done;

    SuperellipticCurve c = curve(2, {B, A, 0, 1});  // y^2 = x^3 + Ax + B
    ReduceResult super = reduce(c);

    // scale-only elliptic reduction: the largest u with u^4 | A and u^6 | B
    Integer u_ell = 1;
    Integer bound = A == 0 ? B : (B == 0 ? A : gcd(A, B));
    for (const auto& [p, unused] : factorize(bound).factors) {
      unsigned long cap = A == 0 ? valuation(B, p) / 6
                        : B == 0 ? valuation(A, p) / 4
                                 : std::min(valuation(A, p) / 4, valuation(B, p) / 6);
      u_ell *= pow(p, cap);
    }

    CHECK(super.scaling.u == u_ell);
    // delta_ell = 16 disc(x^3 + Ax + B) on both sides of the reduction
    WeierstrassEquation e{0, 0, 0, A, B};
    CHECK(oracles::delta_b_expansion(e) == 16 * c.discriminant());
    WeierstrassEquation reduced{0, 0, 0, exact_div(A, pow(u_ell, 4)),
                                exact_div(B, pow(u_ell, 6))};
    CHECK(oracles::delta_b_expansion(reduced) ==
          16 * super.curve.discriminant());
  }
}
