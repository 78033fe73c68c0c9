#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mindisc/binary_form.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <vector>

using namespace mindisc;

namespace {

BinaryForm x2_minus_z2() { return BinaryForm{1, 0, -1}; }

}  // namespace

TEST_CASE("construction and coefficient access") {
  BinaryForm f = x2_minus_z2();
  CHECK(f.degree() == 2);
  CHECK(f.leading() == 1);
  CHECK(f.coeff(0) == 1);
  CHECK(f.coeff(1) == 0);
  CHECK(f.coeff(2) == -1);
  CHECK_THROWS_AS(f.coeff(3), std::out_of_range);
  CHECK_THROWS_AS(BinaryForm(std::vector<Rational>{}), std::invalid_argument);

  BinaryForm g = BinaryForm::from_ascending(std::vector<Integer>{-1, 0, 1});
  CHECK(g == f);
  std::vector<Rational> asc = g.ascending();
  CHECK((asc == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}));

  CHECK(BinaryForm::zero(3).is_zero());
  CHECK(BinaryForm::zero(3).degree() == 3);
  CHECK_FALSE(f.is_zero());
  CHECK(f.is_integral());
  CHECK_FALSE(BinaryForm(std::vector<Rational>{Rational(1, 2)}).is_integral());
}

TEST_CASE("arithmetic operators") {
  BinaryForm f{1, 2};        // X + 2Z
  BinaryForm g{1, -2};       // X - 2Z
  CHECK((f + g == BinaryForm{2, 0}));
  CHECK((-f == BinaryForm{-1, -2}));
  CHECK((f * g == BinaryForm{1, 0, -4}));
  CHECK(Rational(1, 2) * f == BinaryForm(std::vector<Rational>{Rational(1, 2), Rational(1)}));
  CHECK_THROWS_AS((f + BinaryForm{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("evaluation") {
  BinaryForm f = x2_minus_z2();
  CHECK(evaluate(f, 1, 1) == 0);
  CHECK(evaluate(f, 2, 0) == 4);
  CHECK(evaluate(BinaryForm{1, 0, 0, 0}, 0, 5) == 0);
  CHECK(evaluate(f, Rational(1, 2), 1) == Rational(-3, 4));
}

TEST_CASE("GL2 action") {
  BinaryForm f = x2_minus_z2();
  CHECK(act(f, GL2Matrix::identity()) == f);
  CHECK((act(BinaryForm{1, 0, 0}, GL2Matrix{0, 1, 1, 0}) == BinaryForm{0, 0, 1}));
  CHECK((act(f, GL2Matrix{2, 0, 0, 1}) == BinaryForm{4, 0, -1}));
  CHECK_THROWS_AS(act(f, GL2Matrix{1, 2, 2, 4}), std::invalid_argument);

  // act is a right action through the standard matrix product
  std::mt19937_64 rng = oracles::test_rng(0xb1);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 + static_cast<int>(trial % 5);
    BinaryForm h = oracles::random_form(rng, d, 6);
    GL2Matrix m{oracles::rand_int(rng, -4, 4), oracles::rand_int(rng, -4, 4),
                oracles::rand_int(rng, -4, 4), oracles::rand_int(rng, -4, 4)};
    GL2Matrix n{oracles::rand_int(rng, -4, 4), oracles::rand_int(rng, -4, 4),
                oracles::rand_int(rng, -4, 4), oracles::rand_int(rng, -4, 4)};
    if (m.det() == 0 || n.det() == 0) continue;
    CHECK(act(act(h, m), n) == act(h, m * n));
  }
}

TEST_CASE("mixed partial derivatives") {
  BinaryForm x3{1, 0, 0, 0};
  CHECK((mixed_partial(x3, 1, 0) == BinaryForm{3, 0, 0}));
  CHECK(mixed_partial(x3, 0, 1) == BinaryForm::zero(2));
  CHECK(mixed_partial(BinaryForm{1, 1, 1}, 1, 1) == BinaryForm{1});
  // beyond the degree the derivative vanishes identically (degree -1 guard)
  std::mt19937_64 rng = oracles::test_rng(0xb2);
  for (int trial = 0; trial < 30; ++trial) {
    BinaryForm f = oracles::random_form(rng, 4, 9);
    CHECK(mixed_partial(mixed_partial(f, 1, 0), 0, 1) == mixed_partial(f, 1, 1));
    CHECK(mixed_partial(mixed_partial(f, 0, 1), 1, 0) == mixed_partial(f, 1, 1));
  }
}

TEST_CASE("discriminant frozen values") {
  CHECK(discriminant(BinaryForm{1, 0, 0}) == 0);      // X^2
  CHECK(discriminant(x2_minus_z2()) == 4);            // roots +-1
  CHECK(discriminant(BinaryForm{1, 0, -1, 0}) == 4);  // X^3 - XZ^2
  CHECK(discriminant(BinaryForm::from_ascending(std::vector<Integer>{1, 0, 0, 0, 1})) ==
        256);  // x^4 + 1
  CHECK(discriminant(BinaryForm::from_ascending(std::vector<Integer>{1, 1, 0, 0, 0, 0, 1})) ==
        -43531);  // x^6 + x + 1
  // quadratic b^2 - 4ac and scaling in the leading coefficient
  CHECK(discriminant(BinaryForm{2, 0, -2}) == 16);
  CHECK(discriminant(BinaryForm{1, 1, 1}) == -3);
}

TEST_CASE("discriminant of rational forms") {
  // disc(lambda f) = lambda^{2d-2} disc(f)
  BinaryForm f = x2_minus_z2();
  BinaryForm half_f = Rational(1, 4) * (BinaryForm{2, 0, -2});
  CHECK(discriminant(half_f) == Rational(1));
  BinaryForm g(std::vector<Rational>{Rational(1, 3), Rational(0), Rational(-1, 3), Rational(0)});
  CHECK(discriminant(g) == Rational(4, 81));  // (1/3)^4 * 4
}

TEST_CASE("discriminant guards") {
  CHECK_THROWS_AS(discriminant(BinaryForm{0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(discriminant(BinaryForm{1, 1}), std::invalid_argument);
}

TEST_CASE("discriminant equals root product") {
  std::vector<Integer> all{-3, -2, -1, 0, 1, 2, 3};
  for (int d = 2; d <= 6; ++d) {
    std::vector<int> pick(all.size(), 0);
    std::fill(pick.end() - d, pick.end(), 1);
    do {
      std::vector<Integer> roots;
      for (size_t i = 0; i < all.size(); ++i)
        if (pick[i]) roots.push_back(all[i]);
      for (long a0 : {1, 2, -3}) {
        BinaryForm f = oracles::form_from_roots(a0, roots);
        CHECK(discriminant(f) == oracles::disc_root_product(a0, roots));
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
}

TEST_CASE("discriminant equals root product for rational roots") {
  const std::vector<std::vector<Rational>> root_sets{
      {Rational(1, 2), Rational(-1, 3), Rational(2)},
      {Rational(1, 2), Rational(-1, 2), Rational(3, 2), Rational(0)},
      {Rational(2, 3), Rational(-3, 4)},
  };
  for (const auto& roots : root_sets) {
    for (long a0 : {1, 6, -12}) {
      std::vector<Rational> c{Rational(a0)};
      for (const Rational& alpha : roots) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (size_t i = 0; i < c.size(); ++i) {
          next[i] += c[i];
          next[i + 1] -= alpha * c[i];
        }
        c = std::move(next);
      }
      Rational expected = pow(Rational(a0), 2 * roots.size() - 2);
      for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
          expected *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
      CHECK(discriminant(BinaryForm(std::move(c))) == expected);
    }
  }
  // 6(X - Z/2)(X + Z/3)(X - 2Z) clears denominators to an integral cubic
  CHECK(discriminant(BinaryForm{6, -13, 1, 2}) == 11025);
}

TEST_CASE("discriminant equals Laplace-expanded resultant") {
  std::mt19937_64 rng = oracles::test_rng(0xb3);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 2 + trial % 4;
    BinaryForm f = oracles::random_form(rng, d, 8);
    std::vector<Integer> p, dp;
    for (int i = 0; i <= d; ++i) p.push_back(f.coeff(i).get_num());
    for (int i = 0; i < d; ++i) dp.push_back(p[i] * (d - i));
    Integer res = oracles::resultant_laplace(p, dp);
    Integer expected = exact_div(res, p[0]);
    if ((d * (d - 1) / 2) % 2 != 0) expected = -expected;
    CHECK(discriminant(f) == expected);
  }
}

TEST_CASE("discriminant covariance under GL2") {
  std::mt19937_64 rng = oracles::test_rng(0xb4);
  int checked = 0;
  while (checked < 80) {
    int d = 2 + checked % 7;
    BinaryForm f = oracles::random_form(rng, d, 9);
    GL2Matrix m{oracles::rand_int(rng, -5, 5), oracles::rand_int(rng, -5, 5),
                oracles::rand_int(rng, -5, 5), oracles::rand_int(rng, -5, 5)};
    if (m.det() == 0 || evaluate(f, m.a, m.c) == 0) continue;
    ++checked;
    CHECK(discriminant(act(f, m)) ==
          pow(Rational(m.det()), static_cast<unsigned long>(d) * (d - 1)) *
              discriminant(f));
  }
}

TEST_CASE("transvectant frozen values") {
  BinaryForm f{1, 0, 1};  // X^2 + Z^2
  CHECK(transvectant(f, f, 2) == BinaryForm{2});
  CHECK(transvectant(BinaryForm{1, 0, 0}, BinaryForm{0, 0, 1}, 2) == BinaryForm{1});
  CHECK(transvectant(f, f, 1) == BinaryForm::zero(2));
}

TEST_CASE("transvectant structure") {
  std::mt19937_64 rng = oracles::test_rng(0xb5);
  for (int trial = 0; trial < 40; ++trial) {
    BinaryForm f = oracles::random_form(rng, 2 + trial % 4, 7);
    BinaryForm g = oracles::random_form(rng, 2 + (trial / 2) % 4, 7);
    // zeroth transvectant is the plain product
    CHECK(transvectant(f, g, 0) == f * g);
    // antisymmetry: (f,g)^r = (-1)^r (g,f)^r
    for (int r = 1; r <= std::min(f.degree(), g.degree()); ++r) {
      BinaryForm lhs = transvectant(f, g, r);
      BinaryForm rhs = transvectant(g, f, r);
      CHECK(lhs == (r % 2 == 0 ? rhs : -rhs));
      CHECK(lhs.degree() == f.degree() + g.degree() - 2 * r);
    }
    CHECK(transvectant(f, f, 1).is_zero());
  }
}

TEST_CASE("transvectant guards") {
  BinaryForm f{1, 0, 1};
  CHECK_THROWS_AS(transvectant(f, f, 3), std::invalid_argument);
  CHECK_THROWS_AS(transvectant(f, f, -1), std::invalid_argument);
}
