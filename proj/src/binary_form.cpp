#include "mindisc/binary_form.hpp"

#include <utility>

namespace mindisc {

namespace {

std::vector<Rational> to_rational(const std::vector<Integer>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const Integer& c : v) out.emplace_back(c);
  return out;
}

std::vector<Integer> conv(const std::vector<Integer>& p, const std::vector<Integer>& q) {
  std::vector<Integer> out(p.size() + q.size() - 1, Integer(0));
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer falling(long x, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

// lambda and the integer coefficients of lambda * f.
std::pair<Integer, std::vector<Integer>> clear_denominators(const BinaryForm& f) {
  Integer lambda = 1;
  for (const Rational& c : f.coeffs()) lambda = lcm(lambda, Integer(c.get_den()));
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  for (const Rational& c : f.coeffs()) {
    Integer scale = exact_div(lambda, Integer(c.get_den()));
    out.push_back(Integer(c.get_num()) * scale);
  }
  return {lambda, std::move(out)};
}

// Fraction-free (Bareiss) determinant; divisions are exact by construction.
Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  const size_t n = m.size();
  int sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Integer det = m[n - 1][n - 1];
  return sign < 0 ? Integer(-det) : det;
}

// Sylvester resultant of two polynomials given by descending coefficients
// with nonzero leading entries.
Integer resultant(const std::vector<Integer>& p, const std::vector<Integer>& q) {
  const size_t m = p.size() - 1, n = q.size() - 1;
  const size_t dim = m + n;
  std::vector<std::vector<Integer>> s(dim, std::vector<Integer>(dim, Integer(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= m; ++j) s[i][i + j] = p[j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n; ++j) s[n + i][i + j] = q[j];
  return bareiss_det(std::move(s));
}

}  // namespace

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("a binary form needs at least one coefficient");
  for (Rational& c : coeffs_) c.canonicalize();
}

BinaryForm::BinaryForm(const std::vector<Integer>& coeffs)
    : BinaryForm(to_rational(coeffs)) {}

BinaryForm::BinaryForm(std::initializer_list<long> coeffs)
    : BinaryForm(std::vector<Rational>(coeffs.begin(), coeffs.end())) {}

BinaryForm BinaryForm::zero(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  return BinaryForm(std::vector<Rational>(degree + 1, Rational(0)));
}

BinaryForm BinaryForm::from_ascending(const std::vector<Rational>& affine) {
  return BinaryForm(std::vector<Rational>(affine.rbegin(), affine.rend()));
}

BinaryForm BinaryForm::from_ascending(const std::vector<Integer>& affine) {
  return from_ascending(to_rational(affine));
}

const Rational& BinaryForm::coeff(int i) const {
  if (i < 0 || i > degree()) throw std::out_of_range("coefficient index");
  return coeffs_[i];
}

std::vector<Rational> BinaryForm::ascending() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

bool BinaryForm::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool BinaryForm::is_integral() const {
  for (const Rational& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

GL2Matrix GL2Matrix::operator*(const GL2Matrix& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
          c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("cannot add forms of different degree");
  std::vector<Rational> out(f.coeffs());
  for (int i = 0; i <= g.degree(); ++i) out[i] += g.coeff(i);
  return BinaryForm(std::move(out));
}

BinaryForm operator-(const BinaryForm& f) {
  std::vector<Rational> out(f.coeffs());
  for (Rational& c : out) c = -c;
  return BinaryForm(std::move(out));
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  std::vector<Rational> out(f.degree() + g.degree() + 1, Rational(0));
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; j <= g.degree(); ++j) out[i + j] += f.coeff(i) * g.coeff(j);
  }
  return BinaryForm(std::move(out));
}

BinaryForm operator*(const Rational& c, const BinaryForm& f) {
  std::vector<Rational> out(f.coeffs());
  for (Rational& x : out) x *= c;
  return BinaryForm(std::move(out));
}

Rational evaluate(const BinaryForm& f, const Rational& x, const Rational& z) {
  const int d = f.degree();
  // powers x^{d-i} z^i, built incrementally
  std::vector<Rational> xp(d + 1, Rational(1)), zp(d + 1, Rational(1));
  for (int i = 1; i <= d; ++i) {
    xp[i] = xp[i - 1] * x;
    zp[i] = zp[i - 1] * z;
  }
  Rational acc(0);
  for (int i = 0; i <= d; ++i)
    if (f.coeff(i) != 0) acc += f.coeff(i) * xp[d - i] * zp[i];
  return acc;
}

BinaryForm act(const BinaryForm& f, const GL2Matrix& m) {
  if (m.det() == 0) throw std::invalid_argument("matrix must be invertible");
  const int d = f.degree();
  // powers of (aX + bZ) and (cX + dZ) as descending coefficient rows
  std::vector<std::vector<Integer>> top(d + 1), bot(d + 1);
  top[0] = {Integer(1)};
  bot[0] = {Integer(1)};
  const std::vector<Integer> t1{m.a, m.b}, t2{m.c, m.d};
  for (int k = 1; k <= d; ++k) {
    top[k] = conv(top[k - 1], t1);
    bot[k] = conv(bot[k - 1], t2);
  }
  std::vector<Rational> out(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) {
    if (f.coeff(i) == 0) continue;
    std::vector<Integer> term = conv(top[d - i], bot[i]);
    for (int j = 0; j <= d; ++j)
      if (term[j] != 0) out[j] += f.coeff(i) * term[j];
  }
  return BinaryForm(std::move(out));
}

BinaryForm mixed_partial(const BinaryForm& f, int dx, int dz) {
  if (dx < 0 || dz < 0 || dx + dz > f.degree())
    throw std::invalid_argument("derivative order exceeds the degree");
  const int m = f.degree(), q = m - dx - dz;
  std::vector<Rational> out(q + 1, Rational(0));
  for (int j = 0; j <= q; ++j) {
    const Rational& src = f.coeff(j + dz);
    if (src == 0) continue;
    Integer scale = falling(m - j - dz, dx) * falling(j + dz, dz);
    out[j] = src * scale;
  }
  return BinaryForm(std::move(out));
}

Rational discriminant(const BinaryForm& f) {
  const int d = f.degree();
  if (d < 2) throw std::invalid_argument("discriminant requires degree >= 2");
  if (f.leading() == 0) throw std::invalid_argument("degenerate leading coefficient");
  auto [lambda, p] = clear_denominators(f);
  std::vector<Integer> dp(d);
  for (int i = 0; i < d; ++i) dp[i] = p[i] * (d - i);
  Integer res = resultant(p, dp);
  Integer disc = exact_div(res, p[0]);
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
  // discriminant(lambda f) = lambda^{2d-2} discriminant(f)
  return make_rational(disc, pow(lambda, 2 * d - 2));
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r) {
  if (r < 0) throw std::invalid_argument("transvection index must be nonnegative");
  const int m = f.degree(), n = g.degree();
  if (r > m || r > n)
    throw std::invalid_argument("transvection index exceeds the form degrees");
  BinaryForm acc = BinaryForm::zero(m + n - 2 * r);
  for (int k = 0; k <= r; ++k) {
    BinaryForm term = mixed_partial(f, r - k, k) * mixed_partial(g, k, r - k);
    Rational w(binomial(r, k));
    if (k % 2 != 0) w = -w;
    acc = acc + w * term;
  }
  Rational prefactor =
      make_rational(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n));
  return prefactor * acc;
}

}  // namespace mindisc
