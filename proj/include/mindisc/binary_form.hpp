// Binary forms, the GL2 action, discriminants and transvectants.
#pragma once

#include "mindisc/arith.hpp"

#include <initializer_list>
#include <vector>

namespace mindisc {

// Homogeneous form f(X,Z) = c0 X^d + c1 X^{d-1} Z + ... + cd Z^d.
// Immutable; the formal degree is fixed by the coefficient count, so
// leading zeros are representable (and rejected only where they matter).
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<Rational> coeffs);
  explicit BinaryForm(const std::vector<Integer>& coeffs);
  BinaryForm(std::initializer_list<long> coeffs);

  static BinaryForm zero(int degree);
  // affine[k] is the weight of x^k in f(x, 1); the list is reversed here.
  static BinaryForm from_ascending(const std::vector<Rational>& affine);
  static BinaryForm from_ascending(const std::vector<Integer>& affine);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // a_i, the weight of X^{d-i} Z^i.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::vector<Rational> ascending() const;
  const Rational& leading() const { return coeffs_.front(); }

  bool is_zero() const;
  bool is_integral() const;

  bool operator==(const BinaryForm&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

struct GL2Matrix {
  Integer a, b, c, d;

  Integer det() const { return a * d - b * c; }
  static GL2Matrix identity() { return {1, 0, 0, 1}; }
  // Standard matrix product, so act(act(f, M), N) == act(f, M * N).
  GL2Matrix operator*(const GL2Matrix& rhs) const;
  bool operator==(const GL2Matrix&) const = default;
};

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator-(const BinaryForm& f);
BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator*(const Rational& c, const BinaryForm& f);

Rational evaluate(const BinaryForm& f, const Rational& x, const Rational& z);

// f^M(X,Z) = f(aX + bZ, cX + dZ); M must be invertible.
BinaryForm act(const BinaryForm& f, const GL2Matrix& m);

// d^{dx+dz} f / dX^{dx} dZ^{dz}.
BinaryForm mixed_partial(const BinaryForm& f, int dx, int dz);

// a0^{2d-2} prod_{i<j} (alpha_i - alpha_j)^2, computed as
// (-1)^{d(d-1)/2} Res(f, f') / a0 with a fraction-free Sylvester determinant.
// Satisfies discriminant(f^M) = det(M)^{d(d-1)} discriminant(f).
Rational discriminant(const BinaryForm& f);

// r-th transvectant via the Omega process:
//   (f,g)^r = (m-r)!(n-r)!/(m!n!) sum_k (-1)^k C(r,k)
//             d^r f/dX^{r-k}dZ^k * d^r g/dX^k dZ^{r-k}
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r);

}  // namespace mindisc
