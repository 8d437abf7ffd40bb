#ifndef RBALG_POLYNOMIAL_HPP
#define RBALG_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "rbalg/matrix.hpp"

namespace rbalg {

/// Dense univariate polynomial, coefficients lowest degree first.  The
/// leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& fs) : field_(fs) {}
  Polynomial(Vec coeffs, const FieldSpec& fs);

  static Polynomial zero(const FieldSpec& fs) { return Polynomial(fs); }
  static Polynomial constant(const Scalar& c);
  static Polynomial one(const FieldSpec& fs) { return constant(Scalar::one(fs)); }
  /// x + shift
  static Polynomial linear(const Scalar& shift);
  static Polynomial x(const FieldSpec& fs) { return linear(Scalar::zero(fs)); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vec& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const;
  const Scalar& leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  bool is_constant_one() const { return degree() == 0 && coeffs_[0].is_one(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial monic() const;
  Polynomial derivative() const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  bool divisible_by(const Polynomial& d) const;

  Scalar eval(const Scalar& x) const;
  Matrix eval(const Matrix& m) const;

  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void normalize();

  FieldSpec field_;
  Vec coeffs_;
};

/// Monic greatest common divisor.
Polynomial poly_gcd(Polynomial a, Polynomial b);
/// Monic least common multiple.
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// Monic minimal polynomial of a square matrix, computed exactly from
/// per-basis-vector Krylov sequences and lcm of the local annihilators.
Polynomial minimal_polynomial(const Matrix& m);

struct ZeroShiftFactors {
  long long k = 0;   // multiplicity of x
  long long l = 0;   // multiplicity of x + lambda
  Polynomial rest;   // coprime to both factors
};

/// Writes q = x^k (x+lambda)^l * rest.  For lambda = 0 every power of x is
/// counted in k and l stays 0.
ZeroShiftFactors factor_zero_shift(const Polynomial& q, const Scalar& lambda);

struct SquarefreeResult {
  bool squarefree = false;
  /// Set over GF(p) when q' vanished identically (q a polynomial in x^p), in
  /// which case squarefree is reported false.
  bool degenerate = false;
};

SquarefreeResult poly_is_squarefree(const Polynomial& q);

}  // namespace rbalg

#endif
