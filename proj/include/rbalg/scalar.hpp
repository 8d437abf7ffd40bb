#ifndef RBALG_SCALAR_HPP
#define RBALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rbalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

/// Ground field of a computation: the rationals or GF(p) for a prime p.
/// Every Scalar, Matrix, Polynomial and Algebra carries one; mixing
/// different fields in one operation is an error.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec gf(long long p);

  /// Parses "Q" or "GF:p".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  long long characteristic() const { return characteristic_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

  std::string str() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.characteristic_ == b.characteristic_;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

 private:
  FieldSpec(FieldKind kind, long long characteristic)
      : kind_(kind), characteristic_(characteristic) {}

  FieldKind kind_;
  long long characteristic_;
};

/// Exact field element: a reduced rational with positive denominator, or a
/// residue in [0, p).  All arithmetic is exact; mixed-field operands throw.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& fs);
  static Scalar one(const FieldSpec& fs);
  static Scalar from_int(long long v, const FieldSpec& fs);
  static Scalar from_bigint(const BigInt& v, const FieldSpec& fs);
  /// Rational a/b over Q; b must be nonzero.
  static Scalar ratio(const BigInt& num, const BigInt& den);
  static Scalar residue(long long r, long long p);

  /// Parses the textual format: rationals as "a/b" or "a" (optional sign,
  /// b > 0 after normalization), prime-field elements as decimal residues.
  static Scalar parse(std::string_view text, const FieldSpec& fs);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(long long e) const;

  /// A square root in the same field, if one exists (nonnegative root over Q,
  /// least residue over GF(p)).
  std::optional<Scalar> sqrt() const;

  /// The value as an integer when it is one (denominator 1 over Q; the
  /// canonical residue over GF(p)).
  std::optional<BigInt> as_integer() const;

  /// Over Q only.
  const BigRational& rational() const { return q_; }
  long long gf_residue() const { return r_; }

  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  explicit Scalar(const FieldSpec& fs) : field_(fs) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  BigRational q_;    // rationals
  long long r_ = 0;  // prime-field residue in [0, p)
};

}  // namespace rbalg

#endif
