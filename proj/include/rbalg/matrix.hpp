#ifndef RBALG_MATRIX_HPP
#define RBALG_MATRIX_HPP

#include <vector>

#include "rbalg/scalar.hpp"

namespace rbalg {

/// Coordinate vector; all entries share one field.
using Vec = std::vector<Scalar>;

Vec vec_zero(int n, const FieldSpec& fs);
Vec vec_basis(int n, int i, const FieldSpec& fs);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);

/// Dense matrix over an exact field.  Dimensions are fixed at construction.
class Matrix {
 public:
  Matrix(int rows, int cols, const FieldSpec& fs);
  static Matrix identity(int n, const FieldSpec& fs);
  static Matrix from_columns(const std::vector<Vec>& cols, const FieldSpec& fs);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec column(int j) const;
  Vec row(int i) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Matrix pow(long long e) const;
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix mat;
  std::vector<int> pivot_cols;
  int rank;
};

Rref rref(const Matrix& m);
int rank(const Matrix& m);
/// Basis of {x : mx = 0}.
std::vector<Vec> kernel_basis(const Matrix& m);
/// One solution of mx = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of F^n kept in reduced row-echelon form, so equal subspaces
/// have identical stored bases.
class Subspace {
 public:
  Subspace(int ambient_dim, const FieldSpec& fs);
  static Subspace span(const std::vector<Vec>& vectors, int ambient_dim, const FieldSpec& fs);

  /// Adds a vector; returns true if the dimension grew.
  bool insert(const Vec& v);
  /// Residual of v after elimination against the basis.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains_all(const std::vector<Vec>& vs) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }
  const std::vector<Vec>& basis() const { return rows_; }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  int ambient_;
  FieldSpec field_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace rbalg

#endif
