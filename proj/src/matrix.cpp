#include "rbalg/matrix.hpp"

#include <algorithm>

namespace rbalg {

Vec vec_zero(int n, const FieldSpec& fs) { return Vec(n, Scalar::zero(fs)); }

Vec vec_basis(int n, int i, const FieldSpec& fs) {
  Vec v = vec_zero(n, fs);
  v[i] = Scalar::one(fs);
  return v;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Matrix::Matrix(int rows, int cols, const FieldSpec& fs)
    : rows_(rows), cols_(cols), field_(fs),
      a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(fs)) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("Matrix: nonpositive dimension");
}

Matrix Matrix::identity(int n, const FieldSpec& fs) {
  Matrix m(n, n, fs);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(fs);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, const FieldSpec& fs) {
  if (cols.empty()) throw std::invalid_argument("Matrix: no columns");
  Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()), fs);
  for (int j = 0; j < m.cols(); ++j) {
    if (cols[j].size() != static_cast<std::size_t>(m.rows()))
      throw std::invalid_argument("Matrix: ragged columns");
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(int j) const {
  Vec v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Vec Matrix::row(int i) const {
  Vec v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix+: shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix-: shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix*: shape mismatch");
  Matrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(*this);
  for (auto& x : r.a_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(long long e) const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: not square");
  if (e < 0) throw std::invalid_argument("Matrix::pow: negative exponent");
  Matrix acc = identity(rows_, field_);
  Matrix base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
  Vec r = vec_zero(rows_, field_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      if (at(i, j).is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_, field_);
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

Rref rref(const Matrix& m) {
  Matrix a(m);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(a), std::move(pivots), r};
}

int rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec_zero(m.cols(), m.field());
    v[c] = Scalar::one(m.field());
    for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.mat.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  for (int c : r.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // inconsistent
  Vec x = vec_zero(m.cols(), m.field());
  for (int i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.mat.at(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  Rref r = rref(aug);
  if (r.rank < n || r.pivot_cols[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Subspace::Subspace(int ambient_dim, const FieldSpec& fs) : ambient_(ambient_dim), field_(fs) {}

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient_dim, const FieldSpec& fs) {
  Subspace s(ambient_dim, fs);
  for (const Vec& v : vectors) s.insert(v);
  return s;
}

bool Subspace::insert(const Vec& v) {
  Vec w = reduce(v);
  int pivot = -1;
  for (int i = 0; i < ambient_; ++i)
    if (!w[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) return false;
  Scalar inv = w[pivot].inverse();
  for (auto& x : w) x *= inv;
  // eliminate the new pivot from existing rows to keep the basis fully reduced
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][pivot].is_zero()) continue;
    Scalar f = rows_[r][pivot];
    for (int j = 0; j < ambient_; ++j) rows_[r][j] -= f * w[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

Vec Subspace::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("Subspace: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains_all(const std::vector<Vec>& vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](const Vec& v) { return contains(v); });
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    if (!vec_eq(a.rows_[i], b.rows_[i])) return false;
  return true;
}

}  // namespace rbalg
