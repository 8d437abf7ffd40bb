#include "rbalg/polynomial.hpp"

namespace rbalg {

Polynomial::Polynomial(Vec coeffs, const FieldSpec& fs) : field_(fs), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_)
    if (c.field() != fs) throw std::invalid_argument("Polynomial: mixed fields");
  normalize();
}

Polynomial Polynomial::constant(const Scalar& c) {
  return Polynomial(Vec{c}, c.field());
}

Polynomial Polynomial::linear(const Scalar& shift) {
  return Polynomial(Vec{shift, Scalar::one(shift.field())}, shift.field());
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[i];
}

const Scalar& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("Polynomial: zero has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (field_ != o.field_) throw std::invalid_argument("Polynomial+: mixed fields");
  Vec c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c), field_);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(-Scalar::one(field_));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (field_ != o.field_) throw std::invalid_argument("Polynomial*: mixed fields");
  if (is_zero() || o.is_zero()) return zero(field_);
  Vec c(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(c), field_);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Vec r(coeffs_);
  for (auto& x : r) x *= c;
  return Polynomial(std::move(r), field_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::derivative() const {
  if (degree() <= 0) return zero(field_);
  Vec r;
  r.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.push_back(coeffs_[i] * Scalar::from_int(static_cast<long long>(i), field_));
  return Polynomial(std::move(r), field_);
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("Polynomial: division by zero");
  if (field_ != d.field_) throw std::invalid_argument("Polynomial/: mixed fields");
  Vec rem(coeffs_);
  int dd = d.degree();
  Scalar lead_inv = d.leading().inverse();
  if (degree() < dd) return {zero(field_), *this};
  Vec quot(degree() - dd + 1, Scalar::zero(field_));
  for (int i = degree(); i >= dd; --i) {
    Scalar f = rem[i] * lead_inv;
    if (f.is_zero()) continue;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeffs_[j];
  }
  return {Polynomial(std::move(quot), field_), Polynomial(std::move(rem), field_)};
}

bool Polynomial::divisible_by(const Polynomial& d) const { return divmod(d).second.is_zero(); }

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::eval(const Matrix& m) const {
  if (m.rows() != m.cols()) throw std::invalid_argument("Polynomial::eval: matrix not square");
  Matrix acc(m.rows(), m.cols(), field_);
  Matrix id = Matrix::identity(m.rows(), field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * m + id.scaled(*it);
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = coeffs_[i].str();
    if (i == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && vec_eq(a.coeffs_, b.coeffs_);
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field());
  Polynomial g = poly_gcd(a, b);
  return (a * b).divmod(g).first.monic();
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minimal_polynomial: not square");
  const FieldSpec& fs = m.field();
  int n = m.rows();
  Polynomial result = Polynomial::one(fs);
  for (int j = 0; j < n; ++j) {
    // Skip basis vectors already annihilated by the lcm so far.
    Vec v = vec_basis(n, j, fs);
    if (vec_is_zero(result.eval(m).apply(v))) continue;
    // Krylov sequence v, mv, m^2 v, ... with coefficient tracking: when the
    // next power falls into the span, the tracked combination is the local
    // minimal polynomial of v.
    Subspace seen(n, fs);
    std::vector<Vec> krylov;       // reduced vectors matching `exprs`
    std::vector<Vec> exprs;        // expression in powers of m (length n+1)
    Vec cur = v;
    for (int step = 0; step <= n; ++step) {
      Vec expr = vec_zero(n + 1, fs);
      expr[step] = Scalar::one(fs);
      // reduce cur against stored vectors, tracking the expression
      Vec red = cur;
      for (std::size_t r = 0; r < krylov.size(); ++r) {
        // krylov[r] has a known pivot; eliminate it
        int pivot = -1;
        for (int i = 0; i < n; ++i)
          if (!krylov[r][i].is_zero()) {
            pivot = i;
            break;
          }
        const Scalar& c = red[pivot];
        if (c.is_zero()) continue;
        Scalar f = c / krylov[r][pivot];
        for (int i = 0; i < n; ++i) red[i] -= f * krylov[r][i];
        for (int i = 0; i <= n; ++i) expr[i] -= f * exprs[r][i];
      }
      if (vec_is_zero(red)) {
        Polynomial local(expr, fs);
        result = poly_lcm(result, local.monic());
        break;
      }
      krylov.push_back(red);
      exprs.push_back(expr);
      cur = m.apply(cur);
    }
    if (result.degree() == n) break;  // cannot grow further
  }
  return result;
}

ZeroShiftFactors factor_zero_shift(const Polynomial& q, const Scalar& lambda) {
  if (q.is_zero()) throw std::invalid_argument("factor_zero_shift: zero polynomial");
  if (q.field() != lambda.field()) throw std::invalid_argument("factor_zero_shift: mixed fields");
  ZeroShiftFactors out{0, 0, q};
  Polynomial x = Polynomial::x(q.field());
  while (out.rest.degree() >= 1 && out.rest.coeff(0).is_zero()) {
    out.rest = out.rest.divmod(x).first;
    ++out.k;
  }
  if (!lambda.is_zero()) {
    Polynomial shift = Polynomial::linear(lambda);  // x + lambda
    while (out.rest.degree() >= 1 && out.rest.eval(-lambda).is_zero()) {
      out.rest = out.rest.divmod(shift).first;
      ++out.l;
    }
  }
  return out;
}

SquarefreeResult poly_is_squarefree(const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("poly_is_squarefree: zero polynomial");
  if (q.degree() == 0) return {true, false};
  Polynomial d = q.derivative();
  if (d.is_zero()) return {false, true};  // only over GF(p): q is a polynomial in x^p
  return {poly_gcd(q, d).degree() == 0, false};
}

}  // namespace rbalg
