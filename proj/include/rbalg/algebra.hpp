#ifndef RBALG_ALGEBRA_HPP
#define RBALG_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rbalg/matrix.hpp"
#include "rbalg/polynomial.hpp"

namespace rbalg {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Thrown when a product of a partial algebra (binomial-carry window) is
/// requested outside its defined window.
struct OutOfWindowError : std::domain_error {
  OutOfWindowError(int i, int j)
      : std::domain_error("product of basis elements " + std::to_string(i) + ", " +
                          std::to_string(j) + " is outside the defined window"),
        i(i), j(j) {}
  int i, j;
};

class Element;

/// Finite-dimensional algebra given by structure constants:
/// e_i * e_j = sum_k c[i][j][k] e_k.  Immutable after construction.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// `table` is dim^3 scalars, index (i*dim + j)*dim + k.  `defined`, when
  /// nonempty, is a dim^2 mask marking which basis products exist (used by
  /// the truncated binomial-carry algebra); everything else must pass it
  /// filled or empty.  A supplied unit is checked on every basis element.
  static AlgebraPtr create(std::string name, const FieldSpec& fs, int dim,
                           std::vector<Scalar> table, std::optional<Vec> unit,
                           std::vector<uint8_t> defined = {});

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  const std::optional<Vec>& unit() const { return unit_; }
  bool is_partial() const { return partial_; }
  bool product_defined(int i, int j) const {
    return defined_.empty() || defined_[static_cast<std::size_t>(i) * dim_ + j] != 0;
  }

  const Scalar& c(int i, int j, int k) const {
    return table_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  /// Nonzero structure constants of e_i * e_j as (k, c_ijk) pairs.
  const std::vector<std::pair<int, Scalar>>& products(int i, int j) const {
    return sparse_[static_cast<std::size_t>(i) * dim_ + j];
  }

  Element element(Vec coords) const;
  Element basis_element(int i) const;
  Element zero_element() const;
  Element unit_element() const;  // throws if not unital

  /// Product of coordinate vectors; throws OutOfWindowError when an undefined
  /// basis product is touched with a nonzero coefficient.
  Vec multiply_vec(const Vec& x, const Vec& y) const;

  struct Private {};
  Algebra(Private, std::string name, const FieldSpec& fs, int dim, std::vector<Scalar> table,
          std::optional<Vec> unit, std::vector<uint8_t> defined);

 private:
  std::string name_;
  FieldSpec field_;
  int dim_;
  std::vector<Scalar> table_;
  std::optional<Vec> unit_;
  std::vector<uint8_t> defined_;
  bool partial_ = false;
  std::vector<std::vector<std::pair<int, Scalar>>> sparse_;
};

/// Element of an algebra: a coordinate vector plus its home algebra.
class Element {
 public:
  Element(AlgebraPtr alg, Vec coords);

  const AlgebraPtr& algebra() const { return alg_; }
  const Vec& coords() const { return coords_; }
  bool is_zero() const { return vec_is_zero(coords_); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // algebra product
  Element scaled(const Scalar& c) const;
  Element operator-() const;

  /// Left-normed power a^k = ((a*a)*a)*...; pow(0) is the unit.
  Element pow(int k) const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  AlgebraPtr alg_;
  Vec coords_;
};

/// q(a) with left-normed powers; the constant term uses the unit.
Element eval_at_element(const Polynomial& q, const Element& a);

struct AlgebraPredicates {
  bool commutative = false;
  bool associative = false;
  bool unital = false;
  std::optional<Vec> unit;
};

/// Exact basis-triple checks; the unit is found by solving the linear system
/// for a two-sided unit.  Partial algebras are checked on in-window triples.
AlgebraPredicates algebra_predicates(const AlgebraPtr& a);

struct PlusMinusResult {
  AlgebraPtr algebra;
  /// The symmetrized product is degenerate over characteristic 2.
  bool char2_caution = false;
};

/// sign=+1: a o b = ab + ba;  sign=-1: [a,b] = ab - ba.
PlusMinusResult plus_minus_algebra(const AlgebraPtr& a, int sign);

/// Basis of the smallest subspace containing `gens` and closed under
/// multiplication.
std::vector<Element> span_closure(const AlgebraPtr& a, const std::vector<Element>& gens);

struct SubstructurePredicates {
  bool is_subalgebra = false;
  bool is_ideal = false;
  std::optional<bool> is_module_over;   // U closed under products with V
  std::optional<bool> direct_sum_with;  // span U ∩ span V = 0
};

SubstructurePredicates substructure_predicates(const AlgebraPtr& a, const std::vector<Element>& u,
                                               const std::vector<Element>* v = nullptr);

/// A-bimodule given by per-basis-element action matrices.
struct Bimodule {
  int dim = 0;
  std::vector<Matrix> left;   // left[i]  : m -> e_i * m
  std::vector<Matrix> right;  // right[i] : m -> m * e_i
};

Bimodule regular_bimodule(const AlgebraPtr& a);
bool bimodule_is_unital(const AlgebraPtr& a, const Bimodule& m);

/// Algebra on A (+) M with (a,m)(a',m') = (aa', a.m' + m.a') and M*M = 0.
AlgebraPtr semidirect_product(const AlgebraPtr& a, const Bimodule& m);

struct SubalgebraView {
  AlgebraPtr algebra;  // structure constants in the given basis
  Matrix embedding;    // ambient_dim x sub_dim, columns are the basis vectors
};

/// The span of `basis` must be closed under multiplication and the basis
/// linearly independent; products are re-expressed in that basis.
SubalgebraView subalgebra_as_algebra(const AlgebraPtr& a, const std::vector<Element>& basis);

/// Direct sum with block structure constants; unital iff every summand is.
AlgebraPtr direct_sum(const std::vector<AlgebraPtr>& parts);

}  // namespace rbalg

#endif
