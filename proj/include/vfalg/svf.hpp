#pragma once

// Super vector fields, superbrackets, differential forms and graded spans.

#include "vfalg/linalg.hpp"
#include "vfalg/superpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vfalg {

// X = sum_i X^i d_i, coefficients written to the left of the derivatives.
class SuperVectorField {
 public:
  explicit SuperVectorField(Coords coords);
  static SuperVectorField partial(Coords coords, std::size_t direction);
  static SuperVectorField partial(Coords coords, std::string_view direction);

  const Coords& coords() const { return coords_; }
  std::size_t dim() const { return comps_.size(); }
  const SuperPolynomial& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<SuperPolynomial>& components() const { return comps_; }
  void set(std::size_t i, SuperPolynomial p);
  void add(std::size_t i, const SuperPolynomial& p);

  bool is_zero() const;
  std::optional<Parity> parity() const;
  WeightedDegree weighted_degree() const;
  SuperVectorField part(Parity p) const;

  // X(f) = sum_i X^i d_i f
  SuperPolynomial apply(const SuperPolynomial& f) const;

  SuperVectorField& operator+=(const SuperVectorField& o);
  SuperVectorField& operator-=(const SuperVectorField& o);
  SuperVectorField& operator*=(const Rational& c);
  friend SuperVectorField operator+(SuperVectorField a, const SuperVectorField& b) { return a += b; }
  friend SuperVectorField operator-(SuperVectorField a, const SuperVectorField& b) { return a -= b; }
  friend SuperVectorField operator*(const Rational& c, SuperVectorField a) { return a *= c; }
  friend SuperVectorField operator*(SuperVectorField a, const Rational& c) { return a *= c; }
  SuperVectorField operator-() const { return *this * Rational(-1); }
  // f * X, multiplying every coefficient on the left.
  friend SuperVectorField operator*(const SuperPolynomial& f, const SuperVectorField& x);

  bool operator==(const SuperVectorField& o) const;

  std::string to_string() const;

 private:
  Coords coords_;
  std::vector<SuperPolynomial> comps_;
};

inline std::ostream& operator<<(std::ostream& os, const SuperVectorField& x) {
  return os << x.to_string();
}

// [X,Y]^j = X(Y^j) - (-1)^{|X||Y|} Y(X^j). Throws on inhomogeneous parity.
SuperVectorField bracket(const SuperVectorField& x, const SuperVectorField& y);
// Bilinear extension over the parity components of both arguments.
SuperVectorField bracket_split(const SuperVectorField& x, const SuperVectorField& y);

// (-1)^{|X||Z|}[X,[Y,Z]] + (-1)^{|Y||X|}[Y,[Z,X]] + (-1)^{|Z||Y|}[Z,[X,Y]]
SuperVectorField super_jacobiator(const SuperVectorField& x, const SuperVectorField& y,
                                  const SuperVectorField& z);

// div X = sum_mu (-1)^{|X||mu| + |mu|} d_mu X^mu
SuperPolynomial divergence(const SuperVectorField& x);

// Deformed divergence on (tau, u^1..u^n, theta_1..theta_n):
// 2(-)^{|M_f|} (d^2 f/du^i dtheta_i + (u^i d/du^i + theta_i d/dtheta_i - n beta) df/dtau)
SuperPolynomial div_beta(const SuperPolynomial& f, const Rational& beta, int n);

// Z = sum_i w_i x^i d_i
SuperVectorField grading_operator(const Coords& coords);

// Sparse coordinates of a field, keyed by (direction, monomial).
using FieldKey = std::pair<std::size_t, Monomial>;
SparseVector field_vector(const SuperVectorField& x, KeyIndex<FieldKey>& index);
SuperVectorField field_from_vector(const Coords& coords, const SparseVector& v,
                                   const KeyIndex<FieldKey>& index);

// Differential forms on a superspace, realized as polynomials on the doubled
// space with generators x^i and dx^i, |dx^i| = |x^i| + 1. The product is the
// supercommutative one, so Koszul signs use total parity.
class FormSpace {
 public:
  explicit FormSpace(Coords base);

  const Coords& base() const { return base_; }
  const Coords& ext() const { return ext_; }
  std::size_t differential_index(std::size_t i) const { return base_->size() + i; }

  SuperPolynomial function(const SuperPolynomial& f) const;  // embed a function
  SuperPolynomial dx(std::size_t i) const;
  SuperPolynomial dx(std::string_view name) const;

  SuperPolynomial d(const SuperPolynomial& form) const;
  SuperPolynomial interior(const SuperVectorField& x, const SuperPolynomial& form) const;
  SuperPolynomial lie_derivative(const SuperVectorField& x, const SuperPolynomial& form) const;

  // The derivations on the doubled space.
  SuperVectorField d_field() const;
  SuperVectorField interior_field(const SuperVectorField& x) const;
  SuperVectorField lie_field(const SuperVectorField& x) const;  // [i_X, d]

  std::string to_string(const SuperPolynomial& form) const;

 private:
  Coords base_;
  Coords ext_;
};

// Basis of g_k for each degree k of a Weisfeiler-graded algebra of vector fields.
struct GradedSpan {
  Coords coords;
  std::map<int, std::vector<SuperVectorField>> pieces;

  int depth() const;  // -(most negative occupied degree)
  std::size_t dim(int k) const;
  std::vector<SuperVectorField> all() const;
};

// Linear span of vector fields with exact membership tests.
class FieldSpan {
 public:
  explicit FieldSpan(Coords coords) : coords_(std::move(coords)) {}
  FieldSpan(Coords coords, const std::vector<SuperVectorField>& gens);

  bool add(const SuperVectorField& x);  // true if independent
  bool contains(const SuperVectorField& x);
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SuperVectorField>& basis() const { return basis_; }
  // Coefficients c with x = sum c_j basis_j, if x lies in the span.
  std::optional<std::vector<Rational>> express(const SuperVectorField& x);

 private:
  Coords coords_;
  KeyIndex<FieldKey> index_;
  Echelon echelon_;
  std::vector<SuperVectorField> basis_;
};

bool same_span(const Coords& coords, const std::vector<SuperVectorField>& a,
               const std::vector<SuperVectorField>& b);

}  // namespace vfalg
