#pragma once

// vect(N) acting on tensor-valued p-jets along an observer trajectory, the
// classical (unordered) realization in terms of (q, p, phi, pi), and a
// truncated Koszul-Tate complex.

#include "vfalg/svf.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace vfalg {

using MultiIndex = std::vector<int>;
using RMatrix = std::vector<std::vector<Rational>>;

int order(const MultiIndex& m);
// All multi-indices of length n with |m| <= p, by order and then
// lexicographically descending.
std::vector<MultiIndex> multi_indices(int n, int p);

// Matrices T^mu_nu (1-based in the names, 0-based in storage) satisfying
// [T^mu_nu, T^rho_sigma] = delta^rho_nu T^mu_sigma - delta^mu_sigma T^rho_nu.
class TensorRep {
 public:
  // Throws when the gl(N) relations fail.
  TensorRep(int n, std::size_t dim, std::vector<std::vector<RMatrix>> t, std::string label = "custom");
  static TensorRep scalar_density(int n, const Rational& lambda);
  static TensorRep vector(int n);    // T^mu_nu = -E_{nu mu}
  static TensorRep covector(int n);  // T^mu_nu = E_{mu nu}

  int n() const { return n_; }
  std::size_t dim() const { return dim_; }
  const RMatrix& t(int mu, int nu) const { return t_[mu][nu]; }
  const std::string& label() const { return label_; }

 private:
  int n_;
  std::size_t dim_;
  std::vector<std::vector<RMatrix>> t_;
  std::string label_;
};

// [L_xi, phi_{m,a}] = -sum_{n,b} T^n_m(xi)_{ab} phi_{n,b}; entries are
// polynomials in the base point.
class JetActionMatrix {
 public:
  JetActionMatrix(Coords coords, int p, std::size_t dim);

  const Coords& coords() const { return coords_; }
  int p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  std::size_t position(const MultiIndex& m) const;

  const SuperPolynomial& entry(std::size_t n, std::size_t m, std::size_t a, std::size_t b) const;
  void set(std::size_t n, std::size_t m, std::size_t a, std::size_t b, SuperPolynomial v);
  bool block_triangular() const;  // entry (n, m) vanishes unless |n| <= |m|
  bool operator==(const JetActionMatrix& o) const { return entries_ == o.entries_; }

 private:
  std::size_t slot(std::size_t n, std::size_t m, std::size_t a, std::size_t b) const;
  Coords coords_;
  int p_;
  std::size_t dim_;
  std::vector<MultiIndex> indices_;
  std::vector<SuperPolynomial> entries_;
};

// Symbolic expansion of d_m([L_xi, phi](q)) + xi^mu(q) d_mu d_m phi(q) with
// [L_xi, phi] = -xi^mu d_mu phi - d_nu xi^mu T^nu_mu phi. Throws if terms of
// order |m| + 1 survive.
JetActionMatrix jet_matrices(const SuperVectorField& xi, int p, const TensorRep& rep);

struct RepCheck {
  bool ok = true;
  std::vector<std::string> residuals;
};
// [L_xi, [L_eta, f]] - [L_eta, [L_xi, f]] = [L_[xi,eta], f] for f = q^mu and
// f = phi_{m,a}, exactly in the base point.
RepCheck rep_property_check(const SuperVectorField& xi, const SuperVectorField& eta, int p,
                            const TensorRep& rep);

// int dt { xi^mu(q) p_mu + sum pi^{,m}_a C^{n}_{m}(q)_{ab} phi_{,n b} }. With
// [p_nu, q^mu] = delta and [pi^{,m}, phi_{,n}] = delta, reproducing
// [L_xi, phi_{,m}] = -T^n_m phi_{,n} requires C = -T.
struct ClassicalExpr {
  Coords coords;
  int p = 0;
  std::size_t dim = 1;
  std::vector<MultiIndex> indices;
  std::vector<SuperPolynomial> transport;  // coefficient of p_mu
  // (m, a, n, b) -> coefficient of pi^{,m}_a phi_{,n b}
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, SuperPolynomial> field;

  bool operator==(const ClassicalExpr& o) const;
  std::string to_string() const;
};
ClassicalExpr classical_realization(const SuperVectorField& xi, int p, const TensorRep& rep);
// Commutator of two expressions in the formal canonical algebra (no
// normal ordering).
ClassicalExpr canonical_bracket(const ClassicalExpr& a, const ClassicalExpr& b);

struct KTSetup {
  Coords fields;                          // phi_alpha with parities and weights
  std::vector<SuperPolynomial> equations;  // E^alpha over `fields`, weighted homogeneous
  int cutoff = 4;                         // largest weighted degree kept
};

struct KTComplex {
  Coords coords;           // fields followed by antifields "<name>*"
  SuperVectorField delta;  // sum_alpha E^alpha d/dphi*^alpha
  std::size_t nfields = 0;
  int afn(const Monomial& m) const;
};
// Antifield weights equal the weights of their equations (the field's own
// weight for E = 0), so delta preserves weighted degree.
KTComplex kt_complex(const KTSetup& setup);

struct KTReport {
  std::map<int, std::map<int, std::size_t>> dims;  // g -> degree -> dim H^g
  bool delta_squared_zero = false;
  std::size_t total(int g) const;
};
KTReport kt_cohomology(const KTSetup& setup, int gmax);

}  // namespace vfalg
