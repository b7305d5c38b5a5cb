#pragma once

// The multi-dimensional Virasoro algebra in the Fourier basis: generators
// L_mu(m), S^mu(m) (and formal F^{nu rho}(m) for gauge shifts), with
// coefficients polynomial in the cocycle parameters c1, c2. Indices mu are
// 1-based throughout.

#include "vfalg/rational.hpp"
#include "vfalg/svf.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vfalg {

using Mode = std::vector<int>;

// Polynomial in c1, c2: (e1, e2) -> coefficient of c1^e1 c2^e2.
class CPoly {
 public:
  CPoly() = default;
  CPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static CPoly c1();
  static CPoly c2();

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  Rational coefficient(int e1, int e2) const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  CPoly operator-() const;
  bool operator==(const CPoly&) const = default;

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

struct TGen {
  enum class Kind : std::uint8_t { L, S, F } kind = Kind::L;
  int mu = 1;   // L_mu, S^mu, or the first index of F
  int rho = 0;  // second index of F
  Mode mode;
  auto operator<=>(const TGen&) const = default;
  std::string to_string() const;
};

class ToroidalElement {
 public:
  explicit ToroidalElement(int n = 1) : n_(n) {}
  static ToroidalElement L(int mu, Mode m, const CPoly& c = Rational(1));
  static ToroidalElement S(int mu, Mode m, const CPoly& c = Rational(1));
  // F^{nu rho}(m), antisymmetric in (nu, rho)
  static ToroidalElement F(int nu, int rho, Mode m, const CPoly& c = Rational(1));

  int dim() const { return n_; }
  const std::map<TGen, CPoly>& terms() const { return terms_; }
  void add(const TGen& g, const CPoly& c);
  bool is_zero() const { return terms_.empty(); }
  CPoly coefficient(const TGen& g) const;

  ToroidalElement& operator+=(const ToroidalElement& o);
  ToroidalElement& operator-=(const ToroidalElement& o);
  friend ToroidalElement operator+(ToroidalElement a, const ToroidalElement& b) { return a += b; }
  friend ToroidalElement operator-(ToroidalElement a, const ToroidalElement& b) { return a -= b; }
  friend ToroidalElement operator*(const CPoly& c, const ToroidalElement& x);
  bool operator==(const ToroidalElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  int n_;
  std::map<TGen, CPoly> terms_;
};

// Eliminates S^{mu*}(m), mu* the first index with m_mu* != 0, using
// m_mu S^mu(m) = 0; orders F indices.
ToroidalElement canonicalize(const ToroidalElement& x);

ToroidalElement tbracket(const ToroidalElement& x, const ToroidalElement& y);
ToroidalElement jacobiator(const ToroidalElement& x, const ToroidalElement& y,
                           const ToroidalElement& z);

// Basis of the quotient with modes in {-r..r}^N: all L_mu(m), all S^mu(0),
// and S^mu(m), mu != mu*(m), for m != 0.
std::vector<ToroidalElement> toroidal_basis(int n, int range);

struct SweepReport {
  int n = 0;
  int range = 0;
  std::uint64_t triples_checked = 0;
  std::vector<std::string> failures;
};
// Jacobiator over all unordered triples (with repetition) of the basis,
// via integer coefficient arithmetic linear in (1, c1, c2).
SweepReport toroidal_sweep(int n, int range);
// The same Jacobiator through the symbolic path on random triples; returns
// the number of disagreements between the two paths.
std::size_t compare_sweep_paths(int n, int range, std::size_t samples, std::uint64_t seed);

struct GaugeField {
  int n = 2;
  std::map<std::tuple<int, int, Mode>, Rational> values;  // (nu, rho, mode), nu < rho
  Rational at(int nu, int rho, const Mode& m) const;     // antisymmetric extension
};

struct GaugeShiftReport {
  std::size_t ls_checks = 0;
  std::vector<std::string> ls_failures;
  std::size_t cocycle_checks = 0;
  std::vector<std::string> cocycle_failures;
  std::size_t f_jacobi_checks = 0;
  std::vector<std::string> f_jacobi_failures;
  bool ok() const { return ls_failures.empty() && cocycle_failures.empty() && f_jacobi_failures.empty(); }
};

// S^nu(n) -> S^nu(n) + n_rho F^{nu rho}(n) applied to an element.
ToroidalElement gauge_substitute(const ToroidalElement& x);
// Verifies the [L,S] law for the shifted S on `instances` random
// combinations, the substituted LL cocycle, and Jacobi with F generators.
GaugeShiftReport gauge_shift(int n, int range, std::size_t instances, std::uint64_t seed);
// (c1 m_nu n_mu + c2 m_mu n_nu) m_rho n_sigma F^{rho sigma}(m+n) evaluated on F.
CPoly cocycle_gain(const GaugeField& f, int mu, const Mode& m, int nu, const Mode& n);

struct NearCentralRow {
  int mu = 0, nu = 0;
  Mode n;
  ToroidalElement direct;     // [L_mu(-n), S^nu(n)]
  ToroidalElement displayed;  // -delta^nu_mu n_rho S^rho(0)
  bool closed_form_holds = false;  // direct == n_mu S^nu(0) - delta^nu_mu n_rho S^rho(0)
};
struct NearCentralReport {
  int n = 0;
  std::vector<NearCentralRow> rows;
  bool identity_holds = false;         // closed form on every row
  bool obstruction_spans_center = false;  // nonzero unless all S(0) vanish
  std::size_t displayed_mismatches = 0;
};
NearCentralReport near_central_report(int n, int range);

struct VirasoroReport {
  bool s_content_only_at_zero = false;
  bool cubic_coefficient = false;  // [L_m, L_-m] S_0-coefficient = c m^3, c = -(c1 + c2)
  std::optional<CPoly> lambda;     // L_0 -> L_0 + lambda S_0
  std::optional<CPoly> kappa;      // resulting coefficient kappa (m^3 - m)
  ToroidalElement l2_lm2;          // [L_2, L_-2] in terms of c1, c2
  bool ok() const { return s_content_only_at_zero && cubic_coefficient && lambda.has_value(); }
};
VirasoroReport reduce_to_virasoro(int range = 4);

// L_mu(m) -> z^m z_mu d/dz_mu on nonnegative modes; compares brackets of the
// S = 0 quotient with the vector-field bracket on random triples.
struct WittReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
};
WittReport witt_cross_check(int n, std::size_t triples, std::uint64_t seed);

}  // namespace vfalg
