#pragma once

// Polynomials in commuting (even) and anticommuting (odd) variables with
// exact rational coefficients and Weisfeiler weights.
//
// Sign conventions: the fermionic part of a monomial is kept in declaration
// order of the variables; derivatives are left derivatives (an odd variable
// is moved to the front, collecting a sign, then removed).

#include "vfalg/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vfalg {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int bit(Parity p) { return static_cast<int>(p); }
inline int sign_of(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }
std::string to_string(Parity p);

struct VarSpec {
  std::string name;
  Parity parity = Parity::even;
  int weight = 1;
};

class CoordSystem {
 public:
  explicit CoordSystem(std::vector<VarSpec> vars);

  std::size_t size() const { return vars_.size(); }
  const VarSpec& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<VarSpec>& vars() const { return vars_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent
  int max_weight() const;
  std::size_t even_count() const;
  std::size_t odd_count() const;
  std::string superdim() const;  // "n|m"

  bool operator==(const CoordSystem& other) const;

 private:
  std::vector<VarSpec> vars_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

using Coords = std::shared_ptr<const CoordSystem>;

Coords make_coords(std::vector<VarSpec> vars);
bool same_coords(const Coords& a, const Coords& b);

// Exponent vector over all variables of a coordinate system; odd exponents are 0 or 1.
struct Monomial {
  std::vector<std::uint8_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps(n, 0) {}

  unsigned total_degree() const;
  bool operator==(const Monomial&) const = default;
  // Graded lexicographic: lower total degree first, then larger leading exponent first.
  std::strong_ordering operator<=>(const Monomial& o) const;
};

int weighted_degree(const CoordSystem& cs, const Monomial& m);
Parity parity_of(const CoordSystem& cs, const Monomial& m);

// Product of monomials: sign is 0 when an odd variable repeats.
struct SignedMonomial {
  int sign = 0;
  Monomial mono;
};
SignedMonomial multiply(const CoordSystem& cs, const Monomial& a, const Monomial& b);

struct WeightedDegree {
  enum class Kind { homogeneous, inhomogeneous, any } kind = Kind::any;
  int value = 0;
  bool operator==(const WeightedDegree&) const = default;
};

class SuperPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit SuperPolynomial(Coords coords);
  static SuperPolynomial constant(Coords coords, const Rational& c);
  static SuperPolynomial variable(Coords coords, std::size_t index);
  static SuperPolynomial variable(Coords coords, std::string_view name);
  static SuperPolynomial monomial(Coords coords, Monomial m, const Rational& c = 1);

  const Coords& coords() const { return coords_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  SuperPolynomial& operator*=(const Rational& c);
  SuperPolynomial operator-() const;

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }
  friend SuperPolynomial operator*(const Rational& c, SuperPolynomial a) { return a *= c; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);

  bool operator==(const SuperPolynomial& o) const;

  // nullopt when terms of both parities are present; the zero polynomial is even.
  std::optional<Parity> parity() const;
  SuperPolynomial part(Parity p) const;
  WeightedDegree weighted_degree() const;
  SuperPolynomial homogeneous_part(int degree) const;

  std::string to_string() const;

 private:
  Coords coords_;
  TermMap terms_;
};

SuperPolynomial partial(const SuperPolynomial& a, std::size_t var);
SuperPolynomial partial(const SuperPolynomial& a, std::string_view var);

// Re-expresses a polynomial in a coordinate system whose leading variables
// coincide with those of a.coords() (used for form spaces and jet spaces).
SuperPolynomial embed(const SuperPolynomial& a, const Coords& target);
// Inverse of embed; throws if a term involves variables beyond the prefix.
SuperPolynomial restrict_to(const SuperPolynomial& a, const Coords& target);

// All monomials of the given weighted degree (deterministic order).
std::vector<Monomial> monomials_of_weight(const CoordSystem& cs, int weight);

std::string monomial_to_string(const CoordSystem& cs, const Monomial& m);

inline std::ostream& operator<<(std::ostream& os, const SuperPolynomial& p) {
  return os << p.to_string();
}

}  // namespace vfalg
