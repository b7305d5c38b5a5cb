#pragma once

// Weisfeiler-graded pieces and Cartan prolongation, computed either by the
// recursive definition or as the algebra of fields preserving a structure.

#include "vfalg/svf.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vfalg {

enum class StructureKind {
  volume_form,     // div X = 0
  invariant_form,  // L_X w = 0 for each given form
  even_pfaff,      // L_X a^i = f^i_j a^j
  contact_pfaff,   // same condition, single form
  dual_pfaff,      // [D^a, X] = f^a_b D^b
  // div_beta(f) = 0 for the generating function f = i_X alpha of an odd
  // contact field; coordinates (tau, u^1..u^n, theta_1..theta_n).
  deformed_divergence,
};

std::string to_string(StructureKind k);

struct StructureSpec {
  StructureKind kind = StructureKind::volume_form;
  std::string label;
  // Forms live on FormSpace(coords).ext(); fields on coords.
  std::vector<SuperPolynomial> forms;
  std::vector<SuperVectorField> fields;
  Rational beta = 0;  // deformed_divergence only
  int n = 0;
};

// Multipliers f^i_j (rows indexed by the structure's forms or fields) such
// that the preservation identity holds for a given field.
struct Certificate {
  std::size_t structure = 0;
  std::vector<std::vector<SuperPolynomial>> multipliers;
  bool verified = false;  // substituted back and compared exactly
};

// All monomial fields m*d_j with weighted degree k, direction-major order.
std::vector<SuperVectorField> homogeneous_fields(const Coords& coords, int k);
std::vector<SuperVectorField> homogeneous_fields(const Coords& coords, int k, Parity p);

enum class ProlongMethod { recursion, preserver };

struct ProlongResult {
  GradedSpan span;
  ProlongMethod method = ProlongMethod::recursion;
  std::map<int, std::size_t> dims() const;
};

// Checks that g_neg together with g0 is graded by Z and closed under the
// bracket within degrees >= -depth; throws Error naming the offending bracket.
void verify_nonpositive_part(const GradedSpan& g);

// g_k = {X of degree k : [X, g_{-1}] in g_{k-1}} for 1 <= k <= kmax.
ProlongResult prolong_recursive(const GradedSpan& nonpositive, int kmax);
// {X of degree k : [X, g_{-1}] in g_{k-1}} for a single degree, given g_{k-1}.
std::vector<SuperVectorField> prolong_step(const GradedSpan& span, int k);

struct PreserverSolution {
  std::vector<SuperVectorField> basis;
  // certificates[i][s]: certificate of basis[i] for structure s (empty for
  // kinds without multipliers, still verified).
  std::vector<std::vector<Certificate>> certificates;
};

PreserverSolution preserver_solve(const Coords& coords, const std::vector<StructureSpec>& structures,
                                  int k);
// Degrees -depth..kmax of the preserver algebra.
ProlongResult prolong_preserver(const Coords& coords, const std::vector<StructureSpec>& structures,
                                int kmax);

// Solves for the multipliers of one field; nullopt if the field does not
// preserve the structure.
std::optional<Certificate> find_certificate(const Coords& coords, const StructureSpec& s,
                                            std::size_t index, const SuperVectorField& x);

struct CrossCheckRow {
  int degree = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  bool equal = false;
};

struct CrossCheckReport {
  bool ok = true;
  std::vector<CrossCheckRow> rows;
  std::string failure;  // names the first mismatching degree
};

CrossCheckReport cross_check(const ProlongResult& a, const ProlongResult& b);

// [Z,X] = deg(X) X and [g_i,g_j] in g_{i+j} over the computed degrees.
struct GradingReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
GradingReport verify_grading(const GradedSpan& span);

// Super-Jacobi on every triple of basis elements i <= j <= l.
GradingReport verify_jacobi(const std::vector<SuperVectorField>& basis);

}  // namespace vfalg
