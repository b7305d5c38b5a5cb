#pragma once

// Constructors and verifiers for the simple vector-field superalgebras:
// the series by their preserved structures, the exceptions vle(3|6),
// ksle(5|10) likewise, and mb(3|8) by explicit non-positive generators.

#include "vfalg/prolong.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vfalg {

struct NamedField {
  std::string name;
  int degree = 0;
  SuperVectorField field;
};

struct AlgebraDescriptor {
  std::string name;  // canonical, e.g. "vle(3|6)"
  Coords coords;
  std::vector<StructureSpec> structures;
  int depth = 0;
  std::string superdim() const { return coords->superdim(); }
};

struct BuiltAlgebra {
  AlgebraDescriptor desc;
  GradedSpan span;                  // g_{-d} .. g_0
  std::vector<NamedField> named;    // explicit generators, when the paper lists them
};

// Accepts vect(n|m), svect(n|m), h(n|m), le(n), sle(n), k(n|m), m(n),
// sm_<beta>(n), vle(3|6), ksle(5|10), mb(3|8) and the short forms vle36,
// ksle510, mb38. Throws Error("out of scope: ...") for kas, vas and the
// deformed series.
BuiltAlgebra build(std::string_view name);
std::string canonical_name(std::string_view name);

// Sign and index conventions for the mb(3|8) formulas.
struct Mb38Convention {
  bool raise_theta = false;  // theta^a_i = eps^{ab} theta_{ib} instead of theta_{ia}
  bool raise_eth = false;    // eth^a = eps^{ab} eth_b instead of eth_a
  int eps12 = 1;             // eps^{12}
  int eps123 = 1;            // eps^{123}
  std::string to_string() const;
  bool operator==(const Mb38Convention&) const = default;
};

struct Mb38Generators {
  Coords coords;
  std::vector<NamedField> generators;  // F_a, E_i, D^{ia}, I^k_l (8), J^c_d (3), Z
  std::vector<NamedField> dual;        // the dual Pfaff system
  // I^k_l and J^c_d for all index pairs including the dependent diagonal ones.
  std::vector<std::vector<SuperVectorField>> I, J;
};

Coords mb38_coords();
Mb38Generators mb38_generators(const Mb38Convention& c);
std::vector<Mb38Convention> mb38_candidate_conventions();

struct ConventionTrial {
  Mb38Convention convention;
  bool grading_ok = false;
  bool closure_ok = false;
  bool preservation_ok = false;
  bool g0_ok = false;
  bool passes() const { return grading_ok && closure_ok && preservation_ok && g0_ok; }
};
struct ConventionSearch {
  std::vector<ConventionTrial> trials;
  std::optional<Mb38Convention> chosen;  // first passing candidate
};
ConventionSearch mb38_convention_search();
// The pinned convention (first passing candidate).
const Mb38Convention& mb38_convention();

struct Check {
  std::string what;
  bool ok = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  void add(std::string what, bool ok, std::string detail = {});
};

// Certificates for every generator and every structure. For mb(3|8) also
// records that d/du^1 is rejected (expected negative).
CheckReport verify_preservation(const BuiltAlgebra& a);

struct StructureConstant {
  std::string x, y;
  std::vector<std::pair<std::string, Rational>> result;  // expansion in named basis
};

struct G0Report {
  CheckReport checks;
  std::vector<StructureConstant> table;
};
// sl(3)+sl(2)+gl(1) relations of g_0 for mb(3|8) and vle(3|6).
G0Report verify_g0_structure(const BuiltAlgebra& a);

// Brackets of named generators at negative degrees expanded in the named basis.
std::vector<StructureConstant> negative_bracket_table(const BuiltAlgebra& a);

enum class Consistency { consistent, inconsistent };
Consistency consistency_check(const GradedSpan& span);

struct Regrading {
  std::string name;
  std::string superdim;
  int depth = 0;
};
const std::vector<Regrading>& regrading_table();
std::vector<Regrading> regrading_lookup(std::string_view name);

}  // namespace vfalg
