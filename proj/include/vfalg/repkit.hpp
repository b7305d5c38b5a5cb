#pragma once

// sl(3)+sl(2)+gl(1) weight bookkeeping for the vle(3|6) form modules and the
// fermion assignment table.

#include "vfalg/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace vfalg {

struct Weight {
  int p = 0, q = 0;  // sl(3)
  int r = 0;         // sl(2)
  Rational y = 0;    // gl(1) hypercharge
  bool operator==(const Weight& o) const { return p == o.p && q == o.q && r == o.r && y == o.y; }
  std::string to_string() const;  // "(p,q;r;y)"
};

enum class Family { A, B, C, D };

// Omega_A(p,r), Omega_B(p,r), Omega_C(q,r), Omega_D(q,r)
struct FormModuleId {
  Family family = Family::A;
  int a = 0;  // p for A and B, q for C and D
  int r = 0;
  bool operator==(const FormModuleId&) const = default;
  std::string to_string() const;
};

// y/2 + r/2 down to y/2 - r/2 in unit steps.
std::vector<Rational> electric_charges(const Weight& w);
Weight form_module_weight(const FormModuleId& id);
// Every id whose formula produces w.
std::vector<FormModuleId> classify_weight(const Weight& w);
FormModuleId cp_conjugate(const FormModuleId& id);
Rational hypercharge_from_grading(const Rational& z);  // Y = Z/3
Integer irrep_dimension(const Weight& w);

struct ParticleRow {
  Weight multiplet;
  std::vector<Rational> printed_charges;  // in table order
  std::array<std::string, 3> names;       // one label per generation
  std::optional<FormModuleId> printed_form;
  std::vector<Rational> charges;  // electric_charges(multiplet)
  std::vector<FormModuleId> classified;
  bool charges_match = false;     // as multisets
  bool form_matches = false;
  std::string discrepancy;        // empty when consistent
};

std::vector<ParticleRow> fermion_table();

}  // namespace vfalg
