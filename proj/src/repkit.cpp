#include "vfalg/repkit.hpp"

#include <algorithm>

namespace vfalg {

std::string Weight::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ";" + std::to_string(r) + ";" +
         vfalg::to_string(y) + ")";
}

std::string FormModuleId::to_string() const {
  static const char* names = "ABCD";
  return std::string("Omega_") + names[static_cast<int>(family)] + "(" + std::to_string(a) + "," +
         std::to_string(r) + ")";
}

std::vector<Rational> electric_charges(const Weight& w) {
  if (w.r < 0) throw Error("electric_charges: negative sl(2) weight");
  std::vector<Rational> out;
  for (int k = 0; k <= w.r; ++k) {
    Rational c = w.y / 2 + Rational(w.r - 2 * k, 2);
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

Weight form_module_weight(const FormModuleId& id) {
  if (id.a < 0 || id.r < 0) throw Error("form_module_weight: negative parameter");
  Rational two_thirds(2, 3);
  Weight w;
  w.r = id.r;
  switch (id.family) {
    case Family::A:
      w.p = id.a;
      w.y = two_thirds * id.a - id.r;
      break;
    case Family::B:
      w.p = id.a;
      w.y = two_thirds * id.a + id.r + 2;
      break;
    case Family::C:
      w.q = id.a;
      w.y = -two_thirds * id.a - id.r - 2;
      break;
    case Family::D:
      w.q = id.a;
      w.y = -two_thirds * id.a + id.r;
      break;
  }
  w.y.canonicalize();
  return w;
}

std::vector<FormModuleId> classify_weight(const Weight& w) {
  std::vector<FormModuleId> out;
  if (w.p < 0 || w.q < 0 || w.r < 0) return out;
  // A and B need q = 0 and fix (p, r); C and D need p = 0 and fix (q, r).
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    bool sl3_first = f == Family::A || f == Family::B;
    if (sl3_first ? w.q != 0 : w.p != 0) continue;
    FormModuleId id{f, sl3_first ? w.p : w.q, w.r};
    if (form_module_weight(id) == w) out.push_back(id);
  }
  return out;
}

FormModuleId cp_conjugate(const FormModuleId& id) {
  static const Family swap[] = {Family::D, Family::C, Family::B, Family::A};
  return {swap[static_cast<int>(id.family)], id.a, id.r};
}

Rational hypercharge_from_grading(const Rational& z) {
  Rational y = z / 3;
  y.canonicalize();
  return y;
}

Integer irrep_dimension(const Weight& w) {
  Integer sl3 = Integer(w.p + 1) * (w.q + 1) * (w.p + w.q + 2) / 2;
  return sl3 * (w.r + 1);
}

std::vector<ParticleRow> fermion_table() {
  auto q = [](int a, int b) { return Rational(a, b); };
  using F = Family;
  struct Printed {
    Weight w;
    std::vector<Rational> charges;
    std::array<std::string, 3> names;
    std::optional<FormModuleId> form;
  };
  const std::vector<Printed> printed = {
      {{0, 1, 1, q(1, 3)}, {q(2, 3), q(-1, 3)}, {"(u_L,d_L)", "(c_L,s_L)", "(t_L,b_L)"}, FormModuleId{F::D, 1, 1}},
      {{1, 0, 1, q(-1, 3)}, {q(-2, 3), q(1, 3)}, {"(~u_R,~d_R)", "(~c_R,~s_R)", "(~t_R,~b_R)"}, FormModuleId{F::A, 1, 1}},
      {{1, 0, 0, q(-4, 3)}, {q(-2, 3)}, {"~u_L", "~c_L", "~t_L"}, std::nullopt},
      {{0, 1, 0, q(4, 3)}, {q(2, 3)}, {"u_R", "c_R", "t_R"}, std::nullopt},
      {{0, 1, 0, q(-2, 3)}, {q(-1, 3)}, {"d_R", "s_R", "b_R"}, FormModuleId{F::D, 1, 0}},
      {{1, 0, 0, q(2, 3)}, {q(1, 3)}, {"~d_L", "~s_L", "~b_L"}, FormModuleId{F::A, 1, 0}},
      {{0, 0, 1, -1}, {0, -1}, {"(nu_eL,e_L)", "(nu_muL,mu_L)", "(nu_tauL,tau_L)"}, FormModuleId{F::A, 0, 1}},
      {{0, 0, 1, 1}, {0, 1}, {"(~nu_eR,~e_R)", "(~nu_muR,~mu_R)", "(~nu_tauR,~tau_R)"}, FormModuleId{F::D, 0, 1}},
      {{0, 0, 0, 2}, {1}, {"~e_L", "~mu_L", "~tau_L"}, FormModuleId{F::C, 0, 0}},
      {{0, 0, 0, -2}, {-1}, {"e_R", "mu_R", "tau_R"}, FormModuleId{F::B, 0, 0}},
  };
  std::vector<ParticleRow> rows;
  for (const auto& p : printed) {
    ParticleRow row;
    row.multiplet = p.w;
    row.printed_charges = p.charges;
    row.names = p.names;
    row.printed_form = p.form;
    row.charges = electric_charges(p.w);
    row.classified = classify_weight(p.w);

    auto a = row.charges, b = row.printed_charges;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    row.charges_match = a == b;

    if (p.form) {
      row.form_matches =
          std::find(row.classified.begin(), row.classified.end(), *p.form) != row.classified.end();
    } else {
      row.form_matches = row.classified.empty();
    }
    if (!row.charges_match) row.discrepancy = "printed charges differ from y/2 +- r/2";
    if (!row.form_matches) {
      std::string got = row.classified.empty() ? "no form module" : "";
      for (const auto& id : row.classified) got += (got.empty() ? "" : ", ") + id.to_string();
      if (!row.discrepancy.empty()) row.discrepancy += "; ";
      row.discrepancy += "printed " + (p.form ? p.form->to_string() : std::string("-")) +
                         ", formulas give " + got;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vfalg
