#include "vfalg/prolong.hpp"

#include <limits>
#include <set>

namespace vfalg {

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::volume_form: return "volume-form";
    case StructureKind::invariant_form: return "invariant-form";
    case StructureKind::even_pfaff: return "even-pfaff-system";
    case StructureKind::contact_pfaff: return "contact-pfaff";
    case StructureKind::dual_pfaff: return "dual-pfaff-system";
    case StructureKind::deformed_divergence: return "deformed-divergence";
  }
  return "?";
}

std::vector<SuperVectorField> homogeneous_fields(const Coords& coords, int k) {
  std::vector<SuperVectorField> out;
  for (std::size_t j = 0; j < coords->size(); ++j) {
    int w = k + (*coords)[j].weight;
    if (w < 0) continue;
    for (const auto& m : monomials_of_weight(*coords, w)) {
      SuperVectorField x(coords);
      x.set(j, SuperPolynomial::monomial(coords, m));
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<SuperVectorField> homogeneous_fields(const Coords& coords, int k, Parity p) {
  std::vector<SuperVectorField> out;
  for (auto& x : homogeneous_fields(coords, k)) {
    if (x.parity() == p) out.push_back(std::move(x));
  }
  return out;
}

std::map<int, std::size_t> ProlongResult::dims() const {
  std::map<int, std::size_t> d;
  for (const auto& [k, v] : span.pieces) d[k] = v.size();
  return d;
}

namespace {

constexpr std::size_t kNoDir = std::numeric_limits<std::size_t>::max();

struct RowKey {
  std::size_t group;  // structure or g_{-1} element
  std::size_t slot;   // form / field index within the group
  std::size_t dir;    // field direction, kNoDir for scalar residuals
  Monomial mono;
  auto operator<=>(const RowKey&) const = default;
};

class LinearSystem {
 public:
  std::size_t add_column() {
    cols_.emplace_back();
    return cols_.size() - 1;
  }
  void add_poly(std::size_t col, std::size_t group, std::size_t slot, const SuperPolynomial& p,
                const Rational& scale = 1) {
    for (const auto& [m, c] : p.terms()) cols_[col][rows_({group, slot, kNoDir, m})] += scale * c;
  }
  void add_field(std::size_t col, std::size_t group, std::size_t slot, const SuperVectorField& x,
                 const Rational& scale = 1) {
    for (std::size_t d = 0; d < x.dim(); ++d) {
      for (const auto& [m, c] : x[d].terms()) cols_[col][rows_({group, slot, d, m})] += scale * c;
    }
  }
  std::size_t ncols() const { return cols_.size(); }

  std::vector<SparseVector> nullspace() const {
    return vfalg::nullspace(columns_to_rows(clean()), cols_.size());
  }

  // Solves sum_j x_j col_j = target.
  std::optional<SparseVector> solve_for(LinearSystem& target_sys, std::size_t target_col) {
    std::map<std::size_t, Rational> target;
    for (const auto& [r, v] : target_sys.cols_[target_col]) {
      if (v != 0) target[rows_(target_sys.rows_.key(r))] = v;
    }
    std::map<std::size_t, SparseVector> by_row;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      for (const auto& [r, v] : cols_[j]) {
        if (v != 0) by_row[r][j] = v;
      }
    }
    for (const auto& [r, v] : target) by_row[r];
    std::vector<SparseVector> a;
    std::vector<Rational> b;
    for (auto& [r, row] : by_row) {
      a.push_back(std::move(row));
      auto it = target.find(r);
      b.push_back(it == target.end() ? Rational(0) : it->second);
    }
    return solve(a, b, cols_.size());
  }

  bool column_is_zero(std::size_t col) const {
    for (const auto& [r, v] : cols_[col]) {
      if (v != 0) return false;
    }
    return true;
  }

 private:
  std::vector<SparseVector> clean() const {
    std::vector<SparseVector> out = cols_;
    for (auto& c : out) std::erase_if(c, [](const auto& e) { return e.second == 0; });
    return out;
  }

  KeyIndex<RowKey> rows_;
  std::vector<SparseVector> cols_;
};

int degree_of(const SuperPolynomial& p) {
  auto d = p.weighted_degree();
  if (d.kind == WeightedDegree::Kind::inhomogeneous) throw Error("structure form is not homogeneous");
  return d.value;
}

int degree_of(const SuperVectorField& x) {
  auto d = x.weighted_degree();
  if (d.kind == WeightedDegree::Kind::inhomogeneous) throw Error("field is not homogeneous");
  return d.value;
}

Parity parity_of(const SuperPolynomial& p) {
  auto q = p.parity();
  if (!q) throw Error("structure form has mixed parity");
  return *q;
}

Parity parity_of(const SuperVectorField& x) {
  auto q = x.parity();
  if (!q) throw Error("field has mixed parity");
  return *q;
}

SuperPolynomial deformed_residual(const StructureSpec& s, const FormSpace& fs,
                                  const SuperVectorField& x) {
  auto f = restrict_to(fs.interior(x, s.forms.at(0)), fs.base());
  return div_beta(f, s.beta, s.n);
}

// Writes the residual of the preservation identity for x (without multipliers).
void add_residual(LinearSystem& sys, std::size_t col, std::size_t group, const StructureSpec& s,
                  const FormSpace& fs, const SuperVectorField& x) {
  switch (s.kind) {
    case StructureKind::volume_form:
      sys.add_poly(col, group, 0, divergence(x));
      break;
    case StructureKind::invariant_form:
    case StructureKind::even_pfaff:
    case StructureKind::contact_pfaff: {
      auto lie = fs.lie_field(x);
      for (std::size_t i = 0; i < s.forms.size(); ++i) sys.add_poly(col, group, i, lie.apply(s.forms[i]));
      break;
    }
    case StructureKind::dual_pfaff:
      for (std::size_t a = 0; a < s.fields.size(); ++a) {
        sys.add_field(col, group, a, bracket(s.fields[a], x));
      }
      break;
    case StructureKind::deformed_divergence:
      sys.add_poly(col, group, 0, deformed_residual(s, fs, x));
      break;
  }
}

bool has_multipliers(StructureKind k) {
  return k == StructureKind::even_pfaff || k == StructureKind::contact_pfaff ||
         k == StructureKind::dual_pfaff;
}

struct MultiplierSlot {
  std::size_t i, j;
  Monomial mono;
};

// Adds the columns -mono * generator_j in slot i for every admissible
// multiplier monomial; returns their description in column order.
std::vector<MultiplierSlot> add_multipliers(LinearSystem& sys, std::size_t group,
                                            const StructureSpec& s, const FormSpace& fs,
                                            const Coords& coords, int k, Parity px) {
  std::vector<MultiplierSlot> slots;
  if (!has_multipliers(s.kind)) return slots;
  const bool forms = s.kind != StructureKind::dual_pfaff;
  const std::size_t n = forms ? s.forms.size() : s.fields.size();
  for (std::size_t i = 0; i < n; ++i) {
    int wi = forms ? degree_of(s.forms[i]) : degree_of(s.fields[i]);
    Parity pi = forms ? parity_of(s.forms[i]) : parity_of(s.fields[i]);
    for (std::size_t j = 0; j < n; ++j) {
      int wj = forms ? degree_of(s.forms[j]) : degree_of(s.fields[j]);
      Parity pj = forms ? parity_of(s.forms[j]) : parity_of(s.fields[j]);
      int w = k + wi - wj;
      if (w < 0) continue;
      Parity pf = px + pi + pj;
      for (const auto& m : monomials_of_weight(*coords, w)) {
        if (vfalg::parity_of(*coords, m) != pf) continue;
        std::size_t col = sys.add_column();
        auto f = SuperPolynomial::monomial(coords, m);
        if (forms) {
          sys.add_poly(col, group, i, fs.function(f) * s.forms[j], -1);
        } else {
          sys.add_field(col, group, i, f * s.fields[j], -1);
        }
        slots.push_back({i, j, m});
      }
    }
  }
  return slots;
}

}  // namespace

std::optional<Certificate> find_certificate(const Coords& coords, const StructureSpec& s,
                                            std::size_t index, const SuperVectorField& x) {
  Certificate cert;
  cert.structure = index;
  const std::size_t n = s.kind == StructureKind::dual_pfaff ? s.fields.size() : s.forms.size();
  if (has_multipliers(s.kind)) {
    cert.multipliers.assign(n, std::vector<SuperPolynomial>(n, SuperPolynomial(coords)));
  }
  if (x.is_zero()) {
    cert.verified = true;
    return cert;
  }
  FormSpace fs(coords);
  LinearSystem target;
  std::size_t tc = target.add_column();
  add_residual(target, tc, 0, s, fs, x);

  if (has_multipliers(s.kind)) {
    LinearSystem sys;
    auto slots = add_multipliers(sys, 0, s, fs, coords, degree_of(x), parity_of(x));
    auto sol = sys.solve_for(target, tc);
    if (!sol) return std::nullopt;
    for (const auto& [col, v] : *sol) {
      const auto& sl = slots[col];
      // the columns hold -f*generator
      cert.multipliers[sl.i][sl.j] -= SuperPolynomial::monomial(coords, sl.mono, v);
    }
  }

  // Substitute back.
  bool ok = true;
  switch (s.kind) {
    case StructureKind::volume_form:
      ok = divergence(x).is_zero();
      break;
    case StructureKind::invariant_form:
      for (const auto& w : s.forms) ok = ok && fs.lie_derivative(x, w).is_zero();
      break;
    case StructureKind::even_pfaff:
    case StructureKind::contact_pfaff:
      for (std::size_t i = 0; i < n; ++i) {
        SuperPolynomial rhs(fs.ext());
        for (std::size_t j = 0; j < n; ++j) rhs += fs.function(cert.multipliers[i][j]) * s.forms[j];
        ok = ok && fs.lie_derivative(x, s.forms[i]) == rhs;
      }
      break;
    case StructureKind::deformed_divergence:
      ok = deformed_residual(s, fs, x).is_zero();
      break;
    case StructureKind::dual_pfaff:
      for (std::size_t a = 0; a < n; ++a) {
        SuperVectorField rhs(coords);
        for (std::size_t b = 0; b < n; ++b) rhs += cert.multipliers[a][b] * s.fields[b];
        ok = ok && bracket(s.fields[a], x) == rhs;
      }
      break;
  }
  if (!ok) return std::nullopt;
  cert.verified = true;
  return cert;
}

PreserverSolution preserver_solve(const Coords& coords, const std::vector<StructureSpec>& structures,
                                  int k) {
  FormSpace fs(coords);
  PreserverSolution out;
  for (Parity p : {Parity::even, Parity::odd}) {
    auto cands = homogeneous_fields(coords, k, p);
    if (cands.empty()) continue;
    LinearSystem sys;
    for (const auto& x : cands) {
      std::size_t col = sys.add_column();
      for (std::size_t s = 0; s < structures.size(); ++s) add_residual(sys, col, s, structures[s], fs, x);
    }
    for (std::size_t s = 0; s < structures.size(); ++s) {
      add_multipliers(sys, s, structures[s], fs, coords, k, p);
    }
    FieldSpan span(coords);
    for (const auto& v : sys.nullspace()) {
      SuperVectorField x(coords);
      for (const auto& [col, c] : v) {
        if (col < cands.size()) x += c * cands[col];
      }
      if (!x.is_zero()) span.add(x);
    }
    for (const auto& x : span.basis()) out.basis.push_back(x);
  }
  for (const auto& x : out.basis) {
    std::vector<Certificate> certs;
    for (std::size_t s = 0; s < structures.size(); ++s) {
      auto c = find_certificate(coords, structures[s], s, x);
      if (!c) throw Error("preserver solution without certificate: " + x.to_string());
      certs.push_back(std::move(*c));
    }
    out.certificates.push_back(std::move(certs));
  }
  return out;
}

ProlongResult prolong_preserver(const Coords& coords, const std::vector<StructureSpec>& structures,
                                int kmax) {
  ProlongResult r;
  r.method = ProlongMethod::preserver;
  r.span.coords = coords;
  for (int k = -coords->max_weight(); k <= kmax; ++k) {
    auto sol = preserver_solve(coords, structures, k);
    if (!sol.basis.empty() || k >= 0) r.span.pieces[k] = std::move(sol.basis);
  }
  return r;
}

void verify_nonpositive_part(const GradedSpan& g) {
  auto report = verify_grading(g);
  if (!report.ok()) throw Error("non-positive part not closed: " + report.failures.front());
}

std::vector<SuperVectorField> prolong_step(const GradedSpan& span, int k) {
  const auto& coords = span.coords;
  auto find = [&](int d) -> const std::vector<SuperVectorField>& {
    static const std::vector<SuperVectorField> empty;
    auto it = span.pieces.find(d);
    return it == span.pieces.end() ? empty : it->second;
  };
  const auto& gm1 = find(-1);
  const auto& prev = find(k - 1);
  std::vector<SuperVectorField> out;
  for (Parity p : {Parity::even, Parity::odd}) {
    auto cands = homogeneous_fields(coords, k, p);
    if (cands.empty()) continue;
    LinearSystem sys;
    for (const auto& x : cands) {
      std::size_t col = sys.add_column();
      for (std::size_t e = 0; e < gm1.size(); ++e) sys.add_field(col, e, 0, bracket(x, gm1[e]));
    }
    for (std::size_t e = 0; e < gm1.size(); ++e) {
      Parity pe = parity_of(gm1[e]);
      for (const auto& g : prev) {
        if (parity_of(g) != p + pe) continue;
        std::size_t col = sys.add_column();
        sys.add_field(col, e, 0, g, -1);
      }
    }
    FieldSpan basis(coords);
    for (const auto& v : sys.nullspace()) {
      SuperVectorField x(coords);
      for (const auto& [col, c] : v) {
        if (col < cands.size()) x += c * cands[col];
      }
      if (!x.is_zero()) basis.add(x);
    }
    for (const auto& x : basis.basis()) out.push_back(x);
  }
  return out;
}

ProlongResult prolong_recursive(const GradedSpan& nonpositive, int kmax) {
  verify_nonpositive_part(nonpositive);
  ProlongResult r;
  r.method = ProlongMethod::recursion;
  r.span = nonpositive;
  r.span.pieces[0];
  for (int k = 1; k <= kmax; ++k) r.span.pieces[k] = prolong_step(r.span, k);
  return r;
}

CrossCheckReport cross_check(const ProlongResult& a, const ProlongResult& b) {
  CrossCheckReport rep;
  std::set<int> degrees;
  for (const auto& [k, v] : a.span.pieces) degrees.insert(k);
  for (const auto& [k, v] : b.span.pieces) degrees.insert(k);
  auto get = [](const ProlongResult& r, int k) {
    auto it = r.span.pieces.find(k);
    return it == r.span.pieces.end() ? std::vector<SuperVectorField>{} : it->second;
  };
  for (int k : degrees) {
    CrossCheckRow row;
    row.degree = k;
    auto va = get(a, k);
    auto vb = get(b, k);
    row.dim_a = va.size();
    row.dim_b = vb.size();
    row.equal = same_span(a.span.coords, va, vb);
    if (!row.equal && rep.ok) {
      rep.ok = false;
      rep.failure = "spans differ in degree " + std::to_string(k);
    }
    rep.rows.push_back(row);
  }
  return rep;
}

GradingReport verify_grading(const GradedSpan& span) {
  GradingReport rep;
  const auto& coords = span.coords;
  auto z = grading_operator(coords);
  if (span.pieces.empty()) return rep;
  const int lo = span.pieces.begin()->first;
  const int hi = span.pieces.rbegin()->first;
  std::map<int, FieldSpan> spans;
  for (const auto& [k, v] : span.pieces) {
    spans.emplace(k, FieldSpan(coords, v));
    for (const auto& x : v) {
      ++rep.checks;
      if (!x.parity()) {
        rep.failures.push_back("mixed parity in degree " + std::to_string(k) + ": " + x.to_string());
      } else if (bracket(z, x) != Rational(k) * x) {
        rep.failures.push_back("[Z,X] != " + std::to_string(k) + " X for X = " + x.to_string());
      }
    }
  }
  std::vector<std::pair<int, const SuperVectorField*>> all;
  for (const auto& [k, v] : span.pieces) {
    for (const auto& x : v) all.emplace_back(k, &x);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      int d = all[i].first + all[j].first;
      if (d > hi) continue;
      if (!all[i].second->parity() || !all[j].second->parity()) continue;
      ++rep.checks;
      auto b = bracket(*all[i].second, *all[j].second);
      bool ok;
      if (d < lo) {
        ok = b.is_zero();
      } else {
        auto it = spans.find(d);
        ok = b.is_zero() || (it != spans.end() && it->second.contains(b));
      }
      if (!ok) {
        rep.failures.push_back("[" + all[i].second->to_string() + ", " + all[j].second->to_string() +
                               "] not in g_" + std::to_string(d));
      }
    }
  }
  return rep;
}

GradingReport verify_jacobi(const std::vector<SuperVectorField>& basis) {
  GradingReport rep;
  const std::size_t n = basis.size();
  std::vector<std::vector<SuperVectorField>> br(n);
  for (std::size_t i = 0; i < n; ++i) {
    br[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) br[i].push_back(bracket(basis[i], basis[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t l = j; l < n; ++l) {
        ++rep.checks;
        Parity px = *basis[i].parity(), py = *basis[j].parity(), pz = *basis[l].parity();
        auto r = sign_of(px, pz) * bracket(basis[i], br[j][l]);
        r += sign_of(py, px) * bracket(basis[j], br[l][i]);
        r += sign_of(pz, py) * bracket(basis[l], br[i][j]);
        if (!r.is_zero()) {
          rep.failures.push_back("Jacobi fails for (" + basis[i].to_string() + ", " +
                                 basis[j].to_string() + ", " + basis[l].to_string() + ")");
        }
      }
    }
  }
  return rep;
}

}  // namespace vfalg
