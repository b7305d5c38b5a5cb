#include "vfalg/catalog.hpp"

#include "vfalg/parse.hpp"

#include <regex>

namespace vfalg {

void CheckReport::add(std::string what, bool ok, std::string detail) {
  checks.push_back({std::move(what), ok, std::move(detail)});
}

std::size_t CheckReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.ok;
  return n;
}

std::size_t CheckReport::failed() const { return checks.size() - passed(); }

namespace {

int levi3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // sign of the permutation (i,j,k) of (1,2,3)
  int inv = (i > j) + (i > k) + (j > k);
  return inv % 2 ? -1 : 1;
}

int levi5(const int (&idx)[5]) {
  int inv = 0;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      if (idx[a] == idx[b]) return 0;
      inv += idx[a] > idx[b];
    }
  }
  return inv % 2 ? -1 : 1;
}

std::vector<VarSpec> evens(const std::string& base, int n, int weight) {
  std::vector<VarSpec> v;
  for (int i = 1; i <= n; ++i) v.push_back({base + std::to_string(i), Parity::even, weight});
  return v;
}

std::vector<VarSpec> odds(const std::string& base, int n, int weight) {
  std::vector<VarSpec> v;
  for (int i = 1; i <= n; ++i) v.push_back({base + std::to_string(i), Parity::odd, weight});
  return v;
}

std::vector<VarSpec> concat(std::vector<VarSpec> a, const std::vector<VarSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

StructureSpec volume() {
  StructureSpec s;
  s.kind = StructureKind::volume_form;
  s.label = "vol";
  return s;
}

StructureSpec forms_spec(StructureKind kind, std::string label, std::vector<SuperPolynomial> forms) {
  StructureSpec s;
  s.kind = kind;
  s.label = std::move(label);
  s.forms = std::move(forms);
  return s;
}

SuperPolynomial var(const Coords& cs, const std::string& name) {
  return SuperPolynomial::variable(cs, name);
}

GradedSpan preserver_span(const Coords& coords, const std::vector<StructureSpec>& structures) {
  GradedSpan g;
  g.coords = coords;
  for (int k = -coords->max_weight(); k <= 0; ++k) {
    auto sol = preserver_solve(coords, structures, k);
    if (!sol.basis.empty() || k == 0) g.pieces[k] = std::move(sol.basis);
  }
  return g;
}

BuiltAlgebra finish(std::string name, Coords coords, std::vector<StructureSpec> structures) {
  BuiltAlgebra b;
  b.desc.name = std::move(name);
  b.desc.coords = coords;
  b.desc.structures = std::move(structures);
  b.desc.depth = coords->max_weight();
  if (b.desc.structures.empty()) {
    b.span.coords = coords;
    for (int k = -b.desc.depth; k <= 0; ++k) b.span.pieces[k] = homogeneous_fields(coords, k);
  } else {
    b.span = preserver_span(coords, b.desc.structures);
  }
  return b;
}

BuiltAlgebra build_vect(int n, int m, bool special) {
  auto cs = make_coords(concat(evens("u", n, 1), odds("th", m, 1)));
  std::vector<StructureSpec> st;
  if (special) st.push_back(volume());
  return finish(std::string(special ? "svect(" : "vect(") + std::to_string(n) + "|" +
                    std::to_string(m) + ")",
                cs, st);
}

BuiltAlgebra build_h(int n, int m) {
  if (n % 2) throw Error("h(n|m) requires n even");
  auto cs = make_coords(concat(evens("u", n, 1), odds("th", m, 1)));
  FormSpace fs(cs);
  SuperPolynomial w(fs.ext());
  for (int r = 1; 2 * r <= n; ++r) {
    w += fs.dx("u" + std::to_string(2 * r - 1)) * fs.dx("u" + std::to_string(2 * r));
  }
  for (int a = 1; a <= m; ++a) {
    auto d = fs.dx("th" + std::to_string(a));
    w += d * d;
  }
  return finish("h(" + std::to_string(n) + "|" + std::to_string(m) + ")", cs,
                {forms_spec(StructureKind::invariant_form, "omega", {w})});
}

BuiltAlgebra build_le(int n, bool special) {
  auto cs = make_coords(concat(evens("u", n, 1), odds("th", n, 1)));
  FormSpace fs(cs);
  SuperPolynomial w(fs.ext());
  for (int i = 1; i <= n; ++i) w += fs.dx("u" + std::to_string(i)) * fs.dx("th" + std::to_string(i));
  std::vector<StructureSpec> st{forms_spec(StructureKind::invariant_form, "omega", {w})};
  if (special) st.push_back(volume());
  return finish(std::string(special ? "sle(" : "le(") + std::to_string(n) + ")", cs, st);
}

BuiltAlgebra build_k(int n, int m) {
  if (n < 1 || n % 2 == 0) throw Error("k(n|m) requires n odd");
  auto cs = make_coords(concat(concat({{"t", Parity::even, 2}}, evens("u", n - 1, 1)), odds("th", m, 1)));
  FormSpace fs(cs);
  auto alpha = fs.dx("t");
  for (int r = 1; 2 * r <= n - 1; ++r) {
    auto a = "u" + std::to_string(2 * r - 1);
    auto b = "u" + std::to_string(2 * r);
    alpha += var(fs.ext(), a) * fs.dx(b) - var(fs.ext(), b) * fs.dx(a);
  }
  for (int a = 1; a <= m; ++a) {
    auto th = "th" + std::to_string(a);
    alpha += var(fs.ext(), th) * fs.dx(th);
  }
  return finish("k(" + std::to_string(n) + "|" + std::to_string(m) + ")", cs,
                {forms_spec(StructureKind::contact_pfaff, "alpha", {alpha})});
}

Coords odd_contact_coords(int n) {
  return make_coords(concat(concat({{"tau", Parity::odd, 2}}, evens("u", n, 1)), odds("th", n, 1)));
}

SuperPolynomial odd_contact_form(const FormSpace& fs, int n) {
  auto alpha = fs.dx("tau");
  for (int i = 1; i <= n; ++i) {
    auto u = "u" + std::to_string(i);
    auto th = "th" + std::to_string(i);
    alpha += var(fs.ext(), u) * fs.dx(th) + var(fs.ext(), th) * fs.dx(u);
  }
  return alpha;
}

BuiltAlgebra build_m(int n) {
  auto cs = odd_contact_coords(n);
  FormSpace fs(cs);
  return finish("m(" + std::to_string(n) + ")", cs,
                {forms_spec(StructureKind::contact_pfaff, "alpha", {odd_contact_form(fs, n)})});
}

BuiltAlgebra build_sm(const Rational& beta, int n) {
  auto cs = odd_contact_coords(n);
  FormSpace fs(cs);
  auto alpha = odd_contact_form(fs, n);
  StructureSpec div;
  div.kind = StructureKind::deformed_divergence;
  div.label = "div_beta";
  div.forms = {alpha};
  div.beta = beta;
  div.n = n;
  return finish("sm_" + to_string(beta) + "(" + std::to_string(n) + ")", cs,
                {forms_spec(StructureKind::contact_pfaff, "alpha", {alpha}), div});
}

std::string th2(int i, int a) { return "th" + std::to_string(i) + std::to_string(a); }

BuiltAlgebra build_vle() {
  std::vector<VarSpec> v;
  for (int i = 1; i <= 3; ++i) {
    for (int a = 1; a <= 2; ++a) v.push_back({th2(i, a), Parity::odd, 1});
  }
  auto cs = make_coords(concat(v, evens("u", 3, 2)));
  FormSpace fs(cs);
  std::vector<SuperPolynomial> alphas;
  for (int i = 1; i <= 3; ++i) {
    auto a = fs.dx("u" + std::to_string(i));
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        int e = levi3(i, j, k);
        if (!e) continue;
        // eps^{ab} with eps^{12} = 1
        a += Rational(e) * var(fs.ext(), th2(j, 1)) * fs.dx(th2(k, 2));
        a -= Rational(e) * var(fs.ext(), th2(j, 2)) * fs.dx(th2(k, 1));
      }
    }
    alphas.push_back(a);
  }
  return finish("vle(3|6)", cs, {forms_spec(StructureKind::even_pfaff, "alpha", alphas), volume()});
}

BuiltAlgebra build_ksle() {
  std::vector<VarSpec> v;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) v.push_back({th2(i, j), Parity::odd, 1});
  }
  auto cs = make_coords(concat(v, evens("u", 5, 2)));
  FormSpace fs(cs);
  // theta_{jk} = -theta_{kj}
  auto theta = [&](int j, int k) {
    return j < k ? var(fs.ext(), th2(j, k)) : -var(fs.ext(), th2(k, j));
  };
  auto dtheta = [&](int j, int k) { return j < k ? fs.dx(th2(j, k)) : -fs.dx(th2(k, j)); };
  std::vector<SuperPolynomial> alphas;
  for (int i = 1; i <= 5; ++i) {
    auto a = fs.dx("u" + std::to_string(i));
    for (int j = 1; j <= 5; ++j) {
      for (int k = 1; k <= 5; ++k) {
        if (j == k) continue;
        for (int l = 1; l <= 5; ++l) {
          for (int m = 1; m <= 5; ++m) {
            int idx[5] = {i, j, k, l, m};
            int e = levi5(idx);
            if (e) a += Rational(e, 4) * theta(j, k) * dtheta(l, m);
          }
        }
      }
    }
    alphas.push_back(a);
  }
  return finish("ksle(5|10)", cs, {forms_spec(StructureKind::even_pfaff, "alpha", alphas), volume()});
}

}  // namespace

// ---------------------------------------------------------------------------
// mb(3|8)

std::string Mb38Convention::to_string() const {
  return std::string("theta^a_i=") + (raise_theta ? "eps^{ab}theta_{ib}" : "theta_{ia}") +
         ", eth^a=" + (raise_eth ? "eps^{ab}eth_b" : "eth_a") +
         ", eps^{12}=" + std::to_string(eps12) + ", eps^{123}=" + std::to_string(eps123);
}

Coords mb38_coords() {
  std::vector<VarSpec> v;
  for (int i = 1; i <= 3; ++i) {
    for (int a = 1; a <= 2; ++a) v.push_back({th2(i, a), Parity::odd, 1});
  }
  v = concat(v, evens("u", 3, 2));
  v = concat(v, odds("vt", 2, 3));
  return make_coords(v);
}

std::vector<Mb38Convention> mb38_candidate_conventions() {
  std::vector<Mb38Convention> out;
  for (bool rt : {false, true}) {
    for (bool re : {false, true}) {
      for (int e2 : {1, -1}) {
        for (int e3 : {1, -1}) out.push_back({rt, re, e2, e3});
      }
    }
  }
  return out;
}

Mb38Generators mb38_generators(const Mb38Convention& c) {
  Mb38Generators g;
  g.coords = mb38_coords();
  const auto& cs = g.coords;
  auto eps2 = [&](int a, int b) { return a == b ? 0 : (a == 1 ? c.eps12 : -c.eps12); };
  auto eps3 = [&](int i, int j, int k) { return c.eps123 * levi3(i, j, k); };
  auto theta = [&](int i, int a) { return var(cs, th2(i, a)); };
  auto theta_up = [&](int a, int i) {
    if (!c.raise_theta) return theta(i, a);
    SuperPolynomial p(cs);
    for (int b = 1; b <= 2; ++b) p += Rational(eps2(a, b)) * theta(i, b);
    return p;
  };
  auto u = [&](int i) { return var(cs, "u" + std::to_string(i)); };
  auto vt = [&](int a) { return var(cs, "vt" + std::to_string(a)); };
  auto d = [&](int i, int a) { return SuperVectorField::partial(cs, th2(i, a)); };
  auto du = [&](int i) { return SuperVectorField::partial(cs, "u" + std::to_string(i)); };
  auto eth = [&](int a) { return SuperVectorField::partial(cs, "vt" + std::to_string(a)); };
  auto eth_up = [&](int a) {
    if (!c.raise_eth) return eth(a);
    SuperVectorField x(cs);
    for (int b = 1; b <= 2; ++b) x += Rational(eps2(a, b)) * eth(b);
    return x;
  };

  for (int a = 1; a <= 2; ++a) g.generators.push_back({"F_" + std::to_string(a), -3, eth(a)});
  for (int i = 1; i <= 3; ++i) {
    auto e = du(i);
    for (int a = 1; a <= 2; ++a) e += theta_up(a, i) * eth(a);
    g.generators.push_back({"E_" + std::to_string(i), -2, e});
  }
  for (int sign : {1, -1}) {
    for (int i = 1; i <= 3; ++i) {
      for (int a = 1; a <= 2; ++a) {
        auto x = d(i, a);
        for (int j = 1; j <= 3; ++j) {
          for (int k = 1; k <= 3; ++k) {
            int e = eps3(i, j, k);
            if (!e) continue;
            x += Rational(3 * sign * e) * (theta_up(a, j) * du(k));
            for (int b = 1; b <= 2; ++b) x += Rational(e) * ((theta_up(a, j) * theta_up(b, k)) * eth(b));
          }
        }
        x += Rational(sign) * (u(i) * eth_up(a));
        std::string name = std::string(sign > 0 ? "D^" : "Dt^") + std::to_string(i) + std::to_string(a);
        (sign > 0 ? g.generators : g.dual).push_back({name, -1, x});
      }
    }
  }

  SuperVectorField ud(cs), td(cs), ve(cs);
  for (int i = 1; i <= 3; ++i) ud += u(i) * du(i);
  for (int i = 1; i <= 3; ++i) {
    for (int a = 1; a <= 2; ++a) td += theta(i, a) * d(i, a);
  }
  for (int a = 1; a <= 2; ++a) ve += vt(a) * eth(a);

  g.I.assign(4, std::vector<SuperVectorField>(4, SuperVectorField(cs)));
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      auto x = u(k) * du(l);
      for (int a = 1; a <= 2; ++a) x -= theta(l, a) * d(k, a);
      if (k == l) x -= Rational(1, 3) * (ud - td);
      g.I[k][l] = x;
    }
  }
  g.J.assign(3, std::vector<SuperVectorField>(3, SuperVectorField(cs)));
  for (int cc = 1; cc <= 2; ++cc) {
    for (int dd = 1; dd <= 2; ++dd) {
      auto x = vt(cc) * eth(dd);
      for (int i = 1; i <= 3; ++i) x -= theta(i, dd) * d(i, cc);
      if (cc == dd) x -= Rational(1, 2) * (ve - td);
      g.J[cc][dd] = x;
    }
  }
  auto iname = [](int k, int l) { return "I^" + std::to_string(k) + "_" + std::to_string(l); };
  g.generators.push_back({iname(1, 1), 0, g.I[1][1]});
  g.generators.push_back({iname(2, 2), 0, g.I[2][2]});
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      if (k != l) g.generators.push_back({iname(k, l), 0, g.I[k][l]});
    }
  }
  g.generators.push_back({"J^1_1", 0, g.J[1][1]});
  g.generators.push_back({"J^1_2", 0, g.J[1][2]});
  g.generators.push_back({"J^2_1", 0, g.J[2][1]});
  g.generators.push_back({"Z", 0, Rational(3) * ve + Rational(2) * ud + td});
  return g;
}

namespace {

StructureSpec dual_system(const Mb38Generators& g) {
  StructureSpec s;
  s.kind = StructureKind::dual_pfaff;
  s.label = "Dt";
  for (const auto& d : g.dual) s.fields.push_back(d.field);
  return s;
}

GradedSpan span_of(const Coords& cs, const std::vector<NamedField>& named) {
  GradedSpan g;
  g.coords = cs;
  for (const auto& n : named) g.pieces[n.degree].push_back(n.field);
  return g;
}

// gl(n) relations [X^i_j, X^k_l] = d^k_j X^i_l - d^i_l X^k_j on an n x n
// table (1-based), tracelessness, mutual commutation and centrality of Z.
void g0_relations(CheckReport& rep, const std::vector<std::vector<SuperVectorField>>& I,
                  const std::vector<std::vector<SuperVectorField>>& J, const SuperVectorField& z,
                  const std::vector<SuperVectorField>& g0) {
  auto rel = [&](const std::vector<std::vector<SuperVectorField>>& X, int n, const std::string& tag) {
    std::size_t bad = 0;
    std::string first;
    SuperVectorField trace(z.coords());
    for (int i = 1; i <= n; ++i) {
      trace += X[i][i];
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          for (int l = 1; l <= n; ++l) {
            SuperVectorField expect(z.coords());
            if (k == j) expect += X[i][l];
            if (i == l) expect -= X[k][j];
            if (bracket(X[i][j], X[k][l]) != expect) {
              if (!bad) {
                first = "[" + tag + "^" + std::to_string(i) + "_" + std::to_string(j) + ", " + tag + "^" +
                        std::to_string(k) + "_" + std::to_string(l) + "]";
              }
              ++bad;
            }
          }
        }
      }
    }
    rep.add(tag + " satisfies sl(" + std::to_string(n) + ") relations", bad == 0,
            bad ? std::to_string(bad) + " failing brackets, first " + first : "");
    rep.add(tag + " traceless", trace.is_zero());
  };
  rel(I, 3, "I");
  rel(J, 2, "J");
  bool commute = true;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int c = 1; c <= 2; ++c) {
        for (int d = 1; d <= 2; ++d) commute = commute && bracket(I[i][j], J[c][d]).is_zero();
      }
    }
  }
  rep.add("[I, J] = 0", commute);
  bool central = true;
  for (const auto& x : g0) central = central && bracket(z, x).is_zero();
  rep.add("Z central in g_0", central);
}

struct MbChecks {
  bool grading = true, closure = true, preservation = true, g0 = true;
  CheckReport g0_report;
};

MbChecks run_mb_checks(const Mb38Generators& g) {
  MbChecks r;
  auto z = grading_operator(g.coords);
  for (const auto& n : g.generators) {
    auto p = n.field.parity();
    bool ok = p && n.field.weighted_degree() ==
                       WeightedDegree{WeightedDegree::Kind::homogeneous, n.degree} &&
              bracket(z, n.field) == Rational(n.degree) * n.field &&
              bit(*p) == ((n.degree % 2) != 0);
    r.grading = r.grading && ok;
  }
  r.closure = verify_grading(span_of(g.coords, g.generators)).ok();
  auto s = dual_system(g);
  for (const auto& n : g.generators) {
    if (!r.preservation) break;
    r.preservation = find_certificate(g.coords, s, 0, n.field).has_value();
  }
  std::vector<SuperVectorField> g0;
  for (const auto& n : g.generators) {
    if (n.degree == 0) g0.push_back(n.field);
  }
  g0_relations(r.g0_report, g.I, g.J, g.generators.back().field, g0);
  r.g0 = r.g0_report.ok();
  return r;
}

}  // namespace

ConventionSearch mb38_convention_search() {
  ConventionSearch out;
  for (const auto& c : mb38_candidate_conventions()) {
    auto checks = run_mb_checks(mb38_generators(c));
    ConventionTrial t{c, checks.grading, checks.closure, checks.preservation, checks.g0};
    if (t.passes() && !out.chosen) out.chosen = c;
    out.trials.push_back(t);
  }
  return out;
}

const Mb38Convention& mb38_convention() {
  static const Mb38Convention pinned = [] {
    auto s = mb38_convention_search();
    if (!s.chosen) throw Error("no mb(3|8) convention passes the verification suite");
    return *s.chosen;
  }();
  return pinned;
}

namespace {

BuiltAlgebra build_mb() {
  auto g = mb38_generators(mb38_convention());
  BuiltAlgebra b;
  b.desc.name = "mb(3|8)";
  b.desc.coords = g.coords;
  b.desc.structures = {dual_system(g)};
  b.desc.depth = 3;
  b.span = span_of(g.coords, g.generators);
  b.named = g.generators;
  return b;
}

}  // namespace

std::string canonical_name(std::string_view raw) {
  std::string name(raw);
  if (name == "mb38") return "mb(3|8)";
  if (name == "vle36") return "vle(3|6)";
  if (name == "ksle510") return "ksle(5|10)";
  static const std::regex even_only(R"(^(vect|svect|h|k)\((\d+)\)$)");
  std::smatch mt;
  if (std::regex_match(name, mt, even_only)) return mt[1].str() + "(" + mt[2].str() + "|0)";
  return name;
}

BuiltAlgebra build(std::string_view raw) {
  const std::string name = canonical_name(raw);
  static const std::regex two(R"(^(vect|svect|h|k)\((\d+)\|(\d+)\)$)");
  static const std::regex one(R"(^(le|sle|m)\((\d+)\)$)");
  static const std::regex sm(R"(^sm_(-?\d+(?:/\d+)?)\((\d+)\)$)");
  std::smatch mt;
  if (name == "mb(3|8)") return build_mb();
  if (name == "vle(3|6)") return build_vle();
  if (name == "ksle(5|10)") return build_ksle();
  if (name.rfind("kas", 0) == 0 || name.rfind("vas", 0) == 0 || name.find('~') != std::string::npos ||
      name.rfind("tilde", 0) == 0 || name.rfind("vle(", 0) == 0 || name.rfind("mb(", 0) == 0 ||
      name.rfind("ksle(", 0) == 0) {
    throw Error("out of scope: " + name);
  }
  auto small = [&](int v) {
    if (v < 0 || v > 8) throw Error("dimension out of range in " + name);
    return v;
  };
  if (std::regex_match(name, mt, two)) {
    int n = small(std::stoi(mt[2])), m = small(std::stoi(mt[3]));
    if (mt[1] == "vect") return build_vect(n, m, false);
    if (mt[1] == "svect") return build_vect(n, m, true);
    if (mt[1] == "h") return build_h(n, m);
    return build_k(n, m);
  }
  if (std::regex_match(name, mt, one)) {
    int n = small(std::stoi(mt[2]));
    if (n < 1) throw Error("dimension out of range in " + name);
    if (mt[1] == "le") return build_le(n, false);
    if (mt[1] == "sle") return build_le(n, true);
    return build_m(n);
  }
  if (std::regex_match(name, mt, sm)) {
    int n = small(std::stoi(mt[2]));
    if (n < 1) throw Error("dimension out of range in " + name);
    return build_sm(parse_rational(mt[1]), n);
  }
  throw Error("unknown algebra: " + name);
}

CheckReport verify_preservation(const BuiltAlgebra& a) {
  CheckReport rep;
  const auto& cs = a.desc.coords;
  std::vector<std::pair<std::string, SuperVectorField>> gens;
  if (!a.named.empty()) {
    for (const auto& n : a.named) gens.emplace_back(n.name, n.field);
  } else {
    for (const auto& [k, v] : a.span.pieces) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        gens.emplace_back("g_" + std::to_string(k) + "[" + std::to_string(i) + "]", v[i]);
      }
    }
  }
  for (std::size_t s = 0; s < a.desc.structures.size(); ++s) {
    const auto& st = a.desc.structures[s];
    for (const auto& [name, x] : gens) {
      auto c = find_certificate(cs, st, s, x);
      rep.add(name + " preserves " + st.label, c && c->verified,
              c ? "" : "no multipliers solve the preservation identity for " + x.to_string());
    }
  }
  if (a.desc.name == "mb(3|8)") {
    auto x = SuperVectorField::partial(cs, "u1");
    bool rejected = !find_certificate(cs, a.desc.structures[0], 0, x).has_value();
    rep.add("D(u1) rejected by the dual system (expected negative)", rejected);
  }
  return rep;
}

namespace {

std::vector<std::pair<std::string, Rational>> expand(FieldSpan& span, const std::vector<std::string>& names,
                                                     const SuperVectorField& x, bool& ok) {
  std::vector<std::pair<std::string, Rational>> out;
  if (x.is_zero()) return out;
  auto c = span.express(x);
  if (!c) {
    ok = false;
    return out;
  }
  for (std::size_t i = 0; i < c->size(); ++i) {
    if ((*c)[i] != 0) out.emplace_back(names[i], (*c)[i]);
  }
  return out;
}

}  // namespace

G0Report verify_g0_structure(const BuiltAlgebra& a) {
  G0Report rep;
  const auto& cs = a.desc.coords;
  std::vector<std::vector<SuperVectorField>> I, J;
  SuperVectorField z = grading_operator(cs);
  std::vector<NamedField> g0named;
  if (a.desc.name == "mb(3|8)") {
    auto g = mb38_generators(mb38_convention());
    I = g.I;
    J = g.J;
    for (const auto& n : g.generators) {
      if (n.degree == 0) g0named.push_back(n);
    }
  } else if (a.desc.name == "vle(3|6)") {
    auto theta = [&](int i, int c) { return var(cs, th2(i, c)); };
    auto d = [&](int i, int c) { return SuperVectorField::partial(cs, th2(i, c)); };
    auto u = [&](int i) { return var(cs, "u" + std::to_string(i)); };
    auto du = [&](int i) { return SuperVectorField::partial(cs, "u" + std::to_string(i)); };
    SuperVectorField ud(cs), td(cs);
    for (int i = 1; i <= 3; ++i) {
      ud += u(i) * du(i);
      for (int c = 1; c <= 2; ++c) td += theta(i, c) * d(i, c);
    }
    I.assign(4, std::vector<SuperVectorField>(4, SuperVectorField(cs)));
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        auto x = u(k) * du(l);
        for (int c = 1; c <= 2; ++c) x -= theta(l, c) * d(k, c);
        if (k == l) x -= Rational(1, 3) * (ud - td);
        I[k][l] = x;
      }
    }
    J.assign(3, std::vector<SuperVectorField>(3, SuperVectorField(cs)));
    for (int c = 1; c <= 2; ++c) {
      for (int e = 1; e <= 2; ++e) {
        SuperVectorField x(cs);
        for (int i = 1; i <= 3; ++i) x -= theta(i, e) * d(i, c);
        if (c == e) x += Rational(1, 2) * td;
        J[c][e] = x;
      }
    }
    auto iname = [](int k, int l) { return "I^" + std::to_string(k) + "_" + std::to_string(l); };
    g0named.push_back({iname(1, 1), 0, I[1][1]});
    g0named.push_back({iname(2, 2), 0, I[2][2]});
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        if (k != l) g0named.push_back({iname(k, l), 0, I[k][l]});
      }
    }
    g0named.push_back({"J^1_1", 0, J[1][1]});
    g0named.push_back({"J^1_2", 0, J[1][2]});
    g0named.push_back({"J^2_1", 0, J[2][1]});
    g0named.push_back({"Z", 0, z});
    // the explicit basis must span the computed g_0
    std::vector<SuperVectorField> mine;
    for (const auto& n : g0named) mine.push_back(n.field);
    auto it = a.span.pieces.find(0);
    bool same = it != a.span.pieces.end() && same_span(cs, mine, it->second);
    rep.checks.add("explicit sl(3)+sl(2)+gl(1) basis spans computed g_0", same);
  } else {
    throw Error("g_0 structure check is defined for mb(3|8) and vle(3|6) only");
  }
  std::vector<SuperVectorField> g0;
  std::vector<std::string> names;
  for (const auto& n : g0named) {
    g0.push_back(n.field);
    names.push_back(n.name);
  }
  FieldSpan span(cs, g0);
  rep.checks.add("dim g_0 = 12", span.dim() == 12 && g0.size() == 12);
  g0_relations(rep.checks, I, J, z, g0);
  bool closed = true;
  for (std::size_t i = 0; i < g0.size(); ++i) {
    for (std::size_t j = i + 1; j < g0.size(); ++j) {
      auto b = bracket(g0[i], g0[j]);
      if (b.is_zero()) continue;
      rep.table.push_back({names[i], names[j], expand(span, names, b, closed)});
    }
  }
  rep.checks.add("g_0 closed under bracket", closed);
  return rep;
}

std::vector<StructureConstant> negative_bracket_table(const BuiltAlgebra& a) {
  std::vector<StructureConstant> out;
  std::map<int, std::pair<FieldSpan, std::vector<std::string>>> by_degree;
  for (const auto& n : a.named) {
    auto [it, fresh] = by_degree.try_emplace(n.degree, FieldSpan(a.desc.coords), std::vector<std::string>{});
    it->second.first.add(n.field);
    it->second.second.push_back(n.name);
  }
  for (std::size_t i = 0; i < a.named.size(); ++i) {
    for (std::size_t j = i; j < a.named.size(); ++j) {
      const auto& x = a.named[i];
      const auto& y = a.named[j];
      if (x.degree >= 0 || y.degree >= 0) continue;
      auto b = bracket(x.field, y.field);
      StructureConstant sc{x.name, y.name, {}};
      if (!b.is_zero()) {
        auto it = by_degree.find(x.degree + y.degree);
        bool ok = it != by_degree.end();
        if (ok) sc.result = expand(it->second.first, it->second.second, b, ok);
        if (!ok) throw Error("[" + x.name + ", " + y.name + "] leaves the negative part");
      }
      out.push_back(std::move(sc));
    }
  }
  return out;
}

Consistency consistency_check(const GradedSpan& span) {
  for (const auto& [k, v] : span.pieces) {
    const Parity want = (k % 2) ? Parity::odd : Parity::even;
    for (const auto& x : v) {
      if (x.parity() != want) return Consistency::inconsistent;
    }
  }
  return Consistency::consistent;
}

const std::vector<Regrading>& regrading_table() {
  static const std::vector<Regrading> table = {
      {"vle", "4|3", 1},  {"vle", "5|4", 2},  {"vle", "3|6", 2},   {"vas", "4|4", 1},
      {"kas", "1|6", 2},  {"kas", "5|5", 2},  {"kas", "4|4", 1},   {"kas", "4|3", 1},
      {"mb", "4|5", 2},   {"mb", "5|6", 2},   {"mb", "3|8", 3},    {"ksle", "9|6", 2},
      {"ksle", "11|9", 2}, {"ksle", "5|10", 2}, {"ksle", "11|9;CK", 3},
  };
  return table;
}

std::vector<Regrading> regrading_lookup(std::string_view name) {
  std::vector<Regrading> out;
  for (const auto& r : regrading_table()) {
    if (r.name == name) out.push_back(r);
  }
  return out;
}

}  // namespace vfalg
