// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "vfalg/catalog.hpp"
#include "vfalg/cli.hpp"
#include "vfalg/jetfock.hpp"
#include "vfalg/repkit.hpp"
#include "vfalg/toroidal.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "random_fields.hpp"

using namespace vfalg;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Random element of one parity from a basis, small integer coefficients.
std::optional<SuperVectorField> random_combination(const std::vector<SuperVectorField>& basis,
                                                   Parity parity, std::mt19937& rng) {
  std::vector<const SuperVectorField*> pool;
  for (const auto& x : basis) {
    if (x.parity() == parity) pool.push_back(&x);
  }
  if (pool.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  SuperVectorField x(basis.front().coords());
  for (int t = 0; t < 3; ++t) x += Rational(coef(rng)) * *pool[pick(rng)];
  return x;
}

std::size_t random_jacobi(const std::function<SuperVectorField(Parity)>& draw, std::mt19937& rng,
                          std::size_t count) {
  std::size_t bad = 0;
  std::bernoulli_distribution odd(0.5);
  for (std::size_t i = 0; i < count; ++i) {
    SuperVectorField x = draw(odd(rng) ? Parity::odd : Parity::even);
    SuperVectorField y = draw(odd(rng) ? Parity::odd : Parity::even);
    SuperVectorField z = draw(odd(rng) ? Parity::odd : Parity::even);
    if (!super_jacobiator(x, y, z).is_zero()) ++bad;
  }
  return bad;
}

Outcome criterion1() {
  Outcome o;
  BuiltAlgebra mb = build("mb38");
  std::vector<SuperVectorField> mbgens;
  for (const auto& g : mb.named) mbgens.push_back(g.field);
  o.require(mbgens.size() == 23, "23 mb(3|8) generators");
  GradingReport jm = verify_jacobi(mbgens);
  o.require(jm.ok(), "mb(3|8) basis Jacobi");
  BuiltAlgebra vle = build("vle36");
  GradingReport jv = verify_jacobi(vle.span.all());
  o.require(jv.ok(), "vle(3|6) basis Jacobi");
  o.note(std::to_string(jm.checks + jv.checks) + " basis triples");

  std::mt19937 rng(2024);
  Coords v22 = build("vect(2|2)").desc.coords;
  std::size_t bad = random_jacobi([&](Parity p) { return fixtures::random_field(v22, rng, p, 3, 2); }, rng, 500);
  o.require(bad == 0, "vect(2|2) random triples");

  auto sv = prolong_recursive(build("svect(3)").span, 2).span.all();
  bad = random_jacobi([&](Parity) { return *random_combination(sv, Parity::even, rng); }, rng, 500);
  o.require(bad == 0, "svect(3) random triples");

  auto kb = build("k(1|2)");
  auto kspan = prolong_preserver(kb.desc.coords, kb.desc.structures, 2).span.all();
  bad = random_jacobi([&](Parity p) { return *random_combination(kspan, p, rng); }, rng, 500);
  o.require(bad == 0, "k(1|2) random triples");
  o.note("1500 random triples");
  return o;
}

Outcome criterion2() {
  Outcome o;
  BuiltAlgebra mb = build("mb38");
  std::map<int, int> count;
  SuperVectorField z = grading_operator(mb.desc.coords);
  bool found_z = false;
  for (const auto& g : mb.named) {
    WeightedDegree d = g.field.weighted_degree();
    o.require(d.kind == WeightedDegree::Kind::homogeneous && d.value == g.degree, g.name + " homogeneous");
    ++count[g.degree];
    o.require(bracket(z, g.field) == Rational(g.degree) * g.field, "[Z," + g.name + "]");
    if (g.name == "Z") found_z = g.field == z;
  }
  o.require(found_z, "Z is the grading operator");
  o.require(count == std::map<int, int>{{-3, 2}, {-2, 3}, {-1, 6}, {0, 12}}, "degree table -3:2 -2:3 -1:6 0:12");
  CheckReport pres = verify_preservation(mb);
  o.require(pres.ok(), "preservation certificates");
  G0Report g0 = verify_g0_structure(mb);
  o.require(g0.checks.ok(), "g_0 relations");
  o.require(consistency_check(mb.span) == Consistency::consistent, "consistency");
  o.note(std::to_string(pres.passed() + g0.checks.passed()) + " certificate and g_0 checks");
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (auto [name, kmax] : std::vector<std::pair<std::string, int>>{{"svect(3)", 2}, {"vle(3|6)", 1}, {"mb(3|8)", 1}}) {
    BuiltAlgebra a = build(name);
    ProlongResult rec = prolong_recursive(a.span, kmax);
    ProlongResult pre = prolong_preserver(a.desc.coords, a.desc.structures, kmax);
    CrossCheckReport cc = cross_check(rec, pre);
    o.require(cc.ok, name + " recursion = preserver " + cc.failure);
    std::string dims;
    for (const auto& [k, d] : rec.dims()) dims += " " + std::to_string(k) + ":" + std::to_string(d);
    o.note(name + dims);
  }
  auto vect2 = prolong_recursive(build("vect(2)").span, 2).dims();
  for (int k = -1; k <= 2; ++k) {
    // n * #monomials of degree k+1 in n variables
    std::size_t oracle = 2 * binom(2 + k, 1);
    o.require(vect2[k] == oracle, "vect(2) degree " + std::to_string(k));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::uint64_t triples = 0;
  for (int n = 1; n <= 3; ++n) {
    SweepReport r = toroidal_sweep(n, 2);
    o.require(r.failures.empty(), "Jacobi sweep N=" + std::to_string(n));
    triples += r.triples_checked;
    o.require(compare_sweep_paths(n, 2, 200, 7 + n) == 0, "fast vs symbolic N=" + std::to_string(n));
  }
  o.note(std::to_string(triples) + " triples");
  GaugeShiftReport g = gauge_shift(2, 2, 100, 99);
  o.require(g.ok() && g.ls_checks == 100, "gauge shift N=2");
  o.require(gauge_shift(3, 2, 100, 100).ok(), "gauge shift N=3");
  for (int n = 2; n <= 3; ++n) {
    NearCentralReport nc = near_central_report(n, 2);
    o.require(nc.identity_holds && nc.obstruction_spans_center, "near-central identity N=" + std::to_string(n));
    if (n == 2) o.note(std::to_string(nc.displayed_mismatches) + " rows differ from the displayed form");
  }
  VirasoroReport v = reduce_to_virasoro();
  CPoly c = -(CPoly::c1() + CPoly::c2());
  o.require(v.ok() && *v.lambda == CPoly(Rational(-1, 2)) * c && *v.kappa == c, "lambda = -c/2");
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(55);
  std::size_t pairs = 0;
  for (int n = 1; n <= 2; ++n) {
    std::vector<VarSpec> vars;
    for (int i = 1; i <= n; ++i) vars.push_back({"x" + std::to_string(i), Parity::even, 1});
    Coords cs = make_coords(vars);
    std::vector<TensorRep> reps = {TensorRep::scalar_density(n, 0), TensorRep::scalar_density(n, Rational(3, 2)),
                                   TensorRep::vector(n), TensorRep::covector(n)};
    for (int i = 0; i < 50; ++i) {
      SuperVectorField xi = fixtures::random_field(cs, rng, Parity::even, 3, 3);
      SuperVectorField eta = fixtures::random_field(cs, rng, Parity::even, 3, 3);
      const TensorRep& rep = reps[i % reps.size()];
      int p = i % 3;
      o.require(jet_matrices(xi, p, rep).block_triangular(), "block triangular");
      RepCheck rc = rep_property_check(xi, eta, p, rep);
      o.require(rc.ok, "rep property " + rep.label() + (rc.ok ? "" : ": " + rc.residuals.front()));
      ++pairs;
    }
  }
  o.note(std::to_string(pairs) + " pairs");

  Coords line = make_coords({{"x", Parity::even, 1}});
  SuperVectorField xi(line);
  SuperPolynomial x = SuperPolynomial::variable(line, 0);
  SuperPolynomial f = x * x * x - Rational(2) * x + SuperPolynomial::constant(line, 5);
  xi.set(0, f);
  SuperPolynomial fp = Rational(3) * x * x - SuperPolynomial::constant(line, 2);  // f' by hand
  auto j0 = jet_matrices(xi, 1, TensorRep::scalar_density(1, 0));
  o.require(j0.entry(1, 1, 0, 0) == fp && j0.entry(0, 1, 0, 0).is_zero() && j0.entry(0, 0, 0, 0).is_zero(),
            "weight-0 example");
  Rational lambda(-4, 7);
  auto jl = jet_matrices(xi, 0, TensorRep::scalar_density(1, lambda));
  o.require(jl.entry(0, 0, 0, 0) == lambda * fp, "weight-lambda example");
  return o;
}

Outcome criterion6() {
  Outcome o;
  Coords one = make_coords({{"phi", Parity::even, 1}});
  Coords two = make_coords({{"phi1", Parity::even, 1}, {"phi2", Parity::even, 1}});
  KTReport r1 = kt_cohomology({one, {SuperPolynomial::variable(one, 0)}, 6}, 3);
  KTReport r2 = kt_cohomology({two, {SuperPolynomial::variable(two, 0), SuperPolynomial::variable(two, 1)}, 6}, 3);
  KTReport r0 = kt_cohomology({one, {SuperPolynomial(one)}, 6}, 3);
  for (const auto* r : {&r1, &r2, &r0}) o.require(r->delta_squared_zero, "delta^2 = 0");
  for (const auto* r : {&r1, &r2}) {
    o.require(r->total(0) == 1, "H^0 dimension 1");
    for (int g = 1; g <= 3; ++g) o.require(r->total(g) == 0, "H^" + std::to_string(g) + " = 0");
  }
  o.require(r0.total(1) > 0, "trivial equation leaves H^1");
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto rows = fermion_table();
  o.require(rows.size() == 10, "10 rows");
  std::size_t flagged = 0;
  for (const auto& row : rows) {
    o.require(row.charges_match, "charges " + row.multiplet.to_string());
    if (!row.discrepancy.empty()) {
      ++flagged;
      o.note(row.multiplet.to_string() + ": " + row.discrepancy);
    }
  }
  bool swap_flagged = !rows[8].form_matches && !rows[9].form_matches &&
                      rows[8].classified == std::vector<FormModuleId>{{Family::B, 0, 0}} &&
                      rows[9].classified == std::vector<FormModuleId>{{Family::C, 0, 0}};
  o.require(flagged == 2 && swap_flagged, "Omega_B/Omega_C discrepancy flagged");
  o.require(classify_weight({0, 1, 0, Rational(4, 3)}).empty(), "u_R has no form module");
  o.require(classify_weight({1, 0, 0, Rational(-4, 3)}).empty(), "~u_L has no form module");
  auto sterile = classify_weight({0, 0, 0, 0});
  o.require(sterile.size() == 2 && sterile[0] == FormModuleId{Family::A, 0, 0} &&
                sterile[1] == FormModuleId{Family::D, 0, 0},
            "sterile neutrino double classification");
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int a = 0; a <= 5; ++a) {
      for (int r = 0; r <= 5; ++r) {
        FormModuleId id{f, a, r};
        o.require(cp_conjugate(cp_conjugate(id)) == id, "CP involution " + id.to_string());
        o.require(form_module_weight(cp_conjugate(id)).y == -form_module_weight(id).y,
                  "hypercharge negation " + id.to_string());
      }
    }
  }
  return o;
}

std::string cli_suite(const std::filesystem::path& kt_file) {
  const std::vector<std::vector<std::string>> runs = {
      {"bracket", "--coords", "x,y|th", "x*y*D(x)", "th*D(y)"},
      {"verify-algebra", "mb38"},
      {"verify-algebra", "vle36", "--kmax", "1"},
      {"verify-algebra", "k(1|2)"},
      {"prolong", "svect(3)", "--kmax", "2"},
      {"prolong", "mb38", "--kmax", "1", "--method", "both"},
      {"toroidal-sweep", "--dim", "2", "--range", "2"},
      {"virasoro-reduce"},
      {"jet-check", "--dim", "2", "--order", "2", "--rep", "vector", "--pairs", "5"},
      {"jet-check", "--dim", "1", "--order", "1", "--weight", "2/3", "--pairs", "5"},
      {"kt", "--setup", kt_file.string()},
      {"tables", "fermions"},
      {"tables", "fermions", "--format", "csv"},
      {"tables", "formmods", "--max", "3"},
      {"tables", "regradings", "--format", "csv"},
  };
  std::ostringstream all;
  for (const auto& args : runs) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    all << "$ " << args.front() << " -> " << code << "\n" << out.str();
  }
  return all.str();
}

Outcome criterion8() {
  Outcome o;
  auto kt_file = std::filesystem::temp_directory_path() / "vfalg_acceptance_kt.json";
  std::ofstream(kt_file) << R"({"fields":[{"name":"a"},{"name":"b"}],"equations":["a^2","a*b + b^2"],"cutoff":5,"gmax":2})";
  std::string first = cli_suite(kt_file);
  std::string second = cli_suite(kt_file);
  o.require(first == second, "byte-identical reports");
  o.require(first.find(" -> 2\n") == std::string::npos, "no usage errors in the suite");
  o.note(std::to_string(first.size()) + " bytes per run");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"super-Jacobi suite", criterion1},
      {"mb(3|8) verification", criterion2},
      {"prolongation cross-check", criterion3},
      {"toroidal suite", criterion4},
      {"jet suite", criterion5},
      {"Koszul-Tate suite", criterion6},
      {"repkit suite", criterion7},
      {"CLI determinism", criterion8},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first
              << " (" << time.str() << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
