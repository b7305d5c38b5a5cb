#include "vfalg/cli.hpp"

#include "vfalg/parse.hpp"
#include "vfalg/repkit.hpp"
#include "vfalg/toroidal.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace vfalg::cli {

using json = nlohmann::ordered_json;

namespace {

std::string q(const Rational& r) { return to_string(r); }

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(q(r));
  return a;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Collects pass/fail checks for a RunReport.
struct Tally {
  std::size_t passed = 0;
  json failures = json::array();
  void check(bool ok, const std::string& what, const std::string& detail = {}) {
    if (ok) {
      ++passed;
      return;
    }
    json f = {{"check", what}};
    if (!detail.empty()) f["residual"] = detail;
    failures.push_back(std::move(f));
  }
  void absorb(const CheckReport& r) {
    for (const auto& c : r.checks) check(c.ok, c.what, c.detail);
  }
};

json report(const std::string& command, json parameters, const Tally& t, json result) {
  json r;
  r["schema"] = 1;
  r["command"] = command;
  r["parameters"] = std::move(parameters);
  r["checks_passed"] = t.passed;
  r["checks_failed"] = t.failures.size();
  r["failures"] = t.failures;
  r["result"] = std::move(result);
  return r;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

json span_dims(const std::map<int, std::size_t>& dims) {
  json d = json::object();
  for (const auto& [k, n] : dims) d[std::to_string(k)] = n;
  return d;
}

SuperVectorField random_poly_field(const Coords& cs, std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_deg), terms(1, 3);
  SuperVectorField x(cs);
  for (std::size_t i = 0; i < cs->size(); ++i) {
    SuperPolynomial p(cs);
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
      Monomial m(cs->size());
      int budget = deg(rng);
      for (std::size_t v = 0; v < cs->size(); ++v) {
        std::uniform_int_distribution<int> e(0, budget);
        int ev = v + 1 == cs->size() ? budget : e(rng);
        m.exps[v] = static_cast<std::uint8_t>(ev);
        budget -= ev;
      }
      p.add_term(m, coef(rng));
    }
    x.set(i, p);
  }
  return x;
}

// ---------------------------------------------------------------- subcommands

json cmd_bracket(const std::string& coords, const std::string& xs, const std::string& ys, Tally&) {
  Coords cs = parse_coords(coords);
  SuperVectorField x = parse_field(cs, xs), y = parse_field(cs, ys);
  SuperVectorField b = bracket_split(x, y);
  json r;
  r["coords"] = cs->superdim();
  r["x"] = x.to_string();
  r["y"] = y.to_string();
  r["bracket"] = b.to_string();
  auto par = b.parity();
  r["parity"] = par ? to_string(*par) : std::string("mixed");
  return r;
}

json cmd_verify(const std::string& name, int kmax, Tally& t) {
  BuiltAlgebra a = build(name);
  bool nonpositive_ok = true;
  std::string why;
  try {
    verify_nonpositive_part(a.span);
  } catch (const Error& e) {
    nonpositive_ok = false;
    why = e.what();
  }
  t.check(nonpositive_ok, "non-positive part closed and graded", why);
  GradingReport g = verify_grading(a.span);
  t.check(g.ok(), "grading [Z,X] = deg(X) X", g.ok() ? "" : g.failures.front());
  auto basis = a.span.all();
  GradingReport j = verify_jacobi(basis);
  t.check(j.ok(), "super-Jacobi on non-positive basis", j.ok() ? "" : j.failures.front());
  t.absorb(verify_preservation(a));
  json result = algebra_json(a);
  result["jacobi_triples"] = j.checks;
  if (a.desc.name == "mb(3|8)" || a.desc.name == "vle(3|6)") {
    G0Report g0 = verify_g0_structure(a);
    t.absorb(g0.checks);
  }
  bool consistent = consistency_check(a.span) == Consistency::consistent;
  result["consistency"] = consistent ? "consistent" : "inconsistent";
  if (kmax > 0) {
    ProlongResult rec = prolong_recursive(a.span, kmax);
    ProlongResult pre = prolong_preserver(a.desc.coords, a.desc.structures, kmax);
    CrossCheckReport cc = cross_check(rec, pre);
    t.check(cc.ok, "recursion and preserver spans agree", cc.failure);
    result["prolong_dims"] = span_dims(rec.dims());
  }
  result["generators_verified"] = a.named.empty() ? basis.size() : a.named.size();
  return result;
}

json cmd_prolong(const std::string& name, int kmax, const std::string& method, Tally& t) {
  BuiltAlgebra a = build(name);
  json result;
  result["algebra"] = a.desc.name;
  std::optional<ProlongResult> rec, pre;
  if (method == "recursion" || method == "both") rec = prolong_recursive(a.span, kmax);
  if (method == "preserver" || method == "both") {
    pre = prolong_preserver(a.desc.coords, a.desc.structures, kmax);
  }
  if (!rec && !pre) throw Error("unknown method " + method);
  if (rec) result["recursion"] = span_dims(rec->dims());
  if (pre) result["preserver"] = span_dims(pre->dims());
  if (rec && pre) {
    CrossCheckReport cc = cross_check(*rec, *pre);
    t.check(cc.ok, "recursion and preserver spans agree", cc.failure);
    json rows = json::array();
    for (const auto& row : cc.rows) {
      rows.push_back({{"degree", row.degree}, {"recursion", row.dim_a}, {"preserver", row.dim_b},
                      {"equal", row.equal}});
    }
    result["cross_check"] = rows;
  }
  GradingReport g = verify_grading(rec ? rec->span : pre->span);
  t.check(g.ok(), "grading of prolongation", g.ok() ? "" : g.failures.front());
  return result;
}

json cmd_sweep(int n, int range, Tally& t) {
  SweepReport r = toroidal_sweep(n, range);
  for (const auto& f : r.failures) t.check(false, "jacobiator", f);
  if (r.failures.empty()) t.check(true, "jacobiator");
  std::size_t disagreements = compare_sweep_paths(n, range, 200, 1);
  t.check(disagreements == 0, "fast and symbolic paths agree",
          disagreements ? std::to_string(disagreements) + " samples differ" : "");
  json result;
  result["N"] = r.n;
  result["range"] = r.range;
  result["triples_checked"] = r.triples_checked;
  result["failures"] = r.failures;
  return result;
}

json cmd_virasoro(Tally& t) {
  VirasoroReport r = reduce_to_virasoro();
  t.check(r.s_content_only_at_zero, "S content only at m+n = 0");
  t.check(r.cubic_coefficient, "S_0 coefficient c m^3 with c = -(c1+c2)");
  t.check(r.lambda.has_value(), "lambda solves the coboundary match");
  json result;
  result["c"] = "-(c1 + c2)";
  result["l2_lm2"] = r.l2_lm2.to_string();
  result["lambda"] = r.lambda ? r.lambda->to_string() : "none";
  result["kappa"] = r.kappa ? r.kappa->to_string() : "none";
  return result;
}

TensorRep make_rep(const std::string& kind, int n, const Rational& weight) {
  if (kind == "scalar") return TensorRep::scalar_density(n, weight);
  if (kind == "vector") return TensorRep::vector(n);
  if (kind == "covector") return TensorRep::covector(n);
  throw Error("unknown representation " + kind);
}

json cmd_jet(int n, int p, const std::string& weight, const std::string& rep_kind, int pairs,
             unsigned seed, Tally& t) {
  if (n < 1 || n > 3) throw Error("--dim must be 1, 2 or 3");
  if (p < 0) throw Error("--order must be nonnegative");
  TensorRep rep = make_rep(rep_kind, n, parse_rational(weight));
  std::vector<VarSpec> vars;
  for (int i = 1; i <= n; ++i) vars.push_back({"x" + std::to_string(i), Parity::even, 1});
  Coords cs = make_coords(vars);
  std::mt19937 rng(seed);
  std::size_t triangular = 0, rep_ok = 0;
  for (int k = 0; k < pairs; ++k) {
    SuperVectorField xi = random_poly_field(cs, rng, 3);
    SuperVectorField eta = random_poly_field(cs, rng, 3);
    bool tri = jet_matrices(xi, p, rep).block_triangular() && jet_matrices(eta, p, rep).block_triangular();
    triangular += tri;
    t.check(tri, "block triangular", xi.to_string());
    RepCheck rc = rep_property_check(xi, eta, p, rep);
    rep_ok += rc.ok;
    t.check(rc.ok, "representation property", rc.ok ? "" : rc.residuals.front());
  }
  json result;
  result["representation"] = rep.label();
  result["pairs"] = pairs;
  result["block_triangular"] = triangular;
  result["representation_property"] = rep_ok;
  SuperVectorField example(cs);
  example.set(0, SuperPolynomial::variable(cs, 0) * SuperPolynomial::variable(cs, 0));
  result["example"] = {{"xi", example.to_string()}, {"matrix", jet_matrix_json(jet_matrices(example, p, rep))}};
  result["classical"] = classical_realization(example, std::min(p, 1), rep).to_string();
  return result;
}

json cmd_kt(const std::string& path, bool expect_regular, Tally& t) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  nlohmann::json setup_json;
  try {
    setup_json = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed setup: ") + e.what());
  }
  try {
    std::vector<VarSpec> vars;
    for (const auto& f : setup_json.at("fields")) {
      std::string parity = f.value("parity", "even");
      if (parity != "even" && parity != "odd") throw Error("parity must be even or odd");
      vars.push_back({f.at("name").get<std::string>(), parity == "odd" ? Parity::odd : Parity::even,
                      f.value("weight", 1)});
    }
    KTSetup setup;
    setup.fields = make_coords(vars);
    for (const auto& e : setup_json.at("equations")) {
      setup.equations.push_back(parse_polynomial(setup.fields, e.get<std::string>()));
    }
    setup.cutoff = setup_json.value("cutoff", 4);
    int gmax = setup_json.value("gmax", 2);
    KTReport r = kt_cohomology(setup, gmax);
    t.check(r.delta_squared_zero, "delta^2 = 0");
    if (expect_regular) {
      for (int g = 1; g <= gmax; ++g) {
        t.check(r.total(g) == 0, "H^" + std::to_string(g) + " = 0",
                std::to_string(r.total(g)) + " cohomology classes");
      }
    }
    json result;
    result["fields"] = setup.fields->superdim();
    result["cutoff"] = setup.cutoff;
    json h = json::object();
    for (const auto& [g, by_deg] : r.dims) {
      json d = json::object();
      for (const auto& [deg, dim] : by_deg) d[std::to_string(deg)] = dim;
      h[std::to_string(g)] = {{"by_degree", d}, {"total", r.total(g)}};
    }
    result["H"] = h;
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed setup: ") + e.what());
  }
}

std::string fermion_csv() {
  std::ostringstream os;
  os << "multiplet,charges,generation1,generation2,generation3,form,classified_form,discrepancy\n";
  for (const auto& row : fermion_table()) {
    std::vector<std::string> charges, classified;
    for (const auto& c : row.printed_charges) charges.push_back(q(c));
    for (const auto& id : row.classified) classified.push_back(id.to_string());
    os << csv_cell(row.multiplet.to_string()) << "," << csv_cell(join(charges, " ")) << ","
       << csv_cell(row.names[0]) << "," << csv_cell(row.names[1]) << "," << csv_cell(row.names[2])
       << "," << csv_cell(row.printed_form ? row.printed_form->to_string() : "-") << ","
       << csv_cell(classified.empty() ? "-" : join(classified, " ")) << ","
       << csv_cell(row.discrepancy) << "\n";
  }
  return os.str();
}

json fermion_json(Tally& t) {
  json rows = json::array();
  for (const auto& row : fermion_table()) {
    t.check(row.charges_match, "charges of " + row.multiplet.to_string());
    json classified = json::array();
    for (const auto& id : row.classified) classified.push_back(id.to_string());
    rows.push_back({{"multiplet", row.multiplet.to_string()},
                    {"charges", rationals(row.printed_charges)},
                    {"computed_charges", rationals(row.charges)},
                    {"generation1", row.names[0]},
                    {"generation2", row.names[1]},
                    {"generation3", row.names[2]},
                    {"form", row.printed_form ? row.printed_form->to_string() : "-"},
                    {"classified_form", classified},
                    {"dimension", irrep_dimension(row.multiplet).get_str()},
                    {"discrepancy", row.discrepancy}});
  }
  return rows;
}

std::vector<FormModuleId> form_ids(int max) {
  std::vector<FormModuleId> ids;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int a = 0; a <= max; ++a) {
      for (int r = 0; r <= max; ++r) ids.push_back({f, a, r});
    }
  }
  return ids;
}

std::string formmods_csv(int max) {
  std::ostringstream os;
  os << "form,weight,dimension,charges,cp_conjugate,cp_weight\n";
  for (const auto& id : form_ids(max)) {
    Weight w = form_module_weight(id);
    FormModuleId c = cp_conjugate(id);
    std::vector<std::string> charges;
    for (const auto& x : electric_charges(w)) charges.push_back(q(x));
    os << id.to_string() << "," << csv_cell(w.to_string()) << "," << irrep_dimension(w).get_str()
       << "," << join(charges, " ") << "," << c.to_string() << ","
       << csv_cell(form_module_weight(c).to_string()) << "\n";
  }
  return os.str();
}

json formmods_json(int max, Tally& t) {
  json rows = json::array();
  for (const auto& id : form_ids(max)) {
    Weight w = form_module_weight(id);
    FormModuleId c = cp_conjugate(id);
    Weight cw = form_module_weight(c);
    t.check(cp_conjugate(c) == id && cw.y == -w.y, "CP of " + id.to_string());
    rows.push_back({{"form", id.to_string()},
                    {"weight", w.to_string()},
                    {"dimension", irrep_dimension(w).get_str()},
                    {"charges", rationals(electric_charges(w))},
                    {"cp_conjugate", c.to_string()},
                    {"cp_weight", cw.to_string()}});
  }
  return rows;
}

std::string regradings_csv() {
  std::ostringstream os;
  os << "name,superdim,depth\n";
  for (const auto& r : regrading_table()) {
    os << csv_cell(r.name) << "," << csv_cell(r.superdim) << "," << r.depth << "\n";
  }
  return os.str();
}

json regradings_json() {
  json rows = json::array();
  for (const auto& r : regrading_table()) {
    rows.push_back({{"name", r.name}, {"superdim", r.superdim}, {"depth", r.depth}});
  }
  return rows;
}

void write_override(const std::string& command, const std::string& ext, const std::string& body) {
  const char* dir = std::getenv("VFALG_OUTPUT_DIR");
  if (!dir || !*dir) return;
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / (command + "." + ext)) << body;
}

}  // namespace

Coords parse_coords(const std::string& spec) {
  std::vector<VarSpec> vars;
  auto bar = spec.find('|');
  auto add = [&](const std::string& part, Parity parity) {
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      int weight = 1;
      auto colon = item.find(':');
      if (colon != std::string::npos) {
        try {
          weight = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
          throw Error("bad weight in coordinate " + item);
        }
        item = trim(item.substr(0, colon));
      }
      if (weight <= 0) throw Error("weights must be positive: " + item);
      vars.push_back({item, parity, weight});
    }
  };
  add(spec.substr(0, bar), Parity::even);
  if (bar != std::string::npos) add(spec.substr(bar + 1), Parity::odd);
  if (vars.empty()) throw Error("no coordinates in '" + spec + "'");
  return make_coords(vars);
}

json algebra_json(const BuiltAlgebra& a) {
  json j;
  j["name"] = a.desc.name;
  j["superdim"] = a.desc.superdim();
  j["depth"] = a.desc.depth;
  json coords = json::array();
  for (const auto& v : a.desc.coords->vars()) {
    coords.push_back({{"name", v.name}, {"parity", to_string(v.parity)}, {"weight", v.weight}});
  }
  j["coordinates"] = coords;
  FormSpace fs(a.desc.coords);
  json structures = json::array();
  for (const auto& s : a.desc.structures) {
    json st = {{"kind", to_string(s.kind)}, {"label", s.label}};
    json forms = json::array();
    for (const auto& f : s.forms) forms.push_back(fs.to_string(f));
    if (!forms.empty()) st["forms"] = forms;
    json fields = json::array();
    for (const auto& f : s.fields) fields.push_back(f.to_string());
    if (!fields.empty()) st["fields"] = fields;
    if (s.kind == StructureKind::deformed_divergence) {
      st["beta"] = q(s.beta);
      st["n"] = s.n;
    }
    structures.push_back(std::move(st));
  }
  j["structures"] = structures;
  json dims = json::object();
  for (const auto& [k, piece] : a.span.pieces) dims[std::to_string(k)] = piece.size();
  j["dims"] = dims;
  json gens = json::array();
  if (!a.named.empty()) {
    for (const auto& g : a.named) {
      gens.push_back({{"name", g.name}, {"degree", g.degree}, {"field", g.field.to_string()}});
    }
  } else {
    for (const auto& [k, piece] : a.span.pieces) {
      for (const auto& x : piece) gens.push_back({{"degree", k}, {"field", x.to_string()}});
    }
  }
  j["generators"] = gens;
  return j;
}

json jet_matrix_json(const JetActionMatrix& m) {
  json j;
  j["coords"] = m.coords()->superdim();
  j["p"] = m.p();
  j["dim"] = m.dim();
  json idx = json::array();
  for (const auto& i : m.indices()) idx.push_back(i);
  j["indices"] = idx;
  // blocks[m][n] is the dim x dim matrix T^n_m
  json blocks = json::array();
  for (std::size_t a = 0; a < m.indices().size(); ++a) {
    json row = json::array();
    for (std::size_t n = 0; n < m.indices().size(); ++n) {
      json block = json::array();
      for (std::size_t x = 0; x < m.dim(); ++x) {
        json r = json::array();
        for (std::size_t y = 0; y < m.dim(); ++y) r.push_back(m.entry(n, a, x, y).to_string());
        block.push_back(r);
      }
      row.push_back(block);
    }
    blocks.push_back(row);
  }
  j["blocks"] = blocks;
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with vector-field Lie superalgebras"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  std::string coords, xs, ys;
  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two vector fields");
  bracket_cmd->add_option("--coords", coords, "even|odd coordinates, e.g. \"x,y|th\"")->required();
  bracket_cmd->add_option("x", xs)->required();
  bracket_cmd->add_option("y", ys)->required();

  std::string algebra;
  int kmax = 0;
  auto* verify_cmd = app.add_subcommand("verify-algebra", "build an algebra and run all verifiers");
  verify_cmd->add_option("name", algebra)->required();
  verify_cmd->add_option("--kmax", kmax)->check(CLI::Range(0, 8));

  std::string method = "both";
  auto* prolong_cmd = app.add_subcommand("prolong", "Cartan prolongation");
  prolong_cmd->add_option("name", algebra)->required();
  prolong_cmd->add_option("--kmax", kmax)->required()->check(CLI::Range(0, 8));
  prolong_cmd->add_option("--method", method)->check(CLI::IsMember({"recursion", "preserver", "both"}));

  int dim = 1, range = 2;
  auto* sweep_cmd = app.add_subcommand("toroidal-sweep", "Jacobi sweep of the toroidal algebra");
  sweep_cmd->add_option("--dim", dim)->required()->check(CLI::Range(1, 3));
  sweep_cmd->add_option("--range", range)->check(CLI::Range(0, 3));

  auto* vir_cmd = app.add_subcommand("virasoro-reduce", "1D reduction to the Virasoro algebra");

  int order = 1, pairs = 10;
  unsigned seed = 1;
  std::string weight = "0", rep = "scalar";
  auto* jet_cmd = app.add_subcommand("jet-check", "jet matrices and representation property");
  jet_cmd->add_option("--dim", dim)->required()->check(CLI::Range(1, 3));
  jet_cmd->add_option("--order", order)->required()->check(CLI::Range(0, 4));
  jet_cmd->add_option("--weight", weight, "density weight (rational)");
  jet_cmd->add_option("--rep", rep)->check(CLI::IsMember({"scalar", "vector", "covector"}));
  jet_cmd->add_option("--pairs", pairs)->check(CLI::Range(0, 1000));
  jet_cmd->add_option("--seed", seed);

  std::string setup;
  auto* kt_cmd = app.add_subcommand("kt", "Koszul-Tate cohomology");
  bool expect_regular = false;
  kt_cmd->add_option("--setup", setup, "JSON setup file")->required();
  kt_cmd->add_flag("--expect-regular", expect_regular, "fail unless H^g = 0 for 1 <= g <= gmax");

  std::string table, format = "json";
  int max = 2;
  auto* tables_cmd = app.add_subcommand("tables", "representation tables");
  tables_cmd->add_option("which", table)->required()->check(CLI::IsMember({"fermions", "formmods", "regradings"}));
  tables_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  tables_cmd->add_option("--max", max)->check(CLI::Range(0, 10));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  auto start = std::chrono::steady_clock::now();
  Tally t;
  json params = json::object();
  json result;
  std::string command = app.get_subcommands().front()->get_name();
  std::string csv;
  try {
    if (bracket_cmd->parsed()) {
      params = {{"coords", coords}, {"x", xs}, {"y", ys}};
      result = cmd_bracket(coords, xs, ys, t);
    } else if (verify_cmd->parsed()) {
      params = {{"name", algebra}, {"kmax", kmax}};
      result = cmd_verify(algebra, kmax, t);
    } else if (prolong_cmd->parsed()) {
      params = {{"name", algebra}, {"kmax", kmax}, {"method", method}};
      result = cmd_prolong(algebra, kmax, method, t);
    } else if (sweep_cmd->parsed()) {
      params = {{"dim", dim}, {"range", range}};
      result = cmd_sweep(dim, range, t);
    } else if (vir_cmd->parsed()) {
      result = cmd_virasoro(t);
    } else if (jet_cmd->parsed()) {
      params = {{"dim", dim}, {"order", order}, {"weight", q(parse_rational(weight))}, {"rep", rep},
                {"pairs", pairs}, {"seed", seed}};
      result = cmd_jet(dim, order, weight, rep, pairs, seed, t);
    } else if (kt_cmd->parsed()) {
      params = {{"setup", setup}, {"expect_regular", expect_regular}};
      result = cmd_kt(setup, expect_regular, t);
    } else if (tables_cmd->parsed()) {
      params = {{"which", table}, {"format", format}};
      if (table == "formmods") params["max"] = max;
      if (format == "csv") {
        csv = table == "fermions" ? fermion_csv() : table == "formmods" ? formmods_csv(max) : regradings_csv();
      }
      if (table == "fermions") {
        result = fermion_json(t);
      } else if (table == "formmods") {
        result = formmods_json(max, t);
      } else {
        result = regradings_json();
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  std::string body;
  if (!csv.empty()) {
    body = csv;
    write_override(command, "csv", body);
  } else {
    body = report(command, params, t, result).dump(2) + "\n";
    write_override(command, "json", body);
  }
  out << body;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "wall_time: " << secs << " s\n";
  return t.failures.empty() ? ok : check_failed;
}

}  // namespace vfalg::cli
