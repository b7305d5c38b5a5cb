#include "vfalg/jetfock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vfalg {

int order(const MultiIndex& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<MultiIndex> multi_indices(int n, int p) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= p; ++k) {
    // compositions of k into n parts, lexicographically descending
    MultiIndex m(n, 0);
    if (n == 0) break;
    std::vector<MultiIndex> level;
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == n - 1) {
        m[i] = left;
        level.push_back(m);
        return;
      }
      for (int v = left; v >= 0; --v) {
        m[i] = v;
        self(self, i + 1, left - v);
      }
    };
    rec(rec, 0, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------- TensorRep

namespace {

RMatrix zero_matrix(std::size_t d) { return RMatrix(d, std::vector<Rational>(d, Rational(0))); }

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
  const std::size_t d = a.size();
  RMatrix c = zero_matrix(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

RMatrix unit_matrix(std::size_t d, std::size_t i, std::size_t j, const Rational& v) {
  RMatrix m = zero_matrix(d);
  m[i][j] = v;
  return m;
}

}  // namespace

TensorRep::TensorRep(int n, std::size_t dim, std::vector<std::vector<RMatrix>> t, std::string label)
    : n_(n), dim_(dim), t_(std::move(t)), label_(std::move(label)) {
  if (t_.size() != static_cast<std::size_t>(n)) throw Error("TensorRep: need N x N matrices");
  for (const auto& row : t_) {
    if (row.size() != static_cast<std::size_t>(n)) throw Error("TensorRep: need N x N matrices");
    for (const auto& m : row) {
      if (m.size() != dim || std::any_of(m.begin(), m.end(), [&](const auto& r) { return r.size() != dim; })) {
        throw Error("TensorRep: matrix of wrong size");
      }
    }
  }
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      for (int rho = 0; rho < n; ++rho) {
        for (int sigma = 0; sigma < n; ++sigma) {
          RMatrix lhs = matmul(t_[mu][nu], t_[rho][sigma]);
          RMatrix other = matmul(t_[rho][sigma], t_[mu][nu]);
          for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
              Rational expect = 0;
              if (rho == nu) expect += t_[mu][sigma][i][j];
              if (mu == sigma) expect -= t_[rho][nu][i][j];
              if (lhs[i][j] - other[i][j] != expect) {
                throw Error("TensorRep: gl(N) relation fails at (" + std::to_string(mu + 1) +
                            std::to_string(nu + 1) + ", " + std::to_string(rho + 1) +
                            std::to_string(sigma + 1) + ")");
              }
            }
          }
        }
      }
    }
  }
}

TensorRep TensorRep::scalar_density(int n, const Rational& lambda) {
  std::vector<std::vector<RMatrix>> t(n, std::vector<RMatrix>(n, zero_matrix(1)));
  for (int mu = 0; mu < n; ++mu) t[mu][mu][0][0] = lambda;
  return TensorRep(n, 1, std::move(t), "density(" + to_string(lambda) + ")");
}

TensorRep TensorRep::vector(int n) {
  std::vector<std::vector<RMatrix>> t(n, std::vector<RMatrix>(n));
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) t[mu][nu] = unit_matrix(n, nu, mu, -1);
  }
  return TensorRep(n, static_cast<std::size_t>(n), std::move(t), "vector");
}

TensorRep TensorRep::covector(int n) {
  std::vector<std::vector<RMatrix>> t(n, std::vector<RMatrix>(n));
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) t[mu][nu] = unit_matrix(n, mu, nu, 1);
  }
  return TensorRep(n, static_cast<std::size_t>(n), std::move(t), "covector");
}

// ---------------------------------------------------------------- jet matrices

JetActionMatrix::JetActionMatrix(Coords coords, int p, std::size_t dim)
    : coords_(std::move(coords)), p_(p), dim_(dim) {
  indices_ = multi_indices(static_cast<int>(coords_->size()), p);
  entries_.assign(indices_.size() * indices_.size() * dim * dim, SuperPolynomial(coords_));
}

std::size_t JetActionMatrix::position(const MultiIndex& m) const {
  auto it = std::find(indices_.begin(), indices_.end(), m);
  if (it == indices_.end()) throw Error("JetActionMatrix: multi-index out of range");
  return static_cast<std::size_t>(it - indices_.begin());
}

std::size_t JetActionMatrix::slot(std::size_t n, std::size_t m, std::size_t a, std::size_t b) const {
  return ((m * indices_.size() + n) * dim_ + a) * dim_ + b;
}

const SuperPolynomial& JetActionMatrix::entry(std::size_t n, std::size_t m, std::size_t a,
                                              std::size_t b) const {
  return entries_.at(slot(n, m, a, b));
}

void JetActionMatrix::set(std::size_t n, std::size_t m, std::size_t a, std::size_t b,
                          SuperPolynomial v) {
  entries_.at(slot(n, m, a, b)) = std::move(v);
}

bool JetActionMatrix::block_triangular() const {
  for (std::size_t m = 0; m < indices_.size(); ++m) {
    for (std::size_t n = 0; n < indices_.size(); ++n) {
      if (order(indices_[n]) <= order(indices_[m])) continue;
      for (std::size_t a = 0; a < dim_; ++a) {
        for (std::size_t b = 0; b < dim_; ++b) {
          if (!entry(n, m, a, b).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Linear combinations of jet symbols phi_{k,b} with polynomial coefficients.
using JetExpr = std::map<std::pair<MultiIndex, std::size_t>, SuperPolynomial>;

void add_to(JetExpr& e, const MultiIndex& k, std::size_t b, const SuperPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace({k, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

MultiIndex shifted(MultiIndex k, std::size_t mu) {
  ++k[mu];
  return k;
}

JetExpr total_derivative(const JetExpr& e, std::size_t mu) {
  JetExpr out;
  for (const auto& [key, c] : e) {
    add_to(out, key.first, key.second, partial(c, mu));
    add_to(out, shifted(key.first, mu), key.second, c);
  }
  return out;
}

void require_even_base(const SuperVectorField& xi, const TensorRep& rep) {
  const auto& cs = *xi.coords();
  if (cs.odd_count() != 0) throw Error("jet_matrices: base must be purely even");
  if (static_cast<int>(cs.size()) != rep.n()) throw Error("jet_matrices: representation rank mismatch");
}

}  // namespace

JetActionMatrix jet_matrices(const SuperVectorField& xi, int p, const TensorRep& rep) {
  require_even_base(xi, rep);
  if (p < 0) throw Error("jet_matrices: p must be nonnegative");
  const Coords& coords = xi.coords();
  const std::size_t n = coords->size();
  const std::size_t d = rep.dim();
  JetActionMatrix out(coords, p, d);
  const MultiIndex zero(n, 0);

  // d_nu xi^mu, reused for every jet component
  std::vector<std::vector<SuperPolynomial>> dxi(n);
  for (std::size_t nu = 0; nu < n; ++nu) {
    for (std::size_t mu = 0; mu < n; ++mu) dxi[nu].push_back(partial(xi[mu], nu));
  }

  for (std::size_t mi = 0; mi < out.indices().size(); ++mi) {
    const MultiIndex& m = out.indices()[mi];
    for (std::size_t a = 0; a < d; ++a) {
      JetExpr e;
      for (std::size_t mu = 0; mu < n; ++mu) {
        MultiIndex unit = zero;
        unit[mu] = 1;
        add_to(e, unit, a, -xi[mu]);
      }
      for (std::size_t nu = 0; nu < n; ++nu) {
        for (std::size_t mu = 0; mu < n; ++mu) {
          const RMatrix& t = rep.t(static_cast<int>(nu), static_cast<int>(mu));
          for (std::size_t b = 0; b < d; ++b) {
            if (t[a][b] != 0) add_to(e, zero, b, -t[a][b] * dxi[nu][mu]);
          }
        }
      }
      for (std::size_t mu = 0; mu < n; ++mu) {
        for (int r = 0; r < m[mu]; ++r) e = total_derivative(e, mu);
      }
      // transport of the base point
      for (std::size_t mu = 0; mu < n; ++mu) add_to(e, shifted(m, mu), a, xi[mu]);

      for (const auto& [key, c] : e) {
        if (order(key.first) > order(m)) {
          throw Error("jet_matrices: order " + std::to_string(order(key.first)) +
                      " term survives at |m| = " + std::to_string(order(m)));
        }
        out.set(out.position(key.first), mi, a, key.second, -c);
      }
    }
  }
  if (!out.block_triangular()) throw Error("jet_matrices: result not block triangular");
  return out;
}

namespace {

// Linear in jet coordinates, keyed by (position, component).
using LinExpr = std::map<std::pair<std::size_t, std::size_t>, SuperPolynomial>;

void add_lin(LinExpr& e, std::size_t n, std::size_t b, const SuperPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace({n, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

// L_xi on c(q) phi_{n,b}: transport differentiates c, the matrix acts on phi.
LinExpr act(const SuperVectorField& xi, const JetActionMatrix& j, const LinExpr& e) {
  LinExpr out;
  const std::size_t k = j.indices().size();
  for (const auto& [key, c] : e) {
    const auto [n, b] = key;
    add_lin(out, n, b, xi.apply(c));
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t e2 = 0; e2 < j.dim(); ++e2) {
        const SuperPolynomial& t = j.entry(l, n, b, e2);
        if (!t.is_zero()) add_lin(out, l, e2, -(c * t));
      }
    }
  }
  return out;
}

}  // namespace

RepCheck rep_property_check(const SuperVectorField& xi, const SuperVectorField& eta, int p,
                            const TensorRep& rep) {
  RepCheck report;
  SuperVectorField br = bracket(xi, eta);
  JetActionMatrix jx = jet_matrices(xi, p, rep);
  JetActionMatrix je = jet_matrices(eta, p, rep);
  JetActionMatrix jb = jet_matrices(br, p, rep);

  for (std::size_t mu = 0; mu < xi.dim(); ++mu) {
    SuperPolynomial lhs = xi.apply(eta[mu]) - eta.apply(xi[mu]);
    if (!(lhs == br[mu])) {
      report.ok = false;
      report.residuals.push_back("q^" + std::to_string(mu + 1) + ": " + (lhs - br[mu]).to_string());
    }
  }
  for (std::size_t m = 0; m < jx.indices().size(); ++m) {
    for (std::size_t a = 0; a < rep.dim(); ++a) {
      LinExpr phi;
      add_lin(phi, m, a, SuperPolynomial::constant(xi.coords(), 1));
      LinExpr lhs = act(xi, jx, act(eta, je, phi));
      for (const auto& [key, c] : act(eta, je, act(xi, jx, phi))) add_lin(lhs, key.first, key.second, -c);
      for (const auto& [key, c] : act(br, jb, phi)) add_lin(lhs, key.first, key.second, -c);
      for (const auto& [key, c] : lhs) {
        report.ok = false;
        std::ostringstream os;
        os << "phi_{" << m << "," << a << "} -> phi_{" << key.first << "," << key.second
           << "}: " << c.to_string();
        report.residuals.push_back(os.str());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- classical realization

bool ClassicalExpr::operator==(const ClassicalExpr& o) const {
  return p == o.p && dim == o.dim && transport == o.transport && field == o.field;
}

std::string ClassicalExpr::to_string() const {
  auto mi = [](const MultiIndex& m) {
    std::string s;
    for (int v : m) s += std::to_string(v);
    return s;
  };
  std::string out;
  auto append = [&](const SuperPolynomial& c, const std::string& sym) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + sym;
  };
  for (std::size_t mu = 0; mu < transport.size(); ++mu) {
    if (!transport[mu].is_zero()) append(transport[mu], "*p_" + std::to_string(mu + 1));
  }
  for (const auto& [key, c] : field) {
    const auto& [m, a, n, b] = key;
    std::string sym = "*pi^{," + mi(indices[m]) + "}";
    if (dim > 1) sym += "_" + std::to_string(a + 1);
    sym += "*phi_{," + mi(indices[n]) + "}";
    if (dim > 1) sym += "_" + std::to_string(b + 1);
    append(c, sym);
  }
  return "int dt { " + (out.empty() ? std::string("0") : out) + " }";
}

ClassicalExpr classical_realization(const SuperVectorField& xi, int p, const TensorRep& rep) {
  JetActionMatrix j = jet_matrices(xi, p, rep);
  ClassicalExpr out;
  out.coords = xi.coords();
  out.p = p;
  out.dim = rep.dim();
  out.indices = j.indices();
  out.transport = xi.components();
  for (std::size_t m = 0; m < j.indices().size(); ++m) {
    for (std::size_t n = 0; n < j.indices().size(); ++n) {
      for (std::size_t a = 0; a < rep.dim(); ++a) {
        for (std::size_t b = 0; b < rep.dim(); ++b) {
          const SuperPolynomial& t = j.entry(n, m, a, b);
          if (!t.is_zero()) out.field.emplace(std::tuple{m, a, n, b}, -t);
        }
      }
    }
  }
  return out;
}

namespace {

void add_field(ClassicalExpr& e, const std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>& key,
               const SuperPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.field.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.field.erase(it);
  }
}

SuperVectorField transport_field(const ClassicalExpr& e) {
  SuperVectorField x(e.coords);
  for (std::size_t mu = 0; mu < e.transport.size(); ++mu) x.set(mu, e.transport[mu]);
  return x;
}

}  // namespace

ClassicalExpr canonical_bracket(const ClassicalExpr& a, const ClassicalExpr& b) {
  if (a.p != b.p || a.dim != b.dim || !same_coords(a.coords, b.coords)) {
    throw Error("canonical_bracket: incompatible expressions");
  }
  ClassicalExpr out;
  out.coords = a.coords;
  out.p = a.p;
  out.dim = a.dim;
  out.indices = a.indices;
  SuperVectorField xa = transport_field(a);
  SuperVectorField xb = transport_field(b);
  // [f p_mu, g p_nu] = f d_mu g p_nu - g d_nu f p_mu
  out.transport = bracket(xa, xb).components();
  // [f p_mu, pi g phi] = f d_mu g pi phi and its mirror
  for (const auto& [key, g] : b.field) add_field(out, key, xa.apply(g));
  for (const auto& [key, f] : a.field) add_field(out, key, -xb.apply(f));
  // [pi^m_a f phi_{n b}, pi^k_c g phi_{l e}]
  //   = f g (delta^{m a}_{l e} pi^k_c phi_{n b} - delta^{k c}_{n b} pi^m_a phi_{l e})
  for (const auto& [ka, f] : a.field) {
    const auto& [m, ai, n, bi] = ka;
    for (const auto& [kb, g] : b.field) {
      const auto& [k, ci, l, ei] = kb;
      if (m == l && ai == ei) add_field(out, {k, ci, n, bi}, f * g);
      if (k == n && ci == bi) add_field(out, {m, ai, l, ei}, -(f * g));
    }
  }
  return out;
}

// ---------------------------------------------------------------- Koszul-Tate

int KTComplex::afn(const Monomial& m) const {
  int g = 0;
  for (std::size_t i = nfields; i < m.exps.size(); ++i) g += m.exps[i];
  return g;
}

KTComplex kt_complex(const KTSetup& setup) {
  const auto& fs = *setup.fields;
  if (setup.equations.size() != fs.size()) throw Error("kt_complex: one equation per field");
  std::vector<VarSpec> vars = fs.vars();
  for (std::size_t a = 0; a < fs.size(); ++a) {
    const SuperPolynomial& e = setup.equations[a];
    if (!same_coords(e.coords(), setup.fields)) throw Error("kt_complex: equation over wrong coordinates");
    int w = fs[a].weight;
    if (!e.is_zero()) {
      WeightedDegree deg = e.weighted_degree();
      if (deg.kind != WeightedDegree::Kind::homogeneous) {
        throw Error("kt_complex: equation " + std::to_string(a + 1) + " is not weighted homogeneous");
      }
      auto par = e.parity();
      if (!par || *par != fs[a].parity) {
        throw Error("kt_complex: equation " + std::to_string(a + 1) + " must share its field's parity");
      }
      w = deg.value;
    }
    if (w <= 0) throw Error("kt_complex: antifield weight must be positive");
    vars.push_back({fs[a].name + "*", fs[a].parity + Parity::odd, w});
  }
  KTComplex out{make_coords(vars), SuperVectorField(make_coords(vars)), fs.size()};
  out.delta = SuperVectorField(out.coords);
  for (std::size_t a = 0; a < fs.size(); ++a) {
    out.delta.set(fs.size() + a, embed(setup.equations[a], out.coords));
  }
  return out;
}

std::size_t KTReport::total(int g) const {
  auto it = dims.find(g);
  if (it == dims.end()) return 0;
  std::size_t s = 0;
  for (const auto& [deg, d] : it->second) s += d;
  return s;
}

KTReport kt_cohomology(const KTSetup& setup, int gmax) {
  KTComplex cx = kt_complex(setup);
  KTReport report;
  report.delta_squared_zero = true;
  for (int deg = 0; deg <= setup.cutoff; ++deg) {
    std::map<int, std::vector<Monomial>> by_afn;
    for (auto& m : monomials_of_weight(*cx.coords, deg)) by_afn[cx.afn(m)].push_back(std::move(m));
    // rank of delta: C^g -> C^{g-1} at this degree
    std::map<int, std::size_t> ranks;
    for (int g = 1; g <= gmax + 1; ++g) {
      KeyIndex<Monomial> index;
      std::vector<SparseVector> rows;
      for (const auto& m : by_afn[g]) {
        SuperPolynomial img = cx.delta.apply(SuperPolynomial::monomial(cx.coords, m));
        if (!cx.delta.apply(img).is_zero()) report.delta_squared_zero = false;
        SparseVector v;
        for (const auto& [mono, c] : img.terms()) v[index(mono)] = c;
        rows.push_back(std::move(v));
      }
      ranks[g] = rank(rows, index.size());
    }
    for (int g = 0; g <= gmax; ++g) {
      std::size_t dim = by_afn[g].size();
      std::size_t h = dim - (g > 0 ? ranks[g] : 0) - ranks[g + 1];
      report.dims[g][deg] = h;
    }
  }
  return report;
}

}  // namespace vfalg
