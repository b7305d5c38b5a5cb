#include "vfalg/svf.hpp"

#include <algorithm>

namespace vfalg {

SuperVectorField::SuperVectorField(Coords coords) : coords_(std::move(coords)) {
  if (!coords_) throw Error("vector field without coordinate system");
  comps_.assign(coords_->size(), SuperPolynomial(coords_));
}

SuperVectorField SuperVectorField::partial(Coords coords, std::size_t direction) {
  SuperVectorField x(coords);
  x.set(direction, SuperPolynomial::constant(coords, 1));
  return x;
}

SuperVectorField SuperVectorField::partial(Coords coords, std::string_view direction) {
  auto i = coords->index(direction);
  return partial(std::move(coords), i);
}

void SuperVectorField::set(std::size_t i, SuperPolynomial p) {
  if (!same_coords(p.coords(), coords_)) throw Error("mismatched coordinate systems");
  comps_.at(i) = std::move(p);
}

void SuperVectorField::add(std::size_t i, const SuperPolynomial& p) { comps_.at(i) += p; }

bool SuperVectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const auto& p) { return p.is_zero(); });
}

std::optional<Parity> SuperVectorField::parity() const {
  std::optional<Parity> p;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    auto c = comps_[i].parity();
    if (!c) return std::nullopt;
    Parity q = *c + (*coords_)[i].parity;
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::even);
}

WeightedDegree SuperVectorField::weighted_degree() const {
  WeightedDegree d;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    for (const auto& [m, c] : comps_[i].terms()) {
      int w = vfalg::weighted_degree(*coords_, m) - (*coords_)[i].weight;
      if (d.kind == WeightedDegree::Kind::any) {
        d = {WeightedDegree::Kind::homogeneous, w};
      } else if (d.value != w) {
        return {WeightedDegree::Kind::inhomogeneous, 0};
      }
    }
  }
  return d;
}

SuperVectorField SuperVectorField::part(Parity p) const {
  SuperVectorField r(coords_);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    r.comps_[i] = comps_[i].part(p + (*coords_)[i].parity);
  }
  return r;
}

SuperPolynomial SuperVectorField::apply(const SuperPolynomial& f) const {
  if (!same_coords(f.coords(), coords_)) throw Error("mismatched coordinate systems");
  SuperPolynomial r(coords_);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    auto df = vfalg::partial(f, i);
    if (!df.is_zero()) r += comps_[i] * df;
  }
  return r;
}

SuperVectorField& SuperVectorField::operator+=(const SuperVectorField& o) {
  if (!same_coords(o.coords_, coords_)) throw Error("mismatched coordinate systems");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

SuperVectorField& SuperVectorField::operator-=(const SuperVectorField& o) {
  if (!same_coords(o.coords_, coords_)) throw Error("mismatched coordinate systems");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

SuperVectorField& SuperVectorField::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

SuperVectorField operator*(const SuperPolynomial& f, const SuperVectorField& x) {
  SuperVectorField r(x.coords());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero()) r.set(i, f * x[i]);
  }
  return r;
}

bool SuperVectorField::operator==(const SuperVectorField& o) const {
  return same_coords(coords_, o.coords_) && comps_ == o.comps_;
}

std::string SuperVectorField::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const auto& c = comps_[i];
    if (c.is_zero()) continue;
    std::string d = "D(" + (*coords_)[i].name + ")";
    std::string term;
    if (c.size() == 1) {
      const auto& [m, q] = *c.terms().begin();
      std::string mono = monomial_to_string(*coords_, m);
      Rational a = abs(q);
      if (a != 1) term += vfalg::to_string(a) + '*';
      if (!mono.empty()) term += mono + '*';
      term += d;
      if (s.empty()) {
        s = (q < 0 ? "-" : "") + term;
      } else {
        s += (q < 0 ? " - " : " + ") + term;
      }
    } else {
      term = "(" + c.to_string() + ")*" + d;
      s += s.empty() ? term : " + " + term;
    }
  }
  return s.empty() ? "0" : s;
}

SuperVectorField bracket(const SuperVectorField& x, const SuperVectorField& y) {
  if (!same_coords(x.coords(), y.coords())) throw Error("mismatched coordinate systems");
  auto px = x.parity();
  auto py = y.parity();
  if (!px || !py) throw Error("bracket of a field with inhomogeneous parity");
  const bool minus = !(bit(*px) & bit(*py));
  SuperVectorField r(x.coords());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    SuperPolynomial c = x.apply(y[j]);
    SuperPolynomial t = y.apply(x[j]);
    if (minus) c -= t; else c += t;
    r.set(j, std::move(c));
  }
  return r;
}

SuperVectorField bracket_split(const SuperVectorField& x, const SuperVectorField& y) {
  SuperVectorField r(x.coords());
  for (Parity a : {Parity::even, Parity::odd}) {
    auto xa = x.part(a);
    if (xa.is_zero()) continue;
    for (Parity b : {Parity::even, Parity::odd}) {
      auto yb = y.part(b);
      if (!yb.is_zero()) r += bracket(xa, yb);
    }
  }
  return r;
}

SuperVectorField super_jacobiator(const SuperVectorField& x, const SuperVectorField& y,
                                  const SuperVectorField& z) {
  auto px = x.parity(), py = y.parity(), pz = z.parity();
  if (!px || !py || !pz) throw Error("jacobiator of a field with inhomogeneous parity");
  SuperVectorField r = sign_of(*px, *pz) * bracket(x, bracket(y, z));
  r += sign_of(*py, *px) * bracket(y, bracket(z, x));
  r += sign_of(*pz, *py) * bracket(z, bracket(x, y));
  return r;
}

SuperPolynomial divergence(const SuperVectorField& x) {
  auto px = x.parity();
  if (!px) throw Error("divergence of a field with inhomogeneous parity");
  SuperPolynomial r(x.coords());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    Parity pi = (*x.coords())[i].parity;
    auto t = partial(x[i], i);
    if ((bit(*px) & bit(pi)) ^ bit(pi)) t = -t;
    r += t;
  }
  return r;
}

SuperVectorField grading_operator(const Coords& coords) {
  SuperVectorField z(coords);
  for (std::size_t i = 0; i < coords->size(); ++i) {
    z.set(i, SuperPolynomial::variable(coords, i) * Rational((*coords)[i].weight));
  }
  return z;
}

SparseVector field_vector(const SuperVectorField& x, KeyIndex<FieldKey>& index) {
  SparseVector v;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (const auto& [m, c] : x[i].terms()) v[index({i, m})] = c;
  }
  return v;
}

SuperVectorField field_from_vector(const Coords& coords, const SparseVector& v,
                                   const KeyIndex<FieldKey>& index) {
  SuperVectorField x(coords);
  for (const auto& [col, c] : v) {
    const auto& [dir, mono] = index.key(col);
    x.add(dir, SuperPolynomial::monomial(coords, mono, c));
  }
  return x;
}

// ---------------------------------------------------------------------------

namespace {

Coords doubled(const Coords& base) {
  std::vector<VarSpec> vars = base->vars();
  for (const auto& v : base->vars()) {
    vars.push_back({"d" + v.name, v.parity + Parity::odd, v.weight});
  }
  return make_coords(std::move(vars));
}

}  // namespace

FormSpace::FormSpace(Coords base) : base_(std::move(base)), ext_(doubled(base_)) {}

SuperPolynomial FormSpace::function(const SuperPolynomial& f) const { return embed(f, ext_); }

SuperPolynomial FormSpace::dx(std::size_t i) const {
  return SuperPolynomial::variable(ext_, differential_index(i));
}

SuperPolynomial FormSpace::dx(std::string_view name) const { return dx(base_->index(name)); }

SuperVectorField FormSpace::d_field() const {
  SuperVectorField d(ext_);
  for (std::size_t i = 0; i < base_->size(); ++i) d.set(i, dx(i));
  return d;
}

SuperVectorField FormSpace::interior_field(const SuperVectorField& x) const {
  if (!same_coords(x.coords(), base_)) throw Error("field not on the base space");
  SuperVectorField r(ext_);
  for (std::size_t i = 0; i < base_->size(); ++i) {
    if (!x[i].is_zero()) r.set(differential_index(i), function(x[i]));
  }
  return r;
}

SuperVectorField FormSpace::lie_field(const SuperVectorField& x) const {
  return bracket(interior_field(x), d_field());
}

SuperPolynomial FormSpace::d(const SuperPolynomial& form) const { return d_field().apply(form); }

SuperPolynomial FormSpace::interior(const SuperVectorField& x, const SuperPolynomial& form) const {
  return interior_field(x).apply(form);
}

SuperPolynomial FormSpace::lie_derivative(const SuperVectorField& x,
                                          const SuperPolynomial& form) const {
  return lie_field(x).apply(form);
}

std::string FormSpace::to_string(const SuperPolynomial& form) const { return form.to_string(); }

// ---------------------------------------------------------------------------

int GradedSpan::depth() const {
  for (const auto& [k, v] : pieces) {
    if (!v.empty()) return k < 0 ? -k : 0;
  }
  return 0;
}

std::size_t GradedSpan::dim(int k) const {
  auto it = pieces.find(k);
  return it == pieces.end() ? 0 : it->second.size();
}

std::vector<SuperVectorField> GradedSpan::all() const {
  std::vector<SuperVectorField> out;
  for (const auto& [k, v] : pieces) out.insert(out.end(), v.begin(), v.end());
  return out;
}

FieldSpan::FieldSpan(Coords coords, const std::vector<SuperVectorField>& gens)
    : coords_(std::move(coords)) {
  for (const auto& g : gens) add(g);
}

bool FieldSpan::add(const SuperVectorField& x) {
  if (!echelon_.insert(field_vector(x, index_))) return false;
  basis_.push_back(x);
  return true;
}

bool FieldSpan::contains(const SuperVectorField& x) {
  return echelon_.in_row_space(field_vector(x, index_));
}

std::optional<std::vector<Rational>> FieldSpan::express(const SuperVectorField& x) {
  std::vector<SparseVector> cols;
  for (const auto& b : basis_) cols.push_back(field_vector(b, index_));
  SparseVector target = field_vector(x, index_);
  std::map<std::size_t, SparseVector> by_key;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [k, v] : cols[j]) by_key[k][j] = v;
  }
  for (const auto& [k, v] : target) by_key[k];
  std::vector<SparseVector> a;
  std::vector<Rational> b;
  for (auto& [k, r] : by_key) {
    a.push_back(r);
    auto it = target.find(k);
    b.push_back(it == target.end() ? Rational(0) : it->second);
  }
  auto sol = solve(a, b, basis_.size());
  if (!sol) return std::nullopt;
  std::vector<Rational> out(basis_.size(), Rational(0));
  for (const auto& [j, v] : *sol) out[j] = v;
  return out;
}

SuperPolynomial div_beta(const SuperPolynomial& f, const Rational& beta, int n) {
  const auto& cs = *f.coords();
  if (n < 0 || cs.size() != static_cast<std::size_t>(2 * n + 1) || cs[0].parity != Parity::odd) {
    throw Error("div_beta: coordinates must be (tau, u^1..u^n, theta_1..theta_n)");
  }
  for (int i = 0; i < n; ++i) {
    if (cs[1 + i].parity != Parity::even || cs[1 + n + i].parity != Parity::odd) {
      throw Error("div_beta: coordinates must be (tau, u^1..u^n, theta_1..theta_n)");
    }
  }
  SuperPolynomial out(f.coords());
  for (Parity p : {Parity::even, Parity::odd}) {
    SuperPolynomial g = f.part(p);
    if (g.is_zero()) continue;
    SuperPolynomial s(f.coords());
    for (int i = 0; i < n; ++i) s += partial(partial(g, 1 + n + i), 1 + i);
    SuperPolynomial dt = partial(g, 0);
    SuperPolynomial euler = dt * Rational(-n * beta);
    for (int i = 1; i <= 2 * n; ++i) {
      euler += SuperPolynomial::variable(f.coords(), i) * partial(dt, i);
    }
    s += euler;
    // (-)^f read as the parity of the odd contact field M_f, |M_f| = |f| + 1.
    s *= Rational(p == Parity::odd ? 2 : -2);
    out += s;
  }
  return out;
}

bool same_span(const Coords& coords, const std::vector<SuperVectorField>& a,
               const std::vector<SuperVectorField>& b) {
  FieldSpan sa(coords, a);
  FieldSpan sb(coords, b);
  if (sa.dim() != sb.dim()) return false;
  for (const auto& x : b) {
    if (!sa.contains(x)) return false;
  }
  return true;
}

}  // namespace vfalg
