#include "vfalg/superpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vfalg {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("malformed rational: " + text);
  if (q.get_den() == 0) throw Error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

CoordSystem::CoordSystem(std::vector<VarSpec> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.name.empty()) throw Error("empty variable name");
    if (v.weight < 1) throw Error("variable " + v.name + " has weight < 1");
    if (!by_name_.emplace(v.name, i).second) throw Error("duplicate variable " + v.name);
  }
}

std::optional<std::size_t> CoordSystem::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t CoordSystem::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error("unknown variable " + std::string(name));
  return *i;
}

int CoordSystem::max_weight() const {
  int w = 0;
  for (const auto& v : vars_) w = std::max(w, v.weight);
  return w;
}

std::size_t CoordSystem::even_count() const {
  return std::count_if(vars_.begin(), vars_.end(),
                       [](const VarSpec& v) { return v.parity == Parity::even; });
}

std::size_t CoordSystem::odd_count() const { return size() - even_count(); }

std::string CoordSystem::superdim() const {
  return std::to_string(even_count()) + "|" + std::to_string(odd_count());
}

bool CoordSystem::operator==(const CoordSystem& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& a = vars_[i];
    const auto& b = other.vars_[i];
    if (a.name != b.name || a.parity != b.parity || a.weight != b.weight) return false;
  }
  return true;
}

Coords make_coords(std::vector<VarSpec> vars) {
  return std::make_shared<const CoordSystem>(std::move(vars));
}

bool same_coords(const Coords& a, const Coords& b) {
  return a == b || (a && b && *a == *b);
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0u);
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
  for (std::size_t i = 0; i < exps.size() && i < o.exps.size(); ++i) {
    if (exps[i] != o.exps[i]) return o.exps[i] <=> exps[i];
  }
  return exps.size() <=> o.exps.size();
}

int weighted_degree(const CoordSystem& cs, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) d += cs[i].weight * m.exps[i];
  return d;
}

Parity parity_of(const CoordSystem& cs, const Monomial& m) {
  int p = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (cs[i].parity == Parity::odd) p ^= m.exps[i] & 1;
  }
  return static_cast<Parity>(p);
}

SignedMonomial multiply(const CoordSystem& cs, const Monomial& a, const Monomial& b) {
  SignedMonomial r;
  r.mono.exps.resize(a.exps.size());
  // Moving each odd variable of b leftwards past the odd variables of a that
  // come later in canonical order costs one sign per transposition.
  int odd_in_a_after = 0;
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (cs[i].parity == Parity::odd && a.exps[i]) ++odd_in_a_after;
  }
  int swaps = 0;
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (cs[i].parity == Parity::odd) {
      if (a.exps[i]) --odd_in_a_after;
      if (b.exps[i]) {
        if (a.exps[i]) return r;
        swaps += odd_in_a_after;
      }
    }
    r.mono.exps[i] = static_cast<std::uint8_t>(a.exps[i] + b.exps[i]);
  }
  r.sign = (swaps & 1) ? -1 : 1;
  return r;
}

SuperPolynomial::SuperPolynomial(Coords coords) : coords_(std::move(coords)) {
  if (!coords_) throw Error("polynomial without coordinate system");
}

SuperPolynomial SuperPolynomial::constant(Coords coords, const Rational& c) {
  SuperPolynomial p(coords);
  p.add_term(Monomial(p.coords_->size()), c);
  return p;
}

SuperPolynomial SuperPolynomial::variable(Coords coords, std::size_t index) {
  SuperPolynomial p(coords);
  if (index >= p.coords_->size()) throw Error("variable index out of range");
  Monomial m(p.coords_->size());
  m.exps[index] = 1;
  p.add_term(m, 1);
  return p;
}

SuperPolynomial SuperPolynomial::variable(Coords coords, std::string_view name) {
  auto idx = coords->index(name);
  return variable(std::move(coords), idx);
}

SuperPolynomial SuperPolynomial::monomial(Coords coords, Monomial m, const Rational& c) {
  SuperPolynomial p(coords);
  p.add_term(m, c);
  return p;
}

void SuperPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.exps.size() != coords_->size()) throw Error("monomial size mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

static void require_same(const SuperPolynomial& a, const SuperPolynomial& b) {
  if (!same_coords(a.coords(), b.coords())) throw Error("mismatched coordinate systems");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r(*this);
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  require_same(a, b);
  SuperPolynomial r(a.coords());
  const auto& cs = *a.coords();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto sm = multiply(cs, ma, mb);
      if (sm.sign == 0) continue;
      Rational c = ca * cb;
      if (sm.sign < 0) c = -c;
      r.add_term(sm.mono, c);
    }
  }
  return r;
}

bool SuperPolynomial::operator==(const SuperPolynomial& o) const {
  return same_coords(coords_, o.coords_) && terms_ == o.terms_;
}

std::optional<Parity> SuperPolynomial::parity() const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    Parity q = parity_of(*coords_, m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::even);
}

SuperPolynomial SuperPolynomial::part(Parity p) const {
  SuperPolynomial r(coords_);
  for (const auto& [m, c] : terms_) {
    if (parity_of(*coords_, m) == p) r.terms_.emplace(m, c);
  }
  return r;
}

WeightedDegree SuperPolynomial::weighted_degree() const {
  WeightedDegree d;
  for (const auto& [m, c] : terms_) {
    int w = vfalg::weighted_degree(*coords_, m);
    if (d.kind == WeightedDegree::Kind::any) {
      d = {WeightedDegree::Kind::homogeneous, w};
    } else if (d.value != w) {
      return {WeightedDegree::Kind::inhomogeneous, 0};
    }
  }
  return d;
}

SuperPolynomial SuperPolynomial::homogeneous_part(int degree) const {
  SuperPolynomial r(coords_);
  for (const auto& [m, c] : terms_) {
    if (vfalg::weighted_degree(*coords_, m) == degree) r.terms_.emplace(m, c);
  }
  return r;
}

std::string monomial_to_string(const CoordSystem& cs, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (!m.exps[i]) continue;
    if (!s.empty()) s += '*';
    s += cs[i].name;
    if (m.exps[i] > 1) s += '^' + std::to_string(m.exps[i]);
  }
  return s;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(*coords_, m);
    if (mono.empty()) {
      s += vfalg::to_string(a);
    } else {
      if (a != 1) s += vfalg::to_string(a) + '*';
      s += mono;
    }
  }
  return s;
}

SuperPolynomial partial(const SuperPolynomial& a, std::size_t var) {
  const auto& cs = *a.coords();
  if (var >= cs.size()) throw Error("derivative variable out of range");
  SuperPolynomial r(a.coords());
  const bool odd = cs[var].parity == Parity::odd;
  for (const auto& [m, c] : a.terms()) {
    if (!m.exps[var]) continue;
    Monomial d = m;
    Rational k = c;
    if (odd) {
      int before = 0;
      for (std::size_t i = 0; i < var; ++i) {
        if (cs[i].parity == Parity::odd) before += m.exps[i];
      }
      if (before & 1) k = -k;
      d.exps[var] = 0;
    } else {
      k *= m.exps[var];
      d.exps[var] -= 1;
    }
    r.add_term(d, k);
  }
  return r;
}

SuperPolynomial partial(const SuperPolynomial& a, std::string_view var) {
  return partial(a, a.coords()->index(var));
}

SuperPolynomial embed(const SuperPolynomial& a, const Coords& target) {
  const auto& src = *a.coords();
  if (target->size() < src.size()) throw Error("embed: target too small");
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& u = src[i];
    const auto& v = (*target)[i];
    if (u.name != v.name || u.parity != v.parity) throw Error("embed: prefix mismatch");
  }
  SuperPolynomial r(target);
  for (const auto& [m, c] : a.terms()) {
    Monomial e = m;
    e.exps.resize(target->size(), 0);
    r.add_term(e, c);
  }
  return r;
}

SuperPolynomial restrict_to(const SuperPolynomial& a, const Coords& target) {
  const std::size_t n = target->size();
  SuperPolynomial r(target);
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t i = n; i < m.exps.size(); ++i) {
      if (m.exps[i]) throw Error("restrict: term outside target coordinates");
    }
    Monomial e = m;
    e.exps.resize(n);
    r.add_term(e, c);
  }
  return r;
}

namespace {

void enumerate(const CoordSystem& cs, std::size_t i, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (i == cs.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int w = cs[i].weight;
  const int max_exp = cs[i].parity == Parity::odd ? 1 : remaining / w;
  for (int e = std::min(max_exp, remaining / w); e >= 0; --e) {
    cur.exps[i] = static_cast<std::uint8_t>(e);
    enumerate(cs, i + 1, remaining - e * w, cur, out);
  }
  cur.exps[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_weight(const CoordSystem& cs, int weight) {
  std::vector<Monomial> out;
  if (weight < 0) return out;
  Monomial cur(cs.size());
  enumerate(cs, 0, weight, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vfalg
