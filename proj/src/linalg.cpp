#include "vfalg/linalg.hpp"

#include <algorithm>

namespace vfalg {

Echelon::IntRow Echelon::to_int_row(const SparseVector& v) {
  Integer den = 1;
  for (const auto& [c, q] : v) {
    if (q != 0) den = lcm(den, Integer(q.get_den()));
  }
  IntRow row;
  row.reserve(v.size());
  for (const auto& [c, q] : v) {
    if (q == 0) continue;
    Integer num = q.get_num() * (den / q.get_den());
    row.emplace_back(c, std::move(num));
  }
  normalize(row);
  return row;
}

void Echelon::normalize(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// p*row - a*pivot, where p is the pivot entry and a the row entry at col.
Echelon::IntRow Echelon::combine(const IntRow& row, const IntRow& pivot, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return row;
  const Integer& p = pivot.front().second;
  Integer g = gcd(p, it->second);
  Integer mr = p / g;           // multiplier for row
  Integer mp = it->second / g;  // multiplier for pivot
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.emplace_back(a->first, mr * a->second);
      ++a;
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -mp * b->second);
      ++b;
    } else {
      Integer v = mr * a->second - mp * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  normalize(out);
  return out;
}

Echelon::IntRow Echelon::reduce(IntRow row) const {
  // Pivot rows are fully reduced, so eliminating one pivot column never
  // reintroduces another.
  std::vector<std::size_t> hits;
  for (const auto& [c, v] : row) {
    if (pivots_.count(c)) hits.push_back(c);
  }
  for (std::size_t c : hits) row = combine(row, pivots_.at(c), c);
  return row;
}

bool Echelon::insert(const SparseVector& v) {
  IntRow row = reduce(to_int_row(v));
  if (row.empty()) return false;
  const std::size_t col = row.front().first;
  grow(row.back().first + 1);
  for (auto& [pc, prow] : pivots_) prow = combine(prow, row, col);
  pivots_.emplace(col, std::move(row));
  return true;
}

bool Echelon::in_row_space(const SparseVector& v) const {
  return reduce(to_int_row(v)).empty();
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (const auto& [c, r] : pivots_) out.push_back(c);
  return out;
}

std::vector<SparseVector> Echelon::nullspace() const {
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (pivots_.count(f)) continue;
    SparseVector x;
    x[f] = 1;
    for (const auto& [pc, prow] : pivots_) {
      auto it = std::lower_bound(prow.begin(), prow.end(), f,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == prow.end() || it->first != f) continue;
      Rational v(it->second, prow.front().second);
      v.canonicalize();
      x[pc] = -v;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<SparseVector> nullspace(const std::vector<SparseVector>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  e.grow(ncols);
  return e.nullspace();
}

std::size_t rank(const std::vector<SparseVector>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::optional<SparseVector> solve(const std::vector<SparseVector>& rows,
                                  const std::vector<Rational>& rhs, std::size_t ncols) {
  if (rows.size() != rhs.size()) throw Error("solve: row/rhs size mismatch");
  // Augmented column ncols holds -b so that [A | -b] (x, 1) = 0.
  Echelon e(ncols + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVector r = rows[i];
    if (rhs[i] != 0) r[ncols] = -rhs[i];
    e.insert(r);
  }
  e.grow(ncols + 1);
  auto piv = e.pivot_columns();
  if (std::find(piv.begin(), piv.end(), ncols) != piv.end()) return std::nullopt;
  for (auto& x : e.nullspace()) {
    auto it = x.find(ncols);
    if (it != x.end() && it->second == 1) {
      x.erase(it);
      // nullspace vectors for free column ncols have the other free columns at zero.
      return x;
    }
  }
  return std::nullopt;
}

std::vector<SparseVector> columns_to_rows(const std::vector<SparseVector>& cols) {
  std::map<std::size_t, SparseVector> rows;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, v] : cols[j]) {
      if (v != 0) rows[i][j] = v;
    }
  }
  std::vector<SparseVector> out;
  out.reserve(rows.size());
  for (auto& [i, r] : rows) out.push_back(std::move(r));
  return out;
}

}  // namespace vfalg
