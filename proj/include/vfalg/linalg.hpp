#pragma once

// Exact sparse linear algebra over Q.
//
// Rows are cleared of denominators and eliminated fraction-free (row
// combinations with integer multipliers followed by content removal). The
// pivot of each row is its smallest column index, so results depend only on
// the input order.

#include "vfalg/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace vfalg {

using SparseVector = std::map<std::size_t, Rational>;

class Echelon {
 public:
  explicit Echelon(std::size_t ncols = 0) : ncols_(ncols) {}

  // Inserts a row; returns true if it increased the rank.
  bool insert(const SparseVector& row);
  bool in_row_space(const SparseVector& row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t ncols() const { return ncols_; }
  void grow(std::size_t ncols) { ncols_ = std::max(ncols_, ncols); }

  // Basis of {x : A x = 0}, one vector per free column in increasing order.
  std::vector<SparseVector> nullspace() const;
  // Column indices that carry pivots.
  std::vector<std::size_t> pivot_columns() const;

 private:
  using IntRow = std::vector<std::pair<std::size_t, Integer>>;
  IntRow reduce(IntRow row) const;
  static IntRow to_int_row(const SparseVector& v);
  static void normalize(IntRow& row);
  static IntRow combine(const IntRow& row, const IntRow& pivot, std::size_t col);

  std::size_t ncols_;
  std::map<std::size_t, IntRow> pivots_;  // pivot column -> reduced row
};

// Rows given as sparse vectors over ncols unknowns.
std::vector<SparseVector> nullspace(const std::vector<SparseVector>& rows, std::size_t ncols);
std::size_t rank(const std::vector<SparseVector>& rows, std::size_t ncols);
// Particular solution of A x = b (free variables set to zero), or nullopt.
std::optional<SparseVector> solve(const std::vector<SparseVector>& rows,
                                  const std::vector<Rational>& rhs, std::size_t ncols);

// Indexes arbitrary ordered keys as columns, in order of first appearance.
template <class Key>
class KeyIndex {
 public:
  std::size_t operator()(const Key& k) {
    auto [it, inserted] = index_.try_emplace(k, keys_.size());
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  std::optional<std::size_t> find(const Key& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const Key& key(std::size_t i) const { return keys_[i]; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<Key, std::size_t> index_;
  std::vector<Key> keys_;
};

// Transposes a list of column vectors (unknown j has image cols[j]) into rows.
std::vector<SparseVector> columns_to_rows(const std::vector<SparseVector>& cols);

}  // namespace vfalg
