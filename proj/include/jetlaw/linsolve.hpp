#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jetlaw/polynomial.hpp"

namespace jetlaw {

// Sparse row: (column, value) pairs, strictly ascending columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow make_sparse(const std::vector<Rational>& dense);

// Incremental exact Gaussian elimination. Pivoting is deterministic: the
// pivot of a row is its first nonzero column.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  // Reduces the row against the current pivots and keeps it when a nonzero
  // remainder is left. Returns the new pivot column, if any.
  std::optional<std::size_t> insert(SparseRow row);

  // Brings the stored rows to reduced row echelon form.
  void reduce();

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }
  // Pivot column -> row with leading coefficient 1.
  const std::map<std::size_t, SparseRow>& pivot_rows() const { return pivots_; }

 private:
  std::size_t columns_;
  std::map<std::size_t, SparseRow> pivots_;
  bool reduced_ = true;
};

// Basis of {v : A v = 0}, one vector per free column in ascending order,
// with 1 in that free column. Each vector is sign-normalized so that its
// first nonzero entry is positive.
std::vector<std::vector<Rational>> null_space(const std::vector<SparseRow>& rows, std::size_t columns);

// Some solution of A x = b (free variables set to 0), or nullopt when the
// system is inconsistent.
std::optional<std::vector<Rational>> solve_particular(const std::vector<SparseRow>& rows,
                                                      const std::vector<Rational>& rhs,
                                                      std::size_t columns);

std::size_t rank_of(const std::vector<SparseRow>& rows, std::size_t columns);

}  // namespace jetlaw
