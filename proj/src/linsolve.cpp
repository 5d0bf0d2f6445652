#include "jetlaw/linsolve.hpp"

#include <stdexcept>

namespace jetlaw {

namespace {

// a - scale * b, keeping the sparse invariants.
SparseRow axpy(const SparseRow& a, const Rational& scale, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, -scale * j->second);
      ++j;
    } else {
      Rational v = i->second - scale * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize_leading(SparseRow& row) {
  const Rational inv = 1 / row.front().second;
  for (auto& e : row) e.second *= inv;
}

}  // namespace

SparseRow make_sparse(const std::vector<Rational>& dense) {
  SparseRow row;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) row.emplace_back(k, dense[k]);
  return row;
}

std::optional<std::size_t> RowEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    if (lead >= columns_) throw std::out_of_range("row entry beyond column count");
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) break;
    const Rational scale = row.front().second;
    row = axpy(row, scale, it->second);
  }
  if (row.empty()) return std::nullopt;
  normalize_leading(row);
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  reduced_ = false;
  return lead;
}

void RowEchelon::reduce() {
  if (reduced_) return;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow& row = it->second;
    const std::size_t self = it->first;
    std::size_t pos = 1;
    while (pos < row.size()) {
      const std::size_t col = row[pos].first;
      auto p = pivots_.find(col);
      if (p == pivots_.end() || col == self) {
        ++pos;
        continue;
      }
      const Rational scale = row[pos].second;
      row = axpy(row, scale, p->second);
      // Entries before pos are unchanged: the pivot row starts at col.
    }
  }
  reduced_ = true;
}

std::vector<std::vector<Rational>> null_space(const std::vector<SparseRow>& rows, std::size_t columns) {
  RowEchelon ech(columns);
  for (const auto& r : rows) ech.insert(r);
  ech.reduce();
  const auto& pivots = ech.pivot_rows();
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (pivots.count(f) != 0) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[f] = 1;
    for (const auto& [p, row] : pivots) {
      if (p > f) break;
      for (const auto& [c, value] : row) {
        if (c == f) v[p] = -value;
        if (c >= f) break;
      }
    }
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_particular(const std::vector<SparseRow>& rows,
                                                      const std::vector<Rational>& rhs,
                                                      std::size_t columns) {
  if (rhs.size() != rows.size()) throw std::invalid_argument("rhs size mismatch");
  RowEchelon ech(columns + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseRow r = rows[i];
    if (rhs[i] != 0) r.emplace_back(columns, rhs[i]);
    ech.insert(std::move(r));
  }
  const auto& pivots = ech.pivot_rows();
  if (pivots.count(columns) != 0) return std::nullopt;
  std::vector<Rational> x(columns, Rational(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Rational value = 0;
    for (std::size_t k = 1; k < it->second.size(); ++k) {
      const auto& [c, a] = it->second[k];
      if (c == columns)
        value += a;
      else
        value -= a * x[c];
    }
    x[it->first] = value;
  }
  return x;
}

std::size_t rank_of(const std::vector<SparseRow>& rows, std::size_t columns) {
  RowEchelon ech(columns);
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

}  // namespace jetlaw
