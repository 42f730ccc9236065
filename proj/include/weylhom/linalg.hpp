#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylhom/arith.hpp"

namespace weylhom {

using Index = std::size_t;

// Thrown when two maps presented as consecutive differentials don't
// compose to zero (or don't compose at all).
struct ComposabilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sparse exact matrix over GF(p).  Stored entries are always nonzero and
// in range; use set/add, never touch `entries` directly when writing.
struct FpMatrix {
  Index rows = 0;
  Index cols = 0;
  std::uint32_t p = 2;
  std::map<std::pair<Index, Index>, std::uint32_t> entries;

  FpMatrix() = default;
  FpMatrix(Index r, Index c, Prime prime) : rows(r), cols(c), p(prime.value()) {}

  void check_range(Index i, Index j) const {
    if (i >= rows || j >= cols) throw std::out_of_range("FpMatrix: index out of range");
  }

  std::uint32_t get(Index i, Index j) const {
    check_range(i, j);
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  void set(Index i, Index j, std::uint32_t v) {
    check_range(i, j);
    v %= p;
    if (v == 0)
      entries.erase({i, j});
    else
      entries[{i, j}] = v;
  }

  void add(Index i, Index j, std::uint32_t v) {
    check_range(i, j);
    v %= p;
    if (v == 0) return;
    auto [it, inserted] = entries.try_emplace({i, j}, v);
    if (!inserted) {
      it->second = fp_add(it->second, v, p);
      if (it->second == 0) entries.erase(it);
    }
  }

  bool is_zero() const { return entries.empty(); }
  Index nnz() const { return entries.size(); }

  static FpMatrix identity(Index n, Prime prime) {
    FpMatrix m(n, n, prime);
    for (Index i = 0; i < n; ++i) m.entries[{i, i}] = 1;
    return m;
  }

  // Entries of row i as (col, value), ascending col.
  std::vector<std::pair<Index, std::uint32_t>> row(Index i) const {
    std::vector<std::pair<Index, std::uint32_t>> out;
    for (auto it = entries.lower_bound({i, 0}); it != entries.end() && it->first.first == i; ++it)
      out.emplace_back(it->first.second, it->second);
    return out;
  }

  // Composition (*this) ∘ rhs, i.e. matrix product this·rhs.
  FpMatrix multiply(const FpMatrix& rhs) const {
    if (p != rhs.p) throw std::invalid_argument("FpMatrix::multiply: modulus mismatch");
    if (cols != rhs.rows) throw ComposabilityError("FpMatrix::multiply: inner dimensions differ");
    FpMatrix out(rows, rhs.cols, Prime(p));
    for (const auto& [ij, v] : entries) {
      auto [i, k] = ij;
      for (auto it = rhs.entries.lower_bound({k, 0});
           it != rhs.entries.end() && it->first.first == k; ++it)
        out.add(i, it->first.second, fp_mul(v, it->second, p));
    }
    return out;
  }

  FpMatrix scaled(std::uint32_t c) const {
    FpMatrix out(rows, cols, Prime(p));
    c %= p;
    if (c == 0) return out;
    for (const auto& [ij, v] : entries) out.entries[ij] = fp_mul(v, c, p);
    return out;
  }

  FpMatrix transpose() const {
    FpMatrix out(cols, rows, Prime(p));
    for (const auto& [ij, v] : entries) out.entries[{ij.second, ij.first}] = v;
    return out;
  }

  // Dense column-vector image.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
    if (v.size() != cols) throw std::invalid_argument("FpMatrix::apply: length mismatch");
    std::vector<std::uint32_t> out(rows, 0);
    for (const auto& [ij, w] : entries)
      out[ij.first] = fp_add(out[ij.first], fp_mul(w, v[ij.second] % p, p), p);
    return out;
  }

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.p == b.p && a.entries == b.entries;
  }
};

// Row space in reduced row-echelon form.
struct RowSpace {
  FpMatrix matrix;
  std::vector<Index> pivot_cols;
  Index rank() const { return pivot_cols.size(); }
};

namespace detail {

// In-place Gauss-Jordan on dense rows.  Pivoting is deterministic: scan
// columns left to right, take the first remaining row with a nonzero
// entry.  Returns the pivot column list.
inline std::vector<Index> rref_dense(std::vector<std::vector<std::uint32_t>>& rows,
                                     std::uint32_t p) {
  std::vector<Index> pivots;
  if (rows.empty()) return pivots;
  const Index ncols = rows[0].size();
  Index rank = 0;
  for (Index col = 0; col < ncols && rank < rows.size(); ++col) {
    Index pr = rank;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    std::uint32_t inv = fp_inv(rows[rank][col], p);
    if (inv != 1)
      for (Index j = col; j < ncols; ++j) rows[rank][j] = fp_mul(rows[rank][j], inv, p);
    for (Index i = 0; i < rows.size(); ++i) {
      if (i == rank) continue;
      std::uint32_t f = rows[i][col];
      if (f == 0) continue;
      for (Index j = col; j < ncols; ++j)
        rows[i][j] = fp_sub(rows[i][j], fp_mul(f, rows[rank][j], p), p);
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace detail

inline RowSpace rref(const FpMatrix& m) {
  std::vector<std::vector<std::uint32_t>> dense(m.rows,
                                                std::vector<std::uint32_t>(m.cols, 0));
  for (const auto& [ij, v] : m.entries) dense[ij.first][ij.second] = v;
  auto pivots = detail::rref_dense(dense, m.p);
  RowSpace out;
  out.matrix = FpMatrix(pivots.size(), m.cols, Prime(m.p));
  for (Index i = 0; i < dense.size(); ++i)
    for (Index j = 0; j < m.cols; ++j)
      if (dense[i][j]) out.matrix.entries[{i, j}] = dense[i][j];
  out.pivot_cols = std::move(pivots);
  return out;
}

inline Index rank(const FpMatrix& m) { return rref(m).rank(); }

// Basis of the right null space, one vector per row.
inline FpMatrix kernel_basis(const FpMatrix& m) {
  RowSpace r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (Index c : r.pivot_cols) is_pivot[c] = true;
  FpMatrix out(m.cols - r.rank(), m.cols, Prime(m.p));
  Index row_out = 0;
  for (Index f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    out.entries[{row_out, f}] = 1;
    for (Index k = 0; k < r.rank(); ++k) {
      std::uint32_t coef = r.matrix.get(k, f);
      if (coef) out.entries[{row_out, r.pivot_cols[k]}] = fp_neg(coef, m.p);
    }
    ++row_out;
  }
  return out;
}

// Subtract the row-space component of v, in place.  Afterwards v has
// zeros in every pivot column.
inline void reduce_mod_rowspace(const RowSpace& s, std::vector<std::uint32_t>& v) {
  if (v.size() != s.matrix.cols)
    throw std::invalid_argument("reduce_mod_rowspace: length mismatch");
  const std::uint32_t p = s.matrix.p;
  for (Index k = 0; k < s.rank(); ++k) {
    std::uint32_t coef = v[s.pivot_cols[k]] % p;
    if (coef == 0) continue;
    for (auto [j, w] : s.matrix.row(k)) v[j] = fp_sub(v[j], fp_mul(coef, w, p), p);
  }
}

inline bool subspace_contains(const RowSpace& s, const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> rem = v;
  for (auto& x : rem) x %= s.matrix.p;
  reduce_mod_rowspace(s, rem);
  for (std::uint32_t x : rem)
    if (x != 0) return false;
  return true;
}

// Dimension of ker(outgoing)/im(incoming) at the middle term of
//   · --incoming--> middle --outgoing--> ·
inline Index homology_dim(const FpMatrix& incoming, const FpMatrix& outgoing) {
  if (incoming.rows != outgoing.cols)
    throw ComposabilityError("homology_dim: middle dimensions disagree");
  if (incoming.p != outgoing.p)
    throw ComposabilityError("homology_dim: modulus mismatch");
  if (!outgoing.multiply(incoming).is_zero())
    throw ComposabilityError("homology_dim: differentials do not compose to zero");
  Index nullity = outgoing.cols - rank(outgoing);
  return nullity - rank(incoming);
}

}  // namespace weylhom
