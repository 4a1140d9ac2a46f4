#include "superdiv/fplin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace superdiv {

namespace {

// In-place reduced row echelon form of dense rows; returns pivot columns.
std::vector<std::size_t> dense_rref(std::vector<FpVector>& a, std::size_t ncols, u32 p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    FpVector& prow = a[row];
    const u32 scale = inv_mod(prow[col], p);
    for (std::size_t c = col; c < ncols; ++c) prow[c] = mul_mod(prow[c], scale, p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const u32 factor = a[r][col];
      FpVector& target = a[r];
      for (std::size_t c = col; c < ncols; ++c) {
        if (prow[c] != 0) target[c] = sub_mod(target[c], mul_mod(factor, prow[c], p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

FpMatrix::FpMatrix(u32 p, std::size_t nrows, std::size_t ncols)
    : p_(p), ncols_(ncols), rows_(nrows) {
  require_odd_prime(p);
}

FpMatrix FpMatrix::from_dense(u32 p, const std::vector<std::vector<std::int64_t>>& rows,
                              std::size_t ncols) {
  FpMatrix m(p, 0, ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("from_dense: ragged rows");
    SparseRow entries;
    for (std::size_t c = 0; c < ncols; ++c) {
      entries.push_back({c, reduce_mod(r[c], p)});
    }
    m.append_row(entries);
  }
  return m;
}

SparseRow FpMatrix::canonical_row(std::span<const SparseEntry> entries) const {
  SparseRow row(entries.begin(), entries.end());
  for (const SparseEntry& e : row) {
    if (e.col >= ncols_) throw std::invalid_argument("column index out of range");
  }
  std::sort(row.begin(), row.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseRow out;
  for (const SparseEntry& e : row) {
    const u32 v = e.value % p_;
    if (!out.empty() && out.back().col == e.col) {
      out.back().value = add_mod(out.back().value, v, p_);
      if (out.back().value == 0) out.pop_back();
    } else if (v != 0) {
      out.push_back({e.col, v});
    }
  }
  return out;
}

void FpMatrix::append_row(std::span<const SparseEntry> entries) {
  rows_.push_back(canonical_row(entries));
}

void FpMatrix::set_row(std::size_t r, std::span<const SparseEntry> entries) {
  rows_.at(r) = canonical_row(entries);
}

u32 FpMatrix::at(std::size_t r, std::size_t c) const {
  for (const SparseEntry& e : rows_.at(r)) {
    if (e.col == c) return e.value;
  }
  return 0;
}

std::vector<FpVector> FpMatrix::to_dense() const {
  std::vector<FpVector> out(rows_.size(), FpVector(ncols_, 0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const SparseEntry& e : rows_[r]) out[r][e.col] = e.value;
  }
  return out;
}

FpVector FpMatrix::apply(std::span<const u32> v) const {
  if (v.size() != ncols_) throw std::invalid_argument("apply: length mismatch");
  FpVector out(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    u32 acc = 0;
    for (const SparseEntry& e : rows_[r]) acc = add_mod(acc, mul_mod(e.value, v[e.col] % p_, p_), p_);
    out[r] = acc;
  }
  return out;
}

RrefResult rref(const FpMatrix& m) {
  std::vector<FpVector> dense = m.to_dense();
  std::vector<std::size_t> pivots = dense_rref(dense, m.ncols(), m.p());
  FpMatrix reduced(m.p(), 0, m.ncols());
  for (const FpVector& row : dense) {
    SparseRow entries;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) entries.push_back({c, row[c]});
    }
    reduced.append_row(entries);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::vector<FpVector> nullspace(const FpMatrix& m) {
  const u32 p = m.p();
  std::vector<FpVector> dense = m.to_dense();
  const std::vector<std::size_t> pivots = dense_rref(dense, m.ncols(), p);
  std::vector<bool> is_pivot(m.ncols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.ncols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.ncols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = neg_mod(dense[r][free], p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Consistency is_consistent(const FpMatrix& m, std::span<const u32> rhs) {
  if (rhs.size() != m.nrows()) {
    throw std::invalid_argument("is_consistent: rhs has " + std::to_string(rhs.size()) +
                                " entries for " + std::to_string(m.nrows()) + " rows");
  }
  const u32 p = m.p();
  const std::size_t n = m.ncols();
  std::vector<FpVector> aug = m.to_dense();
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r] % p);
  const std::vector<std::size_t> pivots = dense_rref(aug, n + 1, p);
  Consistency out;
  if (!pivots.empty() && pivots.back() == n) return out;
  out.consistent = true;
  out.solution.assign(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) out.solution[pivots[r]] = aug[r][n];
  return out;
}

EchelonBasis::EchelonBasis(u32 p, std::vector<Monomial> columns)
    : p_(p), columns_(std::move(columns)) {
  require_odd_prime(p);
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i > 0 && !(columns_[i - 1] > columns_[i])) {
      throw std::invalid_argument("EchelonBasis: columns must be strictly decreasing");
    }
    index_.emplace(columns_[i], i);
  }
}

std::vector<Monomial> EchelonBasis::pivot_monomials() const {
  std::vector<Monomial> out;
  out.reserve(pivots_.size());
  for (std::size_t c : pivots_) out.push_back(columns_[c]);
  return out;
}

std::optional<std::size_t> EchelonBasis::column_of(const Monomial& mono) const {
  auto it = index_.find(mono);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FpVector EchelonBasis::reduce(FpVector v) const {
  if (v.size() != columns_.size()) throw std::invalid_argument("reduce: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const u32 factor = v[pivots_[r]] % p_;
    if (factor == 0) continue;
    const FpVector& row = rows_[r];
    for (std::size_t c = pivots_[r]; c < row.size(); ++c) {
      if (row[c] != 0) v[c] = sub_mod(v[c] % p_, mul_mod(factor, row[c], p_), p_);
    }
  }
  return v;
}

bool EchelonBasis::contains(std::span<const u32> v) const {
  const FpVector r = reduce(FpVector(v.begin(), v.end()));
  return std::all_of(r.begin(), r.end(), [](u32 x) { return x == 0; });
}

bool EchelonBasis::insert(FpVector v) {
  v = reduce(std::move(v));
  auto lead = std::find_if(v.begin(), v.end(), [](u32 x) { return x != 0; });
  if (lead == v.end()) return false;
  const std::size_t col = static_cast<std::size_t>(lead - v.begin());
  const u32 scale = inv_mod(v[col], p_);
  for (std::size_t c = col; c < v.size(); ++c) v[c] = mul_mod(v[c], scale, p_);
  for (FpVector& row : rows_) {
    const u32 factor = row[col];
    if (factor == 0) continue;
    for (std::size_t c = col; c < row.size(); ++c) {
      if (v[c] != 0) row[c] = sub_mod(row[c], mul_mod(factor, v[c], p_), p_);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, col);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

FpVector EchelonBasis::coordinates(const Element& f) const {
  FpVector v(columns_.size(), 0);
  for (const Term& t : f.terms()) {
    auto idx = column_of(t.monomial);
    if (!idx) {
      throw std::invalid_argument("coordinates: monomial " + to_string(t.monomial) +
                                  " is not a column label");
    }
    v[*idx] = t.coeff;
  }
  return v;
}

Element EchelonBasis::element(const Context& ctx, std::span<const u32> coords) const {
  if (coords.size() != columns_.size()) throw std::invalid_argument("element: length mismatch");
  std::vector<Term> terms;
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (coords[c] % p_ != 0) terms.push_back({columns_[c], coords[c] % p_});
  }
  return Element(ctx, std::move(terms));
}

EchelonBasis echelonize_span(u32 p, std::span<const FpVector> vectors,
                             std::vector<Monomial> columns) {
  EchelonBasis basis(p, std::move(columns));
  for (const FpVector& v : vectors) {
    if (v.size() != basis.ncols()) {
      throw std::invalid_argument("echelonize_span: vector length mismatch");
    }
    basis.insert(v);
  }
  return basis;
}

}  // namespace superdiv
