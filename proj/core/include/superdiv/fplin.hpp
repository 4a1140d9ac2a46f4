#pragma once

// Exact linear algebra over F_p. Matrices are stored as sparse rows; the
// elimination routines densify internally (block sizes here stay in the low
// thousands of columns). Pivoting is deterministic: first nonzero column,
// first available row.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "superdiv/arith.hpp"
#include "superdiv/divalg.hpp"

namespace superdiv {

/// Dense vector of residues in [0, p).
using FpVector = std::vector<u32>;

struct SparseEntry {
  std::size_t col;
  u32 value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

using SparseRow = std::vector<SparseEntry>;

class FpMatrix {
 public:
  FpMatrix(u32 p, std::size_t nrows, std::size_t ncols);
  static FpMatrix from_dense(u32 p, const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t ncols);

  u32 p() const { return p_; }
  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<SparseRow>& rows() const { return rows_; }

  /// Appends a row; entries may be unsorted, repeated (summed) or zero.
  void append_row(std::span<const SparseEntry> entries);
  void set_row(std::size_t r, std::span<const SparseEntry> entries);
  u32 at(std::size_t r, std::size_t c) const;

  std::vector<FpVector> to_dense() const;
  FpVector apply(std::span<const u32> v) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  SparseRow canonical_row(std::span<const SparseEntry> entries) const;

  u32 p_;
  std::size_t ncols_;
  std::vector<SparseRow> rows_;
};

struct RrefResult {
  FpMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const FpMatrix& m);

/// Basis of { v : M v = 0 }, one vector per free column in increasing column
/// order, each with a 1 at its free column.
std::vector<FpVector> nullspace(const FpMatrix& m);

struct Consistency {
  bool consistent = false;
  FpVector solution;  // one solution (free variables zero) when consistent
};

/// Decides whether M x = rhs has a solution. Throws std::invalid_argument on
/// a length mismatch.
Consistency is_consistent(const FpMatrix& m, std::span<const u32> rhs);

/// A reduced row-echelon basis of a subspace of F_p^N whose coordinates are
/// labeled by monomials in decreasing lex order. Pivot monomials are the
/// leading terms realizable in the span.
class EchelonBasis {
 public:
  EchelonBasis(u32 p, std::vector<Monomial> columns);

  u32 p() const { return p_; }
  std::size_t ncols() const { return columns_.size(); }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Monomial>& columns() const { return columns_; }
  const std::vector<FpVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Monomial> pivot_monomials() const;

  /// Index of a column label, if present.
  std::optional<std::size_t> column_of(const Monomial& mono) const;

  /// Reduces v against the basis; the result is zero iff v is in the span.
  FpVector reduce(FpVector v) const;
  bool contains(std::span<const u32> v) const;
  /// Adds v to the span; returns false when it was already contained.
  bool insert(FpVector v);

  /// Coordinates of an element on the column labels. Throws
  /// std::invalid_argument when a term's monomial is not a column.
  FpVector coordinates(const Element& f) const;
  /// Element with the given coordinates.
  Element element(const Context& ctx, std::span<const u32> coords) const;

 private:
  u32 p_;
  std::vector<Monomial> columns_;
  std::map<Monomial, std::size_t> index_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Echelon basis of the span of `vectors` over the given column labels.
EchelonBasis echelonize_span(u32 p, std::span<const FpVector> vectors,
                             std::vector<Monomial> columns);

}  // namespace superdiv
