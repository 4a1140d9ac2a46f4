#pragma once

// Supersymmetric elements of Div[x|y].
//
// A homogeneous f of degree k is supersymmetric when it is symmetric in the
// x and y blocks separately and (d/dx_1 + d/dy_1) f = (x_1 - y_1) f' for
// some f' of degree k - 2. The witness formulation (existence of f') is the
// ground truth; the defining linear system on orbit coordinates is the
// fast route and is validated against it.
//
// Orbit coordinates: a symmetric element of degree k is determined by its
// coefficients at the symmetrized monomials of degree k, which index the
// columns of every orbit-coordinate matrix below (decreasing lex order).

#include <optional>
#include <vector>

#include "superdiv/divalg.hpp"
#include "superdiv/fplin.hpp"

namespace superdiv {

struct DegreeBlock {
  Context ctx;
  u64 degree;
  std::vector<Monomial> monomials;  // all monomials of this degree
};

DegreeBlock degree_block(const Context& ctx, u64 k);

/// Fixed by every adjacent transposition of the x's and of the y's.
bool is_symmetric(const Element& f);

struct OracleResult {
  bool supersymmetric = false;
  std::optional<Element> witness;  // f' when supersymmetric
};

/// Decides supersymmetry from the definition by solving for f'.
/// Inhomogeneous input is tested component by component and the witness is
/// the sum of the component witnesses. Requires m >= 1 and n >= 1.
OracleResult oracle_is_supersymmetric(const Element& f);

/// Defining linear system on orbit coordinates of degree k: for each split
/// i_1 + j_1 = t = p*l + s and each frozen tail,
///   s > 0:  sum_j C(s, j) a[t-pr-j, .., pr+j, ..] = 0   for 0 <= r <= l,
///   s = 0:  a[t-pr, .., pr, ..] + a[t-p(r+1), .., p(r+1), ..] = 0  for r < l.
/// Columns are symmetrized_monomials_of_degree(ctx, k). Requires m, n >= 1.
FpMatrix defining_system(const Context& ctx, u64 k);

/// Same equations on full coordinates (columns monomials_of_degree) plus
/// explicit symmetry rows a[mu] - a[tau(mu)] = 0 for adjacent transpositions.
FpMatrix defining_system_full(const Context& ctx, u64 k);

/// Space of supersymmetric elements of degree k computed from the witness
/// formulation: nullspace of the joint (a, f') system projected onto the
/// orbit coordinates, echelonized.
EchelonBasis oracle_space(const Context& ctx, u64 k);

/// A basis of S_k in reduced echelon form on orbit coordinates together
/// with the elements it describes. Pivot monomials are the marked ones.
struct SkBasis {
  Context ctx;
  u64 degree;
  EchelonBasis echelon;
  std::vector<Element> elements;

  std::size_t dim() const { return elements.size(); }
};

/// Basis of S_k from the defining system. With n == 0 (or m == 0) this is
/// the basis of orbit sums of the symmetric elements.
SkBasis basis_Sk(const Context& ctx, u64 k);

/// Element described by orbit coordinates over the given symmetrized columns.
Element element_from_orbit_coordinates(const Context& ctx,
                                       const std::vector<Monomial>& columns,
                                       std::span<const u32> coords);
/// Orbit coordinates of a symmetric element: its coefficients at the
/// symmetrized monomials.
FpVector orbit_coordinates(const Element& f, const std::vector<Monomial>& columns);

/// Echelon basis of the span of degree-k elements on full coordinates.
EchelonBasis full_span(const Context& ctx, u64 k, std::span<const Element> elements);

/// dim S_k for Div[x_1, y_1] as predicted by the explicit K-basis:
/// #{0 <= t <= k : t mod p in {s+1..p-1}} + s(l+1) + [s == 0], k = pl + s.
u64 expected_dim_11(u64 k, u32 p);

/// The explicit K-basis of S_k in Div[x_1, y_1]:
///   x^(t) y^(k-t) for t mod p in {s+1..p-1};
///   (s-j)! x^(k-pr-j) y^(pr+j) - s(s-1)..(j+1) x^(k-pr-s) y^(pr+s),
///       0 <= j < s, 0 <= r <= l;
///   sum_r (-1)^r x^(pr) y^(k-pr) when s == 0.
std::vector<Element> kbasis_11(u64 k, u32 p);

struct MarkedReport {
  u64 degree;
  std::vector<Monomial> marked;    // decreasing lex
  std::vector<Monomial> unmarked;  // decreasing lex

  bool is_marked(const Monomial& symmetrized) const;
};

/// Splits the symmetrized monomials of degree k into leading terms of
/// supersymmetric elements (marked) and the rest.
MarkedReport marked_monomials(const Context& ctx, u64 k);
MarkedReport marked_monomials(const SkBasis& basis);

struct BlowViolation {
  std::size_t basis_index;
  Monomial from;
  Monomial to;
};

/// Checks the chains a[i1, i2, j1] = a[i1-p, i2+p, j1] = ... down to
/// i1 mod p, for every (i1, i2, j1) of degree k with p | j1, p | i2 and
/// i1 >= p, on every basis element of S_k in Div[x_1, x_2, y_1].
std::vector<BlowViolation> lemma_blow_violations(const Context& ctx, u64 k);
bool check_lemma_blow(const Context& ctx, u64 k);

}  // namespace superdiv
