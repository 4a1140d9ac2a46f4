#pragma once

// Degree-by-degree spanning check: does a list of homogeneous generators
// generate the supersymmetric algebra S (or the symmetric algebra
// Div[x]^{Sigma_m}) up to a degree bound?
//
// The degree-k part of the generated algebra is built incrementally as
// A_k = span{ g * a : g a generator of degree d >= 1, a in A_{k-d} } with
// A_0 = K, which is the span of all products of generators of total
// degree k.

#include <span>
#include <string_view>
#include <vector>

#include "superdiv/divalg.hpp"
#include "superdiv/fplin.hpp"

namespace superdiv {

enum class SpanTarget { SUPERSYM, SYM_X };

std::string_view to_string(SpanTarget t);

struct DegreeReport {
  u64 degree = 0;
  u64 target_dim = 0;
  u64 achieved_dim = 0;
  std::vector<Monomial> missing;  // target pivots not reached, decreasing lex
  u64 outside = 0;                // achieved basis vectors outside the target

  bool full() const { return missing.empty() && outside == 0 && achieved_dim == target_dim; }
};

struct SpanReport {
  Context ctx;
  SpanTarget target;
  u64 bound;
  std::vector<DegreeReport> degrees;  // one per k = 0..bound

  bool complete() const;
  std::vector<u64> gap_degrees() const;
};

/// Orbit sums f_lambda over partitions lambda of k into at most m parts
/// (m = ctx.m), in decreasing lex order of lambda; {1} when k == 0.
std::vector<Element> sym_basis(const Context& ctx, u64 k);
/// Convenience form on Div[x_1..x_m] (m >= 1).
std::vector<Element> sym_basis(u32 p, u32 m, u64 k);

/// Echelon bases of the generated algebra A_0..A_bound on full coordinates.
/// Throws std::invalid_argument on a non-homogeneous generator or a context
/// mismatch. Zero and constant generators are ignored.
std::vector<EchelonBasis> generated_spans(const Context& ctx, std::span<const Element> generators,
                                          u64 bound);

SpanReport span_check(const Context& ctx, std::span<const Element> generators, SpanTarget target,
                      u64 bound);

}  // namespace superdiv
