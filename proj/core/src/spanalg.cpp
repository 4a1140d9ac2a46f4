#include "superdiv/spanalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "superdiv/supersym.hpp"

namespace superdiv {

std::string_view to_string(SpanTarget t) { return t == SpanTarget::SUPERSYM ? "SUPERSYM" : "SYM_X"; }

bool SpanReport::complete() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.full(); });
}

std::vector<u64> SpanReport::gap_degrees() const {
  std::vector<u64> out;
  for (const DegreeReport& d : degrees) {
    if (!d.full()) out.push_back(d.degree);
  }
  return out;
}

std::vector<Element> sym_basis(const Context& ctx, u64 k) {
  // Only the x block matters; the y exponents stay zero.
  std::vector<Element> out;
  if (k == 0) {
    out.push_back(Element::one(ctx));
    return out;
  }
  if (ctx.m == 0) return out;
  const Context xonly(ctx.p, ctx.m, 0);
  for (const Monomial& mono : symmetrized_monomials_of_degree(xonly, k)) {
    std::vector<u32> xs(mono.x().begin(), mono.x().end());
    out.push_back(orbit_sum(ctx, Monomial(std::move(xs), std::vector<u32>(ctx.n, 0))));
  }
  return out;
}

std::vector<Element> sym_basis(u32 p, u32 m, u64 k) {
  if (m == 0) throw std::invalid_argument("sym_basis needs m >= 1");
  return sym_basis(Context(p, m, 0), k);
}

std::vector<EchelonBasis> generated_spans(const Context& ctx, std::span<const Element> generators,
                                          u64 bound) {
  std::vector<std::vector<const Element*>> by_degree(bound + 1);
  for (const Element& g : generators) {
    require_same_context(ctx, g.context());
    if (g.is_zero()) continue;
    const auto deg = g.degree();
    if (!deg) throw std::invalid_argument("span_check: generator is not homogeneous");
    if (*deg == 0 || *deg > bound) continue;
    by_degree[*deg].push_back(&g);
  }
  std::vector<EchelonBasis> spans;
  std::vector<std::vector<Element>> span_elements;
  spans.reserve(bound + 1);
  for (u64 k = 0; k <= bound; ++k) {
    EchelonBasis basis(ctx.p, monomials_of_degree(ctx, k));
    if (k == 0) {
      basis.insert(basis.coordinates(Element::one(ctx)));
    } else {
      for (u64 d = 1; d <= k; ++d) {
        for (const Element* g : by_degree[d]) {
          for (const Element& a : span_elements[k - d]) {
            const Element prod = *g * a;
            if (!prod.is_zero()) basis.insert(basis.coordinates(prod));
          }
        }
      }
    }
    std::vector<Element> elems;
    for (const FpVector& row : basis.rows()) elems.push_back(basis.element(ctx, row));
    span_elements.push_back(std::move(elems));
    spans.push_back(std::move(basis));
  }
  return spans;
}

SpanReport span_check(const Context& ctx, std::span<const Element> generators, SpanTarget target,
                      u64 bound) {
  const std::vector<EchelonBasis> spans = generated_spans(ctx, generators, bound);
  SpanReport report{ctx, target, bound, {}};
  for (u64 k = 0; k <= bound; ++k) {
    const std::vector<Element> target_elems =
        target == SpanTarget::SUPERSYM ? basis_Sk(ctx, k).elements : sym_basis(ctx, k);
    const EchelonBasis tgt = full_span(ctx, k, target_elems);
    const EchelonBasis& got = spans[k];
    DegreeReport d;
    d.degree = k;
    d.target_dim = tgt.dim();
    d.achieved_dim = got.dim();
    const std::vector<Monomial> got_pivots = got.pivot_monomials();
    for (const Monomial& mono : tgt.pivot_monomials()) {
      if (!std::binary_search(got_pivots.begin(), got_pivots.end(), mono, std::greater<>())) {
        d.missing.push_back(mono);
      }
    }
    for (const FpVector& row : got.rows()) {
      if (!tgt.contains(row)) ++d.outside;
    }
    report.degrees.push_back(std::move(d));
  }
  return report;
}

}  // namespace superdiv
