#include "superdiv/supersym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace superdiv {

namespace {

void require_mixed_context(const Context& ctx, const char* what) {
  if (ctx.m == 0 || ctx.n == 0) {
    throw std::invalid_argument(std::string(what) + " needs m >= 1 and n >= 1");
  }
}

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& cols) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < cols.size(); ++i) idx.emplace(cols[i], i);
  return idx;
}

// Tails (i_2..i_m | j_2..j_n) of total degree d, as one flat composition.
void for_each_tail(const Context& ctx, u64 d,
                   const std::function<void(const std::vector<u32>&)>& emit) {
  const u32 slots = ctx.m - 1 + ctx.n - 1;
  if (slots == 0) {
    if (d == 0) emit({});
    return;
  }
  std::vector<u32> prefix;
  std::function<void(u32, u64)> rec = [&](u32 left, u64 remaining) {
    if (left == 1) {
      prefix.push_back(static_cast<u32>(remaining));
      emit(prefix);
      prefix.pop_back();
      return;
    }
    for (u64 first = 0; first <= remaining; ++first) {
      prefix.push_back(static_cast<u32>(first));
      rec(left - 1, remaining - first);
      prefix.pop_back();
    }
  };
  rec(slots, d);
}

Monomial assemble(const Context& ctx, u32 x1, u32 y1, const std::vector<u32>& tail) {
  std::vector<u32> xs;
  std::vector<u32> ys;
  xs.push_back(x1);
  xs.insert(xs.end(), tail.begin(), tail.begin() + (ctx.m - 1));
  ys.push_back(y1);
  ys.insert(ys.end(), tail.begin() + (ctx.m - 1), tail.end());
  return Monomial(std::move(xs), std::move(ys));
}

// Emits each defining equation as a list of (monomial, coefficient) pairs
// on full coordinates.
void for_each_defining_equation(
    const Context& ctx, u64 k,
    const std::function<void(const std::vector<std::pair<Monomial, u32>>&)>& emit) {
  const u32 p = ctx.p;
  for (u64 t = 0; t <= k; ++t) {
    const u64 l = t / p;
    const u64 s = t % p;
    for_each_tail(ctx, k - t, [&](const std::vector<u32>& tail) {
      std::vector<std::pair<Monomial, u32>> eq;
      if (s > 0) {
        for (u64 r = 0; r <= l; ++r) {
          eq.clear();
          for (u64 j = 0; j <= s; ++j) {
            eq.emplace_back(assemble(ctx, static_cast<u32>(t - p * r - j),
                                     static_cast<u32>(p * r + j), tail),
                            binom_residue(s, j, p));
          }
          emit(eq);
        }
      } else {
        for (u64 r = 0; r < l; ++r) {
          eq.clear();
          eq.emplace_back(assemble(ctx, static_cast<u32>(t - p * r),
                                   static_cast<u32>(p * r), tail), 1);
          eq.emplace_back(assemble(ctx, static_cast<u32>(t - p * (r + 1)),
                                   static_cast<u32>(p * (r + 1)), tail), 1);
          emit(eq);
        }
      }
    });
  }
}

Monomial shifted(const Monomial& mono, Variable v, int delta) {
  Monomial out = mono;
  out.exponent_ref(v) = static_cast<u32>(static_cast<std::int64_t>(out.exponent(v)) + delta);
  return out;
}

}  // namespace

DegreeBlock degree_block(const Context& ctx, u64 k) {
  return {ctx, k, monomials_of_degree(ctx, k)};
}

bool is_symmetric(const Element& f) {
  const Context& ctx = f.context();
  for (u32 i = 0; i + 1 < ctx.m; ++i) {
    if (!(swap_variables(f, VarKind::X, i, i + 1) == f)) return false;
  }
  for (u32 j = 0; j + 1 < ctx.n; ++j) {
    if (!(swap_variables(f, VarKind::Y, j, j + 1) == f)) return false;
  }
  return true;
}

OracleResult oracle_is_supersymmetric(const Element& f) {
  const Context& ctx = f.context();
  require_mixed_context(ctx, "oracle_is_supersymmetric");
  const u32 p = ctx.p;
  OracleResult result;
  if (!is_symmetric(f)) return result;

  Element witness(ctx);
  for (const Element& component : f.homogeneous_components()) {
    const u64 k = *component.degree();
    if (k == 0) continue;
    const Element rhs_el = derive(component, Variable::x(0)) + derive(component, Variable::y(0));
    const std::vector<Monomial> rows = monomials_of_degree(ctx, k - 1);
    const std::vector<Monomial> cols = k >= 2 ? monomials_of_degree(ctx, k - 2) : std::vector<Monomial>{};
    const auto col_idx = index_of(cols);
    FpMatrix m(p, 0, cols.size());
    FpVector rhs;
    rhs.reserve(rows.size());
    for (const Monomial& mu : rows) {
      SparseRow row;
      const u32 ex = mu.exponent(Variable::x(0));
      const u32 ey = mu.exponent(Variable::y(0));
      if (ex > 0) row.push_back({col_idx.at(shifted(mu, Variable::x(0), -1)), static_cast<u32>(ex % p)});
      if (ey > 0) row.push_back({col_idx.at(shifted(mu, Variable::y(0), -1)), neg_mod(ey % p, p)});
      m.append_row(row);
      rhs.push_back(rhs_el.coefficient(mu).value());
    }
    const Consistency c = is_consistent(m, rhs);
    if (!c.consistent) return result;
    std::vector<Term> terms;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (c.solution[i] != 0) terms.push_back({cols[i], c.solution[i]});
    }
    witness += Element(ctx, std::move(terms));
  }
  result.supersymmetric = true;
  result.witness = std::move(witness);
  return result;
}

FpMatrix defining_system(const Context& ctx, u64 k) {
  require_mixed_context(ctx, "defining_system");
  const std::vector<Monomial> cols = symmetrized_monomials_of_degree(ctx, k);
  const auto idx = index_of(cols);
  FpMatrix m(ctx.p, 0, cols.size());
  for_each_defining_equation(ctx, k, [&](const std::vector<std::pair<Monomial, u32>>& eq) {
    SparseRow row;
    for (const auto& [mono, c] : eq) row.push_back({idx.at(symmetrize_monomial(mono)), c});
    m.append_row(row);
  });
  return m;
}

FpMatrix defining_system_full(const Context& ctx, u64 k) {
  require_mixed_context(ctx, "defining_system_full");
  const u32 p = ctx.p;
  const std::vector<Monomial> cols = monomials_of_degree(ctx, k);
  const auto idx = index_of(cols);
  FpMatrix m(p, 0, cols.size());
  for_each_defining_equation(ctx, k, [&](const std::vector<std::pair<Monomial, u32>>& eq) {
    SparseRow row;
    for (const auto& [mono, c] : eq) row.push_back({idx.at(mono), c});
    m.append_row(row);
  });
  for (const Monomial& mu : cols) {
    for (VarKind kind : {VarKind::X, VarKind::Y}) {
      const u32 count = kind == VarKind::X ? ctx.m : ctx.n;
      for (u32 i = 0; i + 1 < count; ++i) {
        Monomial swapped = mu;
        std::swap(swapped.exponent_ref({kind, i}), swapped.exponent_ref({kind, i + 1}));
        if (swapped == mu) continue;
        const SparseEntry row[] = {{idx.at(mu), 1}, {idx.at(swapped), p - 1}};
        m.append_row(row);
      }
    }
  }
  return m;
}

EchelonBasis oracle_space(const Context& ctx, u64 k) {
  require_mixed_context(ctx, "oracle_space");
  const u32 p = ctx.p;
  std::vector<Monomial> orbit_cols = symmetrized_monomials_of_degree(ctx, k);
  const auto orbit_idx = index_of(orbit_cols);
  const std::size_t na = orbit_cols.size();
  EchelonBasis out(p, orbit_cols);
  if (k == 0) {
    out.insert(FpVector{1});
    return out;
  }
  const std::vector<Monomial> rows = monomials_of_degree(ctx, k - 1);
  const std::vector<Monomial> bcols = k >= 2 ? monomials_of_degree(ctx, k - 2) : std::vector<Monomial>{};
  const auto b_idx = index_of(bcols);
  FpMatrix m(p, 0, na + bcols.size());
  for (const Monomial& mu : rows) {
    SparseRow row;
    row.push_back({orbit_idx.at(symmetrize_monomial(shifted(mu, Variable::x(0), 1))), 1});
    row.push_back({orbit_idx.at(symmetrize_monomial(shifted(mu, Variable::y(0), 1))), 1});
    const u32 ex = mu.exponent(Variable::x(0));
    const u32 ey = mu.exponent(Variable::y(0));
    if (ex > 0) row.push_back({na + b_idx.at(shifted(mu, Variable::x(0), -1)), neg_mod(ex % p, p)});
    if (ey > 0) row.push_back({na + b_idx.at(shifted(mu, Variable::y(0), -1)), static_cast<u32>(ey % p)});
    m.append_row(row);
  }
  for (const FpVector& v : nullspace(m)) {
    out.insert(FpVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(na)));
  }
  return out;
}

Element element_from_orbit_coordinates(const Context& ctx, const std::vector<Monomial>& columns,
                                       std::span<const u32> coords) {
  if (coords.size() != columns.size()) {
    throw std::invalid_argument("element_from_orbit_coordinates: length mismatch");
  }
  Element out(ctx);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (coords[c] % ctx.p != 0) out += orbit_sum(ctx, columns[c]).scaled(coords[c]);
  }
  return out;
}

FpVector orbit_coordinates(const Element& f, const std::vector<Monomial>& columns) {
  FpVector v(columns.size(), 0);
  for (std::size_t c = 0; c < columns.size(); ++c) v[c] = f.coefficient(columns[c]).value();
  return v;
}

EchelonBasis full_span(const Context& ctx, u64 k, std::span<const Element> elements) {
  EchelonBasis out(ctx.p, monomials_of_degree(ctx, k));
  for (const Element& e : elements) {
    require_same_context(ctx, e.context());
    out.insert(out.coordinates(e));
  }
  return out;
}

SkBasis basis_Sk(const Context& ctx, u64 k) {
  std::vector<Monomial> cols = symmetrized_monomials_of_degree(ctx, k);
  EchelonBasis echelon(ctx.p, cols);
  if (ctx.m == 0 || ctx.n == 0) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      FpVector v(cols.size(), 0);
      v[c] = 1;
      echelon.insert(std::move(v));
    }
  } else {
    for (FpVector& v : nullspace(defining_system(ctx, k))) echelon.insert(std::move(v));
  }
  std::vector<Element> elements;
  elements.reserve(echelon.dim());
  for (const FpVector& row : echelon.rows()) {
    elements.push_back(element_from_orbit_coordinates(ctx, cols, row));
  }
  return {ctx, k, std::move(echelon), std::move(elements)};
}

u64 expected_dim_11(u64 k, u32 p) {
  const u64 l = k / p;
  const u64 s = k % p;
  u64 count = 0;
  for (u64 t = 0; t <= k; ++t) {
    if (t % p > s) ++count;
  }
  return count + s * (l + 1) + (s == 0 ? 1 : 0);
}

std::vector<Element> kbasis_11(u64 k, u32 p) {
  const Context ctx(p, 1, 1);
  const u64 l = k / p;
  const u64 s = k % p;
  auto mono = [](u64 i, u64 j) {
    return Monomial({static_cast<u32>(i)}, {static_cast<u32>(j)});
  };
  std::vector<Element> out;
  for (u64 t = 0; t <= k; ++t) {
    if (t % p > s) out.push_back(Element::monomial(ctx, mono(t, k - t)));
  }
  for (u64 j = 0; j < s; ++j) {
    // (s-j)! and s(s-1)...(j+1) = s!/j!, both below p! so never zero mod p.
    const u32 lead = factorial_residue(s - j, p);
    u32 tail = 1;
    for (u64 f = j + 1; f <= s; ++f) tail = mul_mod(tail, static_cast<u32>(f), p);
    for (u64 r = 0; r <= l; ++r) {
      std::vector<Term> terms;
      terms.push_back({mono(k - p * r - j, p * r + j), lead});
      terms.push_back({mono(k - p * r - s, p * r + s), neg_mod(tail, p)});
      out.emplace_back(ctx, std::move(terms));
    }
  }
  if (s == 0) {
    std::vector<Term> terms;
    for (u64 r = 0; r <= l; ++r) {
      terms.push_back({mono(p * r, k - p * r), r % 2 == 0 ? 1u : p - 1});
    }
    out.emplace_back(ctx, std::move(terms));
  }
  return out;
}

bool MarkedReport::is_marked(const Monomial& symmetrized) const {
  return std::binary_search(marked.begin(), marked.end(), symmetrized, std::greater<>());
}

MarkedReport marked_monomials(const SkBasis& basis) {
  MarkedReport report{basis.degree, {}, {}};
  std::vector<bool> pivot(basis.echelon.ncols(), false);
  for (std::size_t c : basis.echelon.pivots()) pivot[c] = true;
  for (std::size_t c = 0; c < basis.echelon.ncols(); ++c) {
    (pivot[c] ? report.marked : report.unmarked).push_back(basis.echelon.columns()[c]);
  }
  return report;
}

MarkedReport marked_monomials(const Context& ctx, u64 k) {
  return marked_monomials(basis_Sk(ctx, k));
}

std::vector<BlowViolation> lemma_blow_violations(const Context& ctx, u64 k) {
  if (ctx.m != 2 || ctx.n != 1) {
    throw std::invalid_argument("lemma_blow_violations needs Div[x1, x2, y1]");
  }
  const u32 p = ctx.p;
  const SkBasis basis = basis_Sk(ctx, k);
  std::vector<BlowViolation> out;
  for (u64 j1 = 0; j1 <= k; j1 += p) {
    for (u64 i2 = 0; i2 + j1 <= k; i2 += p) {
      const u64 i1 = k - j1 - i2;
      if (i1 < p) continue;
      const Monomial start({static_cast<u32>(i1), static_cast<u32>(i2)}, {static_cast<u32>(j1)});
      for (std::size_t b = 0; b < basis.elements.size(); ++b) {
        const Element& f = basis.elements[b];
        const FpScalar head = f.coefficient(start);
        for (u64 c = 1; c * p <= i1; ++c) {
          const Monomial next({static_cast<u32>(i1 - c * p), static_cast<u32>(i2 + c * p)},
                              {static_cast<u32>(j1)});
          if (!(f.coefficient(next) == head)) out.push_back({b, start, next});
        }
      }
    }
  }
  return out;
}

bool check_lemma_blow(const Context& ctx, u64 k) {
  return lemma_blow_violations(ctx, k).empty();
}

}  // namespace superdiv
