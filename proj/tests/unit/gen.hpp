#pragma once

// Hand-rolled generators for property tests. Every test seeds its own
// engine so failures replay exactly.

#include <random>
#include <vector>

#include "superdiv/divalg.hpp"

namespace superdiv::testgen {

inline Monomial random_monomial(const Context& ctx, u32 max_exp, std::mt19937_64& rng) {
  std::uniform_int_distribution<u32> e(0, max_exp);
  std::vector<u32> xs(ctx.m), ys(ctx.n);
  for (u32& v : xs) v = e(rng);
  for (u32& v : ys) v = e(rng);
  return Monomial(std::move(xs), std::move(ys));
}

inline Element random_element(const Context& ctx, u32 max_exp, std::size_t terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<u32> c(0, ctx.p - 1);
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) ts.push_back({random_monomial(ctx, max_exp, rng), c(rng)});
  return Element(ctx, std::move(ts));
}

/// Random homogeneous element of degree k.
inline Element random_homogeneous(const Context& ctx, u64 k, std::size_t terms, std::mt19937_64& rng) {
  const std::vector<Monomial> all = monomials_of_degree(ctx, k);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<u32> c(1, ctx.p - 1);
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) ts.push_back({all[pick(rng)], c(rng)});
  return Element(ctx, std::move(ts));
}

}  // namespace superdiv::testgen
