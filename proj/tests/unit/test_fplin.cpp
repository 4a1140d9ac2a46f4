#include <gtest/gtest.h>

#include <random>
#include <set>

#include "superdiv/fplin.hpp"

using namespace superdiv;

namespace {

FpMatrix random_matrix(u32 p, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  std::uniform_int_distribution<int> sparse(0, 2);
  std::vector<std::vector<std::int64_t>> dense(rows, std::vector<std::int64_t>(cols));
  for (auto& row : dense) {
    for (auto& v : row) v = sparse(rng) ? d(rng) : 0;
  }
  return FpMatrix::from_dense(p, dense, cols);
}

// Enumerates every vector of F_p^n.
std::vector<FpVector> all_vectors(u32 p, std::size_t n) {
  std::vector<FpVector> out{FpVector(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FpVector> next;
    for (const FpVector& v : out) {
      for (u32 c = 0; c < p; ++c) {
        FpVector w = v;
        w[i] = c;
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Monomial> labels(std::size_t n) {
  // n distinct monomials of one context, decreasing.
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Monomial({static_cast<u32>(n - 1 - i)}, {static_cast<u32>(i)}));
  return out;
}

}  // namespace

TEST(Fplin, RankMatchesImageSize) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 60; ++it) {
    const u32 p = 3;
    const std::size_t rows = 1 + it % 4, cols = 1 + (it / 4) % 5;
    const FpMatrix m = random_matrix(p, rows, cols, rng);
    std::set<FpVector> image;
    for (const FpVector& v : all_vectors(p, cols)) image.insert(m.apply(v));
    u64 size = 1;
    const std::size_t rank = rref(m).rank();
    for (std::size_t i = 0; i < rank; ++i) size *= p;
    EXPECT_EQ(image.size(), size);
  }
}

TEST(Fplin, NullspaceIsKernel) {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 60; ++it) {
    const u32 p = it % 2 ? 3 : 5;
    const FpMatrix m = random_matrix(p, 1 + it % 5, 1 + (it / 3) % 6, rng);
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size(), m.ncols() - rref(m).rank());
    for (const FpVector& v : ns) {
      for (u32 x : m.apply(v)) EXPECT_EQ(x, 0u);
    }
    EXPECT_EQ(echelonize_span(p, ns, labels(m.ncols())).dim(), ns.size());
  }
}

TEST(Fplin, ConsistencyAgreesWithSearch) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 60; ++it) {
    const u32 p = 3;
    const std::size_t rows = 1 + it % 3, cols = 1 + (it / 3) % 4;
    const FpMatrix m = random_matrix(p, rows, cols, rng);
    std::uniform_int_distribution<u32> d(0, p - 1);
    FpVector rhs(rows);
    for (u32& v : rhs) v = d(rng);
    bool found = false;
    for (const FpVector& v : all_vectors(p, cols)) found = found || m.apply(v) == rhs;
    const Consistency c = is_consistent(m, rhs);
    EXPECT_EQ(c.consistent, found);
    if (c.consistent) EXPECT_EQ(m.apply(c.solution), rhs);
  }
  EXPECT_THROW(is_consistent(FpMatrix(3, 2, 2), FpVector{1}), std::invalid_argument);
}

TEST(Fplin, RrefIsReduced) {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 40; ++it) {
    const FpMatrix m = random_matrix(5, 4, 6, rng);
    const RrefResult r = rref(m);
    const auto dense = r.reduced.to_dense();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      for (std::size_t row = 0; row < dense.size(); ++row) {
        EXPECT_EQ(dense[row][r.pivots[i]], row == i ? 1u : 0u);
      }
    }
  }
}

TEST(Fplin, SparseRowsCanonicalize) {
  FpMatrix m(3, 0, 4);
  const SparseEntry entries[] = {{2, 1}, {0, 2}, {2, 2}, {3, 0}};
  m.append_row(entries);
  ASSERT_EQ(m.rows()[0].size(), 1u);
  EXPECT_EQ(m.at(0, 0), 2u);
  EXPECT_EQ(m.at(0, 2), 0u);
}

TEST(Fplin, EchelonBasisInsertAndContains) {
  std::mt19937_64 rng(25);
  const u32 p = 3;
  const std::size_t n = 5;
  for (int it = 0; it < 30; ++it) {
    EchelonBasis basis(p, labels(n));
    std::vector<FpVector> inserted;
    std::uniform_int_distribution<u32> d(0, p - 1);
    for (int j = 0; j < 3; ++j) {
      FpVector v(n);
      for (u32& x : v) x = d(rng);
      basis.insert(v);
      inserted.push_back(v);
    }
    std::set<FpVector> span;
    for (const FpVector& c : all_vectors(p, inserted.size())) {
      FpVector s(n, 0);
      for (std::size_t j = 0; j < inserted.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) s[i] = add_mod(s[i], mul_mod(c[j], inserted[j][i], p), p);
      }
      span.insert(s);
    }
    for (const FpVector& v : all_vectors(p, n)) EXPECT_EQ(basis.contains(v), span.count(v) == 1);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      EXPECT_EQ(basis.rows()[i][basis.pivots()[i]], 1u);
      for (std::size_t j = 0; j < basis.dim(); ++j) {
        if (j != i) EXPECT_EQ(basis.rows()[j][basis.pivots()[i]], 0u);
      }
    }
  }
}

TEST(Fplin, EchelonCoordinatesRoundTrip) {
  const Context ctx(3, 1, 1);
  EchelonBasis basis(3, labels(4));
  const Element f(ctx, {{Monomial({3}, {0}), 2}, {Monomial({1}, {2}), 1}});
  EXPECT_EQ(basis.element(ctx, basis.coordinates(f)), f);
  EXPECT_THROW(basis.coordinates(Element::monomial(ctx, Monomial({5}, {0}))), std::invalid_argument);
  EXPECT_EQ(basis.column_of(Monomial({0}, {3})), 3u);
}
