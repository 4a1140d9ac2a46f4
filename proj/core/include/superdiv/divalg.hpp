#pragma once

// Divided-power algebra Div[x_1..x_m | y_1..y_n] over F_p.
//
// A monomial x^(a_1..a_m) y^(b_1..b_n) stands for the product of divided
// powers x_i^(a_i) = x_i^{a_i} / a_i!, with multiplication
// z^(a) z^(b) = C(a+b, a) z^(a+b). Elements are sparse, canonically sorted
// in strictly decreasing lexicographic order of the concatenated exponent
// tuple (x block first), with zero coefficients removed.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superdiv/arith.hpp"

namespace superdiv {

/// The ambient algebra: field characteristic and variable counts.
struct Context {
  u32 p = 3;
  u32 m = 1;
  u32 n = 1;

  /// Validates p (odd prime) and m + n >= 1.
  Context(u64 p, u64 m, u64 n);

  u32 nvars() const { return m + n; }
  friend bool operator==(const Context&, const Context&) = default;
};

std::string to_string(const Context& ctx);

enum class VarKind : std::uint8_t { X, Y };

/// A variable of the ambient context; index is 0-based within its block.
struct Variable {
  VarKind kind;
  u32 index;

  static constexpr Variable x(u32 i) { return {VarKind::X, i}; }
  static constexpr Variable y(u32 j) { return {VarKind::Y, j}; }
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Exponent tuple of a divided-power monomial.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<u32> xexp, std::vector<u32> yexp);

  static Monomial one(const Context& ctx);

  u32 m() const { return m_; }
  u32 n() const { return static_cast<u32>(exps_.size()) - m_; }
  std::span<const u32> x() const { return {exps_.data(), m_}; }
  std::span<const u32> y() const {
    return {exps_.data() + m_, exps_.size() - m_};
  }
  std::span<const u32> exponents() const { return exps_; }
  u32 exponent(Variable v) const;
  u32& exponent_ref(Variable v);
  u64 degree() const;
  bool fits(const Context& ctx) const { return ctx.m == m() && ctx.n == n(); }
  bool is_one() const;

  /// Orders by shape first, then lexicographically on the exponents. For
  /// monomials of one context this is exactly lex_compare.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  u32 m_ = 0;
  std::vector<u32> exps_;
};

/// Renders `x1^(2)*x2*y1^(3)`; the empty monomial renders `1`.
std::string to_string(const Monomial& mono);

struct Term {
  Monomial monomial;
  u32 coeff;  // residue in [1, p)

  friend bool operator==(const Term&, const Term&) = default;
};

/// A finitely supported F_p-combination of monomials of one context.
class Element {
 public:
  explicit Element(Context ctx);
  /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  /// Coefficients may be any residue below p.
  Element(Context ctx, std::vector<Term> terms);

  static Element monomial(const Context& ctx, Monomial mono,
                          std::int64_t coeff = 1);
  static Element one(const Context& ctx);

  const Context& context() const { return ctx_; }
  u32 p() const { return ctx_.p; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FpScalar coefficient(const Monomial& mono) const;
  bool is_homogeneous() const;
  /// Common degree of all terms; nullopt for zero or mixed degrees.
  std::optional<u64> degree() const;
  /// Homogeneous components in increasing degree.
  std::vector<Element> homogeneous_components() const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element& operator+=(const Element& rhs) { return *this = *this + rhs; }
  Element& operator-=(const Element& rhs) { return *this = *this - rhs; }
  Element scaled(FpScalar c) const;
  Element scaled(std::int64_t c) const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Context ctx_;
  std::vector<Term> terms_;
};

/// Throws std::invalid_argument unless both contexts agree.
void require_same_context(const Context& a, const Context& b);

/// Product in Div; terms with a p-adic carry in any variable vanish.
Element multiply(const Element& f, const Element& g);
Element operator*(const Element& f, const Element& g);

/// Derivation lowering the chosen variable's exponent by one (coefficient 1).
Element derive(const Element& f, Variable var);

/// (x_1 - y_1) * f.
Element mul_x1_minus_y1(const Element& f);

/// Lexicographic comparison of the concatenated (x, y) exponent tuples.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct LeadingTerm {
  Monomial monomial;
  FpScalar coeff;
};

/// Lex-greatest monomial with its coefficient; throws std::domain_error on 0.
LeadingTerm leading_term(const Element& f);

/// Sorts each exponent block in descending order.
Monomial symmetrize_monomial(const Monomial& mono);
bool is_symmetrized(const Monomial& mono);

/// Sum of the distinct monomials in the Sigma_m x Sigma_n orbit of
/// x^(xs) y^(ys), each with coefficient 1. Both tuples must be sorted
/// descending; throws std::invalid_argument otherwise.
Element orbit_sum(const Context& ctx, std::span<const u32> xs,
                  std::span<const u32> ys);
/// orbit_sum of an already symmetrized monomial.
Element orbit_sum(const Context& ctx, const Monomial& symmetrized);

/// i-th elementary symmetric polynomial in the x variables.
Element elementary_sigma(const Context& ctx, u32 i);
/// Complete homogeneous symmetric polynomial h_j(y) in divided-power
/// coordinates: y^(j_1..j_n) carries j_1!...j_n! mod p.
Element complete_h(const Context& ctx, u32 j);

/// Exponent of p in j_1! ... j_n!.
u64 factorial_product_valuation(std::span<const u32> js, u32 p);
/// Minimum of factorial_product_valuation over compositions of k into n parts.
u64 min_composition_valuation(u32 n, u32 k, u32 p);

/// The supersymmetric element obtained from the characteristic-zero
/// generator C_t = sum_i (-1)^{t-i} sigma_i(x) h_{t-i}(y): computed over the
/// integers, divided by p^{d_{t-m}} when t > m, then reduced mod p.
/// Throws std::invalid_argument for t == 0, or t > m with n == 0.
Element e_element(const Context& ctx, u32 t);

/// Every monomial of degree k, strictly decreasing in lex order.
std::vector<Monomial> monomials_of_degree(const Context& ctx, u64 k);
/// Symmetrized monomials of degree k, strictly decreasing in lex order.
std::vector<Monomial> symmetrized_monomials_of_degree(const Context& ctx,
                                                      u64 k);

/// Applies the transposition of two variables of the same block.
Element swap_variables(const Element& f, VarKind kind, u32 a, u32 b);

struct FrozenExponent {
  Variable var;
  u32 exponent;
};

/// Cofactor of f after freezing the listed variables at the given
/// exponents: keeps the terms matching every frozen exponent and drops the
/// frozen variables, relabeling the rest in order.
Element slice_element(const Element& f, std::span<const FrozenExponent> fixed);

}  // namespace superdiv
