#pragma once

// Explicit supersymmetric (and symmetric) element families, the height
// classifier on y-exponent tuples, and the generator lists of the settled
// cases Div[x]^{Sigma_m}, Div[x_1..x_m, y_1], Div[x_1, y_1, y_2] and
// Div[x_1, x_2, y_1, y_2].
//
// Notation: f_{a_1..a_m} is the orbit sum on the x variables, g_{j_1..j_n}
// the orbit sum on the y variables; i_u = p k_u + r_u and j_v = p l_v + s_v.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superdiv/divalg.hpp"

namespace superdiv {

enum class FamilyId {
  EVEN_D,      // f_{q, a_2..a_m}, q = p^s >= a_2 >= ... (symmetric only)
  PAIR_SIGMA,  // sum_{r=0}^{p^{s-1}} (-1)^r x^(pr) y^(p^s - pr), s >= 1
  PAIR_C,      // x y^(k-1) - k y^(k), k >= 1
  KBASIS11,    // idx-th element of the explicit basis of S_k in Div[x, y]
  LEMMA_P,     // sum over (u, v) |u|+|v| = k of (-1)^{|v|} x^(pu) y^(pv)
  JEDEN,       // leading term x^(i) y_1^(j), no positive i_u divisible by p
  E,           // E_t
  L62,         // leading term x_1 y^(j), j of height 1
  L63,         // leading term x_1^(2) y^(j_1, j_2)
  SEST,        // leading term x^(i_1, i_2) y^(j_1, j_2), r_1 = r_2 = 1
  SEDEM,       // leading term x^(i_1, i_2) y^(j_1, j_2), r_1 = r_2 = 2
};

std::string_view to_string(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

/// Literal reproduces the printed formula of L63 / SEDEM (summing every
/// displayed term); Corrected is the form that passes the oracle. Other
/// families ignore the variant.
enum class FamilyVariant { Corrected, Literal };

/// Precondition, parse or context violation.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The constructed element failed its postcondition (oracle or leading term).
class FamilyCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family with its integer parameters. Text form:
/// `JEDEN:i=2,1;j=0`, `E:t=4`, `L63:j=1,1;variant=literal`.
struct FamilySpec {
  FamilyId id;
  std::vector<std::pair<std::string, std::vector<u32>>> params;
  FamilyVariant variant = FamilyVariant::Corrected;

  /// Validates parameter names and shapes for the family.
  static FamilySpec make(FamilyId id,
                         std::vector<std::pair<std::string, std::vector<u32>>> params,
                         FamilyVariant variant = FamilyVariant::Corrected);

  const std::vector<u32>& param(std::string_view name) const;
  u32 scalar(std::string_view name) const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws FamilyError on unknown families, unknown or missing keys and
/// malformed integers.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// The smallest ambient algebra the family lives in.
Context default_context(const FamilySpec& spec, u32 p);

/// The monomial the family is constructed to lead with.
Monomial declared_leading_monomial(const FamilySpec& spec, const Context& ctx);

/// Builds the element without checking the postcondition. Throws
/// FamilyError when the parameters or the context do not fit the family.
Element family_element_unchecked(const FamilySpec& spec, const Context& ctx);

/// Builds the element and enforces the postcondition: the oracle accepts it
/// (symmetry only for EVEN_D) and its leading monomial is the declared one.
/// Throws FamilyCheckError otherwise.
Element family_element(const FamilySpec& spec, const Context& ctx);

enum class HeightClass { One, Greater };

std::string_view to_string(HeightClass h);

/// Height of a sorted tuple j_1 >= ... >= j_n: one when j_1 <= p-1 and, at
/// the first t with s_t != p-1, j_{t+1} = 0 (vacuous when every s_t = p-1
/// or t = n); or when j_1 > p-1 and s_1 = ... = s_{n-1} = p-1. Throws
/// std::invalid_argument on unsorted input.
HeightClass height(std::span<const u32> js, u32 p);

/// The two-variable shortcut taken verbatim: one iff (0 < j_1 < p-1 and
/// j_2 = 0) or s_1 = p-1. Differs from height() only at (0, 0).
HeightClass height_n2_shortcut(u32 j1, u32 j2, u32 p);

/// Lex-greatest composition j of k into n parts with v_p(j_1!..j_n!) = d_k.
std::vector<u32> ell_factorial_reading(u32 n, u32 k, u32 p);
/// Lex-greatest composition j of k into n parts whose multinomial
/// coefficient k!/(j_1!..j_n!) is not divisible by p^{d_k + 1}.
std::vector<u32> ell_multinomial_reading(u32 n, u32 k, u32 p);

enum class TheoremCase { SYM, M1, ONE_TWO, TWO_TWO };

std::string_view to_string(TheoremCase c);
std::optional<TheoremCase> theorem_case_from_name(std::string_view name);

/// Which x_1^(p^s) generators the M1 list carries.
enum class PowerVariant { SGeOne, SGtOne };

std::string_view to_string(PowerVariant v);
std::optional<PowerVariant> power_variant_from_name(std::string_view name);

struct GeneratorEntry {
  Monomial marked;                  // the listed symmetrized monomial M
  std::optional<FamilySpec> family; // closed form tried for S(M)
  bool fallback = false;            // S(M) taken from the echelon basis
  std::string note;                 // why the fallback was needed
  std::optional<Element> element;   // absent only if M turned out unmarked
};

struct GeneratorList {
  Context ctx;
  std::vector<GeneratorEntry> entries;

  std::vector<Element> elements() const;
  std::size_t fallback_count() const;
};

/// The context a theorem case lives in; m is used by SYM and M1 only.
Context theorem_context(TheoremCase c, u32 m, u32 p);

/// S(M) for every monomial M of degree <= degree_bound in the case's
/// generator list, built from the catalog where a family applies and taken
/// from the echelon basis of S_k otherwise.
GeneratorList theorem_generators(TheoremCase c, u32 m, u64 degree_bound, u32 p,
                                 PowerVariant variant = PowerVariant::SGeOne);

/// PAIR_C for 1 <= k <= degree_bound and PAIR_SIGMA for p^s <= degree_bound.
GeneratorList pair_generators(u64 degree_bound, u32 p);

}  // namespace superdiv
