#include "superdiv/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "superdiv/catalog.hpp"
#include "superdiv/spanalg.hpp"
#include "superdiv/supersym.hpp"

namespace superdiv {

namespace {

template <typename T>
std::string join(const std::vector<T>& xs, std::string_view sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << sep;
    out << xs[i];
  }
  return out.str();
}

std::string tuple_string(std::span<const u32> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string monomials_string(const std::vector<Monomial>& ms) {
  std::vector<std::string> parts;
  for (const Monomial& m : ms) parts.push_back(to_string(m));
  return join(parts);
}

Element random_combination(const std::vector<Element>& basis, const Context& ctx, std::mt19937_64& rng) {
  Element f(ctx);
  std::uniform_int_distribution<u32> coeff(0, ctx.p - 1);
  for (const Element& b : basis) f += b.scaled(static_cast<std::int64_t>(coeff(rng)));
  return f;
}

// One line per gap degree: degree, dims and missing pivots.
void describe_gaps(const SpanReport& rep, std::vector<std::string>& notes, const std::string& label) {
  for (const DegreeReport& d : rep.degrees) {
    if (d.full()) continue;
    notes.push_back(label + " degree " + std::to_string(d.degree) + ": target " + std::to_string(d.target_dim) +
                    ", achieved " + std::to_string(d.achieved_dim) + ", outside " + std::to_string(d.outside) +
                    ", missing " + monomials_string(d.missing));
  }
}

// Adds S(M) for each missing pivot M, lowest gap degree first, until the
// report is complete. Returns the added monomials.
std::vector<Monomial> close_gaps(const Context& ctx, std::vector<Element> gens, SpanTarget target, u64 bound,
                                 bool& closed) {
  std::vector<Monomial> added;
  closed = false;
  for (u64 round = 0; round <= bound; ++round) {
    const SpanReport rep = span_check(ctx, gens, target, bound);
    const auto gap = std::find_if(rep.degrees.begin(), rep.degrees.end(), [](const DegreeReport& d) { return !d.full(); });
    if (gap == rep.degrees.end()) {
      closed = true;
      return added;
    }
    if (gap->outside != 0 || gap->missing.empty()) return added;
    const SkBasis basis = basis_Sk(ctx, gap->degree);
    const std::vector<Monomial> pivots = basis.echelon.pivot_monomials();
    for (const Monomial& mono : gap->missing) {
      const auto it = std::find(pivots.begin(), pivots.end(), mono);
      if (it == pivots.end()) return added;
      gens.push_back(basis.elements[static_cast<std::size_t>(it - pivots.begin())]);
      added.push_back(mono);
    }
  }
  return added;
}

u64 partitions_at_most(u64 k, u64 parts) {
  // p(k, <= parts) by the standard recurrence on the largest allowed part count.
  std::vector<std::vector<u64>> table(parts + 1, std::vector<u64>(k + 1, 0));
  for (u64 j = 0; j <= parts; ++j) table[j][0] = 1;
  for (u64 j = 1; j <= parts; ++j) {
    for (u64 n = 1; n <= k; ++n) {
      table[j][n] = table[j - 1][n] + (n >= j ? table[j][n - j] : 0);
    }
  }
  return table[parts][k];
}

// --- suites -----------------------------------------------------------------

CriterionResult suite_kbasis11(std::uint64_t seed) {
  CriterionResult res{1, "kbasis11", "explicit K-basis of S_k in Div[x,y]", true, "", {}};
  std::mt19937_64 rng(seed);
  u64 checked = 0;
  for (u32 p : {3u, 5u}) {
    const Context ctx(p, 1, 1);
    for (u64 k = 0; k <= 40; ++k) {
      const std::vector<Element> kb = kbasis_11(k, p);
      const FpMatrix sys = defining_system(ctx, k);
      const u64 null_dim = sys.ncols() - rref(sys).rank();
      bool ok = kb.size() == null_dim && full_span(ctx, k, kb).dim() == kb.size();
      if (k > 0) {
        for (const Element& e : kb) ok = ok && oracle_is_supersymmetric(e).supersymmetric;
        ok = ok && oracle_is_supersymmetric(random_combination(kb, ctx, rng)).supersymmetric;
      }
      ok = ok && expected_dim_11(k, p) == kb.size();
      if (!ok) {
        res.passed = false;
        res.notes.push_back("p=" + std::to_string(p) + " k=" + std::to_string(k) + ": list " +
                            std::to_string(kb.size()) + ", nullspace " + std::to_string(null_dim));
      }
      ++checked;
    }
  }
  res.detail = std::to_string(checked) + " (p, k) pairs, p in {3,5}, k <= 40";
  return res;
}

CriterionResult suite_equivalence(std::uint64_t seed) {
  CriterionResult res{2, "equivalence", "witness and equation formulations agree", true, "", {}};
  std::mt19937_64 rng(seed);
  const std::pair<u32, u32> shapes[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  u64 checked = 0;
  for (const auto& [m, n] : shapes) {
    const Context ctx(3, m, n);
    for (u64 k = 1; k <= 12; ++k) {
      const EchelonBasis witness = oracle_space(ctx, k);
      const SkBasis eq = basis_Sk(ctx, k);
      bool ok = witness.dim() == eq.dim();
      for (const FpVector& row : witness.rows()) ok = ok && eq.echelon.contains(row);
      for (const FpVector& row : eq.echelon.rows()) ok = ok && witness.contains(row);
      if (!eq.elements.empty()) {
        ok = ok && oracle_is_supersymmetric(random_combination(eq.elements, ctx, rng)).supersymmetric;
      }
      if (!ok) {
        res.passed = false;
        res.notes.push_back(to_string(ctx) + " k=" + std::to_string(k) + ": witness dim " +
                            std::to_string(witness.dim()) + ", equation dim " + std::to_string(eq.dim()));
      }
      ++checked;
    }
  }
  res.detail = std::to_string(checked) + " (context, degree) pairs at p=3, k <= 12";
  return res;
}

CriterionResult suite_gen11(std::uint64_t) {
  CriterionResult res{3, "gen11", "x y^(k-1) - k y^(k) and the p-power pairs generate S in Div[x,y]", true, "", {}};
  const GeneratorList gens = pair_generators(18, 3);
  const SpanReport rep = span_check(gens.ctx, gens.elements(), SpanTarget::SUPERSYM, 18);
  res.passed = rep.complete();
  describe_gaps(rep, res.notes, "gap");
  res.detail = std::to_string(gens.entries.size()) + " generators, p=3, bound 18, gaps: " +
               std::to_string(rep.gap_degrees().size());
  return res;
}

CriterionResult suite_sym_generators(std::uint64_t) {
  CriterionResult res{4, "sym-generators", "the set D generates the symmetric divided powers", true, "", {}};
  for (u32 p : {3u, 5u}) {
    for (u32 m : {2u, 3u}) {
      const GeneratorList gens = theorem_generators(TheoremCase::SYM, m, 12, p);
      const std::vector<EchelonBasis> spans = generated_spans(gens.ctx, gens.elements(), 12);
      for (u64 k = 0; k <= 12; ++k) {
        const u64 want = partitions_at_most(k, m);
        if (spans[k].dim() != want) {
          res.passed = false;
          res.notes.push_back("p=" + std::to_string(p) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                              ": achieved " + std::to_string(spans[k].dim()) + ", partitions " + std::to_string(want));
        }
      }
    }
  }
  res.detail = "p in {3,5}, m in {2,3}, bound 12";
  return res;
}

CriterionResult suite_m1_theorem(std::uint64_t) {
  CriterionResult res{5, "m1-theorem", "generators of S in Div[x1,x2,y1]", true, "", {}};
  const u64 bound = 9;
  for (PowerVariant v : {PowerVariant::SGeOne, PowerVariant::SGtOne}) {
    const GeneratorList gens = theorem_generators(TheoremCase::M1, 2, bound, 3, v);
    const SpanReport rep = span_check(gens.ctx, gens.elements(), SpanTarget::SUPERSYM, bound);
    const std::string label(to_string(v));
    res.notes.push_back(label + ": " + std::to_string(gens.entries.size()) + " generators, " +
                        std::to_string(gens.fallback_count()) + " from the echelon basis, gap degrees [" +
                        join(rep.gap_degrees()) + "]");
    describe_gaps(rep, res.notes, label);
    if (!rep.complete()) {
      bool closed = false;
      const std::vector<Monomial> added = close_gaps(gens.ctx, gens.elements(), SpanTarget::SUPERSYM, bound, closed);
      res.notes.push_back(label + ": adding S(M) for M in {" + monomials_string(added) + "} " +
                          (closed ? "closes every gap" : "does not close the gaps"));
    }
    if (v == PowerVariant::SGeOne) {
      res.passed = rep.complete();
      res.detail = "p=3, bound 9, s-ge-1 gap degrees [" + join(rep.gap_degrees()) + "]";
    }
  }
  return res;
}

bool one_two_predicted_marked(const Monomial& mono, u32 p) {
  const u32 i = mono.x()[0];
  const u32 j1 = mono.y()[0], j2 = mono.y()[1];
  if (j1 == 0 && j2 == 0 && i % p == 0) return true;
  const u32 r1 = i % p;
  const u32 js[2] = {j1, j2};
  return height(js, p) == HeightClass::One ? r1 >= 1 : r1 >= 2;
}

CriterionResult suite_one_two_theorem(std::uint64_t) {
  CriterionResult res{6, "one-two-theorem", "generators and marked monomials of S in Div[x1,y1,y2]", true, "", {}};
  const u32 p = 3;
  const u64 bound = 10;
  const GeneratorList gens = theorem_generators(TheoremCase::ONE_TWO, 1, bound, p);
  const SpanReport rep = span_check(gens.ctx, gens.elements(), SpanTarget::SUPERSYM, bound);
  res.passed = rep.complete();
  describe_gaps(rep, res.notes, "gap");
  for (const GeneratorEntry& e : gens.entries) {
    if (e.fallback) res.notes.push_back("fallback " + to_string(e.marked) + ": " + e.note);
  }
  u64 mismatches = 0;
  for (u64 k = 0; k <= bound; ++k) {
    const MarkedReport mr = marked_monomials(gens.ctx, k);
    for (const Monomial& mono : symmetrized_monomials_of_degree(gens.ctx, k)) {
      const bool want = k == 0 || one_two_predicted_marked(mono, p);
      if (want != mr.is_marked(mono)) {
        ++mismatches;
        res.notes.push_back("classification mismatch at " + to_string(mono) + ": computed " +
                            (mr.is_marked(mono) ? "marked" : "unmarked"));
      }
    }
  }
  res.passed = res.passed && mismatches == 0;
  res.detail = "p=3, bound 10, gap degrees [" + join(rep.gap_degrees()) + "], " + std::to_string(mismatches) +
               " marked-set mismatches, " + std::to_string(gens.fallback_count()) + " echelon fallbacks";
  return res;
}

bool two_two_predicted_unmarked(const Monomial& mono, u32 p) {
  const u32 i1 = mono.x()[0], i2 = mono.x()[1];
  const u32 j1 = mono.y()[0];
  const u32 r1 = i1 % p, r2 = i2 % p, k2 = i2 / p, s1 = j1 % p;
  const HeightClass h = height(mono.y(), p);
  if ((i1 % p == 0 || i2 % p == 0) && (i2 > 0 || j1 > 0)) return true;
  if ((r1 == 1 || r2 == 1) && h == HeightClass::Greater) return true;
  return r1 > 0 && r2 == 1 && k2 > 0 && s1 != p - 1 && h == HeightClass::One;
}

CriterionResult suite_two_two_theorem(std::uint64_t) {
  CriterionResult res{7, "two-two-theorem", "generators and unmarked classes of S in Div[x1,x2,y1,y2]", true, "", {}};
  const u32 p = 3;
  const u64 bound = 8;
  const GeneratorList gens = theorem_generators(TheoremCase::TWO_TWO, 2, bound, p);
  const SpanReport rep = span_check(gens.ctx, gens.elements(), SpanTarget::SUPERSYM, bound);
  describe_gaps(rep, res.notes, "gap");
  for (const GeneratorEntry& e : gens.entries) {
    if (e.fallback) res.notes.push_back("fallback " + to_string(e.marked) + ": " + e.note);
  }
  if (!rep.complete()) {
    bool closed = false;
    const std::vector<Monomial> added = close_gaps(gens.ctx, gens.elements(), SpanTarget::SUPERSYM, bound, closed);
    res.notes.push_back("adding S(M) for M in {" + monomials_string(added) + "} " +
                        (closed ? "closes every gap" : "does not close the gaps"));
  }
  u64 clashes = 0;
  for (u64 k = 1; k <= bound; ++k) {
    const MarkedReport mr = marked_monomials(gens.ctx, k);
    for (const Monomial& mono : mr.marked) {
      if (two_two_predicted_unmarked(mono, p)) {
        ++clashes;
        res.notes.push_back("predicted unmarked but marked: " + to_string(mono));
      }
    }
  }
  res.passed = rep.complete() && clashes == 0;
  res.detail = "p=3, bound 8, gap degrees [" + join(rep.gap_degrees()) + "], " + std::to_string(clashes) +
               " unmarked-class clashes, " + std::to_string(gens.fallback_count()) + " echelon fallbacks";
  return res;
}

CriterionResult suite_counterexample(std::uint64_t) {
  CriterionResult res{8, "counterexample-4-4", "a_{7,1,0} != a_{4,4,0} occurs in S_8 of Div[x1,x2,y1]", false, "", {}};
  const Context ctx(3, 2, 1);
  const SkBasis basis = basis_Sk(ctx, 8);
  const Monomial a({7, 1}, {0}), b({4, 4}, {0});
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const Element& f = basis.elements[i];
    const u32 ca = f.coefficient(a).value(), cb = f.coefficient(b).value();
    if (ca != cb) {
      res.passed = true;
      res.detail = "basis element " + std::to_string(i) + " (leading " + to_string(leading_term(f).monomial) +
                   ") has a_{7,1,0}=" + std::to_string(ca) + ", a_{4,4,0}=" + std::to_string(cb);
      return res;
    }
  }
  res.detail = "no basis element of S_8 separates the two coefficients";
  return res;
}

CriterionResult suite_lemma_blow(std::uint64_t) {
  CriterionResult res{9, "lemma-blow", "a_{i1,i2,j1} = a_{i1-p,i2+p,j1} chains in Div[x1,x2,y1]", true, "", {}};
  const Context ctx(3, 2, 1);
  u64 violations = 0;
  for (u64 k = 0; k <= 15; ++k) {
    for (const BlowViolation& v : lemma_blow_violations(ctx, k)) {
      ++violations;
      if (res.notes.size() < 20) {
        res.notes.push_back("k=" + std::to_string(k) + " basis " + std::to_string(v.basis_index) + ": " +
                            to_string(v.from) + " vs " + to_string(v.to));
      }
    }
  }
  res.passed = violations == 0;
  res.detail = "p=3, k <= 15, " + std::to_string(violations) + " violations";
  return res;
}

bool lemma_p_divides_unmarked(const Monomial& mono, u32 p) {
  if (mono.y()[0] == 0) return false;
  const auto xs = mono.x();
  return std::any_of(xs.begin(), xs.end(), [p](u32 i) { return i % p == 0; });
}

bool cor_tail_divisible_unmarked(const Monomial& mono, u32 p) {
  const auto xs = mono.x();
  for (std::size_t r = 1; r < xs.size(); ++r) {
    if (xs[r] > 0 && xs[r] % p == 0) return true;
  }
  return xs.size() >= 2 && xs[0] % p == 0 && xs[1] > 0;
}

CriterionResult suite_unmarked_lemmas(std::uint64_t) {
  CriterionResult res{10, "unmarked-lemmas", "structural unmarked classes are unmarked", true, "", {}};
  const u32 p = 3;
  u64 classified = 0, clashes = 0;
  for (const Context& ctx : {Context(p, 2, 1), Context(p, 2, 2)}) {
    for (u64 k = 1; k <= 9; ++k) {
      const MarkedReport mr = marked_monomials(ctx, k);
      for (const Monomial& mono : symmetrized_monomials_of_degree(ctx, k)) {
        if (!lemma_p_divides_unmarked(mono, p) && !cor_tail_divisible_unmarked(mono, p)) continue;
        ++classified;
        if (mr.is_marked(mono)) {
          ++clashes;
          res.notes.push_back(to_string(ctx) + ": " + to_string(mono) + " is marked");
        }
      }
    }
  }
  res.passed = clashes == 0;
  res.detail = std::to_string(classified) + " classified monomials in (2,1) and (2,2), p=3, k <= 9, " +
               std::to_string(clashes) + " marked";
  return res;
}

// Lex-greatest composition of k into n parts minimizing v_p(j_1!..j_n!),
// by direct enumeration.
std::vector<u32> brute_ell(u32 n, u32 k, u32 p) {
  std::vector<u32> best;
  u64 best_val = ~u64{0};
  std::vector<u32> cur(n, 0);
  std::function<void(u32, u32)> rec = [&](u32 idx, u32 left) {
    if (idx + 1 == n) {
      cur[idx] = left;
      u64 v = 0;
      for (u32 j : cur) v += factorial_valuation(j, p);
      if (v < best_val || (v == best_val && cur > best)) {
        best_val = v;
        best = cur;
      }
      return;
    }
    for (u32 j = left + 1; j-- > 0;) {
      cur[idx] = j;
      rec(idx + 1, left - j);
    }
  };
  rec(0, k);
  return best;
}

CriterionResult suite_e_leading(std::uint64_t) {
  CriterionResult res{11, "e-leading", "E_t is supersymmetric and leads with x1..xm l_{t-m}", true, "", {}};
  const u32 p = 3;
  u64 checked = 0;
  for (const Context& ctx : {Context(p, 1, 1), Context(p, 2, 2)}) {
    for (u32 t = 1; t <= 10; ++t) {
      const Element e = e_element(ctx, t);
      std::vector<u32> xs(ctx.m, 0), ys(ctx.n, 0);
      for (u32 i = 0; i < std::min(t, ctx.m); ++i) xs[i] = 1;
      if (t > ctx.m) ys = brute_ell(ctx.n, t - ctx.m, p);
      const Monomial want(xs, ys);
      const bool ok = !e.is_zero() && oracle_is_supersymmetric(e).supersymmetric && leading_term(e).monomial == want;
      if (!ok) {
        res.passed = false;
        res.notes.push_back(to_string(ctx) + " t=" + std::to_string(t) + ": leading " +
                            (e.is_zero() ? std::string("none") : to_string(leading_term(e).monomial)) + ", expected " +
                            to_string(want));
      }
      if (t > ctx.m) {
        const std::vector<u32> fact = ell_factorial_reading(ctx.n, t - ctx.m, p);
        const std::vector<u32> multi = ell_multinomial_reading(ctx.n, t - ctx.m, p);
        if (fact != ys) {
          res.passed = false;
          res.notes.push_back("ell_factorial_reading disagrees with enumeration at n=" + std::to_string(ctx.n) +
                              " k=" + std::to_string(t - ctx.m));
        }
        if (multi != fact) {
          res.notes.push_back("multinomial reading of l_" + std::to_string(t - ctx.m) + " (n=" + std::to_string(ctx.n) +
                              ") gives " + tuple_string(multi) + ", factorial reading " + tuple_string(fact));
        }
      }
      ++checked;
    }
  }
  res.detail = std::to_string(checked) + " (context, t) pairs, p=3, t <= 10";
  return res;
}

using SuiteFn = CriterionResult (*)(std::uint64_t);

struct SuiteEntry {
  std::string_view id;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"kbasis11", suite_kbasis11},
    {"equivalence", suite_equivalence},
    {"gen11", suite_gen11},
    {"sym-generators", suite_sym_generators},
    {"m1-theorem", suite_m1_theorem},
    {"one-two-theorem", suite_one_two_theorem},
    {"two-two-theorem", suite_two_two_theorem},
    {"counterexample-4-4", suite_counterexample},
    {"lemma-blow", suite_lemma_blow},
    {"unmarked-lemmas", suite_unmarked_lemmas},
    {"e-leading", suite_e_leading},
};

}  // namespace

const std::vector<std::string_view>& suite_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const SuiteEntry& s : kSuites) out.push_back(s.id);
    return out;
  }();
  return ids;
}

std::optional<CriterionResult> run_suite(std::string_view id, std::uint64_t seed) {
  for (const SuiteEntry& s : kSuites) {
    if (s.id == id) return s.fn(seed);
  }
  return std::nullopt;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const SuiteEntry& s : kSuites) out.push_back(s.fn(seed));
  return out;
}

}  // namespace superdiv
