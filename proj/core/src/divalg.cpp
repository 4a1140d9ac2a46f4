#include "superdiv/divalg.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace superdiv {

namespace {

bool sorted_descending(std::span<const u32> v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

std::vector<u32> to_vector(std::span<const u32> v) {
  return {v.begin(), v.end()};
}

// Appends every composition of `remaining` into `slots` parts, first part
// largest first, so the output is in decreasing lex order.
void compositions(u32 slots, u64 remaining, std::vector<u32>& prefix,
                  const std::function<void(const std::vector<u32>&)>& emit) {
  if (slots == 1) {
    prefix.push_back(static_cast<u32>(remaining));
    emit(prefix);
    prefix.pop_back();
    return;
  }
  for (u64 first = remaining + 1; first-- > 0;) {
    prefix.push_back(static_cast<u32>(first));
    compositions(slots - 1, remaining - first, prefix, emit);
    prefix.pop_back();
  }
}

// Non-increasing sequences of length `slots` with entries at most `cap`
// summing to `remaining`, in decreasing lex order.
void partitions(u32 slots, u64 remaining, u64 cap, std::vector<u32>& prefix,
                const std::function<void(const std::vector<u32>&)>& emit) {
  if (slots == 0) {
    if (remaining == 0) emit(prefix);
    return;
  }
  if (remaining > cap * slots) return;
  for (u64 first = std::min(cap, remaining) + 1; first-- > 0;) {
    if (first * slots < remaining) break;
    prefix.push_back(static_cast<u32>(first));
    partitions(slots - 1, remaining - first, first, prefix, emit);
    prefix.pop_back();
  }
}

void for_each_partition(u32 slots, u64 total,
                        const std::function<void(const std::vector<u32>&)>& emit) {
  std::vector<u32> prefix;
  if (slots == 0) {
    if (total == 0) emit(prefix);
    return;
  }
  partitions(slots, total, total, prefix, emit);
}

}  // namespace

Context::Context(u64 p_, u64 m_, u64 n_) {
  require_odd_prime(p_);
  if (m_ + n_ == 0) {
    throw std::invalid_argument("context needs at least one variable");
  }
  if (m_ > 64 || n_ > 64) {
    throw std::invalid_argument("context supports at most 64 variables per block");
  }
  p = static_cast<u32>(p_);
  m = static_cast<u32>(m_);
  n = static_cast<u32>(n_);
}

std::string to_string(const Context& ctx) {
  std::ostringstream os;
  os << "Div[p=" << ctx.p << ", m=" << ctx.m << ", n=" << ctx.n << "]";
  return os.str();
}

Monomial::Monomial(std::vector<u32> xexp, std::vector<u32> yexp)
    : m_(static_cast<u32>(xexp.size())), exps_(std::move(xexp)) {
  exps_.insert(exps_.end(), yexp.begin(), yexp.end());
}

Monomial Monomial::one(const Context& ctx) {
  return Monomial(std::vector<u32>(ctx.m, 0), std::vector<u32>(ctx.n, 0));
}

u32 Monomial::exponent(Variable v) const {
  const u32 limit = v.kind == VarKind::X ? m() : n();
  if (v.index >= limit) throw std::invalid_argument("variable out of range");
  return exps_[v.kind == VarKind::X ? v.index : m_ + v.index];
}

u32& Monomial::exponent_ref(Variable v) {
  const u32 limit = v.kind == VarKind::X ? m() : n();
  if (v.index >= limit) throw std::invalid_argument("variable out of range");
  return exps_[v.kind == VarKind::X ? v.index : m_ + v.index];
}

u64 Monomial::degree() const {
  u64 d = 0;
  for (u32 e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](u32 e) { return e == 0; });
}

std::string to_string(const Monomial& mono) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char name, std::span<const u32> block) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] == 0) continue;
      if (!first) os << '*';
      first = false;
      os << name << (i + 1);
      if (block[i] != 1) os << "^(" << block[i] << ')';
    }
  };
  emit('x', mono.x());
  emit('y', mono.y());
  if (first) return "1";
  return os.str();
}

void require_same_context(const Context& a, const Context& b) {
  if (!(a == b)) {
    throw std::invalid_argument("context mismatch: " + to_string(a) + " vs " +
                                to_string(b));
  }
}

Element::Element(Context ctx) : ctx_(ctx) {}

Element::Element(Context ctx, std::vector<Term> terms) : ctx_(ctx) {
  for (const Term& t : terms) {
    if (!t.monomial.fits(ctx_)) {
      throw std::invalid_argument("monomial " + to_string(t.monomial) +
                                  " does not fit " + to_string(ctx_));
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  terms_.reserve(terms.size());
  for (Term& t : terms) {
    const u32 c = t.coeff % ctx_.p;
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = add_mod(terms_.back().coeff, c, ctx_.p);
      if (terms_.back().coeff == 0) terms_.pop_back();
      continue;
    }
    if (c != 0) terms_.push_back({std::move(t.monomial), c});
  }
}

Element Element::monomial(const Context& ctx, Monomial mono, std::int64_t coeff) {
  std::vector<Term> terms;
  terms.push_back({std::move(mono), reduce_mod(coeff, ctx.p)});
  return Element(ctx, std::move(terms));
}

Element Element::one(const Context& ctx) {
  return monomial(ctx, Monomial::one(ctx), 1);
}

FpScalar Element::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mono,
      [](const Term& t, const Monomial& m) { return t.monomial > m; });
  if (it != terms_.end() && it->monomial == mono) return FpScalar(it->coeff, ctx_.p);
  return FpScalar::zero(ctx_.p);
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  const u64 d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

std::optional<u64> Element::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().monomial.degree();
}

std::vector<Element> Element::homogeneous_components() const {
  std::map<u64, std::vector<Term>> by_degree;
  for (const Term& t : terms_) by_degree[t.monomial.degree()].push_back(t);
  std::vector<Element> out;
  for (auto& [d, terms] : by_degree) out.emplace_back(ctx_, std::move(terms));
  return out;
}

Element Element::operator+(const Element& rhs) const {
  require_same_context(ctx_, rhs.ctx_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      merged.push_back(*b++);
    } else {
      const u32 c = add_mod(a->coeff, b->coeff, ctx_.p);
      if (c != 0) merged.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  Element out(ctx_);
  out.terms_ = std::move(merged);
  return out;
}

Element Element::operator-() const {
  Element out(*this);
  for (Term& t : out.terms_) t.coeff = neg_mod(t.coeff, ctx_.p);
  return out;
}

Element Element::operator-(const Element& rhs) const { return *this + (-rhs); }

Element Element::scaled(FpScalar c) const {
  if (c.modulus() != ctx_.p) throw std::invalid_argument("scalar modulus mismatch");
  if (c.is_zero()) return Element(ctx_);
  Element out(*this);
  for (Term& t : out.terms_) t.coeff = mul_mod(t.coeff, c.value(), ctx_.p);
  return out;
}

Element Element::scaled(std::int64_t c) const { return scaled(FpScalar(c, ctx_.p)); }

Element multiply(const Element& f, const Element& g) {
  require_same_context(f.context(), g.context());
  const u32 p = f.p();
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  const std::size_t nv = f.context().nvars();
  std::vector<u32> sum(nv);
  for (const Term& a : f.terms()) {
    const auto ae = a.monomial.exponents();
    for (const Term& b : g.terms()) {
      const auto be = b.monomial.exponents();
      u32 c = mul_mod(a.coeff, b.coeff, p);
      for (std::size_t v = 0; v < nv && c != 0; ++v) {
        if (ae[v] > std::numeric_limits<u32>::max() - be[v]) {
          throw std::overflow_error("exponent overflow in multiply");
        }
        sum[v] = ae[v] + be[v];
        if (ae[v] != 0 && be[v] != 0) c = mul_mod(c, binom_residue(sum[v], ae[v], p), p);
      }
      if (c == 0) continue;
      const u32 m = f.context().m;
      out.push_back({Monomial(std::vector<u32>(sum.begin(), sum.begin() + m),
                              std::vector<u32>(sum.begin() + m, sum.end())),
                     c});
    }
  }
  return Element(f.context(), std::move(out));
}

Element operator*(const Element& f, const Element& g) { return multiply(f, g); }

Element derive(const Element& f, Variable var) {
  const u32 limit = var.kind == VarKind::X ? f.context().m : f.context().n;
  if (var.index >= limit) throw std::invalid_argument("derive: invalid variable");
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    if (t.monomial.exponent(var) == 0) continue;
    Term d = t;
    d.monomial.exponent_ref(var) -= 1;
    out.push_back(std::move(d));
  }
  return Element(f.context(), std::move(out));
}

Element mul_x1_minus_y1(const Element& f) {
  const Context& ctx = f.context();
  if (ctx.m == 0 || ctx.n == 0) {
    throw std::invalid_argument("mul_x1_minus_y1 needs x1 and y1");
  }
  const u32 p = ctx.p;
  std::vector<Term> out;
  out.reserve(2 * f.size());
  for (const Term& t : f.terms()) {
    // x1 * x1^(a) = (a+1) x1^(a+1); likewise for y1 with a minus sign.
    Term up_x = t;
    const u32 ax = up_x.monomial.exponent_ref(Variable::x(0))++;
    up_x.coeff = mul_mod(t.coeff, static_cast<u32>((u64{ax} + 1) % p), p);
    out.push_back(std::move(up_x));
    Term up_y = t;
    const u32 ay = up_y.monomial.exponent_ref(Variable::y(0))++;
    up_y.coeff = neg_mod(mul_mod(t.coeff, static_cast<u32>((u64{ay} + 1) % p), p), p);
    out.push_back(std::move(up_y));
  }
  return Element(ctx, std::move(out));
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.m() != b.m() || a.n() != b.n()) {
    throw std::invalid_argument("lex_compare: context mismatch");
  }
  return a <=> b;
}

LeadingTerm leading_term(const Element& f) {
  if (f.is_zero()) throw std::domain_error("leading_term of zero element");
  const Term& t = f.terms().front();
  return {t.monomial, FpScalar(t.coeff, f.p())};
}

Monomial symmetrize_monomial(const Monomial& mono) {
  std::vector<u32> xs = to_vector(mono.x());
  std::vector<u32> ys = to_vector(mono.y());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  return Monomial(std::move(xs), std::move(ys));
}

bool is_symmetrized(const Monomial& mono) {
  return sorted_descending(mono.x()) && sorted_descending(mono.y());
}

Element orbit_sum(const Context& ctx, std::span<const u32> xs,
                  std::span<const u32> ys) {
  if (xs.size() != ctx.m || ys.size() != ctx.n) {
    throw std::invalid_argument("orbit_sum: tuple lengths do not match context");
  }
  if (!sorted_descending(xs) || !sorted_descending(ys)) {
    throw std::invalid_argument("orbit_sum: exponent tuples must be sorted descending");
  }
  // next_permutation on ascending order visits each distinct arrangement once.
  std::vector<u32> xperm(xs.rbegin(), xs.rend());
  std::vector<std::vector<u32>> xorbit;
  do {
    xorbit.push_back(xperm);
  } while (std::next_permutation(xperm.begin(), xperm.end()));
  std::vector<u32> yperm(ys.rbegin(), ys.rend());
  std::vector<std::vector<u32>> yorbit;
  do {
    yorbit.push_back(yperm);
  } while (std::next_permutation(yperm.begin(), yperm.end()));

  std::vector<Term> terms;
  terms.reserve(xorbit.size() * yorbit.size());
  for (const auto& xv : xorbit) {
    for (const auto& yv : yorbit) terms.push_back({Monomial(xv, yv), 1});
  }
  return Element(ctx, std::move(terms));
}

Element orbit_sum(const Context& ctx, const Monomial& symmetrized) {
  return orbit_sum(ctx, symmetrized.x(), symmetrized.y());
}

Element elementary_sigma(const Context& ctx, u32 i) {
  if (i > ctx.m) throw std::invalid_argument("elementary_sigma: i exceeds m");
  std::vector<u32> xs(ctx.m, 0);
  std::fill(xs.begin(), xs.begin() + i, 1u);
  const std::vector<u32> ys(ctx.n, 0);
  return orbit_sum(ctx, xs, ys);
}

Element complete_h(const Context& ctx, u32 j) {
  if (ctx.n == 0) {
    return j == 0 ? Element::one(ctx) : Element(ctx);
  }
  std::vector<Term> terms;
  std::vector<u32> prefix;
  compositions(ctx.n, j, prefix, [&](const std::vector<u32>& ys) {
    u32 c = 1;
    for (u32 e : ys) c = mul_mod(c, factorial_residue(e, ctx.p), ctx.p);
    terms.push_back({Monomial(std::vector<u32>(ctx.m, 0), ys), c});
  });
  return Element(ctx, std::move(terms));
}

u64 factorial_product_valuation(std::span<const u32> js, u32 p) {
  u64 v = 0;
  for (u32 j : js) v += factorial_valuation(j, p);
  return v;
}

u64 min_composition_valuation(u32 n, u32 k, u32 p) {
  if (n == 0) {
    if (k != 0) throw std::invalid_argument("no composition of k > 0 into 0 parts");
    return 0;
  }
  u64 best = std::numeric_limits<u64>::max();
  std::vector<u32> prefix;
  compositions(n, k, prefix, [&](const std::vector<u32>& js) {
    best = std::min(best, factorial_product_valuation(js, p));
  });
  return best;
}

Element e_element(const Context& ctx, u32 t) {
  using boost::multiprecision::cpp_int;
  if (t == 0) throw std::invalid_argument("e_element: t must be positive");
  if (t > ctx.m && ctx.n == 0) {
    throw std::invalid_argument("e_element: t > m requires y variables");
  }
  const u32 p = ctx.p;
  const u64 shift = t > ctx.m ? min_composition_valuation(ctx.n, t - ctx.m, p) : 0;
  cpp_int divisor = 1;
  for (u64 i = 0; i < shift; ++i) divisor *= p;

  std::vector<Term> terms;
  const u32 top = std::min(t, ctx.m);
  for (u32 i = 0; i <= top; ++i) {
    const u32 rest = t - i;
    if (ctx.n == 0 && rest > 0) continue;
    // sigma_i(x): every 0/1 x-vector with i ones (each distinct, coefficient 1).
    std::vector<u32> xs(ctx.m, 0);
    std::fill(xs.begin(), xs.begin() + i, 1u);
    std::vector<std::vector<u32>> xvecs;
    std::vector<u32> xperm(xs.rbegin(), xs.rend());
    do {
      xvecs.push_back(xperm);
    } while (std::next_permutation(xperm.begin(), xperm.end()));

    const bool negative = (t - i) % 2 == 1;
    auto add_y = [&](const std::vector<u32>& ys) {
      cpp_int c = 1;
      for (u32 e : ys) {
        for (u32 f = 2; f <= e; ++f) c *= f;
      }
      if (c % divisor != 0) {
        throw std::logic_error("e_element: coefficient not divisible by p^d");
      }
      c /= divisor;
      u32 r = static_cast<u32>(c % p);
      if (negative) r = neg_mod(r, p);
      if (r == 0) return;
      for (const auto& xv : xvecs) terms.push_back({Monomial(xv, ys), r});
    };
    if (ctx.n == 0) {
      add_y({});
    } else {
      std::vector<u32> prefix;
      compositions(ctx.n, rest, prefix, add_y);
    }
  }
  return Element(ctx, std::move(terms));
}

std::vector<Monomial> monomials_of_degree(const Context& ctx, u64 k) {
  std::vector<Monomial> out;
  std::vector<u32> prefix;
  compositions(ctx.nvars(), k, prefix, [&](const std::vector<u32>& e) {
    out.emplace_back(std::vector<u32>(e.begin(), e.begin() + ctx.m),
                     std::vector<u32>(e.begin() + ctx.m, e.end()));
  });
  return out;
}

std::vector<Monomial> symmetrized_monomials_of_degree(const Context& ctx, u64 k) {
  std::vector<Monomial> out;
  for (u64 dx = k + 1; dx-- > 0;) {
    std::vector<std::vector<u32>> xparts;
    for_each_partition(ctx.m, dx, [&](const std::vector<u32>& v) { xparts.push_back(v); });
    std::vector<std::vector<u32>> yparts;
    for_each_partition(ctx.n, k - dx, [&](const std::vector<u32>& v) { yparts.push_back(v); });
    for (const auto& xs : xparts) {
      for (const auto& ys : yparts) out.emplace_back(xs, ys);
    }
  }
  // Grouping by x-degree is not lex order when m > 1; sort explicitly.
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Element swap_variables(const Element& f, VarKind kind, u32 a, u32 b) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Term s = t;
    std::swap(s.monomial.exponent_ref({kind, a}), s.monomial.exponent_ref({kind, b}));
    out.push_back(std::move(s));
  }
  return Element(f.context(), std::move(out));
}

Element slice_element(const Element& f, std::span<const FrozenExponent> fixed) {
  const Context& ctx = f.context();
  std::vector<bool> frozen_x(ctx.m, false);
  std::vector<bool> frozen_y(ctx.n, false);
  for (const FrozenExponent& fe : fixed) {
    auto& flags = fe.var.kind == VarKind::X ? frozen_x : frozen_y;
    if (fe.var.index >= flags.size()) {
      throw std::invalid_argument("slice_element: variable out of range");
    }
    if (flags[fe.var.index]) {
      throw std::invalid_argument("slice_element: variable frozen twice");
    }
    flags[fe.var.index] = true;
  }
  const auto count = [](const std::vector<bool>& v) {
    return static_cast<u32>(std::count(v.begin(), v.end(), true));
  };
  const Context reduced(ctx.p, ctx.m - count(frozen_x), ctx.n - count(frozen_y));

  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    const bool matches = std::all_of(fixed.begin(), fixed.end(), [&](const FrozenExponent& fe) {
      return t.monomial.exponent(fe.var) == fe.exponent;
    });
    if (!matches) continue;
    std::vector<u32> xs;
    std::vector<u32> ys;
    for (u32 i = 0; i < ctx.m; ++i) {
      if (!frozen_x[i]) xs.push_back(t.monomial.x()[i]);
    }
    for (u32 j = 0; j < ctx.n; ++j) {
      if (!frozen_y[j]) ys.push_back(t.monomial.y()[j]);
    }
    out.push_back({Monomial(std::move(xs), std::move(ys)), t.coeff});
  }
  return Element(reduced, std::move(out));
}

}  // namespace superdiv
