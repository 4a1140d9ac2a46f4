#include "superdiv/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>

#include "superdiv/supersym.hpp"

namespace superdiv {

namespace {

struct FamilyShape {
  FamilyId id;
  std::string_view name;
  // Parameter names in canonical order with their required length
  // (0 = any positive length).
  std::vector<std::pair<std::string_view, std::size_t>> keys;
};

const std::vector<FamilyShape>& shapes() {
  static const std::vector<FamilyShape> table = {
      {FamilyId::EVEN_D, "EVEN_D", {{"a", 0}}},
      {FamilyId::PAIR_SIGMA, "PAIR_SIGMA", {{"s", 1}}},
      {FamilyId::PAIR_C, "PAIR_C", {{"k", 1}}},
      {FamilyId::KBASIS11, "KBASIS11", {{"k", 1}, {"idx", 1}}},
      {FamilyId::LEMMA_P, "LEMMA_P", {{"k", 1}}},
      {FamilyId::JEDEN, "JEDEN", {{"i", 0}, {"j", 1}}},
      {FamilyId::E, "E", {{"t", 1}}},
      {FamilyId::L62, "L62", {{"j", 0}}},
      {FamilyId::L63, "L63", {{"j", 2}}},
      {FamilyId::SEST, "SEST", {{"i", 2}, {"j", 2}}},
      {FamilyId::SEDEM, "SEDEM", {{"i", 2}, {"j", 2}}},
  };
  return table;
}

const FamilyShape& shape_of(FamilyId id) {
  for (const FamilyShape& s : shapes()) {
    if (s.id == id) return s;
  }
  throw FamilyError("unknown family id");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

u32 parse_u32(std::string_view s, std::string_view where) {
  u32 value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw FamilyError("bad integer '" + std::string(s) + "' in " + std::string(where));
  }
  return value;
}

u32 minus(u32 a, u32 b, const char* what) {
  if (b > a) throw FamilyError(std::string(what) + ": exponent would become negative");
  return a - b;
}

bool is_sorted_desc(std::span<const u32> v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

u64 power(u64 base, u64 e) {
  u64 out = 1;
  while (e-- > 0) out *= base;
  return out;
}

std::optional<u32> log_p(u64 q, u32 p) {
  u32 s = 0;
  while (q > 1) {
    if (q % p != 0) return std::nullopt;
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return s;
}

// Collects c * f_{xs} g_{ys} terms keyed by the symmetrized monomial. In
// assign mode a repeated key must carry the same coefficient (the displayed
// formulas describe one value per orbit coordinate); in additive mode the
// terms are simply summed as printed.
class OrbitTerms {
 public:
  OrbitTerms(const Context& ctx, bool additive) : ctx_(ctx), additive_(additive) {}

  void put(std::vector<u32> xs, std::vector<u32> ys, FpScalar c) {
    Monomial key = symmetrize_monomial(Monomial(std::move(xs), std::move(ys)));
    if (!key.fits(ctx_)) throw FamilyError("orbit term does not fit the context");
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (inserted) return;
    if (additive_) {
      it->second += c;
    } else if (!(it->second == c)) {
      throw FamilyCheckError("conflicting coefficients at " + to_string(key));
    }
  }

  Element build() const {
    Element out(ctx_);
    for (const auto& [mono, c] : coeffs_) {
      if (!c.is_zero()) out += orbit_sum(ctx_, mono).scaled(c);
    }
    return out;
  }

 private:
  Context ctx_;
  bool additive_;
  std::map<Monomial, FpScalar> coeffs_;
};

void require_shape(const Context& ctx, u32 m, u32 n, std::string_view family) {
  if (ctx.m != m || ctx.n != n) {
    throw FamilyError(std::string(family) + " lives in m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + ", got " + to_string(ctx));
  }
}

std::vector<u32> ones(u32 count, u32 length) {
  std::vector<u32> v(length, 0);
  std::fill_n(v.begin(), count, 1u);
  return v;
}

Element build_even_d(const FamilySpec& spec, const Context& ctx) {
  const auto& a = spec.param("a");
  require_shape(ctx, static_cast<u32>(a.size()), 0, "EVEN_D");
  if (!is_sorted_desc(a)) throw FamilyError("EVEN_D: a must be nonincreasing");
  if (!log_p(a[0], ctx.p)) throw FamilyError("EVEN_D: a_1 must be a power of p");
  return orbit_sum(ctx, std::span<const u32>(a), std::span<const u32>());
}

Element build_pair_sigma(const FamilySpec& spec, const Context& ctx) {
  require_shape(ctx, 1, 1, "PAIR_SIGMA");
  const u32 s = spec.scalar("s");
  if (s == 0) throw FamilyError("PAIR_SIGMA: s must be positive");
  const u64 q = power(ctx.p, s);
  std::vector<Term> terms;
  for (u64 r = 0; r <= q / ctx.p; ++r) {
    terms.push_back({Monomial({static_cast<u32>(ctx.p * r)}, {static_cast<u32>(q - ctx.p * r)}),
                     r % 2 == 0 ? 1u : ctx.p - 1});
  }
  return Element(ctx, std::move(terms));
}

Element build_pair_c(const FamilySpec& spec, const Context& ctx) {
  require_shape(ctx, 1, 1, "PAIR_C");
  const u32 k = spec.scalar("k");
  if (k == 0) throw FamilyError("PAIR_C: k must be positive");
  return Element::monomial(ctx, Monomial({1}, {k - 1})) -
         Element::monomial(ctx, Monomial({0}, {k}), k);
}

Element build_kbasis11(const FamilySpec& spec, const Context& ctx) {
  require_shape(ctx, 1, 1, "KBASIS11");
  const auto basis = kbasis_11(spec.scalar("k"), ctx.p);
  const u32 idx = spec.scalar("idx");
  if (idx >= basis.size()) {
    throw FamilyError("KBASIS11: idx out of range (basis has " + std::to_string(basis.size()) +
                      " elements)");
  }
  return basis[idx];
}

Element build_lemma_p(const FamilySpec& spec, const Context& ctx) {
  if (ctx.m == 0) throw FamilyError("LEMMA_P needs at least one x variable");
  const u32 k = spec.scalar("k");
  if (k == 0) throw FamilyError("LEMMA_P: k must be positive");
  std::vector<Term> terms;
  for (const Monomial& mono : monomials_of_degree(ctx, k)) {
    std::vector<u32> xs(mono.x().begin(), mono.x().end());
    std::vector<u32> ys(mono.y().begin(), mono.y().end());
    u64 vsum = 0;
    for (u32& e : xs) e *= ctx.p;
    for (u32& e : ys) {
      vsum += e;
      e *= ctx.p;
    }
    terms.push_back({Monomial(std::move(xs), std::move(ys)), vsum % 2 == 0 ? 1u : ctx.p - 1});
  }
  return Element(ctx, std::move(terms));
}

Element build_jeden(const FamilySpec& spec, const Context& ctx) {
  const auto& i = spec.param("i");
  const u32 p = ctx.p;
  require_shape(ctx, static_cast<u32>(i.size()), 1, "JEDEN");
  if (!is_sorted_desc(i)) throw FamilyError("JEDEN: i must be nonincreasing");
  for (u32 iu : i) {
    if (iu > 0 && iu % p == 0) {
      throw FamilyError("JEDEN: positive index " + std::to_string(iu) + " divisible by p");
    }
  }
  const u32 j1 = spec.param("j")[0];
  const u32 s1 = j1 % p;
  std::vector<std::size_t> candidates;
  for (std::size_t u = 0; u < i.size(); ++u) {
    if (i[u] % p != 0) candidates.push_back(u);
  }
  if (candidates.size() > 20) throw FamilyError("JEDEN: too many variables");
  OrbitTerms terms(ctx, false);
  for (u64 mask = 0; mask < (u64{1} << candidates.size()); ++mask) {
    std::vector<u32> xs = i;
    std::vector<u64> parts;
    u64 rsum = 0;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if ((mask >> b & 1) == 0) continue;
      const u32 r = i[candidates[b]] % p;
      xs[candidates[b]] -= r;
      parts.push_back(r);
      rsum += r;
    }
    if (rsum + s1 >= p) continue;
    parts.push_back(s1);
    const FpScalar c = multinomial_mod_p(rsum + s1, parts, p);
    const bool odd = (parts.size() - 1) % 2 == 1;
    terms.put(std::move(xs), {static_cast<u32>(j1 + rsum)}, odd ? -c : c);
  }
  return terms.build();
}

Element build_e(const FamilySpec& spec, const Context& ctx) {
  const u32 t = spec.scalar("t");
  if (t == 0) throw FamilyError("E: t must be positive");
  if (t > ctx.m && ctx.n == 0) throw FamilyError("E: t > m needs a y variable");
  return e_element(ctx, t);
}

Element build_l62(const FamilySpec& spec, const Context& ctx) {
  const auto& j = spec.param("j");
  const u32 p = ctx.p;
  const u32 n = static_cast<u32>(j.size());
  require_shape(ctx, 1, n, "L62");
  if (height(j, p) != HeightClass::One) throw FamilyError("L62: j must have height one");
  if (j[0] <= p - 1) {
    u32 total = 1;
    for (u32 v : j) total += v;
    return e_element(ctx, total);
  }
  const u32 jn = j[n - 1];
  const u32 s = jn % p;
  OrbitTerms terms(ctx, false);
  terms.put({1}, j, FpScalar::one(p));
  if (s == p - 1) return terms.build();
  std::vector<u32> rest(j.begin(), j.end() - 1);
  {
    std::vector<u32> ys = rest;
    ys.insert(ys.begin(), jn + 1);
    terms.put({0}, ys, FpScalar(-static_cast<std::int64_t>(s + 1), p));
  }
  for (u32 t = 0; t + 1 < n; ++t) {
    std::vector<u32> others = rest;
    others.erase(others.begin() + t);
    for (u32 jj = 1; jj + s <= p - 1; ++jj) {
      std::vector<u32> ys = others;
      ys.push_back(jn + jj);
      ys.push_back(minus(j[t], jj, "L62"));
      const FpScalar c = binom_mod_p(s + jj, jj, p);
      terms.put({1}, ys, jj % 2 == 1 ? -c : c);
    }
    for (u32 jj = 1; jj + s + 2 <= p; ++jj) {
      std::vector<u32> ys = others;
      ys.push_back(minus(j[t], jj, "L62"));
      ys.push_back(jn + jj + 1);
      const FpScalar c = FpScalar(s + jj + 1, p) * binom_mod_p(s + jj, jj, p);
      terms.put({0}, ys, jj % 2 == 1 ? c : -c);
    }
  }
  return terms.build();
}

Element build_l63(const FamilySpec& spec, const Context& ctx) {
  require_shape(ctx, 1, 2, "L63");
  const auto& j = spec.param("j");
  if (!is_sorted_desc(j)) throw FamilyError("L63: j must be nonincreasing");
  const u32 p = ctx.p;
  const bool literal = spec.variant == FamilyVariant::Literal;
  const FpScalar half = FpScalar(2, p).inv();
  const u32 j1 = j[0];
  const u32 j2 = j[1];
  const FpScalar a1(j1 % p + 1, p);
  const FpScalar a2(j2 % p + 1, p);
  OrbitTerms terms(ctx, literal);
  terms.put({2}, {j1, j2}, FpScalar::one(p));
  if (j1 > j2) {
    terms.put({1}, {j1 + 1, j2}, -(a1 * half));
    terms.put({literal ? 0u : 1u}, {j1, j2 + 1}, -(a2 * half));
    terms.put({0}, {j1 + 1, j2 + 1}, a1 * a2 * half);
  } else {
    terms.put({0}, {j1 + 2, j1}, -binom_mod_p(j1 % p + 2, 2, p));
  }
  return terms.build();
}

void require_sest_sedem_shape(const FamilySpec& spec, const Context& ctx, std::string_view name) {
  require_shape(ctx, 2, 2, name);
  if (!is_sorted_desc(spec.param("i")) || !is_sorted_desc(spec.param("j"))) {
    throw FamilyError(std::string(name) + ": i and j must be nonincreasing");
  }
}

Element build_sest(const FamilySpec& spec, const Context& ctx) {
  require_sest_sedem_shape(spec, ctx, "SEST");
  const u32 p = ctx.p;
  const auto& i = spec.param("i");
  const auto& j = spec.param("j");
  const u32 i1 = i[0], i2 = i[1], j1 = j[0], j2 = j[1];
  if (i1 % p != 1 || i2 % p != 1 || i2 / p == 0 || j1 % p != p - 1) {
    throw FamilyError("SEST needs r_1 = r_2 = 1, k_2 > 0 and s_1 = p-1");
  }
  const u32 s2 = j2 % p;
  OrbitTerms terms(ctx, false);
  terms.put({i1, i2}, {j1, j2}, FpScalar::one(p));
  if (s2 == p - 1) return terms.build();
  auto put_lowered = [&](std::vector<u32> ys, FpScalar c) {
    terms.put({i1 - 1, i2}, ys, c);
    terms.put({i1, i2 - 1}, std::move(ys), c);
  };
  put_lowered({j1, j2 + 1}, FpScalar(-static_cast<std::int64_t>(s2 + 1), p));
  for (u32 jj = 1; jj + s2 <= p - 1; ++jj) {
    const FpScalar c = binom_mod_p(s2 + jj, jj, p);
    terms.put({i1, i2}, {j2 + jj, j1 - jj}, jj % 2 == 1 ? -c : c);
  }
  for (u32 jj = 1; jj + s2 + 2 <= p; ++jj) {
    const FpScalar c = FpScalar(s2 + jj + 1, p) * binom_mod_p(s2 + jj, jj, p);
    put_lowered({j1 - jj, j2 + jj + 1}, jj % 2 == 1 ? c : -c);
  }
  // Both x exponents lowered: forced by the equations once s_2 <= p-3.
  if (spec.variant == FamilyVariant::Corrected && s2 + 3 <= p) {
    const FpScalar lead = FpScalar(s2 + 1, p) * FpScalar(s2 + 2, p);
    for (u32 jj = 0; jj + s2 + 3 <= p; ++jj) {
      terms.put({i1 - 1, i2 - 1}, {j1 - jj, j2 + jj + 2}, lead * binom_mod_p(p - 3 - s2, jj, p));
    }
  }
  return terms.build();
}

Element build_sedem(const FamilySpec& spec, const Context& ctx) {
  require_sest_sedem_shape(spec, ctx, "SEDEM");
  const u32 p = ctx.p;
  const auto& i = spec.param("i");
  const auto& j = spec.param("j");
  const u32 i1 = i[0], i2 = i[1], j1 = j[0], j2 = j[1];
  if (i1 % p != 2 || i2 % p != 2) throw FamilyError("SEDEM needs r_1 = r_2 = 2");
  const bool literal = spec.variant == FamilyVariant::Literal;
  const FpScalar half = FpScalar(2, p).inv();
  const FpScalar a1(j1 % p + 1, p);
  const FpScalar a2(j2 % p + 1, p);
  OrbitTerms terms(ctx, literal);
  terms.put({i1, i2}, {j1, j2}, FpScalar::one(p));
  if (j1 > j2) {
    const FpScalar c1 = -(a1 * half);
    const FpScalar c2 = -(a2 * half);
    terms.put({i1 - 1, i2}, {j1 + 1, j2}, c1);
    terms.put({i1, i2 - 1}, {j1 + 1, j2}, c1);
    // The printed display pairs the second correction with g_{j_1+1, j_2}
    // on its first summand.
    terms.put({i1 - 1, i2}, literal ? std::vector<u32>{j1 + 1, j2} : std::vector<u32>{j1, j2 + 1}, c2);
    terms.put({i1, i2 - 1}, {j1, j2 + 1}, c2);
    terms.put({i1 - 1, i2 - 1}, {j1 + 1, j2 + 1}, a1 * a2 * half);
  } else {
    terms.put({i1 - 1, i2 - 1}, {j1 + 2, j1}, -binom_mod_p(j1 % p + 2, 2, p));
  }
  return terms.build();
}

}  // namespace

std::string_view to_string(FamilyId id) { return shape_of(id).name; }

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const FamilyShape& s : shapes()) {
    if (s.name == name) return s.id;
  }
  return std::nullopt;
}

FamilySpec FamilySpec::make(FamilyId id,
                            std::vector<std::pair<std::string, std::vector<u32>>> params,
                            FamilyVariant variant) {
  const FamilyShape& shape = shape_of(id);
  FamilySpec spec{id, {}, variant};
  for (const auto& [key, len] : shape.keys) {
    auto it = std::find_if(params.begin(), params.end(),
                           [&](const auto& kv) { return kv.first == key; });
    if (it == params.end()) {
      throw FamilyError(std::string(shape.name) + ": missing parameter '" + std::string(key) + "'");
    }
    if (it->second.empty() || (len != 0 && it->second.size() != len)) {
      throw FamilyError(std::string(shape.name) + ": parameter '" + std::string(key) +
                        "' has the wrong length");
    }
    spec.params.emplace_back(std::string(key), std::move(it->second));
    params.erase(it);
  }
  if (!params.empty()) {
    throw FamilyError(std::string(shape.name) + ": unknown parameter '" + params.front().first + "'");
  }
  return spec;
}

const std::vector<u32>& FamilySpec::param(std::string_view name) const {
  for (const auto& [key, values] : params) {
    if (key == name) return values;
  }
  throw FamilyError("no parameter '" + std::string(name) + "'");
}

u32 FamilySpec::scalar(std::string_view name) const { return param(name).at(0); }

FamilySpec parse_family_spec(std::string_view text) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  const std::string_view name = trim(text.substr(0, colon));
  const auto id = family_from_name(name);
  if (!id) throw FamilyError("unknown family '" + std::string(name) + "'");
  if (colon == std::string_view::npos) throw FamilyError("missing parameters in '" + std::string(text) + "'");
  std::vector<std::pair<std::string, std::vector<u32>>> params;
  FamilyVariant variant = FamilyVariant::Corrected;
  for (std::string_view item : split(text.substr(colon + 1), ';')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw FamilyError("expected key=value, got '" + std::string(item) + "'");
    const std::string key(trim(item.substr(0, eq)));
    const std::string_view value = trim(item.substr(eq + 1));
    if (key == "variant") {
      if (value == "literal") {
        variant = FamilyVariant::Literal;
      } else if (value == "corrected") {
        variant = FamilyVariant::Corrected;
      } else {
        throw FamilyError("unknown variant '" + std::string(value) + "'");
      }
      continue;
    }
    if (std::any_of(params.begin(), params.end(), [&](const auto& kv) { return kv.first == key; })) {
      throw FamilyError("duplicate parameter '" + key + "'");
    }
    std::vector<u32> values;
    for (std::string_view v : split(value, ',')) values.push_back(parse_u32(v, key));
    params.emplace_back(key, std::move(values));
  }
  return FamilySpec::make(*id, std::move(params), variant);
}

std::string to_string(const FamilySpec& spec) {
  std::string out(to_string(spec.id));
  out += ':';
  for (std::size_t k = 0; k < spec.params.size(); ++k) {
    if (k > 0) out += ';';
    out += spec.params[k].first;
    out += '=';
    for (std::size_t v = 0; v < spec.params[k].second.size(); ++v) {
      if (v > 0) out += ',';
      out += std::to_string(spec.params[k].second[v]);
    }
  }
  if (spec.variant == FamilyVariant::Literal) out += ";variant=literal";
  return out;
}

Context default_context(const FamilySpec& spec, u32 p) {
  switch (spec.id) {
    case FamilyId::EVEN_D:
      return Context(p, spec.param("a").size(), 0);
    case FamilyId::JEDEN:
      return Context(p, spec.param("i").size(), 1);
    case FamilyId::L62:
      return Context(p, 1, spec.param("j").size());
    case FamilyId::L63:
      return Context(p, 1, 2);
    case FamilyId::SEST:
    case FamilyId::SEDEM:
      return Context(p, 2, 2);
    default:
      return Context(p, 1, 1);
  }
}

Monomial declared_leading_monomial(const FamilySpec& spec, const Context& ctx) {
  const u32 p = ctx.p;
  switch (spec.id) {
    case FamilyId::EVEN_D:
      return Monomial(spec.param("a"), std::vector<u32>(ctx.n, 0));
    case FamilyId::PAIR_SIGMA:
      return Monomial({static_cast<u32>(power(p, spec.scalar("s")))}, {0});
    case FamilyId::PAIR_C: {
      const u32 k = spec.scalar("k");
      return Monomial({1}, {k == 0 ? 0 : k - 1});
    }
    case FamilyId::KBASIS11:
      return leading_term(family_element_unchecked(spec, ctx)).monomial;
    case FamilyId::LEMMA_P: {
      std::vector<u32> xs(ctx.m, 0);
      if (!xs.empty()) xs[0] = p * spec.scalar("k");
      return Monomial(std::move(xs), std::vector<u32>(ctx.n, 0));
    }
    case FamilyId::JEDEN:
      return Monomial(spec.param("i"), spec.param("j"));
    case FamilyId::E: {
      const u32 t = spec.scalar("t");
      if (t <= ctx.m) return Monomial(ones(t, ctx.m), std::vector<u32>(ctx.n, 0));
      return Monomial(ones(ctx.m, ctx.m), ell_factorial_reading(ctx.n, t - ctx.m, p));
    }
    case FamilyId::L62:
      return Monomial({1}, spec.param("j"));
    case FamilyId::L63:
      return Monomial({2}, spec.param("j"));
    case FamilyId::SEST:
    case FamilyId::SEDEM:
      return Monomial(spec.param("i"), spec.param("j"));
  }
  throw FamilyError("unknown family id");
}

Element family_element_unchecked(const FamilySpec& spec, const Context& ctx) {
  switch (spec.id) {
    case FamilyId::EVEN_D: return build_even_d(spec, ctx);
    case FamilyId::PAIR_SIGMA: return build_pair_sigma(spec, ctx);
    case FamilyId::PAIR_C: return build_pair_c(spec, ctx);
    case FamilyId::KBASIS11: return build_kbasis11(spec, ctx);
    case FamilyId::LEMMA_P: return build_lemma_p(spec, ctx);
    case FamilyId::JEDEN: return build_jeden(spec, ctx);
    case FamilyId::E: return build_e(spec, ctx);
    case FamilyId::L62: return build_l62(spec, ctx);
    case FamilyId::L63: return build_l63(spec, ctx);
    case FamilyId::SEST: return build_sest(spec, ctx);
    case FamilyId::SEDEM: return build_sedem(spec, ctx);
  }
  throw FamilyError("unknown family id");
}

Element family_element(const FamilySpec& spec, const Context& ctx) {
  Element f = family_element_unchecked(spec, ctx);
  const std::string label = to_string(spec) + " in " + to_string(ctx);
  if (f.is_zero()) throw FamilyCheckError(label + " is zero");
  if (!f.is_homogeneous()) throw FamilyCheckError(label + " is not homogeneous");
  if (spec.id == FamilyId::EVEN_D) {
    if (!is_symmetric(f)) throw FamilyCheckError(label + " is not symmetric");
  } else if (!oracle_is_supersymmetric(f).supersymmetric) {
    throw FamilyCheckError(label + " is not supersymmetric");
  }
  const Monomial declared = declared_leading_monomial(spec, ctx);
  const Monomial lead = leading_term(f).monomial;
  if (!(lead == declared)) {
    throw FamilyCheckError(label + " leads with " + to_string(lead) + ", expected " +
                           to_string(declared));
  }
  return f;
}

std::string_view to_string(HeightClass h) { return h == HeightClass::One ? "1" : ">1"; }

HeightClass height(std::span<const u32> js, u32 p) {
  if (!is_sorted_desc(js)) throw std::invalid_argument("height: tuple must be nonincreasing");
  const std::size_t n = js.size();
  if (n == 0 || js[0] <= p - 1) {
    for (std::size_t t = 0; t < n; ++t) {
      if (js[t] % p != p - 1) {
        return t + 1 >= n || js[t + 1] == 0 ? HeightClass::One : HeightClass::Greater;
      }
    }
    return HeightClass::One;
  }
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (js[t] % p != p - 1) return HeightClass::Greater;
  }
  return HeightClass::One;
}

HeightClass height_n2_shortcut(u32 j1, u32 j2, u32 p) {
  if (j1 < j2) throw std::invalid_argument("height: tuple must be nonincreasing");
  const bool first = 0 < j1 && j1 < p - 1 && j2 == 0;
  return first || j1 % p == p - 1 ? HeightClass::One : HeightClass::Greater;
}

namespace {

// Compositions of k into n parts in decreasing lex order; stops early when
// visit returns true.
bool visit_compositions(u32 n, u32 k, const std::function<bool(const std::vector<u32>&)>& visit) {
  std::vector<u32> prefix;
  std::function<bool(u32, u32)> rec = [&](u32 left, u32 remaining) -> bool {
    if (left == 1) {
      prefix.push_back(remaining);
      const bool stop = visit(prefix);
      prefix.pop_back();
      return stop;
    }
    for (u32 first = remaining + 1; first-- > 0;) {
      prefix.push_back(first);
      const bool stop = rec(left - 1, remaining - first);
      prefix.pop_back();
      if (stop) return true;
    }
    return false;
  };
  if (n == 0) return false;
  return rec(n, k);
}

}  // namespace

std::vector<u32> ell_factorial_reading(u32 n, u32 k, u32 p) {
  if (n == 0) throw std::invalid_argument("ell needs n >= 1");
  const u64 d = min_composition_valuation(n, k, p);
  std::vector<u32> out;
  visit_compositions(n, k, [&](const std::vector<u32>& j) {
    if (factorial_product_valuation(j, p) != d) return false;
    out = j;
    return true;
  });
  return out;
}

std::vector<u32> ell_multinomial_reading(u32 n, u32 k, u32 p) {
  if (n == 0) throw std::invalid_argument("ell needs n >= 1");
  const u64 d = min_composition_valuation(n, k, p);
  const u64 vk = factorial_valuation(k, p);
  std::vector<u32> out;
  visit_compositions(n, k, [&](const std::vector<u32>& j) {
    if (vk - factorial_product_valuation(j, p) > d) return false;
    out = j;
    return true;
  });
  return out;
}

std::string_view to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::SYM: return "SYM";
    case TheoremCase::M1: return "M1";
    case TheoremCase::ONE_TWO: return "ONE_TWO";
    case TheoremCase::TWO_TWO: return "TWO_TWO";
  }
  return "?";
}

std::optional<TheoremCase> theorem_case_from_name(std::string_view name) {
  for (TheoremCase c : {TheoremCase::SYM, TheoremCase::M1, TheoremCase::ONE_TWO, TheoremCase::TWO_TWO}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(PowerVariant v) {
  return v == PowerVariant::SGeOne ? "s-ge-1" : "s-gt-1";
}

std::optional<PowerVariant> power_variant_from_name(std::string_view name) {
  if (name == "s-ge-1") return PowerVariant::SGeOne;
  if (name == "s-gt-1") return PowerVariant::SGtOne;
  return std::nullopt;
}

std::vector<Element> GeneratorList::elements() const {
  std::vector<Element> out;
  for (const GeneratorEntry& e : entries) {
    if (e.element) out.push_back(*e.element);
  }
  return out;
}

std::size_t GeneratorList::fallback_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const GeneratorEntry& e) { return e.fallback; }));
}

Context theorem_context(TheoremCase c, u32 m, u32 p) {
  switch (c) {
    case TheoremCase::SYM: return Context(p, m, 0);
    case TheoremCase::M1: return Context(p, m, 1);
    case TheoremCase::ONE_TWO: return Context(p, 1, 2);
    case TheoremCase::TWO_TWO: return Context(p, 2, 2);
  }
  throw std::invalid_argument("unknown theorem case");
}

namespace {

struct Candidate {
  Monomial marked;
  std::optional<FamilySpec> family;
};

// Nonincreasing tuples of the given length with entries in [lo, cap] and
// sum <= max_total.
void for_each_bounded_tuple(u32 length, u32 lo, u32 cap, u64 max_total,
                            const std::function<void(const std::vector<u32>&)>& emit) {
  std::vector<u32> prefix;
  std::function<void(u32, u32, u64)> rec = [&](u32 left, u32 top, u64 budget) {
    if (left == 0) {
      emit(prefix);
      return;
    }
    for (u32 v = lo; v <= top && v <= budget; ++v) {
      prefix.push_back(v);
      rec(left - 1, v, budget - v);
      prefix.pop_back();
    }
  };
  rec(length, cap, max_total);
}

GeneratorList resolve(const Context& ctx, std::vector<Candidate> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    const u64 da = a.marked.degree(), db = b.marked.degree();
    return da != db ? da < db : a.marked > b.marked;
  });
  GeneratorList list{ctx, {}};
  std::map<u64, SkBasis> bases;
  for (Candidate& cand : candidates) {
    if (!list.entries.empty() && list.entries.back().marked == cand.marked) continue;
    GeneratorEntry entry{cand.marked, cand.family, false, {}, std::nullopt};
    if (cand.family) {
      try {
        entry.element = family_element(*cand.family, ctx);
      } catch (const FamilyError& e) {
        entry.note = e.what();
      } catch (const FamilyCheckError& e) {
        entry.note = e.what();
      }
    } else {
      entry.note = "no closed form listed";
    }
    if (!entry.element) {
      entry.fallback = true;
      const u64 k = cand.marked.degree();
      auto it = bases.find(k);
      if (it == bases.end()) it = bases.emplace(k, basis_Sk(ctx, k)).first;
      const SkBasis& basis = it->second;
      const auto col = basis.echelon.column_of(cand.marked);
      const auto& pivots = basis.echelon.pivots();
      const auto pos = col ? std::find(pivots.begin(), pivots.end(), *col) : pivots.end();
      if (pos == pivots.end()) {
        entry.note += "; not a leading term in degree " + std::to_string(k);
      } else {
        entry.element = basis.elements[static_cast<std::size_t>(pos - pivots.begin())];
      }
    }
    list.entries.push_back(std::move(entry));
  }
  return list;
}

FamilySpec spec1(FamilyId id, std::string key, u32 v) {
  return FamilySpec::make(id, {{std::move(key), {v}}});
}

void add_powers(std::vector<Candidate>& out, const Context& ctx, u64 bound, u32 first_s) {
  for (u32 s = first_s; power(ctx.p, s) <= bound; ++s) {
    std::vector<u32> xs(ctx.m, 0);
    xs[0] = static_cast<u32>(power(ctx.p, s));
    out.push_back({Monomial(std::move(xs), std::vector<u32>(ctx.n, 0)),
                   spec1(FamilyId::LEMMA_P, "k", static_cast<u32>(power(ctx.p, s - 1)))});
  }
}

}  // namespace

GeneratorList theorem_generators(TheoremCase c, u32 m, u64 degree_bound, u32 p, PowerVariant variant) {
  const Context ctx = theorem_context(c, m, p);
  std::vector<Candidate> out;
  const u32 bound32 = static_cast<u32>(std::min<u64>(degree_bound, 1u << 20));
  switch (c) {
    case TheoremCase::SYM:
      for (u32 s = 0; power(p, s) <= degree_bound; ++s) {
        const u32 q = static_cast<u32>(power(p, s));
        for_each_bounded_tuple(m - 1, 0, q, degree_bound - q, [&](const std::vector<u32>& tail) {
          std::vector<u32> a{q};
          a.insert(a.end(), tail.begin(), tail.end());
          out.push_back({Monomial(a, {}), FamilySpec::make(FamilyId::EVEN_D, {{"a", a}})});
        });
      }
      break;
    case TheoremCase::M1:
      for (u32 i = 1; i <= m && i <= degree_bound; ++i) {
        out.push_back({Monomial(ones(i, m), {0}), spec1(FamilyId::E, "t", i)});
      }
      for (u32 j1 = 1; m + j1 <= degree_bound; ++j1) {
        out.push_back({Monomial(ones(m, m), {j1}), spec1(FamilyId::E, "t", m + j1)});
      }
      add_powers(out, ctx, degree_bound, variant == PowerVariant::SGeOne ? 1 : 2);
      for_each_bounded_tuple(m, 1, bound32, degree_bound, [&](const std::vector<u32>& i) {
        u64 sum = 0;
        for (u32 iu : i) {
          if (iu % p == 0) return;
          sum += iu;
        }
        if (sum % p != 0) return;
        for (u32 j1 = 0; sum + j1 <= degree_bound; ++j1) {
          out.push_back({Monomial(i, {j1}), FamilySpec::make(FamilyId::JEDEN, {{"i", i}, {"j", {j1}}})});
        }
      });
      break;
    case TheoremCase::ONE_TWO:
      add_powers(out, ctx, degree_bound, 1);
      for_each_bounded_tuple(2, 0, bound32, degree_bound, [&](const std::vector<u32>& j) {
        const u64 deg = u64{j[0]} + j[1];
        if (height(j, p) == HeightClass::One) {
          if (deg + 1 <= degree_bound) {
            out.push_back({Monomial({1}, j), FamilySpec::make(FamilyId::L62, {{"j", j}})});
          }
        } else if (deg + 2 <= degree_bound) {
          out.push_back({Monomial({2}, j), FamilySpec::make(FamilyId::L63, {{"j", j}})});
        }
      });
      break;
    case TheoremCase::TWO_TWO:
      if (degree_bound >= 1) out.push_back({Monomial({1, 0}, {0, 0}), spec1(FamilyId::E, "t", 1)});
      add_powers(out, ctx, degree_bound, 1);
      for_each_bounded_tuple(2, 0, bound32, degree_bound, [&](const std::vector<u32>& j) {
        const u64 jdeg = u64{j[0]} + j[1];
        if (height(j, p) == HeightClass::One && jdeg + 2 <= degree_bound) {
          out.push_back({Monomial({1, 1}, j), spec1(FamilyId::E, "t", static_cast<u32>(jdeg + 2))});
        }
        if (jdeg > degree_bound) return;
        for_each_bounded_tuple(2, 0, bound32, degree_bound - jdeg, [&](const std::vector<u32>& i) {
          const bool sest = i[0] % p == 1 && i[1] % p == 1 && i[1] / p > 0 && j[0] % p == p - 1;
          const bool sedem = i[0] % p == 2 && i[1] % p == 2;
          if (!sest && !sedem) return;
          out.push_back({Monomial(i, j), FamilySpec::make(sest ? FamilyId::SEST : FamilyId::SEDEM,
                                                          {{"i", i}, {"j", j}})});
        });
      });
      break;
  }
  return resolve(ctx, std::move(out));
}

GeneratorList pair_generators(u64 degree_bound, u32 p) {
  const Context ctx(p, 1, 1);
  std::vector<Candidate> out;
  for (u32 k = 1; k <= degree_bound; ++k) {
    const FamilySpec spec = spec1(FamilyId::PAIR_C, "k", k);
    out.push_back({declared_leading_monomial(spec, ctx), spec});
  }
  for (u32 s = 1; power(p, s) <= degree_bound; ++s) {
    const FamilySpec spec = spec1(FamilyId::PAIR_SIGMA, "s", s);
    out.push_back({declared_leading_monomial(spec, ctx), spec});
  }
  return resolve(ctx, std::move(out));
}

}  // namespace superdiv
