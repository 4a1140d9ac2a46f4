#include "superdiv/element_io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace superdiv {

namespace {

using nlohmann::json;

u32 json_u32(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() > std::int64_t{0xffffffff}) {
    throw ParseError(std::string("expected a nonnegative integer for ") + what);
  }
  return static_cast<u32>(j.get<std::int64_t>());
}

std::vector<u32> json_exponents(const json& j, std::size_t len, const char* what) {
  if (!j.is_array() || j.size() != len) {
    throw ParseError(std::string(what) + " must be an array of length " + std::to_string(len));
  }
  std::vector<u32> out;
  for (const json& e : j) out.push_back(json_u32(e, what));
  return out;
}

Context make_context(u64 p, u64 m, u64 n) {
  try {
    return Context(p, m, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

u64 parse_uint(std::string_view s, std::string_view what) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Monomial parse_monomial(const Context& ctx, std::string_view s) {
  std::vector<u32> xs(ctx.m, 0), ys(ctx.n, 0);
  if (s == "1") return Monomial(xs, ys);
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t star = s.find('*', start);
    const std::string_view factor = s.substr(start, star == std::string_view::npos ? star : star - start);
    if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'y')) {
      throw ParseError("bad factor '" + std::string(factor) + "'");
    }
    const std::size_t caret = factor.find('^');
    const u64 index = parse_uint(factor.substr(1, caret == std::string_view::npos ? caret : caret - 1), "variable index");
    u64 exponent = 1;
    if (caret != std::string_view::npos) {
      const std::string_view e = factor.substr(caret + 1);
      if (e.size() < 3 || e.front() != '(' || e.back() != ')') {
        throw ParseError("bad exponent in '" + std::string(factor) + "'");
      }
      exponent = parse_uint(e.substr(1, e.size() - 2), "exponent");
    }
    std::vector<u32>& block = factor[0] == 'x' ? xs : ys;
    if (index == 0 || index > block.size()) {
      throw ParseError("variable '" + std::string(factor.substr(0, caret)) + "' outside " + to_string(ctx));
    }
    if (block[index - 1] != 0 || exponent == 0 || exponent > 0xffffffffu) {
      throw ParseError("bad or repeated factor '" + std::string(factor) + "'");
    }
    block[index - 1] = static_cast<u32>(exponent);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return Monomial(std::move(xs), std::move(ys));
}

}  // namespace

std::string element_to_json(const Element& f) {
  const Context& ctx = f.context();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const Term& t : f.terms()) {
    terms.push_back({{"x", std::vector<u32>(t.monomial.x().begin(), t.monomial.x().end())},
                     {"y", std::vector<u32>(t.monomial.y().begin(), t.monomial.y().end())},
                     {"c", t.coeff}});
  }
  nlohmann::ordered_json doc = {{"p", ctx.p}, {"m", ctx.m}, {"n", ctx.n}, {"terms", std::move(terms)}};
  return doc.dump();
}

Element element_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("element document must be an object");
  for (const char* key : {"p", "m", "n", "terms"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  }
  const Context ctx = make_context(json_u32(doc["p"], "p"), json_u32(doc["m"], "m"), json_u32(doc["n"], "n"));
  const json& terms = doc["terms"];
  if (!terms.is_array()) throw ParseError("terms must be an array");
  std::vector<Term> out;
  for (const json& t : terms) {
    if (!t.is_object() || !t.contains("x") || !t.contains("y") || !t.contains("c")) {
      throw ParseError("each term needs x, y and c");
    }
    Monomial mono(json_exponents(t["x"], ctx.m, "x"), json_exponents(t["y"], ctx.n, "y"));
    const u32 c = json_u32(t["c"], "c");
    if (c == 0 || c >= ctx.p) throw ParseError("coefficient " + std::to_string(c) + " outside [1, p)");
    if (!out.empty() && !(out.back().monomial > mono)) {
      throw ParseError("terms must be strictly decreasing at " + to_string(mono));
    }
    out.push_back({std::move(mono), c});
  }
  return Element(ctx, std::move(out));
}

std::string terms_to_text(const Element& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.coeff != 1) {
      out += std::to_string(t.coeff);
      out += '*';
    }
    out += to_string(t.monomial);
  }
  return out;
}

std::string element_to_text(const Element& f) {
  const Context& ctx = f.context();
  return "p=" + std::to_string(ctx.p) + " m=" + std::to_string(ctx.m) + " n=" + std::to_string(ctx.n) +
         "\n" + terms_to_text(f) + "\n";
}

Element terms_from_text(const Context& ctx, std::string_view line) {
  line = trim(line);
  if (line == "0") return Element(ctx);
  if (line.empty()) throw ParseError("empty term line");
  std::vector<Term> terms;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = line.find('+', start);
    const std::string_view term = trim(line.substr(start, plus == std::string_view::npos ? plus : plus - start));
    if (term.empty()) throw ParseError("empty term");
    u64 coeff = 1;
    std::string_view mono = term;
    if (term.front() >= '0' && term.front() <= '9' && term != "1") {
      const std::size_t star = term.find('*');
      coeff = parse_uint(term.substr(0, star), "coefficient");
      mono = star == std::string_view::npos ? std::string_view("1") : term.substr(star + 1);
    }
    if (coeff == 0 || coeff >= ctx.p) {
      throw ParseError("coefficient " + std::to_string(coeff) + " outside [1, p)");
    }
    terms.push_back({parse_monomial(ctx, mono), static_cast<u32>(coeff)});
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return Element(ctx, std::move(terms));
}

Element element_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header, line;
  if (!std::getline(in, header)) throw ParseError("missing header line");
  std::istringstream hs(header);
  u64 p = 0, m = 0, n = 0;
  bool seen[3] = {false, false, false};
  std::string token;
  while (hs >> token) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("bad header token '" + token + "'");
    const std::string key = token.substr(0, eq);
    const u64 value = parse_uint(std::string_view(token).substr(eq + 1), key);
    if (key == "p") { p = value; seen[0] = true; }
    else if (key == "m") { m = value; seen[1] = true; }
    else if (key == "n") { n = value; seen[2] = true; }
    else throw ParseError("unknown header key '" + key + "'");
  }
  if (!seen[0] || !seen[1] || !seen[2]) throw ParseError("header needs p, m and n");
  const Context ctx = make_context(p, m, n);
  if (!std::getline(in, line)) throw ParseError("missing term line");
  std::string rest;
  while (std::getline(in, rest)) {
    if (!trim(rest).empty()) throw ParseError("trailing content after the term line");
  }
  return terms_from_text(ctx, line);
}

}  // namespace superdiv
