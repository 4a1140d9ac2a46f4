#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "superdiv/catalog.hpp"
#include "superdiv/element_io.hpp"
#include "superdiv/spanalg.hpp"
#include "superdiv/supersym.hpp"
#include "superdiv/verify.hpp"

namespace superdiv::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  u32 p = 3;
  u32 m = 1;
  u32 n = 1;
  bool m_set = false;
  bool n_set = false;
  u64 degree = 0;
  u64 max_degree = 0;
  std::string format = "json";
  std::string spec;
  std::string case_name;
  std::string variant;
  std::uint64_t seed = 0;
  std::string out;
  std::string suite = "all";
  std::string file;
  bool verbose = false;
};

Context context_of(const Options& o) {
  try {
    return Context(o.p, o.m, o.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ordered_json json_of(const Element& f) { return ordered_json::parse(element_to_json(f)); }

ordered_json monomial_list(const std::vector<Monomial>& ms) {
  ordered_json arr = ordered_json::array();
  for (const Monomial& m : ms) arr.push_back(to_string(m));
  return arr;
}

std::string join_monomials(const std::vector<Monomial>& ms) {
  std::string out;
  for (const Monomial& m : ms) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Element parse_element_doc(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return element_from_json(text);
  return element_from_text(text);
}

int cmd_dims(const Options& o, std::ostream& out) {
  const Context ctx = context_of(o);
  const bool pair = ctx.m == 1 && ctx.n == 1;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  bool agree_all = true;
  for (u64 k = 0; k <= o.max_degree; ++k) {
    const u64 dim = basis_Sk(ctx, k).dim();
    ordered_json row = {{"degree", k}, {"dim", dim}};
    text << k << ' ' << dim;
    if (pair) {
      const u64 predicted = expected_dim_11(k, ctx.p);
      row["predicted"] = predicted;
      row["agree"] = predicted == dim;
      agree_all = agree_all && predicted == dim;
      text << ' ' << predicted << ' ' << (predicted == dim ? "agree" : "DIFFER");
    }
    text << '\n';
    rows.push_back(std::move(row));
  }
  if (o.format == "json") {
    out << ordered_json{{"p", ctx.p}, {"m", ctx.m}, {"n", ctx.n}, {"rows", rows}}.dump() << '\n';
  } else {
    out << "p=" << ctx.p << " m=" << ctx.m << " n=" << ctx.n << '\n' << text.str();
  }
  return agree_all ? kOk : kNegative;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const Context ctx = context_of(o);
  const SkBasis basis = basis_Sk(ctx, o.degree);
  const std::vector<Monomial> marked = basis.echelon.pivot_monomials();
  if (o.format == "json") {
    ordered_json elems = ordered_json::array();
    for (const Element& f : basis.elements) elems.push_back(json_of(f));
    out << ordered_json{{"p", ctx.p}, {"m", ctx.m}, {"n", ctx.n}, {"degree", o.degree},
                        {"elements", elems}, {"marked", monomial_list(marked)}}
               .dump()
        << '\n';
  } else {
    out << "p=" << ctx.p << " m=" << ctx.m << " n=" << ctx.n << " degree=" << o.degree << '\n';
    for (const Element& f : basis.elements) out << terms_to_text(f) << '\n';
    out << "marked: " << join_monomials(marked) << '\n';
  }
  return kOk;
}

int cmd_marked(const Options& o, std::ostream& out) {
  const Context ctx = context_of(o);
  const MarkedReport rep = marked_monomials(ctx, o.degree);
  if (o.format == "json") {
    out << ordered_json{{"p", ctx.p}, {"m", ctx.m}, {"n", ctx.n}, {"degree", o.degree},
                        {"marked", monomial_list(rep.marked)}, {"unmarked", monomial_list(rep.unmarked)}}
               .dump()
        << '\n';
  } else {
    out << "marked: " << join_monomials(rep.marked) << '\n';
    out << "unmarked: " << join_monomials(rep.unmarked) << '\n';
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.file.empty()) throw UsageError("check needs an element file");
  const Element f = parse_element_doc(read_file(o.file));
  const Context& ctx = f.context();
  if (ctx.m == 0 || ctx.n == 0) throw UsageError("check needs m >= 1 and n >= 1");
  const OracleResult res = oracle_is_supersymmetric(f);
  if (o.format == "json") {
    ordered_json doc = {{"supersymmetric", res.supersymmetric}};
    if (o.verbose && res.witness) doc["witness"] = json_of(*res.witness);
    out << doc.dump() << '\n';
  } else {
    out << (res.supersymmetric ? "supersymmetric" : "not supersymmetric") << '\n';
    if (o.verbose && res.witness) out << "witness: " << terms_to_text(*res.witness) << '\n';
  }
  return res.supersymmetric ? kOk : kNegative;
}

int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
  FamilySpec spec = parse_family_spec(o.spec);
  if (o.variant == "literal") spec.variant = FamilyVariant::Literal;
  else if (o.variant == "corrected") spec.variant = FamilyVariant::Corrected;
  else if (!o.variant.empty()) throw UsageError("family variant must be literal or corrected");
  Context ctx = default_context(spec, o.p);
  if (o.m_set || o.n_set) {
    Options shape = o;
    shape.m = o.m_set ? o.m : ctx.m;
    shape.n = o.n_set ? o.n : ctx.n;
    ctx = context_of(shape);
  }
  Element f(ctx);
  try {
    f = family_element(spec, ctx);
  } catch (const FamilyCheckError& e) {
    err << "postcondition failed: " << e.what() << '\n';
    return kNegative;
  }
  if (o.format == "json") out << element_to_json(f) << '\n';
  else out << element_to_text(f);
  return kOk;
}

std::pair<Context, std::vector<Element>> custom_generators(const std::string& path) {
  const std::string text = read_file(path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const ordered_json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("generators")) throw ParseError("generator file needs a 'generators' array");
    list = &doc["generators"];
  }
  if (!list->is_array() || list->empty()) throw ParseError("generator list must be a nonempty array");
  std::vector<Element> gens;
  for (const ordered_json& g : *list) gens.push_back(element_from_json(g.dump()));
  const Context ctx = gens.front().context();
  for (const Element& g : gens) {
    if (!(g.context() == ctx)) throw ParseError("generators live in different contexts");
  }
  return {ctx, std::move(gens)};
}

int cmd_span_check(const Options& o, std::ostream& out) {
  if (o.case_name.empty()) throw UsageError("span-check needs --case");
  std::optional<Context> ctx;
  std::vector<Element> gens;
  std::size_t fallbacks = 0;
  SpanTarget target = SpanTarget::SUPERSYM;
  if (const auto tc = theorem_case_from_name(o.case_name)) {
    PowerVariant pv = PowerVariant::SGeOne;
    if (!o.variant.empty()) {
      const auto v = power_variant_from_name(o.variant);
      if (!v) throw UsageError("unknown variant '" + o.variant + "'");
      pv = *v;
    }
    const u32 m = o.m_set ? o.m : 2;
    if (*tc == TheoremCase::SYM || *tc == TheoremCase::M1) {
      if (m == 0) throw UsageError("--m must be positive");
    }
    GeneratorList list = theorem_generators(*tc, m, o.max_degree, o.p, pv);
    fallbacks = list.fallback_count();
    gens = list.elements();
    ctx = list.ctx;
    if (*tc == TheoremCase::SYM) target = SpanTarget::SYM_X;
  } else {
    auto [c, g] = custom_generators(o.case_name);
    ctx = c;
    gens = std::move(g);
    if (ctx->n == 0) target = SpanTarget::SYM_X;
    for (const Element& e : gens) {
      if (!e.is_homogeneous()) throw ParseError("generator is not homogeneous");
    }
  }
  const SpanReport rep = span_check(*ctx, gens, target, o.max_degree);
  if (o.format == "json") {
    ordered_json degrees = ordered_json::array();
    for (const DegreeReport& d : rep.degrees) {
      degrees.push_back({{"degree", d.degree},
                         {"target_dim", d.target_dim},
                         {"achieved_dim", d.achieved_dim},
                         {"missing", monomial_list(d.missing)},
                         {"outside", d.outside}});
    }
    out << ordered_json{{"p", ctx->p},
                        {"m", ctx->m},
                        {"n", ctx->n},
                        {"target", std::string(to_string(target))},
                        {"bound", o.max_degree},
                        {"generators", gens.size()},
                        {"fallbacks", fallbacks},
                        {"complete", rep.complete()},
                        {"gap_degrees", rep.gap_degrees()},
                        {"degrees", degrees}}
               .dump()
        << '\n';
  } else {
    out << to_string(*ctx) << " target=" << to_string(target) << " bound=" << o.max_degree
        << " generators=" << gens.size() << '\n';
    for (const DegreeReport& d : rep.degrees) {
      out << d.degree << ' ' << d.target_dim << ' ' << d.achieved_dim << (d.full() ? " ok" : " GAP");
      if (!d.missing.empty()) out << " missing " << join_monomials(d.missing);
      if (d.outside) out << " outside " << d.outside;
      out << '\n';
    }
  }
  return rep.complete() ? kOk : kNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CriterionResult> results;
  if (o.suite == "all") {
    results = run_all(o.seed);
  } else {
    auto r = run_suite(o.suite, o.seed);
    if (!r) throw UsageError("unknown suite '" + o.suite + "'");
    results.push_back(std::move(*r));
  }
  bool all = true;
  for (const CriterionResult& r : results) all = all && r.passed;
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const CriterionResult& r : results) {
      arr.push_back({{"id", r.id}, {"suite", r.suite}, {"title", r.title}, {"passed", r.passed},
                     {"detail", r.detail}, {"notes", r.notes}});
    }
    out << ordered_json{{"seed", o.seed}, {"passed", all}, {"results", arr}}.dump(2) << '\n';
  } else {
    for (const CriterionResult& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.suite << ": " << r.detail << '\n';
      for (const std::string& note : r.notes) out << "    " << note << '\n';
    }
  }
  return all ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supersymmetric elements of divided power algebras over F_p", "superdiv"};
  app.require_subcommand(1);
  Options o;

  const auto add_context = [&o](CLI::App* sub) {
    sub->add_option("--p", o.p, "odd prime characteristic")->capture_default_str();
    sub->add_option_function<u32>("--m", [&o](const u32& v) { o.m = v; o.m_set = true; }, "number of x variables");
    sub->add_option_function<u32>("--n", [&o](const u32& v) { o.n = v; o.n_set = true; }, "number of y variables");
  };
  const auto add_output = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--out", o.out, "write output to this file");
  };

  CLI::App* dims = app.add_subcommand("dims", "dim S_k for k = 0..max-degree");
  add_context(dims);
  add_output(dims);
  dims->add_option("--max-degree", o.max_degree)->required();

  CLI::App* basis = app.add_subcommand("basis", "echelon basis of S_k and its marked monomials");
  add_context(basis);
  add_output(basis);
  basis->add_option("--degree", o.degree)->required();

  CLI::App* marked = app.add_subcommand("marked", "marked and unmarked symmetrized monomials of degree k");
  add_context(marked);
  add_output(marked);
  marked->add_option("--degree", o.degree)->required();

  CLI::App* check = app.add_subcommand("check", "decide whether an element is supersymmetric");
  add_output(check);
  check->add_option("file", o.file, "element document (JSON or text)")->required();
  check->add_flag("-v,--verbose", o.verbose, "print the witness");

  CLI::App* family = app.add_subcommand("family", "build a catalog element");
  add_context(family);
  add_output(family);
  family->add_option("--spec", o.spec, "family spec, e.g. E:t=4")->required();
  family->add_option("--variant", o.variant, "corrected or literal");

  CLI::App* span = app.add_subcommand("span-check", "compare generated algebra with S up to a degree");
  add_context(span);
  add_output(span);
  span->add_option("--case", o.case_name, "SYM, M1, ONE_TWO, TWO_TWO or a generator file")->required();
  span->add_option("--max-degree", o.max_degree)->required();
  span->add_option("--variant", o.variant, "s-ge-1 or s-gt-1 (M1)");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_output(verify);
  verify->add_option("--suite", o.suite, "suite id or all")->capture_default_str();
  verify->add_option("--seed", o.seed)->capture_default_str();

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) {
      err << "cannot write '" << o.out << "'\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (dims->parsed()) return cmd_dims(o, *sink);
    if (basis->parsed()) return cmd_basis(o, *sink);
    if (marked->parsed()) return cmd_marked(o, *sink);
    if (check->parsed()) return cmd_check(o, *sink);
    if (family->parsed()) return cmd_family(o, *sink, err);
    if (span->parsed()) return cmd_span_check(o, *sink);
    if (verify->parsed()) return cmd_verify(o, *sink);
  } catch (const FamilyCheckError& e) {
    err << e.what() << '\n';
    return kNegative;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace superdiv::cli
