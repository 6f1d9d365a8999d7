#include "kkdrop/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "kkdrop/lifting.hpp"

namespace kkdrop {

namespace {

using ordered_json = nlohmann::ordered_json;

Int parse_int(const std::string& token) {
  Int value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    fail(Errc::Mismatch, "not an integer: '" + token + "'");
  return value;
}

std::vector<Int> parse_int_list(std::string literal, std::size_t count,
                                const char* what) {
  if (!literal.empty() && literal.front() == '=') literal.erase(0, 1);
  std::vector<Int> values;
  std::size_t start = 0;
  while (start <= literal.size()) {
    std::size_t comma = literal.find(',', start);
    std::size_t end = comma == std::string::npos ? literal.size() : comma;
    values.push_back(parse_int(literal.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != count)
    fail(Errc::Mismatch, std::string(what) + " needs " +
                             std::to_string(count) + " comma-separated values");
  return values;
}

DimensionDropAlgebra parse_algebra(const std::string& literal) {
  std::vector<Int> v = parse_int_list(literal, 3, "algebra literal");
  return DimensionDropAlgebra(v[0], v[1], v[2]);
}

std::array<Int, 4> parse_coeffs(const std::string& literal) {
  std::vector<Int> v = parse_int_list(literal, 4, "coefficient literal");
  return {v[0], v[1], v[2], v[3]};
}

EqualityMode parse_mode(const std::string& name) {
  return name == "strict" ? EqualityMode::Strict : EqualityMode::Map;
}

std::string algebra_str(const DimensionDropAlgebra& a) {
  return "I[" + std::to_string(a.m0()) + "," + std::to_string(a.m()) + "," +
         std::to_string(a.m1()) + "]";
}

ordered_json algebra_json(const DimensionDropAlgebra& a) {
  return ordered_json::array({a.m0(), a.m(), a.m1()});
}

std::string term_expr(const Int* coeffs, const char* const* names, int n) {
  std::string text;
  for (int i = 0; i < n; ++i) {
    Int c = coeffs[i];
    if (i == 0) {
      if (c < 0) text += "-";
    } else {
      text += c < 0 ? " - " : " + ";
    }
    text += std::to_string(c < 0 ? -c : c) + "*" + names[i];
  }
  return text;
}

std::string element_expr(const std::array<Int, 4>& coeffs) {
  static const char* names[4] = {"delta0", "delta1", "id", "idbar"};
  return term_expr(coeffs.data(), names, 4);
}

std::string pair_expr(const std::array<Int, 2>& coeffs) {
  static const char* names[2] = {"delta0", "delta1"};
  return term_expr(coeffs.data(), names, 2);
}

std::string gp_str(const GpElement& e) {
  return "(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ", " +
         std::to_string(e.c) + ")";
}

std::string phi_str(const PhiMatrix& phi) {
  return "[[" + std::to_string(phi[0][0]) + ", " + std::to_string(phi[0][1]) +
         "], [" + std::to_string(phi[1][0]) + ", " +
         std::to_string(phi[1][1]) + "]]";
}

ordered_json phi_json(const PhiMatrix& phi) {
  return ordered_json::array(
      {ordered_json::array({phi[0][0], phi[0][1]}),
       ordered_json::array({phi[1][0], phi[1][1]})});
}

std::string witness_str(const std::optional<std::array<Int, 4>>& w) {
  if (!w) return "none";
  return "(" + std::to_string((*w)[0]) + ", " + std::to_string((*w)[1]) +
         ", " + std::to_string((*w)[2]) + ", " + std::to_string((*w)[3]) +
         ")";
}

ordered_json witness_json(const std::optional<std::array<Int, 4>>& w) {
  if (!w) return nullptr;
  return ordered_json::array({(*w)[0], (*w)[1], (*w)[2], (*w)[3]});
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// Renders one closed-form inequality pair the way the published discussion
// states it, with the computed side values filled in.
std::string closed_form_str(const DimensionDropAlgebra& a, Int x,
                            const ClosedFormResult& cf) {
  BezoutPair beta = bezout_canonical(a.m0(), a.m1());
  Int a0 = beta.beta0 * a.m0() * a.m0();
  Int a1 = beta.beta0 * a.m0() * a.m1();
  std::string text;
  text += std::to_string(a0) + "x = " + std::to_string(cf.lhs0) +
          (cf.lhs0 >= a.m() ? " >= " : " < ") + std::to_string(a.m());
  text += ", " + std::to_string(a1) + "x = " + std::to_string(cf.lhs1) +
          (cf.lhs1 >= a.m() ? " >= " : " < ") + std::to_string(a.m());
  text += ", R = " + std::to_string(cf.r) +
          (cf.r <= a.m0() * x ? " <= " : " > ") + std::to_string(a.m0()) +
          "x = " + std::to_string(a.m0() * x);
  text += ", S = " + std::to_string(cf.s) +
          (cf.s <= a.m1() * x ? " <= " : " > ") + std::to_string(a.m1()) +
          "x = " + std::to_string(a.m1() * x);
  text += cf.positive ? " => DL-positive" : " => not DL-positive";
  return text;
}

struct CommonArgs {
  std::string source;
  std::string target;
  std::string format = "text";
  std::string mode = "map";
  Int p = 0;
};

Int default_p(const DimensionDropAlgebra& a, const DimensionDropAlgebra& b,
              Int requested) {
  return requested > 0 ? requested : lcm(a.m(), b.m());
}

void cmd_ktheory(std::ostream& out, const std::string& algebra_lit, Int p_arg,
                 const std::string& format) {
  DimensionDropAlgebra a = parse_algebra(algebra_lit);
  Int p = default_p(a, a, p_arg);
  auto members = coeff_pair_members(a, p);
  auto gens = cone_generators(a, p);
  Int s = k1_order(a);
  ResiduePair g1 = generator_g1(a, p);
  ResiduePair g2 = generator_g2(a, p);
  Int nu1 = bockstein_nu(a, p, g1);
  Int nu2 = bockstein_nu(a, p, g2);
  static const char* names[4] = {"delta0", "delta1", "id", "idbar"};
  if (format == "json") {
    ordered_json j;
    j["algebra"] = algebra_json(a);
    j["p"] = p;
    j["pair_count"] = static_cast<Int>(members.size());
    j["k1_order"] = s;
    j["mu"] = ordered_json::array({a.m0() % p, a.m1() % p});
    j["nu"] = {{"g1", nu1}, {"g2", nu2}};
    ordered_json g;
    for (int i = 0; i < 4; ++i)
      g[names[i]] = ordered_json::array({gens[i].a, gens[i].b, gens[i].c});
    j["generators"] = g;
    emit(out, j);
    return;
  }
  out << "K0(" << algebra_str(a) << "; G_" << p << ") = Z (+) Z(" << a.m()
      << "," << p << ")\n";
  out << "  coefficient pairs: " << members.size() << "\n";
  out << "  K1 order: " << s << "\n";
  out << "  mu = (" << a.m0() % p << ", " << a.m1() % p << ")\n";
  out << "  nu(" << g1.b << ", " << g1.c << ") = " << nu1 << " (mod " << s
      << ")\n";
  out << "  nu(" << g2.b << ", " << g2.c << ") = " << nu2 << " (mod " << s
      << ")\n";
  out << "  cone generators:\n";
  for (int i = 0; i < 4; ++i)
    out << "    " << names[i] << ": " << gp_str(gens[i]) << "\n";
}

int cmd_exactness(std::ostream& out, const std::string& algebra_lit,
                  Int p_arg, const std::string& format) {
  DimensionDropAlgebra a = parse_algebra(algebra_lit);
  Int p = default_p(a, a, p_arg);
  ExactnessReport report = verify_bockstein_exactness(a, p);
  if (format == "json") {
    ordered_json j;
    j["algebra"] = algebra_json(a);
    j["p"] = p;
    j["kernel_mu"] = report.kernel_mu_ok;
    j["image_mu"] = report.image_mu_ok;
    j["image_nu"] = report.image_nu_ok;
    j["exact"] = report.exact();
    j["witness"] = report.witness;
    emit(out, j);
  } else {
    auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
    out << "Bockstein exactness for " << algebra_str(a) << " at p = " << p
        << "\n";
    out << "  kernel of mu equals pZ: " << verdict(report.kernel_mu_ok)
        << "\n";
    out << "  image of mu equals kernel of nu: "
        << verdict(report.image_mu_ok) << "\n";
    out << "  image of nu equals kernel of p on K1: "
        << verdict(report.image_nu_ok) << "\n";
    if (!report.exact()) out << "  witness: " << report.witness << "\n";
  }
  return report.exact() ? 0 : 2;
}

void cmd_cone_decompose(std::ostream& out, const std::string& algebra_lit,
                        Int p_arg, const std::string& element_lit,
                        const std::string& format) {
  DimensionDropAlgebra a = parse_algebra(algebra_lit);
  Int p = default_p(a, a, p_arg);
  std::vector<Int> v = parse_int_list(element_lit, 3, "element literal");
  GpElement e = make_gp_element(a, p, v[0], v[1], v[2]);
  std::array<Int, 4> coeffs = cone_decompose(e);
  if (format == "json") {
    ordered_json j;
    j["algebra"] = algebra_json(a);
    j["p"] = p;
    j["element"] = ordered_json::array({e.a, e.b, e.c});
    j["coefficients"] =
        ordered_json::array({coeffs[0], coeffs[1], coeffs[2], coeffs[3]});
    emit(out, j);
    return;
  }
  out << gp_str(e) << " = " << element_expr(coeffs) << "\n";
}

int cmd_triple(std::ostream& out, const std::string& kind_name,
               const std::string& source_lit, const std::string& target_lit,
               Int p_arg, const std::string& format) {
  DimensionDropAlgebra a = parse_algebra(source_lit);
  DimensionDropAlgebra b = parse_algebra(target_lit);
  Int p = default_p(a, b, p_arg);
  HomKind kind = kind_name == "delta0"   ? HomKind::Delta0
                 : kind_name == "delta1" ? HomKind::Delta1
                 : kind_name == "id"     ? HomKind::Id
                                         : HomKind::IdBar;
  KTriple t = induced_triple(make_basic_hom(kind, a, b), p);
  ValidationResult valid = validate_triple(t);
  if (format == "json") {
    ordered_json j;
    j["kind"] = kind_name;
    j["source"] = algebra_json(a);
    j["target"] = algebra_json(b);
    j["p"] = p;
    j["x"] = t.x;
    j["phi"] = phi_json(t.phi);
    j["y"] = t.y;
    j["valid"] = valid.ok;
    emit(out, j);
  } else {
    out << "Gamma(" << kind_name << "; " << p << "): " << algebra_str(a)
        << " -> " << algebra_str(b) << "\n";
    out << "  x = " << t.x << "\n";
    out << "  phi = " << phi_str(t.phi) << "\n";
    out << "  y = " << t.y << "\n";
    out << "  valid: " << (valid.ok ? "yes" : "no") << "\n";
    if (!valid.ok) out << "  failure: " << valid.failure << "\n";
  }
  return valid.ok ? 0 : 2;
}

void cmd_kk_canon(std::ostream& out, const std::string& source_lit,
                  const std::string& target_lit, const std::string& coeff_lit,
                  const std::string& format) {
  DimensionDropAlgebra a = parse_algebra(source_lit);
  DimensionDropAlgebra b = parse_algebra(target_lit);
  std::array<Int, 4> coeffs = parse_coeffs(coeff_lit);
  KKElement e = make_kk_element(a, b, coeffs);
  KKCanonicalForm canon = kk_canonical(e);
  Int sb = k1_order(b);
  if (format == "json") {
    ordered_json j;
    j["source"] = algebra_json(a);
    j["target"] = algebra_json(b);
    j["coeffs"] = ordered_json::array({coeffs[0], coeffs[1], coeffs[2],
                                       coeffs[3]});
    j["x"] = canon.x;
    j["y_mod"] = canon.y_mod;
    j["d"] = canon.d;
    j["expression"] = {{"k", canon.k}, {"c0", canon.c0}, {"c1", canon.c1}};
    emit(out, j);
    return;
  }
  out << "KK element " << element_expr(coeffs) << ": " << algebra_str(a)
      << " -> " << algebra_str(b) << "\n";
  out << "  x = " << canon.x << "\n";
  out << "  y = " << canon.y_mod << " (mod " << sb << ")\n";
  out << "  d = " << canon.d << "\n";
  out << "  expression: k = " << canon.k << ", c0 = " << canon.c0
      << ", c1 = " << canon.c1 << "\n";
}

void cmd_lift_check(std::ostream& out, const CommonArgs& args,
                    const std::string& coeff_lit) {
  DimensionDropAlgebra a = parse_algebra(args.source);
  DimensionDropAlgebra b = parse_algebra(args.target);
  Int p = default_p(a, b, args.p);
  EqualityMode mode = parse_mode(args.mode);
  KKElement e = make_kk_element(a, b, parse_coeffs(coeff_lit));
  LiftReport report = lift_report(e, p, mode);
  if (args.format == "json") {
    ordered_json j;
    j["element"] = {{"coeffs", ordered_json::array({e.coeffs[0], e.coeffs[1],
                                                    e.coeffs[2],
                                                    e.coeffs[3]})}};
    j["p"] = p;
    j["mode"] = equality_mode_name(mode);
    j["dl_positive"] = report.dl_pos;
    j["js_positive"] = report.js_pos;
    j["span_member"] = report.span_witness.has_value();
    j["span_witness"] = witness_json(report.span_witness);
    j["agreement"] = {{"dl_vs_span", report.agree_dl_span},
                      {"js_vs_span", report.agree_js_span}};
    emit(out, j);
    return;
  }
  out << "lift-check " << algebra_str(a) << " -> " << algebra_str(b)
      << ", p = " << p << ", mode = " << equality_mode_name(mode) << "\n";
  out << "  element: " << element_expr(e.coeffs) << "\n";
  out << "  DL order preserved: " << (report.dl_pos ? "yes" : "no");
  if (report.dl_witness)
    out << " (cone generator #" << report.dl_witness->generator_index
        << " maps to " << gp_str(report.dl_witness->image) << ")";
  out << "\n";
  out << "  K-homology positive: " << (report.js_pos ? "yes" : "no") << "\n";
  out << "  span witness: " << witness_str(report.span_witness) << "\n";
  out << "  agreement dl vs span: " << (report.agree_dl_span ? "yes" : "no")
      << "\n";
  out << "  agreement js vs span: " << (report.agree_js_span ? "yes" : "no")
      << "\n";
}

void cmd_search(std::ostream& out, const CommonArgs& args, Int x_max,
                bool include_torsion) {
  DimensionDropAlgebra a = parse_algebra(args.source);
  DimensionDropAlgebra b = parse_algebra(args.target);
  Int p = default_p(a, b, args.p);
  EqualityMode mode = parse_mode(args.mode);
  if (x_max < 0) x_max = a.m() - 1;
  auto hits = search_counterexamples(a, b, p, x_max, include_torsion, mode);
  if (args.format == "json") {
    ordered_json j;
    j["source"] = algebra_json(a);
    j["target"] = algebra_json(b);
    j["p"] = p;
    j["mode"] = equality_mode_name(mode);
    j["x_max"] = x_max;
    j["include_torsion"] = include_torsion;
    ordered_json rows = ordered_json::array();
    for (const SearchHit& hit : hits) {
      ordered_json row;
      row["x"] = hit.x;
      row["d"] = hit.d;
      row["coeffs"] = ordered_json::array(
          {hit.report.element.coeffs[0], hit.report.element.coeffs[1],
           hit.report.element.coeffs[2], hit.report.element.coeffs[3]});
      rows.push_back(row);
    }
    j["hits"] = rows;
    emit(out, j);
    return;
  }
  out << "search " << algebra_str(a) << " -> " << algebra_str(b)
      << ", p = " << p << ", mode = " << equality_mode_name(mode)
      << ", x <= " << x_max << ", "
      << (include_torsion ? "all torsion" : "d = 0") << "\n";
  for (const SearchHit& hit : hits)
    out << "  x = " << hit.x << ", d = " << hit.d << ": element "
        << element_expr(hit.report.element.coeffs)
        << ", DL-positive, no span witness\n";
  out << hits.size() << (hits.size() == 1 ? " candidate\n" : " candidates\n");
}

void cmd_audit(std::ostream& out, const std::string& format) {
  AuditReport report = audit_claims();
  if (format == "json") {
    ordered_json j;
    j["scenario"] = {{"algebra", algebra_json(report.algebra)},
                     {"p", report.p},
                     {"beta", ordered_json::array({report.beta.beta0,
                                                   report.beta.beta1})}};
    ordered_json rows = ordered_json::array();
    for (const AuditRow& row : report.rows) {
      ordered_json r;
      r["x"] = row.x;
      r["reduced"] =
          ordered_json::array({row.reduced_coeffs[0], row.reduced_coeffs[1]});
      r["closed_form"] = {{"positive", row.closed_form.positive},
                          {"lhs0", row.closed_form.lhs0},
                          {"lhs1", row.closed_form.lhs1},
                          {"R", row.closed_form.r},
                          {"S", row.closed_form.s}};
      r["dl_positive"] = row.dl_pos;
      r["js_positive"] = row.js_pos;
      r["span_map"] = witness_json(row.span_map);
      r["span_strict"] = witness_json(row.span_strict);
      rows.push_back(r);
    }
    j["rows"] = rows;
    j["claims"] = ordered_json::array({report.claims[0], report.claims[1]});
    ordered_json map_c = ordered_json::array();
    for (Int x : report.map_candidates) map_c.push_back(x);
    ordered_json strict_c = ordered_json::array();
    for (Int x : report.strict_candidates) strict_c.push_back(x);
    j["map_candidates"] = map_c;
    j["strict_candidates"] = strict_c;
    emit(out, j);
    return;
  }
  out << "claims audit: " << algebra_str(report.algebra) << " -> "
      << algebra_str(report.algebra) << ", p = " << report.p << ", beta = ("
      << report.beta.beta0 << ", " << report.beta.beta1 << ")\n";
  for (const AuditRow& row : report.rows) {
    out << "\n";
    out << "x = " << row.x << ": reduced element = "
        << pair_expr(row.reduced_coeffs) << "\n";
    out << "  closed form: "
        << closed_form_str(report.algebra, row.x, row.closed_form) << "\n";
    out << "  cone generators: "
        << (row.dl_pos ? "DL-positive" : "not DL-positive") << "\n";
    out << "  K-homology images: "
        << (row.js_pos ? "positive" : "not positive") << "\n";
    out << "  span witness (map): " << witness_str(row.span_map) << "\n";
    out << "  span witness (strict): " << witness_str(row.span_strict)
        << "\n";
  }
  out << "\n";
  out << "published claim 1: \"" << report.claims[0] << "\"\n";
  out << "published claim 2: \"" << report.claims[1] << "\"\n";
  auto candidate_line = [&out](const char* label,
                               const std::vector<Int>& xs) {
    out << "computed candidates (x <= 11, d = 0, " << label << " mode):";
    if (xs.empty()) {
      out << " none";
    } else {
      for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? ", x = " : " x = ") << xs[i];
    }
    out << "\n";
  };
  candidate_line("map", report.map_candidates);
  candidate_line("strict", report.strict_candidates);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact K-theory invariants for dimension drop interval "
               "algebras"};
  app.require_subcommand(1);
  int rc = 0;

  auto add_format = [](CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_mode = [](CLI::App* sub, std::string& mode) {
    sub->add_option("--mode", mode,
                    "triple equality mode (env KKDROP_EQUALITY)")
        ->check(CLI::IsMember({"map", "strict"}));
  };

  std::string algebra_lit, element_lit, kind_name, coeff_lit;
  CommonArgs common;
  // CLI11 drops env values that fail validation, which would silently fall
  // back to map mode; reject bad values up front instead.
  if (const char* env_mode = std::getenv("KKDROP_EQUALITY")) {
    const std::string value(env_mode);
    if (value != "map" && value != "strict") {
      err << "error: KKDROP_EQUALITY must be \"map\" or \"strict\", got \""
          << value << "\"\n";
      return 1;
    }
    common.mode = value;
  }
  Int x_max = -1;
  bool include_torsion = false;

  CLI::App* ktheory = app.add_subcommand(
      "ktheory", "mod-p K-theory report for one algebra");
  ktheory->add_option("--algebra", algebra_lit, "algebra literal m0,m,m1")
      ->required();
  ktheory->add_option("--p", common.p, "coefficient modulus (default m)");
  add_format(ktheory, common.format);
  ktheory->callback(
      [&] { cmd_ktheory(out, algebra_lit, common.p, common.format); });

  CLI::App* exactness = app.add_subcommand(
      "exactness", "verify the Bockstein exact sequence by enumeration");
  exactness->add_option("--algebra", algebra_lit, "algebra literal m0,m,m1")
      ->required();
  exactness->add_option("--p", common.p, "coefficient modulus (default m)");
  add_format(exactness, common.format);
  exactness->callback(
      [&] { rc = cmd_exactness(out, algebra_lit, common.p, common.format); });

  CLI::App* cone = app.add_subcommand(
      "cone-decompose", "write a positive element over the cone generators");
  cone->add_option("--algebra", algebra_lit, "algebra literal m0,m,m1")
      ->required();
  cone->add_option("--p", common.p, "coefficient modulus (default m)");
  cone->add_option("--element", element_lit, "element literal a,b,c")
      ->required();
  add_format(cone, common.format);
  cone->callback([&] {
    cmd_cone_decompose(out, algebra_lit, common.p, element_lit,
                       common.format);
  });

  CLI::App* triple = app.add_subcommand(
      "triple", "induced morphism triple of a basic homomorphism");
  triple->add_option("--kind", kind_name, "delta0|delta1|id|idbar")
      ->required()
      ->check(CLI::IsMember({"delta0", "delta1", "id", "idbar"}));
  triple->add_option("--source", common.source, "source literal m0,m,m1")
      ->required();
  triple->add_option("--target", common.target, "target literal m0,n,m1")
      ->required();
  triple->add_option("--p", common.p, "modulus (default lcm(m,n))");
  add_format(triple, common.format);
  triple->callback([&] {
    rc = cmd_triple(out, kind_name, common.source, common.target, common.p,
                    common.format);
  });

  CLI::App* canon = app.add_subcommand(
      "kk-canon", "canonical coordinates of a KK element");
  canon->add_option("--source", common.source, "source literal m0,m,m1")
      ->required();
  canon->add_option("--target", common.target, "target literal m0,n,m1")
      ->required();
  canon->add_option("--coeffs", coeff_lit, "coefficients d0,d1,id,idbar")
      ->required();
  add_format(canon, common.format);
  canon->callback([&] {
    cmd_kk_canon(out, common.source, common.target, coeff_lit, common.format);
  });

  CLI::App* lift = app.add_subcommand(
      "lift-check", "order, K-homology and span verdicts for one element");
  lift->add_option("--source", common.source, "source literal m0,m,m1")
      ->required();
  lift->add_option("--target", common.target, "target literal m0,n,m1")
      ->required();
  lift->add_option("--p", common.p, "modulus (default lcm(m,n))");
  lift->add_option("--coeffs", coeff_lit, "coefficients d0,d1,id,idbar")
      ->required();
  add_mode(lift, common.mode);
  add_format(lift, common.format);
  lift->callback([&] { cmd_lift_check(out, common, coeff_lit); });

  CLI::App* search = app.add_subcommand(
      "search", "sweep the x-family for order-positive non-span elements");
  search->add_option("--source", common.source, "source literal m0,m,m1")
      ->required();
  search->add_option("--target", common.target, "target literal m0,n,m1")
      ->required();
  search->add_option("--p", common.p, "modulus (default lcm(m,n))");
  search->add_option("--x-max", x_max, "largest x to try (default m-1)");
  search->add_flag("--torsion", include_torsion,
                   "sweep all torsion parameters d");
  add_mode(search, common.mode);
  add_format(search, common.format);
  search->callback([&] { cmd_search(out, common, x_max, include_torsion); });

  CLI::App* audit = app.add_subcommand(
      "audit", "recompute the published counterexample discussion");
  add_format(audit, common.format);
  audit->callback([&] { cmd_audit(out, common.format); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace kkdrop
