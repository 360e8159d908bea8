#pragma once

// Command-line surface. Every subcommand builds one report document: a
// human-readable rendering by default, JSON with --json. Exact rationals are
// serialized as "p/q" strings; floats are advisory duplicates.
//
// Exit codes: 0 success, 1 usage error, 2 assertion failure, 3 numerical failure.

#include "dhymlab/reproduce.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dhymlab::cli {

inline constexpr const char* kToolName = "dhymlab";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kAssertion = 2, kNumerical = 3 };

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- parsing -------------------------------------------------------------

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<Rational> parse_rationals(const std::string& s, const std::string& what) {
  std::vector<Rational> out;
  try {
    for (const auto& tok : split(s, ',')) out.push_back(Rational::parse(tok));
  } catch (const std::exception& e) {
    throw UsageError("malformed " + what + " coefficients '" + s + "': " + e.what());
  }
  return out;
}

inline std::vector<std::int64_t> parse_integers(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& r : parse_rationals(s, what)) {
    if (!r.is_integer() || !r.numerator().fits_slong_p())
      throw UsageError(what + " coefficients must be integers, got '" + s + "'");
    out.push_back(r.numerator().get_si());
  }
  return out;
}

/// 1-based comma-separated indices; "" is the empty set.
inline std::vector<std::size_t> parse_parabolic(const std::string& s) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  for (auto v : parse_integers(s, "parabolic")) {
    if (v < 1) throw UsageError("parabolic indices are 1-based, got " + std::to_string(v));
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

/// "0", "pi", or "w:re:im" with rational re, im.
inline ExactPhase parse_phase_target(const std::string& s) {
  if (s == "0") return ExactPhase::zero();
  if (s == "pi") return ExactPhase::pi();
  auto parts = split(s, ':');
  if (parts.size() != 3)
    throw UsageError("phase target must be 0, pi, or w:re:im (exact winding and Gaussian-rational ray), got '" + s + "'");
  try {
    auto w = Rational::parse(parts[0]);
    if (!w.is_integer() || !w.numerator().fits_slong_p()) throw std::invalid_argument("winding must be an integer");
    GaussianRational ray{Rational::parse(parts[1]), Rational::parse(parts[2])};
    if (ray.is_zero()) throw std::invalid_argument("ray must be nonzero");
    return {w.numerator().get_si(), ray};
  } catch (const std::exception& e) {
    throw UsageError("bad phase target '" + s + "': " + e.what());
  }
}

// ---- serialization -------------------------------------------------------

inline Json to_json(const Rational& r) { return r.str(); }
inline Json to_json(const Integer& z) { return z.get_str(); }
inline Json to_json(const GaussianRational& z) { return Json{{"re", z.re.str()}, {"im", z.im.str()}}; }
inline Json to_json(const ExactPhase& p) {
  return Json{{"winding", p.winding()}, {"ray", to_json(p.ray())}, {"float", phase_to_float(p)}};
}
inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}
inline Json to_json(const Weight& w) { return to_json(w.coords); }
inline Json to_json(const Root& r) { return Json(r.coeffs); }

inline std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

inline std::string fmt(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + ")";
}

inline std::string fmt(const ExactPhase& p) {
  return "winding " + std::to_string(p.winding()) + ", ray (" + p.ray().re.str() + ", " + p.ray().im.str() +
         "), float " + fmt_double(phase_to_float(p));
}

inline std::string fmt(const GaussianRational& z) { return z.re.str() + (z.im.sign() < 0 ? " - " : " + ") + abs(z.im).str() + "i"; }

inline std::string root_str(const Root& r) {
  std::string s;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (r.coeffs[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (r.coeffs[i] != 1) s += std::to_string(r.coeffs[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s;
}

/// One report per invocation.
struct Report {
  Report() = default;
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  Json input = Json::object();
  Json results = Json::object();
  std::vector<std::string> text;
  std::optional<bool> passed;

  Json document() const {
    Json d{{"tool", kToolName}, {"version", kVersion}, {"command", command}, {"input", input}, {"results", results}};
    if (passed) d["passed"] = *passed;
    return d;
  }

  void render(std::ostream& out, bool json) const {
    if (json) {
      out << document().dump(2) << "\n";
      return;
    }
    out << kToolName << " " << kVersion << " -- " << command << "\n";
    for (const auto& line : text) out << line << "\n";
    if (passed) out << (*passed ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
  }
};

// ---- context shared by the geometric subcommands -------------------------

struct GeometryOptions {
  std::string family = "A";
  int rank = 2;
  std::string parabolic;
  std::string omega;

  RootSystem root_system() const {
    try {
      return build_root_system({parse_family(family), rank});
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  FlagVariety flag() const {
    try {
      return make_flag(root_system(), parse_parabolic(parabolic));
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  /// Defaults to the anticanonical class when --omega is not given.
  KahlerClass kahler(const FlagVariety& fv) const {
    try {
      if (omega.empty()) return KahlerClass::from_weight(fv, fv.delta_P());
      return {fv, parse_rationals(omega, "Kahler")};
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  void echo(Report& r, const FlagVariety& fv, const KahlerClass* kc) const {
    r.input["lie_type"] = fv.root_system().lie_type().name();
    Json I = Json::array();
    for (auto i : fv.parabolic_set()) I.push_back(i + 1);
    r.input["parabolic_set"] = I;
    if (kc) r.input["kahler_coeffs"] = to_json(kc->coeffs());
    r.text.push_back("type " + fv.root_system().lie_type().name() + ", parabolic set {" +
                     [&] {
                       std::string s;
                       for (std::size_t k = 0; k < fv.parabolic_set().size(); ++k)
                         s += (k ? "," : "") + std::to_string(fv.parabolic_set()[k] + 1);
                       return s;
                     }() +
                     "}" + (kc ? ", omega " + fmt(kc->coeffs()) : ""));
    if (fv.is_point()) r.text.push_back("note: parabolic set is all of Delta; X_P is a point");
    r.results["point_variety"] = fv.is_point();
  }
};

// ---- subcommands ---------------------------------------------------------

inline Report cmd_roots(const GeometryOptions& g) {
  Report r{"roots"};
  auto rs = g.root_system();
  r.input["lie_type"] = rs.lie_type().name();
  Json cartan = Json::array();
  for (const auto& row : rs.cartan()) cartan.push_back(row);
  Json roots = Json::array();
  for (const auto& b : rs.positive_roots()) roots.push_back(to_json(b));
  r.results["cartan"] = cartan;
  r.results["symmetrizer"] = to_json(rs.symmetrizer());
  r.results["positive_root_count"] = rs.positive_roots().size();
  r.results["positive_roots"] = roots;
  r.results["highest_root"] = to_json(rs.highest_root());
  r.results["rho_plus"] = to_json(rho_plus(rs));

  r.text.push_back("type " + rs.lie_type().name());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    std::string row = i == 0 ? "cartan    [" : "          [";
    for (std::size_t j = 0; j < rs.rank(); ++j) row += (j ? " " : "") + std::to_string(rs.cartan()[i][j]);
    r.text.push_back(row + "]");
  }
  r.text.push_back("symmetrizer " + fmt(rs.symmetrizer()));
  std::string list;
  for (const auto& b : rs.positive_roots()) list += (list.empty() ? "" : ", ") + root_str(b);
  r.text.push_back("positive roots (" + std::to_string(rs.positive_roots().size()) + "): " + list);
  r.text.push_back("highest root " + root_str(rs.highest_root()));
  return r;
}

inline Report cmd_flag(const GeometryOptions& g) {
  Report r{"flag"};
  auto fv = g.flag();
  g.echo(r, fv, nullptr);
  Json phi = Json::array();
  std::string list;
  for (const auto& b : fv.phi_I_plus()) {
    phi.push_back(to_json(b));
    list += (list.empty() ? "" : ", ") + root_str(b);
  }
  Json anti = Json::array();
  std::string anti_s;
  for (std::size_t k = 0; k < fv.picard_rank(); ++k) {
    anti.push_back(Json{{"index", fv.picard_indices()[k] + 1}, {"l", fv.anticanonical_coeffs()[k].get_str()}});
    anti_s += (anti_s.empty() ? "" : ", ") + std::string("l_") + std::to_string(fv.picard_indices()[k] + 1) + " = " +
              fv.anticanonical_coeffs()[k].get_str();
  }
  r.results["phi_I_plus"] = phi;
  r.results["dim_c"] = fv.dim_c();
  r.results["delta_P"] = to_json(fv.delta_P());
  r.results["anticanonical_coeffs"] = anti;
  r.text.push_back("Phi_I+ (" + std::to_string(fv.dim_c()) + "): " + list);
  r.text.push_back("dim_C = " + std::to_string(fv.dim_c()));
  r.text.push_back("delta_P = " + fmt(fv.delta_P().coords));
  r.text.push_back("anticanonical: " + anti_s);
  if (!fv.is_point()) {
    auto kc = KahlerClass::from_weight(fv, fv.delta_P());
    r.results["anticanonical_volume"] = to_json(volume(kc));
    r.text.push_back("Vol(X_P, c1) = " + volume(kc).str());
  }
  return r;
}

inline Report cmd_phase(const GeometryOptions& g, const std::string& xi_s) {
  Report r{"phase"};
  auto fv = g.flag();
  auto kc = g.kahler(fv);
  g.echo(r, fv, &kc);
  Weight xi;
  try {
    xi = fv.weight_from_picard(parse_rationals(xi_s, "xi"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  r.input["xi"] = to_json(xi);
  auto q = eigenvalues(kc, xi);
  auto p = exact_phase(kc, xi);
  r.results["eigenvalues"] = to_json(q);
  r.results["contraction"] = to_json(contraction(kc, xi));
  r.results["phase"] = to_json(p);
  r.results["phase_mod_2pi"] = ray_label(p.ray());
  r.text.push_back("eigenvalues " + fmt(q));
  r.text.push_back("contraction = " + contraction(kc, xi).str());
  r.text.push_back("Theta = " + fmt(p));
  return r;
}

inline LineBundle parse_line(const FlagVariety& fv, const std::string& s) {
  try {
    return {fv, parse_integers(s, "line bundle")};
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline Report cmd_charge(const GeometryOptions& g, const std::string& line_s) {
  Report r{"charge"};
  auto fv = g.flag();
  auto kc = g.kahler(fv);
  g.echo(r, fv, &kc);
  auto L = parse_line(fv, line_s);
  r.input["line"] = L.coeffs();
  auto Z = central_charge(kc, L);
  r.results["n"] = Z.n;
  r.results["central_charge"] = to_json(Z.value);
  r.results["arg_float"] = principal_arg(Z.value);
  r.results["degree"] = to_json(degree(kc, L));
  r.text.push_back("n = " + std::to_string(Z.n));
  r.text.push_back("Z = " + fmt(Z.value));
  r.text.push_back("Arg Z = " + fmt_double(principal_arg(Z.value)));
  r.text.push_back("deg = " + degree(kc, L).str());
  return r;
}

inline Report cmd_classify(const GeometryOptions& g, const std::string& sum_s) {
  Report r{"classify"};
  auto fv = g.flag();
  auto kc = g.kahler(fv);
  g.echo(r, fv, &kc);
  std::vector<LineBundle> parts;
  for (const auto& tok : split(sum_s, ';'))
    if (!tok.empty()) parts.push_back(parse_line(fv, tok));
  if (parts.empty()) throw UsageError("--sum needs at least one summand");
  SumBundle E(std::move(parts));
  Json summands = Json::array();
  for (const auto& L : E.summands()) {
    auto p = exact_phase(kc, L);
    summands.push_back(Json{{"coeffs", L.coeffs()},
                            {"contraction", to_json(contraction(kc, L.weight()))},
                            {"slope", to_json(slope(kc, L))},
                            {"phase", to_json(p)}});
    r.text.push_back("summand " + fmt(L.weight().coords) + ": contraction " + contraction(kc, L.weight()).str() +
                     ", slope " + slope(kc, L).str() + ", Theta " + fmt(p));
  }
  r.input["summands"] = Json::array();
  for (const auto& L : E.summands()) r.input["summands"].push_back(L.coeffs());
  auto c = classify(kc, E);
  auto th = sum_phase(kc, E);
  r.results["summands"] = summands;
  r.results["hym"] = c.hym;
  r.results["dhym"] = c.dhym;
  r.results["type"] = to_string(c.type_label);
  r.results["stability"] = to_string(c.stability);
  r.results["slope"] = to_json(slope(kc, E));
  r.results["theta_hat"] = th ? Json{{"ray", to_json(*th)}, {"float", principal_arg(*th)}}
                              : Json(nullptr);
  r.text.push_back(std::string("type: ") + to_string(c.type_label) + " (hym " + (c.hym ? "yes" : "no") + ", dhym " +
                   (c.dhym ? "yes" : "no") + ")");
  r.text.push_back(std::string("stability: ") + to_string(c.stability));
  r.text.push_back("slope = " + slope(kc, E).str());
  r.text.push_back(th ? "Theta_hat = " + ray_label(*th) + " (mod 2pi)" : "Theta_hat undefined (trace integral vanishes)");
  if (fv.is_full_flag()) {
    r.results["h0_end"] = to_json(h0_end(E));
    r.text.push_back("h0(End E) = " + h0_end(E).get_str());
  }
  return r;
}

inline Report cmd_enumerate(const GeometryOptions& g, const std::string& dm, const std::string& target, std::int64_t bound) {
  Report r{"enumerate"};
  if (dm.empty() == target.empty()) throw UsageError("enumerate needs exactly one of --dm or --ltarget");
  if (bound < 1) throw UsageError("--bound must be >= 1");
  auto fv = g.flag();
  auto kc = g.kahler(fv);
  g.echo(r, fv, &kc);
  r.input["bound"] = bound;
  std::vector<LineBundle> found;
  if (!dm.empty()) {
    Rational m;
    try {
      m = Rational::parse(dm);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --dm value: ") + e.what());
    }
    r.input["dm"] = m.str();
    found = enumerate_D_m(kc, m, bound);
    r.text.push_back("D_m with m = " + m.str() + ", |s| <= " + std::to_string(bound));
  } else {
    auto t = parse_phase_target(target);
    r.input["ltarget"] = to_json(t);
    found = enumerate_L_target(kc, t, bound);
    r.text.push_back("L_target with target " + fmt(t) + ", |s| <= " + std::to_string(bound));
  }
  Json list = Json::array();
  for (const auto& L : found) {
    list.push_back(L.coeffs());
    std::string s;
    for (std::size_t k = 0; k < L.coeffs().size(); ++k) s += (k ? "," : "") + std::to_string(L.coeffs()[k]);
    r.text.push_back("  (" + s + ")");
  }
  r.results["count"] = found.size();
  r.results["bundles"] = list;
  r.text.push_back("count = " + std::to_string(found.size()));
  return r;
}

inline Report cmd_bigcell(const std::string& s, double step, double tol) {
  Report r{"bigcell-check"};
  auto v = parse_integers(s, "--s");
  if (v.size() != 2) throw UsageError("--s takes two integers s1,s2");
  if (!(step > 0) || !(tol > 0)) throw UsageError("--step and --tol must be positive");
  r.input["s"] = v;
  r.input["step"] = step;
  r.input["tolerance"] = tol;
  auto rep = bigcell::eigen_ratio_check(v[0], v[1], step, tol);
  r.results["numeric"] = rep.numeric;
  r.results["expected"] = rep.expected;
  r.results["max_error"] = rep.max_error;
  r.results["trace"] = rep.trace;
  r.results["expected_trace"] = rep.expected_trace;
  r.passed = rep.passed;
  auto list = [](const std::vector<double>& x) {
    std::string s = "{";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? ", " : "") + fmt_double(x[k]);
    return s + "}";
  };
  r.text.push_back("numeric eigenvalues  " + list(rep.numeric));
  r.text.push_back("expected eigenvalues " + list(rep.expected));
  r.text.push_back("max error " + fmt_double(rep.max_error) + " (tolerance " + fmt_double(tol) + ")");
  r.text.push_back("trace " + fmt_double(rep.trace) + " vs " + fmt_double(rep.expected_trace));
  return r;
}

inline Report cmd_reproduce() {
  Report r{"reproduce-paper"};
  auto rep = reproduce_paper();
  r.input["lie_type"] = "A2";
  r.input["parabolic_set"] = Json::array();
  r.input["kahler_coeffs"] = Json::array({"2", "2"});
  r.results["volume"] = rep.volume.str();
  r.results["delta_B"] = to_json(rep.delta_B);
  r.results["delta_pairings"] = to_json(rep.delta_pairings);
  Json bundles = Json::array();
  r.text.push_back("Vol = " + rep.volume.str());
  r.text.push_back("delta_B = " + fmt(rep.delta_B.coords) + ", pairings " + fmt(rep.delta_pairings));
  for (const auto& b : rep.bundles) {
    std::string parts;
    for (const auto& c : b.summands) parts += (parts.empty() ? "" : " + ") + detail::coeffs_str(c);
    bundles.push_back(Json{{"name", b.name},
                           {"summands", b.summands},
                           {"type", to_string(b.classification.type_label)},
                           {"stability", to_string(b.classification.stability)},
                           {"contractions", to_json(b.contractions)},
                           {"slope", b.slope.str()},
                           {"theta_hat", b.theta_hat_ray ? Json(ray_label(*b.theta_hat_ray)) : Json(nullptr)},
                           {"h0_end", b.h0_end.get_str()},
                           {"central_charge", to_json(b.charge)}});
    r.text.push_back(b.name + ": " + to_string(b.classification.type_label) + ", " +
                     to_string(b.classification.stability) + ", E = " + parts + ", contractions " +
                     fmt(b.contractions) + ", slope " + b.slope.str() + ", Theta_hat = " +
                     (b.theta_hat_ray ? ray_label(*b.theta_hat_ray) : std::string("undefined")) + ", h0(End) = " +
                     b.h0_end.get_str());
  }
  r.results["bundles"] = bundles;
  r.results["l_pi"] = rep.l_pi;
  Json claims = Json::array();
  for (const auto& c : rep.claims) {
    claims.push_back(Json{{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
    r.text.push_back(std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.id + ": " + c.statement +
                     (c.detail.empty() ? "" : " -- " + c.detail));
  }
  r.results["claims"] = claims;
  r.passed = rep.all_passed();
  return r;
}

// ---- entry point ---------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie-theoretic invariants of (deformed) Hermitian Yang-Mills instantons on flag varieties", kToolName};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Write a JSON document instead of the text report");
  app.set_version_flag("--version", kVersion);

  GeometryOptions g;
  auto geometry = [&](CLI::App* sub, bool with_omega) {
    sub->add_option("--type", g.family, "Lie family A..G")->capture_default_str();
    sub->add_option("--rank", g.rank, "Rank")->capture_default_str();
    sub->add_option("--parabolic", g.parabolic, "Comma-separated 1-based simple-root indices; empty = Borel");
    if (with_omega)
      sub->add_option("--omega", g.omega, "Kahler coefficients over Delta\\I (default: anticanonical class)");
    sub->add_flag("--json", json, "Write a JSON document");
  };

  auto* roots = app.add_subcommand("roots", "Root-system data");
  geometry(roots, false);
  auto* flag = app.add_subcommand("flag", "Flag-variety invariants");
  geometry(flag, false);

  std::string xi, line, sum, dm, ltarget, s = "2,6";
  std::int64_t bound = 100;
  double step = bigcell::kDefaultStep, tol = bigcell::kDefaultTolerance;

  auto* phase = app.add_subcommand("phase", "Exact Lagrangian phase of an invariant (1,1)-class");
  geometry(phase, true);
  phase->add_option("--xi", xi, "Class coefficients over Delta\\I")->required();
  auto* charge = app.add_subcommand("charge", "Central charge of a line bundle");
  geometry(charge, true);
  charge->add_option("--line", line, "Integer line-bundle coefficients")->required();
  auto* cls = app.add_subcommand("classify", "Instanton type and stability of a sum of line bundles");
  geometry(cls, true);
  cls->add_option("--sum", sum, "Summands separated by ';', e.g. \"2,6;3,4\"")->required();
  auto* en = app.add_subcommand("enumerate", "Level sets D_m and L_target");
  geometry(en, true);
  en->add_option("--dm", dm, "Exact contraction value m");
  en->add_option("--ltarget", ltarget, "Phase target: 0, pi, or w:re:im");
  en->add_option("--bound", bound, "Coefficient bound")->capture_default_str();
  auto* bc = app.add_subcommand("bigcell-check", "Finite-difference eigenvalue check on the big cell");
  bc->add_option("--s", s, "Line bundle s1,s2")->capture_default_str();
  bc->add_option("--step", step, "Finite-difference step")->capture_default_str();
  bc->add_option("--tol", tol, "Tolerance")->capture_default_str();
  bc->add_flag("--json", json, "Write a JSON document");
  auto* rp = app.add_subcommand("reproduce-paper", "Full reproduction report of the SL3/B constructions");
  rp->add_flag("--json", json, "Write a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    Report rep;
    if (roots->parsed()) rep = cmd_roots(g);
    else if (flag->parsed()) rep = cmd_flag(g);
    else if (phase->parsed()) rep = cmd_phase(g, xi);
    else if (charge->parsed()) rep = cmd_charge(g, line);
    else if (cls->parsed()) rep = cmd_classify(g, sum);
    else if (en->parsed()) rep = cmd_enumerate(g, dm, ltarget, bound);
    else if (bc->parsed()) rep = cmd_bigcell(s, step, tol);
    else rep = cmd_reproduce();
    rep.render(out, json);
    if (rep.passed && !*rep.passed) return kAssertion;
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const bigcell::NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kNumerical;
  }
}

} // namespace dhymlab::cli
