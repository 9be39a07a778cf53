#include "qsei/cli.hpp"

#include "qsei/errors.hpp"
#include "qsei/parser.hpp"
#include "qsei/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace qsei {

namespace {

struct Config {
  std::string format = "text";
  double q = kDefaultQ;
  int dim = kDefaultDim;
  double tol = kDefaultTolerance;
};

struct Outcome {
  Json result;
  std::string text;
  bool pass = true;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

Json config_json(const Config& c) { return Json{{"q", c.q}, {"N", c.dim}, {"tolerance", c.tol}}; }

void check_config(const Config& c) {
  if (!(c.q > 0.0 && c.q < 1.0)) throw precondition_error("q must lie in (0,1)");
  if (c.dim < 1) throw precondition_error("N must be positive");
  if (!(c.tol > 0.0)) throw precondition_error("tolerance must be positive");
}

Weights weights_from(std::optional<int> k, std::optional<std::string> parity, int l) {
  if (k) return Weights::make(*k, l);
  if (parity) return Weights::canonical(parse_parity(*parity), l);
  throw precondition_error("either --k or --parity is required");
}

// ---------------------------------------------------------------- commands

Outcome cmd_normalize(const std::string& text) {
  const AlgebraElement x = parse_element(text);
  return {Json{{"input", text}, {"normal_form", to_string(x)}}, to_string(x) + "\n", true};
}

Outcome cmd_star(const std::string& text) {
  const AlgebraElement x = star(parse_element(text));
  return {Json{{"input", text}, {"star", to_string(x)}}, to_string(x) + "\n", true};
}

Outcome cmd_degree(const Weights& w, const std::string& text) {
  const AlgebraElement x = parse_element(text);
  if (x.is_zero()) throw precondition_error("the zero element has no degree");
  std::optional<int> deg;
  for (const auto& [mono, c] : x.terms()) {
    const int d = degree(w, mono);
    if (deg && *deg != d) throw precondition_error(to_string(x) + " is not homogeneous");
    deg = d;
  }
  return {Json{{"input", text}, {"weights", to_json(w)}, {"degree", *deg}}, std::to_string(*deg) + "\n", true};
}

Outcome cmd_is_coinvariant(const Weights& w, const std::string& text) {
  const AlgebraElement x = parse_element(text);
  const AlgebraElement part = coinvariant_part(w, x);
  const bool yes = part == x;
  std::string t = yes ? "true\n" : "false (coinvariant part: " + to_string(part) + ")\n";
  return {Json{{"input", text}, {"weights", to_json(w)}, {"coinvariant", yes}, {"coinvariant_part", to_string(part)}},
          t, yes};
}

Outcome cmd_generators(const Weights& w) {
  const GeneratorSet g = generators(w);
  std::ostringstream os;
  os << to_string(w.parity) << " weights k=" << w.k << " l=" << w.l << "\n";
  os << "  a  = " << to_string(g.a) << "\n";
  if (g.b) os << "  b  = " << to_string(*g.b) << "\n";
  os << "  " << letter_name(Letter::c, w.parity) << " = " << to_string(g.c) << "\n";
  return {to_json(g), os.str(), true};
}

Outcome cmd_verify(const Weights& w) {
  const RelationReport rep = verify_relations(w);
  std::ostringstream os;
  os << rep.tag << " relations, k=" << w.k << " l=" << w.l << "\n";
  for (const auto& c : rep.checks) {
    os << "  " << verdict(c.pass) << "  " << c.lhs_text << " = " << c.rhs_text << "\n";
    if (!c.pass) os << "        " << to_string(c.lhs) << "  !=  " << to_string(c.rhs) << "\n";
  }
  os << rep.passed() << "/" << rep.checks.size() << " relations pass\n";
  return {to_json(rep), os.str(), rep.all_pass()};
}

Outcome cmd_factorize(const Weights& w, const std::string& text) {
  const AlgebraElement x = parse_element(text);
  if (x.size() != 1) throw precondition_error("factorize expects a single monomial, got " + to_string(x));
  const auto& [mono, coeff] = *x.terms().begin();
  GeneratorWord word = factorize_with_conjugates(w, mono);
  word.lambda = coeff * word.lambda;
  const bool ok = word.lambda * value(word, generators(w)) == x;
  Json j = to_json(word, mono);
  j["input"] = text;
  j["reconstructs"] = ok;
  std::string t = to_string(x) + " = (" + word.lambda.to_string() + ") " + to_string(word) + "\n";
  return {std::move(j), std::move(t), ok};
}

struct RepSection {
  Json json;
  std::string text;
  bool pass = true;
};

RepSection rep_section(Parity parity, int l, const Config& cfg) {
  RepSection s;
  std::ostringstream os;
  os << to_string(parity) << " l=" << l << " q=" << cfg.q << " N=" << cfg.dim << "\n";

  Json reps = Json::array();
  for (int r = 1; r <= l; ++r) {
    const RepInstance inst{parity, l, r, cfg.q, cfg.dim};
    const auto entries = relation_residuals(inst, cfg.tol);
    const bool kernel = kernel_conditions_hold(inst);
    bool all = kernel;
    double worst = 0.0;
    for (const auto& e : entries) {
      all = all && e.pass;
      worst = std::max(worst, e.residual);
    }
    os << "  pi_" << r << ": max residual " << sci(worst) << ", kernel conditions " << (kernel ? "hold" : "FAIL")
       << "  " << verdict(all) << "\n";
    for (const auto& e : entries)
      if (!e.pass) os << "      " << e.relation << " residual " << sci(e.residual) << "\n";
    reps.push_back(Json{{"r", r}, {"kernel_conditions", kernel}, {"residuals", to_json(entries)}, {"pass", all}});
    s.pass = s.pass && all;
  }

  constexpr double theta = 0.125;
  const auto scalar = scalar_relation_residuals(theta, parity, l, cfg.q, cfg.tol);
  bool scalar_ok = true;
  for (const auto& e : scalar) scalar_ok = scalar_ok && e.pass;
  os << "  one-dimensional (theta=" << theta << ")  " << verdict(scalar_ok) << "\n";
  s.pass = s.pass && scalar_ok;

  Json inter = nullptr;
  if (parity == Parity::odd || l % 2 == 1) {
    const auto entries = intertwiner_check(Weights::canonical(parity, l), cfg.q, cfg.dim, cfg.tol);
    bool ok = true;
    double worst = 0.0;
    for (const auto& e : entries) {
      ok = ok && e.pass;
      worst = std::max(worst, e.residual);
    }
    os << "  intertwiner: max residual " << sci(worst) << "  " << verdict(ok) << "\n";
    inter = Json{{"residuals", to_json(entries)}, {"pass", ok}};
    s.pass = s.pass && ok;
  } else {
    os << "  intertwiner: skipped (no even weights with l=" << l << ")\n";
  }

  s.json = Json{{"parity", std::string(to_string(parity))},
                {"l", l},
                {"representations", std::move(reps)},
                {"scalar", Json{{"theta", theta}, {"residuals", to_json(scalar)}, {"pass", scalar_ok}}},
                {"intertwiner", std::move(inter)},
                {"pass", s.pass}};
  s.text = os.str();
  return s;
}

bool same_group(const AbelianGroup<KInt>& a, const AbelianGroup<KInt>& b) { return a == b; }

RepSection ktheory_section(Parity parity, int l, const Config& cfg) {
  RepSection s;
  std::ostringstream os;
  os << to_string(parity) << " l=" << l << " q=" << cfg.q << " N=" << cfg.dim << "\n";

  const IndexMap delta = index_map(parity, l, cfg.q, cfg.dim);
  const KGroups k = assemble_kgroups(delta);
  const KGroups want = expected_kgroups(parity, l);
  const bool groups_ok = same_group(k.k0, want.k0) && same_group(k.k1, want.k1);

  os << "  delta = (";
  for (int r = 0; r < l; ++r) os << (r ? ", " : "") << delta.matrix(r, 0);
  os << ")^T  " << (delta.stable() ? "stable under doubling N" : "UNSTABLE") << "\n";
  os << "  K0 = " << to_string(k.k0) << "\n";
  os << "  K1 = " << to_string(k.k1) << "\n";
  os << "  expected K0 = " << to_string(want.k0) << ", K1 = " << to_string(want.k1) << "  " << verdict(groups_ok)
     << "\n";

  Json lifts = Json::array();
  bool lifts_ok = true;
  for (const auto& lift : coisometry_lift(parity, l, cfg.q, cfg.dim)) {
    const bool ok = lift.deviation < cfg.tol;
    lifts_ok = lifts_ok && ok;
    os << "  " << (lift.step == 1 ? "U_" : "V_") << lift.r << " from coisometry formula: deviation "
       << sci(lift.deviation) << "  " << verdict(ok) << "\n";
    lifts.push_back(Json{{"r", lift.r}, {"step", lift.step}, {"deviation", lift.deviation}, {"pass", ok}});
  }

  const PullbackReport pb = pullback_check(parity, l, cfg.q, cfg.dim, cfg.tol);
  os << "  pullback decay  " << verdict(pb.pass()) << "\n";

  const CokernelMapCheck cm = check_cokernel_map(parity, l);
  const bool cm_ok = cm.well_defined && cm.injective && cm.surjective && cm.homomorphism;
  os << "  cokernel map on " << cm.box_points << " box points, " << cm.classes << " classes  " << verdict(cm_ok)
     << "\n";

  s.pass = delta.stable() && groups_ok && lifts_ok && pb.pass() && cm_ok;
  s.json = Json{{"parity", std::string(to_string(parity))},
                {"l", l},
                {"index_map", to_json(delta)},
                {"kgroups", to_json(k)},
                {"expected", to_json(want)},
                {"kgroups_match", groups_ok},
                {"coisometry_lifts", std::move(lifts)},
                {"pullback", to_json(pb)},
                {"cokernel_map", to_json(cm)},
                {"pass", s.pass}};
  s.text = os.str();
  return s;
}

Outcome cmd_rep_check(Parity parity, int l, const Config& cfg) {
  check_config(cfg);
  RepSection s = rep_section(parity, l, cfg);
  return {std::move(s.json), std::move(s.text), s.pass};
}

Outcome cmd_ktheory(Parity parity, int l, const Config& cfg) {
  check_config(cfg);
  RepSection s = ktheory_section(parity, l, cfg);
  return {std::move(s.json), std::move(s.text), s.pass};
}

Outcome cmd_report_all(int lmax, const Config& cfg) {
  check_config(cfg);
  if (lmax < 1) throw precondition_error("--lmax must be positive");
  Outcome o;
  o.result = Json::array();
  std::ostringstream os;
  for (Parity parity : {Parity::even, Parity::odd}) {
    for (int l = 1; l <= lmax; ++l) {
      Json entry{{"parity", std::string(to_string(parity))}, {"l", l}};
      bool pass = true;
      os << "== " << to_string(parity) << " l=" << l << "\n";
      if (parity == Parity::odd || l % 2 == 1) {
        const Weights w = Weights::canonical(parity, l);
        Outcome g = cmd_generators(w);
        Outcome v = cmd_verify(w);
        os << g.text << v.text;
        entry["generators"] = std::move(g.result);
        entry["relations"] = std::move(v.result);
        pass = pass && v.pass;
      } else {
        entry["generators"] = nullptr;
        entry["relations"] = nullptr;
        os << "no even weights with l=" << l << "; symbolic checks skipped\n";
      }
      RepSection r = rep_section(parity, l, cfg);
      RepSection k = ktheory_section(parity, l, cfg);
      os << r.text << k.text;
      entry["representations"] = std::move(r.json);
      entry["ktheory"] = std::move(k.json);
      pass = pass && r.pass && k.pass;
      entry["pass"] = pass;
      o.pass = o.pass && pass;
      o.result.push_back(std::move(entry));
    }
  }
  os << (o.pass ? "all checks pass\n" : "some checks FAILED\n");
  o.text = os.str();
  return o;
}

void emit(const Config& cfg, const std::string& command, const Outcome& o, std::ostream& out) {
  if (cfg.format == "json") {
    const Json doc{{"schema_version", kReportSchemaVersion},
                   {"command", command},
                   {"config", config_json(cfg)},
                   {"result", o.result},
                   {"pass", o.pass}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toolkit for the quantum Seifert manifold and its coinvariant subalgebras", "qsei"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--q", cfg.q, "Deformation parameter in (0,1)")->envname("QSEI_Q");
  app.add_option("--N", cfg.dim, "Truncation dimension")->envname("QSEI_N");
  app.add_option("--tol", cfg.tol, "Numeric tolerance")->envname("QSEI_TOL");

  std::string expr;
  std::optional<int> k;
  std::optional<std::string> parity;
  int l = 1;
  int lmax = 5;

  std::function<Outcome()> action;
  std::string command;

  auto add_expr = [&](CLI::App* sub, const char* what) { sub->add_option("expr", expr, what)->required(); };
  auto add_kl = [&](CLI::App* sub) {
    sub->add_option("--k", k, "Weight of z0")->required();
    sub->add_option("--l", l, "Weight of z1")->required();
  };
  auto add_pl = [&](CLI::App* sub) {
    sub->add_option("--parity", parity, "even or odd")->required();
    sub->add_option("--l", l, "Weight of z1")->required();
  };

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
  add_expr(normalize, "Expression");
  normalize->callback([&] { action = [&] { return cmd_normalize(expr); }; });

  auto* star_cmd = app.add_subcommand("star", "Print the adjoint of an expression in normal form");
  add_expr(star_cmd, "Expression");
  star_cmd->callback([&] { action = [&] { return cmd_star(expr); }; });

  auto* degree_cmd = app.add_subcommand("degree", "Grading degree of a homogeneous expression");
  add_kl(degree_cmd);
  add_expr(degree_cmd, "Expression");
  degree_cmd->callback([&] { action = [&] { return cmd_degree(Weights::make(*k, l), expr); }; });

  auto* coinv = app.add_subcommand("is-coinvariant", "Whether an expression has degree 0");
  add_kl(coinv);
  add_expr(coinv, "Expression");
  coinv->callback([&] { action = [&] { return cmd_is_coinvariant(Weights::make(*k, l), expr); }; });

  auto* gens = app.add_subcommand("generators", "Generators of the coinvariant subalgebra");
  add_kl(gens);
  gens->callback([&] { action = [&] { return cmd_generators(Weights::make(*k, l)); }; });

  auto* verify = app.add_subcommand("verify-relations", "Check the defining relations symbolically");
  verify->add_option("--parity", parity, "even or odd (k = 2 or k = 1)");
  verify->add_option("--k", k, "Weight of z0");
  verify->add_option("--l", l, "Weight of z1")->required();
  verify->callback([&] { action = [&] { return cmd_verify(weights_from(k, parity, l)); }; });

  auto* fact = app.add_subcommand("factorize", "Write a coinvariant monomial as a generator word");
  add_kl(fact);
  add_expr(fact, "Monomial");
  fact->callback([&] { action = [&] { return cmd_factorize(Weights::make(*k, l), expr); }; });

  auto* rep = app.add_subcommand("rep-check", "Residuals of the relations in truncated representations");
  add_pl(rep);
  rep->callback([&] { action = [&] { return cmd_rep_check(parse_parity(*parity), l, cfg); }; });

  auto* kt = app.add_subcommand("ktheory", "Index map and K-groups");
  add_pl(kt);
  kt->callback([&] { action = [&] { return cmd_ktheory(parse_parity(*parity), l, cfg); }; });

  auto* all = app.add_subcommand("report-all", "Every check for both parities and l = 1..lmax");
  all->add_option("--lmax", lmax, "Largest l")->capture_default_str();
  all->callback([&] { action = [&] { return cmd_report_all(lmax, cfg); }; });

  std::vector<const char*> argv{"qsei"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::parse_error;
  }
  command = app.get_subcommands().front()->get_name();

  try {
    const Outcome o = action();
    emit(cfg, command, o, out);
    return o.pass ? exit_code::ok : exit_code::check_failed;
  } catch (const parse_error& e) {
    err << "parse error at offset " << e.position() << ": " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const precondition_error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_code::precondition;
  } catch (const std::domain_error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_code::precondition;
  }
}

}  // namespace qsei
