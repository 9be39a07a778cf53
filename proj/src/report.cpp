#include "qsei/report.hpp"

namespace qsei {

Json to_json(const Weights& w) {
  return Json{{"k", w.k}, {"l", w.l}, {"s", w.s}, {"parity", std::string(to_string(w.parity))}};
}

Json to_json(const GeneratorSet& g) {
  Json j{{"weights", to_json(g.weights)}, {"a", to_string(g.a)}};
  if (g.b) j["b"] = to_string(*g.b);
  j[g.parity() == Parity::even ? "c+" : "c-"] = to_string(g.c);
  return j;
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"equation", r.tag},
                          {"relation", c.id},
                          {"lhs", c.lhs_text},
                          {"rhs", c.rhs_text},
                          {"lhs_normal_form", to_string(c.lhs)},
                          {"rhs_normal_form", to_string(c.rhs)},
                          {"pass", c.pass}});
  }
  return Json{{"equation", r.tag},
              {"weights", to_json(r.weights)},
              {"passed", r.passed()},
              {"total", r.checks.size()},
              {"pass", r.all_pass()},
              {"checks", std::move(checks)}};
}

Json to_json(const GeneratorWord& w, const NormalMonomial& mono) {
  return Json{{"monomial", to_string(mono)},
              {"word", to_string(w)},
              {"lambda", w.lambda.to_string()},
              {"n", w.n},
              {"t", w.t},
              {"b_power", w.b_power},
              {"a_power", w.a_power},
              {"c_power", w.c_power},
              {"conjugated", w.conjugated}};
}

Json to_json(const ResidualEntry& e) {
  return Json{{"instance", e.instance},
              {"relation", e.relation},
              {"residual", e.residual},
              {"tolerance", e.tolerance},
              {"pass", e.pass}};
}

Json to_json(const std::vector<ResidualEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries) arr.push_back(to_json(e));
  return arr;
}

Json to_json(const AbelianGroup<KInt>& g) {
  return Json{{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", to_string(g)}};
}

Json to_json(const IndexMap& d) {
  std::vector<KInt> column(d.matrix.data(), d.matrix.data() + d.matrix.size());
  return Json{{"parity", std::string(to_string(d.parity))},
              {"l", d.l},
              {"delta", column},
              {"symbolic", d.symbolic},
              {"doubled_truncation", d.doubled},
              {"stable", d.stable()}};
}

Json to_json(const KGroups& k) {
  return Json{{"K0", to_json(k.k0)},
              {"K1", to_json(k.k1)},
              {"smith_diagonal", k.smith_diagonal},
              {"delta_injective", k.delta_injective}};
}

Json to_json(const PullbackReport& p) {
  auto entries = [](const std::vector<DecayEntry>& v) {
    Json arr = Json::array();
    for (const auto& e : v)
      arr.push_back(Json{{"label", e.label},
                         {"threshold_index", e.threshold_index},
                         {"max_beyond", e.max_beyond},
                         {"monotone", e.monotone}});
    return arr;
  };
  return Json{{"parity", std::string(to_string(p.parity))},
              {"l", p.l},
              {"eps", p.eps},
              {"lift_differences", entries(p.lift_differences)},
              {"symbol_differences", entries(p.symbol_differences)},
              {"pass", p.pass()}};
}

Json to_json(const CokernelMapCheck& c) {
  return Json{{"box_points", c.box_points},   {"classes", c.classes},       {"well_defined", c.well_defined},
              {"injective", c.injective},     {"surjective", c.surjective}, {"homomorphism", c.homomorphism}};
}

}  // namespace qsei
