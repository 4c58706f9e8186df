#include "wgideal/report.hpp"

namespace wgideal {

using nlohmann::json;

json poly_json(const LaurentPoly& p) {
  json j = to_json(p);
  j["text"] = p.to_string();
  return j;
}

json words_json(const CoxeterSystem& sys, const std::vector<ElemId>& set) {
  json out = json::array();
  for (ElemId w : set) out.push_back(sys.format(w));
  return out;
}

json gens_json(const CoxeterSystem& sys, GenSet s) { return sys.gen_labels(s); }

json ideal_report_json(const IdealContext& ctx, const IdealReport& rep) {
  const CoxeterSystem& sys = *ctx.sys;
  json failures = json::array();
  for (const auto& f : rep.braid.failures) {
    failures.push_back({{"s", sys.matrix().labels[f.s]},
                        {"t", sys.matrix().labels[f.t]},
                        {"column", ctx.name(f.column)}});
  }
  json main1 = json::array();
  for (const auto& v : rep.main1_violations) main1.push_back({{"y", ctx.name(v.y)}, {"w", ctx.name(v.w)}});
  json anomalies = json::array();
  for (const auto& a : rep.anomalies) {
    anomalies.push_back({{"y", ctx.name(a.y)}, {"z", ctx.name(a.z)}, {"poly", poly_json(a.value)}});
  }
  json q = json::array();
  const int n = static_cast<int>(ctx.size());
  for (int w = 0; w < n; ++w)
    for (int y = 0; y < w; ++y) {
      if (ctx.q(y, w).is_zero()) continue;
      q.push_back({{"y", ctx.name(y)}, {"w", ctx.name(w)}, {"poly", poly_json(ctx.q(y, w))}});
    }
  return {{"isIdeal", rep.ok},
          {"ideal", words_json(sys, ctx.elems)},
          {"J", gens_json(sys, ctx.J)},
          {"quadraticOk", rep.braid.quadratic_ok},
          {"failures", failures},
          {"main1Violations", main1},
          {"directFormulaAgrees", rep.direct_formula_agrees},
          {"anomalies", anomalies},
          {"q", q},
          {"graph", graph_to_json(build_graph_from_ideal(ctx))}};
}

json choices_json(const IdealContext& ctx, const std::vector<ChoiceDisagreement>& d) {
  const auto& labels = ctx.sys->matrix().labels;
  json out = json::array();
  for (const auto& c : d) {
    out.push_back({{"z", ctx.name(c.z)},
                   {"chosen", labels[c.chosen]},
                   {"alternative", labels[c.alternative]},
                   {"y", ctx.name(c.y)},
                   {"withChosen", poly_json(c.with_chosen)},
                   {"withAlternative", poly_json(c.with_alternative)}});
  }
  return out;
}

json cells_json(const WGraph& g, const CellPartition& cells) {
  json list = json::array();
  for (std::size_t c = 0; c < cells.cells.size(); ++c) {
    json members = json::array();
    for (int v : cells.cells[c]) members.push_back(g.names[v]);
    json above = json::array();
    for (std::size_t d = 0; d < cells.cells.size(); ++d)
      if (d != c && cells.leq[c][d]) above.push_back(d);
    list.push_back({{"id", c}, {"members", members}, {"below", above}});
  }
  return {{"count", cells.cells.size()}, {"cells", list}};
}

json restriction_json(const IdealContext& ctx, const RestrictionReport& rep) {
  const CoxeterSystem& sys = *ctx.sys;
  json pieces = json::array();
  for (const auto& p : rep.pieces) {
    pieces.push_back({{"d", sys.format(p.d)},
                      {"ideal", words_json(sys, p.ideal)},
                      {"L", gens_json(sys, p.L)},
                      {"verified", p.verified},
                      {"inDoubleCosets", p.in_double_cosets},
                      {"unionOfCells", p.union_of_cells}});
  }
  return {{"K", gens_json(sys, rep.K)}, {"pieces", pieces}, {"tiles", rep.tiles}};
}

json biideal_report_json(const BiidealContext& b) {
  json out = ideal_report_json(b.left, is_wgraph_ideal(b.left));
  out["isIdeal"] = b.left_verified;
  out["isBiideal"] = b.ok();
  out["K"] = gens_json(*b.left.sys, b.K);
  out["prefilter"] = b.prefilter;
  out["rightVerified"] = b.right_verified;
  out["bimodule"] = b.bimodule;
  if (b.witness) {
    const auto& labels = b.left.sys->matrix().labels;
    out["witness"] = {{"s", labels[b.witness->s]},
                      {"t", labels[b.witness->t] + "~"},
                      {"column", b.left.name(b.witness->column)}};
  } else {
    out["witness"] = nullptr;
  }
  if (b.ok()) {
    out["qSymmetric"] = q_symmetric(b);
    out["twoSidedGraph"] = graph_to_json(two_sided_graph(b));
  }
  return out;
}

json kl_json(const CoxeterSystem& sys, const KlSpecialCases& kl) {
  json terms = json::array();
  for (const auto& [w, c] : kl.c_longest.terms()) terms.push_back({{"w", sys.format(w)}, {"coeff", poly_json(c)}});
  json per_k = json::array();
  for (const auto& k : kl.per_k) {
    json cells = json::array();
    for (const auto& c : k.dk_cells) cells.push_back(words_json(sys, c));
    per_k.push_back({{"K", gens_json(sys, k.K)},
                     {"cellsMeetingDK", cells},
                     {"dkUnionOfCells", k.dk_union_of_cells},
                     {"complementClosed", k.dk_complement_closed},
                     {"dkwkClosed", k.dkwk_closed}});
  }
  return {{"longestElement", terms},
          {"formulaOk", kl.formula_ok},
          {"eigenOk", kl.eigen_ok},
          {"barInvariant", kl.bar_invariant},
          {"parabolic", per_k}};
}

json classify_json(const Rank2Table& table) {
  const CoxeterSystem& sys = *table.sys;
  json accepted = json::array();
  for (const auto& r : table.rows) {
    if (!r.accepted) continue;
    json row = {{"ideal", words_json(sys, r.ideal)}, {"J", gens_json(sys, r.J)}, {"family", r.family}};
    if (table.mode == Rank2Mode::Biideal) row["K"] = gens_json(sys, r.K);
    accepted.push_back(row);
  }
  json mismatches = json::array();
  for (int i : table.mismatches) {
    const auto& r = table.rows[i];
    json row = {{"ideal", words_json(sys, r.ideal)},
                {"J", gens_json(sys, r.J)},
                {"computed", r.accepted},
                {"predicted", r.predicted}};
    if (table.mode == Rank2Mode::Biideal) row["K"] = gens_json(sys, r.K);
    mismatches.push_back(row);
  }
  return {{"m", table.m},
          {"mode", table.mode == Rank2Mode::Ideal ? "ideal" : "biideal"},
          {"candidates", table.rows.size()},
          {"accepted", accepted},
          {"mismatches", mismatches},
          {"agrees", table.agrees()}};
}

}  // namespace wgideal
