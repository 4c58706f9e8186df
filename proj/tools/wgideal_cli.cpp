// wgideal: decide W-graph ideals and biideals, print graphs, cells and
// parabolic reports. Exit 0 = yes, 1 = no, 2 = bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgideal/biideal.hpp"
#include "wgideal/classify.hpp"
#include "wgideal/error.hpp"
#include "wgideal/parabolic.hpp"
#include "wgideal/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wgideal;

namespace {

struct Job {
  std::string spec_file;
  std::string coxeter;
  std::string ideal;
  std::string j;
  std::string k;
  bool j_set = false;
  bool k_set = false;
  std::string graph_file;
  std::string format = "json";
  std::string out;
  std::string mode = "ideal";
  int m = 0;
  bool diagnose = false;
  std::size_t cap = kDefaultCap;
};

std::vector<std::string> split_list(std::string text) {
  for (char& c : text)
    if (c == ',' || c == '[' || c == ']' || c == '{' || c == '}' || c == '"') c = ' ';
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// A file path, or one of the built-in names A<n>, B<n>, I2(<m>).
CoxeterMatrix resolve_matrix(const std::string& arg) {
  if (fs::exists(arg)) return CoxeterMatrix::load(arg);
  std::smatch mt;
  if (std::regex_match(arg, mt, std::regex(R"(A(\d+))"))) return CoxeterMatrix::type_a(std::stoi(mt[1]));
  if (std::regex_match(arg, mt, std::regex(R"(B(\d+))"))) return CoxeterMatrix::type_b(std::stoi(mt[1]));
  if (std::regex_match(arg, mt, std::regex(R"(I2\((\d+)\))"))) return CoxeterMatrix::dihedral(std::stoi(mt[1]));
  throw Error(ErrorCode::Parse, "cannot open " + arg);
}

// Fields of a --spec file fill whatever the command line left empty.
void merge_spec(Job& job) {
  if (job.spec_file.empty()) return;
  std::ifstream in(job.spec_file);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + job.spec_file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, job.spec_file + ": " + e.what());
  }
  const fs::path dir = fs::path(job.spec_file).parent_path();
  auto list = [](const json& v) {
    std::string s;
    for (const auto& x : v) s += x.get<std::string>() + ",";
    return s;
  };
  try {
    if (job.coxeter.empty() && j.contains("coxeter")) {
      const std::string c = j["coxeter"].get<std::string>();
      job.coxeter = fs::exists(dir / c) ? (dir / c).string() : c;
    }
    if (job.ideal.empty() && j.contains("ideal")) job.ideal = j["ideal"].get<std::string>();
    if (!job.j_set && j.contains("J")) job.j = list(j["J"]), job.j_set = true;
    if (!job.k_set && j.contains("K")) job.k = list(j["K"]), job.k_set = true;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, job.spec_file + ": " + e.what());
  }
}

SystemPtr load_system(const Job& job) {
  if (job.coxeter.empty()) throw Error(ErrorCode::InvalidArgument, "--coxeter is required");
  return CoxeterSystem::enumerate(resolve_matrix(job.coxeter), job.cap);
}

std::vector<ElemId> parse_ideal(const CoxeterSystem& sys, const std::string& spec, GenSet J) {
  if (spec.empty()) throw Error(ErrorCode::InvalidArgument, "--ideal is required");
  std::vector<ElemId> out;
  auto body = [&](std::size_t prefix) { return split_list(spec.substr(prefix)); };
  if (spec == "DJ" || spec == "D") {
    out = min_coset_reps(sys, J, Side::Left);
  } else if (spec == "W") {
    for (std::size_t w = 0; w < sys.size(); ++w) out.push_back(static_cast<ElemId>(w));
  } else if (spec.rfind("ball:", 0) == 0) {
    int r = 0;
    try {
      r = std::stoi(spec.substr(5));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad radius in " + spec);
    }
    for (std::size_t w = 0; w < sys.size(); ++w)
      if (sys.length(static_cast<ElemId>(w)) <= r) out.push_back(static_cast<ElemId>(w));
  } else if (spec.rfind("words:", 0) == 0) {
    for (const auto& w : body(6)) out.push_back(sys.parse(w));
  } else if (spec.rfind("gen:", 0) == 0) {
    std::vector<ElemId> gens;
    for (const auto& w : body(4)) gens.push_back(sys.parse(w));
    out = ideal_closure(sys, gens, Side::Left);
  } else {
    throw Error(ErrorCode::Parse, "ideal must be words:[..], gen:[..], DJ, W or ball:k");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void emit(const Job& job, const std::string& text) {
  if (job.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(job.out);
  if (!f) throw Error(ErrorCode::Parse, "cannot write " + job.out);
  f << text << '\n';
}

void emit_json(const Job& job, const json& j) { emit(job, j.dump(2)); }

bool dot(const Job& job) {
  if (job.format != "json" && job.format != "dot") throw Error(ErrorCode::InvalidArgument, "--format is json or dot");
  return job.format == "dot";
}

int cmd_verify(const Job& job) {
  const SystemPtr sys = load_system(job);
  const GenSet J = sys->parse_gens(split_list(job.j));
  const IdealContext ctx = build_context(sys, parse_ideal(*sys, job.ideal, J), J);
  const IdealReport rep = is_wgraph_ideal(ctx);
  if (dot(job)) {
    emit(job, graph_to_dot(build_graph_from_ideal(ctx)));
  } else {
    json j = ideal_report_json(ctx, rep);
    if (job.diagnose) j["choiceDisagreements"] = choices_json(ctx, diagnose_choices(ctx));
    emit_json(job, j);
  }
  return rep.ok ? 0 : 1;
}

int cmd_verify_graph(const Job& job) {
  std::ifstream in(job.graph_file);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + job.graph_file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, job.graph_file + ": " + e.what());
  }
  const WGraph g = graph_from_json(j);
  const VerifyReport rep = verify_wgraph(g);
  if (dot(job)) {
    emit(job, graph_to_dot(g));
  } else {
    json failures = json::array();
    for (const auto& f : rep.failures) {
      failures.push_back({{"s", g.gens.labels[f.s]}, {"t", g.gens.labels[f.t]}, {"column", g.names[f.column]}});
    }
    emit_json(job, {{"ok", rep.ok}, {"quadraticOk", rep.quadratic_ok}, {"failures", failures}});
  }
  return rep.ok ? 0 : 1;
}

int cmd_classify(const Job& job) {
  if (job.m < 2) throw Error(ErrorCode::InvalidArgument, "--m must be at least 2");
  if (job.mode != "ideal" && job.mode != "biideal") throw Error(ErrorCode::InvalidArgument, "--mode is ideal or biideal");
  const Rank2Table t = classify_rank2(job.m, job.mode == "ideal" ? Rank2Mode::Ideal : Rank2Mode::Biideal);
  emit_json(job, classify_json(t));
  return t.agrees() ? 0 : 1;
}

int cmd_cells(const Job& job) {
  const SystemPtr sys = load_system(job);
  const GenSet J = sys->parse_gens(split_list(job.j));
  const IdealContext ctx = build_context(sys, parse_ideal(*sys, job.ideal, J), J);
  const WGraph g = build_graph_from_ideal(ctx);
  if (dot(job)) {
    emit(job, graph_to_dot(g));
  } else {
    json j = cells_json(g, kl_preorder(g));
    j["isIdeal"] = is_wgraph_ideal(ctx).ok;
    emit_json(job, j);
  }
  return 0;
}

int cmd_induce(const Job& job) {
  const SystemPtr sys = load_system(job);
  const GenSet K = sys->parse_gens(split_list(job.k));
  const GenSet J = sys->parse_gens(split_list(job.j));
  const ParabolicSubsystem P = ParabolicSubsystem::make(*sys, K);
  std::vector<ElemId> inner;
  for (ElemId v : parse_ideal(*P.sub, job.ideal, P.to_local(J & K))) inner.push_back(P.to_parent[v]);
  const IdealContext ctx = induce_ideal(sys, K, inner, J);
  const IdealReport rep = is_wgraph_ideal(ctx);
  if (dot(job)) {
    emit(job, graph_to_dot(build_graph_from_ideal(ctx)));
  } else {
    json j = ideal_report_json(ctx, rep);
    j["K"] = gens_json(*sys, K);
    j["inner"] = words_json(*sys, inner);
    emit_json(job, j);
  }
  return rep.ok ? 0 : 1;
}

int cmd_restrict(const Job& job) {
  const SystemPtr sys = load_system(job);
  const GenSet J = sys->parse_gens(split_list(job.j));
  const GenSet K = sys->parse_gens(split_list(job.k));
  const IdealContext ctx = build_context(sys, parse_ideal(*sys, job.ideal, J), J);
  const RestrictionReport rep = restrict_ideal(ctx, K);
  json j = restriction_json(ctx, rep);
  j["isIdeal"] = is_wgraph_ideal(ctx).ok;
  emit_json(job, j);
  const bool all = std::all_of(rep.pieces.begin(), rep.pieces.end(), [](const auto& p) { return p.verified; });
  return all && rep.tiles ? 0 : 1;
}

int cmd_biideal(const Job& job) {
  const SystemPtr sys = load_system(job);
  const GenSet J = sys->parse_gens(split_list(job.j));
  const GenSet K = sys->parse_gens(split_list(job.k));
  const BiidealContext b = biideal_check(sys, parse_ideal(*sys, job.ideal, J), J, K);
  if (dot(job)) {
    emit(job, graph_to_dot(two_sided_graph(b)));
  } else {
    json j = biideal_report_json(b);
    if (b.ok()) j["twoSidedCells"] = cells_json(two_sided_graph(b), two_sided_cells(b));
    emit_json(job, j);
  }
  return b.ok() ? 0 : 1;
}

int cmd_kl(const Job& job) {
  const SystemPtr sys = load_system(job);
  const KlSpecialCases kl = kl_special_cases(sys);
  emit_json(job, kl_json(*sys, kl));
  return kl.formula_ok && kl.eigen_ok && kl.bar_invariant ? 0 : 1;
}

int cmd_deodhar(const Job& job) {
  const SystemPtr sys = load_system(job);
  const GenSet K = sys->parse_gens(split_list(job.k));
  const DeodharReport r = deodhar_check(sys, K);
  emit_json(job, {{"K", gens_json(*sys, K)},
                  {"tauAgree", r.tau_agree},
                  {"muAgree", r.mu_agree},
                  {"qAgree", r.q_agree},
                  {"pAgree", r.p_agree},
                  {"scalingSigned", r.scaling_agree},
                  {"scalingUnsigned", r.scaling_unsigned},
                  {"qMismatches", r.q_mismatches}});
  return r.tau_agree && r.mu_agree && r.q_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"W-graph ideals: verification, cells, induction, restriction, biideals"};
  app.require_subcommand(1);
  Job job;

  auto common = [&](CLI::App* c, bool ideal, bool k) {
    c->add_option("--spec", job.spec_file, "JSON job file with coxeter, ideal, J, K");
    c->add_option("--coxeter", job.coxeter, "Coxeter matrix JSON file, or A<n>, B<n>, I2(<m>)");
    c->add_option("--cap", job.cap, "Element cap for enumeration");
    c->add_option("--format", job.format, "json or dot");
    c->add_option("--out", job.out, "Write the report here instead of stdout");
    if (ideal) {
      c->add_option("--ideal", job.ideal, "words:[..], gen:[..], DJ, W or ball:k");
      c->add_option("--j", job.j, "Comma-separated labels of J");
    }
    if (k) c->add_option("--k", job.k, "Comma-separated labels of K");
  };

  auto* verify = app.add_subcommand("verify", "Decide whether (I, J) is a W-graph ideal");
  common(verify, true, false);
  verify->add_flag("--diagnose-choices", job.diagnose, "Recompute q with every admissible descent");

  auto* vgraph = app.add_subcommand("verify-graph", "Check the braid relations of a JSON W-graph");
  vgraph->add_option("--graph", job.graph_file, "Graph JSON as written by the other commands")->required();
  vgraph->add_option("--format", job.format, "json or dot");
  vgraph->add_option("--out", job.out, "Write the report here instead of stdout");

  auto* classify = app.add_subcommand("classify", "Sweep all rank-2 candidates and compare with the closed form");
  classify->add_option("--m", job.m, "Dihedral order m(s,t)")->required();
  classify->add_option("--mode", job.mode, "ideal or biideal");
  classify->add_option("--out", job.out, "Write the report here instead of stdout");

  auto* cells = app.add_subcommand("cells", "Cells and their order for Γ(I, J)");
  common(cells, true, false);
  auto* induce = app.add_subcommand("induce", "Induce an ideal of W_K (given by --ideal over K) to W");
  common(induce, true, true);
  auto* restrict = app.add_subcommand("restrict", "Split (I, J) into W_K-graph ideals");
  common(restrict, true, true);
  auto* biideal = app.add_subcommand("biideal", "Decide whether (I, J, K) is a W-graph biideal");
  common(biideal, true, true);
  auto* kl = app.add_subcommand("kl", "The regular ideal: c of the longest element and parabolic cells");
  common(kl, false, false);
  auto* deodhar = app.add_subcommand("deodhar", "Compare (D_K, K) with D_K w_K inside (W, {})");
  common(deodhar, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  for (auto* c : {verify, cells, induce, restrict, biideal, deodhar}) {
    if (auto* o = c->get_option_no_throw("--j"); o && o->count()) job.j_set = true;
    if (auto* o = c->get_option_no_throw("--k"); o && o->count()) job.k_set = true;
  }

  try {
    merge_spec(job);
    if (*verify) return cmd_verify(job);
    if (*vgraph) return cmd_verify_graph(job);
    if (*classify) return cmd_classify(job);
    if (*cells) return cmd_cells(job);
    if (*induce) return cmd_induce(job);
    if (*restrict) return cmd_restrict(job);
    if (*biideal) return cmd_biideal(job);
    if (*kl) return cmd_kl(job);
    if (*deodhar) return cmd_deodhar(job);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
