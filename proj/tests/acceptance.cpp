// Acceptance checks, one line per criterion:
//   wgideal_acceptance        run all nine
//   wgideal_acceptance N      run criterion N only (exit 1 if it fails)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>

#include <omp.h>

#include "wgideal/biideal.hpp"
#include "wgideal/classify.hpp"
#include "wgideal/error.hpp"
#include "wgideal/parabolic.hpp"
#include "wgideal/report.hpp"

using namespace wgideal;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<ElemId> all_of(const CoxeterSystem& sys) {
  std::vector<ElemId> out(sys.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<ElemId>(i);
  return out;
}

std::vector<GenSet> subsets(int rank) {
  std::vector<GenSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << rank); ++b) out.emplace_back(b);
  return out;
}

// Every (I, J) with I a left ideal of sys that passes the verifier.
std::vector<IdealContext> verified_contexts(const SystemPtr& sys) {
  std::vector<IdealContext> out;
  for (const auto& ideal : sub_left_ideals(*sys, all_of(*sys))) {
    for (GenSet J : subsets(sys->rank())) {
      try {
        IdealContext ctx = build_context(sys, ideal, J);
        if (is_wgraph_ideal(ctx).ok) out.push_back(std::move(ctx));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

SystemPtr dihedral(int m) { return CoxeterSystem::enumerate(CoxeterMatrix::dihedral(m)); }

Outcome classification(Rank2Mode mode, int lo, int hi, double budget) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream d;
  bool agree = true;
  std::size_t rows = 0;
  for (int m = lo; m <= hi; ++m) {
    const Rank2Table t = classify_rank2(m, mode);
    rows += t.rows.size();
    if (t.agrees()) continue;
    agree = false;
    d << " m=" << m << ":";
    for (int i : t.mismatches) {
      const Rank2Row& r = t.rows[i];
      d << " {";
      for (std::size_t k = 0; k < r.ideal.size(); ++k) d << (k ? "," : "") << t.sys->format(r.ideal[k]);
      d << "} J=" << r.J.bits() << " K=" << r.K.bits() << (r.accepted ? " accepted" : " rejected") << ";";
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream head;
  head << rows << " candidates for m=" << lo << ".." << hi << " in " << secs << " s";
  if (!agree) head << "; disagreements with the closed form:" << d.str();
  else head << "; every verdict matches the closed form";
  return {agree && secs < budget, head.str()};
}

Outcome criterion1() { return classification(Rank2Mode::Ideal, 2, 10, 10.0); }
Outcome criterion2() { return classification(Rank2Mode::Biideal, 2, 8, 30.0); }

Outcome criterion3() {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_b(4));
  std::vector<ElemId> ideal;
  for (const char* w : {"1", "s0", "s1s0", "s2s1s0"}) ideal.push_back(sys->parse(w));
  const GenSet J = sys->parse_gens({"s1", "s2", "s3"});
  const IdealContext ctx = build_context(sys, ideal, J);
  const IdealReport rep = is_wgraph_ideal(ctx);
  WGraph g = build_graph_from_ideal(ctx);

  const std::vector<GenSet> want = {GenSet{1, 2, 3}, GenSet{0, 2, 3}, GenSet{1, 3}, GenSet{1, 2}};
  const bool tau_ok = g.tau == want;
  const bool path_ok = g.mu.size() == 6 && g.weight(0, 1) == 1 && g.weight(1, 2) == 1 && g.weight(2, 3) == 1;
  const bool q_ok = ctx.q(0, 2).is_zero();
  const bool pair_ok = !rep.ok && !rep.braid.failures.empty() && rep.braid.failures.front().s == 0 &&
                       rep.braid.failures.front().t == 3;
  g.set_weight(0, 3, -1);
  g.set_weight(3, 0, -1);
  const bool augmented_ok = verify_wgraph(g).ok;

  std::ostringstream d;
  d << "tau " << (tau_ok ? "ok" : "wrong") << ", 4-path " << (path_ok ? "ok" : "wrong") << ", q(1,s1s0)=0 "
    << (q_ok ? "ok" : "wrong") << ", verdict " << (rep.ok ? "YES" : "NO");
  if (!rep.braid.failures.empty()) {
    const auto& f = rep.braid.failures.front();
    d << " failing (" << sys->matrix().labels[f.s] << "," << sys->matrix().labels[f.t] << ")";
  }
  d << ", augmented graph " << (augmented_ok ? "verifies" : "fails");
  return {tau_ok && path_ok && q_ok && pair_ok && augmented_ok, d.str()};
}

Outcome criterion4() {
  std::vector<std::pair<std::string, CoxeterMatrix>> groups = {
      {"A2", CoxeterMatrix::type_a(2)}, {"B2", CoxeterMatrix::type_b(2)}, {"A3", CoxeterMatrix::type_a(3)}};
  for (int m = 2; m <= 8; ++m) groups.emplace_back("I2(" + std::to_string(m) + ")", CoxeterMatrix::dihedral(m));
  std::ostringstream bad;
  for (const auto& [name, mat] : groups) {
    const SystemPtr sys = CoxeterSystem::enumerate(mat);
    const IdealContext ctx = regular_context(sys);
    const bool ideal_ok = is_wgraph_ideal(ctx).ok;
    const KlSpecialCases kl = kl_special_cases(sys);
    const bool bi_ok = biideal_check(sys, all_of(*sys), GenSet(), GenSet()).ok();
    bool inv_ok = true;
    const int n = static_cast<int>(ctx.size());
    for (int w = 0; w < n; ++w)
      for (int y = 0; y < w; ++y) {
        const int yi = ctx.position[sys->inverse(ctx.elems[y])];
        const int wi = ctx.position[sys->inverse(ctx.elems[w])];
        const LaurentPoly qi = yi < wi ? ctx.q(yi, wi) : LaurentPoly();
        if (qi != ctx.q(y, w)) inv_ok = false;
      }
    if (!(ideal_ok && kl.formula_ok && bi_ok && inv_ok)) {
      bad << " " << name << "[ideal=" << ideal_ok << " formula=" << kl.formula_ok << " biideal=" << bi_ok
          << " inverse=" << inv_ok << "]";
    }
  }
  const std::string b = bad.str();
  return {b.empty(), b.empty() ? "A2, B2, A3, I2(2..8): regular ideal, longest-element formula, biideal and "
                                 "q inversion symmetry all hold"
                               : "failures:" + b};
}

Outcome criterion5() {
  std::ostringstream d;
  bool literal = true;
  int checked = 0, tau_mu = 0, p_form = 0;
  std::string example;
  for (const auto& mat : {CoxeterMatrix::type_a(2), CoxeterMatrix::type_b(2), CoxeterMatrix::type_a(3)}) {
    const SystemPtr sys = CoxeterSystem::enumerate(mat);
    for (GenSet K : subsets(sys->rank())) {
      const DeodharReport r = deodhar_check(sys, K);
      ++checked;
      tau_mu += r.tau_agree && r.mu_agree;
      p_form += r.p_agree;
      if (!(r.tau_agree && r.mu_agree && r.q_agree)) {
        literal = false;
        if (example.empty() && !r.q_mismatches.empty()) {
          std::ostringstream e;
          e << "K={";
          for (const auto& l : sys->gen_labels(K)) e << l << (l == sys->gen_labels(K).back() ? "" : ",");
          e << "} in " << (sys->rank() == 2 ? (sys->m(0, 1) == 3 ? "A2" : "B2") : "A3") << ": "
            << r.q_mismatches.front();
          example = e.str();
        }
      }
    }
  }
  d << checked << " (group, K) cases; q^K = q(.w_K) literal: " << (literal ? "holds" : "fails");
  if (!example.empty()) d << " (first: " << example << ")";
  d << "; tau and mu agree in " << tau_mu << "/" << checked << ", p-form agrees in " << p_form << "/" << checked;
  return {literal, d.str()};
}

Outcome criterion6() {
  std::ostringstream bad;
  int contexts = 0, restrictions = 0, pieces = 0;
  for (const auto& mat : {CoxeterMatrix::type_a(2), CoxeterMatrix::type_b(2), CoxeterMatrix::dihedral(6)}) {
    const SystemPtr sys = CoxeterSystem::enumerate(mat);
    for (const IdealContext& ctx : verified_contexts(sys)) {
      ++contexts;
      for (GenSet K : subsets(sys->rank())) {
        const RestrictionReport rep = restrict_ideal(ctx, K);
        ++restrictions;
        bool ok = rep.tiles;
        for (const auto& p : rep.pieces) {
          ++pieces;
          ok = ok && p.verified;
        }
        if (!ok && bad.str().size() < 400) bad << " I of size " << ctx.size() << " J=" << ctx.J.bits() << " K=" << K.bits() << ";";
      }
    }
  }
  std::ostringstream d;
  d << contexts << " verified ideals, " << restrictions << " restrictions, " << pieces << " pieces";
  const std::string b = bad.str();
  if (!b.empty()) d << "; failures:" << b;
  else d << "; every piece verifies and the pieces tile";
  return {b.empty(), d.str()};
}

Outcome criterion7() {
  int induced = 0, pairs = 0;
  std::ostringstream bad;
  for (const auto& mat : {CoxeterMatrix::type_a(3), CoxeterMatrix::type_b(2)}) {
    const SystemPtr sys = CoxeterSystem::enumerate(mat);
    for (GenSet K : subsets(sys->rank())) {
      if (K.size() != 2) continue;
      const ParabolicSubsystem P = ParabolicSubsystem::make(*sys, K);
      for (const IdealContext& inner : verified_contexts(P.sub)) {
        std::vector<ElemId> inner_parent;
        for (ElemId v : inner.elems) inner_parent.push_back(P.to_parent[v]);
        const GenSet J = P.to_parent_set(inner.J);
        ++induced;
        if (!is_wgraph_ideal(induce_ideal(sys, K, inner_parent, J)).ok) bad << " induce failed;";
        for (const auto& L : sub_left_ideals(*P.sub, inner.elems)) {
          if (!strong_subideal_check(inner, L).strong) continue;
          ++pairs;
          std::vector<ElemId> L_parent;
          for (ElemId v : L) L_parent.push_back(P.to_parent[v]);
          const InducedCheck c = induced_strong_subideal_check(sys, K, inner_parent, L_parent, J);
          if (!(c.strong && c.inherits && c.cells_induce)) bad << " strong pair failed;";
        }
      }
    }
  }
  std::ostringstream d;
  d << induced << " induced ideals, " << pairs << " strong-subideal pairs";
  const std::string b = bad.str();
  if (!b.empty()) d << "; failures:" << b.substr(0, 300);
  else d << "; all induced ideals verify, strong pairs stay strong and cells induce to unions of cells";
  return {b.empty(), d.str()};
}

Outcome criterion8() {
  std::vector<IdealContext> pool;
  for (int m = 2; m <= 10; ++m)
    for (auto& c : verified_contexts(dihedral(m))) pool.push_back(std::move(c));
  for (const auto& mat : {CoxeterMatrix::type_a(2), CoxeterMatrix::type_b(2), CoxeterMatrix::type_a(3)})
    for (auto& c : verified_contexts(CoxeterSystem::enumerate(mat))) pool.push_back(std::move(c));
  {
    const SystemPtr a3 = CoxeterSystem::enumerate(CoxeterMatrix::type_a(3));
    for (GenSet K : subsets(3)) {
      if (K.size() != 2) continue;
      const ParabolicSubsystem P = ParabolicSubsystem::make(*a3, K);
      for (const IdealContext& inner : verified_contexts(P.sub)) {
        std::vector<ElemId> up;
        for (ElemId v : inner.elems) up.push_back(P.to_parent[v]);
        pool.push_back(induce_ideal(a3, K, up, P.to_parent_set(inner.J)));
      }
    }
  }

  int failed = 0, uniform = 0, uniform_failed = 0;
  std::string first;
  for (const IdealContext& ctx : pool) {
    const PropertyReport r = check_properties(ctx);
    if (!r.ok()) {
      ++failed;
      if (first.empty()) first = r.all().front();
    }
    if (ctx.sys->rank() == 2 && ctx.J.empty() && ctx.size() < ctx.sys->size()) {
      ++uniform;
      if (!uniform_expansion_holds(ctx)) ++uniform_failed;
    }
  }
  std::ostringstream d;
  d << pool.size() << " verified contexts, " << failed << " with a failed invariant; " << uniform
    << " uniform dihedral ideals, " << uniform_failed << " failing the T_w c_1 expansion";
  if (!first.empty()) d << " (first: " << first << ")";
  return {failed == 0 && uniform_failed == 0, d.str()};
}

std::string report_bundle() {
  std::string out;
  const SystemPtr b4 = CoxeterSystem::enumerate(CoxeterMatrix::type_b(4));
  std::vector<ElemId> ideal;
  for (const char* w : {"1", "s0", "s1s0", "s2s1s0"}) ideal.push_back(b4->parse(w));
  const IdealContext ex = build_context(b4, ideal, b4->parse_gens({"s1", "s2", "s3"}));
  out += ideal_report_json(ex, is_wgraph_ideal(ex)).dump(2);
  const SystemPtr a3 = CoxeterSystem::enumerate(CoxeterMatrix::type_a(3));
  const IdealContext reg = regular_context(a3);
  out += ideal_report_json(reg, is_wgraph_ideal(reg)).dump(2);
  out += restriction_json(reg, restrict_ideal(reg, GenSet{0, 1})).dump(2);
  out += kl_json(*a3, kl_special_cases(a3)).dump(2);
  const SystemPtr i4 = dihedral(4);
  out += biideal_report_json(biideal_check(i4, {0, 1, 2}, GenSet(), GenSet())).dump(2);
  out += classify_json(classify_rank2(6, Rank2Mode::Biideal)).dump(2);
  return out;
}

Outcome criterion9() {
  const int threads = omp_get_max_threads();
  const std::string a = report_bundle();
  const std::string b = report_bundle();
  omp_set_num_threads(4);
  const std::string c = report_bundle();
  omp_set_num_threads(1);
  const std::string d = report_bundle();
  omp_set_num_threads(threads);
  const bool same = a == b && a == c && a == d;
  return {same, std::to_string(a.size()) + " bytes of JSON, identical across repeated runs and 1 or 4 threads: " +
                    (same ? "yes" : "no")};
}

const std::function<Outcome()> kCriteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                              criterion6, criterion7, criterion8, criterion9};

bool run(int n) {
  Outcome o;
  try {
    o = kCriteria[n - 1]();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("criterion %d: %s (%s)\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > 9) {
      std::fprintf(stderr, "criterion must be 1..9\n");
      return 2;
    }
    return run(n) ? 0 : 1;
  }
  bool all = true;
  for (int n = 1; n <= 9; ++n) all = run(n) && all;
  return all ? 0 : 1;
}
