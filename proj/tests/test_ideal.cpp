#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "oracles.hpp"
#include "wgideal/error.hpp"
#include "wgideal/ideal.hpp"
#include "wgideal/parabolic.hpp"

using namespace wgideal;

namespace {

const LaurentPoly kQ = LaurentPoly::q();

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Parse;
}

std::vector<ElemId> parse_all(const CoxeterSystem& sys, std::initializer_list<const char*> words) {
  std::vector<ElemId> out;
  for (const char* w : words) out.push_back(sys.parse(w));
  std::sort(out.begin(), out.end());
  return out;
}

// Every verified (I, J) of a small group.
std::vector<IdealContext> verified(const SystemPtr& sys) {
  std::vector<IdealContext> out;
  for (const auto& I : sub_left_ideals(*sys, oracle::all_elements(*sys)))
    for (GenSet J : oracle::subsets(sys->rank())) {
      try {
        IdealContext ctx = build_context(sys, I, J);
        if (is_wgraph_ideal(ctx).ok) out.push_back(std::move(ctx));
      } catch (const Error&) {
      }
    }
  return out;
}

// [..st]_l for l <= h in I2(m), with s = 0 and t = 1.
std::vector<ElemId> st_chain(const CoxeterSystem& sys, int h) {
  std::vector<ElemId> out{0};
  for (ElemId w = 1; w < static_cast<ElemId>(sys.size()); ++w)
    if (sys.word(w).back() == 1 && sys.length(w) <= h) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("B4 four-element ideal fails at the pair (s0, s3)") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_b(4));
  const IdealContext ctx = build_context(sys, parse_all(*sys, {"1", "s0", "s1s0", "s2s1s0"}), GenSet{1, 2, 3});
  REQUIRE(ctx.size() == 4);
  CHECK(ctx.part[0].D() == (GenSet{1, 2, 3}));
  CHECK(ctx.part[1].D() == (GenSet{0, 2, 3}));
  CHECK(ctx.part[2].D() == (GenSet{1, 3}));
  CHECK(ctx.part[3].D() == (GenSet{1, 2}));
  CHECK(ctx.q(0, 2).is_zero());
  const IdealReport rep = is_wgraph_ideal(ctx);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.braid.failures.empty());
  CHECK(rep.braid.failures.front().s == 0);
  CHECK(rep.braid.failures.front().t == 3);

  WGraph g = build_graph_from_ideal(ctx);
  CHECK(g.mu.size() == 6);
  g.set_weight(0, 3, -1);
  g.set_weight(3, 0, -1);
  CHECK(verify_wgraph(g).ok);
}

TEST_CASE("input validation") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_a(2));
  CHECK(code_of([&] { build_context(sys, {}, GenSet()); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { build_context(sys, {0, 99}, GenSet()); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { build_context(sys, parse_all(*sys, {"1", "s1s2"}), GenSet()); }) == ErrorCode::NotAnIdeal);
  CHECK(code_of([&] { build_context(sys, parse_all(*sys, {"s1"}), GenSet()); }) == ErrorCode::NotAnIdeal);
  CHECK(code_of([&] { build_context(sys, parse_all(*sys, {"1", "s1"}), GenSet{0}); }) == ErrorCode::NotInDJ);
}

TEST_CASE("the regular context reproduces the Kazhdan-Lusztig basis") {
  // c_w is characterised by bar invariance and c_w ∈ T_w + sum_{y<w} qZ[q] T_y.
  for (const auto& m : {CoxeterMatrix::type_a(2), CoxeterMatrix::type_b(2), CoxeterMatrix::type_a(3),
                        CoxeterMatrix::dihedral(5), CoxeterMatrix::type_b(3)}) {
    const SystemPtr sys = CoxeterSystem::enumerate(m);
    const IdealContext ctx = regular_context(sys);
    const PolyMatrix inv = standard_basis_inverse(ctx);
    const int n = static_cast<int>(ctx.size());
    for (int w = 0; w < n; ++w) {
      HeckeElt c;
      for (int y = 0; y < n; ++y) {
        if (inv(y, w).is_zero()) continue;
        c.add(ctx.elems[y], inv(y, w));
        if (y == w) CHECK(inv(y, w) == LaurentPoly(1));
        else {
          CHECK(inv(y, w).in_qA_plus());
          CHECK(ctx.lt(y, w));
        }
      }
      REQUIRE(bar_hecke(*sys, c) == c);
    }
  }
}

TEST_CASE("standard basis matrices") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_a(3));
  const IdealContext ctx = regular_context(sys);
  const PolyMatrix Q = standard_basis_matrix(ctx);
  const PolyMatrix Qi = standard_basis_inverse(ctx);
  CHECK(mat_mul(Q, Qi) == PolyMatrix::identity(ctx.size()));
  for (int y = 0; y < static_cast<int>(ctx.size()); ++y) {
    CHECK(Q(y, y) == LaurentPoly(1));
    for (int w = y + 1; w < static_cast<int>(ctx.size()); ++w) CHECK(Q(y, w) == kQ * ctx.q(y, w));
  }
  const int top = static_cast<int>(ctx.size()) - 1;
  CHECK(Qi(0, top) == LaurentPoly::monomial(1, 6));  // (-q)^6
  CHECK(p_poly(Qi, 0, top) == LaurentPoly::monomial(-1, 5));
}

TEST_CASE("c-basis action is the graph action, b-basis action is the standard one") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_b(3));
  const IdealContext ctx = build_context(sys, min_coset_reps(*sys, GenSet{1, 2}, Side::Left), GenSet{1, 2});
  const WGraph g = build_graph_from_ideal(ctx);
  const auto c = c_actions(ctx);
  const auto b = b_actions(ctx);
  const PolyMatrix Q = standard_basis_matrix(ctx), Qi = standard_basis_inverse(ctx);
  for (int s = 0; s < 3; ++s) {
    CHECK(c[s] == action_matrix(g, s));
    CHECK(mat_mul(Qi, mat_mul(c[s], Q)) == b[s]);
  }
}

TEST_CASE("dihedral chains with J = {s}") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(6));
  for (int h = 0; h <= 5; ++h) {
    const IdealContext ctx = build_context(sys, st_chain(*sys, h), GenSet{0});
    const bool expect = h == 0 || h == 1 || h == 4 || h == 5;
    CAPTURE(h);
    CHECK(is_wgraph_ideal(ctx).ok == expect);
  }
}

TEST_CASE("D_J is always a W-graph ideal") {
  for (const auto& m : {CoxeterMatrix::type_a(2), CoxeterMatrix::type_a(3), CoxeterMatrix::type_b(3)}) {
    const SystemPtr sys = CoxeterSystem::enumerate(m);
    for (GenSet J : oracle::subsets(sys->rank())) {
      const IdealContext ctx = build_context(sys, min_coset_reps(*sys, J, Side::Left), J);
      const IdealReport r = is_wgraph_ideal(ctx);
      CHECK(r.ok);
      CHECK(r.direct_formula_agrees);
    }
  }
}

TEST_CASE("invariants on every verified context of A3, B2 and I2(6)") {
  int count = 0;
  for (const auto& m : {CoxeterMatrix::type_a(3), CoxeterMatrix::type_b(2), CoxeterMatrix::dihedral(6)}) {
    for (const IdealContext& ctx : verified(CoxeterSystem::enumerate(m))) {
      ++count;
      const PropertyReport r = check_properties(ctx);
      if (!r.ok()) FAIL(r.all().front());
      CHECK(check_bar_compatibility(ctx));
      CHECK(diagnose_choices(ctx).empty());
      CHECK(ctx.anomalies.empty());
      for (int w = 0; w < static_cast<int>(ctx.size()); ++w)
        for (int y = 0; y < w; ++y) {
          CHECK(ctx.q(y, w).in_A_plus());
          if (!ctx.q(y, w).is_zero()) CHECK(ctx.lt(y, w));
        }
    }
  }
  CHECK(count > 50);
}

TEST_CASE("descent partition classes") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_a(3));
  const GenSet J{0};
  const IdealContext ctx = build_context(sys, min_coset_reps(*sys, J, Side::Left), J);
  for (int i = 0; i < static_cast<int>(ctx.size()); ++i) {
    const ElemId w = ctx.elems[i];
    const auto& p = ctx.part[i];
    CHECK((p.SD | p.SA | p.WD | p.WA) == GenSet::full(3));
    CHECK((p.SD & p.SA).empty());
    CHECK((p.WD & p.WA).empty());
    CHECK((p.D() & p.A()).empty());
    for (int s = 0; s < 3; ++s) {
      const ElemId sw = sys->left(w, s);
      if (sys->length(sw) < sys->length(w)) CHECK(p.SD.contains(s));
      else if (in_min_reps(*sys, sw, J, Side::Left)) CHECK(p.SA.contains(s));
      else {
        const int t = conjugate_generator(*sys, w, s);
        CHECK((t >= 0 && J.contains(t)));
        CHECK(p.WD.contains(s));
      }
    }
  }
}

TEST_CASE("r-polynomials") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(6));
  const IdealContext ctx = build_context(sys, st_chain(*sys, 4), GenSet{0});
  REQUIRE(is_wgraph_ideal(ctx).ok);
  const int w = ctx.position[sys->parse("stst")];
  const auto r = r_polynomials(ctx, w, 1);
  std::map<std::string, LaurentPoly> got;
  for (const auto& x : r) got[ctx.name(x.y)] = x.r;
  CHECK(got.size() == 4);
  CHECK(got["1"] == LaurentPoly::monomial(-1, 5));
  CHECK(got["t"] == LaurentPoly::monomial(1, 4));
  CHECK(got["st"] == LaurentPoly::monomial(-1, 3));
  CHECK(got["tst"] == LaurentPoly::monomial(1, 2));
  for (const auto& x : r) {
    CHECK(x.r.in_qA_plus());
    CHECK(x.y != w);
  }
  CHECK(code_of([&] { r_polynomials(ctx, w, 0); }) == ErrorCode::NotWeakAscent);
}

TEST_CASE("choice diagnostics report only genuine differences") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_b(4));
  const IdealContext ctx = build_context(sys, parse_all(*sys, {"1", "s0", "s1s0", "s2s1s0"}), GenSet{1, 2, 3});
  for (const auto& d : diagnose_choices(ctx)) {
    CHECK(d.with_chosen != d.with_alternative);
    CHECK(d.chosen == ctx.part[d.z].SD.first());
    CHECK(ctx.part[d.z].SD.contains(d.alternative));
  }
}

TEST_CASE("longest element and parabolic pieces of the regular graph") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(3));
  const KlSpecialCases kl = kl_special_cases(sys);
  CHECK(kl.formula_ok);
  CHECK(kl.eigen_ok);
  CHECK(kl.bar_invariant);
  for (const auto& [w, c] : kl.c_longest.terms()) {
    const int e = 3 - sys->length(w);
    CHECK(c == LaurentPoly::monomial(e % 2 ? -1 : 1, e));
  }
  CHECK(kl.c_longest.terms().size() == 6);
  for (const auto& pk : kl.per_k) {
    CHECK(pk.dk_union_of_cells);
    CHECK(pk.dk_complement_closed);
    CHECK(pk.dkwk_closed);
  }
}
