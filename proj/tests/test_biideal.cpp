#include <doctest.h>

#include <algorithm>
#include <functional>

#include "oracles.hpp"
#include "wgideal/biideal.hpp"
#include "wgideal/classify.hpp"
#include "wgideal/error.hpp"
#include "wgideal/parabolic.hpp"

using namespace wgideal;

namespace {

const LaurentPoly kQ = LaurentPoly::q();
const LaurentPoly kQi = LaurentPoly::q_inv();

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Parse;
}

std::vector<ElemId> words(const CoxeterSystem& sys, std::initializer_list<const char*> ws) {
  std::vector<ElemId> out;
  for (const char* w : ws) out.push_back(sys.parse(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemId> inverted(const CoxeterSystem& sys, const std::vector<ElemId>& I) {
  std::vector<ElemId> out;
  for (ElemId w : I) out.push_back(sys.inverse(w));
  std::sort(out.begin(), out.end());
  return out;
}

PolyMatrix mat2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
  PolyMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// Every two-sided ideal of a small group with every J, K that builds.
template <typename F>
void for_each_biideal(const SystemPtr& sys, F&& f) {
  for (const auto& I : sub_left_ideals(*sys, oracle::all_elements(*sys))) {
    if (!is_weak_ideal(*sys, I, Side::Right)) continue;
    for (GenSet J : oracle::subsets(sys->rank()))
      for (GenSet K : oracle::subsets(sys->rank())) {
        try {
          f(I, J, K, biideal_check(sys, I, J, K));
        } catch (const Error&) {
        }
      }
  }
}

}  // namespace

TEST_CASE("the whole group is a biideal with trivial J and K") {
  for (const auto& m : {CoxeterMatrix::type_a(2), CoxeterMatrix::dihedral(2), CoxeterMatrix::dihedral(4),
                        CoxeterMatrix::dihedral(5), CoxeterMatrix::dihedral(6)}) {
    const SystemPtr sys = CoxeterSystem::enumerate(m);
    const BiidealContext b = biideal_check(sys, oracle::all_elements(*sys), GenSet(), GenSet());
    CHECK(b.ok());
    CHECK_FALSE(b.witness.has_value());
    CHECK(q_symmetric(b));
    CHECK(b1_central(b));
  }
}

TEST_CASE("a one-sided ideal pair that does not commute") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_a(2));
  const std::vector<ElemId> I = words(*sys, {"1", "s2"});
  CHECK(right_ideal_check(sys, I, GenSet{0}));
  const BiidealContext b = biideal_check(sys, I, GenSet{0}, GenSet{0});
  CHECK(b.left_verified);
  CHECK(b.right_verified);
  CHECK_FALSE(b.bimodule);
  CHECK_FALSE(b.ok());
  REQUIRE(b.witness.has_value());
  const auto& w = *b.witness;
  const PolyMatrix lr = mat_mul(b.left_action[w.s], b.right_action[w.t]);
  const PolyMatrix rl = mat_mul(b.right_action[w.t], b.left_action[w.s]);
  CHECK(lr.column(w.column) != rl.column(w.column));
  CHECK(code_of([&] { two_sided_graph(b); }) == ErrorCode::NotABiideal);
}

TEST_CASE("dihedral order-4 group: {1, t} with empty J and K") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(4));
  const BiidealContext b = biideal_check(sys, words(*sys, {"1", "t"}), GenSet(), GenSet());
  CHECK(b.ok());
  const WGraph g = two_sided_graph(b);
  CHECK(verify_wgraph(g).ok);
}

TEST_CASE("two-sided graph of the radius-one ball in the dihedral group of order 8") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(4));
  const BiidealContext b = biideal_check(sys, words(*sys, {"1", "s", "t"}), GenSet(), GenSet());
  REQUIRE(b.ok());
  const WGraph g = two_sided_graph(b);
  REQUIRE(g.gens.rank() == 4);
  CHECK(g.gens.labels[2] == "s~");
  CHECK(g.gens.m[0][2] == 2);
  CHECK(g.gens.m[2][3] == 4);
  const int s = b.left.position[sys->parse("s")];
  CHECK(g.tau[s] == (GenSet{0, 2}));
  CHECK(g.tau[0].empty());
  CHECK(verify_wgraph(g).ok);
  CHECK(two_sided_cells(b).cells.size() == kl_preorder(g).cells.size());
}

TEST_CASE("the doubled matrix") {
  const CoxeterMatrix d = doubled_matrix(CoxeterMatrix::type_a(2));
  CHECK(d.rank() == 4);
  CHECK(d.labels == std::vector<std::string>{"s1", "s2", "s1~", "s2~"});
  CHECK(d.m[0][1] == 3);
  CHECK(d.m[2][3] == 3);
  CHECK(d.m[1][3] == 2);
  CHECK_NOTHROW(d.validate());
}

TEST_CASE("every accepted biideal gives a W x W-graph, and colours split") {
  for (const auto& m : {CoxeterMatrix::type_a(2), CoxeterMatrix::dihedral(4), CoxeterMatrix::dihedral(6)}) {
    const SystemPtr sys = CoxeterSystem::enumerate(m);
    const int r = sys->rank();
    int accepted = 0;
    for_each_biideal(sys, [&](const std::vector<ElemId>&, GenSet J, GenSet K, const BiidealContext& b) {
      if (!b.ok()) return;
      ++accepted;
      const WGraph g = two_sided_graph(b);
      CHECK(verify_wgraph(g).ok);
      CHECK(q_symmetric(b));
      // b_1 commutes with every T_w only when both sides use the same J.
      if (J == K) CHECK(b1_central(b));
      const WGraph left = restrict_colours(g, GenSet::full(r));
      const WGraph right = restrict_colours(g, GenSet::full(2 * r) - GenSet::full(r));
      CHECK(verify_wgraph(left).ok);
      CHECK(verify_wgraph(right).ok);
      CHECK(left.mu == build_graph_from_ideal(b.left).mu);
    });
    CHECK(accepted > 0);
  }
}

TEST_CASE("inverting swaps the two sides") {
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(5));
  for_each_biideal(sys, [&](const std::vector<ElemId>& I, GenSet J, GenSet K, const BiidealContext& b) {
    const BiidealContext inv = biideal_check(sys, inverted(*sys, I), K, J);
    CHECK(inv.ok() == b.ok());
    CHECK(inv.left_verified == b.right_verified);
    CHECK(inv.right_verified == b.left_verified);
  });
}

TEST_CASE("the prefilter never decides a verdict on its own") {
  for (int m = 2; m <= 7; ++m) {
    const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(m));
    for_each_biideal(sys, [&](const std::vector<ElemId>&, GenSet, GenSet, const BiidealContext& b) {
      if (!b.prefilter) CHECK_FALSE((b.left_verified && b.right_verified && b.bimodule));
    });
  }
}

TEST_CASE("commuting product of two rank-one groups: hand-built actions") {
  // W = <s> x <t>. On the basis b_1, b_s the left action is the regular
  // representation of H_s with T_t = q (t ascends out of the ideal, J = ∅);
  // on the right T_s acts the same way and T_t = -q^-1 since t lies in K.
  // The T_t sides are scalars, so the actions commute and the pair is a
  // bimodule even though it is none of the generic families.
  const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(2));
  const std::vector<ElemId> I = words(*sys, {"1", "s"});
  const BiidealContext b = biideal_check(sys, I, GenSet(), GenSet{1});
  const PolyMatrix Ts = mat2(0, 1, 1, kQ - kQi);
  CHECK(b.left_action[0] == Ts);
  CHECK(b.right_action[0] == Ts);
  CHECK(b.left_action[1] == mat2(kQ, 0, 0, kQ));
  CHECK(b.right_action[1] == mat2(-kQi, 0, 0, -kQi));
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      CHECK(mat_mul(b.left_action[s], b.right_action[t]) == mat_mul(b.right_action[t], b.left_action[s]));
  CHECK(b.ok());
  CHECK_FALSE(predicted_biideal(2, rank2_shape(*sys, I), GenSet(), GenSet{1}));
}

TEST_CASE("sub-biideals") {
  SUBCASE("the full ideal and W minus the longest element") {
    const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::type_a(2));
    const auto W = oracle::all_elements(*sys);
    const BiidealContext b = biideal_check(sys, W, GenSet(), GenSet());
    const SubbiidealCheck full = subbiideal_check(b, W);
    CHECK(full.closed);
    CHECK(full.left_verified);
    CHECK(full.right_verified);
    std::vector<ElemId> L(W.begin(), W.end() - 1);
    const SubbiidealCheck minus = subbiideal_check(b, L);
    CHECK(minus.closed);
    CHECK(minus.left_verified);
    CHECK(minus.right_verified);
  }
  SUBCASE("the radius-one ball of the dihedral group of order 12") {
    // The ball is a biideal in its own right, but it cuts the middle
    // two-sided cell, so its complement is not closed.
    const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(6));
    const std::vector<ElemId> ball = words(*sys, {"1", "s", "t"});
    const BiidealContext b = biideal_check(sys, oracle::all_elements(*sys), GenSet(), GenSet());
    CHECK_FALSE(subbiideal_check(b, ball).closed);
    CHECK(biideal_check(sys, ball, GenSet(), GenSet()).ok());
    CHECK(two_sided_cells(b).cells.size() == 3);
  }
  SUBCASE("errors") {
    const SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(4));
    const BiidealContext b = biideal_check(sys, words(*sys, {"1", "s", "t"}), GenSet(), GenSet());
    CHECK(code_of([&] { subbiideal_check(b, words(*sys, {"1", "st"})); }) == ErrorCode::NotContained);
    const SystemPtr a2 = CoxeterSystem::enumerate(CoxeterMatrix::type_a(2));
    const BiidealContext bad = biideal_check(a2, words(*a2, {"1", "s2"}), GenSet{0}, GenSet{0});
    CHECK(code_of([&] { subbiideal_check(bad, {0}); }) == ErrorCode::NotABiideal);
  }
}
