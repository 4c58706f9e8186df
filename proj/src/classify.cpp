#include "wgideal/classify.hpp"

#include <algorithm>

#include "wgideal/biideal.hpp"
#include "wgideal/error.hpp"
#include "wgideal/parabolic.hpp"

namespace wgideal {

namespace {

constexpr int kS = 0;
constexpr int kT = 1;

struct Candidate {
  std::vector<ElemId> ideal;
  Rank2Shape shape;
  GenSet J, K;
};

std::vector<Candidate> candidates(const CoxeterSystem& sys, Rank2Mode mode) {
  std::vector<ElemId> all(sys.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElemId>(i);
  std::vector<Candidate> out;
  const GenSet subsets[] = {GenSet(), GenSet::single(kS), GenSet::single(kT), GenSet::full(2)};
  for (auto& ideal : sub_left_ideals(sys, all)) {
    if (mode == Rank2Mode::Biideal && !is_weak_ideal(sys, ideal, Side::Right)) continue;
    const Rank2Shape shape = rank2_shape(sys, ideal);
    for (GenSet J : subsets) {
      if (mode == Rank2Mode::Ideal) {
        out.push_back({ideal, shape, J, GenSet()});
        continue;
      }
      for (GenSet K : subsets) out.push_back({ideal, shape, J, K});
    }
  }
  return out;
}

// A candidate outside D_J (or failing any other precondition) is simply
// not a W-graph ideal, so errors count as rejection.
bool verdict(const SystemPtr& sys, const Candidate& c, Rank2Mode mode) {
  try {
    if (mode == Rank2Mode::Ideal) return is_wgraph_ideal(build_context(sys, c.ideal, c.J)).ok;
    return biideal_check(sys, c.ideal, c.J, c.K).ok();
  } catch (const Error&) {
    return false;
  }
}

Rank2Table assemble(int m, Rank2Mode mode, SystemPtr sys, std::vector<Candidate> cands,
                    const std::vector<char>& accepted) {
  Rank2Table table;
  table.m = m;
  table.mode = mode;
  table.sys = std::move(sys);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    Rank2Row row;
    row.ideal = std::move(cands[i].ideal);
    row.shape = cands[i].shape;
    row.J = cands[i].J;
    row.K = cands[i].K;
    row.accepted = accepted[i] != 0;
    row.predicted = mode == Rank2Mode::Ideal ? predicted_ideal(m, row.shape, row.J, &row.family)
                                             : predicted_biideal(m, row.shape, row.J, row.K, &row.family);
    if (row.accepted != row.predicted) table.mismatches.push_back(static_cast<int>(i));
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool divides(int a, int b) { return a > 0 && b % a == 0; }

}  // namespace

ElemId alternating_element(const CoxeterSystem& sys, int ending_in, int l) {
  Word w(l);
  for (int i = 0; i < l; ++i) w[l - 1 - i] = (i % 2 == 0) ? ending_in : 1 - ending_in;
  return sys.from_word(w);
}

Rank2Shape rank2_shape(const CoxeterSystem& sys, const std::vector<ElemId>& ideal) {
  Rank2Shape shape;
  const int m = sys.m(kS, kT);
  shape.whole = ideal.size() == sys.size();
  auto has = [&](ElemId w) { return std::binary_search(ideal.begin(), ideal.end(), w); };
  for (int l = 1; l < m; ++l) {
    if (has(alternating_element(sys, kT, l))) shape.h = l;
    if (has(alternating_element(sys, kS, l))) shape.k = l;
  }
  if (shape.whole) shape.h = shape.k = m;
  return shape;
}

bool predicted_ideal(int m, const Rank2Shape& sh, GenSet J, std::string* why) {
  std::string family;
  const bool trivial = !sh.whole && sh.h == 0 && sh.k == 0;
  if (J == GenSet::full(2)) {
    if (trivial) family = "{1} with J = S";
  } else if (J == GenSet::single(kS)) {
    if (!sh.whole && sh.k == 0 && sh.h == m - 1) family = "D_J for J = {s}";
    else if (!sh.whole && sh.k == 0 && divides(sh.h + 2, m)) family = "[..st] chain with k+2 | m, J = {s}";
  } else if (J == GenSet::single(kT)) {
    if (!sh.whole && sh.h == 0 && sh.k == m - 1) family = "D_J for J = {t}";
    else if (!sh.whole && sh.h == 0 && divides(sh.k + 2, m)) family = "[..ts] chain with k+2 | m, J = {t}";
  } else {
    if (sh.whole) family = "W with J = {}";
    else if (divides(sh.h + 1, m) && divides(sh.k + 1, m)) family = "I_{h,k} with h+1, k+1 | m, J = {}";
  }
  if (why) *why = family;
  return !family.empty();
}

bool predicted_biideal(int m, const Rank2Shape& sh, GenSet J, GenSet K, std::string* why) {
  std::string family;
  const bool none = J.empty() && K.empty();
  const bool trivial = !sh.whole && sh.h == 0 && sh.k == 0;
  const bool even = m % 2 == 0;
  if (trivial) {
    const auto extreme = [](GenSet X) { return X.empty() || X == GenSet::full(2); };
    if (even) family = "{1}, m even, any J and K";
    else if (extreme(J) && extreme(K)) family = "{1}, m odd, J and K in {{}, S}";
  } else if (none) {
    if (sh.whole) family = "(W, {}, {})";
    else if (sh.h == sh.k && divides(sh.k + 1, m)) family = "length ball with k+1 | m";
    else if (sh.h == 1 && sh.k == 0 && even) family = "{1, t}, m even";
    else if (sh.h == 0 && sh.k == 1 && even) family = "{1, s}, m even";
  }
  if (why) *why = family;
  return !family.empty();
}

Rank2Table classify_rank2(int m, Rank2Mode mode) {
  SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(m));
  auto cands = candidates(*sys, mode);
  std::vector<char> accepted(cands.size(), 0);
  const long n = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) accepted[i] = verdict(sys, cands[i], mode) ? 1 : 0;
  return assemble(m, mode, std::move(sys), std::move(cands), accepted);
}

namespace serial {
Rank2Table classify_rank2(int m, Rank2Mode mode) {
  SystemPtr sys = CoxeterSystem::enumerate(CoxeterMatrix::dihedral(m));
  auto cands = candidates(*sys, mode);
  std::vector<char> accepted(cands.size(), 0);
  for (std::size_t i = 0; i < cands.size(); ++i) accepted[i] = verdict(sys, cands[i], mode) ? 1 : 0;
  return assemble(m, mode, std::move(sys), std::move(cands), accepted);
}
}  // namespace serial

bool uniform_expansion_holds(const IdealContext& ctx) {
  const CoxeterSystem& sys = *ctx.sys;
  const Rank2Shape sh = rank2_shape(sys, ctx.elems);
  const int bound = std::min(sh.h, sh.k) + 1;
  const auto act = c_actions(ctx);
  const int n = static_cast<int>(ctx.size());
  for (int w = 0; w < n; ++w) {
    const int lw = ctx.length(w);
    if (lw > bound) continue;
    std::vector<LaurentPoly> v(n);
    v[0] = 1;
    const Word& word = sys.word(ctx.elems[w]);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      std::vector<LaurentPoly> next(n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (!v[c].is_zero()) next[r] += act[*it](r, c) * v[c];
      v = std::move(next);
    }
    for (int x = 0; x < n; ++x) {
      LaurentPoly want;
      if (x == w) want = 1;
      else if (ctx.length(x) < lw) want = LaurentPoly::monomial(1, lw - ctx.length(x));
      if (v[x] != want) return false;
    }
    // Every shorter element of W must be present for the sum to be complete.
    int shorter = 0;
    for (std::size_t x = 0; x < sys.size(); ++x) shorter += sys.length(static_cast<ElemId>(x)) < lw;
    int shorter_in = 0;
    for (int x = 0; x < n; ++x) shorter_in += ctx.length(x) < lw;
    if (shorter != shorter_in) return false;
  }
  return true;
}

}  // namespace wgideal
