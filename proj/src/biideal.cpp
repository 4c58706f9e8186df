#include "wgideal/biideal.hpp"

#include <algorithm>

#include "wgideal/error.hpp"

namespace wgideal {

namespace {

std::vector<ElemId> inverted(const CoxeterSystem& sys, const std::vector<ElemId>& set) {
  std::vector<ElemId> out;
  out.reserve(set.size());
  for (ElemId w : set) out.push_back(sys.inverse(w));
  std::sort(out.begin(), out.end());
  return out;
}

GenSet support(const CoxeterSystem& sys, const std::vector<ElemId>& set) {
  GenSet out;
  for (ElemId w : set)
    for (int s : sys.word(w)) out.insert(s);
  return out;
}

std::vector<LaurentPoly> mat_vec(const PolyMatrix& m, const std::vector<LaurentPoly>& v) {
  std::vector<LaurentPoly> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!v[c].is_zero() && !m(r, c).is_zero()) out[r] += m(r, c) * v[c];
    }
  return out;
}

LaurentPoly upper_q(const IdealContext& c, int a, int b) { return a < b ? c.q(a, b) : LaurentPoly(); }

}  // namespace

bool right_ideal_check(SystemPtr sys, const std::vector<ElemId>& ideal, GenSet K) {
  const auto inv = inverted(*sys, ideal);
  return is_wgraph_ideal(build_context(std::move(sys), inv, K)).ok;
}

BiidealContext biideal_check(SystemPtr sys, const std::vector<ElemId>& ideal, GenSet J, GenSet K) {
  const CoxeterSystem& W = *sys;
  BiidealContext b{build_context(sys, ideal, J), build_context(sys, inverted(W, ideal), K), K, {}, {}, {}, false, false, false, false, std::nullopt};
  const int n = static_cast<int>(b.left.size());
  b.prefilter = (support(W, b.left.elems) & (J | K)).empty();
  b.left_verified = is_wgraph_ideal(b.left).ok;
  b.right_verified = is_wgraph_ideal(b.right).ok;

  b.inverse_pos.resize(n);
  for (int i = 0; i < n; ++i) b.inverse_pos[i] = b.right.position[W.inverse(b.left.elems[i])];

  b.left_action = b_actions(b.left);
  // b_w T_t is the flat image: T_t acting on b_{w^-1} in the right context.
  for (const PolyMatrix& m : b_actions(b.right)) {
    PolyMatrix r(n, n);
    for (int x = 0; x < n; ++x)
      for (int w = 0; w < n; ++w) r(x, w) = m(b.inverse_pos[x], b.inverse_pos[w]);
    b.right_action.push_back(std::move(r));
  }

  b.bimodule = true;
  for (int s = 0; s < W.rank() && b.bimodule; ++s) {
    for (int t = 0; t < W.rank() && b.bimodule; ++t) {
      const PolyMatrix lr = mat_mul(b.left_action[s], b.right_action[t]);
      const PolyMatrix rl = mat_mul(b.right_action[t], b.left_action[s]);
      if (lr == rl) continue;
      b.bimodule = false;
      for (int c = 0; c < n; ++c) {
        if (lr.column(c) != rl.column(c)) {
          b.witness = BimoduleWitness{s, t, c};
          break;
        }
      }
    }
  }
  return b;
}

bool q_symmetric(const BiidealContext& b) {
  const int n = static_cast<int>(b.left.size());
  for (int y = 0; y < n; ++y)
    for (int w = 0; w < n; ++w) {
      if (y == w) continue;
      if (upper_q(b.left, y, w) != upper_q(b.right, b.inverse_pos[y], b.inverse_pos[w])) return false;
    }
  return true;
}

bool b1_central(const BiidealContext& b) {
  const CoxeterSystem& W = *b.left.sys;
  const std::size_t n = b.left.size();
  std::vector<LaurentPoly> e1(n);
  e1[0] = LaurentPoly::monomial(1, 0);
  std::vector<std::vector<LaurentPoly>> lv(W.size()), rv(W.size());
  lv[0] = rv[0] = e1;
  for (ElemId w = 1; w < static_cast<ElemId>(W.size()); ++w) {
    const Word& word = W.word(w);
    const int s = word.front();
    const int t = word.back();
    lv[w] = mat_vec(b.left_action[s], lv[W.left(w, s)]);
    rv[w] = mat_vec(b.right_action[t], rv[W.right(w, t)]);
    if (lv[w] != rv[w]) return false;
  }
  return true;
}

CoxeterMatrix doubled_matrix(const CoxeterMatrix& m) {
  const int r = m.rank();
  CoxeterMatrix out;
  out.labels = m.labels;
  for (const auto& l : m.labels) out.labels.push_back(l + "~");
  out.m.assign(2 * r, std::vector<int>(2 * r, 2));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      out.m[i][j] = m.m[i][j];
      out.m[r + i][r + j] = m.m[i][j];
    }
  return out;
}

WGraph two_sided_graph(const BiidealContext& b) {
  if (!b.ok()) throw Error(ErrorCode::NotABiideal, "the triple did not pass the biideal check");
  WGraph g = build_graph_from_ideal(b.left);
  const int r = b.left.sys->rank();
  g.gens = doubled_matrix(b.left.sys->matrix());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const GenSet right = b.right.part[b.inverse_pos[i]].D();
    g.tau[i] = g.tau[i] | GenSet(right.bits() << r);
  }
  return g;
}

CellPartition two_sided_cells(const BiidealContext& b) { return kl_preorder(two_sided_graph(b)); }

SubbiidealCheck subbiideal_check(const BiidealContext& b, const std::vector<ElemId>& L) {
  const CoxeterSystem& W = *b.left.sys;
  std::vector<char> in_L(b.left.size(), 0);
  for (ElemId w : L) {
    if (w < 0 || static_cast<std::size_t>(w) >= W.size() || !b.left.contains(w)) {
      throw Error(ErrorCode::NotContained, "subset is not contained in the ideal");
    }
    in_L[b.left.position[w]] = 1;
  }
  const WGraph g = two_sided_graph(b);
  std::vector<int> complement;
  for (int v = 0; v < static_cast<int>(b.left.size()); ++v)
    if (!in_L[v]) complement.push_back(v);

  SubbiidealCheck out;
  out.closed = !L.empty() && is_closed(g, complement);
  if (out.closed) {
    out.left_verified = is_wgraph_ideal(build_context(b.left.sys, L, b.left.J)).ok;
    out.right_verified = right_ideal_check(b.left.sys, L, b.K);
  }
  return out;
}

}  // namespace wgideal
