#include "wgideal/parabolic.hpp"

#include <algorithm>

#include "wgideal/error.hpp"

namespace wgideal {

namespace {

std::vector<int> positions_of(const IdealContext& ctx, const std::vector<ElemId>& set) {
  std::vector<int> out;
  for (ElemId w : set) out.push_back(ctx.position[w]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemId> to_local(const ParabolicSubsystem& P, const std::vector<ElemId>& set) {
  std::vector<ElemId> out;
  for (ElemId w : set) {
    const ElemId v = P.from_parent[w];
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "element is not in the parabolic subgroup");
    out.push_back(v);
  }
  return out;
}

bool same_graph(const WGraph& a, const WGraph& b) { return a.tau == b.tau && a.mu == b.mu; }

}  // namespace

StrongCheck strong_subideal_check(const IdealContext& ctx, const std::vector<ElemId>& L) {
  for (ElemId w : L) {
    if (w < 0 || static_cast<std::size_t>(w) >= ctx.sys->size() || !ctx.contains(w)) {
      throw Error(ErrorCode::NotContained, "subset is not contained in the ideal");
    }
  }
  if (!is_weak_ideal(*ctx.sys, L, Side::Left)) throw Error(ErrorCode::NotAnIdeal, "subset is not a left ideal");

  StrongCheck out;
  const WGraph g = build_graph_from_ideal(ctx);
  const auto inside = positions_of(ctx, L);
  std::vector<int> complement;
  for (int v = 0; v < static_cast<int>(ctx.size()); ++v) {
    if (!std::binary_search(inside.begin(), inside.end(), v)) complement.push_back(v);
  }
  out.strong = is_closed(g, complement);
  if (out.strong) {
    const IdealContext sub = build_context(ctx.sys, L, ctx.J);
    out.inherits = is_wgraph_ideal(sub).ok && same_graph(build_graph_from_ideal(sub), g.subgraph(inside));
  }
  return out;
}

std::vector<ElemId> cell_generated_subideal(const IdealContext& ctx, const std::vector<int>& X) {
  const CellPartition cells = kl_preorder(build_graph_from_ideal(ctx));
  if (X.empty()) throw Error(ErrorCode::NotACell, "empty set");
  for (int x : X) {
    if (x < 0 || static_cast<std::size_t>(x) >= ctx.size()) throw Error(ErrorCode::NotACell, "position out of range");
  }
  const int c = cells.cell_of[X.front()];
  std::vector<int> sorted = X;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != cells.cells[c]) throw Error(ErrorCode::NotACell, "set is not a cell");
  std::vector<ElemId> out;
  for (std::size_t y = 0; y < cells.cells.size(); ++y) {
    if (!cells.leq[c][y]) continue;
    for (int v : cells.cells[y]) out.push_back(ctx.elems[v]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdealContext induce_ideal(SystemPtr sys, GenSet K, const std::vector<ElemId>& inner, GenSet J) {
  if (!J.subset_of(K)) throw Error(ErrorCode::JNotInK, "J must be contained in K");
  const ParabolicSubsystem P = ParabolicSubsystem::make(*sys, K);
  const IdealContext inner_ctx = build_context(P.sub, to_local(P, inner), P.to_local(J));
  if (!is_wgraph_ideal(inner_ctx).ok) {
    throw Error(ErrorCode::InnerNotVerified, "inner ideal is not a W_K-graph ideal");
  }
  std::vector<ElemId> product;
  for (ElemId d : min_coset_reps(*sys, K, Side::Left)) {
    for (ElemId v : inner) product.push_back(sys->mul(d, v));
  }
  return build_context(std::move(sys), std::move(product), J);
}

InducedCheck induced_strong_subideal_check(SystemPtr sys, GenSet K, const std::vector<ElemId>& inner0,
                                           const std::vector<ElemId>& innerL, GenSet J) {
  InducedCheck out;
  const IdealContext big = induce_ideal(sys, K, inner0, J);
  const auto DK = min_coset_reps(*sys, K, Side::Left);
  std::vector<ElemId> induced_L;
  for (ElemId d : DK)
    for (ElemId v : innerL) induced_L.push_back(sys->mul(d, v));
  const StrongCheck sc = strong_subideal_check(big, induced_L);
  out.strong = sc.strong;
  out.inherits = sc.inherits;

  const ParabolicSubsystem P = ParabolicSubsystem::make(*sys, K);
  const IdealContext inner_ctx = build_context(P.sub, to_local(P, inner0), P.to_local(J));
  const CellPartition inner_cells = kl_preorder(build_graph_from_ideal(inner_ctx));
  const CellPartition big_cells = kl_preorder(build_graph_from_ideal(big));
  out.cells_induce = true;
  for (const auto& X : inner_cells.cells) {
    std::vector<int> members;
    for (ElemId d : DK)
      for (int x : X) members.push_back(big.position[sys->mul(d, P.to_parent[inner_ctx.elems[x]])]);
    std::sort(members.begin(), members.end());
    for (int v : members) {
      for (int u : big_cells.cells[big_cells.cell_of[v]]) {
        if (!std::binary_search(members.begin(), members.end(), u)) out.cells_induce = false;
      }
    }
  }
  return out;
}

RestrictionReport restrict_ideal(const IdealContext& ctx, GenSet K) {
  const CoxeterSystem& sys = *ctx.sys;
  RestrictionReport rep;
  rep.K = K;
  const ParabolicSubsystem P = ParabolicSubsystem::make(sys, K);
  const WGraph coloured = restrict_colours(build_graph_from_ideal(ctx), K);
  const CellPartition cells = kl_preorder(coloured);

  std::vector<int> cover(ctx.size(), 0);
  for (ElemId d : ctx.elems) {
    if (!in_min_reps(sys, d, K, Side::Right)) continue;
    RestrictionPiece piece;
    piece.d = d;
    std::vector<int> verts;
    for (ElemId v : P.to_parent) {
      const ElemId vd = sys.mul(v, d);
      if (!ctx.contains(vd)) continue;
      piece.ideal.push_back(v);
      verts.push_back(ctx.position[vd]);
      ++cover[ctx.position[vd]];
    }
    std::sort(piece.ideal.begin(), piece.ideal.end());
    std::sort(verts.begin(), verts.end());
    for (int s : K.members()) {
      const int t = conjugate_generator(sys, d, s);
      if (t >= 0 && ctx.J.contains(t)) piece.L.insert(s);
    }
    piece.in_double_cosets = in_min_reps(sys, d, ctx.J, Side::Left) && in_min_reps(sys, d, K, Side::Right);
    try {
      const IdealContext local = build_context(P.sub, to_local(P, piece.ideal), P.to_local(piece.L));
      piece.verified = is_wgraph_ideal(local).ok;
    } catch (const Error&) {
      piece.verified = false;
    }
    piece.union_of_cells = true;
    for (int v : verts) {
      for (int u : cells.cells[cells.cell_of[v]]) {
        if (!std::binary_search(verts.begin(), verts.end(), u)) piece.union_of_cells = false;
      }
    }
    rep.pieces.push_back(std::move(piece));
  }
  rep.tiles = std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
  return rep;
}

bool restricted_strong_subideals_hold(const IdealContext& ctx, const std::vector<ElemId>& L, GenSet K) {
  const CoxeterSystem& sys = *ctx.sys;
  const ParabolicSubsystem P = ParabolicSubsystem::make(sys, K);
  std::vector<char> in_L(sys.size(), 0);
  for (ElemId w : L) in_L[w] = 1;
  for (const auto& piece : restrict_ideal(ctx, K).pieces) {
    std::vector<ElemId> Ld;
    for (ElemId v : piece.ideal) {
      if (in_L[sys.mul(v, piece.d)]) Ld.push_back(v);
    }
    if (Ld.empty()) continue;
    try {
      const IdealContext local = build_context(P.sub, to_local(P, piece.ideal), P.to_local(piece.L));
      if (!strong_subideal_check(local, to_local(P, Ld)).strong) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

DeodharReport deodhar_check(SystemPtr sys, GenSet K) {
  DeodharReport rep;
  rep.K = K;
  const auto DK = min_coset_reps(*sys, K, Side::Left);
  const IdealContext ck = build_context(sys, DK, K);
  const IdealContext cw = regular_context(sys);
  const PolyMatrix pk_inv = standard_basis_inverse(ck);
  const PolyMatrix pw_inv = standard_basis_inverse(cw);
  const ElemId wK = longest_in(*sys, K);
  const int lwK = sys->length(wK);
  const int n = static_cast<int>(ck.size());

  auto phi = [&](int i) { return cw.position[sys->mul(ck.elems[i], wK)]; };
  auto sym_mu = [](const IdealContext& c, int a, int b) {
    if (a == b) return std::int64_t{0};
    return a < b ? c.mu(a, b) : c.mu(b, a);
  };

  rep.tau_agree = rep.mu_agree = rep.p_agree = rep.q_agree = true;
  for (int d = 0; d < n; ++d) {
    if (ck.part[d].D() != cw.part[phi(d)].D()) rep.tau_agree = false;
    for (int e = 0; e < n; ++e) {
      if (sym_mu(ck, e, d) != sym_mu(cw, phi(e), phi(d))) rep.mu_agree = false;
      if (e == d) continue;
      if (p_poly(pk_inv, e, d) != p_poly(pw_inv, phi(e), phi(d))) rep.p_agree = false;
      const LaurentPoly qk = e < d ? ck.q(e, d) : LaurentPoly();
      const LaurentPoly qw = phi(e) < phi(d) ? cw.q(phi(e), phi(d)) : LaurentPoly();
      if (qk != qw) {
        rep.q_agree = false;
        rep.q_mismatches.push_back("e=" + ck.name(e) + " d=" + ck.name(d) + ": " + qk.to_string() + " vs " +
                                   qw.to_string());
      }
    }
  }

  const ParabolicSubsystem P = ParabolicSubsystem::make(*sys, K);
  rep.scaling_agree = rep.scaling_unsigned = true;
  for (int d = 0; d < n; ++d) {
    for (int e = 0; e < n; ++e) {
      if (e == d) continue;
      const LaurentPoly base = p_poly(pw_inv, phi(e), phi(d));
      for (ElemId v : P.to_parent) {
        const int k = lwK - sys->length(v);
        const LaurentPoly lhs = p_poly(pw_inv, cw.position[sys->mul(ck.elems[e], v)], phi(d));
        if (lhs != LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, k) * base) rep.scaling_agree = false;
        if (lhs != base.shifted(k)) rep.scaling_unsigned = false;
      }
    }
  }
  return rep;
}

std::vector<std::vector<ElemId>> sub_left_ideals(const CoxeterSystem& sys, const std::vector<ElemId>& within) {
  std::vector<ElemId> order = within;
  std::sort(order.begin(), order.end());
  std::vector<std::vector<ElemId>> out;
  std::vector<char> chosen(sys.size(), 0);
  std::vector<ElemId> current;
  // Ids increase with length, so lower covers are decided before w.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      if (!current.empty()) out.push_back(current);
      return;
    }
    const ElemId w = order[i];
    self(self, i + 1);
    bool ok = w == 0 || !current.empty();
    for (int s : sys.descents(w, Side::Left).members()) ok = ok && chosen[sys.left(w, s)];
    if (!ok) return;
    chosen[w] = 1;
    current.push_back(w);
    self(self, i + 1);
    current.pop_back();
    chosen[w] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wgideal
