#include "wgideal/ideal.hpp"

#include <algorithm>

#include "wgideal/error.hpp"

namespace wgideal {

namespace {

const LaurentPoly kQ = LaurentPoly::q();
const LaurentPoly kNegQInv = LaurentPoly::monomial(-1, -1);
const LaurentPoly kQMinusQInv(-1, {-1, 0, 1});

// One column of the recursion: q_{y,z} for every y, using generator s with
// sz < z and the already-filled table for columns below z.
std::vector<LaurentPoly> compute_column(const IdealContext& ctx, int z, int s) {
  const int n = static_cast<int>(ctx.size());
  const int w = ctx.left_pos(z, s);
  std::vector<LaurentPoly> col(n);

  // acc[y] = sum over x in I with y < x < w, s not in D(x), of mu_{y,x} q_{x,w}.
  std::vector<LaurentPoly> acc(n);
  for (int x = 0; x < w; ++x) {
    if (!ctx.lt(x, w) || ctx.part[x].D().contains(s)) continue;
    const LaurentPoly& qxw = ctx.q(x, w);
    if (qxw.is_zero()) continue;
    for (int y = 0; y < x; ++y) {
      const std::int64_t m = ctx.mu(y, x);
      if (m != 0) acc[y] += LaurentPoly(m) * qxw;
    }
  }

  for (int y = 0; y < z; ++y) {
    if (!ctx.lt(y, z)) continue;
    if (y == w) {
      col[y] = 1;
      continue;
    }
    const DescentPartition& p = ctx.part[y];
    if (p.A().contains(s)) {
      col[y] = kQ * ctx.q(y, w);
      continue;
    }
    LaurentPoly v = kNegQInv * (ctx.q(y, w) - LaurentPoly(ctx.mu(y, w))) + acc[y];
    if (p.SD.contains(s)) v += ctx.q(ctx.left_pos(y, s), w);
    col[y] = std::move(v);
  }
  return col;
}

}  // namespace

IdealContext build_context(SystemPtr sys, std::vector<ElemId> ideal, GenSet J) {
  if (!sys) throw Error(ErrorCode::InvalidArgument, "no Coxeter system");
  if (ideal.empty()) throw Error(ErrorCode::InvalidArgument, "empty ideal");
  if (!J.subset_of(GenSet::full(sys->rank()))) throw Error(ErrorCode::InvalidArgument, "J has unknown generators");
  for (ElemId w : ideal) {
    if (w < 0 || static_cast<std::size_t>(w) >= sys->size()) throw Error(ErrorCode::InvalidArgument, "bad element id");
  }
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());

  IdealContext ctx;
  ctx.sys = sys;
  ctx.elems = std::move(ideal);
  ctx.J = J;
  ctx.position.assign(sys->size(), -1);
  for (std::size_t i = 0; i < ctx.size(); ++i) ctx.position[ctx.elems[i]] = static_cast<int>(i);

  for (ElemId w : ctx.elems) {
    for (int s : sys->descents(w, Side::Left).members()) {
      if (!ctx.contains(sys->left(w, s))) {
        throw Error(ErrorCode::NotAnIdeal, sys->format(w) + " is in the set but " + sys->format(sys->left(w, s)) +
                                               " is not");
      }
    }
  }
  // I ⊆ D_J and J ⊆ Pos(I) say the same thing; the first offender is named.
  for (ElemId w : ctx.elems) {
    if (!in_min_reps(*sys, w, J, Side::Left)) {
      throw Error(ErrorCode::NotInDJ, sys->format(w) + " has a right descent in J");
    }
  }
  if (!J.subset_of(pos(*sys, ctx.elems))) throw Error(ErrorCode::JNotPositive, "J is not inside Pos(I)");

  const int n = static_cast<int>(ctx.size());
  ctx.part.resize(n);
  for (int i = 0; i < n; ++i) {
    const ElemId w = ctx.elems[i];
    DescentPartition& p = ctx.part[i];
    for (int s = 0; s < sys->rank(); ++s) {
      const ElemId sw = sys->left(w, s);
      if (sys->length(sw) < sys->length(w)) {
        p.SD.insert(s);
      } else if (ctx.contains(sw)) {
        p.SA.insert(s);
      } else {
        const int t = conjugate_generator(*sys, w, s);
        if (t >= 0 && J.contains(t)) {
          p.WD.insert(s);
        } else {
          p.WA.insert(s);
        }
      }
    }
  }

  ctx.qtab.assign(static_cast<std::size_t>(n) * n, LaurentPoly());
  ctx.chosen.assign(n, -1);
  for (int z = 1; z < n; ++z) {
    const int s = ctx.part[z].SD.first();
    ctx.chosen[z] = s;
    auto col = compute_column(ctx, z, s);
    for (int y = 0; y < z; ++y) {
      if (!col[y].in_A_plus()) ctx.anomalies.push_back({y, z, col[y]});
      ctx.qtab[static_cast<std::size_t>(y) * n + z] = std::move(col[y]);
    }
  }
  return ctx;
}

WGraph build_graph_from_ideal(const IdealContext& ctx) {
  WGraph g;
  g.gens = ctx.sys->matrix();
  const int n = static_cast<int>(ctx.size());
  for (int i = 0; i < n; ++i) {
    g.names.push_back(ctx.name(i));
    g.tags.push_back(ctx.elems[i]);
    g.tau.push_back(ctx.part[i].D());
  }
  for (int w = 0; w < n; ++w) {
    for (int y = 0; y < w; ++y) {
      const std::int64_t m = ctx.mu(y, w);
      if (m == 0) continue;
      g.set_weight(y, w, m);
      g.set_weight(w, y, m);
    }
  }
  return g;
}

namespace {

std::vector<PolyMatrix> direct_formula_actions(const IdealContext& ctx) {
  const int n = static_cast<int>(ctx.size());
  std::vector<PolyMatrix> out;
  for (int s = 0; s < ctx.sys->rank(); ++s) {
    PolyMatrix m(n, n);
    for (int w = 0; w < n; ++w) {
      const DescentPartition& p = ctx.part[w];
      if (p.D().contains(s)) {
        m(w, w) = kNegQInv;
        continue;
      }
      m(w, w) = kQ;
      if (p.SA.contains(s)) m(ctx.left_pos(w, s), w) += 1;
      for (int y = 0; y < w; ++y) {
        if (ctx.lt(y, w) && ctx.part[y].D().contains(s)) m(y, w) += ctx.mu(y, w);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

IdealReport is_wgraph_ideal(const IdealContext& ctx) {
  IdealReport rep;
  const WGraph g = build_graph_from_ideal(ctx);
  rep.braid = verify_wgraph(g);
  const int n = static_cast<int>(ctx.size());
  for (int w = 0; w < n; ++w) {
    for (int y = 0; y < w; ++y) {
      if (ctx.mu(y, w) == 0 || ctx.length(w) - ctx.length(y) <= 1) continue;
      if (!ctx.part[w].D().subset_of(ctx.part[y].D())) rep.main1_violations.push_back({y, w});
    }
  }
  const auto direct = direct_formula_actions(ctx);
  rep.direct_formula_agrees = true;
  for (int s = 0; s < ctx.sys->rank(); ++s) {
    if (!(direct[s] == action_matrix(g, s))) rep.direct_formula_agrees = false;
  }
  rep.anomalies = ctx.anomalies;
  rep.ok = rep.braid.ok && rep.main1_violations.empty() && rep.anomalies.empty();
  return rep;
}

PolyMatrix standard_basis_matrix(const IdealContext& ctx) {
  const int n = static_cast<int>(ctx.size());
  PolyMatrix Q = PolyMatrix::identity(n);
  for (int w = 0; w < n; ++w)
    for (int y = 0; y < w; ++y) {
      if (!ctx.q(y, w).is_zero()) Q(y, w) = kQ * ctx.q(y, w);
    }
  return Q;
}

PolyMatrix standard_basis_inverse(const IdealContext& ctx) { return unitriangular_inverse(standard_basis_matrix(ctx)); }

LaurentPoly p_poly(const PolyMatrix& inverse, int y, int x) {
  if (y == x) return {};
  return (-inverse(y, x)).shifted(-1);
}

std::vector<PolyMatrix> c_actions(const IdealContext& ctx) {
  const WGraph g = build_graph_from_ideal(ctx);
  std::vector<PolyMatrix> out;
  for (int s = 0; s < ctx.sys->rank(); ++s) out.push_back(action_matrix(g, s));
  return out;
}

std::vector<PolyMatrix> b_actions(const IdealContext& ctx) {
  const PolyMatrix Q = standard_basis_matrix(ctx);
  const PolyMatrix Qinv = unitriangular_inverse(Q);
  std::vector<PolyMatrix> out;
  for (const auto& A : c_actions(ctx)) out.push_back(mat_mul(Qinv, mat_mul(A, Q)));
  return out;
}

namespace {

std::vector<RPoly> r_from_b_action(const PolyMatrix& Mb, int w) {
  std::vector<RPoly> out;
  for (std::size_t y = 0; y < Mb.rows(); ++y) {
    LaurentPoly r = static_cast<int>(y) == w ? kQ - Mb(y, w) : -Mb(y, w);
    if (!r.is_zero()) out.push_back({static_cast<int>(y), std::move(r)});
  }
  return out;
}

}  // namespace

std::vector<RPoly> r_polynomials(const IdealContext& ctx, int w, int s) {
  if (w < 0 || static_cast<std::size_t>(w) >= ctx.size()) throw Error(ErrorCode::InvalidArgument, "bad position");
  if (s < 0 || s >= ctx.sys->rank()) throw Error(ErrorCode::InvalidArgument, "bad generator");
  if (!ctx.part[w].WA.contains(s)) {
    throw Error(ErrorCode::NotWeakAscent,
                ctx.sys->matrix().labels[s] + " is not a weak ascent of " + ctx.name(w));
  }
  const auto Mb = b_actions(ctx);
  return r_from_b_action(Mb[s], w);
}

bool check_bar_compatibility(const IdealContext& ctx) {
  const PolyMatrix Q = standard_basis_matrix(ctx);
  const PolyMatrix Qbar = Q.bar();
  const int n = static_cast<int>(ctx.size());
  for (const auto& A : c_actions(ctx)) {
    const PolyMatrix lhs = mat_mul(A, Q).bar();
    const PolyMatrix barTs = mat_sub(A, mat_scale(kQMinusQInv, PolyMatrix::identity(n)));
    if (!(lhs == mat_mul(barTs, Qbar))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

bool PropertyReport::ok() const { return all().empty(); }

std::vector<std::string> PropertyReport::all() const {
  std::vector<std::string> out;
  for (const auto* v : {&partition, &parity, &vanishing, &left_order, &main1, &standard_action, &bar})
    out.insert(out.end(), v->begin(), v->end());
  return out;
}

PropertyReport check_properties(const IdealContext& ctx) {
  PropertyReport rep;
  const CoxeterSystem& sys = *ctx.sys;
  const auto& labels = sys.matrix().labels;
  const int n = static_cast<int>(ctx.size());
  const GenSet S = GenSet::full(sys.rank());
  auto pair_name = [&](int y, int w) { return "(" + ctx.name(y) + ", " + ctx.name(w) + ")"; };

  for (int i = 0; i < n; ++i) {
    const DescentPartition& p = ctx.part[i];
    const bool disjoint = (p.SD & p.SA).empty() && (p.SD & p.WD).empty() && (p.SD & p.WA).empty() &&
                          (p.SA & p.WD).empty() && (p.SA & p.WA).empty() && (p.WD & p.WA).empty();
    if (!disjoint || (p.SD | p.SA | p.WD | p.WA) != S) rep.partition.push_back(ctx.name(i) + ": not a partition of S");
    // Weak descents are exactly the s with sw outside I but still in D_J.
    for (int s = 0; s < sys.rank(); ++s) {
      const ElemId sw = sys.left(ctx.elems[i], s);
      const bool weak = sys.length(sw) > ctx.length(i) && !ctx.contains(sw);
      if (weak && (p.WD.contains(s) != !in_min_reps(sys, sw, ctx.J, Side::Left))) {
        rep.partition.push_back(ctx.name(i) + ": weak class of " + labels[s] + " disagrees with D_J test");
      }
    }
  }
  if (ctx.part[0].D() != ctx.J) rep.partition.push_back("D(1) differs from J");

  for (int w = 0; w < n; ++w) {
    for (int y = 0; y < w; ++y) {
      const LaurentPoly& q = ctx.q(y, w);
      if (!ctx.lt(y, w)) {
        if (!q.is_zero()) rep.parity.push_back(pair_name(y, w) + ": nonzero off the Bruhat order");
        continue;
      }
      const int d = ctx.length(w) - ctx.length(y);
      if (d % 2 == 1) {
        if (!q.is_poly_in_q2()) rep.parity.push_back(pair_name(y, w) + ": odd gap but " + q.to_string());
      } else if (q.constant_term() != 0 || !q.shifted(-1).is_poly_in_q2()) {
        rep.parity.push_back(pair_name(y, w) + ": even gap but " + q.to_string());
      }
      if (!(ctx.part[w].WD - ctx.part[y].D()).empty() && !q.is_zero()) {
        rep.vanishing.push_back(pair_name(y, w) + ": should vanish, got " + q.to_string());
      }
      if (ctx.mu(y, w) != 0 && d > 1 && !ctx.part[w].D().subset_of(ctx.part[y].D())) {
        rep.main1.push_back(pair_name(y, w) + ": mu nonzero but D(w) not inside D(y)");
      }
    }
  }

  const WGraph g = build_graph_from_ideal(ctx);
  const CellPartition cells = kl_preorder(g);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!sys.weak_leq(ctx.elems[x], ctx.elems[y], Side::Left)) continue;
      if (!cells.leq[cells.cell_of[y]][cells.cell_of[x]]) {
        rep.left_order.push_back(pair_name(x, y) + ": weak order not reflected in the graph preorder");
      }
    }
  }

  const auto Mb = b_actions(ctx);
  for (int s = 0; s < sys.rank(); ++s) {
    const PolyMatrix& M = Mb[s];
    for (int w = 0; w < n; ++w) {
      const DescentPartition& p = ctx.part[w];
      std::vector<LaurentPoly> expect(n);
      const std::string where = "T_" + labels[s] + " b_" + ctx.name(w);
      if (p.SA.contains(s)) {
        expect[ctx.left_pos(w, s)] = 1;
      } else if (p.SD.contains(s)) {
        expect[ctx.left_pos(w, s)] = 1;
        expect[w] = kQMinusQInv;
      } else if (p.WD.contains(s)) {
        expect[w] = kNegQInv;
      } else {
        const ElemId sw = sys.left(ctx.elems[w], s);
        for (const auto& [y, r] : r_from_b_action(M, w)) {
          if (!r.in_qA_plus()) rep.standard_action.push_back(where + ": r not in qA+ at " + ctx.name(y));
          if (y == w) rep.standard_action.push_back(where + ": r_{w,w} = " + r.to_string());
          if (!sys.bruhat_lt(ctx.elems[y], sw)) rep.standard_action.push_back(where + ": r outside y < sw at " + ctx.name(y));
        }
        for (int y = 0; y < n; ++y) {
          const LaurentPoly r = y == w ? kQ - M(y, w) : -M(y, w);
          if (ctx.part[y].WA.contains(s) && !r.is_zero()) {
            rep.standard_action.push_back(where + ": r nonzero at weak ascent " + ctx.name(y));
          }
          if (ctx.part[y].SA.contains(s)) {
            const int sy = ctx.left_pos(y, s);
            const LaurentPoly rsy = sy == w ? kQ - M(sy, w) : -M(sy, w);
            // b_sy - q b_y spans part of the (-q^-1)-eigenspace, which forces
            // r_y = -q r_sy.
            if (r != -(kQ * rsy)) rep.standard_action.push_back(where + ": r_y != -q r_sy at " + ctx.name(y));
          }
        }
        continue;
      }
      if (M.column(w) != expect) rep.standard_action.push_back(where + ": wrong standard-basis action");
    }
  }

  if (!check_bar_compatibility(ctx)) rep.bar.push_back("bar involution is not compatible");
  return rep;
}

std::vector<ChoiceDisagreement> diagnose_choices(const IdealContext& ctx) {
  std::vector<ChoiceDisagreement> out;
  const int n = static_cast<int>(ctx.size());
  for (int z = 1; z < n; ++z) {
    for (int s : ctx.part[z].SD.members()) {
      if (s == ctx.chosen[z]) continue;
      const auto alt = compute_column(ctx, z, s);
      for (int y = 0; y < z; ++y) {
        if (alt[y] != ctx.q(y, z)) out.push_back({z, ctx.chosen[z], s, y, ctx.q(y, z), alt[y]});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

IdealContext regular_context(SystemPtr sys) {
  std::vector<ElemId> all(sys->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElemId>(i);
  return build_context(std::move(sys), std::move(all), GenSet());
}

KlSpecialCases kl_special_cases(SystemPtr sys) {
  KlSpecialCases out;
  const IdealContext ctx = regular_context(sys);
  const int n = static_cast<int>(ctx.size());
  const int top = n - 1;
  const PolyMatrix Qinv = standard_basis_inverse(ctx);
  // S(W, ∅) is the regular module with b_w = T_w.
  for (int y = 0; y < n; ++y) out.c_longest.add(ctx.elems[y], Qinv(y, top));

  HeckeElt formula;
  const int lmax = sys->length(sys->longest());
  for (int y = 0; y < n; ++y) {
    const int e = lmax - sys->length(ctx.elems[y]);
    formula.add(ctx.elems[y], LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, e));
  }
  out.formula_ok = out.c_longest == formula;
  out.eigen_ok = true;
  for (int s = 0; s < sys->rank(); ++s) {
    if (!(t_mul_left(*sys, s, out.c_longest) == kNegQInv * out.c_longest)) out.eigen_ok = false;
  }
  out.bar_invariant = bar_hecke(*sys, out.c_longest) == out.c_longest;

  const WGraph g = build_graph_from_ideal(ctx);
  const CellPartition cells = kl_preorder(g);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sys->rank()); ++bits) {
    KlSpecialCases::PerK pk;
    pk.K = GenSet(bits);
    const auto DK = min_coset_reps(*sys, pk.K, Side::Left);
    std::vector<char> in_dk(n, 0);
    for (ElemId d : DK) in_dk[ctx.position[d]] = 1;
    std::vector<int> touched;
    for (ElemId d : DK) touched.push_back(cells.cell_of[ctx.position[d]]);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    pk.dk_union_of_cells = true;
    for (int c : touched) {
      std::vector<ElemId> members;
      for (int v : cells.cells[c]) {
        members.push_back(ctx.elems[v]);
        if (!in_dk[v]) pk.dk_union_of_cells = false;
      }
      pk.dk_cells.push_back(std::move(members));
    }
    std::vector<int> complement;
    for (int v = 0; v < n; ++v) {
      if (!in_dk[v]) complement.push_back(v);
    }
    pk.dk_complement_closed = is_closed(g, complement);
    const ElemId wK = longest_in(*sys, pk.K);
    std::vector<int> dkwk;
    for (ElemId d : DK) dkwk.push_back(ctx.position[sys->mul(d, wK)]);
    pk.dkwk_closed = is_closed(g, dkwk);
    out.per_k.push_back(std::move(pk));
  }
  return out;
}

}  // namespace wgideal
