#pragma once

#include <vector>

#include "wgideal/coxeter.hpp"
#include "wgideal/ideal.hpp"

namespace wgideal {

struct StrongCheck {
  bool strong = false;
  /// When strong: Γ(L, J) equals the full subgraph of the parent on L.
  bool inherits = false;
};

/// L must lie in the ideal (NotContained) and be a left ideal (NotAnIdeal).
StrongCheck strong_subideal_check(const IdealContext& ctx, const std::vector<ElemId>& L);

/// o(X): the union of all cells at or above the cell X (positions).
/// Throws NotACell if X is not exactly one cell.
std::vector<ElemId> cell_generated_subideal(const IdealContext& ctx, const std::vector<int>& X);

/// (D_K · inner, J) in W. inner is given by elements of W lying in W_K.
/// Throws JNotInK, and InnerNotVerified when (inner, J) fails as a W_K-graph ideal.
IdealContext induce_ideal(SystemPtr sys, GenSet K, const std::vector<ElemId>& inner, GenSet J);

struct InducedCheck {
  bool strong = false;      // D_K·innerL strong inside D_K·inner0
  bool inherits = false;
  bool cells_induce = false;  // D_K X is a union of cells for every cell X of inner0
};
InducedCheck induced_strong_subideal_check(SystemPtr sys, GenSet K, const std::vector<ElemId>& inner0,
                                           const std::vector<ElemId>& innerL, GenSet J);

struct RestrictionPiece {
  ElemId d = 0;
  std::vector<ElemId> ideal;  // the v in W_K with vd in I, as elements of W
  GenSet L;                   // K ∩ dJd^-1, parent indices
  bool verified = false;      // (ideal, L) is a W_K-graph ideal
  bool in_double_cosets = false;  // d ∈ D_{K,J}
  bool union_of_cells = false;    // {vd} is a union of cells of the K-coloured graph
};

struct RestrictionReport {
  GenSet K;
  std::vector<RestrictionPiece> pieces;  // by (length, ShortLex) of d
  bool tiles = false;                    // pieces cover I disjointly
};
RestrictionReport restrict_ideal(const IdealContext& ctx, GenSet K);

/// For a strong subideal L of ctx: every nonempty L_d is a strong
/// W_K-subideal of I_d.
bool restricted_strong_subideals_hold(const IdealContext& ctx, const std::vector<ElemId>& L, GenSet K);

struct DeodharReport {
  GenSet K;
  bool tau_agree = false;
  bool mu_agree = false;
  bool p_agree = false;          // p^K_{e,d} = p_{ew_K, dw_K}
  bool q_agree = false;          // q^K_{e,d} = q_{ew_K, dw_K}, read literally
  bool scaling_agree = false;    // p_{ev,dw_K} = (-q)^{l(w_K)-l(v)} p_{ew_K,dw_K}
  bool scaling_unsigned = false; // same with q^{...} in place of (-q)^{...}
  std::vector<std::string> q_mismatches;
};
DeodharReport deodhar_check(SystemPtr sys, GenSet K);

/// Every left ideal of W contained in `within` (sorted ids), found by
/// growing from {1}. Exponential; meant for desk-scale checks.
std::vector<std::vector<ElemId>> sub_left_ideals(const CoxeterSystem& sys, const std::vector<ElemId>& within);

}  // namespace wgideal
