#pragma once

#include <optional>
#include <vector>

#include "wgideal/coxeter.hpp"
#include "wgideal/ideal.hpp"
#include "wgideal/wgraph.hpp"

namespace wgideal {

/// (I, K) as a right ideal: (I^-1, K) as a left W-graph ideal.
bool right_ideal_check(SystemPtr sys, const std::vector<ElemId>& ideal, GenSet K);

struct BimoduleWitness {
  int s = 0;       // left generator
  int t = 0;       // right generator
  int column = 0;  // position in I where L_s R_t and R_t L_s differ
};

/// Left data (I, J) and right data (I^-1, K) on the shared basis b_w.
/// All matrices are indexed by positions of `left`.
struct BiidealContext {
  IdealContext left;
  IdealContext right;
  GenSet K;
  std::vector<int> inverse_pos;  // left position of w -> right position of w^-1
  std::vector<PolyMatrix> left_action;   // T_s on b-basis
  std::vector<PolyMatrix> right_action;  // b -> b T_t, as a matrix acting on columns

  bool prefilter = false;  // generators in the support of I avoid J ∪ K
  bool left_verified = false;
  bool right_verified = false;
  bool bimodule = false;
  std::optional<BimoduleWitness> witness;

  bool ok() const { return prefilter && left_verified && right_verified && bimodule; }
};

/// Throws whatever build_context throws for either side (NotAnIdeal when I
/// is not closed under the relevant weak order, NotInDJ, ...).
BiidealContext biideal_check(SystemPtr sys, const std::vector<ElemId>& ideal, GenSet J, GenSet K);

/// q computed on the right, transported by inversion, equals q on the left.
bool q_symmetric(const BiidealContext& b);

/// T_w b_1 = b_1 T_w for every w in W.
bool b1_central(const BiidealContext& b);

/// Generators S followed by S^op (labels "s~"), m = 2 across the blocks.
CoxeterMatrix doubled_matrix(const CoxeterMatrix& m);

/// tau(c_w) = D_J(w) ⊔ D_K(w^-1)^op and the left mu. Throws NotABiideal.
WGraph two_sided_graph(const BiidealContext& b);
CellPartition two_sided_cells(const BiidealContext& b);

struct SubbiidealCheck {
  bool closed = false;          // complement of L closed in the two-sided graph
  bool left_verified = false;   // (L, J), filled when closed
  bool right_verified = false;  // (L^-1, K), filled when closed
};
/// Throws NotContained when L leaves the ideal, NotABiideal if b failed.
SubbiidealCheck subbiideal_check(const BiidealContext& b, const std::vector<ElemId>& L);

}  // namespace wgideal
