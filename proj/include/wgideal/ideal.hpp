#pragma once

#include <string>
#include <vector>

#include "wgideal/coxeter.hpp"
#include "wgideal/hecke.hpp"
#include "wgideal/laurent.hpp"
#include "wgideal/wgraph.hpp"

namespace wgideal {

/// Strong/weak descents and ascents of one element of an ideal.
struct DescentPartition {
  GenSet SD, SA, WD, WA;
  GenSet D() const { return SD | WD; }
  GenSet A() const { return SA | WA; }
};

/// A computed q_{y,z} outside Z[q]; the recursion keeps going.
struct Anomaly {
  int y = 0;  // positions in the ideal
  int z = 0;
  LaurentPoly value;
};

/// An ideal I of the left weak order with J, its descent data and the
/// q-polynomials of the recursion. Positions 0..n-1 index I in (length,
/// ShortLex) order; every table uses positions.
struct IdealContext {
  SystemPtr sys;
  std::vector<ElemId> elems;
  std::vector<int> position;  // W id -> position, or -1
  GenSet J;
  std::vector<DescentPartition> part;
  std::vector<int> chosen;  // generator used for each z != 1, -1 at the identity
  std::vector<LaurentPoly> qtab;
  std::vector<Anomaly> anomalies;

  std::size_t size() const { return elems.size(); }
  const LaurentPoly& q(int y, int w) const { return qtab[static_cast<std::size_t>(y) * size() + w]; }
  std::int64_t mu(int y, int w) const { return q(y, w).constant_term(); }
  bool lt(int y, int w) const { return sys->bruhat_lt(elems[y], elems[w]); }
  int length(int i) const { return sys->length(elems[i]); }
  /// Position of s * elems[i], or -1 if outside I.
  int left_pos(int i, int s) const { return position[sys->left(elems[i], s)]; }
  bool contains(ElemId w) const { return position[w] >= 0; }
  std::string name(int i) const { return sys->format(elems[i]); }
};

/// Validates the ideal and J, computes the descent partition and fills the
/// q table. The descent used for z is the smallest-index generator of SD(z).
IdealContext build_context(SystemPtr sys, std::vector<ElemId> ideal, GenSet J);

/// Vertices c_w with tau(c_w) = D(w) and the symmetric mu.
WGraph build_graph_from_ideal(const IdealContext& ctx);

struct Main1Violation {
  int y = 0;
  int w = 0;  // mu_{y,w} != 0, l(w) - l(y) > 1, D(w) not inside D(y)
};

struct IdealReport {
  bool ok = false;
  VerifyReport braid;
  std::vector<Main1Violation> main1_violations;
  /// Whether the graph action equals the direct formula
  /// T_s c_w = q c_w + [c_sw if s in SA(w)] + sum_{y<w, s in D(y)} mu_{y,w} c_y.
  bool direct_formula_agrees = false;
  std::vector<Anomaly> anomalies;
};

IdealReport is_wgraph_ideal(const IdealContext& ctx);

/// Columns are b_w in the c-basis: 1 on the diagonal, q*q_{y,w} above.
PolyMatrix standard_basis_matrix(const IdealContext& ctx);
/// c_w in the b-basis; entry (y, x) is -q*p_{y,x}.
PolyMatrix standard_basis_inverse(const IdealContext& ctx);
/// p_{y,x} read off the inverse matrix.
LaurentPoly p_poly(const PolyMatrix& inverse, int y, int x);
/// Generator actions on the c-basis (graph) and b-basis.
std::vector<PolyMatrix> c_actions(const IdealContext& ctx);
std::vector<PolyMatrix> b_actions(const IdealContext& ctx);

struct RPoly {
  int y = 0;
  LaurentPoly r;
};
/// T_s b_w = q b_w - sum_y r^s_{y,w} b_y for s in WA(w); nonzero r only.
/// Throws NotWeakAscent otherwise.
std::vector<RPoly> r_polynomials(const IdealContext& ctx, int w, int s);

/// bar(T_s b_w) = bar(T_s) bar(b_w) for all s, w, with bar fixing every c_w.
bool check_bar_compatibility(const IdealContext& ctx);

/// Each failed invariant as a readable line; empty when all hold.
struct PropertyReport {
  std::vector<std::string> partition;
  std::vector<std::string> parity;
  std::vector<std::string> vanishing;      // q_{y,w} = 0 when some s in WD(w) is not in D(y)
  std::vector<std::string> left_order;     // x <=_L y  =>  c_y <= c_x
  std::vector<std::string> main1;          // the D(w) ⊆ D(y) condition
  std::vector<std::string> standard_action;  // the four-case b-action and r facts
  std::vector<std::string> bar;
  bool ok() const;
  std::vector<std::string> all() const;
};
/// Runs every invariant; meant for contexts that passed is_wgraph_ideal.
PropertyReport check_properties(const IdealContext& ctx);

struct ChoiceDisagreement {
  int z = 0;
  int chosen = 0;
  int alternative = 0;
  int y = 0;
  LaurentPoly with_chosen;
  LaurentPoly with_alternative;
};
/// Recomputes each column with every other s in SD(z), lower columns taken
/// from the fixed-policy table, and lists the differences.
std::vector<ChoiceDisagreement> diagnose_choices(const IdealContext& ctx);

struct KlSpecialCases {
  HeckeElt c_longest;              // c_{w_S} in the T-basis
  bool formula_ok = false;         // equals sum (-q)^{l(w_S)-l(w)} T_w
  bool eigen_ok = false;           // T_s c_{w_S} = -q^-1 c_{w_S} in the Hecke algebra
  bool bar_invariant = false;
  struct PerK {
    GenSet K;
    std::vector<std::vector<ElemId>> dk_cells;  // cells of (W, ∅) meeting D_K
    bool dk_union_of_cells = false;
    bool dk_complement_closed = false;         // W \ D_K closed
    bool dkwk_closed = false;                  // D_K w_K closed
  };
  std::vector<PerK> per_k;
};
KlSpecialCases kl_special_cases(SystemPtr sys);

/// The (W, ∅) context.
IdealContext regular_context(SystemPtr sys);

}  // namespace wgideal
