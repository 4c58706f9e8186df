#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wgideal/coxeter.hpp"
#include "wgideal/laurent.hpp"

namespace wgideal {

/// Coloured, weighted digraph (V, mu, tau).
///
/// mu(u, v) is the coefficient of u in T_s v; a nonzero value is an edge
/// v -> u. Generators are given by a Coxeter matrix that is never enumerated,
/// so a doubled (W x W^op) matrix works as well as an ordinary one.
struct WGraph {
  CoxeterMatrix gens;
  std::vector<std::string> names;  // display word per vertex
  std::vector<ElemId> tags;        // element per vertex, or empty
  std::vector<GenSet> tau;
  std::map<std::pair<int, int>, std::int64_t> mu;  // (u, v) -> mu(u, v), nonzero only

  std::size_t size() const { return tau.size(); }
  std::int64_t weight(int u, int v) const;
  void set_weight(int u, int v, std::int64_t w);
  /// Edge v -> u with tau(u) ⊆ tau(v).
  bool superfluous(int u, int v) const { return tau[u].subset_of(tau[v]); }
  /// Full subgraph on the given vertices, in the given order.
  WGraph subgraph(const std::vector<int>& vertices) const;
  /// Same graph without superfluous edges.
  WGraph pruned() const;
};

PolyMatrix action_matrix(const WGraph& g, int s);

struct BraidFailure {
  int s = 0;
  int t = 0;
  int column = 0;                 // first vertex whose column differs
  std::vector<LaurentPoly> lhs;   // [..M_s M_t]_m applied to that vertex
  std::vector<LaurentPoly> rhs;   // [..M_t M_s]_m
};

struct VerifyReport {
  bool ok = true;
  bool quadratic_ok = true;  // M_s^2 = 1 + (q - q^-1) M_s for every s
  std::vector<BraidFailure> failures;
};

/// Braid relations for every generator pair, pairs checked concurrently.
VerifyReport verify_wgraph(const WGraph& g);

struct CellPartition {
  std::vector<int> cell_of;               // per vertex
  std::vector<std::vector<int>> cells;    // numbered by smallest member
  std::vector<std::vector<char>> leq;     // leq[a][b]: cell a <= cell b (reflexive, transitive)
};

/// Cells of the preorder u <= v iff a path v -> ... -> u runs along
/// non-superfluous edges.
CellPartition kl_preorder(const WGraph& g);

/// Every u <= v for v in U, sorted.
std::vector<int> closure(const WGraph& g, const std::vector<int>& U);
bool is_closed(const WGraph& g, const std::vector<int>& U);

/// Colours cut down to J, re-expressed over the rank-|J| submatrix.
WGraph restrict_colours(const WGraph& g, GenSet J);

nlohmann::json graph_to_json(const WGraph& g);
WGraph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const WGraph& g);

namespace serial {
VerifyReport verify_wgraph(const WGraph& g);
}

}  // namespace wgideal
