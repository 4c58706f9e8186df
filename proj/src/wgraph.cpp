#include "wgideal/wgraph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "wgideal/error.hpp"

namespace wgideal {

std::int64_t WGraph::weight(int u, int v) const {
  auto it = mu.find({u, v});
  return it == mu.end() ? 0 : it->second;
}

void WGraph::set_weight(int u, int v, std::int64_t w) {
  if (w == 0) {
    mu.erase({u, v});
  } else {
    mu[{u, v}] = w;
  }
}

WGraph WGraph::subgraph(const std::vector<int>& vertices) const {
  WGraph out;
  out.gens = gens;
  std::vector<int> local(size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || static_cast<std::size_t>(v) >= size()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
    local[v] = static_cast<int>(i);
    out.names.push_back(names[v]);
    if (!tags.empty()) out.tags.push_back(tags[v]);
    out.tau.push_back(tau[v]);
  }
  for (const auto& [uv, w] : mu) {
    const int u = local[uv.first];
    const int v = local[uv.second];
    if (u >= 0 && v >= 0) out.mu[{u, v}] = w;
  }
  return out;
}

WGraph WGraph::pruned() const {
  WGraph out = *this;
  std::erase_if(out.mu, [this](const auto& e) { return superfluous(e.first.first, e.first.second); });
  return out;
}

PolyMatrix action_matrix(const WGraph& g, int s) {
  const std::size_t n = g.size();
  PolyMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    m(v, v) = g.tau[v].contains(s) ? LaurentPoly::q_inv() * -1 : LaurentPoly::q();
  }
  for (const auto& [uv, w] : g.mu) {
    const auto [u, v] = uv;
    if (g.tau[u].contains(s) && !g.tau[v].contains(s)) m(u, v) = w;
  }
  return m;
}

namespace {

using AltFn = PolyMatrix (*)(const PolyMatrix&, const PolyMatrix&, int);

std::optional<BraidFailure> check_pair(const std::vector<PolyMatrix>& M, int s, int t, int mst, AltFn alt) {
  const PolyMatrix lhs = alt(M[s], M[t], mst);
  const PolyMatrix rhs = alt(M[t], M[s], mst);
  if (lhs == rhs) return std::nullopt;
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    auto a = lhs.column(c);
    auto b = rhs.column(c);
    if (a != b) return BraidFailure{s, t, static_cast<int>(c), std::move(a), std::move(b)};
  }
  return std::nullopt;
}

bool quadratic_holds(const PolyMatrix& m, AltFn alt) {
  // M^2 - I - (q - q^-1) M = 0
  const PolyMatrix sq = alt(m, m, 2);
  const PolyMatrix rhs = mat_add(PolyMatrix::identity(m.rows()), mat_scale(LaurentPoly(-1, {-1, 0, 1}), m));
  return sq == rhs;
}

VerifyReport verify_with(const WGraph& g, AltFn alt, bool parallel) {
  const int rank = g.gens.rank();
  std::vector<PolyMatrix> M;
  for (int s = 0; s < rank; ++s) M.push_back(action_matrix(g, s));

  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < rank; ++s)
    for (int t = s + 1; t < rank; ++t) pairs.emplace_back(s, t);

  std::vector<std::optional<BraidFailure>> results(pairs.size());
  std::vector<char> quad(static_cast<std::size_t>(rank), 1);
  const auto npairs = static_cast<std::int64_t>(pairs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < npairs; ++i) {
    try {
      const auto [s, t] = pairs[static_cast<std::size_t>(i)];
      results[static_cast<std::size_t>(i)] = check_pair(M, s, t, g.gens.m[s][t], alt);
    } catch (...) {
#pragma omp critical(wgideal_verify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (int s = 0; s < rank; ++s) quad[s] = quadratic_holds(M[s], alt) ? 1 : 0;

  VerifyReport rep;
  for (auto& r : results) {
    if (r) rep.failures.push_back(std::move(*r));
  }
  rep.quadratic_ok = std::all_of(quad.begin(), quad.end(), [](char c) { return c != 0; });
  rep.ok = rep.failures.empty() && rep.quadratic_ok;
  return rep;
}

PolyMatrix alt_serial(const PolyMatrix& a, const PolyMatrix& b, int n) { return serial::alternating_product(a, b, n); }
// Nested regions are inactive by default, so with several pairs the kernel
// runs single-threaded per pair; with one pair it uses the threads itself.
PolyMatrix alt_parallel(const PolyMatrix& a, const PolyMatrix& b, int n) { return alternating_product(a, b, n); }

}  // namespace

VerifyReport verify_wgraph(const WGraph& g) { return verify_with(g, alt_parallel, true); }

namespace serial {
VerifyReport verify_wgraph(const WGraph& g) { return verify_with(g, alt_serial, false); }
}  // namespace serial

// ---------------------------------------------------------------------------

namespace {

// Adjacency of the non-superfluous edges, v -> u.
std::vector<std::vector<int>> preorder_edges(const WGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (const auto& [uv, w] : g.mu) {
    const auto [u, v] = uv;
    if (!g.superfluous(u, v)) adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

CellPartition kl_preorder(const WGraph& g) {
  const int n = static_cast<int>(g.size());
  const auto adj = preorder_edges(g);

  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const int u = adj[v][next++];
        if (index[u] < 0) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.emplace_back(u, 0);
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          const int x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          comp[x] = ncomp;
          if (x == v) break;
        }
        ++ncomp;
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  // Renumber cells by smallest member.
  std::vector<int> renum(ncomp, -1);
  CellPartition out;
  out.cell_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (renum[comp[v]] < 0) {
      renum[comp[v]] = static_cast<int>(out.cells.size());
      out.cells.emplace_back();
    }
    out.cell_of[v] = renum[comp[v]];
    out.cells[out.cell_of[v]].push_back(v);
  }

  const std::size_t nc = out.cells.size();
  out.leq.assign(nc, std::vector<char>(nc, 0));
  for (std::size_t c = 0; c < nc; ++c) {
    // Everything reachable from cell c lies below it.
    for (int u : closure(g, out.cells[c])) out.leq[out.cell_of[u]][c] = 1;
  }
  return out;
}

std::vector<int> closure(const WGraph& g, const std::vector<int>& U) {
  const auto adj = preorder_edges(g);
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack;
  for (int v : U) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (seen[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

bool is_closed(const WGraph& g, const std::vector<int>& U) {
  std::vector<int> sorted = U;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return closure(g, sorted) == sorted;
}

WGraph restrict_colours(const WGraph& g, GenSet J) {
  WGraph out = g;
  out.gens = g.gens.restricted(J);
  const auto members = J.members();
  for (auto& t : out.tau) {
    GenSet local;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (t.contains(members[i])) local.insert(static_cast<int>(i));
    }
    t = local;
  }
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json graph_to_json(const WGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::vector<std::string> tau;
    for (int s : g.tau[v].members()) tau.push_back(g.gens.labels[s]);
    vertices.push_back({{"id", v}, {"word", g.names[v]}, {"tau", tau}});
  }
  // Sorted by (from, to).
  std::vector<std::tuple<int, int, std::int64_t>> edges;
  for (const auto& [uv, w] : g.mu) edges.emplace_back(uv.second, uv.first, w);
  std::sort(edges.begin(), edges.end());
  nlohmann::json ej = nlohmann::json::array();
  for (const auto& [from, to, w] : edges) ej.push_back({{"from", from}, {"to", to}, {"mu", w}});
  return {{"generators", g.gens.labels}, {"m", g.gens.m}, {"vertices", vertices}, {"edges", ej}};
}

WGraph graph_from_json(const nlohmann::json& j) {
  WGraph g;
  try {
    g.gens.labels = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("m")) {
      g.gens.m = j.at("m").get<std::vector<std::vector<int>>>();
    } else {
      throw Error(ErrorCode::Parse, "graph needs an \"m\" Coxeter matrix");
    }
    g.gens.validate();
    const auto& verts = j.at("vertices");
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto& v = verts[i];
      if (v.at("id").get<std::size_t>() != i) throw Error(ErrorCode::Parse, "vertex ids must be 0..n-1 in order");
      g.names.push_back(v.value("word", std::to_string(i)));
      GenSet tau;
      for (const auto& l : v.at("tau")) {
        const auto label = l.get<std::string>();
        auto it = std::find(g.gens.labels.begin(), g.gens.labels.end(), label);
        if (it == g.gens.labels.end()) throw Error(ErrorCode::Parse, "unknown colour " + label);
        tau.insert(static_cast<int>(it - g.gens.labels.begin()));
      }
      g.tau.push_back(tau);
    }
    for (const auto& e : j.at("edges")) {
      const int from = e.at("from").get<int>();
      const int to = e.at("to").get<int>();
      const int n = static_cast<int>(g.size());
      if (from < 0 || from >= n || to < 0 || to >= n) throw Error(ErrorCode::Parse, "edge endpoint out of range");
      if (g.mu.count({to, from})) throw Error(ErrorCode::Parse, "duplicate edge");
      g.set_weight(to, from, e.at("mu").get<std::int64_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed graph: ") + e.what());
  }
  return g;
}

std::string graph_to_dot(const WGraph& g) {
  std::ostringstream out;
  out << "digraph W {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::string tau;
    for (int s : g.tau[v].members()) tau += (tau.empty() ? "" : ",") + g.gens.labels[s];
    out << "  v" << v << " [label=\"" << g.names[v] << "\\n{" << tau << "}\"];\n";
  }
  std::vector<std::tuple<int, int, std::int64_t>> edges;
  for (const auto& [uv, w] : g.mu) edges.emplace_back(uv.second, uv.first, w);
  std::sort(edges.begin(), edges.end());
  for (const auto& [from, to, w] : edges) {
    out << "  v" << from << " -> v" << to;
    std::vector<std::string> attrs;
    if (w != 1) attrs.push_back("label=\"" + std::to_string(w) + "\"");
    if (g.superfluous(to, from)) attrs.push_back("style=dashed");
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wgideal
