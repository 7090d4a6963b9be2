#include "permlp/graphs.hpp"

#include <algorithm>
#include <numeric>

#include "permlp/errors.hpp"

namespace permlp {

Graph::Graph(int n_, bool directed_, std::set<std::pair<int, int>> edges_)
    : n(n_), directed(directed_), edges(std::move(edges_)) {
  if (n < 0) throw invalid_size_error("negative vertex count");
  for (const auto& [a, b] : edges)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw invalid_argument_error("edge endpoint out of range");
  if (!directed)
    for (const auto& [a, b] : edges)
      if (!edges.count({b, a}))
        throw invalid_argument_error(
            "undirected graph has an asymmetric edge set");
}

bool Graph::has_loops() const {
  for (const auto& [a, b] : edges)
    if (a == b) return true;
  return false;
}

RationalMatrix adjacency(const Graph& g) {
  RationalMatrix a(g.n, g.n);
  for (const auto& [i, j] : g.edges) a.at(i, j) = 1;
  return a;
}

Graph make_family(GraphFamily family, int n) {
  std::set<std::pair<int, int>> e;
  switch (family) {
    case GraphFamily::Complete:
      if (n < 1) throw invalid_size_error("complete graph needs n >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) e.insert({i, j});
      return Graph(n, false, std::move(e));
    case GraphFamily::Line:
      if (n < 1) throw invalid_size_error("line graph needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) {
        e.insert({i, i + 1});
        e.insert({i + 1, i});
      }
      return Graph(n, false, std::move(e));
    case GraphFamily::Televis:
      if (n != 2) throw invalid_size_error("televis is the n = 2 line");
      return make_family(GraphFamily::Line, 2);
    case GraphFamily::Circle:
      if (n < 3)
        throw invalid_size_error(
            "circle needs n >= 3 (n = 2 coincides with the televis)");
      for (int i = 0; i < n; ++i) {
        e.insert({i, (i + 1) % n});
        e.insert({(i + 1) % n, i});
      }
      return Graph(n, false, std::move(e));
    case GraphFamily::Cycle:
      if (n < 3)
        throw invalid_size_error("directed cycle needs n >= 3");
      for (int i = 0; i < n; ++i) e.insert({i, (i + 1) % n});
      return Graph(n, true, std::move(e));
  }
  throw invalid_argument_error("unknown graph family");
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_seed_graph(const Graph& g) {
  if (g.n == 0) return false;
  UnionFind uf(g.n);
  std::vector<int> indeg(g.n, 0), outdeg(g.n, 0);
  for (const auto& [a, b] : g.edges) {
    uf.unite(a, b);
    outdeg[a]++;
    indeg[b]++;
  }
  int root = uf.find(0);
  for (int v = 1; v < g.n; ++v)
    if (uf.find(v) != root) return false;
  // A vertex with no incident edges is its own component, caught above,
  // except n = 1 with no edges: not connected to anything but itself. Treat
  // the single-vertex edgeless graph as connected.
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] != outdeg[v]) return false;
  return true;
}

Graph union_graph(const Graph& g, int copies) {
  if (copies < 1) throw invalid_size_error("union needs at least one copy");
  std::set<std::pair<int, int>> e;
  for (int r = 0; r < copies; ++r)
    for (const auto& [a, b] : g.edges) e.insert({r * g.n + a, r * g.n + b});
  return Graph(g.n * copies, g.directed, std::move(e));
}

Graph conjugate_graph(const Permutation& sigma, const Graph& g) {
  if (sigma.degree() != g.n)
    throw dimension_error("permutation degree does not match graph size");
  // New adjacency A'_{i,j} = A_{sigma(i), sigma(j)}, so edges relabel by
  // sigma^-1.
  Permutation inv = sigma.inverse();
  std::set<std::pair<int, int>> e;
  for (const auto& [a, b] : g.edges) e.insert({inv(a), inv(b)});
  return Graph(g.n, g.directed, std::move(e));
}

ConstraintSet build_graph_constraints(const Graph& g) {
  ConstraintSet s = build_doubly_stochastic(g.n);
  RationalMatrix a = adjacency(g);
  int n = g.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LinearConstraint c;
      c.rel = Relation::Equal;
      c.rhs = 0;
      c.label = "commute:" + std::to_string(i) + "," + std::to_string(j);
      // (X A - A X)_{i,j} = sum_k X_{i,k} A_{k,j} - sum_k A_{i,k} X_{k,j}
      for (int k = 0; k < n; ++k) {
        if (a.at(k, j) != 0) c.coeffs[{i, k}] += a.at(k, j);
        if (a.at(i, k) != 0) c.coeffs[{k, j}] -= a.at(i, k);
      }
      add_deduped(s, std::move(c));
    }
  return s;
}

std::vector<Permutation> automorphisms_bruteforce(const Graph& g, int limit) {
  if (g.n > limit)
    throw budget_error("automorphism brute force limited to n <= " +
                       std::to_string(limit));
  RationalMatrix a = adjacency(g);
  std::vector<int> img(g.n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (const auto& [i, j] : g.edges)
      if (a.at(img[i], img[j]) == 0) {
        ok = false;
        break;
      }
    if (ok) {
      // Edge count is preserved by bijections, so edge-to-edge suffices for
      // equality of adjacency matrices.
      out.push_back(Permutation(img));
    }
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permlp
