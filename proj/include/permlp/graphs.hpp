#pragma once

#include <set>
#include <utility>
#include <vector>

#include "permlp/constraints.hpp"
#include "permlp/perms.hpp"
#include "permlp/rational.hpp"

namespace permlp {

// Finite graph on {0..n-1}. Undirected graphs are stored as symmetric
// directed edge sets so adjacency and commutation share one code path.
struct Graph {
  int n = 0;
  bool directed = false;
  std::set<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int n_, bool directed_, std::set<std::pair<int, int>> edges_);

  bool has_loops() const;
};

enum class GraphFamily { Complete, Line, Televis, Circle, Cycle };

RationalMatrix adjacency(const Graph& g);

// COMPLETE/LINE n>=1, TELEVIS n=2, CIRCLE/CYCLE n>=3 (the n=2 circle would
// coincide with the televis; the paper names that case televis).
Graph make_family(GraphFamily family, int n);

// Weakly connected and in-degree = out-degree at every vertex.
bool is_seed_graph(const Graph& g);

// Block-diagonal union of R copies of g.
Graph union_graph(const Graph& g, int copies);

// Graph with adjacency X^sigma A (X^sigma)^-1.
Graph conjugate_graph(const Permutation& sigma, const Graph& g);

// L_Gamma = L_D plus the commutation equalities (X A - A X)_{i,j} = 0,
// canonicalized: identically-zero equations dropped, scalar-multiple
// duplicates merged.
ConstraintSet build_graph_constraints(const Graph& g);

// All sigma in S_n with sigma(G) = G, lexicographic order. Refuses n above
// the brute-force limit.
std::vector<Permutation> automorphisms_bruteforce(const Graph& g,
                                                  int limit = 8);

}  // namespace permlp
