#include <doctest.h>

#include "permlp/errors.hpp"
#include "permlp/graphs.hpp"

using namespace permlp;

TEST_CASE("graph families") {
  Graph tele = make_family(GraphFamily::Televis, 2);
  CHECK(tele.edges == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(make_family(GraphFamily::Televis, 3), Error);
  CHECK_THROWS_AS(make_family(GraphFamily::Circle, 2), Error);

  Graph k4 = make_family(GraphFamily::Complete, 4);
  CHECK(k4.edges.size() == 12);
  Graph line4 = make_family(GraphFamily::Line, 4);
  CHECK(line4.edges.size() == 6);
  Graph c5 = make_family(GraphFamily::Circle, 5);
  CHECK(c5.edges.size() == 10);
  Graph cyc4 = make_family(GraphFamily::Cycle, 4);
  CHECK(cyc4.directed);
  CHECK(cyc4.edges.size() == 4);
  CHECK(!k4.has_loops());
}

TEST_CASE("adjacency matrix of the televis") {
  RationalMatrix a = adjacency(make_family(GraphFamily::Televis, 2));
  CHECK(a.at(0, 1) == 1);
  CHECK(a.at(1, 0) == 1);
  CHECK(a.at(0, 0) == 0);
  CHECK(a.at(1, 1) == 0);
}

TEST_CASE("seed graphs: connected with in-degree = out-degree") {
  CHECK(is_seed_graph(make_family(GraphFamily::Cycle, 4)));
  CHECK(is_seed_graph(make_family(GraphFamily::Circle, 4)));
  CHECK(is_seed_graph(make_family(GraphFamily::Line, 3)));
  // A union is disconnected, so it is not itself a seed.
  CHECK(!is_seed_graph(union_graph(make_family(GraphFamily::Televis, 2), 2)));
  // Directed path 0->1 fails the degree balance.
  CHECK(!is_seed_graph(Graph(2, true, {{0, 1}})));
}

TEST_CASE("union graph is block diagonal") {
  Graph u = union_graph(make_family(GraphFamily::Televis, 2), 2);
  CHECK(u.n == 4);
  CHECK(u.edges ==
        std::set<std::pair<int, int>>{{0, 1}, {1, 0}, {2, 3}, {3, 2}});
}

TEST_CASE("conjugation relabels edges by the inverse") {
  // The (1 2) swap on the televis pair: 0->0, 1->2, 2->1, 3->3.
  Graph u = union_graph(make_family(GraphFamily::Televis, 2), 2);
  Graph c = conjugate_graph(Permutation({0, 2, 1, 3}), u);
  CHECK(c.edges ==
        std::set<std::pair<int, int>>{{0, 2}, {2, 0}, {1, 3}, {3, 1}});
  // A' = X A X^-1 as matrices.
  RationalMatrix p = perm_to_matrix(Permutation({0, 2, 1, 3}));
  RationalMatrix lhs = p * adjacency(u) * p.transpose();
  CHECK(lhs.key() == adjacency(c).key());
}

TEST_CASE("graph constraint counts for televis unions are 6R^2 + 4R") {
  for (int R = 1; R <= 5; ++R) {
    Graph u = union_graph(make_family(GraphFamily::Televis, 2), R);
    ConstraintSet s = build_graph_constraints(u);
    CHECK(static_cast<int>(s.constraints.size()) == 6 * R * R + 4 * R);
  }
}

TEST_CASE("automorphism groups of the small families") {
  CHECK(automorphisms_bruteforce(make_family(GraphFamily::Complete, 4)).size()
        == 24);
  CHECK(automorphisms_bruteforce(make_family(GraphFamily::Line, 5)).size() ==
        2);
  CHECK(automorphisms_bruteforce(make_family(GraphFamily::Circle, 5)).size()
        == 10);
  CHECK(automorphisms_bruteforce(make_family(GraphFamily::Cycle, 5)).size() ==
        5);
  CHECK_THROWS_AS(
      automorphisms_bruteforce(make_family(GraphFamily::Complete, 9)), Error);
}

TEST_CASE("automorphisms commute with the adjacency matrix") {
  Graph c4 = make_family(GraphFamily::Circle, 4);
  RationalMatrix a = adjacency(c4);
  for (const auto& g : automorphisms_bruteforce(c4)) {
    RationalMatrix x = perm_to_matrix(g);
    CHECK((x * a).key() == (a * x).key());
  }
}
