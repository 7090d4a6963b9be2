#include <doctest.h>

#include "permlp/errors.hpp"
#include "permlp/json_io.hpp"

using namespace permlp;

TEST_CASE("constraint set JSON round-trip preserves semantics") {
  for (const ConstraintSet& l :
       {build_doubly_stochastic(3), build_pure_involution(4),
        build_graph_constraints(make_family(GraphFamily::Cycle, 4))}) {
    ConstraintSet back = constraint_set_from_json(constraint_set_to_json(l));
    REQUIRE(back.n == l.n);
    REQUIRE(back.constraints.size() == l.constraints.size());
    for (std::size_t i = 0; i < l.constraints.size(); ++i)
      CHECK(back.constraints[i].normalized_key() ==
            l.constraints[i].normalized_key());
  }
}

TEST_CASE("graph JSON round-trip") {
  for (const Graph& g :
       {make_family(GraphFamily::Televis, 2), make_family(GraphFamily::Circle, 4),
        union_graph(make_family(GraphFamily::Televis, 2), 3)}) {
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.n == g.n);
    CHECK(back.directed == g.directed);
    CHECK(back.edges == g.edges);
  }
}

TEST_CASE("matrix and vertex set JSON round-trip") {
  VertexSet vs = enumerate_vertices(build_doubly_stochastic(3));
  VertexSet back = vertex_set_from_json(vertex_set_to_json(vs));
  REQUIRE(back.vertices.size() == vs.vertices.size());
  CHECK(back.complete == vs.complete);
  for (std::size_t i = 0; i < vs.vertices.size(); ++i)
    CHECK(back.vertices[i].key() == vs.vertices[i].key());

  RationalMatrix m(2, 2);
  m.at(0, 1) = Rational(3, 7);
  m.at(1, 0) = Rational(-5, 2);
  RationalMatrix mb = matrix_from_json(matrix_to_json(m));
  CHECK(mb.key() == m.key());
}

TEST_CASE("code spec JSON round-trip") {
  Json j = {{"nu", 3},
            {"R", 2},
            {"rows", {"D", "D"}},
            {"top", "S"}};
  CodeSpec s = code_spec_from_json(j);
  CHECK(s.nu == 3);
  CHECK(s.R == 2);
  CHECK(code_cardinality(s) == 72);
  CodeSpec back = code_spec_from_json(code_spec_to_json(s));
  CHECK(code_cardinality(back) == 72);
  CHECK(back.mu == s.mu);
}

TEST_CASE("malformed input raises parse errors") {
  CHECK_THROWS_AS(constraint_set_from_json(Json{{"n", 2}}), Error);
  CHECK_THROWS_AS(
      code_spec_from_json(Json{{"nu", 3}, {"R", 1}, {"rows", {"X"}}, {"top", "S"}}),
      Error);
  CHECK_THROWS_AS(rat_parse("3/0"), Error);
  CHECK_THROWS_AS(rat_parse("abc"), Error);
}
