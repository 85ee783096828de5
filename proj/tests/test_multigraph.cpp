#include <doctest.h>

#include "subreg/families.hpp"
#include "subreg/multigraph.hpp"
#include "subreg/random_graphs.hpp"
#include "test_oracles.hpp"

using namespace subreg;
using testsupport::mk;

TEST_CASE("parse: complete graph literal") {
  Multigraph g = parse_multigraph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  CHECK(g.vertex_count == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.edges[0] == std::pair<int, int>{0, 1});
  CHECK(g.edges[5] == std::pair<int, int>{2, 3});
}

TEST_CASE("parse: loop counts twice") {
  Multigraph g = parse_multigraph("1 1\n0 0");
  CHECK(g.vertex_count == 1);
  CHECK(degree(g, 0) == 2);
}

TEST_CASE("parse: cubic triple edge") {
  Multigraph g = parse_multigraph("2 3\n0 1\n0 1\n0 1");
  CHECK(is_cubic(g));
  CHECK(degree(g, 0) == 3);
  CHECK(degree(g, 1) == 3);
}

TEST_CASE("parse: comments and trailing newline") {
  Multigraph g = parse_multigraph("# header\n2 1\n# middle\n0 1\n# tail\n");
  CHECK(g.vertex_count == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_multigraph("2 1\n0 x"), ParseError);
  try {
    parse_multigraph("2 1\n0 x");
  } catch (const ParseError& e) {
    CHECK(e.line_number == 2);
  }
  CHECK_THROWS_AS(parse_multigraph("2 1\n0 5"), ParseError);   // out of range
  CHECK_THROWS_AS(parse_multigraph("2 2\n0 1"), ParseError);   // too few
  CHECK_THROWS_AS(parse_multigraph("2 1\n0 1\n1 1"), ParseError);  // too many
  CHECK_THROWS_AS(parse_multigraph(""), ParseError);           // no header
  CHECK_THROWS_AS(parse_multigraph("2 1\n0  1"), ParseError);  // double space
}

TEST_CASE("serialize: fixtures and round trips") {
  CHECK(serialize_multigraph(complete_k4()) ==
        "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(serialize_multigraph(Multigraph{}) == "0 0\n");

  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    Multigraph g = testsupport::random_subcubic(
        1 + static_cast<int>(rng.below(9)), rng);
    Multigraph back = parse_multigraph(serialize_multigraph(g));
    CHECK(back.vertex_count == g.vertex_count);
    CHECK(back.edges == g.edges);
    // parse-serialize-parse fixpoint
    CHECK(serialize_multigraph(back) == serialize_multigraph(g));
  }
}

TEST_CASE("degree: examples and the degree-sum identity") {
  Multigraph k4 = complete_k4();
  for (int v = 0; v < 4; ++v) CHECK(degree(k4, v) == 3);
  CHECK(degree(testsupport::path3(), 1) == 2);
  CHECK_THROWS_AS(degree(k4, 4), std::invalid_argument);

  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    Multigraph g = testsupport::random_subcubic(
        1 + static_cast<int>(rng.below(10)), rng);
    int sum = 0;
    for (int v = 0; v < g.vertex_count; ++v) sum += degree(g, v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("delete_edges: examples") {
  Multigraph k4 = complete_k4();
  auto del = delete_edges(k4, {0, 5});  // a perfect matching of K4
  CHECK(del.graph.edge_count() == 4);
  auto deg = degrees(del.graph);
  for (int v = 0; v < 4; ++v) CHECK(deg[v] == 2);  // 4-cycle
  CHECK(del.edge_map[0] == -1);
  CHECK(del.edge_map[1] == 0);
  CHECK(del.edge_map[5] == -1);

  auto two = delete_edges(triple_edge(), {2});
  CHECK(two.graph.edge_count() == 2);

  auto same = delete_edges(k4, {});
  CHECK(same.graph.edges == k4.edges);
  CHECK_THROWS_AS(delete_edges(k4, {6}), std::invalid_argument);

  Rng rng(99);
  for (int it = 0; it < 100; ++it) {
    Multigraph g = testsupport::random_subcubic(
        1 + static_cast<int>(rng.below(9)), rng);
    if (g.edge_count() == 0) continue;
    EdgeSet drop{static_cast<int>(
        rng.below(static_cast<uint64_t>(g.edge_count())))};
    auto d2 = delete_edges(g, drop);
    CHECK(d2.graph.edge_count() == g.edge_count() - 1);
    CHECK(d2.graph.vertex_count == g.vertex_count);
  }
}

TEST_CASE("connected_components: examples") {
  CHECK(connected_components(complete_k4()).size() == 1);
  Multigraph two_triangles =
      mk(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  auto comps = connected_components(two_triangles);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3, 4, 5});
  auto singles = connected_components(mk(3, {}));
  CHECK(singles.size() == 3);
}

TEST_CASE("induced subgraph keeps maps") {
  Multigraph k4 = complete_k4();
  auto sub = induced_subgraph(k4, {1, 2, 3});
  CHECK(sub.graph.vertex_count == 3);
  CHECK(sub.graph.edge_count() == 3);  // the triangle on {1,2,3}
  CHECK(sub.orig_edge == EdgeSet{3, 4, 5});
  CHECK_THROWS_AS(induced_subgraph(k4, {1, 1}), std::invalid_argument);
}

TEST_CASE("bipartition") {
  Bipartition parts;
  CHECK(bipartition(complete_bipartite_k33(), &parts));
  CHECK(parts.side_a == VertexSet{0, 1, 2});
  CHECK(parts.side_b == VertexSet{3, 4, 5});
  CHECK(!bipartition(complete_k4(), nullptr));
  CHECK(!bipartition(parse_multigraph("1 1\n0 0"), nullptr));
  CHECK(bipartition(triple_edge(), nullptr));  // parallel pairs are even
}
