#include <doctest.h>

#include "subreg/extract.hpp"
#include "subreg/families.hpp"
#include "subreg/oracle.hpp"
#include "subreg/random_graphs.hpp"
#include "subreg/structure.hpp"
#include "test_oracles.hpp"

using namespace subreg;
using testsupport::mk;

namespace {

int covered_count(const Multigraph& g, const TwoRegularSubgraph& s) {
  return static_cast<int>(covered_vertices(g, s).size());
}

}  // namespace

TEST_CASE("bound_omitted: examples") {
  CHECK(bound_omitted(16, 24, 3) == 1);  // tree of three girth-3 balloons
  CHECK(bound_omitted(5, 7, 0) == 0);    // a balloon: d=1, c=0
  for (int n = 1; n <= 8; ++n)           // a tree: d=n+2, c=n-1
    CHECK(bound_omitted(n, n - 1, n - 1) == n);
  CHECK(bound_omitted(4, 6, 0) == 0);    // K4: negative before the max
  CHECK_THROWS_AS(bound_omitted(2, 4, 0), std::invalid_argument);
}

TEST_CASE("extract: K4 gets a Hamiltonian 2-factor") {
  auto [sub, cert] = extract(complete_k4());
  REQUIRE(sub.cycles.size() == 1);
  CHECK(sub.cycles[0].size() == 4);
  CHECK(cert.achieved_omitted == 0);
  CHECK(cert.bound_omitted == 0);
  CHECK(cert.bound_attained);
  CHECK(!cert.equality);  // n - (d+c-1)/2 is not an integer here
  REQUIRE(cert.component_classes.size() == 1);
  CHECK(cert.component_classes[0] == ComponentClass::non_extremal);
}

TEST_CASE("extract: star of three 3-vertex balloons") {
  Multigraph g = build_tree_with_balloons(1, 2);
  REQUIRE(g.vertex_count == 10);
  auto [sub, cert] = extract(g);
  CHECK(sub.cycles.size() == 3);
  for (const auto& cycle : sub.cycles) CHECK(cycle.size() == 3);
  CHECK(cert.achieved_omitted == 1);
  CHECK(cert.bound_omitted == 1);
  CHECK(cert.equality);
  REQUIRE(cert.component_classes.size() == 4);
  CHECK(cert.component_classes[0] == ComponentClass::single_vertex);
  for (int i = 1; i < 4; ++i)
    CHECK(cert.component_classes[i] == ComponentClass::balloon);
  // the corollary value 3(n+2)/4 via the exact oracle
  CHECK(brute_force_f2(g).f2_exact == 9);
}

TEST_CASE("extract: K33 minus a vertex") {
  auto sub5 = induced_subgraph(complete_bipartite_k33(), {0, 1, 2, 3, 4});
  const Multigraph& g = sub5.graph;
  CHECK(one_deficit(g) == 3);
  auto [sub, cert] = extract(g);
  REQUIRE(sub.cycles.size() == 1);
  CHECK(sub.cycles[0].size() == 4);
  CHECK(cert.achieved_omitted == 1);
  CHECK(cert.bound_omitted == 1);
  CHECK(cert.equality);
  REQUIRE(cert.component_classes.size() == 1);
  CHECK(cert.component_classes[0] == ComponentClass::g_family);
  CHECK(brute_force_f2(g).f2_exact == 4);
  CHECK(testsupport::subset_f2(g) == 4);
}

TEST_CASE("extract: tiny special cases") {
  auto bare = extract(mk(1, {}));
  CHECK(bare.subgraph.cycles.empty());
  CHECK(bare.certificate.achieved_omitted == 1);
  CHECK(bare.certificate.equality);
  CHECK(bare.certificate.component_classes[0] ==
        ComponentClass::single_vertex);

  auto loop = extract(parse_multigraph("1 1\n0 0"));
  REQUIRE(loop.subgraph.cycles.size() == 1);
  CHECK(loop.subgraph.cycles[0] == std::vector<int>{0});
  CHECK(loop.certificate.achieved_omitted == 0);
  CHECK(loop.certificate.equality);
  CHECK(loop.certificate.component_classes[0] ==
        ComponentClass::single_vertex);

  Multigraph c5 = mk(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto cyc = extract(c5);
  CHECK(cyc.certificate.achieved_omitted == 0);
  CHECK(cyc.certificate.bound_omitted == 2);
  CHECK(!cyc.certificate.equality);
  CHECK(cyc.certificate.component_classes[0] ==
        ComponentClass::two_regular);

  // a path: every vertex is omitted
  auto p = extract(testsupport::path3());
  CHECK(p.subgraph.cycles.empty());
  CHECK(p.certificate.achieved_omitted == 3);
  CHECK(p.certificate.bound_omitted == 3);
  CHECK(p.certificate.equality);

  CHECK_THROWS_AS(extract(mk(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}})),
                  std::invalid_argument);  // degree 4
}

TEST_CASE("extract: a standalone balloon gets a 2-factor with equality") {
  Multigraph b = make_balloon(complete_k4(), 0);
  auto [sub, cert] = extract(b);
  CHECK(cert.achieved_omitted == 0);
  CHECK(cert.bound_omitted == 0);
  CHECK(cert.equality);  // d=1, c=0: the formula gives exactly n
  BoundCertificate cls = classify_equality(b, cert);
  REQUIRE(cls.component_classes.size() == 1);
  CHECK(cls.component_classes[0] == ComponentClass::balloon);
}

TEST_CASE("extract: bridgeless d=2 components get a 2-factor") {
  // K4 with two distinct edges subdivided once each
  Multigraph g = testsupport::subdivide_edge(
      testsupport::subdivide_edge(complete_k4(), 0), 1);
  CHECK(one_deficit(g) == 2);
  CHECK(find_cut_edges(g).empty());
  auto [sub, cert] = extract(g);
  CHECK(cert.achieved_omitted == 0);
  CHECK(!cert.equality);  // the formula is not an integer at d=2
}

TEST_CASE("extract: disconnected input sums components") {
  // K4 plus a separate triangle
  Multigraph g = complete_k4();
  g.vertex_count = 7;
  g.edges.emplace_back(4, 5);
  g.edges.emplace_back(5, 6);
  g.edges.emplace_back(6, 4);
  auto [sub, cert] = extract(g);
  CHECK(cert.achieved_omitted == 0);
  CHECK(covered_count(g, sub) == 7);
  CHECK(cert.component_classes.size() == 2);
  CHECK_THROWS_AS(classify_equality(g, cert), std::invalid_argument);
}

TEST_CASE("certificate text format") {
  auto [sub, cert] = extract(build_tree_with_balloons(1, 2));
  CHECK(certificate_to_text(cert) ==
        "n: 10\n"
        "m: 15\n"
        "c: 3\n"
        "d: 0\n"
        "bound: 1\n"
        "achieved: 1\n"
        "equality: true\n"
        "classes: single-vertex,balloon,balloon,balloon\n");
}

TEST_CASE("trace_cycles handles loops and parallel pairs") {
  Multigraph g = mk(3, {{0, 0}, {1, 2}, {1, 2}});
  auto cycles = trace_cycles(g, {0, 1, 2});
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<int>{0});
  CHECK(cycles[1] == std::vector<int>{1, 2});
  CHECK_THROWS_AS(trace_cycles(testsupport::path3(), {0, 1}),
                  InternalCheckError);
}

TEST_CASE("extract is sound and bounded on random subcubic multigraphs") {
  Rng rng(9001);
  for (int it = 0; it < 400; ++it) {
    Multigraph g = testsupport::random_subcubic(
        1 + static_cast<int>(rng.below(12)), rng);
    auto [sub, cert] = extract(g);  // validates internally
    validate_two_regular(g, sub);
    CHECK(cert.achieved_omitted <= cert.bound_omitted);
    CHECK(covered_count(g, sub) + cert.achieved_omitted == g.vertex_count);
  }
}

TEST_CASE("augment_two_vertices_with_balloons") {
  auto sub5 = induced_subgraph(complete_bipartite_k33(), {0, 1, 2, 3, 4});
  BalloonAugmentation aug = augment_two_vertices_with_balloons(sub5.graph);
  CHECK(aug.graph.vertex_count == 14);
  CHECK(is_cubic(aug.graph));
  CHECK(aug.attach_vertices == VertexSet{0, 1, 2});
  CHECK(aug.original_edge_count == 6);
  CHECK_THROWS_AS(augment_two_vertices_with_balloons(testsupport::path3()),
                  std::invalid_argument);
}
