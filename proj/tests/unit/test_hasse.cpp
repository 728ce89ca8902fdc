#include "doctest.h"

#include "fixtures.hpp"
#include "morseaut/errors.hpp"
#include "morseaut/hasse.hpp"

using namespace morseaut;

TEST_CASE("Hasse diagram of the triangle is a hexagon") {
  const auto k = generate_cycle(3);
  const HasseDiagram h(k);
  CHECK(h.node_count() == 6);
  CHECK(h.edge_count() == 6);
  CHECK(layer_sizes(h) == std::vector<std::size_t>{3, 3});
  const Graph g = as_graph(h);
  for (NodeId v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("Hasse edges are sorted by coface then face and indexed") {
  const auto k = fixtures::load("kite");
  const HasseDiagram h(k);
  const auto& e = h.edges();
  for (std::size_t i = 1; i < e.size(); ++i)
    CHECK(std::pair(e[i - 1].coface, e[i - 1].face) < std::pair(e[i].coface, e[i].face));
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(h.edge_index(e[i].face, e[i].coface) == i);
    CHECK(h.dimension(e[i].coface) == h.dimension(e[i].face) + 1);
    CHECK(k.face(e[i].face).is_face_of(k.face(e[i].coface)));
  }
  CHECK_FALSE(h.edge_index(0, 1).has_value());
  // 4 vertices, 4 edges, 1 triangle: 8 vertex-edge incidences and 3 edge-triangle ones.
  CHECK(h.edge_count() == 11);
}

TEST_CASE("down and up lists are the two halves of the neighbourhood") {
  const auto k = generate_boundary_simplex(3);
  const HasseDiagram h(k);
  for (FaceId v = 0; v < h.node_count(); ++v) {
    CHECK(h.down(v).size() == (h.dimension(v) == 0 ? 0 : k.face(v).size()));
    for (FaceId u : h.up(v)) CHECK(h.dimension(u) == h.dimension(v) + 1);
    CHECK(h.degree(v) == h.down(v).size() + h.up(v).size());
  }
}

TEST_CASE("layers of the boundary of the n-simplex") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const HasseDiagram h(generate_boundary_simplex(static_cast<int>(n)));
    REQUIRE(h.layers().size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t expected = (i == 0 || i + 1 == n) ? n : n + 1;
      CHECK(layer_degree(h, i) == expected);
    }
  }
}

TEST_CASE("layer_degree reports non-uniform and missing layers") {
  const HasseDiagram h(fixtures::load("kite"));
  CHECK_THROWS_AS(layer_degree(h, 0), NonUniformLayer);
  CHECK_THROWS_AS(layer_degree(h, 7), InvalidInput);
  CHECK(layer_degree(h, 2) == 3);
}

TEST_CASE("DOT output is canonical") {
  const auto k = parse_facet_text("a b\nb c\n");
  CHECK(to_dot(build_hasse(k), k) ==
        "graph hasse {\n"
        "  rankdir=BT;\n"
        "  node [shape=plaintext];\n"
        "  { rank=same; n0 [label=\"a\"]; n1 [label=\"b\"]; n2 [label=\"c\"]; }\n"
        "  { rank=same; n3 [label=\"ab\"]; n4 [label=\"bc\"]; }\n"
        "  n0 -- n3;\n"
        "  n1 -- n3;\n"
        "  n1 -- n4;\n"
        "  n2 -- n4;\n"
        "}\n");
}

TEST_CASE("DOT labels are escaped") {
  const auto k = parse_facet_text("x\"1 y\n");
  CHECK(to_dot(build_hasse(k), k).find("label=\"x\\\"1\"") != std::string::npos);
}
