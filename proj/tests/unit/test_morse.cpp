#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "morseaut/errors.hpp"
#include "morseaut/hasse.hpp"
#include "morseaut/morse.hpp"
#include "oracles.hpp"

using namespace morseaut;

namespace {

PrimitiveVector pair_of(const SimplicialComplex& k, const std::string& face,
                        const std::string& coface) {
  auto ids = [&](const std::string& s) {
    std::vector<VertexId> v;
    for (char c : s) v.push_back(*k.vertex_by_label(std::string(1, c)));
    std::sort(v.begin(), v.end());
    return *k.find(v);
  };
  const FaceId f = ids(face), c = ids(coface);
  return {f, c, k.face(f).dimension() + 1};
}

/// Literal definition through the library's own V-path walker.
bool v_path_gradient(const HasseDiagram& h, const DiscreteVectorField& v) {
  for (const VPath& p : enumerate_v_paths(h, v))
    if (p.closed) return false;
  return true;
}

std::set<oracle::Field> library_fields(const SimplicialComplex& k) {
  std::set<oracle::Field> out;
  for (const auto& v : enumerate_gvfs(k)) out.insert(oracle::to_field(k, v));
  return out;
}

}  // namespace

TEST_CASE("primitives are the Hasse edges with face|coface labels") {
  const auto k = fixtures::triangle_abc();
  const auto prims = primitives(k);
  REQUIRE(prims.size() == 6);
  CHECK(primitive_label(k, prims[0]) == "a|ab");
  CHECK(primitive_label(k, prims[1]) == "b|ab");
  CHECK(prims[0].index == 1);
  CHECK(std::is_sorted(prims.begin(), prims.end()));
  const HasseDiagram h(k);
  for (std::size_t i = 0; i < prims.size(); ++i) {
    CHECK(h.edges()[i].face == prims[i].face);
    CHECK(h.edges()[i].coface == prims[i].coface);
  }
}

TEST_CASE("square example: V0 and V1 combine, V1 and V2 clash at the bottom-left vertex") {
  const auto k = fixtures::load("c4");
  const HasseDiagram h(k);
  const auto v0 = pair_of(k, "d", "cd");
  const auto v1 = pair_of(k, "a", "ab");
  const auto v2 = pair_of(k, "a", "ad");
  const auto v = make_dvf(k, {v0, v1});
  CHECK(v.size() == 2);
  CHECK(is_gradient(h, v));
  try {
    make_dvf(k, {v1, v2});
    FAIL("expected a matching violation");
  } catch (const MatchingViolation& e) {
    CHECK(k.face_label(e.simplex()) == "a");
  }
  const auto prims = primitives(h);
  auto id = [&](const PrimitiveVector& p) {
    return static_cast<PrimitiveId>(std::find(prims.begin(), prims.end(), p) - prims.begin());
  };
  const std::vector<PrimitiveId> ok{id(v1), id(v0)}, clash{id(v1), id(v2)};
  CHECK(is_compatible(h, prims, ok));
  CHECK_FALSE(is_compatible(h, prims, clash));
}

TEST_CASE("make_dvf rejects pairs that are not codimension-1 incidences") {
  const auto k = parse_facet_text("a b c\n");
  CHECK_THROWS_AS(make_dvf(k, {pair_of(k, "a", "bc")}), InvalidInput);
  CHECK_THROWS_AS(make_dvf(k, {pair_of(k, "a", "abc")}), InvalidInput);
  CHECK_THROWS_AS(make_dvf(k, {PrimitiveVector{0, 99, 1}}), InvalidInput);
}

TEST_CASE("make_dvf sorts and deduplicates pairs") {
  const auto k = fixtures::load("p4");
  const auto a = pair_of(k, "a", "ab"), c = pair_of(k, "c", "cd");
  const auto v = make_dvf(k, {c, a, c});
  REQUIRE(v.size() == 2);
  CHECK(v.pairs()[0] == a);
  CHECK(v.contains(c));
  CHECK(is_subfield(make_dvf(k, {a}), v));
  CHECK_FALSE(is_subfield(v, make_dvf(k, {a})));
}

TEST_CASE("the cyclic 3-pair field on the triangle has a closed V-path of 3 pairs") {
  const auto k = fixtures::triangle_abc();
  const HasseDiagram h(k);
  const auto v = make_dvf(k, {pair_of(k, "a", "ab"), pair_of(k, "b", "bc"), pair_of(k, "c", "ac")});
  CHECK_FALSE(is_gradient(h, v));
  std::size_t closed = 0;
  for (const VPath& p : enumerate_v_paths(h, v)) {
    if (!p.closed) continue;
    ++closed;
    CHECK(p.pair_count() == 3);
    CHECK(p.cells.front() == p.cells.back());
  }
  CHECK(closed == 3);  // one per starting pair
}

TEST_CASE("V-paths include trivial paths and respect the pair bound") {
  const auto k = fixtures::load("p3");
  const HasseDiagram h(k);
  const auto v = make_dvf(k, {pair_of(k, "a", "ab"), pair_of(k, "b", "bc")});
  const auto paths = enumerate_v_paths(h, v);
  std::size_t trivial = 0, longest = 0;
  for (const VPath& p : paths) {
    if (!p.nontrivial()) ++trivial;
    longest = std::max(longest, p.pair_count());
  }
  CHECK(trivial == k.face_count());
  CHECK(longest == 2);  // a, ab, b, bc, c
  for (const VPath& p : enumerate_v_paths(h, v, 1)) CHECK(p.pair_count() <= 1);
}

TEST_CASE("empty field is gradient and has only trivial paths") {
  const auto k = fixtures::load("kite");
  const HasseDiagram h(k);
  const DiscreteVectorField none = make_dvf(k, {});
  CHECK(is_gradient(h, none));
  for (const VPath& p : enumerate_v_paths(h, none)) CHECK_FALSE(p.nontrivial());
}

TEST_CASE("enumerated gradient fields equal the brute-force filter") {
  std::vector<SimplicialComplex> all{generate_cycle(3), generate_cycle(4), generate_cycle(5),
                                     generate_boundary_simplex(3)};
  for (const char* name : {"p3", "p4", "p5", "star3", "kite"}) all.push_back(fixtures::load(name));
  for (const auto& k : all) CHECK(library_fields(k) == oracle::gradient_fields(k));
}

TEST_CASE("gradient field counts") {
  // Values produced by the brute-force filter above.
  CHECK(build_morse_complex(generate_cycle(3)).f_vector() == std::vector<std::size_t>{6, 9});
  CHECK(build_morse_complex(fixtures::load("p3")).f_vector() == std::vector<std::size_t>{4, 3});
  CHECK(build_morse_complex(generate_cycle(4)).f_vector() ==
        std::vector<std::size_t>{8, 20, 16});
  CHECK(build_morse_complex(generate_boundary_simplex(3)).f_vector() ==
        std::vector<std::size_t>{24, 216, 896, 1692, 1248, 256});
  CHECK(build_morse_complex(fixtures::load("simplex3")).face_count() == 12820);
}

TEST_CASE("Morse complex of the triangle matches the drawn hexagon with three diagonals") {
  const auto m = build_morse_complex(fixtures::triangle_abc());
  std::set<std::set<std::string>> edges;
  auto [first, last] = m.dimension_range(1);
  for (FaceId id = first; id < last; ++id)
    edges.insert({m.label(m.face(id)[0]), m.label(m.face(id)[1])});
  const std::set<std::set<std::string>> drawn{
      {"a|ab", "b|bc"}, {"a|ab", "c|ac"}, {"a|ab", "c|bc"}, {"b|bc", "c|ac"}, {"c|bc", "a|ac"},
      {"c|bc", "b|ab"}, {"a|ac", "b|ab"}, {"b|bc", "a|ac"}, {"c|ac", "b|ab"}};
  CHECK(edges == drawn);
  CHECK(m.dimension() == 1);
}

TEST_CASE("Morse complexes of tiny complexes") {
  CHECK(build_morse_complex(parse_facet_text("a\n")).empty());
  const auto edge = build_morse_complex(parse_facet_text("a b\n"));
  CHECK(edge.f_vector() == std::vector<std::size_t>{2});
  CHECK(edge.labels() == std::vector<std::string>{"a|ab", "b|ab"});
}

TEST_CASE("is_gradient agrees with the V-path definition on every subset for C4 and P4") {
  for (const auto& k : {fixtures::load("c4"), fixtures::load("p4")}) {
    const HasseDiagram h(k);
    const auto prims = primitives(h);
    REQUIRE(prims.size() <= 16);
    std::size_t matchings = 0;
    for (std::uint32_t mask = 0; mask < (1u << prims.size()); ++mask) {
      std::vector<PrimitiveVector> chosen;
      std::vector<oracle::Pair> plain;
      for (std::size_t i = 0; i < prims.size(); ++i)
        if (mask >> i & 1u) chosen.push_back(prims[i]);
      for (const auto& p : chosen) {
        const auto& a = k.face(p.face).vertices();
        const auto& b = k.face(p.coface).vertices();
        plain.emplace_back(oracle::Cell(a.begin(), a.end()), oracle::Cell(b.begin(), b.end()));
      }
      if (!oracle::is_matching(plain)) {
        CHECK_THROWS_AS(make_dvf(k, chosen), MatchingViolation);
        continue;
      }
      ++matchings;
      const auto v = make_dvf(k, chosen);
      const bool fast = is_gradient(h, v);
      CHECK(fast == v_path_gradient(h, v));
      CHECK(fast == !oracle::has_closed_v_path(plain));
    }
    CHECK(matchings == oracle::all_matchings(k).size() + 1);
  }
}

TEST_CASE("is_gradient agrees with the V-path definition on random matchings of the tetrahedron") {
  const auto k = generate_boundary_simplex(3);
  const HasseDiagram h(k);
  const auto prims = primitives(h);
  std::mt19937_64 rng(20240611);
  std::size_t gradient = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::size_t> order(prims.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t take = rng() % (prims.size() + 1);
    std::vector<bool> used(h.node_count(), false);
    std::vector<PrimitiveVector> chosen;
    for (std::size_t i = 0; i < take; ++i) {
      const auto& p = prims[order[i]];
      if (used[p.face] || used[p.coface]) continue;
      used[p.face] = used[p.coface] = true;
      chosen.push_back(p);
    }
    const auto v = make_dvf(k, chosen);
    const bool fast = is_gradient(h, v);
    REQUIRE(fast == v_path_gradient(h, v));
    gradient += fast;
  }
  // Both outcomes must actually occur for the comparison to mean anything.
  CHECK(gradient > 0);
  CHECK(gradient < 10000);
}

TEST_CASE("every subset of a gradient field is gradient") {
  for (const auto& k : {generate_cycle(3), generate_cycle(4), generate_boundary_simplex(2)}) {
    const HasseDiagram h(k);
    const auto prims = primitives(h);
    for_each_gradient_field(h, prims, kDefaultGvfBudget, [&](std::span<const PrimitiveId> ids) {
      const std::size_t n = ids.size();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<PrimitiveId> sub;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1u) sub.push_back(ids[i]);
        CHECK(is_compatible(h, prims, sub));
        CHECK(is_gradient(h, make_dvf(k, prims, sub)));
      }
    });
  }
}

TEST_CASE("gradient fields are visited in lexicographic order") {
  const auto k = fixtures::load("kite");
  const HasseDiagram h(k);
  std::vector<std::vector<PrimitiveId>> seen;
  for_each_gradient_field(h, primitives(h), kDefaultGvfBudget,
                          [&](std::span<const PrimitiveId> ids) {
                            seen.emplace_back(ids.begin(), ids.end());
                            CHECK(std::is_sorted(ids.begin(), ids.end()));
                          });
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.size() == 101);
}

TEST_CASE("enumeration stops at the budget") {
  try {
    enumerate_gvfs(generate_boundary_simplex(3), 100);
    FAIL("expected the budget to be exceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 100);
    CHECK(e.reached() == 101);
  }
}

TEST_CASE("the two Moebius band fields are gradient and nested") {
  const auto k = fixtures::load("mobius5");
  const HasseDiagram h(k);
  auto p = [&](std::vector<VertexId> face, std::vector<VertexId> coface) {
    std::vector<VertexId> f, c;
    for (VertexId v : face) f.push_back(*k.vertex_by_label(std::to_string(v)));
    for (VertexId v : coface) c.push_back(*k.vertex_by_label(std::to_string(v)));
    std::sort(f.begin(), f.end());
    std::sort(c.begin(), c.end());
    return PrimitiveVector{*k.find(f), *k.find(c), static_cast<int>(f.size())};
  };
  const auto small = make_dvf(k, {p({1}, {0, 1}), p({0}, {0, 4}), p({2}, {1, 2})});
  const auto large = make_dvf(k, {p({1}, {0, 1}), p({0}, {0, 4}), p({2}, {1, 2}),
                                  p({2, 3}, {1, 2, 3})});
  CHECK(is_gradient(h, small));
  CHECK(is_gradient(h, large));
  CHECK(v_path_gradient(h, large));
  CHECK(is_subfield(small, large));
  CHECK(large.pairs().back().index == 2);
  // Pairs circulating around the triangle 012 close a V-path.
  CHECK_FALSE(is_gradient(h, make_dvf(k, {p({0}, {0, 1}), p({1}, {1, 2}), p({2}, {0, 2})})));
}
