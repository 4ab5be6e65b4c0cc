#include <doctest.h>

#include "../oracles.hpp"
#include "../support.hpp"
#include "regulus/corpus.hpp"
#include "regulus/functors.hpp"
#include "regulus/genus.hpp"
#include "regulus/language.hpp"

using namespace regulus;
using testing::ugraph;

namespace {

RotationSystem cyclic_rotation(const UndirectedGraph& g) {
  RotationSystem r;
  r.rotation.resize(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    r.rotation[g.end_a(e)].push_back(dart(e, 0));
    r.rotation[g.end_b(e)].push_back(dart(e, 1));
  }
  return r;
}

RotationSystem random_rotation(testing::Rng& rng, const UndirectedGraph& g) {
  RotationSystem r = cyclic_rotation(g);
  for (auto& list : r.rotation) std::shuffle(list.begin(), list.end(), rng);
  return r;
}

}  // namespace

TEST_CASE("darts and tokens") {
  UndirectedGraph g = ugraph({"x", "y"}, {{"e", "x", "y"}, {"l", "x", "x"}});
  CHECK(dart_vertex(g, dart(0, 0)) == 0);
  CHECK(dart_vertex(g, dart(0, 1)) == 1);
  CHECK(dart_token(g, dart(0, 0)) == "e+");
  CHECK(dart_token(g, dart(0, 1)) == "e-");
  CHECK(parse_dart_token(g, "l-") == dart(1, 1));
  CHECK_THROWS_AS(parse_dart_token(g, "q+"), DomainError);
  RotationSystem r = cyclic_rotation(g);
  CHECK(rotation_from_ids(g, rotation_to_ids(g, r)) == r);
  CHECK(validate_rotation(g, r).ok);
  RotationSystem bad = r;
  std::swap(bad.rotation[0][0], bad.rotation[1][0]);
  CHECK_FALSE(validate_rotation(g, bad).ok);
}

TEST_CASE("face tracing examples") {
  UndirectedGraph tri = ugraph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "c", "a"}});
  FaceTrace t = trace_faces(tri, cyclic_rotation(tri));
  CHECK(t.num_faces == 2);
  CHECK(t.genus == 0);
  CHECK(t.faces == FaceVector{{3, 2}});

  UndirectedGraph lp = ugraph({"a"}, {{"l", "a", "a"}});
  FaceTrace tl = trace_faces(lp, cyclic_rotation(lp));
  CHECK(tl.num_faces == 2);
  CHECK(tl.genus == 0);

  UndirectedGraph k5 = testing::complete_graph(5);
  GenusResult g5 = genus_exact(k5);
  FaceTrace t5 = trace_faces(k5, g5.witness);
  CHECK(t5.genus == 1);
  CHECK(t5.num_faces == 5);
}

TEST_CASE("face tracing invariants on random rotations") {
  testing::Rng rng(testing::seed() + 40);
  for (int t = 0; t < 300; ++t) {
    UndirectedGraph g = testing::random_undirected(rng, testing::uniform(rng, 1, 6), testing::uniform(rng, 0, 10), true);
    FaceTrace f = trace_faces(g, random_rotation(rng, g));
    long long weighted = 0, total = 0;
    for (auto [len, count] : f.faces) {
      weighted += len * count;
      total += count;
    }
    CHECK(weighted == 2 * g.num_edges());
    CHECK(f.genus >= 0);
    CHECK((g.num_vertices() - g.num_edges() + f.num_faces) % 2 == 0);
  }
}

TEST_CASE("genus_exact numerics") {
  CHECK(genus_exact(testing::complete_graph(5)).genus == 1);
  CHECK(genus_exact(testing::complete_bipartite(3, 3)).genus == 1);
  CHECK(genus_exact(testing::complete_graph(4)).genus == 0);
  CHECK(genus_exact(ugraph({"a", "b", "c", "d"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "b", "d"}})).genus == 0);
  CHECK(genus_exact(ugraph({"a", "b"}, {{"x", "a", "b"}, {"y", "a", "b"}})).genus == 0);
  for (const auto& g : {testing::complete_graph(5), testing::complete_bipartite(3, 3)}) {
    GenusResult r = genus_exact(g);
    CHECK(validate_rotation(g, r.witness).ok);
    CHECK(trace_faces(g, r.witness).genus == r.genus);
  }
}

TEST_CASE("genus_exact against the brute-force rotation oracle") {
  testing::Rng rng(testing::seed() + 41);
  for (int t = 0; t < 120; ++t) {
    UndirectedGraph g = testing::random_undirected(rng, testing::uniform(rng, 1, 6), testing::uniform(rng, 0, 10), true);
    int brute;
    try {
      brute = oracle::brute_genus(g, 2e5);
    } catch (const std::runtime_error&) {
      continue;
    }
    GenusResult r = genus_exact(g);
    CHECK(r.genus == brute);
    CHECK(trace_faces(g, r.witness).genus == r.genus);
  }
}

TEST_CASE("genus additive over components") {
  testing::Rng rng(testing::seed() + 42);
  for (int t = 0; t < 20; ++t) {
    UndirectedGraph a = testing::random_undirected(rng, testing::uniform(rng, 2, 6), testing::uniform(rng, 3, 10));
    UndirectedGraph b = testing::random_undirected(rng, testing::uniform(rng, 2, 6), testing::uniform(rng, 3, 10));
    UndirectedGraph both;
    for (int v = 0; v < a.num_vertices(); ++v) both.add_vertex("a" + a.vertex_id(v));
    for (int v = 0; v < b.num_vertices(); ++v) both.add_vertex("b" + b.vertex_id(v));
    for (int e = 0; e < a.num_edges(); ++e) both.add_edge("a" + a.edge_id(e), a.end_a(e), a.end_b(e));
    for (int e = 0; e < b.num_edges(); ++e)
      both.add_edge("b" + b.edge_id(e), a.num_vertices() + b.end_a(e), a.num_vertices() + b.end_b(e));
    CHECK(genus_exact(both).genus == genus_exact(a).genus + genus_exact(b).genus);
  }
  UndirectedGraph two_k5;
  UndirectedGraph k5 = testing::complete_graph(5);
  for (int c = 0; c < 2; ++c)
    for (int v = 0; v < 5; ++v) two_k5.add_vertex(std::to_string(c) + k5.vertex_id(v));
  for (int c = 0; c < 2; ++c)
    for (int e = 0; e < k5.num_edges(); ++e)
      two_k5.add_edge(std::to_string(c) + k5.edge_id(e), 5 * c + k5.end_a(e), 5 * c + k5.end_b(e));
  CHECK(genus_exact(two_k5).genus == 2);
}

TEST_CASE("budget") {
  GenusOptions tight;
  tight.max_rotations = 10;
  CHECK_THROWS_AS(genus_exact(testing::complete_graph(5), tight), BudgetError);
  tight.force = true;
  CHECK(genus_exact(testing::complete_graph(5), tight).genus == 1);
  CHECK(rotation_count(testing::complete_graph(5)) == doctest::Approx(7776));
}

TEST_CASE("planarity") {
  CHECK(is_planar(testing::complete_graph(4)).planar);
  CHECK_FALSE(is_planar(testing::complete_graph(5)).planar);
  DiGraph z7 = excise(simplify(language_graph(corpus_automaton("z7-123"))).graph);
  CHECK_FALSE(is_planar(forget(z7)).planar);
  PlanarityResult k4 = is_planar(testing::complete_graph(4));
  REQUIRE(k4.witness);
  CHECK(trace_faces(testing::complete_graph(4), *k4.witness).genus == 0);
}

TEST_CASE("planarity agrees with genus zero") {
  testing::Rng rng(testing::seed() + 43);
  for (int t = 0; t < 200; ++t) {
    UndirectedGraph g = testing::random_undirected(rng, testing::uniform(rng, 1, 7), testing::uniform(rng, 0, 13), t % 3 == 0);
    GenusOptions opt;
    opt.max_rotations = 5e7;
    GenusResult r;
    try {
      r = genus_exact(g, opt);
    } catch (const BudgetError&) {
      continue;
    }
    PlanarityResult p = is_planar(g);
    CHECK(p.planar == (r.genus == 0));
    if (p.planar) {
      REQUIRE(p.witness);
      CHECK(trace_faces(g, *p.witness).genus == 0);
    }
  }
  for (const auto& [name, g] : corpus_digraphs()) {
    if (g.num_vertices() > 10) continue;
    UndirectedGraph u = forget(g);
    if (rotation_count(u) > 1e8) continue;
    CAPTURE(name);
    CHECK(is_planar(u).planar == (genus_exact(u).genus == 0));
  }
}

TEST_CASE("euler lower bound") {
  CHECK(euler_lower_bound(testing::complete_graph(7), 3) == 1);
  CHECK(euler_lower_bound(testing::complete_graph(5), 3) == 1);
  CHECK(euler_lower_bound(testing::complete_bipartite(3, 3), 4) == 1);
  CHECK(euler_lower_bound(ugraph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}}), 3) == 0);
  CHECK_THROWS_AS(euler_lower_bound(testing::complete_graph(4), 4), PreconditionError);
  CHECK(euler_bound_value(7, 21, 3) == Rational(1));
  CHECK(euler_bound_value(4, 6, 3) == Rational(0));
  DiGraph z7 = excise(simplify(language_graph(corpus_automaton("z7-123"))).graph);
  CHECK(euler_lower_bound(forget(z7), 3) == 1);
}

TEST_CASE("euler bound below exact genus") {
  testing::Rng rng(testing::seed() + 44);
  for (int t = 0; t < 100; ++t) {
    UndirectedGraph g = testing::random_undirected(rng, testing::uniform(rng, 2, 7), testing::uniform(rng, 0, 14), false, true);
    int gamma = girth(g).value_or(3);
    if (gamma < 3) continue;
    GenusOptions opt;
    opt.max_rotations = 5e7;
    try {
      CHECK(euler_lower_bound(g, 3) <= genus_exact(g, opt).genus);
      CHECK(euler_lower_bound(g, gamma) <= genus_exact(g, opt).genus);
    } catch (const BudgetError&) {
    }
  }
}

TEST_CASE("genus formula") {
  CHECK(genus_formula(3, {{3, 14}}) == Rational(1));
  CHECK(genus_formula(3, {{3, 5}}) == Rational(1));
  CHECK(genus_formula(3, {}) == Rational(1));
  // i(m-1)-2m = 4 for m=3, i=5: 1 + 2*4/12
  CHECK(genus_formula(3, {{5, 2}}) == Rational(5, 3));
}

TEST_CASE("invariance suite") {
  auto check_all = [](const DiGraph& g, int expect) {
    InvarianceReport r = genus_invariance_suite(g);
    CHECK(r.equal);
    CHECK(r.g == expect);
    CHECK(r.g_op == expect);
    CHECK(r.g_r == expect);
    CHECK(r.g_exc == expect);
    CHECK(r.g_u == expect);
  };
  check_all(corpus_graph("par2"), 0);
  check_all(corpus_graph("loop2"), 0);
  check_all(corpus_graph("k5-bidirected"), 1);
}
