#include <doctest.h>

#include "../support.hpp"
#include "regulus/corpus.hpp"
#include "regulus/emulation.hpp"
#include "regulus/io.hpp"
#include "regulus/relation.hpp"

using namespace regulus;
using testing::digraph;
using testing::ugraph;

namespace {

template <class T>
Json again(const T& x) {
  return parse_json(dump(to_json(x)));
}

}  // namespace

TEST_CASE("graph formats round trip") {
  testing::Rng rng(testing::seed() + 60);
  for (int t = 0; t < 50; ++t) {
    DiGraph g = testing::random_digraph(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 0, 8));
    CHECK(graph_from_json(again(g)) == g);
    UndirectedGraph u = testing::random_undirected(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 0, 8), true);
    Json ju = again(u);
    // without edges the two formats coincide
    CHECK(is_undirected_json(ju) == (u.num_edges() > 0));
    CHECK_FALSE(is_undirected_json(again(g)));
    CHECK(undirected_from_json(ju) == u);
    CHECK(dump(to_json(undirected_from_json(ju))) == dump(ju));
  }
}

TEST_CASE("automaton and morphism formats round trip") {
  testing::Rng rng(testing::seed() + 61);
  for (int t = 0; t < 30; ++t) {
    Automaton a = testing::random_dfa(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 3));
    CHECK(automaton_from_json(again(a)) == a);
    CHECK(semi_automaton_from_json(again(a.semi)) == a.semi);

    DiGraph base = testing::random_digraph(rng, testing::uniform(rng, 1, 4), testing::uniform(rng, 1, 6));
    GraphMorphism phi = testing::random_emulator(rng, base, 2, true);
    CHECK(same_morphism(morphism_from_json(again(phi)), phi));

    AutomaticRelation r = canonical_relation(phi);
    CHECK(relation_from_json(phi.source, parse_json(dump(to_json(phi.source, r)))) == r);
  }
  UndirectedMorphism p43 = corpus_undirected_morphism("path-4-over-3");
  CHECK(same_morphism(undirected_morphism_from_json(again(p43)), p43));
}

TEST_CASE("rotation and certificate formats") {
  UndirectedGraph k4 = testing::complete_graph(4);
  PlanarityResult p = is_planar(k4);
  REQUIRE(p.witness);
  CHECK(rotation_from_json(k4, parse_json(dump(to_json(k4, *p.witness)))) == *p.witness);
  Json j = to_json(k4, *p.witness);
  j["rotation"][k4.vertex_id(0)] = Json::array();
  CHECK_THROWS_AS(rotation_from_json(k4, j), DomainError);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{"), DomainError);
  CHECK_THROWS_AS(graph_from_json(parse_json("[]")), DomainError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"vertices": ["a"], "edges": [{"id": "e", "src": "a", "dst": "b"}]})")),
                  DomainError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"vertices": ["a", "a"], "edges": []})")), DomainError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/x.json"), DomainError);
  // unknown keys are ignored
  DiGraph g = graph_from_json(parse_json(R"({"vertices": ["a"], "edges": [], "description": "x", "extra": 1})"));
  CHECK(g.num_vertices() == 1);
}

TEST_CASE("corpus entries") {
  CHECK(corpus_entries().size() >= 12);
  for (const CorpusEntry& e : corpus_entries()) {
    CAPTURE(e.name);
    Json j = corpus_json(e.name);
    CHECK(j.value("description", "") == e.description);
    CHECK_FALSE(e.description.empty());
    CHECK(dump(j) == dump(corpus_json(e.name)));
    switch (e.kind) {
      case CorpusKind::graph:
        CHECK(graph_from_json(j) == corpus_graph(e.name));
        break;
      case CorpusKind::automaton: {
        Automaton a = automaton_from_json(j);
        CHECK(a == corpus_automaton(e.name));
        CHECK(is_accessible(a));
        break;
      }
      case CorpusKind::morphism:
        CHECK(validate_morphism(morphism_from_json(j)).ok);
        break;
      case CorpusKind::undirected_morphism:
        CHECK(validate_morphism(undirected_morphism_from_json(j)).ok);
        break;
    }
  }
  CHECK_THROWS_AS(corpus_entry("no-such-thing"), DomainError);
  CHECK_THROWS_AS(corpus_automaton("loop2-to-loop1"), DomainError);
}

TEST_CASE("corpus fixture shapes") {
  CHECK(corpus_automaton("z6").graph().num_vertices() == 6);
  CHECK(corpus_automaton("z6").graph().num_edges() == 36);
  CHECK(corpus_automaton("z6-unrolled12").graph().num_vertices() == 12);
  Automaton z7 = corpus_automaton("z7-123");
  CHECK(z7.graph().num_vertices() == 7);
  CHECK(z7.graph().num_edges() == 21);
  CHECK(corpus_automaton("abc-mod7").graph().num_vertices() == 16);
  CHECK(cyclic_sum_automaton(7, {1, 2, 3}) == z7);
  CHECK_THROWS_AS(cyclic_sum_automaton(0, {1}), DomainError);
}

TEST_CASE("dot output") {
  DiGraph g = digraph({"a", "b"}, {{"x", "a", "b"}});
  std::string d = to_dot(g);
  CHECK(d.rfind("digraph", 0) == 0);
  CHECK(d.find("->") != std::string::npos);
  std::string u = to_dot(ugraph({"a", "b"}, {{"x", "a", "b"}}));
  CHECK(u.rfind("graph", 0) == 0);
  CHECK(u.find("--") != std::string::npos);
  std::string a = to_dot(corpus_automaton("z6"));
  CHECK(a.find("doublecircle") != std::string::npos);
}
