#include <doctest.h>

#include "../oracles.hpp"
#include "../support.hpp"
#include "regulus/emulation.hpp"
#include "regulus/functors.hpp"
#include "regulus/relation.hpp"

using namespace regulus;
using testing::digraph;

namespace {

DiGraph c2() { return digraph({"a", "b"}, {{"f", "a", "b"}, {"g", "b", "a"}}); }
DiGraph c4() {
  return digraph({"0", "1", "2", "3"}, {{"e0", "0", "1"}, {"e1", "1", "2"}, {"e2", "2", "3"}, {"e3", "3", "0"}});
}
AutomaticRelation wrap4() {
  return relation_from_classes(c4(), {{"0", "2"}, {"1", "3"}}, {{"e0", "e2"}, {"e1", "e3"}});
}

AutomaticRelation from_oracle(const oracle::Rel& r) { return {Partition(r.v), Partition(r.e)}; }

}  // namespace

TEST_CASE("partition basics") {
  Partition p({3, 3, 1, 0});
  CHECK(p.num_blocks() == 3);
  CHECK(p.blocks() == std::vector<int>{0, 0, 1, 2});
  CHECK(Partition::discrete(4).refines(p));
  CHECK(p.refines(Partition::universal(4)));
  CHECK_FALSE(Partition::universal(4).refines(p));
  CHECK(join(Partition({0, 0, 1, 2}), Partition({0, 1, 1, 2})) == Partition({0, 0, 0, 1}));
  CHECK(intersect(Partition({0, 0, 1, 1}), Partition({0, 1, 1, 1})) == Partition({0, 1, 2, 2}));
}

TEST_CASE("is_automatic examples") {
  CHECK(is_automatic(c2(), identity_relation(c2())).ok);
  CHECK(is_automatic(c2(), relation_from_classes(c2(), {{"a", "b"}}, {{"f", "g"}})).ok);
  DiGraph p2 = digraph({"x", "y"}, {{"e", "x", "y"}});
  Verdict v = is_automatic(p2, relation_from_classes(p2, {{"x", "y"}}, {{"e"}}));
  CHECK_FALSE(v.ok);
  CHECK(v.violation.find("y") != std::string::npos);
  CHECK_THROWS_AS(relation_from_classes(p2, {{"x"}}, {{"e"}}), DomainError);
}

TEST_CASE("quotient examples") {
  DiGraph g = c4();
  Quotient id = quotient(g, identity_relation(g));
  CHECK(is_isomorphism(id.can));

  DiGraph par = digraph({"x", "y", "z"}, {{"e1", "x", "y"}, {"e2", "x", "y"}, {"e3", "y", "z"}});
  Quotient r = quotient(par, vertex_induced(par, Partition::discrete(3)));
  CHECK(r.graph == simplify(par).graph);

  DiGraph amalg = digraph({"u", "w"}, {{"uw", "u", "w"}, {"wu", "w", "u"}});
  Quotient lp = quotient(amalg, relation_from_classes(amalg, {{"u", "w"}}, {{"uw", "wu"}}));
  CHECK(lp.graph.num_vertices() == 1);
  CHECK(lp.graph.num_edges() == 1);
  CHECK(lp.graph.is_loop(0));

  DiGraph p2 = digraph({"x", "y"}, {{"e", "x", "y"}});
  CHECK_THROWS_AS(quotient(p2, relation_from_classes(p2, {{"x", "y"}}, {{"e"}})), PreconditionError);
}

TEST_CASE("cover relations") {
  CHECK(is_cover_relation(c4(), identity_relation(c4())));
  DiGraph loop2 = digraph({"u"}, {{"l1", "u", "u"}, {"l2", "u", "u"}});
  CHECK_FALSE(is_cover_relation(loop2, relation_from_classes(loop2, {{"u"}}, {{"l1", "l2"}})));
  CHECK(is_cover_relation(c4(), wrap4()));
}

TEST_CASE("canonical relation and factorization") {
  DiGraph g = c4();
  CHECK(canonical_relation(identity_morphism(g)) == identity_relation(g));

  DiGraph par = digraph({"x", "y"}, {{"e1", "x", "y"}, {"e2", "x", "y"}});
  Simplification s = simplify(par);
  AutomaticRelation cr = canonical_relation(s.rho);
  CHECK(cr.vertices == Partition::discrete(2));
  CHECK(cr.edges.num_blocks() == 1);

  DiGraph sw = digraph({"v", "w"}, {{"a", "v", "w"}, {"b", "v", "w"}});
  GraphMorphism swap = make_morphism(sw, sw, {{"v", "v"}, {"w", "w"}}, {{"a", "b"}, {"b", "a"}});
  CHECK(canonical_relation(swap) == identity_relation(sw));

  EmulatorFactorization fi = factorize(identity_morphism(g));
  CHECK(fi.relation == identity_relation(g));
  CHECK(is_isomorphism(fi.iota));

  Quotient q = quotient(g, wrap4());
  EmulatorFactorization fq = factorize(q.can);
  CHECK(fq.relation == wrap4());
  CHECK(is_isomorphism(fq.iota));
  CHECK(same_morphism(fq.iota, identity_morphism(q.graph)));

  // quotient then rename the target
  DiGraph renamed = digraph({"A", "B"}, {{"F", "A", "B"}, {"G", "B", "A"}});
  GraphMorphism iso = make_morphism(q.graph, renamed, {{q.graph.vertex_id(0), "A"}, {q.graph.vertex_id(1), "B"}},
                                    {{q.graph.edge_id(q.graph.out_edges(0)[0]), "F"},
                                     {q.graph.edge_id(q.graph.out_edges(1)[0]), "G"}});
  EmulatorFactorization fc = factorize(compose(iso, q.can));
  CHECK(fc.relation == wrap4());
  CHECK(same_morphism(fc.iota, iso));
}

TEST_CASE("compose_relations") {
  DiGraph g = c4();
  Quotient q = quotient(g, wrap4());
  CHECK(compose_relations(g, wrap4(), identity_relation(q.graph)) == wrap4());
  CHECK(compose_relations(g, identity_relation(g), wrap4()) == wrap4());
  AutomaticRelation all = {Partition::universal(2), Partition::universal(2)};
  AutomaticRelation c = compose_relations(g, wrap4(), all);
  CHECK(c.vertices.num_blocks() == 1);
  CHECK(c.edges.num_blocks() == 1);
}

TEST_CASE("mn_refine") {
  testing::Rng rng(testing::seed() + 20);
  for (int t = 0; t < 40; ++t) {
    Automaton a = testing::random_dfa(rng, testing::uniform(rng, 1, 6), 2);
    AutomaticRelation r = mn_refine(a.semi, a.finals.empty() ? FinalFamily{} : FinalFamily{a.finals});
    CHECK(r.vertices.num_blocks() == oracle::table_filling_states(a));
  }
  DiGraph two = digraph({"p", "q"}, {{"x", "p", "q"}, {"y", "q", "p"}});
  SemiAutomaton s = make_semi_automaton(two, std::vector<std::string>{"a", "a"});
  CHECK(mn_refine(s, {{0, 1}}).vertices.num_blocks() == 1);
  int rounds = -1;
  mn_refine(s, {{0}}, &rounds);
  CHECK(rounds >= 0);
}

TEST_CASE("mn_refine is automatic and monotone") {
  testing::Rng rng(testing::seed() + 21);
  for (int t = 0; t < 100; ++t) {
    int n = testing::uniform(rng, 1, 5);
    DiGraph g = testing::random_digraph(rng, n, testing::uniform(rng, 0, 8));
    std::vector<std::string> labels;
    for (int e = 0; e < g.num_edges(); ++e) labels.push_back(std::string(1, char('a' + testing::uniform(rng, 0, 1))));
    SemiAutomaton a = make_semi_automaton(g, labels);
    // random family, then a finer one by splitting each set
    FinalFamily coarse, fine;
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = testing::uniform(rng, 0, 2);
    for (int c = 0; c < 2; ++c) {
      std::vector<int> set, half1, half2;
      for (int v = 0; v < n; ++v)
        if (cls[v] == c) set.push_back(v);
      if (set.empty()) continue;
      coarse.push_back(set);
      for (std::size_t i = 0; i < set.size(); ++i) (i % 2 ? half2 : half1).push_back(set[i]);
      fine.push_back(half1);
      if (!half2.empty()) fine.push_back(half2);
    }
    AutomaticRelation rc = mn_refine(a, coarse), rf = mn_refine(a, fine);
    CHECK(is_automatic(g, rc).ok);
    CHECK(is_automatic(g, rf).ok);
    CHECK(oracle::is_automatic(g, rc.vertices.blocks(), rc.edges.blocks()));
    CHECK(leq(rf, rc));
  }
}

TEST_CASE("final systems") {
  CHECK(complete_final_systems(c2()).cardinality == 1);
  DiGraph p2 = digraph({"x", "y"}, {{"e", "x", "y"}});
  FinalSystem fp = complete_final_systems(p2);
  CHECK(fp.cardinality == 1);
  CHECK(fp.vertices == std::vector<int>{1});
  DiGraph two = digraph({"a", "b", "c", "d"}, {{"1", "a", "b"}, {"2", "b", "a"}, {"3", "c", "d"}, {"4", "d", "c"}});
  FinalSystem ft = complete_final_systems(two);
  CHECK(ft.cardinality == 2);
  CHECK(is_minimal_complete_final_system(two, ft.vertices));
  CHECK(is_complete_final_system(two, {0, 1, 2}));
  CHECK_FALSE(is_minimal_complete_final_system(two, {0, 1, 2}));
  CHECK_FALSE(is_complete_final_system(two, {0}));
}

TEST_CASE("automatic to MN round trip") {
  CHECK(automatic_to_mn_roundtrip(c2(), identity_relation(c2())).ok);
  CHECK(automatic_to_mn_roundtrip(c4(), wrap4()).ok);
  DiGraph amalg = digraph({"u", "w", "v"}, {{"uw", "u", "w"}, {"wu", "w", "u"}, {"l", "v", "v"}});
  AutomaticRelation r = relation_from_classes(amalg, {{"u", "w", "v"}}, {{"uw", "wu", "l"}});
  REQUIRE(is_automatic(amalg, r).ok);
  CHECK(automatic_to_mn_roundtrip(amalg, r).ok);
}

TEST_CASE("lattice examples") {
  AutomaticRelation m = maximum(c4());
  CHECK(m.vertices.num_blocks() == 1);
  CHECK(m.edges.num_blocks() == 1);

  // two forks sharing nothing: merging the centres one way or the other
  DiGraph g = digraph({"c1", "x1", "y1", "c2", "x2", "y2"},
                      {{"a1", "c1", "x1"}, {"b1", "c1", "y1"}, {"a2", "c2", "x2"}, {"b2", "c2", "y2"}});
  AutomaticRelation r1 = vertex_induced(g, Partition({0, 1, 1, 0, 1, 1}));
  AutomaticRelation r2 = vertex_induced(g, Partition({0, 1, 2, 0, 2, 1}));
  REQUIRE(is_automatic(g, r1).ok);
  REQUIRE(is_automatic(g, r2).ok);
  AutomaticRelation mt = meet(g, r1, r2);
  CHECK(is_automatic(g, mt).ok);
  CHECK(leq(mt, r1));
  CHECK(leq(mt, r2));
  auto all = oracle::all_automatic(g);
  auto glb = oracle::greatest_lower(all, {r1.vertices.blocks(), r1.edges.blocks()},
                                    {r2.vertices.blocks(), r2.edges.blocks()});
  REQUIRE(glb.size() == 1);
  CHECK(mt == from_oracle(glb[0]));
}

TEST_CASE("lattice operations against brute force on small graphs") {
  testing::Rng rng(testing::seed() + 22);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    DiGraph g = testing::random_digraph(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 7));
    auto all = oracle::all_automatic(g);
    AutomaticRelation top = maximum(g);
    for (const auto& r : all) CHECK(oracle::leq(r, {top.vertices.blocks(), top.edges.blocks()}));
    for (int k = 0; k < 6; ++k) {
      const auto& a = all[testing::uniform(rng, 0, static_cast<int>(all.size()) - 1)];
      const auto& b = all[testing::uniform(rng, 0, static_cast<int>(all.size()) - 1)];
      auto lub = oracle::least_upper(all, a, b);
      auto glb = oracle::greatest_lower(all, a, b);
      REQUIRE(lub.size() == 1);
      REQUIRE(glb.size() == 1);
      CHECK(join(g, from_oracle(a), from_oracle(b)) == from_oracle(lub[0]));
      CHECK(meet(g, from_oracle(a), from_oracle(b)) == from_oracle(glb[0]));
      ++checked;
    }
  }
  CHECK(checked == 360);
}

TEST_CASE("quotient maps are emulators; covers iff cover relations") {
  testing::Rng rng(testing::seed() + 23);
  for (int t = 0; t < 40; ++t) {
    DiGraph g = testing::random_digraph(rng, testing::uniform(rng, 1, 4), testing::uniform(rng, 1, 6));
    for (const auto& r : oracle::all_automatic(g)) {
      AutomaticRelation ar = from_oracle(r);
      CHECK(is_automatic(g, ar).ok);
      Quotient q = quotient(g, ar);
      CHECK(is_directed_emulator(q.can).ok);
      CHECK(is_directed_cover(q.can).ok == is_cover_relation(g, ar));
      CHECK(oracle::is_emulator(q.can));
    }
  }
}

TEST_CASE("canonical semi-automaton") {
  SemiAutomaton s = canonical_semi_automaton(c4(), wrap4());
  CHECK(s.num_letters() == 2);
  CHECK(is_deterministic(s));
}
