#include <doctest.h>

#include "../oracles.hpp"
#include "../support.hpp"
#include "regulus/corpus.hpp"
#include "regulus/emulation.hpp"
#include "regulus/functors.hpp"
#include "regulus/io.hpp"
#include "regulus/language.hpp"
#include "regulus/search.hpp"

using namespace regulus;
using testing::digraph;

namespace {

CoverSearchSpec spec_for(const DiGraph& base, int fiber, int genus) {
  CoverSearchSpec s;
  s.base = base;
  s.max_fiber = fiber;
  s.genus_bound = genus;
  s.time_budget_seconds = 30;
  return s;
}

}  // namespace

TEST_CASE("search on tiny bases") {
  DiGraph loop = digraph({"v"}, {{"l", "v", "v"}});
  CoverSearchSpec s = spec_for(loop, 2, 0);
  CoverSearchResult r = search_covers(s);
  REQUIRE(r.outcome == SearchOutcome::found);
  CHECK(verify_certificate(*r.certificate, loop).ok);
  CHECK(r.certificate->genus == 0);

  DiGraph path = digraph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "c", "a"}});
  CoverSearchResult id = search_covers(spec_for(path, 1, 0));
  REQUIRE(id.outcome == SearchOutcome::found);
  CHECK(id.certificate->total.num_vertices() == 3);
  CHECK(is_directed_cover(id.certificate->morphism).ok);

  CHECK_THROWS_AS(search_covers(spec_for(DiGraph{}, 1, 0)), DomainError);
  CHECK_THROWS_AS(search_covers(spec_for(loop, 0, 0)), DomainError);
}

TEST_CASE("search exhausts on the Z7 graph") {
  LanguageTarget t = language_target(corpus_automaton("z7-123"));
  CoverSearchResult r = search_covers(spec_for(t.target, 1, 0));
  CHECK(r.outcome == SearchOutcome::exhausted);
  CoverSearchResult r2 = search_covers(spec_for(t.target, 2, 0));
  CHECK(r2.outcome == SearchOutcome::exhausted);
  CHECK(r2.stats.pruned_vectors == r2.stats.fiber_vectors);
}

TEST_CASE("search certificates survive serialisation") {
  testing::Rng rng(testing::seed() + 50);
  int found = 0;
  for (int t = 0; t < 30; ++t) {
    DiGraph base = testing::random_digraph(rng, testing::uniform(rng, 1, 4), testing::uniform(rng, 1, 6));
    CoverSearchResult r = search_covers(spec_for(base, 2, testing::uniform(rng, 0, 1)));
    if (r.outcome != SearchOutcome::found) continue;
    ++found;
    CoverCertificate back = certificate_from_json(parse_json(dump(to_json(*r.certificate))));
    CHECK(verify_certificate(back, base).ok);
    CHECK(back.genus == r.certificate->genus);
    CHECK(trace_faces(forget(back.total), back.rotation).genus == back.genus);
  }
  CHECK(found > 0);
}

TEST_CASE("verify_certificate rejects tampering") {
  DiGraph loop = digraph({"v"}, {{"l", "v", "v"}});
  CoverCertificate c = *search_covers(spec_for(loop, 2, 0)).certificate;
  CoverCertificate wrong_genus = c;
  wrong_genus.genus = 1;
  CHECK_FALSE(verify_certificate(wrong_genus, loop).ok);
  CHECK_FALSE(verify_certificate(c, digraph({"v"}, {})).ok);
}

TEST_CASE("language genus: planar minimal automaton") {
  Automaton a = corpus_automaton("abc-mod7");
  CoverSearchSpec b;
  b.max_fiber = 1;
  LanguageGenusResult r = language_genus_leq(a, 0, b);
  CHECK(r.verdict == LanguageVerdict::no_within_bounds);

  DiGraph path = digraph({"p", "q"}, {{"x", "p", "q"}, {"y", "q", "p"}});
  Automaton two = make_automaton(make_semi_automaton(path, std::vector<std::string>{"a", "a"}), {"p"}, {"p"});
  LanguageGenusResult r2 = language_genus_leq(two, 0, b);
  REQUIRE(r2.verdict == LanguageVerdict::yes);
  REQUIRE(r2.witness);
  CHECK(languages_equal(*r2.witness, two));
  CHECK(r2.witness_genus == 0);
  CHECK(r2.witness->graph().num_vertices() == 2);
}

TEST_CASE("language genus: Z7 over {1,2,3} has no planar cover in range") {
  Automaton z7 = corpus_automaton("z7-123");
  CoverSearchSpec b;
  for (int fiber = 1; fiber <= 2; ++fiber) {
    b.max_fiber = fiber;
    LanguageGenusResult r = language_genus_leq(z7, 0, b);
    CHECK(r.verdict == LanguageVerdict::no_within_bounds);
  }
  b.max_fiber = 1;
  LanguageGenusResult r1 = language_genus_leq(z7, 1, b);
  REQUIRE(r1.verdict == LanguageVerdict::yes);
  CHECK(r1.witness_genus == 1);
  CHECK(languages_equal(*r1.witness, z7));
  CHECK_THROWS_AS(language_genus_leq(z7, -1, b), DomainError);
}

TEST_CASE("language genus from a certificate") {
  Automaton z7 = corpus_automaton("z7-123");
  LanguageTarget t = language_target(z7);
  CoverSearchSpec s = spec_for(t.target, 1, 1);
  CoverCertificate cert = *search_covers(s).certificate;
  LanguageGenusResult r = language_genus_from_certificate(z7, 1, cert);
  CHECK(r.verdict == LanguageVerdict::yes);
  CHECK_THROWS_AS(language_genus_from_certificate(z7, 0, cert), PreconditionError);
  CHECK_THROWS_AS(language_genus_from_certificate(corpus_automaton("z6"), 1, cert), PreconditionError);
}

TEST_CASE("a two-fold cover of the Z6 target gives a 12-state automaton") {
  Automaton z6 = corpus_automaton("z6");
  Automaton un = corpus_automaton("z6-unrolled12");
  Minimization m = minimize(un);
  GraphMorphism cover = testing::restrict_to_exc_r(m.pi.base());
  REQUIRE(is_directed_cover(cover).ok);
  Automaton w = automaton_from_cover(un, cover);
  CHECK(w.graph().num_vertices() == 12);
  CHECK(is_deterministic(w.semi));
  CHECK(sample_language(w, 4).words == sample_language(z6, 4).words);
  CHECK(languages_equal(w, z6));
}

TEST_CASE("language_target preconditions") {
  DiGraph g = digraph({"p", "q"}, {{"x", "p", "q"}, {"y", "p", "p"}});
  Automaton nd = make_automaton(make_semi_automaton(g, std::vector<std::string>{"a", "a"}), {"p"}, {"q"});
  CHECK_THROWS_AS(language_target(nd), PreconditionError);
  Automaton two = make_automaton(make_semi_automaton(g, std::vector<std::string>{"a", "b"}), {"p", "q"}, {"q"});
  CHECK_THROWS_AS(language_target(two), PreconditionError);
  LanguageTarget t = language_target(corpus_automaton("abc-mod7"));
  CHECK(is_complete(t.prepared.semi));
  CHECK(t.minimal.graph().num_vertices() == oracle::table_filling_states(t.prepared));
}

TEST_CASE("monomorphisms") {
  DiGraph tri = digraph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "c", "a"}});
  DiGraph p = digraph({"u", "v"}, {{"e", "u", "v"}});
  auto m = find_monomorphism(p, tri);
  REQUIRE(m);
  CHECK(validate_morphism(*m).ok);
  CHECK_FALSE(find_monomorphism(tri, p));
  DiGraph c2 = digraph({"u", "v"}, {{"e", "u", "v"}, {"f", "v", "u"}});
  CHECK_FALSE(find_monomorphism(c2, tri));
}

TEST_CASE("monotonicity checks") {
  CoverSearchSpec b;
  b.max_fiber = 1;
  b.time_budget_seconds = 30;
  Automaton z7 = corpus_automaton("z7-123");
  MonotonicityReport same = genus_monotonicity_checks(z7, z7, b);
  CHECK(same.ok());
  CHECK(same.subgraph);
  CHECK(same.bound_l1 == same.bound_l2);

  // two 2-state languages over disjoint alphabets
  DiGraph c = digraph({"p", "q"}, {{"x", "p", "q"}, {"y", "q", "p"}});
  Automaton la = make_automaton(make_semi_automaton(c, std::vector<std::string>{"a", "a"}), {"p"}, {"p"});
  Automaton lb = make_automaton(make_semi_automaton(c, std::vector<std::string>{"b", "b"}), {"p"}, {"q"});
  MonotonicityReport dis = genus_monotonicity_checks(la, lb, b);
  CAPTURE(dis.failures.size());
  CHECK(dis.ok());
  CHECK(dis.disjoint_alphabets);
  CHECK(dis.bound_union >= std::max(dis.bound_l1, dis.bound_l2));
  Automaton u = union_automaton(la, lb);
  GenusOptions force;
  force.force = true;
  CHECK(genus_exact(u.graph(), force).genus == dis.bound_union);
}
