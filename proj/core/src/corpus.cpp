#include "regulus/corpus.hpp"

#include <functional>

#include "regulus/functors.hpp"

namespace regulus {

namespace {

DiGraph make_graph(const std::vector<std::string>& vertices,
                   const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  DiGraph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [id, s, t] : edges) g.add_edge(id, s, t);
  return g;
}

UndirectedGraph make_undirected(const std::vector<std::string>& vertices,
                                const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  UndirectedGraph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [id, a, b] : edges) g.add_edge(id, a, b);
  return g;
}

Automaton z6_unrolled12() {
  DiGraph g;
  std::vector<std::string> labels;
  auto name = [](int i, int b) { return std::to_string(i) + "." + std::to_string(b); };
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < 6; ++i) g.add_vertex(name(i, b));
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        g.add_edge(name(i, b) + "/" + std::to_string(j), name(i, b), name((i + j) % 6, 1 - b));
        labels.push_back(std::to_string(j));
      }
  return make_automaton(make_semi_automaton(std::move(g), labels), {"0.0"}, {"0.0", "0.1"});
}

Automaton abc_mod7() {
  DiGraph g;
  std::vector<std::string> labels;
  auto mid = [](int i, int layer) { return std::to_string(i) + "_" + std::to_string(layer); };
  g.add_vertex("init");
  for (int layer = 0; layer < 2; ++layer)
    for (int i = 0; i < 7; ++i) g.add_vertex(mid(i, layer));
  g.add_vertex("fin");
  auto edge = [&](const std::string& s, int letter, const std::string& t) {
    g.add_edge(s + "/" + std::to_string(letter), s, t);
    labels.push_back(std::to_string(letter));
  };
  for (int a = 0; a < 7; ++a) edge("init", a, mid(a, 0));
  for (int i = 0; i < 7; ++i)
    for (int b = 0; b < 7; ++b) edge(mid(i, 0), b, mid((i + b) % 7, 1));
  for (int i = 0; i < 7; ++i) edge(mid(i, 1), (7 - i) % 7, "fin");
  return make_automaton(make_semi_automaton(std::move(g), labels), {"init"}, {"fin"});
}

GraphMorphism morphism(DiGraph s, DiGraph t, const IdMap& p, const IdMap& q) {
  return make_morphism(std::move(s), std::move(t), p, q);
}

struct Builder {
  CorpusEntry entry;
  std::function<Json()> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> all = [] {
    std::vector<Builder> b;
    auto add = [&](std::string name, CorpusKind kind, std::string file, std::string desc, std::function<Json()> f) {
      b.push_back({{std::move(name), kind, std::move(file), std::move(desc)}, std::move(f)});
    };
    add("z6", CorpusKind::automaton, "z6.auto.json",
        "Words over Z/6 whose letter sum is 0 mod 6; minimal, 6 states, complete simple graph plus loops",
        [] { return to_json(cyclic_sum_automaton(6, {0, 1, 2, 3, 4, 5})); });
    add("z6-unrolled12", CorpusKind::automaton, "z6_unrolled12.auto.json",
        "The Z/6 sum language tracked together with word-length parity; 12 states minimising to 6",
        [] { return to_json(z6_unrolled12()); });
    add("z7-123", CorpusKind::automaton, "z7_123.auto.json",
        "Words over {1,2,3} whose sum is 0 mod 7; minimal graph has out-degree 3 and girth 3",
        [] { return to_json(cyclic_sum_automaton(7, {1, 2, 3})); });
    add("abc-mod7", CorpusKind::automaton, "abc_mod7.auto.json",
        "Three-letter words abc over Z/7 with a+b+c = 0 mod 7; initial, two layers of 7, final",
        [] { return to_json(abc_mod7()); });
    add("loop2-to-loop1", CorpusKind::morphism, "loop2_to_loop1.mor.json",
        "Two loops onto one loop: a directed emulator that is not a directed cover", [] {
          return to_json(morphism(make_graph({"u"}, {{"l1", "u", "u"}, {"l2", "u", "u"}}),
                                  make_graph({"v"}, {{"l", "v", "v"}}), {{"u", "v"}}, {{"l1", "l"}, {"l2", "l"}}));
        });
    add("fork-nonemulator", CorpusKind::morphism, "fork_nonemulator.mor.json",
        "Epimorphism onto a two-edge fork whose centre has two out-edges while each preimage has one", [] {
          return to_json(morphism(make_graph({"v0", "u0", "v1", "v2"}, {{"a", "u0", "v1"}, {"b", "v0", "v2"}}),
                                  make_graph({"w0", "w1", "w2"}, {{"a", "w0", "w1"}, {"b", "w0", "w2"}}),
                                  {{"v0", "w0"}, {"u0", "w0"}, {"v1", "w1"}, {"v2", "w2"}}, {{"a", "a"}, {"b", "b"}}));
        });
    add("simple-example", CorpusKind::morphism, "simple_example.mor.json",
        "A 2-cycle u <-> w amalgamated onto a single loop", [] {
          return to_json(morphism(make_graph({"u", "w"}, {{"uw", "u", "w"}, {"wu", "w", "u"}}),
                                  make_graph({"v"}, {{"l", "v", "v"}}), {{"u", "v"}, {"w", "v"}},
                                  {{"uw", "l"}, {"wu", "l"}}));
        });
    add("swap-self-emulation", CorpusKind::morphism, "swap_self_emulation.mor.json",
        "Two parallel edges v -> w emulating themselves with the edges swapped", [] {
          DiGraph g = make_graph({"v", "w"}, {{"a", "v", "w"}, {"b", "v", "w"}});
          return to_json(morphism(g, g, {{"v", "v"}, {"w", "w"}}, {{"a", "b"}, {"b", "a"}}));
        });
    add("extraction-2fiber", CorpusKind::morphism, "extraction_2fiber.mor.json",
        "Fibres of size two over a single edge v -> w with three lifted edges; extraction is not unique", [] {
          return to_json(morphism(
              make_graph({"v1", "v2", "w1", "w2"}, {{"v1w1", "v1", "w1"}, {"v2w1", "v2", "w1"}, {"v2w2", "v2", "w2"}}),
              make_graph({"v", "w"}, {{"e", "v", "w"}}), {{"v1", "v"}, {"v2", "v"}, {"w1", "w"}, {"w2", "w"}},
              {{"v1w1", "e"}, {"v2w1", "e"}, {"v2w2", "e"}}));
        });
    add("r-not-cover", CorpusKind::morphism, "r_not_cover.mor.json",
        "A fork covering two parallel edges; after simplification it only emulates", [] {
          return to_json(morphism(make_graph({"u", "v1", "v2"}, {{"a", "u", "v1"}, {"b", "u", "v2"}}),
                                  make_graph({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}}),
                                  {{"u", "u"}, {"v1", "v"}, {"v2", "v"}}, {{"a", "a"}, {"b", "b"}}));
        });
    add("u-not-emulator", CorpusKind::morphism, "u_not_emulator.mor.json",
        "A directed emulator of a directed path whose undirected image is not an emulator", [] {
          return to_json(morphism(
              make_graph({"v0", "v1", "u1", "v2"}, {{"a", "v0", "v1"}, {"b", "v1", "v2"}, {"c", "u1", "v2"}}),
              make_graph({"w0", "w1", "w2"}, {{"a", "w0", "w1"}, {"b", "w1", "w2"}}),
              {{"v0", "w0"}, {"v1", "w1"}, {"u1", "w1"}, {"v2", "w2"}}, {{"a", "a"}, {"b", "b"}, {"c", "b"}}));
        });
    add("path-4-over-3", CorpusKind::undirected_morphism, "path_4_over_3.umor.json",
        "A 4-cycle over a 3-vertex path: an undirected emulator containing no 4-vertex cover", [] {
          auto top = make_undirected({"h1", "h2", "h3", "h4"},
                                     {{"a3", "h1", "h3"}, {"b3", "h3", "h2"}, {"a4", "h1", "h4"}, {"b4", "h4", "h2"}});
          auto bottom = make_undirected({"g1", "g2", "g3"}, {{"a", "g1", "g2"}, {"b", "g2", "g3"}});
          return to_json(make_morphism(top, bottom, {{"h1", "g1"}, {"h2", "g3"}, {"h3", "g2"}, {"h4", "g2"}},
                                       {{"a3", "a"}, {"a4", "a"}, {"b3", "b"}, {"b4", "b"}}));
        });
    add("edge-to-loop-undirected", CorpusKind::undirected_morphism, "edge_to_loop.umor.json",
        "A single edge onto a loop: an undirected cover that no choice of directions makes a directed emulator",
        [] {
          auto top = make_undirected({"x", "y"}, {{"e", "x", "y"}});
          auto bottom = make_undirected({"z"}, {{"l", "z", "z"}});
          return to_json(make_morphism(top, bottom, {{"x", "z"}, {"y", "z"}}, {{"e", "l"}}));
        });
    add("c2-to-double-edge", CorpusKind::morphism, "c2_to_double_edge.mor.json",
        "The directed 2-cycle onto the bidirection of one edge: a directed cover whose transfer is not a cover",
        [] {
          DiGraph c2 = make_graph({"x", "y"}, {{"f", "x", "y"}, {"g", "y", "x"}});
          DiGraph dbl = bidirect(make_undirected({"x", "y"}, {{"e", "x", "y"}}));
          return to_json(morphism(c2, dbl, {{"x", "x"}, {"y", "y"}},
                                  {{"f", bidirected_edge_id("e", "x", "y")}, {"g", bidirected_edge_id("e", "y", "x")}}));
        });
    add("example-op", CorpusKind::graph, "example_op.graph.json",
        "Two vertices v, w with a loop g at v and edges e: v -> w, f: w -> v",
        [] { return to_json(make_graph({"v", "w"}, {{"g", "v", "v"}, {"e", "v", "w"}, {"f", "w", "v"}})); });
    add("par2", CorpusKind::graph, "par2.graph.json", "Two parallel edges u -> v",
        [] { return to_json(make_graph({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}})); });
    add("loop2", CorpusKind::graph, "loop2.graph.json", "One vertex carrying two loops",
        [] { return to_json(make_graph({"u"}, {{"l1", "u", "u"}, {"l2", "u", "u"}})); });
    add("k5-bidirected", CorpusKind::graph, "k5_bidirected.graph.json",
        "The bidirection of the complete graph on five vertices", [] {
          UndirectedGraph k5;
          for (int i = 0; i < 5; ++i) k5.add_vertex(std::to_string(i));
          for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) k5.add_edge(std::to_string(i) + std::to_string(j), i, j);
          return to_json(bidirect(k5));
        });
    return b;
  }();
  return all;
}

const Builder& builder(const std::string& name) {
  for (const auto& b : builders())
    if (b.entry.name == name) return b;
  throw DomainError("unknown corpus entry '" + name + "'");
}

}  // namespace

Automaton cyclic_sum_automaton(int n, const std::vector<int>& letters) {
  if (n < 1 || letters.empty()) throw DomainError("cyclic_sum_automaton: need n >= 1 and some letters");
  DiGraph g;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j : letters) {
      g.add_edge(std::to_string(i) + "/" + std::to_string(j), i, ((i + j) % n + n) % n);
      labels.push_back(std::to_string(j));
    }
  return make_automaton(make_semi_automaton(std::move(g), labels), {"0"}, {"0"});
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& b : builders()) out.push_back(b.entry);
    return out;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) { return builder(name).entry; }

Json corpus_json(const std::string& name) {
  const Builder& b = builder(name);
  Json j = b.build();
  j["description"] = b.entry.description;
  return j;
}

Automaton corpus_automaton(const std::string& name) {
  if (corpus_entry(name).kind != CorpusKind::automaton) throw DomainError("'" + name + "' is not an automaton");
  return automaton_from_json(corpus_json(name));
}

GraphMorphism corpus_morphism(const std::string& name) {
  if (corpus_entry(name).kind != CorpusKind::morphism) throw DomainError("'" + name + "' is not a directed morphism");
  return morphism_from_json(corpus_json(name));
}

UndirectedMorphism corpus_undirected_morphism(const std::string& name) {
  if (corpus_entry(name).kind != CorpusKind::undirected_morphism)
    throw DomainError("'" + name + "' is not an undirected morphism");
  return undirected_morphism_from_json(corpus_json(name));
}

DiGraph corpus_graph(const std::string& name) {
  if (corpus_entry(name).kind != CorpusKind::graph) throw DomainError("'" + name + "' is not a graph");
  return graph_from_json(corpus_json(name));
}

std::vector<std::pair<std::string, DiGraph>> corpus_digraphs() {
  std::vector<std::pair<std::string, DiGraph>> out;
  for (const auto& e : corpus_entries()) {
    switch (e.kind) {
      case CorpusKind::graph: out.emplace_back(e.name, corpus_graph(e.name)); break;
      case CorpusKind::automaton: out.emplace_back(e.name, corpus_automaton(e.name).graph()); break;
      case CorpusKind::morphism: {
        GraphMorphism m = corpus_morphism(e.name);
        out.emplace_back(e.name + ":source", m.source);
        out.emplace_back(e.name + ":target", m.target);
        break;
      }
      case CorpusKind::undirected_morphism: break;
    }
  }
  return out;
}

}  // namespace regulus
