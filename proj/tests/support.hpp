#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "regulus/automaton.hpp"
#include "regulus/functors.hpp"
#include "regulus/morphism.hpp"

namespace testing {

using Rng = std::mt19937_64;

// Set from --seed by the test mains; fixed default.
std::uint64_t& seed();
// Strips "--seed N" / "--seed=N" from argv.
void take_seed(int& argc, char** argv);

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::string vid(int i) { return "v" + std::to_string(i); }

inline regulus::DiGraph random_digraph(Rng& rng, int n, int m, bool loops = true) {
  regulus::DiGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vid(i));
  for (int e = 0; e < m; ++e) {
    int s = uniform(rng, 0, n - 1), t = uniform(rng, 0, n - 1);
    if (!loops && n > 1)
      while (t == s) t = uniform(rng, 0, n - 1);
    g.add_edge("e" + std::to_string(e), s, t);
  }
  return g;
}

inline regulus::UndirectedGraph random_undirected(Rng& rng, int n, int m, bool loops = false, bool simple = false) {
  regulus::UndirectedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vid(i));
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  int tries = 0;
  for (int e = 0; e < m && tries < 1000; ++tries) {
    int a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
    if (a == b && (!loops || n == 1)) continue;
    if (simple && (a == b || used[a][b])) continue;
    used[a][b] = used[b][a] = true;
    g.add_edge("e" + std::to_string(e++), a, b);
  }
  return g;
}

// Deterministic, complete and accessible, with a single initial state.
inline regulus::Automaton random_dfa(Rng& rng, int states, int letters) {
  for (;;) {
    regulus::DiGraph g;
    std::vector<std::string> labels;
    for (int i = 0; i < states; ++i) g.add_vertex("q" + std::to_string(i));
    for (int i = 0; i < states; ++i)
      for (int a = 0; a < letters; ++a) {
        g.add_edge("q" + std::to_string(i) + "/" + std::string(1, char('a' + a)), i, uniform(rng, 0, states - 1));
        labels.push_back(std::string(1, char('a' + a)));
      }
    std::vector<std::string> fin;
    for (int i = 0; i < states; ++i)
      if (uniform(rng, 0, 2) == 0) fin.push_back("q" + std::to_string(i));
    auto a = regulus::make_automaton(regulus::make_semi_automaton(g, labels), {"q0"}, fin);
    if (regulus::is_accessible(a)) return a;
  }
}

// A directed emulator onto `base`: fibres of random size, every out-edge of
// the base lifted at every fibre vertex at least once, plus random extra lifts.
inline regulus::GraphMorphism random_emulator(Rng& rng, const regulus::DiGraph& base, int max_fiber, bool extra) {
  regulus::DiGraph g;
  std::vector<int> vmap, emap;
  std::vector<std::vector<int>> fibre(base.num_vertices());
  for (int u = 0; u < base.num_vertices(); ++u) {
    int k = uniform(rng, 1, max_fiber);
    for (int i = 0; i < k; ++i) {
      fibre[u].push_back(g.add_vertex(base.vertex_id(u) + "." + std::to_string(i)));
      vmap.push_back(u);
    }
  }
  int next = 0;
  for (int u = 0; u < base.num_vertices(); ++u)
    for (int x : fibre[u])
      for (int e : base.out_edges(u)) {
        int lifts = extra ? uniform(rng, 1, 2) : 1;
        const auto& tf = fibre[base.dst(e)];
        for (int l = 0; l < lifts; ++l) {
          g.add_edge("f" + std::to_string(next++), x, tf[uniform(rng, 0, static_cast<int>(tf.size()) - 1)]);
          emap.push_back(e);
        }
      }
  return regulus::GraphMorphism{g, base, vmap, emap};
}

struct E {
  std::string id, a, b;
};

inline regulus::DiGraph digraph(const std::vector<std::string>& vs, const std::vector<E>& es) {
  regulus::DiGraph g;
  for (const auto& v : vs) g.add_vertex(v);
  for (const auto& e : es) g.add_edge(e.id, e.a, e.b);
  return g;
}

inline regulus::UndirectedGraph ugraph(const std::vector<std::string>& vs, const std::vector<E>& es) {
  regulus::UndirectedGraph g;
  for (const auto& v : vs) g.add_vertex(v);
  for (const auto& e : es) g.add_edge(e.id, e.a, e.b);
  return g;
}

inline regulus::UndirectedGraph complete_graph(int n) {
  regulus::UndirectedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vid(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge("e" + std::to_string(i) + "_" + std::to_string(j), i, j);
  return g;
}

inline regulus::UndirectedGraph complete_bipartite(int p, int q) {
  regulus::UndirectedGraph g;
  for (int i = 0; i < p + q; ++i) g.add_vertex(vid(i));
  for (int i = 0; i < p; ++i)
    for (int j = p; j < p + q; ++j) g.add_edge("e" + std::to_string(i) + "_" + std::to_string(j), i, j);
  return g;
}

// A cover onto Exc(R(H)) obtained from a cover phi onto H by keeping the
// edges sent to class representatives that are not loops.
regulus::GraphMorphism restrict_to_exc_r(const regulus::GraphMorphism& phi);

// An undirected emulator onto `base`: every base edge lifted at every fibre
// vertex of both ends.
inline regulus::UndirectedMorphism random_undirected_emulator(Rng& rng, const regulus::UndirectedGraph& base,
                                                              int max_fiber) {
  regulus::UndirectedGraph g;
  std::vector<int> vmap, emap;
  std::vector<std::vector<int>> fibre(base.num_vertices());
  for (int u = 0; u < base.num_vertices(); ++u)
    for (int i = 0, k = uniform(rng, 1, max_fiber); i < k; ++i) {
      fibre[u].push_back(g.add_vertex(base.vertex_id(u) + "." + std::to_string(i)));
      vmap.push_back(u);
    }
  int next = 0;
  // every base edge is lifted at every fibre vertex of each end, at least once
  for (int e = 0; e < base.num_edges(); ++e) {
    int a = base.end_a(e), b = base.end_b(e);
    for (int side = 0; side < 2; ++side) {
      const auto& here = fibre[side ? b : a];
      const auto& there = fibre[side ? a : b];
      for (int x : here) {
        bool has = false;
        for (int f : g.incident_edges(x)) has = has || emap[f] == e;
        if (has) continue;
        g.add_edge("f" + std::to_string(next++), x, there[uniform(rng, 0, static_cast<int>(there.size()) - 1)]);
        emap.push_back(e);
      }
    }
  }
  return {g, base, vmap, emap};
}

// Every digraph with n vertices and m edges up to relabelling of edges
// (multisets of ordered pairs), and of vertices too when up_to_iso.
void for_each_digraph(int n, int m, const std::function<void(const regulus::DiGraph&)>& f, bool up_to_iso = true);

}  // namespace testing
