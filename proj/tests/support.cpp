#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <set>

namespace testing {

std::uint64_t& seed() {
  static std::uint64_t s = 20240601;
  return s;
}

void take_seed(int& argc, char** argv) {
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed() = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      seed() = std::strtoull(argv[i] + 7, nullptr, 10);
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
}

}  // namespace testing

namespace testing {

regulus::GraphMorphism restrict_to_exc_r(const regulus::GraphMorphism& phi) {
  regulus::DiGraph exc = regulus::excise(regulus::simplify(phi.target).graph);
  regulus::DiGraph src;
  std::vector<int> vmap, emap;
  for (int v = 0; v < phi.source.num_vertices(); ++v) {
    src.add_vertex(phi.source.vertex_id(v));
    vmap.push_back(exc.vertex(phi.target.vertex_id(phi.p(v))));
  }
  for (int e = 0; e < phi.source.num_edges(); ++e) {
    auto f = exc.find_edge(phi.target.edge_id(phi.q(e)));
    if (!f) continue;
    src.add_edge(phi.source.edge_id(e), phi.source.src(e), phi.source.dst(e));
    emap.push_back(*f);
  }
  return {src, exc, vmap, emap};
}

void for_each_digraph(int n, int m, const std::function<void(const regulus::DiGraph&)>& f, bool up_to_iso) {
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) pairs.emplace_back(s, t);
  std::vector<int> perm(n);
  std::set<std::vector<int>> seen;
  // least adjacency-count matrix over all vertex relabellings
  auto canonical = [&](const std::vector<int>& pick) {
    std::vector<int> best;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> adj(n * n, 0);
      for (int k : pick) ++adj[perm[pairs[k].first] * n + perm[pairs[k].second]];
      if (best.empty() || adj < best) best = std::move(adj);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  std::vector<int> pick(m, 0);
  std::function<void(int, int)> rec = [&](int i, int from) {
    if (i == m) {
      if (up_to_iso && n > 0 && !seen.insert(canonical(pick)).second) return;
      regulus::DiGraph g;
      for (int v = 0; v < n; ++v) g.add_vertex(vid(v));
      for (int e = 0; e < m; ++e) g.add_edge("e" + std::to_string(e), pairs[pick[e]].first, pairs[pick[e]].second);
      f(g);
      return;
    }
    for (int k = from; k < static_cast<int>(pairs.size()); ++k) {
      pick[i] = k;
      rec(i + 1, k);
    }
  };
  if (n == 0 && m > 0) return;
  rec(0, 0);
}

}  // namespace testing
