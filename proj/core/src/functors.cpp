#include "regulus/functors.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "regulus/error.hpp"

namespace regulus {

Simplification simplify(const DiGraph& g) {
  // Representative of each boundary class: least edge id.
  std::map<std::pair<int, int>, int> rep;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto key = std::make_pair(g.src(e), g.dst(e));
    auto [it, fresh] = rep.emplace(key, e);
    if (!fresh && g.edge_id(e) < g.edge_id(it->second)) it->second = e;
  }
  DiGraph r;
  for (const auto& v : g.vertex_ids()) r.add_vertex(v);
  std::map<std::pair<int, int>, int> class_edge;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto key = std::make_pair(g.src(e), g.dst(e));
    if (rep[key] == e) class_edge[key] = r.add_edge(g.edge_id(e), g.src(e), g.dst(e));
  }
  GraphMorphism rho{g, r, std::vector<int>(g.num_vertices()), std::vector<int>(g.num_edges())};
  for (int v = 0; v < g.num_vertices(); ++v) rho.vmap[v] = v;
  for (int e = 0; e < g.num_edges(); ++e) rho.emap[e] = class_edge[{g.src(e), g.dst(e)}];
  return {std::move(r), std::move(rho)};
}

DiGraph excise(const DiGraph& g) {
  DiGraph out;
  for (const auto& v : g.vertex_ids()) out.add_vertex(v);
  for (const auto& e : g.edges())
    if (e.src != e.dst) out.add_edge(e.id, e.src, e.dst);
  return out;
}

DiGraph opposite(const DiGraph& g) {
  DiGraph out;
  for (const auto& v : g.vertex_ids()) out.add_vertex(v);
  for (const auto& e : g.edges()) out.add_edge(e.id, e.dst, e.src);
  return out;
}

UndirectedGraph forget(const DiGraph& g) {
  UndirectedGraph out;
  for (const auto& v : g.vertex_ids()) out.add_vertex(v);
  for (const auto& e : g.edges()) out.add_edge(e.id, e.src, e.dst);
  return out;
}

std::string bidirected_edge_id(std::string_view e, std::string_view x, std::string_view y) {
  std::string id(e);
  id += ':';
  id += x;
  id += '>';
  id += y;
  return id;
}

Bidirection bidirect_with_origin(const UndirectedGraph& h) {
  Bidirection out;
  for (const auto& v : h.vertex_ids()) out.graph.add_vertex(v);
  for (int e = 0; e < h.num_edges(); ++e) {
    int a = h.end_a(e), b = h.end_b(e);
    const auto& id = h.edge_id(e);
    out.graph.add_edge(bidirected_edge_id(id, h.vertex_id(a), h.vertex_id(b)), a, b);
    out.origin.push_back(e);
    if (a != b) {
      out.graph.add_edge(bidirected_edge_id(id, h.vertex_id(b), h.vertex_id(a)), b, a);
      out.origin.push_back(e);
    }
  }
  return out;
}

DiGraph bidirect(const UndirectedGraph& h) { return bidirect_with_origin(h).graph; }

GraphMorphism bidirect(const UndirectedMorphism& phi) {
  auto src = bidirect_with_origin(phi.source);
  DiGraph dst = bidirect(phi.target);
  GraphMorphism m{src.graph, dst, phi.vmap, std::vector<int>(src.graph.num_edges())};
  const auto& h = phi.target;
  for (int e = 0; e < src.graph.num_edges(); ++e) {
    int x = phi.p(src.graph.src(e)), y = phi.p(src.graph.dst(e));
    m.emap[e] = dst.edge(bidirected_edge_id(h.edge_id(phi.q(src.origin[e])), h.vertex_id(x), h.vertex_id(y)));
  }
  return m;
}

UndirectedMorphism forget(const GraphMorphism& phi) {
  return {forget(phi.source), forget(phi.target), phi.vmap, phi.emap};
}

Pullback pullback(const GraphMorphism& phi, const GraphMorphism& psi) {
  if (!(phi.target == psi.target)) throw DomainError("pullback: morphisms have different targets");
  const DiGraph& g = phi.source;
  const DiGraph& h = psi.source;
  const DiGraph& k = phi.target;
  // psi's target may index the shared ids differently.
  auto kv = [&](int v) { return k.vertex(psi.target.vertex_id(psi.p(v))); };
  auto ke = [&](int e) { return k.edge(psi.target.edge_id(psi.q(e))); };

  Pullback out;
  std::map<std::pair<int, int>, int> pair_vertex;
  std::vector<int> v1, v2, e1, e2;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v = 0; v < h.num_vertices(); ++v)
      if (phi.p(u) == kv(v)) {
        pair_vertex[{u, v}] = out.graph.add_vertex("(" + g.vertex_id(u) + "," + h.vertex_id(v) + ")");
        v1.push_back(u);
        v2.push_back(v);
      }
  for (int e = 0; e < g.num_edges(); ++e)
    for (int f = 0; f < h.num_edges(); ++f)
      if (phi.q(e) == ke(f)) {
        out.graph.add_edge("(" + g.edge_id(e) + "," + h.edge_id(f) + ")", pair_vertex.at({g.src(e), h.src(f)}),
                           pair_vertex.at({g.dst(e), h.dst(f)}));
        e1.push_back(e);
        e2.push_back(f);
      }
  out.pi1 = {out.graph, g, std::move(v1), std::move(e1)};
  out.pi2 = {out.graph, h, std::move(v2), std::move(e2)};
  return out;
}

std::vector<bool> forward_closure(const DiGraph& g, const std::vector<int>& start) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<int> stack;
  for (int s : start)
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.out_edges(v))
      if (!seen[g.dst(e)]) {
        seen[g.dst(e)] = true;
        stack.push_back(g.dst(e));
      }
  }
  return seen;
}

Reachability reachability(const DiGraph& g) {
  const int n = g.num_vertices();
  Reachability r;
  r.pr.assign(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    auto fwd = forward_closure(g, {v});
    for (int w = 0; w < n; ++w)
      if (fwd[w]) r.pr[w][v] = true;
  }
  if (n == 0) return r;
  for (int w = 0; w < n; ++w)
    if (std::all_of(r.pr[w].begin(), r.pr[w].end(), [](bool b) { return b; })) r.reachable.push_back(w);
  for (int v = 0; v < n; ++v) {
    bool all = true;
    for (int w = 0; w < n && all; ++w) all = r.pr[w][v];
    if (all) r.co_reachable.push_back(v);
  }
  return r;
}

std::vector<int> strongly_connected_components(const DiGraph& g, int* count) {
  // Kosaraju, iterative.
  const int n = g.num_vertices();
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      auto out = g.out_edges(v);
      if (i < out.size()) {
        int w = g.dst(out[i++]);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(n, -1);
  int c = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<int> stack{*it};
    comp[*it] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.in_edges(v))
        if (comp[g.src(e)] == -1) {
          comp[g.src(e)] = c;
          stack.push_back(g.src(e));
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

void check_cycle(const DiGraph& g, const DirectedCycle& c) {
  if (c.edges.empty()) throw DomainError("cycle has no edges");
  std::set<std::string> seen;
  std::vector<int> idx;
  for (const auto& id : c.edges) {
    auto e = g.find_edge(id);
    if (!e) throw DomainError("cycle edge '" + id + "' is not in the graph");
    if (!seen.insert(id).second) throw DomainError("cycle repeats edge '" + id + "'");
    idx.push_back(*e);
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    int next = idx[(i + 1) % idx.size()];
    if (g.dst(idx[i]) != g.src(next))
      throw DomainError("cycle is not closed at '" + g.edge_id(idx[i]) + "' -> '" + g.edge_id(next) + "'");
  }
}

Contraction contract_cycle_with_info(const DiGraph& g, const DirectedCycle& c) {
  check_cycle(g, c);
  std::vector<bool> on_cycle_vertex(g.num_vertices(), false), on_cycle_edge(g.num_edges(), false);
  Contraction out;
  std::string fresh;
  for (const auto& id : c.edges) {
    int e = g.edge(id);
    on_cycle_edge[e] = true;
    int v = g.src(e);
    if (!on_cycle_vertex[v]) {
      on_cycle_vertex[v] = true;
      out.cycle_vertices.push_back(v);
      if (!fresh.empty()) fresh += '+';
      fresh += g.vertex_id(v);
    }
  }
  std::vector<int> index(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!on_cycle_vertex[v]) index[v] = out.graph.add_vertex(g.vertex_id(v));
  while (out.graph.find_vertex(fresh)) fresh += '\'';
  out.fresh_vertex = out.graph.add_vertex(fresh);
  for (int v : out.cycle_vertices) index[v] = out.fresh_vertex;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!on_cycle_edge[e]) out.graph.add_edge(g.edge_id(e), index[g.src(e)], index[g.dst(e)]);
  return out;
}

DiGraph contract_cycle(const DiGraph& g, const DirectedCycle& c) { return contract_cycle_with_info(g, c).graph; }

DiGraph subgraph(const DiGraph& g, const std::vector<std::string>& vertices, const std::vector<std::string>& edges) {
  std::vector<bool> kv(g.num_vertices(), false), ke(g.num_edges(), false);
  for (const auto& v : vertices) kv[g.vertex(v)] = true;
  for (const auto& e : edges) ke[g.edge(e)] = true;
  return subgraph(g, kv, ke);
}

DiGraph subgraph(const DiGraph& g, const std::vector<bool>& keep_vertex, const std::vector<bool>& keep_edge) {
  DiGraph out;
  std::vector<int> index(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (keep_vertex[v]) index[v] = out.add_vertex(g.vertex_id(v));
  for (int e = 0; e < g.num_edges(); ++e)
    if (keep_edge[e] && keep_vertex[g.src(e)] && keep_vertex[g.dst(e)])
      out.add_edge(g.edge_id(e), index[g.src(e)], index[g.dst(e)]);
  return out;
}

GraphMorphism inclusion(const DiGraph& sub, const DiGraph& g) {
  GraphMorphism m{sub, g, std::vector<int>(sub.num_vertices()), std::vector<int>(sub.num_edges())};
  for (int v = 0; v < sub.num_vertices(); ++v) m.vmap[v] = g.vertex(sub.vertex_id(v));
  for (int e = 0; e < sub.num_edges(); ++e) m.emap[e] = g.edge(sub.edge_id(e));
  return m;
}

}  // namespace regulus
