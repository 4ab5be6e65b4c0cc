#include "regulus/emulation.hpp"

#include <algorithm>
#include <map>

namespace regulus {

namespace {

void require_valid(const GraphMorphism& phi) {
  if (auto v = validate_morphism(phi); !v) throw DomainError("not a graph morphism: " + v.violation);
}

void require_valid(const UndirectedMorphism& phi) {
  if (auto v = validate_morphism(phi); !v) throw DomainError("not a graph morphism: " + v.violation);
}

// Emulator check with an upper bound on the number of lifts (1 for covers).
Verdict check_lifting(const GraphMorphism& phi, bool unique) {
  require_valid(phi);
  const DiGraph& g = phi.source;
  const DiGraph& h = phi.target;
  std::vector<bool> hit(h.num_vertices(), false);
  for (int v = 0; v < g.num_vertices(); ++v) hit[phi.p(v)] = true;
  for (int x = 0; x < h.num_vertices(); ++x)
    if (!hit[x]) return Verdict::fail("vertex '" + h.vertex_id(x) + "' has no preimage");
  std::vector<int> lifts(h.num_edges());
  for (int xp = 0; xp < g.num_vertices(); ++xp) {
    int x = phi.p(xp);
    for (int e : h.out_edges(x)) lifts[e] = 0;
    for (int ep : g.out_edges(xp)) ++lifts[phi.q(ep)];
    for (int e : h.out_edges(x)) {
      if (lifts[e] == 0)
        return Verdict::fail("edge '" + h.edge_id(e) + "' has no lift at '" + g.vertex_id(xp) + "'");
      if (unique && lifts[e] > 1)
        return Verdict::fail("edge '" + h.edge_id(e) + "' has " + std::to_string(lifts[e]) + " lifts at '" +
                             g.vertex_id(xp) + "'");
    }
  }
  return Verdict::pass();
}

Verdict check_undirected_lifting(const UndirectedMorphism& phi, bool unique) {
  require_valid(phi);
  const UndirectedGraph& g = phi.source;
  const UndirectedGraph& h = phi.target;
  std::vector<bool> hit(h.num_vertices(), false);
  for (int v = 0; v < g.num_vertices(); ++v) hit[phi.p(v)] = true;
  for (int x = 0; x < h.num_vertices(); ++x)
    if (!hit[x]) return Verdict::fail("vertex '" + h.vertex_id(x) + "' has no preimage");
  std::vector<int> lifts(h.num_edges());
  for (int xp = 0; xp < g.num_vertices(); ++xp) {
    int x = phi.p(xp);
    for (int e : h.incident_edges(x)) lifts[e] = 0;
    for (int ep : g.incident_edges(xp)) ++lifts[phi.q(ep)];
    for (int e : h.incident_edges(x)) {
      if (lifts[e] == 0)
        return Verdict::fail("edge '" + h.edge_id(e) + "' has no lift at '" + g.vertex_id(xp) + "'");
      if (unique && lifts[e] > 1)
        return Verdict::fail("edge '" + h.edge_id(e) + "' has " + std::to_string(lifts[e]) + " lifts at '" +
                             g.vertex_id(xp) + "'");
    }
  }
  return Verdict::pass();
}

}  // namespace

Verdict is_directed_emulator(const GraphMorphism& phi) { return check_lifting(phi, false); }
Verdict is_directed_cover(const GraphMorphism& phi) { return check_lifting(phi, true); }

GraphMorphism opposite(const GraphMorphism& phi) {
  return {opposite(phi.source), opposite(phi.target), phi.vmap, phi.emap};
}

Verdict is_incoming_emulator(const GraphMorphism& phi) { return is_directed_emulator(opposite(phi)); }
Verdict is_incoming_cover(const GraphMorphism& phi) { return is_directed_cover(opposite(phi)); }

StarMaps star_maps(const GraphMorphism& phi, std::string_view vertex) {
  return star_maps(phi, phi.source.vertex(vertex));
}

StarMaps star_maps(const GraphMorphism& phi, int xp) {
  require_valid(phi);
  if (xp < 0 || xp >= phi.source.num_vertices()) throw DomainError("vertex index out of range");
  const DiGraph& g = phi.source;
  const DiGraph& h = phi.target;
  StarMaps s;
  auto classify = [&](std::span<const int> edges, std::span<const int> target_edges, std::vector<int>& dom,
                      std::vector<int>& img, bool& inj, bool& surj) {
    std::map<int, int> count;
    for (int e : edges) {
      dom.push_back(e);
      img.push_back(phi.q(e));
      ++count[phi.q(e)];
    }
    inj = std::all_of(count.begin(), count.end(), [](auto& kv) { return kv.second == 1; });
    surj = std::all_of(target_edges.begin(), target_edges.end(), [&](int f) { return count.count(f) > 0; });
  };
  int x = phi.p(xp);
  classify(g.out_edges(xp), h.out_edges(x), s.out_edges, s.out_image, s.out_injective, s.out_surjective);
  classify(g.in_edges(xp), h.in_edges(x), s.in_edges, s.in_image, s.in_injective, s.in_surjective);
  return s;
}

GraphMorphism extract_cover(const GraphMorphism& phi) {
  if (auto v = is_directed_emulator(phi); !v) throw PreconditionError("extract_cover needs an emulator: " + v.violation);
  const DiGraph& g = phi.source;
  std::vector<bool> keep(g.num_edges(), false);
  for (int xp = 0; xp < g.num_vertices(); ++xp) {
    std::map<int, int> best;  // target edge -> least-id lift
    for (int ep : g.out_edges(xp)) {
      auto [it, fresh] = best.emplace(phi.q(ep), ep);
      if (!fresh && g.edge_id(ep) < g.edge_id(it->second)) it->second = ep;
    }
    for (auto& [f, ep] : best) keep[ep] = true;
  }
  DiGraph sub = subgraph(g, std::vector<bool>(g.num_vertices(), true), keep);
  GraphMorphism out{sub, phi.target, phi.vmap, std::vector<int>(sub.num_edges())};
  for (int e = 0; e < sub.num_edges(); ++e) out.emap[e] = phi.q(g.edge(sub.edge_id(e)));
  return out;
}

GraphMorphism extend_over_excision(const GraphMorphism& psi, const DiGraph& h) {
  if (!(psi.target == excise(h))) throw DomainError("extend_over_excision: target is not the excision of H");
  const DiGraph& g = psi.source;
  DiGraph ext = g;
  std::vector<int> vmap(g.num_vertices()), emap;
  for (int v = 0; v < g.num_vertices(); ++v) vmap[v] = h.vertex(psi.target.vertex_id(psi.p(v)));
  for (int e = 0; e < g.num_edges(); ++e) emap.push_back(h.edge(psi.target.edge_id(psi.q(e))));
  for (int xp = 0; xp < g.num_vertices(); ++xp)
    for (int l : h.out_edges(vmap[xp])) {
      if (!h.is_loop(l)) continue;
      std::string id = h.edge_id(l) + "@" + g.vertex_id(xp);
      while (ext.find_edge(id)) id += '\'';
      ext.add_edge(id, xp, xp);
      emap.push_back(l);
    }
  return {std::move(ext), h, std::move(vmap), std::move(emap)};
}

Verdict is_undirected_emulator(const UndirectedMorphism& phi) { return check_undirected_lifting(phi, false); }
Verdict is_undirected_cover(const UndirectedMorphism& phi) { return check_undirected_lifting(phi, true); }

UndirectedMorphism adjunction_transfer(const GraphMorphism& phi, const UndirectedGraph& h) {
  auto dbl = bidirect_with_origin(h);
  if (!(phi.target == dbl.graph)) throw DomainError("adjunction_transfer: target is not the bidirection of H");
  UndirectedMorphism out{forget(phi.source), h, {}, std::vector<int>(phi.source.num_edges())};
  out.vmap.resize(phi.source.num_vertices());
  for (int v = 0; v < phi.source.num_vertices(); ++v) out.vmap[v] = h.vertex(phi.target.vertex_id(phi.p(v)));
  for (int e = 0; e < phi.source.num_edges(); ++e)
    out.emap[e] = dbl.origin[dbl.graph.edge(phi.target.edge_id(phi.q(e)))];
  return out;
}

GraphMorphism adjunction_inverse(const UndirectedMorphism& psi, const DiGraph& g) {
  if (!(psi.source == forget(g))) throw DomainError("adjunction_inverse: source is not U(G)");
  const UndirectedGraph& h = psi.target;
  DiGraph dbl = bidirect(h);
  GraphMorphism out{g, dbl, std::vector<int>(g.num_vertices()), std::vector<int>(g.num_edges())};
  for (int v = 0; v < g.num_vertices(); ++v) out.vmap[v] = dbl.vertex(h.vertex_id(psi.p(psi.source.vertex(g.vertex_id(v)))));
  for (int e = 0; e < g.num_edges(); ++e) {
    int ue = psi.source.edge(g.edge_id(e));
    auto id = bidirected_edge_id(h.edge_id(psi.q(ue)), dbl.vertex_id(out.vmap[g.src(e)]), dbl.vertex_id(out.vmap[g.dst(e)]));
    auto f = dbl.find_edge(id);
    if (!f) throw DomainError("adjunction_inverse: edge '" + g.edge_id(e) + "' does not map onto an edge of H");
    out.emap[e] = *f;
  }
  return out;
}

bool is_direction_of(const DiGraph& direction, const UndirectedGraph& g) { return forget(direction) == g; }

GraphMorphism lift_direction(const UndirectedMorphism& phi, const DiGraph& direction) {
  const UndirectedGraph& g = phi.target;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) throw PreconditionError("lift_direction: target has a loop '" + g.edge_id(e) + "'");
  if (!is_direction_of(direction, g)) throw PreconditionError("lift_direction: not a direction of the target");
  require_valid(phi);
  const UndirectedGraph& gp = phi.source;
  DiGraph lifted;
  for (const auto& v : gp.vertex_ids()) lifted.add_vertex(v);
  GraphMorphism out{{}, direction, std::vector<int>(gp.num_vertices()), {}};
  for (int v = 0; v < gp.num_vertices(); ++v) out.vmap[v] = direction.vertex(g.vertex_id(phi.p(v)));
  for (int e = 0; e < gp.num_edges(); ++e) {
    int f = direction.edge(g.edge_id(phi.q(e)));
    int a = gp.end_a(e), b = gp.end_b(e);
    // The target is loopless, so exactly one orientation of e lies over f.
    if (out.vmap[a] == direction.src(f))
      lifted.add_edge(gp.edge_id(e), a, b);
    else
      lifted.add_edge(gp.edge_id(e), b, a);
    out.emap.push_back(f);
  }
  out.source = std::move(lifted);
  return out;
}

GraphMorphism contract_cycle_emulator(const GraphMorphism& cover, const DirectedCycle& c) {
  if (auto v = is_directed_cover(cover); !v) throw PreconditionError("contract_cycle_emulator needs a cover: " + v.violation);
  const DiGraph& h = cover.source;
  const DiGraph& g = cover.target;
  Contraction base = contract_cycle_with_info(g, c);
  std::vector<bool> cycle_edge(g.num_edges(), false);
  for (const auto& id : c.edges) cycle_edge[g.edge(id)] = true;

  // Weak components of the lifted cycle.
  std::vector<bool> lifted(h.num_edges(), false), on_lift(h.num_vertices(), false);
  for (int e = 0; e < h.num_edges(); ++e)
    if (cycle_edge[cover.q(e)]) {
      lifted[e] = true;
      on_lift[h.src(e)] = on_lift[h.dst(e)] = true;
    }
  DiGraph lift_graph = subgraph(h, std::vector<bool>(h.num_vertices(), true), lifted);
  int ncomp = 0;
  std::vector<int> comp = weak_components(lift_graph, &ncomp);

  DiGraph out;
  std::vector<int> index(h.num_vertices(), -1);
  std::vector<int> vmap;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (!on_lift[v]) {
      index[v] = out.add_vertex(h.vertex_id(v));
      vmap.push_back(base.graph.vertex(g.vertex_id(cover.p(v))));
    }
  std::map<int, std::string> names;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (on_lift[v]) {
      auto& n = names[comp[v]];
      if (!n.empty()) n += '+';
      n += h.vertex_id(v);
    }
  std::map<int, int> comp_vertex;
  for (auto& [k, name] : names) {
    std::string id = name;
    while (out.find_vertex(id) || h.find_vertex(id)) id += '\'';
    comp_vertex[k] = out.add_vertex(id);
    vmap.push_back(base.fresh_vertex);
  }
  for (int v = 0; v < h.num_vertices(); ++v)
    if (on_lift[v]) index[v] = comp_vertex[comp[v]];
  std::vector<int> emap;
  for (int e = 0; e < h.num_edges(); ++e)
    if (!lifted[e]) {
      out.add_edge(h.edge_id(e), index[h.src(e)], index[h.dst(e)]);
      emap.push_back(base.graph.edge(g.edge_id(cover.q(e))));
    }
  return {std::move(out), std::move(base.graph), std::move(vmap), std::move(emap)};
}

}  // namespace regulus
