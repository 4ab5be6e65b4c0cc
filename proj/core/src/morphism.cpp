#include "regulus/morphism.hpp"

#include <algorithm>

namespace regulus {

namespace {

template <class Graph>
std::vector<int> index_map(const Graph& src, const Graph& dst, const IdMap& m, bool vertices) {
  const int n = vertices ? src.num_vertices() : src.num_edges();
  const char* kind = vertices ? "vertex" : "edge";
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    const std::string& id = vertices ? src.vertex_id(i) : src.edge_id(i);
    auto it = m.find(id);
    if (it == m.end()) throw DomainError(std::string(kind) + " map is not total: missing '" + id + "'");
    auto img = vertices ? dst.find_vertex(it->second) : dst.find_edge(it->second);
    if (!img)
      throw DomainError(std::string(kind) + " '" + id + "' maps to unknown target id '" + it->second + "'");
    out[i] = *img;
  }
  for (const auto& [k, v] : m) {
    auto known = vertices ? src.find_vertex(k) : src.find_edge(k);
    if (!known) throw DomainError(std::string(kind) + " map mentions unknown source id '" + k + "'");
  }
  return out;
}

}  // namespace

GraphMorphism make_morphism(DiGraph source, DiGraph target, const IdMap& p, const IdMap& q) {
  auto vmap = index_map(source, target, p, true);
  auto emap = index_map(source, target, q, false);
  return {std::move(source), std::move(target), std::move(vmap), std::move(emap)};
}

UndirectedMorphism make_morphism(UndirectedGraph source, UndirectedGraph target, const IdMap& p,
                                 const IdMap& q) {
  auto vmap = index_map(source, target, p, true);
  auto emap = index_map(source, target, q, false);
  return {std::move(source), std::move(target), std::move(vmap), std::move(emap)};
}

IdMap vertex_id_map(const GraphMorphism& m) {
  IdMap out;
  for (int v = 0; v < m.source.num_vertices(); ++v)
    out[m.source.vertex_id(v)] = m.target.vertex_id(m.p(v));
  return out;
}

IdMap edge_id_map(const GraphMorphism& m) {
  IdMap out;
  for (int e = 0; e < m.source.num_edges(); ++e) out[m.source.edge_id(e)] = m.target.edge_id(m.q(e));
  return out;
}

GraphMorphism identity_morphism(const DiGraph& g) {
  GraphMorphism m{g, g, std::vector<int>(g.num_vertices()), std::vector<int>(g.num_edges())};
  for (int v = 0; v < g.num_vertices(); ++v) m.vmap[v] = v;
  for (int e = 0; e < g.num_edges(); ++e) m.emap[e] = e;
  return m;
}

UndirectedMorphism identity_morphism(const UndirectedGraph& g) {
  UndirectedMorphism m{g, g, std::vector<int>(g.num_vertices()), std::vector<int>(g.num_edges())};
  for (int v = 0; v < g.num_vertices(); ++v) m.vmap[v] = v;
  for (int e = 0; e < g.num_edges(); ++e) m.emap[e] = e;
  return m;
}

GraphMorphism compose(const GraphMorphism& second, const GraphMorphism& first) {
  if (!(first.target == second.source)) throw DomainError("compose: middle graphs differ");
  GraphMorphism m{first.source, second.target, {}, {}};
  m.vmap.resize(first.source.num_vertices());
  m.emap.resize(first.source.num_edges());
  // The middle graphs may index the same ids differently.
  for (int v = 0; v < first.source.num_vertices(); ++v)
    m.vmap[v] = second.p(second.source.vertex(first.target.vertex_id(first.p(v))));
  for (int e = 0; e < first.source.num_edges(); ++e)
    m.emap[e] = second.q(second.source.edge(first.target.edge_id(first.q(e))));
  return m;
}

Verdict validate_morphism(const GraphMorphism& m) {
  const auto& g = m.source;
  const auto& h = m.target;
  if (static_cast<int>(m.vmap.size()) != g.num_vertices() || static_cast<int>(m.emap.size()) != g.num_edges())
    throw DomainError("morphism maps are not total on the source");
  for (int e = 0; e < g.num_edges(); ++e) {
    int f = m.q(e);
    if (m.p(g.src(e)) != h.src(f))
      return Verdict::fail("edge '" + g.edge_id(e) + "': p(s(e)) = '" + h.vertex_id(m.p(g.src(e))) +
                           "' but s(q(e)) = '" + h.vertex_id(h.src(f)) + "'");
    if (m.p(g.dst(e)) != h.dst(f))
      return Verdict::fail("edge '" + g.edge_id(e) + "': p(t(e)) = '" + h.vertex_id(m.p(g.dst(e))) +
                           "' but t(q(e)) = '" + h.vertex_id(h.dst(f)) + "'");
  }
  return Verdict::pass();
}

Verdict validate_morphism(const UndirectedMorphism& m) {
  const auto& g = m.source;
  const auto& h = m.target;
  if (static_cast<int>(m.vmap.size()) != g.num_vertices() || static_cast<int>(m.emap.size()) != g.num_edges())
    throw DomainError("morphism maps are not total on the source");
  for (int e = 0; e < g.num_edges(); ++e) {
    int f = m.q(e);
    std::pair<int, int> image = std::minmax(m.p(g.end_a(e)), m.p(g.end_b(e)));
    std::pair<int, int> ends = std::minmax(h.end_a(f), h.end_b(f));
    if (image != ends) return Verdict::fail("edge '" + g.edge_id(e) + "': ends do not map onto the ends of q(e)");
  }
  return Verdict::pass();
}

bool is_surjective(const GraphMorphism& m) {
  std::vector<char> hitv(m.target.num_vertices(), 0), hite(m.target.num_edges(), 0);
  for (int x : m.vmap) hitv[x] = 1;
  for (int x : m.emap) hite[x] = 1;
  return std::all_of(hitv.begin(), hitv.end(), [](char c) { return c; }) &&
         std::all_of(hite.begin(), hite.end(), [](char c) { return c; });
}

bool is_isomorphism(const GraphMorphism& m) {
  return m.source.num_vertices() == m.target.num_vertices() && m.source.num_edges() == m.target.num_edges() &&
         is_surjective(m) && validate_morphism(m).ok;
}

namespace {

template <class M>
bool same_impl(const M& a, const M& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  for (int v = 0; v < a.source.num_vertices(); ++v) {
    int w = b.source.vertex(a.source.vertex_id(v));
    if (a.target.vertex_id(a.p(v)) != b.target.vertex_id(b.p(w))) return false;
  }
  for (int e = 0; e < a.source.num_edges(); ++e) {
    int f = b.source.edge(a.source.edge_id(e));
    if (a.target.edge_id(a.q(e)) != b.target.edge_id(b.q(f))) return false;
  }
  return true;
}

}  // namespace

bool same_morphism(const GraphMorphism& a, const GraphMorphism& b) { return same_impl(a, b); }
bool same_morphism(const UndirectedMorphism& a, const UndirectedMorphism& b) { return same_impl(a, b); }

}  // namespace regulus
