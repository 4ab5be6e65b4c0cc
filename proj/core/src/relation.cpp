#include "regulus/relation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "regulus/emulation.hpp"

namespace regulus {

Partition::Partition(const std::vector<int>& labels) {
  std::map<int, int> renumber;
  block_.reserve(labels.size());
  for (int l : labels) {
    auto [it, fresh] = renumber.emplace(l, static_cast<int>(renumber.size()));
    block_.push_back(it->second);
  }
  blocks_ = static_cast<int>(renumber.size());
}

Partition Partition::discrete(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  return Partition(l);
}

Partition Partition::universal(int n) { return Partition(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < size(); ++i) out[block_[i]].push_back(i);
  return out;
}

bool Partition::refines(const Partition& other) const {
  std::vector<int> image(blocks_, -1);
  for (int i = 0; i < size(); ++i) {
    int& slot = image[block_[i]];
    if (slot == -1) slot = other.block(i);
    else if (slot != other.block(i)) return false;
  }
  return true;
}

namespace {

// Canonical partition from arbitrary ordered keys.
template <class Key>
Partition partition_by(int n, auto&& key_of) {
  std::map<Key, int> ids;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = ids.emplace(key_of(i), static_cast<int>(ids.size())).first->second;
  return Partition(labels);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_shape(const DiGraph& g, const AutomaticRelation& r) {
  if (r.vertices.size() != g.num_vertices() || r.edges.size() != g.num_edges())
    throw DomainError("relation does not partition the vertex and edge sets of the graph");
}

// Greatest fixpoint: split edges by endpoint classes and vertices by the set
// of out-edge classes until stable.
AutomaticRelation refine_bisimulation(const DiGraph& g, Partition v, Partition e, int* rounds = nullptr) {
  int steps = 0;
  while (true) {
    Partition e2 = partition_by<std::tuple<int, int, int>>(
        g.num_edges(), [&](int x) { return std::make_tuple(e.block(x), v.block(g.src(x)), v.block(g.dst(x))); });
    Partition v2 = partition_by<std::pair<int, std::set<int>>>(g.num_vertices(), [&](int x) {
      std::set<int> out;
      for (int f : g.out_edges(x)) out.insert(e2.block(f));
      return std::make_pair(v.block(x), out);
    });
    bool stable = v2.num_blocks() == v.num_blocks() && e2.num_blocks() == e.num_blocks();
    v = std::move(v2);
    e = std::move(e2);
    if (stable) break;
    ++steps;
  }
  if (rounds) *rounds = steps;
  return {std::move(v), std::move(e)};
}

std::string least_id(const std::vector<int>& members, auto&& id_of) {
  std::string best = id_of(members.front());
  for (int m : members) best = std::min(best, std::string(id_of(m)));
  return best;
}

}  // namespace

Partition intersect(const Partition& a, const Partition& b) {
  return partition_by<std::pair<int, int>>(a.size(), [&](int i) { return std::make_pair(a.block(i), b.block(i)); });
}

Partition join(const Partition& a, const Partition& b) {
  UnionFind uf(a.size());
  std::vector<int> first_a(a.num_blocks(), -1), first_b(b.num_blocks(), -1);
  for (int i = 0; i < a.size(); ++i) {
    if (first_a[a.block(i)] == -1) first_a[a.block(i)] = i;
    else uf.unite(i, first_a[a.block(i)]);
    if (first_b[b.block(i)] == -1) first_b[b.block(i)] = i;
    else uf.unite(i, first_b[b.block(i)]);
  }
  std::vector<int> l(a.size());
  for (int i = 0; i < a.size(); ++i) l[i] = uf.find(i);
  return Partition(l);
}

namespace {

template <class Lookup>
Partition partition_from_ids(int n, const IdClasses& classes, Lookup&& lookup, const char* what) {
  std::vector<int> labels(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw DomainError(std::string("empty ") + what + " class");
    for (const auto& id : classes[c]) {
      int i = lookup(id);
      if (labels[i] != -1) throw DomainError(std::string(what) + " '" + id + "' appears in two classes");
      labels[i] = static_cast<int>(c);
    }
  }
  for (int i = 0; i < n; ++i)
    if (labels[i] == -1) throw DomainError(std::string("some ") + what + " is in no class");
  return Partition(labels);
}

}  // namespace

AutomaticRelation relation_from_classes(const DiGraph& g, const IdClasses& vc, const IdClasses& ec) {
  return {partition_from_ids(g.num_vertices(), vc, [&](const std::string& id) { return g.vertex(id); }, "vertex"),
          partition_from_ids(g.num_edges(), ec, [&](const std::string& id) { return g.edge(id); }, "edge")};
}

IdClasses vertex_classes(const DiGraph& g, const AutomaticRelation& r) {
  IdClasses out;
  for (const auto& c : r.vertices.classes()) {
    out.emplace_back();
    for (int v : c) out.back().push_back(g.vertex_id(v));
  }
  return out;
}

IdClasses edge_classes(const DiGraph& g, const AutomaticRelation& r) {
  IdClasses out;
  for (const auto& c : r.edges.classes()) {
    out.emplace_back();
    for (int e : c) out.back().push_back(g.edge_id(e));
  }
  return out;
}

AutomaticRelation identity_relation(const DiGraph& g) {
  return {Partition::discrete(g.num_vertices()), Partition::discrete(g.num_edges())};
}

AutomaticRelation vertex_induced(const DiGraph& g, const Partition& v) {
  Partition e = partition_by<std::pair<int, int>>(
      g.num_edges(), [&](int x) { return std::make_pair(v.block(g.src(x)), v.block(g.dst(x))); });
  return {v, std::move(e)};
}

bool leq(const AutomaticRelation& r1, const AutomaticRelation& r2) {
  return r1.vertices.refines(r2.vertices) && r1.edges.refines(r2.edges);
}

Verdict is_automatic(const DiGraph& g, const AutomaticRelation& r) {
  require_shape(g, r);
  const auto& V = r.vertices;
  const auto& E = r.edges;
  std::vector<int> rep(E.num_blocks(), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    int& f = rep[E.block(e)];
    if (f == -1) {
      f = e;
      continue;
    }
    if (!V.related(g.src(e), g.src(f)) || !V.related(g.dst(e), g.dst(f)))
      return Verdict::fail("compatibility: edges '" + g.edge_id(f) + "' and '" + g.edge_id(e) +
                           "' are related but their endpoints are not");
  }
  std::set<std::pair<int, int>> present;  // (source vertex, edge class)
  for (int e = 0; e < g.num_edges(); ++e) present.emplace(g.src(e), E.block(e));
  auto vclasses = V.classes();
  for (int e = 0; e < g.num_edges(); ++e)
    for (int x : vclasses[V.block(g.src(e))])
      if (!present.count({x, E.block(e)}))
        return Verdict::fail("bisimilarity: '" + g.vertex_id(x) + "' is related to '" + g.vertex_id(g.src(e)) +
                             "' but has no out-edge related to '" + g.edge_id(e) + "'");
  return Verdict::pass();
}

Quotient quotient(const DiGraph& g, const AutomaticRelation& r) {
  if (auto v = is_automatic(g, r); !v) throw PreconditionError("quotient needs an automatic relation: " + v.violation);
  Quotient out;
  auto vcl = r.vertices.classes();
  auto ecl = r.edges.classes();
  for (const auto& c : vcl) out.graph.add_vertex(least_id(c, [&](int v) -> const std::string& { return g.vertex_id(v); }));
  for (const auto& c : ecl)
    out.graph.add_edge(least_id(c, [&](int e) -> const std::string& { return g.edge_id(e); }),
                       r.vertices.block(g.src(c.front())), r.vertices.block(g.dst(c.front())));
  out.can = {g, out.graph, r.vertices.blocks(), r.edges.blocks()};
  return out;
}

bool is_cover_relation(const DiGraph& g, const AutomaticRelation& r) {
  require_shape(g, r);
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!seen.emplace(g.src(e), r.edges.block(e)).second) return false;
  return true;
}

AutomaticRelation canonical_relation(const GraphMorphism& phi) {
  if (auto v = is_directed_emulator(phi); !v) throw PreconditionError("canonical_relation needs an emulator: " + v.violation);
  return {Partition(phi.vmap), Partition(phi.emap)};
}

EmulatorFactorization factorize(const GraphMorphism& phi) {
  AutomaticRelation r = canonical_relation(phi);
  Quotient q = quotient(phi.source, r);
  GraphMorphism iota{q.graph, phi.target, std::vector<int>(q.graph.num_vertices()), std::vector<int>(q.graph.num_edges())};
  for (int v = 0; v < phi.source.num_vertices(); ++v) iota.vmap[r.vertices.block(v)] = phi.p(v);
  for (int e = 0; e < phi.source.num_edges(); ++e) iota.emap[r.edges.block(e)] = phi.q(e);
  return {std::move(r), std::move(q), std::move(iota)};
}

AutomaticRelation compose_relations(const DiGraph& g, const AutomaticRelation& r1, const AutomaticRelation& r2) {
  Quotient q = quotient(g, r1);
  require_shape(q.graph, r2);
  std::vector<int> v(g.num_vertices()), e(g.num_edges());
  for (int x = 0; x < g.num_vertices(); ++x) v[x] = r2.vertices.block(q.can.p(x));
  for (int x = 0; x < g.num_edges(); ++x) e[x] = r2.edges.block(q.can.q(x));
  return {Partition(v), Partition(e)};
}

AutomaticRelation mn_refine(const SemiAutomaton& a, const FinalFamily& family, int* rounds) {
  const DiGraph& g = a.graph;
  std::vector<int> start(g.num_vertices(), -1);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) throw DomainError("final family contains an empty set");
    for (int v : family[i]) {
      if (v < 0 || v >= g.num_vertices()) throw DomainError("final family names an unknown vertex");
      if (start[v] != -1) throw DomainError("final family sets are not disjoint at '" + g.vertex_id(v) + "'");
      start[v] = static_cast<int>(i);
    }
  }
  int steps = 0;
  AutomaticRelation r = refine_bisimulation(g, Partition(start), Partition(a.label), &steps);
  if (steps > g.num_vertices()) throw std::logic_error("refinement did not stabilise within |V| rounds");
  if (rounds) *rounds = steps;
  return r;
}

SemiAutomaton canonical_semi_automaton(const DiGraph& g, const AutomaticRelation& r) {
  require_shape(g, r);
  auto ecl = r.edges.classes();
  std::vector<std::string> names;
  for (const auto& c : ecl) names.push_back(least_id(c, [&](int e) -> const std::string& { return g.edge_id(e); }));
  std::vector<std::string> labels(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) labels[e] = names[r.edges.block(e)];
  return make_semi_automaton(g, labels);
}

bool is_complete_final_system(const DiGraph& g, const std::vector<int>& s) {
  auto back = forward_closure(opposite(g), s);
  return std::all_of(back.begin(), back.end(), [](bool b) { return b; });
}

bool is_minimal_complete_final_system(const DiGraph& g, const std::vector<int>& s) {
  if (!is_complete_final_system(g, s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<int> t = s;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_complete_final_system(g, t)) return false;
  }
  return true;
}

FinalSystem complete_final_systems(const DiGraph& g) {
  int n = 0;
  auto scc = strongly_connected_components(g, &n);
  std::vector<bool> sink(n, true);
  for (int e = 0; e < g.num_edges(); ++e)
    if (scc[g.src(e)] != scc[g.dst(e)]) sink[scc[g.src(e)]] = false;
  std::vector<int> best(n, -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (sink[scc[v]] && (best[scc[v]] == -1 || g.vertex_id(v) < g.vertex_id(best[scc[v]]))) best[scc[v]] = v;
  FinalSystem out;
  for (int c = 0; c < n; ++c)
    if (best[c] != -1) out.vertices.push_back(best[c]);
  std::sort(out.vertices.begin(), out.vertices.end());
  out.cardinality = static_cast<int>(out.vertices.size());
  return out;
}

Verdict automatic_to_mn_roundtrip(const DiGraph& g, const AutomaticRelation& r) {
  if (auto v = is_automatic(g, r); !v) throw PreconditionError("round trip needs an automatic relation: " + v.violation);
  SemiAutomaton a = canonical_semi_automaton(g, r);
  auto classes = r.vertices.classes();
  auto family_of = [&](const std::vector<int>& s) {
    std::set<int> blocks;
    for (int v : s) blocks.insert(r.vertices.block(v));
    FinalFamily f;
    for (int b : blocks) f.push_back(classes[b]);
    return f;
  };
  auto check = [&](const FinalFamily& f, const std::string& what) -> Verdict {
    if (mn_refine(a, f) == r) return Verdict::pass();
    return Verdict::fail("MN refinement with " + what + " does not recover the relation");
  };
  FinalSystem minimal = complete_final_systems(g);
  if (auto v = check(family_of(minimal.vertices), "the minimal complete final system"); !v) return v;
  std::vector<int> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  if (auto v = check(family_of(all), "the complete final system V"); !v) return v;
  // A non-minimal system other than V: the minimal one plus vertex 0.
  if (g.num_vertices() > 0) {
    std::vector<int> s = minimal.vertices;
    if (std::find(s.begin(), s.end(), 0) == s.end()) s.push_back(0);
    if (auto v = check(family_of(s), "an enlarged complete final system"); !v) return v;
  }
  if (auto v = check(classes, "the full class partition"); !v) return v;
  auto reach = reachability(g);
  if (!reach.reachable.empty())
    if (auto v = check({classes[r.vertices.block(reach.reachable.front())]}, "the class of a reachable vertex"); !v)
      return v;
  return Verdict::pass();
}

AutomaticRelation join(const DiGraph& g, const AutomaticRelation& r1, const AutomaticRelation& r2) {
  require_shape(g, r1);
  require_shape(g, r2);
  return {join(r1.vertices, r2.vertices), join(r1.edges, r2.edges)};
}

AutomaticRelation meet(const DiGraph& g, const AutomaticRelation& r1, const AutomaticRelation& r2) {
  require_shape(g, r1);
  require_shape(g, r2);
  return refine_bisimulation(g, intersect(r1.vertices, r2.vertices), intersect(r1.edges, r2.edges));
}

AutomaticRelation maximum(const DiGraph& g) {
  return refine_bisimulation(g, Partition::universal(g.num_vertices()), Partition::universal(g.num_edges()));
}

}  // namespace regulus
