#include "regulus/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "regulus/error.hpp"

namespace regulus {

namespace {

std::optional<int> lookup(const std::map<std::string, int, std::less<>>& index, std::string_view id) {
  auto it = index.find(id);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

int lookup_or_throw(const std::map<std::string, int, std::less<>>& index, std::string_view id,
                    const char* what) {
  auto r = lookup(index, id);
  if (!r) throw DomainError(std::string("unknown ") + what + " id '" + std::string(id) + "'");
  return *r;
}

}  // namespace

int DiGraph::add_vertex(std::string id) {
  if (vertex_index_.count(id)) throw DomainError("duplicate vertex id '" + id + "'");
  int v = num_vertices();
  vertex_index_.emplace(id, v);
  vertices_.push_back(std::move(id));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

int DiGraph::add_edge(std::string id, int src, int dst) {
  if (src < 0 || src >= num_vertices() || dst < 0 || dst >= num_vertices())
    throw DomainError("edge '" + id + "' has an endpoint outside the vertex set");
  if (edge_index_.count(id)) throw DomainError("duplicate edge id '" + id + "'");
  int e = num_edges();
  edge_index_.emplace(id, e);
  edges_.push_back({std::move(id), src, dst});
  out_[src].push_back(e);
  in_[dst].push_back(e);
  return e;
}

int DiGraph::add_edge(std::string id, std::string_view src, std::string_view dst) {
  return add_edge(std::move(id), vertex(src), vertex(dst));
}

std::optional<int> DiGraph::find_vertex(std::string_view id) const { return lookup(vertex_index_, id); }
std::optional<int> DiGraph::find_edge(std::string_view id) const { return lookup(edge_index_, id); }
int DiGraph::vertex(std::string_view id) const { return lookup_or_throw(vertex_index_, id, "vertex"); }
int DiGraph::edge(std::string_view id) const { return lookup_or_throw(edge_index_, id, "edge"); }

bool DiGraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_)
    if (!seen.emplace(e.src, e.dst).second) return false;
  return true;
}

bool operator==(const DiGraph& a, const DiGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (const auto& v : a.vertices_)
    if (!b.find_vertex(v)) return false;
  for (const auto& e : a.edges_) {
    auto f = b.find_edge(e.id);
    if (!f) return false;
    if (b.vertex_id(b.src(*f)) != a.vertex_id(e.src) || b.vertex_id(b.dst(*f)) != a.vertex_id(e.dst))
      return false;
  }
  return true;
}

int UndirectedGraph::add_vertex(std::string id) {
  if (vertex_index_.count(id)) throw DomainError("duplicate vertex id '" + id + "'");
  int v = num_vertices();
  vertex_index_.emplace(id, v);
  vertices_.push_back(std::move(id));
  incident_.emplace_back();
  return v;
}

int UndirectedGraph::add_edge(std::string id, int a, int b) {
  if (a < 0 || a >= num_vertices() || b < 0 || b >= num_vertices())
    throw DomainError("edge '" + id + "' has an end outside the vertex set");
  if (edge_index_.count(id)) throw DomainError("duplicate edge id '" + id + "'");
  int e = num_edges();
  edge_index_.emplace(id, e);
  edges_.push_back({std::move(id), a, b});
  incident_[a].push_back(e);
  if (b != a) incident_[b].push_back(e);
  return e;
}

int UndirectedGraph::add_edge(std::string id, std::string_view a, std::string_view b) {
  return add_edge(std::move(id), vertex(a), vertex(b));
}

void UndirectedGraph::pop_edge() {
  if (edges_.empty()) return;
  const Edge& e = edges_.back();
  incident_[e.a].pop_back();
  if (e.b != e.a) incident_[e.b].pop_back();
  edge_index_.erase(e.id);
  edges_.pop_back();
}

std::optional<int> UndirectedGraph::find_vertex(std::string_view id) const { return lookup(vertex_index_, id); }
std::optional<int> UndirectedGraph::find_edge(std::string_view id) const { return lookup(edge_index_, id); }
int UndirectedGraph::vertex(std::string_view id) const { return lookup_or_throw(vertex_index_, id, "vertex"); }
int UndirectedGraph::edge(std::string_view id) const { return lookup_or_throw(edge_index_, id, "edge"); }

int UndirectedGraph::degree(int v) const {
  int d = 0;
  for (int e : incident_[v]) d += is_loop(e) ? 2 : 1;
  return d;
}

bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (const auto& v : a.vertices_)
    if (!b.find_vertex(v)) return false;
  for (const auto& e : a.edges_) {
    auto f = b.find_edge(e.id);
    if (!f) return false;
    auto ends_a = std::minmax(a.vertex_id(e.a), a.vertex_id(e.b));
    auto ends_b = std::minmax(b.vertex_id(b.end_a(*f)), b.vertex_id(b.end_b(*f)));
    if (ends_a != ends_b) return false;
  }
  return true;
}

namespace {

template <class Neighbours>
std::vector<int> label_components(int n, Neighbours&& neighbours, int* count) {
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      neighbours(v, [&](int w) {
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
      });
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

}  // namespace

std::vector<int> weak_components(const DiGraph& g, int* count) {
  return label_components(
      g.num_vertices(),
      [&](int v, auto&& visit) {
        for (int e : g.out_edges(v)) visit(g.dst(e));
        for (int e : g.in_edges(v)) visit(g.src(e));
      },
      count);
}

std::vector<int> components(const UndirectedGraph& g, int* count) {
  return label_components(
      g.num_vertices(),
      [&](int v, auto&& visit) {
        for (int e : g.incident_edges(v)) visit(g.other_end(e, v));
      },
      count);
}

std::optional<int> girth(const UndirectedGraph& g) {
  std::optional<int> best;
  auto improve = [&](int len) {
    if (!best || len < *best) best = len;
  };
  std::set<std::pair<int, int>> ends;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) return 1;
    if (!ends.emplace(std::minmax(g.end_a(e), g.end_b(e))).second) improve(2);
  }
  if (best) return best;
  // Simple graph: BFS from every vertex, the first non-tree edge closes a
  // cycle of length d(u) + d(w) + 1 through the root; minimum over roots is exact.
  const int n = g.num_vertices();
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), via(n, -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (best && 2 * dist[v] + 1 >= *best) break;
      for (int e : g.incident_edges(v)) {
        if (e == via[v]) continue;
        int w = g.other_end(e, v);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          via[w] = e;
          queue.push_back(w);
        } else {
          improve(dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace regulus
