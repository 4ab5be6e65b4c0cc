#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regulus {

// Finite directed multigraph with explicit vertex and edge identities.
//
// Ids are opaque strings; internally vertices and edges are dense indices in
// insertion order. Loops and parallel edges are allowed.
class DiGraph {
 public:
  struct Edge {
    std::string id;
    int src;
    int dst;
  };

  DiGraph() = default;

  int add_vertex(std::string id);
  int add_edge(std::string id, int src, int dst);
  int add_edge(std::string id, std::string_view src, std::string_view dst);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertices_.at(v); }
  const std::string& edge_id(int e) const { return edges_.at(e).id; }
  int src(int e) const { return edges_[e].src; }
  int dst(int e) const { return edges_[e].dst; }
  bool is_loop(int e) const { return edges_[e].src == edges_[e].dst; }

  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> find_vertex(std::string_view id) const;
  std::optional<int> find_edge(std::string_view id) const;
  // Throwing lookups (DomainError on unknown id).
  int vertex(std::string_view id) const;
  int edge(std::string_view id) const;

  std::span<const int> out_edges(int v) const { return out_[v]; }
  std::span<const int> in_edges(int v) const { return in_[v]; }

  // No two edges share the same ordered boundary (src, dst).
  bool is_simple() const;

  // Set equality on vertex ids and on (edge id, src id, dst id) triples;
  // insertion order is irrelevant.
  friend bool operator==(const DiGraph& a, const DiGraph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::map<std::string, int, std::less<>> vertex_index_;
  std::map<std::string, int, std::less<>> edge_index_;
};

// Finite undirected multigraph. An edge has two ends `a` and `b`; a loop has
// a == b (the singleton boundary).
class UndirectedGraph {
 public:
  struct Edge {
    std::string id;
    int a;
    int b;
  };

  int add_vertex(std::string id);
  int add_edge(std::string id, int a, int b);
  int add_edge(std::string id, std::string_view a, std::string_view b);
  // Undoes the most recent add_edge.
  void pop_edge();

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertices_.at(v); }
  const std::string& edge_id(int e) const { return edges_.at(e).id; }
  int end_a(int e) const { return edges_[e].a; }
  int end_b(int e) const { return edges_[e].b; }
  bool is_loop(int e) const { return edges_[e].a == edges_[e].b; }
  // The end of `e` opposite to `v` (v itself for loops).
  int other_end(int e, int v) const { return edges_[e].a == v ? edges_[e].b : edges_[e].a; }
  bool incident(int e, int v) const { return edges_[e].a == v || edges_[e].b == v; }

  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> find_vertex(std::string_view id) const;
  std::optional<int> find_edge(std::string_view id) const;
  int vertex(std::string_view id) const;
  int edge(std::string_view id) const;

  // Edges incident to v; a loop appears once.
  std::span<const int> incident_edges(int v) const { return incident_[v]; }
  int degree(int v) const;  // loops count twice

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::map<std::string, int, std::less<>> vertex_index_;
  std::map<std::string, int, std::less<>> edge_index_;
};

// Connected components of the underlying undirected structure; component
// index per vertex, numbered in order of least vertex index.
std::vector<int> weak_components(const DiGraph& g, int* count = nullptr);
std::vector<int> components(const UndirectedGraph& g, int* count = nullptr);

// Length of a shortest cycle (loops have length 1, parallel pairs length 2);
// nullopt for forests.
std::optional<int> girth(const UndirectedGraph& g);

}  // namespace regulus
