#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regulus/graph.hpp"
#include "regulus/morphism.hpp"

namespace regulus {

struct Simplification {
  DiGraph graph;
  GraphMorphism rho;  // identity on vertices, Δ on edges
};

// R(G): one edge per ordered boundary (s, t), named by the least edge id of its class.
Simplification simplify(const DiGraph& g);

// Exc(G): G with every loop removed.
DiGraph excise(const DiGraph& g);

// G^op: sources and targets swapped.
DiGraph opposite(const DiGraph& g);

// U(G): forget direction; loops keep a singleton boundary.
UndirectedGraph forget(const DiGraph& g);

// Edge id of the triple (e, x, y) in a bidirection.
std::string bidirected_edge_id(std::string_view e, std::string_view x, std::string_view y);

struct Bidirection {
  DiGraph graph;
  std::vector<int> origin;  // directed edge -> undirected edge it came from
};

// Each non-loop edge {x, y} becomes x->y and y->x; a loop stays a single loop.
Bidirection bidirect_with_origin(const UndirectedGraph& h);
DiGraph bidirect(const UndirectedGraph& h);

// The bidirection of an undirected morphism, acting on triples.
GraphMorphism bidirect(const UndirectedMorphism& phi);

// Forgetful image of a directed morphism.
UndirectedMorphism forget(const GraphMorphism& phi);

struct Pullback {
  DiGraph graph;
  GraphMorphism pi1;  // L -> source of phi
  GraphMorphism pi2;  // L -> source of psi
};

// Fibre product of phi: G -> K and psi: H -> K. Vertices are "(u,v)" with
// p(u) = p'(v), edges "(e,f)" with q(e) = q'(f).
Pullback pullback(const GraphMorphism& phi, const GraphMorphism& psi);

struct Reachability {
  // pr[w][v] is true iff there is a directed walk v ~> w (length 0 allowed).
  std::vector<std::vector<bool>> pr;
  std::vector<int> reachable;     // w with Pr(w) = V
  std::vector<int> co_reachable;  // v reaching every vertex
};

Reachability reachability(const DiGraph& g);

// Vertices reachable from the given start set.
std::vector<bool> forward_closure(const DiGraph& g, const std::vector<int>& start);

// Strongly connected component index per vertex.
std::vector<int> strongly_connected_components(const DiGraph& g, int* count = nullptr);

struct DirectedCycle {
  std::vector<std::string> edges;
};

// Throws DomainError unless c is a closed directed walk of pairwise distinct edges of g.
void check_cycle(const DiGraph& g, const DirectedCycle& c);

struct Contraction {
  DiGraph graph;
  int fresh_vertex;  // index of w in graph
  std::vector<int> cycle_vertices;  // in g, in order along the cycle
};

// G_c: the vertices of c merge into a fresh vertex named by joining their ids
// with '+'; the cycle's edges disappear and every other edge keeps its id with
// its cycle endpoints moved to w.
Contraction contract_cycle_with_info(const DiGraph& g, const DirectedCycle& c);
DiGraph contract_cycle(const DiGraph& g, const DirectedCycle& c);

// (G|_W)|_F. Unknown ids are rejected.
DiGraph subgraph(const DiGraph& g, const std::vector<std::string>& vertices, const std::vector<std::string>& edges);
DiGraph subgraph(const DiGraph& g, const std::vector<bool>& keep_vertex, const std::vector<bool>& keep_edge);

// The inclusion of a subgraph built by `subgraph`.
GraphMorphism inclusion(const DiGraph& sub, const DiGraph& g);

}  // namespace regulus
