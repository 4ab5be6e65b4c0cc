#pragma once

#include <string>
#include <vector>

#include "regulus/error.hpp"
#include "regulus/graph.hpp"
#include "regulus/morphism.hpp"
#include "regulus/semi_automaton.hpp"

namespace regulus {

// Equivalence relation on {0..n-1}; blocks are numbered by least member, so
// equal relations compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(const std::vector<int>& labels);

  static Partition discrete(int n);
  static Partition universal(int n);

  int size() const { return static_cast<int>(block_.size()); }
  int num_blocks() const { return blocks_; }
  int block(int i) const { return block_[i]; }
  const std::vector<int>& blocks() const { return block_; }
  bool related(int i, int j) const { return block_[i] == block_[j]; }
  std::vector<std::vector<int>> classes() const;

  // Every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> block_;
  int blocks_ = 0;
};

Partition intersect(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);

struct AutomaticRelation {
  Partition vertices;
  Partition edges;
  friend bool operator==(const AutomaticRelation&, const AutomaticRelation&) = default;
};

using IdClasses = std::vector<std::vector<std::string>>;

// Throws DomainError unless the classes partition V and E exactly.
AutomaticRelation relation_from_classes(const DiGraph& g, const IdClasses& vertex_classes, const IdClasses& edge_classes);
IdClasses vertex_classes(const DiGraph& g, const AutomaticRelation& r);
IdClasses edge_classes(const DiGraph& g, const AutomaticRelation& r);

AutomaticRelation identity_relation(const DiGraph& g);
// Vertex partition given; edges related iff their endpoints are.
AutomaticRelation vertex_induced(const DiGraph& g, const Partition& vertices);

// r1 <= r2 when both partitions of r1 refine those of r2.
bool leq(const AutomaticRelation& r1, const AutomaticRelation& r2);

// Compatibility then bisimilarity; the violation names the clause and witnesses.
Verdict is_automatic(const DiGraph& g, const AutomaticRelation& r);

struct Quotient {
  DiGraph graph;
  GraphMorphism can;
};

// Class vertices and edges are named by their least member id.
// PreconditionError when r is not automatic.
Quotient quotient(const DiGraph& g, const AutomaticRelation& r);

// Distinct related edges never share a source.
bool is_cover_relation(const DiGraph& g, const AutomaticRelation& r);

// Fibres of p and q. PreconditionError unless phi is an emulator.
AutomaticRelation canonical_relation(const GraphMorphism& phi);

struct EmulatorFactorization {
  AutomaticRelation relation;
  Quotient quotient;
  GraphMorphism iota;  // G/r -> H, an isomorphism
};

EmulatorFactorization factorize(const GraphMorphism& phi);

// r2 lives on quotient(g, r1).graph; the result lives on g.
AutomaticRelation compose_relations(const DiGraph& g, const AutomaticRelation& r1, const AutomaticRelation& r2);

// Pairwise disjoint non-empty vertex sets.
using FinalFamily = std::vector<std::vector<int>>;

// Fixpoint of the labelled refinement sequence started from the partition
// induced by the family. `rounds` receives the number of refinement steps.
AutomaticRelation mn_refine(const SemiAutomaton& a, const FinalFamily& family, int* rounds = nullptr);

// Labels are edge classes, named by their least member id.
SemiAutomaton canonical_semi_automaton(const DiGraph& g, const AutomaticRelation& r);

struct FinalSystem {
  std::vector<int> vertices;  // least vertex id of each sink strongly connected component
  int cardinality = 0;
};

FinalSystem complete_final_systems(const DiGraph& g);
// Every vertex reaches the set.
bool is_complete_final_system(const DiGraph& g, const std::vector<int>& s);
// Complete, and no proper subset is.
bool is_minimal_complete_final_system(const DiGraph& g, const std::vector<int>& s);

// Recomputes r as MN(A_r, F) for several families F derived from complete
// final systems and for the full class partition; fails on any mismatch.
Verdict automatic_to_mn_roundtrip(const DiGraph& g, const AutomaticRelation& r);

// Least upper and greatest lower bounds among automatic relations on g.
AutomaticRelation join(const DiGraph& g, const AutomaticRelation& r1, const AutomaticRelation& r2);
AutomaticRelation meet(const DiGraph& g, const AutomaticRelation& r1, const AutomaticRelation& r2);
// Top of the lattice: the coarsest automatic relation on g.
AutomaticRelation maximum(const DiGraph& g);

}  // namespace regulus
