#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regulus/graph.hpp"
#include "regulus/morphism.hpp"

namespace regulus {

// A digraph with a surjective edge labelling onto a finite alphabet.
struct SemiAutomaton {
  DiGraph graph;
  std::vector<std::string> alphabet;  // sorted, unique
  std::vector<int> label;             // edge -> index into alphabet

  int num_letters() const { return static_cast<int>(alphabet.size()); }
  const std::string& label_of(int e) const { return alphabet[label[e]]; }
  std::optional<int> find_letter(std::string_view a) const;
  int letter(std::string_view a) const;  // DomainError when absent
};

// Throws DomainError when the labelling is not total, uses a letter outside
// the alphabet, or leaves a letter unused.
SemiAutomaton make_semi_automaton(DiGraph g, std::vector<std::string> alphabet,
                                  const std::map<std::string, std::string>& labelling);
// Alphabet taken to be exactly the set of used labels.
SemiAutomaton make_semi_automaton(DiGraph g, const std::map<std::string, std::string>& labelling);
SemiAutomaton make_semi_automaton(DiGraph g, const std::vector<std::string>& edge_labels);

std::map<std::string, std::string> labelling(const SemiAutomaton& a);

// Set equality of graphs, alphabets and labellings.
bool operator==(const SemiAutomaton& a, const SemiAutomaton& b);

struct SemiMorphism {
  SemiAutomaton source;
  SemiAutomaton target;
  std::vector<int> vmap;
  std::vector<int> emap;
  std::vector<int> alpha;  // source letter -> target letter

  GraphMorphism base() const { return {source.graph, target.graph, vmap, emap}; }
  // alpha sends every letter to the target letter of the same name.
  bool strict() const;
};

// Base passes validate_morphism and alpha∘ℓ = ℓ∘g on every edge.
Verdict validate(const SemiMorphism& m);

// Builds (f, g, alpha) from a graph morphism; alpha is read off the edges.
// Throws DomainError if the labels are inconsistent (two edges with the same
// label sent to differently labelled edges).
SemiMorphism lift_morphism(const SemiAutomaton& source, const SemiAutomaton& target, const GraphMorphism& base);

SemiMorphism identity_morphism(const SemiAutomaton& a);
SemiMorphism compose(const SemiMorphism& second, const SemiMorphism& first);

// A_G: alphabet = edge ids, labelling = identity.
SemiAutomaton tautological(const DiGraph& g);

// Every letter labels an outgoing edge at every state.
bool is_complete(const SemiAutomaton& a);
// No state has two outgoing edges with the same label.
bool is_deterministic(const SemiAutomaton& a);
Verdict check_complete(const SemiAutomaton& a);
Verdict check_deterministic(const SemiAutomaton& a);

struct Relabelling {
  SemiAutomaton result;
  SemiMorphism morphism;  // (1, 1, alpha)
};

Relabelling relabel(const SemiAutomaton& a, const std::map<std::string, std::string>& alpha);

struct Factorization {
  // (f, g, 1) after (1, 1, alpha); always exists.
  SemiMorphism relabel_first;
  SemiMorphism strict_second;
  // (1, 1, alpha') after (f, g, 1); exists iff ℓ_A is constant on the fibres of g.
  std::optional<SemiMorphism> strict_first;
  std::optional<SemiMorphism> relabel_second;
};

Factorization factor_morphism(const SemiMorphism& m);

}  // namespace regulus
