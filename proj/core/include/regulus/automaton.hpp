#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regulus/morphism.hpp"
#include "regulus/semi_automaton.hpp"

namespace regulus {

using Word = std::vector<std::string>;

struct Automaton {
  SemiAutomaton semi;
  std::vector<int> initials;  // sorted state indices
  std::vector<int> finals;

  const DiGraph& graph() const { return semi.graph; }
  bool is_initial(int v) const;
  bool is_final(int v) const;
};

Automaton make_automaton(SemiAutomaton semi, const std::vector<std::string>& initials,
                         const std::vector<std::string>& finals);

bool operator==(const Automaton& a, const Automaton& b);

// Every state reachable from an initial state.
bool is_accessible(const Automaton& a);
// Restriction to the states reachable from the initial ones (alphabet shrinks
// to the letters still in use).
Automaton accessible_part(const Automaton& a);

// Space-separated labels; the empty string is the empty word.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// Subset simulation. DomainError on letters outside the alphabet.
bool accepts(const Automaton& a, const Word& w);

struct LanguageSample {
  std::vector<std::string> alphabet;
  std::set<Word> words;
  int max_length = 0;
};

LanguageSample sample_language(const Automaton& a, int max_length);

// Adds a trash state "⊥" (suffixed on collision) with one loop per letter and
// wires every missing transition to it. Unchanged when already complete.
// PreconditionError when a is not deterministic.
Automaton complete_with_trash(const Automaton& a);

// Verdict naming the first violated clause of: deterministic, complete,
// accessible, single initial state.
Verdict check_minimizable(const Automaton& a);

struct Minimization {
  Automaton amin;
  SemiMorphism pi;  // strict epimorphism a -> amin
};

// Myhill–Nerode refinement; classes named by their least member id, edges by
// the least id among the edges they merge.
Minimization minimize(const Automaton& a);

// Underlying digraph of the minimal automaton.
DiGraph language_graph(const Automaton& a);

// Exact language comparison over the union of both alphabets; returns a
// shortest word in the symmetric difference, or nullopt when equal.
std::optional<Word> language_difference(const Automaton& a, const Automaton& b);
bool languages_equal(const Automaton& a, const Automaton& b);

// Strict morphism whose base is a graph morphism with I_A = f^-1(I_B) and
// F_A = f^-1(F_B).
Verdict is_automaton_morphism(const Automaton& a, const Automaton& b, const SemiMorphism& m);

struct CoverAutomaton {
  Automaton automaton;
  SemiMorphism to_min;  // strict epimorphism onto the minimal automaton
};

// From a directed cover of Exc(R(G(A_min))) to a deterministic automaton with
// the same language whose underlying graph covers G(A_min). The cover is
// rechecked; PreconditionError names the first violation.
CoverAutomaton automaton_from_cover_with_map(const Automaton& a, const GraphMorphism& cover);
Automaton automaton_from_cover(const Automaton& a, const GraphMorphism& cover);

// Disjoint union product: accepts L(a) ∪ L(b). Both must be deterministic and
// single-input; the result is deterministic and complete over the union alphabet.
Automaton union_automaton(const Automaton& a, const Automaton& b);

}  // namespace regulus
