#pragma once

#include <string_view>
#include <vector>

#include "regulus/error.hpp"
#include "regulus/functors.hpp"
#include "regulus/morphism.hpp"

namespace regulus {

// p surjective and every out-edge e of the target lifts at every preimage of
// s(e). Throws DomainError if phi is not a valid morphism.
Verdict is_directed_emulator(const GraphMorphism& phi);
// Emulator with unique lifts.
Verdict is_directed_cover(const GraphMorphism& phi);

// phi^op between the opposite graphs.
GraphMorphism opposite(const GraphMorphism& phi);
// Lifting of incoming edges, decided through phi^op.
Verdict is_incoming_emulator(const GraphMorphism& phi);
Verdict is_incoming_cover(const GraphMorphism& phi);

struct StarMaps {
  std::vector<int> out_edges;  // OutE(x') in the source
  std::vector<int> out_image;  // q on those edges
  std::vector<int> in_edges;
  std::vector<int> in_image;
  bool out_injective = true;
  bool out_surjective = true;  // onto OutE(p(x'))
  bool in_injective = true;
  bool in_surjective = true;
};

StarMaps star_maps(const GraphMorphism& phi, std::string_view vertex);
StarMaps star_maps(const GraphMorphism& phi, int vertex);

// Keeps, at each source vertex and for each target out-edge, the lift with the
// least edge id. PreconditionError unless phi is an emulator.
GraphMorphism extract_cover(const GraphMorphism& phi);

// Extends psi: G' -> Exc(H) to H' -> H by adding one loop "loop@x'" at each
// x' for every loop of H at p(x') (suffixing on id collisions).
GraphMorphism extend_over_excision(const GraphMorphism& psi, const DiGraph& h);

// Fellows: vertex-surjective morphism where every edge at p(x') has a preimage
// edge at x'; cover when that preimage is unique.
Verdict is_undirected_emulator(const UndirectedMorphism& phi);
Verdict is_undirected_cover(const UndirectedMorphism& phi);

// Φ: (p, q) : G -> double(H)  |->  (p, π∘q) : U(G) -> H.
UndirectedMorphism adjunction_transfer(const GraphMorphism& phi, const UndirectedGraph& h);
// Ψ: (p, q) : U(G) -> H  |->  (p, e |-> (q(e), p(s e), p(t e))) : G -> double(H).
GraphMorphism adjunction_inverse(const UndirectedMorphism& psi, const DiGraph& g);

// True when U(direction) is exactly G (same ids and ends).
bool is_direction_of(const DiGraph& direction, const UndirectedGraph& g);

// Orients every edge of G' along the given direction of the loopless target
// and returns the induced directed emulator. PreconditionError when G has
// loops or `direction` is not a direction of G.
GraphMorphism lift_direction(const UndirectedMorphism& phi, const DiGraph& direction);

// The directed emulator induced on G_c by a cover of G, obtained by
// contracting every weakly connected piece of the lifted cycle in the total
// graph. The source stays within the genus of the original total graph.
GraphMorphism contract_cycle_emulator(const GraphMorphism& cover, const DirectedCycle& c);

}  // namespace regulus
