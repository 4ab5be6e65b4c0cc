#pragma once

#include <map>
#include <string>
#include <vector>

#include "regulus/error.hpp"
#include "regulus/graph.hpp"

namespace regulus {

using IdMap = std::map<std::string, std::string>;

// A pair of maps (p on vertices, q on edges) between two digraphs, stored by
// index. Construction does not check the adjacency relation; use
// validate_morphism for that.
struct GraphMorphism {
  DiGraph source;
  DiGraph target;
  std::vector<int> vmap;
  std::vector<int> emap;

  int p(int v) const { return vmap[v]; }
  int q(int e) const { return emap[e]; }
};

struct UndirectedMorphism {
  UndirectedGraph source;
  UndirectedGraph target;
  std::vector<int> vmap;
  std::vector<int> emap;

  int p(int v) const { return vmap[v]; }
  int q(int e) const { return emap[e]; }
};

// Builds from id maps. Throws DomainError when a map is not total on the
// source or names an id missing from the target.
GraphMorphism make_morphism(DiGraph source, DiGraph target, const IdMap& p, const IdMap& q);
UndirectedMorphism make_morphism(UndirectedGraph source, UndirectedGraph target, const IdMap& p,
                                 const IdMap& q);

IdMap vertex_id_map(const GraphMorphism& m);
IdMap edge_id_map(const GraphMorphism& m);

GraphMorphism identity_morphism(const DiGraph& g);
UndirectedMorphism identity_morphism(const UndirectedGraph& g);

// second ∘ first; the middle graphs must agree.
GraphMorphism compose(const GraphMorphism& second, const GraphMorphism& first);

// p∘s = s∘q and p∘t = t∘q edge by edge; reports the first offending edge.
Verdict validate_morphism(const GraphMorphism& m);
// ∂(q(e)) = p(∂(e)) edge by edge.
Verdict validate_morphism(const UndirectedMorphism& m);

bool is_surjective(const GraphMorphism& m);
bool is_isomorphism(const GraphMorphism& m);

// Equal as maps between equal graphs (by ids).
bool same_morphism(const GraphMorphism& a, const GraphMorphism& b);
bool same_morphism(const UndirectedMorphism& a, const UndirectedMorphism& b);

}  // namespace regulus
