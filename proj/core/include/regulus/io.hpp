#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "regulus/automaton.hpp"
#include "regulus/genus.hpp"
#include "regulus/relation.hpp"
#include "regulus/search.hpp"

namespace regulus {

using Json = nlohmann::json;

// Every *_from_json throws DomainError on malformed input. Unknown keys are
// ignored, so files may carry a free-form "description".

Json to_json(const DiGraph& g);
DiGraph graph_from_json(const Json& j);

// Edges carry "ends": [a, b], or a single end for a loop.
Json to_json(const UndirectedGraph& g);
UndirectedGraph undirected_from_json(const Json& j);
bool is_undirected_json(const Json& j);

Json to_json(const SemiAutomaton& a);
SemiAutomaton semi_automaton_from_json(const Json& j);

Json to_json(const Automaton& a);
Automaton automaton_from_json(const Json& j);

// {"source", "target", "p": {v: w}, "q": {e: f}}
Json to_json(const GraphMorphism& m);
GraphMorphism morphism_from_json(const Json& j);
Json to_json(const UndirectedMorphism& m);
UndirectedMorphism undirected_morphism_from_json(const Json& j);
// Adds "alpha": {letter: letter}.
Json to_json(const SemiMorphism& m);

Json to_json(const DiGraph& g, const AutomaticRelation& r);
AutomaticRelation relation_from_json(const DiGraph& g, const Json& j);

Json to_json(const UndirectedGraph& g, const RotationSystem& rot);
RotationSystem rotation_from_json(const UndirectedGraph& g, const Json& j);

// {"base", "total", "p", "q", "rotation", "genus"}. Reading also accepts a
// search report and takes its "certificate".
Json to_json(const CoverCertificate& c);
CoverCertificate certificate_from_json(const Json& j);

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);
// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

std::string to_dot(const DiGraph& g, const std::string& name = "G");
std::string to_dot(const UndirectedGraph& g, const std::string& name = "G");
std::string to_dot(const SemiAutomaton& a, const std::string& name = "A");
std::string to_dot(const Automaton& a, const std::string& name = "A");

}  // namespace regulus
