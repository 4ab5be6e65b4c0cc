#pragma once

#include <string>
#include <vector>

#include "regulus/io.hpp"

namespace regulus {

enum class CorpusKind { graph, automaton, morphism, undirected_morphism };

struct CorpusEntry {
  std::string name;
  CorpusKind kind;
  std::string file;  // suggested file name, e.g. "z6.auto.json"
  std::string description;
};

const std::vector<CorpusEntry>& corpus_entries();
// DomainError on unknown names.
const CorpusEntry& corpus_entry(const std::string& name);
// The JSON document for an entry, with its "description" field embedded.
Json corpus_json(const std::string& name);

Automaton corpus_automaton(const std::string& name);
GraphMorphism corpus_morphism(const std::string& name);
UndirectedMorphism corpus_undirected_morphism(const std::string& name);
DiGraph corpus_graph(const std::string& name);

// Every directed graph appearing in the corpus: automaton graphs, morphism
// sources and targets, and the standalone graphs.
std::vector<std::pair<std::string, DiGraph>> corpus_digraphs();

// Z/n-sum language over the given letters: accepts words whose letter sum is 0 mod n.
Automaton cyclic_sum_automaton(int n, const std::vector<int>& letters);

}  // namespace regulus
