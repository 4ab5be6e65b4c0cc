#include "regulus/semi_automaton.hpp"

#include <algorithm>
#include <set>

#include "regulus/error.hpp"

namespace regulus {

std::optional<int> SemiAutomaton::find_letter(std::string_view a) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
  if (it == alphabet.end() || *it != a) return std::nullopt;
  return static_cast<int>(it - alphabet.begin());
}

int SemiAutomaton::letter(std::string_view a) const {
  auto l = find_letter(a);
  if (!l) throw DomainError("letter '" + std::string(a) + "' is not in the alphabet");
  return *l;
}

SemiAutomaton make_semi_automaton(DiGraph g, std::vector<std::string> alphabet,
                                  const std::map<std::string, std::string>& labelling) {
  std::sort(alphabet.begin(), alphabet.end());
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end())
    throw DomainError("alphabet lists a letter twice");
  SemiAutomaton a{std::move(g), std::move(alphabet), {}};
  a.label.resize(a.graph.num_edges());
  std::vector<bool> used(a.alphabet.size(), false);
  for (int e = 0; e < a.graph.num_edges(); ++e) {
    auto it = labelling.find(a.graph.edge_id(e));
    if (it == labelling.end()) throw DomainError("edge '" + a.graph.edge_id(e) + "' has no label");
    a.label[e] = a.letter(it->second);
    used[a.label[e]] = true;
  }
  for (const auto& [id, l] : labelling)
    if (!a.graph.find_edge(id)) throw DomainError("labelling mentions unknown edge '" + id + "'");
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw DomainError("letter '" + a.alphabet[i] + "' labels no edge (underused alphabet)");
  return a;
}

SemiAutomaton make_semi_automaton(DiGraph g, const std::map<std::string, std::string>& labelling) {
  std::set<std::string> letters;
  for (const auto& [id, l] : labelling) letters.insert(l);
  return make_semi_automaton(std::move(g), {letters.begin(), letters.end()}, labelling);
}

SemiAutomaton make_semi_automaton(DiGraph g, const std::vector<std::string>& edge_labels) {
  if (static_cast<int>(edge_labels.size()) != g.num_edges()) throw DomainError("one label per edge expected");
  std::map<std::string, std::string> lab;
  for (int e = 0; e < g.num_edges(); ++e) lab[g.edge_id(e)] = edge_labels[e];
  return make_semi_automaton(std::move(g), lab);
}

std::map<std::string, std::string> labelling(const SemiAutomaton& a) {
  std::map<std::string, std::string> out;
  for (int e = 0; e < a.graph.num_edges(); ++e) out[a.graph.edge_id(e)] = a.label_of(e);
  return out;
}

bool operator==(const SemiAutomaton& a, const SemiAutomaton& b) {
  return a.graph == b.graph && a.alphabet == b.alphabet && labelling(a) == labelling(b);
}

bool SemiMorphism::strict() const {
  for (int l = 0; l < source.num_letters(); ++l)
    if (source.alphabet[l] != target.alphabet[alpha[l]]) return false;
  return true;
}

Verdict validate(const SemiMorphism& m) {
  if (static_cast<int>(m.alpha.size()) != m.source.num_letters())
    throw DomainError("alphabet map is not total");
  if (auto v = validate_morphism(m.base()); !v) return v;
  for (int e = 0; e < m.source.graph.num_edges(); ++e)
    if (m.alpha[m.source.label[e]] != m.target.label[m.emap[e]])
      return Verdict::fail("edge '" + m.source.graph.edge_id(e) + "': alpha(l(e)) = '" +
                           m.target.alphabet[m.alpha[m.source.label[e]]] + "' but l(g(e)) = '" +
                           m.target.label_of(m.emap[e]) + "'");
  return Verdict::pass();
}

SemiMorphism lift_morphism(const SemiAutomaton& source, const SemiAutomaton& target, const GraphMorphism& base) {
  SemiMorphism m{source, target, {}, {}, std::vector<int>(source.num_letters(), -1)};
  m.vmap.resize(source.graph.num_vertices());
  m.emap.resize(source.graph.num_edges());
  for (int v = 0; v < source.graph.num_vertices(); ++v)
    m.vmap[v] = target.graph.vertex(base.target.vertex_id(base.p(base.source.vertex(source.graph.vertex_id(v)))));
  for (int e = 0; e < source.graph.num_edges(); ++e) {
    m.emap[e] = target.graph.edge(base.target.edge_id(base.q(base.source.edge(source.graph.edge_id(e)))));
    int& a = m.alpha[source.label[e]];
    int want = target.label[m.emap[e]];
    if (a != -1 && a != want)
      throw DomainError("no alphabet map: letter '" + source.label_of(e) + "' would go to two letters");
    a = want;
  }
  return m;
}

SemiMorphism identity_morphism(const SemiAutomaton& a) {
  SemiMorphism m{a, a, {}, {}, {}};
  for (int v = 0; v < a.graph.num_vertices(); ++v) m.vmap.push_back(v);
  for (int e = 0; e < a.graph.num_edges(); ++e) m.emap.push_back(e);
  for (int l = 0; l < a.num_letters(); ++l) m.alpha.push_back(l);
  return m;
}

SemiMorphism compose(const SemiMorphism& second, const SemiMorphism& first) {
  if (!(first.target == second.source)) throw DomainError("compose: middle semi-automata differ");
  GraphMorphism base = compose(second.base(), first.base());
  SemiMorphism m{first.source, second.target, base.vmap, base.emap, {}};
  for (int l = 0; l < first.source.num_letters(); ++l) {
    int mid = second.source.letter(first.target.alphabet[first.alpha[l]]);
    m.alpha.push_back(second.alpha[mid]);
  }
  return m;
}

SemiAutomaton tautological(const DiGraph& g) {
  std::map<std::string, std::string> lab;
  for (const auto& e : g.edges()) lab[e.id] = e.id;
  return make_semi_automaton(g, lab);
}

Verdict check_complete(const SemiAutomaton& a) {
  const auto& g = a.graph;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<bool> seen(a.num_letters(), false);
    for (int e : g.out_edges(v)) seen[a.label[e]] = true;
    for (int l = 0; l < a.num_letters(); ++l)
      if (!seen[l]) return Verdict::fail("state '" + g.vertex_id(v) + "' has no outgoing '" + a.alphabet[l] + "' edge");
  }
  return Verdict::pass();
}

Verdict check_deterministic(const SemiAutomaton& a) {
  const auto& g = a.graph;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> seen(a.num_letters(), -1);
    for (int e : g.out_edges(v)) {
      if (seen[a.label[e]] != -1)
        return Verdict::fail("state '" + g.vertex_id(v) + "' has two outgoing '" + a.label_of(e) + "' edges ('" +
                             g.edge_id(seen[a.label[e]]) + "', '" + g.edge_id(e) + "')");
      seen[a.label[e]] = e;
    }
  }
  return Verdict::pass();
}

bool is_complete(const SemiAutomaton& a) { return check_complete(a).ok; }
bool is_deterministic(const SemiAutomaton& a) { return check_deterministic(a).ok; }

Relabelling relabel(const SemiAutomaton& a, const std::map<std::string, std::string>& alpha) {
  for (const auto& l : a.alphabet)
    if (!alpha.count(l)) throw DomainError("alphabet map is not defined on '" + l + "'");
  std::map<std::string, std::string> lab;
  for (int e = 0; e < a.graph.num_edges(); ++e) lab[a.graph.edge_id(e)] = alpha.at(a.label_of(e));
  // Letters that label no edge have no image in the result.
  std::set<std::string> image;
  for (const auto& l : a.alphabet) image.insert(alpha.at(l));
  SemiAutomaton r = make_semi_automaton(a.graph, {image.begin(), image.end()}, lab);
  SemiMorphism m = identity_morphism(a);
  m.target = r;
  for (int l = 0; l < a.num_letters(); ++l) m.alpha[l] = r.letter(alpha.at(a.alphabet[l]));
  return {std::move(r), std::move(m)};
}

Factorization factor_morphism(const SemiMorphism& m) {
  const SemiAutomaton& A = m.source;
  const SemiAutomaton& B = m.target;
  std::map<std::string, std::string> alpha;
  for (int l = 0; l < A.num_letters(); ++l) alpha[A.alphabet[l]] = B.alphabet[m.alpha[l]];

  Factorization out;
  auto [mid, relabelling] = relabel(A, alpha);
  out.relabel_first = relabelling;
  out.strict_second = SemiMorphism{mid, B, m.vmap, m.emap, {}};
  for (const auto& l : mid.alphabet) out.strict_second.alpha.push_back(B.letter(l));

  // B' carries A's labels on the image of g.
  std::vector<int> pulled(B.graph.num_edges(), -1);
  for (int e = 0; e < A.graph.num_edges(); ++e) {
    int& slot = pulled[m.emap[e]];
    if (slot != -1 && slot != A.label[e]) return out;
    slot = A.label[e];
  }
  std::set<std::string> a_letters(A.alphabet.begin(), A.alphabet.end());
  std::map<std::string, std::string> b_prime_lab, back;
  for (const auto& l : A.alphabet) back[l] = alpha[l];
  for (int f = 0; f < B.graph.num_edges(); ++f) {
    std::string l;
    if (pulled[f] != -1) {
      l = A.alphabet[pulled[f]];
    } else {
      l = B.label_of(f);
      while (a_letters.count(l) && back.at(l) != B.label_of(f)) l = "~" + l;
      back[l] = B.label_of(f);
    }
    b_prime_lab[B.graph.edge_id(f)] = l;
  }
  SemiAutomaton b_prime = make_semi_automaton(B.graph, b_prime_lab);
  SemiMorphism first{A, b_prime, m.vmap, m.emap, {}};
  for (const auto& l : A.alphabet) first.alpha.push_back(b_prime.letter(l));
  SemiMorphism second = identity_morphism(b_prime);
  second.target = B;
  for (int l = 0; l < b_prime.num_letters(); ++l) second.alpha[l] = B.letter(back.at(b_prime.alphabet[l]));
  out.strict_first = std::move(first);
  out.relabel_second = std::move(second);
  return out;
}

}  // namespace regulus
