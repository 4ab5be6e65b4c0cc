#include "regulus/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "regulus/emulation.hpp"
#include "regulus/functors.hpp"
#include "regulus/relation.hpp"

namespace regulus {

bool Automaton::is_initial(int v) const { return std::binary_search(initials.begin(), initials.end(), v); }
bool Automaton::is_final(int v) const { return std::binary_search(finals.begin(), finals.end(), v); }

namespace {

std::vector<int> sorted_indices(const DiGraph& g, const std::vector<std::string>& ids) {
  std::vector<int> out;
  for (const auto& id : ids) out.push_back(g.vertex(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<std::string> id_set(const DiGraph& g, const std::vector<int>& vs) {
  std::set<std::string> out;
  for (int v : vs) out.insert(g.vertex_id(v));
  return out;
}

using StateSet = std::vector<int>;  // sorted

StateSet step(const Automaton& a, const StateSet& s, int letter) {
  StateSet out;
  if (letter < 0) return out;
  for (int v : s)
    for (int e : a.graph().out_edges(v))
      if (a.semi.label[e] == letter) out.push_back(a.graph().dst(e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool any_final(const Automaton& a, const StateSet& s) {
  return std::any_of(s.begin(), s.end(), [&](int v) { return a.is_final(v); });
}

std::string fresh_vertex_id(const DiGraph& g, const std::string& base) {
  std::string id = base;
  for (int i = 1; g.find_vertex(id); ++i) id = base + std::to_string(i);
  return id;
}

std::string fresh_edge_id(const DiGraph& g, const std::string& base) {
  std::string id = base;
  for (int i = 1; g.find_edge(id); ++i) id = base + "#" + std::to_string(i);
  return id;
}

}  // namespace

Automaton make_automaton(SemiAutomaton semi, const std::vector<std::string>& initials,
                         const std::vector<std::string>& finals) {
  Automaton a{std::move(semi), {}, {}};
  a.initials = sorted_indices(a.graph(), initials);
  a.finals = sorted_indices(a.graph(), finals);
  return a;
}

bool operator==(const Automaton& a, const Automaton& b) {
  return a.semi == b.semi && id_set(a.graph(), a.initials) == id_set(b.graph(), b.initials) &&
         id_set(a.graph(), a.finals) == id_set(b.graph(), b.finals);
}

bool is_accessible(const Automaton& a) {
  auto seen = forward_closure(a.graph(), a.initials);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Automaton accessible_part(const Automaton& a) {
  auto keep = forward_closure(a.graph(), a.initials);
  DiGraph sub = subgraph(a.graph(), keep, std::vector<bool>(a.graph().num_edges(), true));
  std::vector<std::string> labels;
  for (int e = 0; e < sub.num_edges(); ++e) labels.push_back(a.semi.label_of(a.graph().edge(sub.edge_id(e))));
  std::vector<std::string> ini, fin;
  for (int v : a.initials) ini.push_back(a.graph().vertex_id(v));
  for (int v : a.finals)
    if (keep[v]) fin.push_back(a.graph().vertex_id(v));
  return make_automaton(make_semi_automaton(std::move(sub), labels), ini, fin);
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  Word w;
  for (std::string tok; in >> tok;) w.push_back(tok);
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

bool accepts(const Automaton& a, const Word& w) {
  StateSet s = a.initials;
  for (const auto& l : w) s = step(a, s, a.semi.letter(l));
  return any_final(a, s);
}

LanguageSample sample_language(const Automaton& a, int max_length) {
  LanguageSample out{a.semi.alphabet, {}, max_length};
  Word w;
  auto rec = [&](auto&& self, const StateSet& s) -> void {
    if (s.empty()) return;
    if (any_final(a, s)) out.words.insert(w);
    if (static_cast<int>(w.size()) == max_length) return;
    for (int l = 0; l < a.semi.num_letters(); ++l) {
      w.push_back(a.semi.alphabet[l]);
      self(self, step(a, s, l));
      w.pop_back();
    }
  };
  rec(rec, a.initials);
  return out;
}

Automaton complete_with_trash(const Automaton& a) {
  if (auto v = check_deterministic(a.semi); !v) throw PreconditionError("complete_with_trash: " + v.violation);
  if (is_complete(a.semi)) return a;
  DiGraph g = a.graph();
  std::vector<std::string> labels;
  for (int e = 0; e < g.num_edges(); ++e) labels.push_back(a.semi.label_of(e));
  const int n = g.num_vertices();
  int trash = g.add_vertex(fresh_vertex_id(g, "⊥"));
  for (int v = 0; v <= n; ++v) {
    int state = v == n ? trash : v;
    std::vector<bool> has(a.semi.num_letters(), false);
    if (state != trash)
      for (int e : a.graph().out_edges(state)) has[a.semi.label[e]] = true;
    for (int l = 0; l < a.semi.num_letters(); ++l)
      if (!has[l]) {
        const auto& letter = a.semi.alphabet[l];
        g.add_edge(fresh_edge_id(g, g.vertex_id(state) + "/" + letter + "/" + g.vertex_id(trash)), state, trash);
        labels.push_back(letter);
      }
  }
  Automaton out{make_semi_automaton(std::move(g), labels), a.initials, a.finals};
  return out;
}

Verdict check_minimizable(const Automaton& a) {
  if (auto v = check_deterministic(a.semi); !v) return Verdict::fail("not deterministic: " + v.violation);
  if (auto v = check_complete(a.semi); !v) return Verdict::fail("not complete: " + v.violation);
  if (a.initials.size() != 1)
    return Verdict::fail("expected exactly one initial state, found " + std::to_string(a.initials.size()));
  if (!is_accessible(a)) return Verdict::fail("not accessible from the initial state");
  return Verdict::pass();
}

Minimization minimize(const Automaton& a) {
  if (auto v = check_minimizable(a); !v) throw PreconditionError("minimize: " + v.violation);
  FinalFamily family;
  if (!a.finals.empty()) family.push_back(a.finals);
  AutomaticRelation r = mn_refine(a.semi, family);
  Quotient q = quotient(a.graph(), r);
  std::vector<std::string> labels(q.graph.num_edges());
  for (int e = 0; e < a.graph().num_edges(); ++e) labels[q.can.q(e)] = a.semi.label_of(e);
  std::vector<std::string> ini, fin;
  for (int v : a.initials) ini.push_back(q.graph.vertex_id(q.can.p(v)));
  for (int v : a.finals) fin.push_back(q.graph.vertex_id(q.can.p(v)));
  Automaton amin = make_automaton(make_semi_automaton(q.graph, labels), ini, fin);
  SemiMorphism pi = lift_morphism(a.semi, amin.semi, q.can);
  return {std::move(amin), std::move(pi)};
}

DiGraph language_graph(const Automaton& a) { return minimize(a).amin.graph(); }

std::optional<Word> language_difference(const Automaton& a, const Automaton& b) {
  std::set<std::string> letters(a.semi.alphabet.begin(), a.semi.alphabet.end());
  letters.insert(b.semi.alphabet.begin(), b.semi.alphabet.end());
  std::vector<std::string> sigma(letters.begin(), letters.end());
  std::vector<int> la, lb;
  for (const auto& l : sigma) {
    la.push_back(a.semi.find_letter(l).value_or(-1));
    lb.push_back(b.semi.find_letter(l).value_or(-1));
  }
  using Node = std::pair<StateSet, StateSet>;
  std::map<Node, std::pair<const Node*, int>> parent;
  std::deque<const Node*> queue;
  auto start = parent.emplace(Node{a.initials, b.initials}, std::make_pair(nullptr, -1)).first;
  queue.push_back(&start->first);
  while (!queue.empty()) {
    const Node* n = queue.front();
    queue.pop_front();
    if (any_final(a, n->first) != any_final(b, n->second)) {
      Word w;
      for (const Node* c = n; parent.at(*c).first; c = parent.at(*c).first) w.push_back(sigma[parent.at(*c).second]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t l = 0; l < sigma.size(); ++l) {
      Node next{step(a, n->first, la[l]), step(b, n->second, lb[l])};
      auto [it, fresh] = parent.emplace(std::move(next), std::make_pair(n, static_cast<int>(l)));
      if (fresh) queue.push_back(&it->first);
    }
  }
  return std::nullopt;
}

bool languages_equal(const Automaton& a, const Automaton& b) { return !language_difference(a, b).has_value(); }

Verdict is_automaton_morphism(const Automaton& a, const Automaton& b, const SemiMorphism& m) {
  if (auto v = validate(m); !v) return v;
  if (!m.strict()) return Verdict::fail("alphabet map is not strict");
  for (int v = 0; v < a.graph().num_vertices(); ++v) {
    if (a.is_initial(v) != b.is_initial(m.vmap[v]))
      return Verdict::fail("I_A != f^-1(I_B) at '" + a.graph().vertex_id(v) + "'");
    if (a.is_final(v) != b.is_final(m.vmap[v]))
      return Verdict::fail("F_A != f^-1(F_B) at '" + a.graph().vertex_id(v) + "'");
  }
  return Verdict::pass();
}

CoverAutomaton automaton_from_cover_with_map(const Automaton& a, const GraphMorphism& cover) {
  if (auto v = check_minimizable(a); !v) throw PreconditionError("automaton_from_cover: " + v.violation);
  Minimization m = minimize(a);
  const Automaton& amin = m.amin;
  const DiGraph& g = amin.graph();
  Simplification r = simplify(g);
  if (!(cover.target == excise(r.graph)))
    throw PreconditionError("automaton_from_cover: cover target is not Exc(R(G(A_min)))");
  if (auto v = is_directed_cover(cover); !v) throw PreconditionError("automaton_from_cover: not a directed cover: " + v.violation);

  GraphMorphism ext = extend_over_excision(cover, r.graph);
  Pullback pb = pullback(r.rho, ext);
  const DiGraph& l = pb.graph;
  std::vector<std::string> labels(l.num_edges());
  for (int e = 0; e < l.num_edges(); ++e) labels[e] = amin.semi.label_of(pb.pi1.q(e));

  // Paths lift uniquely along a cover, so any single preimage of the initial
  // state recognises the same language; take the least id and its reachable part.
  int q0 = amin.initials.front();
  std::optional<int> start;
  for (int v = 0; v < l.num_vertices(); ++v)
    if (pb.pi1.p(v) == q0 && (!start || l.vertex_id(v) < l.vertex_id(*start))) start = v;
  if (!start) throw PreconditionError("automaton_from_cover: empty fibre over the initial state");
  std::vector<std::string> fin;
  for (int v = 0; v < l.num_vertices(); ++v)
    if (amin.is_final(pb.pi1.p(v))) fin.push_back(l.vertex_id(v));
  Automaton full = make_automaton(make_semi_automaton(l, labels), {l.vertex_id(*start)}, fin);
  Automaton out = accessible_part(full);

  GraphMorphism down = compose(pb.pi1, inclusion(out.graph(), l));
  SemiMorphism to_min = lift_morphism(out.semi, amin.semi, down);

  if (auto v = check_deterministic(out.semi); !v) throw std::logic_error("automaton_from_cover produced: " + v.violation);
  if (auto v = is_directed_cover(down); !v) throw std::logic_error("automaton_from_cover lost the cover: " + v.violation);
  if (!languages_equal(out, a)) throw std::logic_error("automaton_from_cover changed the language");
  return {std::move(out), std::move(to_min)};
}

Automaton automaton_from_cover(const Automaton& a, const GraphMorphism& cover) {
  return automaton_from_cover_with_map(a, cover).automaton;
}

Automaton union_automaton(const Automaton& a, const Automaton& b) {
  for (const Automaton* x : {&a, &b}) {
    if (auto v = check_deterministic(x->semi); !v) throw PreconditionError("union_automaton: " + v.violation);
    if (x->initials.size() != 1) throw PreconditionError("union_automaton: expected one initial state");
  }
  std::set<std::string> letters(a.semi.alphabet.begin(), a.semi.alphabet.end());
  letters.insert(b.semi.alphabet.begin(), b.semi.alphabet.end());
  std::vector<std::string> sigma(letters.begin(), letters.end());
  // -1 is the implicit trash state of each side.
  auto next = [](const Automaton& x, int s, const std::string& l) {
    if (s < 0) return -1;
    auto letter = x.semi.find_letter(l);
    if (!letter) return -1;
    for (int e : x.graph().out_edges(s))
      if (x.semi.label[e] == *letter) return x.graph().dst(e);
    return -1;
  };
  auto name = [](const Automaton& x, int s) { return s < 0 ? std::string("⊥") : x.graph().vertex_id(s); };
  std::map<std::pair<int, int>, int> index;
  DiGraph g;
  std::vector<std::string> labels, fin;
  std::deque<std::pair<int, int>> queue;
  auto visit = [&](std::pair<int, int> st) {
    auto it = index.find(st);
    if (it != index.end()) return it->second;
    int v = g.add_vertex("(" + name(a, st.first) + "," + name(b, st.second) + ")");
    index[st] = v;
    if ((st.first >= 0 && a.is_final(st.first)) || (st.second >= 0 && b.is_final(st.second)))
      fin.push_back(g.vertex_id(v));
    queue.push_back(st);
    return v;
  };
  int start = visit({a.initials.front(), b.initials.front()});
  while (!queue.empty()) {
    auto st = queue.front();
    queue.pop_front();
    int v = index[st];
    for (const auto& l : sigma) {
      int w = visit({next(a, st.first, l), next(b, st.second, l)});
      g.add_edge(g.vertex_id(v) + "-" + l, v, w);
      labels.push_back(l);
    }
  }
  std::string s0 = g.vertex_id(start);
  return make_automaton(make_semi_automaton(std::move(g), labels), {s0}, fin);
}

}  // namespace regulus
