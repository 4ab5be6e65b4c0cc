#include "regulus/io.hpp"

#include <fstream>
#include <sstream>

#include "regulus/functors.hpp"

namespace regulus {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) throw DomainError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(str(x, what));
  return out;
}

IdMap id_map(const Json& j, const char* what) {
  if (!j.is_object()) throw DomainError(std::string(what) + " must be an object of ids");
  IdMap m;
  for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = str(it.value(), what);
  return m;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

Json classes_json(const IdClasses& c) {
  Json out = Json::array();
  for (const auto& cls : c) out.push_back(cls);
  return out;
}

IdClasses classes_from(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of arrays");
  IdClasses out;
  for (const auto& cls : j) out.push_back(strings(cls, what));
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const DiGraph& g) {
  Json j;
  j["vertices"] = g.vertex_ids();
  j["edges"] = Json::array();
  for (int e = 0; e < g.num_edges(); ++e)
    j["edges"].push_back({{"id", g.edge_id(e)}, {"src", g.vertex_id(g.src(e))}, {"dst", g.vertex_id(g.dst(e))}});
  return j;
}

DiGraph graph_from_json(const Json& j) {
  return guarded([&] {
    DiGraph g;
    for (auto& v : strings(field(j, "vertices"), "vertices")) g.add_vertex(v);
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw DomainError("edges must be an array");
    for (const auto& e : edges)
      g.add_edge(str(field(e, "id"), "edge id"), str(field(e, "src"), "src"), str(field(e, "dst"), "dst"));
    return g;
  });
}

Json to_json(const UndirectedGraph& g) {
  Json j;
  j["vertices"] = g.vertex_ids();
  j["edges"] = Json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    Json ends = Json::array({g.vertex_id(g.end_a(e))});
    if (!g.is_loop(e)) ends.push_back(g.vertex_id(g.end_b(e)));
    j["edges"].push_back({{"id", g.edge_id(e)}, {"ends", ends}});
  }
  return j;
}

UndirectedGraph undirected_from_json(const Json& j) {
  return guarded([&] {
    UndirectedGraph g;
    for (auto& v : strings(field(j, "vertices"), "vertices")) g.add_vertex(v);
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw DomainError("edges must be an array");
    for (const auto& e : edges) {
      auto ends = strings(field(e, "ends"), "ends");
      if (ends.empty() || ends.size() > 2) throw DomainError("an edge needs one or two ends");
      g.add_edge(str(field(e, "id"), "edge id"), ends.front(), ends.back());
    }
    return g;
  });
}

bool is_undirected_json(const Json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) return false;
  for (const auto& e : j["edges"])
    if (e.is_object() && e.contains("ends")) return true;
  return false;
}

Json to_json(const SemiAutomaton& a) {
  Json j = to_json(a.graph);
  j["alphabet"] = a.alphabet;
  for (int e = 0; e < a.graph.num_edges(); ++e) j["edges"][e]["label"] = a.label_of(e);
  return j;
}

SemiAutomaton semi_automaton_from_json(const Json& j) {
  return guarded([&] {
    DiGraph g = graph_from_json(j);
    std::map<std::string, std::string> lab;
    for (const auto& e : field(j, "edges")) lab[str(field(e, "id"), "edge id")] = str(field(e, "label"), "label");
    if (j.contains("alphabet")) return make_semi_automaton(std::move(g), strings(j["alphabet"], "alphabet"), lab);
    return make_semi_automaton(std::move(g), lab);
  });
}

Json to_json(const Automaton& a) {
  Json j = to_json(a.semi);
  std::vector<std::string> ini, fin;
  for (int v : a.initials) ini.push_back(a.graph().vertex_id(v));
  for (int v : a.finals) fin.push_back(a.graph().vertex_id(v));
  j["initials"] = ini;
  j["finals"] = fin;
  return j;
}

Automaton automaton_from_json(const Json& j) {
  return guarded([&] {
    return make_automaton(semi_automaton_from_json(j), strings(field(j, "initials"), "initials"),
                          strings(field(j, "finals"), "finals"));
  });
}

Json to_json(const GraphMorphism& m) {
  return {{"source", to_json(m.source)}, {"target", to_json(m.target)}, {"p", vertex_id_map(m)}, {"q", edge_id_map(m)}};
}

GraphMorphism morphism_from_json(const Json& j) {
  return guarded([&] {
    return make_morphism(graph_from_json(field(j, "source")), graph_from_json(field(j, "target")),
                         id_map(field(j, "p"), "p"), id_map(field(j, "q"), "q"));
  });
}

Json to_json(const UndirectedMorphism& m) {
  IdMap p, q;
  for (int v = 0; v < m.source.num_vertices(); ++v) p[m.source.vertex_id(v)] = m.target.vertex_id(m.p(v));
  for (int e = 0; e < m.source.num_edges(); ++e) q[m.source.edge_id(e)] = m.target.edge_id(m.q(e));
  return {{"source", to_json(m.source)}, {"target", to_json(m.target)}, {"p", p}, {"q", q}};
}

UndirectedMorphism undirected_morphism_from_json(const Json& j) {
  return guarded([&] {
    return make_morphism(undirected_from_json(field(j, "source")), undirected_from_json(field(j, "target")),
                         id_map(field(j, "p"), "p"), id_map(field(j, "q"), "q"));
  });
}

Json to_json(const SemiMorphism& m) {
  Json j = to_json(m.base());
  j["source"] = to_json(m.source);
  j["target"] = to_json(m.target);
  IdMap alpha;
  for (int a = 0; a < m.source.num_letters(); ++a) alpha[m.source.alphabet[a]] = m.target.alphabet[m.alpha[a]];
  j["alpha"] = alpha;
  return j;
}

Json to_json(const DiGraph& g, const AutomaticRelation& r) {
  return {{"vertex_classes", classes_json(vertex_classes(g, r))}, {"edge_classes", classes_json(edge_classes(g, r))}};
}

AutomaticRelation relation_from_json(const DiGraph& g, const Json& j) {
  return guarded([&] {
    return relation_from_classes(g, classes_from(field(j, "vertex_classes"), "vertex_classes"),
                                 classes_from(field(j, "edge_classes"), "edge_classes"));
  });
}

Json to_json(const UndirectedGraph& g, const RotationSystem& rot) {
  Json j = Json::object();
  for (const auto& [v, list] : rotation_to_ids(g, rot)) j[v] = list;
  return j;
}

RotationSystem rotation_from_json(const UndirectedGraph& g, const Json& j) {
  return guarded([&] {
    if (!j.is_object()) throw DomainError("rotation must be an object of vertex -> edge-end list");
    std::map<std::string, std::vector<std::string>> ids;
    for (auto it = j.begin(); it != j.end(); ++it) ids[it.key()] = strings(it.value(), "rotation");
    return rotation_from_ids(g, ids);
  });
}

Json to_json(const CoverCertificate& c) {
  return {{"base", to_json(c.morphism.target)},
          {"total", to_json(c.total)},
          {"p", vertex_id_map(c.morphism)},
          {"q", edge_id_map(c.morphism)},
          {"rotation", to_json(forget(c.total), c.rotation)},
          {"genus", c.genus}};
}

CoverCertificate certificate_from_json(const Json& doc) {
  return guarded([&] {
    // search and language reports carry the certificate under "certificate"
    const Json& j = doc.is_object() && doc.contains("certificate") && !doc.contains("base") ? doc["certificate"] : doc;
    if (j.is_null()) throw DomainError("report has no certificate");
    DiGraph base = graph_from_json(field(j, "base"));
    DiGraph total = graph_from_json(field(j, "total"));
    CoverCertificate c{total, make_morphism(total, base, id_map(field(j, "p"), "p"), id_map(field(j, "q"), "q")),
                       rotation_from_json(forget(total), field(j, "rotation")), 0};
    const Json& g = field(j, "genus");
    if (!g.is_number_integer()) throw DomainError("genus must be an integer");
    c.genus = g.get<int>();
    return c;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const DiGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (const auto& v : g.vertex_ids()) out << "  " << quote(v) << ";\n";
  for (int e = 0; e < g.num_edges(); ++e)
    out << "  " << quote(g.vertex_id(g.src(e))) << " -> " << quote(g.vertex_id(g.dst(e)))
        << " [label=" << quote(g.edge_id(e)) << "];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const UndirectedGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quote(name) << " {\n";
  for (const auto& v : g.vertex_ids()) out << "  " << quote(v) << ";\n";
  for (int e = 0; e < g.num_edges(); ++e)
    out << "  " << quote(g.vertex_id(g.end_a(e))) << " -- " << quote(g.vertex_id(g.end_b(e)))
        << " [label=" << quote(g.edge_id(e)) << "];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const SemiAutomaton& a, const std::string& name) {
  std::ostringstream out;
  const DiGraph& g = a.graph;
  out << "digraph " << quote(name) << " {\n";
  for (const auto& v : g.vertex_ids()) out << "  " << quote(v) << ";\n";
  for (int e = 0; e < g.num_edges(); ++e)
    out << "  " << quote(g.vertex_id(g.src(e))) << " -> " << quote(g.vertex_id(g.dst(e)))
        << " [label=" << quote(g.edge_id(e) + ":" + a.label_of(e)) << "];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Automaton& a, const std::string& name) {
  std::ostringstream out;
  const DiGraph& g = a.graph();
  out << "digraph " << quote(name) << " {\n  rankdir=LR;\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "  " << quote(g.vertex_id(v)) << " [shape=" << (a.is_final(v) ? "doublecircle" : "circle") << "];\n";
    if (a.is_initial(v)) {
      std::string in = "__start_" + g.vertex_id(v);
      out << "  " << quote(in) << " [shape=point];\n  " << quote(in) << " -> " << quote(g.vertex_id(v)) << ";\n";
    }
  }
  for (int e = 0; e < g.num_edges(); ++e)
    out << "  " << quote(g.vertex_id(g.src(e))) << " -> " << quote(g.vertex_id(g.dst(e)))
        << " [label=" << quote(g.edge_id(e) + ":" + a.semi.label_of(e)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace regulus
