// regulus: command-line front end over regulus_core.
// Exit codes: 0 ok, 1 negative verdict, 2 budget exceeded, 3 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "regulus/corpus.hpp"
#include "regulus/emulation.hpp"
#include "regulus/functors.hpp"
#include "regulus/io.hpp"
#include "regulus/language.hpp"
#include "regulus/relation.hpp"

using namespace regulus;

namespace {

constexpr int kOk = 0, kNegative = 1, kBudget = 2, kInput = 3;

struct Options {
  std::vector<std::string> files;
  std::string output;
  bool dot = false;
  int jobs = 1;
  std::uint64_t seed = 20240601;
  // verb-specific
  std::string word;
  int max_length = 4;
  std::vector<std::string> cycle;
  std::vector<std::string> alpha;
  std::vector<std::string> finals;
  int max_fiber = 1;
  int genus = 0;
  double time_budget = -1;
  bool all_components = false;
  bool force = false;
  double max_rotations = 1e9;
  int girth = 3;
  int letters = 1;
  std::vector<std::string> faces;
  std::string certificate;
  std::string base;
  std::string dir;
  bool lower_bound_only = false;
};

struct Output {
  Json json;
  std::string dot;
};

void emit(const Options& o, const Output& out) {
  std::string text = dump(out.json);
  if (o.output.empty()) {
    std::cout << text;
    if (o.dot && !out.dot.empty()) std::cout << out.dot;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw DomainError("cannot write '" + o.output + "'");
  f << text;
  if (o.dot && !out.dot.empty()) std::ofstream(o.output + ".dot") << out.dot;
}

const std::string& file(const Options& o, std::size_t i, const char* what) {
  if (o.files.size() <= i) throw DomainError(std::string("missing input file: ") + what);
  return o.files[i];
}

Json load(const Options& o, std::size_t i, const char* what) { return read_json_file(file(o, i, what)); }

double default_time_budget(const Options& o) {
  if (o.time_budget >= 0) return o.time_budget;
  if (const char* env = std::getenv("REGULUS_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || v < 0) throw DomainError("REGULUS_BUDGET must be a non-negative number of seconds");
    return v;
  }
  return 60.0;
}

Json verdict_json(const Verdict& v) {
  Json j{{"ok", v.ok}};
  if (!v.ok) j["violation"] = v.violation;
  return j;
}

int verdict_exit(const Verdict& v) { return v.ok ? kOk : kNegative; }

std::map<std::string, std::string> pairs(const std::vector<std::string>& items, const char* what) {
  std::map<std::string, std::string> m;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw DomainError(std::string(what) + " entries look like from=to, got '" + s + "'");
    m[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return m;
}

std::vector<std::string> ids(const DiGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.vertex_id(v));
  return out;
}

// ---- graph ----

int graph_simplify(const Options& o) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  Simplification s = simplify(g);
  emit(o, {{{"graph", to_json(s.graph)}, {"rho", to_json(s.rho)}}, to_dot(s.graph, "R")});
  return kOk;
}

int graph_unary(const Options& o, DiGraph (*f)(const DiGraph&), const char* name) {
  DiGraph g = f(graph_from_json(load(o, 0, "graph")));
  emit(o, {to_json(g), to_dot(g, name)});
  return kOk;
}

int graph_forget(const Options& o) {
  UndirectedGraph u = forget(graph_from_json(load(o, 0, "graph")));
  emit(o, {to_json(u), to_dot(u, "U")});
  return kOk;
}

int graph_bidirect(const Options& o) {
  DiGraph g = bidirect(undirected_from_json(load(o, 0, "undirected graph")));
  emit(o, {to_json(g), to_dot(g, "double")});
  return kOk;
}

int graph_contract(const Options& o) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  if (o.cycle.empty()) throw DomainError("--cycle needs the cycle's edge ids in order");
  DiGraph c = contract_cycle(g, DirectedCycle{o.cycle});
  emit(o, {to_json(c), to_dot(c, "contracted")});
  return kOk;
}

int graph_pullback(const Options& o) {
  GraphMorphism phi = morphism_from_json(load(o, 0, "first morphism"));
  GraphMorphism psi = morphism_from_json(load(o, 1, "second morphism"));
  Pullback pb = pullback(phi, psi);
  emit(o, {{{"graph", to_json(pb.graph)}, {"pi1", to_json(pb.pi1)}, {"pi2", to_json(pb.pi2)}},
           to_dot(pb.graph, "pullback")});
  return kOk;
}

int graph_reach(const Options& o) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  Reachability r = reachability(g);
  Json pr = Json::object();
  for (int w = 0; w < g.num_vertices(); ++w) {
    std::vector<std::string> from;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (r.pr[w][v]) from.push_back(g.vertex_id(v));
    pr[g.vertex_id(w)] = from;
  }
  emit(o, {{{"pr", pr}, {"reachable", ids(g, r.reachable)}, {"co_reachable", ids(g, r.co_reachable)}}, {}});
  return kOk;
}

// ---- sa ----

int sa_tautological(const Options& o) {
  SemiAutomaton a = tautological(graph_from_json(load(o, 0, "graph")));
  emit(o, {to_json(a), to_dot(a, "T")});
  return kOk;
}

int sa_relabel(const Options& o) {
  SemiAutomaton a = semi_automaton_from_json(load(o, 0, "semi-automaton"));
  Relabelling r = relabel(a, pairs(o.alpha, "--alpha"));
  emit(o, {{{"result", to_json(r.result)}, {"morphism", to_json(r.morphism)}}, to_dot(r.result, "relabelled")});
  return kOk;
}

int sa_check(const Options& o) {
  SemiAutomaton a = semi_automaton_from_json(load(o, 0, "semi-automaton"));
  Verdict d = check_deterministic(a), c = check_complete(a);
  emit(o, {{{"deterministic", verdict_json(d)}, {"complete", verdict_json(c)}}, {}});
  return d.ok && c.ok ? kOk : kNegative;
}

// ---- auto ----

int auto_accept(const Options& o) {
  Automaton a = automaton_from_json(load(o, 0, "automaton"));
  bool yes = accepts(a, parse_word(o.word));
  emit(o, {{{"word", o.word}, {"accepted", yes}}, {}});
  return yes ? kOk : kNegative;
}

int auto_sample(const Options& o) {
  Automaton a = automaton_from_json(load(o, 0, "automaton"));
  LanguageSample s = sample_language(a, o.max_length);
  Json words = Json::array();
  for (const auto& w : s.words) words.push_back(format_word(w));
  emit(o, {{{"alphabet", s.alphabet}, {"max_length", s.max_length}, {"words", words}}, {}});
  return kOk;
}

int auto_minimize(const Options& o) {
  Minimization m = minimize(automaton_from_json(load(o, 0, "automaton")));
  emit(o, {to_json(m.amin), to_dot(m.amin, "min")});
  return kOk;
}

int auto_complete(const Options& o) {
  Automaton a = complete_with_trash(automaton_from_json(load(o, 0, "automaton")));
  emit(o, {to_json(a), to_dot(a, "complete")});
  return kOk;
}

int auto_graph(const Options& o) {
  DiGraph g = language_graph(automaton_from_json(load(o, 0, "automaton")));
  emit(o, {to_json(g), to_dot(g, "language")});
  return kOk;
}

int auto_from_cover(const Options& o) {
  Automaton a = automaton_from_json(load(o, 0, "automaton"));
  GraphMorphism cover = morphism_from_json(load(o, 1, "cover morphism"));
  Automaton w = automaton_from_cover(a, cover);
  emit(o, {to_json(w), to_dot(w, "from_cover")});
  return kOk;
}

int auto_equal(const Options& o) {
  Automaton a = automaton_from_json(load(o, 0, "first automaton"));
  Automaton b = automaton_from_json(load(o, 1, "second automaton"));
  auto diff = language_difference(a, b);
  Json j{{"equal", !diff}};
  if (diff) j["counterexample"] = format_word(*diff);
  emit(o, {j, {}});
  return diff ? kNegative : kOk;
}

// ---- rel ----

int rel_check(const Options& o) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  Verdict v = is_automatic(g, relation_from_json(g, load(o, 1, "relation")));
  emit(o, {verdict_json(v), {}});
  return verdict_exit(v);
}

int rel_quotient(const Options& o) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  Quotient q = quotient(g, relation_from_json(g, load(o, 1, "relation")));
  emit(o, {{{"graph", to_json(q.graph)}, {"can", to_json(q.can)}}, to_dot(q.graph, "quotient")});
  return kOk;
}

int rel_canonical(const Options& o) {
  GraphMorphism phi = morphism_from_json(load(o, 0, "morphism"));
  emit(o, {to_json(phi.source, canonical_relation(phi)), {}});
  return kOk;
}

int rel_factorize(const Options& o) {
  GraphMorphism phi = morphism_from_json(load(o, 0, "morphism"));
  EmulatorFactorization f = factorize(phi);
  emit(o, {{{"relation", to_json(phi.source, f.relation)},
            {"quotient", to_json(f.quotient.graph)},
            {"can", to_json(f.quotient.can)},
            {"iota", to_json(f.iota)}},
           to_dot(f.quotient.graph, "quotient")});
  return kOk;
}

int rel_mn(const Options& o) {
  Json j = load(o, 0, "semi-automaton or automaton");
  SemiAutomaton a = semi_automaton_from_json(j);
  FinalFamily family;
  if (!o.finals.empty()) {
    for (const auto& set : o.finals) {
      std::vector<int> block;
      std::stringstream in(set);
      for (std::string v; std::getline(in, v, ',');)
        if (!v.empty()) block.push_back(a.graph.vertex(v));
      family.push_back(block);
    }
  } else if (j.contains("finals")) {
    Automaton full = automaton_from_json(j);
    if (!full.finals.empty()) family.push_back(full.finals);
  }
  int rounds = 0;
  AutomaticRelation r = mn_refine(a, family, &rounds);
  Json out = to_json(a.graph, r);
  out["rounds"] = rounds;
  emit(o, {out, {}});
  return kOk;
}

int rel_final_systems(const Options& o) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  FinalSystem s = complete_final_systems(g);
  emit(o, {{{"minimal_system", ids(g, s.vertices)}, {"cardinality", s.cardinality}}, {}});
  return kOk;
}

int rel_lattice(const Options& o, AutomaticRelation (*f)(const DiGraph&, const AutomaticRelation&,
                                                        const AutomaticRelation&)) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  AutomaticRelation r = f(g, relation_from_json(g, load(o, 1, "first relation")),
                          relation_from_json(g, load(o, 2, "second relation")));
  emit(o, {to_json(g, r), {}});
  return kOk;
}

int rel_max(const Options& o) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  emit(o, {to_json(g, maximum(g)), {}});
  return kOk;
}

// ---- emu ----

int emu_check(const Options& o, bool cover) {
  Json j = load(o, 0, "morphism");
  Verdict v;
  if (j.contains("source") && is_undirected_json(j["source"])) {
    UndirectedMorphism m = undirected_morphism_from_json(j);
    v = cover ? is_undirected_cover(m) : is_undirected_emulator(m);
  } else {
    GraphMorphism m = morphism_from_json(j);
    v = cover ? is_directed_cover(m) : is_directed_emulator(m);
  }
  emit(o, {verdict_json(v), {}});
  return verdict_exit(v);
}

int emu_extract(const Options& o) {
  GraphMorphism c = extract_cover(morphism_from_json(load(o, 0, "emulator")));
  emit(o, {to_json(c), to_dot(c.source, "extracted")});
  return kOk;
}

int emu_extend(const Options& o) {
  GraphMorphism psi = morphism_from_json(load(o, 0, "morphism onto Exc(H)"));
  DiGraph h = graph_from_json(load(o, 1, "graph H"));
  GraphMorphism ext = extend_over_excision(psi, h);
  emit(o, {to_json(ext), to_dot(ext.source, "extended")});
  return kOk;
}

int emu_lift(const Options& o) {
  UndirectedMorphism phi = undirected_morphism_from_json(load(o, 0, "undirected emulator"));
  DiGraph dir = graph_from_json(load(o, 1, "direction"));
  GraphMorphism m = lift_direction(phi, dir);
  emit(o, {to_json(m), to_dot(m.source, "lifted")});
  return kOk;
}

int emu_search(const Options& o) {
  CoverSearchSpec spec;
  spec.base = graph_from_json(load(o, 0, "base graph"));
  spec.max_fiber = o.max_fiber;
  spec.genus_bound = o.genus;
  spec.connected_only = !o.all_components;
  spec.time_budget_seconds = default_time_budget(o);
  spec.jobs = o.jobs;
  CoverSearchResult r = search_covers(spec);
  Json j{{"outcome", to_string(r.outcome)},
         {"stats",
          {{"fiber_vectors", r.stats.fiber_vectors},
           {"pruned_vectors", r.stats.pruned_vectors},
           {"nodes", r.stats.nodes},
           {"leaves", r.stats.leaves}}}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  emit(o, {j, r.certificate ? to_dot(r.certificate->total, "cover") : std::string()});
  switch (r.outcome) {
    case SearchOutcome::found: return kOk;
    case SearchOutcome::exhausted: return kNegative;
    case SearchOutcome::budget_exceeded: return kBudget;
  }
  return kNegative;
}

int emu_verify_cert(const Options& o) {
  CoverCertificate c = certificate_from_json(load(o, 0, "certificate"));
  DiGraph base = c.morphism.target;
  if (!o.base.empty()) {
    Json j = read_json_file(o.base);
    // an automaton stands for its language target
    base = j.contains("initials") ? language_target(automaton_from_json(j)).target : graph_from_json(j);
  }
  Verdict v = verify_certificate(c, base);
  emit(o, {verdict_json(v), {}});
  return verdict_exit(v);
}

// ---- genus ----

UndirectedGraph load_any_graph(const Options& o) {
  Json j = load(o, 0, "graph");
  if (is_undirected_json(j)) return undirected_from_json(j);
  return forget(graph_from_json(j));
}

int genus_exact_verb(const Options& o) {
  UndirectedGraph u = load_any_graph(o);
  if (o.lower_bound_only) {
    emit(o, {{{"lower_bound", euler_lower_bound(u, o.girth)}}, {}});
    return kOk;
  }
  GenusOptions opt;
  opt.force = o.force;
  opt.max_rotations = o.max_rotations;
  GenusResult r = genus_exact(u, opt);
  emit(o, {{{"genus", r.genus}, {"rotation", to_json(u, r.witness)}}, {}});
  return kOk;
}

int genus_planar(const Options& o) {
  UndirectedGraph u = load_any_graph(o);
  PlanarityResult p = is_planar(u);
  Json j{{"planar", p.planar}};
  if (p.witness) j["rotation"] = to_json(u, *p.witness);
  emit(o, {j, {}});
  return p.planar ? kOk : kNegative;
}

int genus_lower_bound(const Options& o) {
  UndirectedGraph u = load_any_graph(o);
  emit(o, {{{"lower_bound", euler_lower_bound(u, o.girth)}, {"girth_floor", o.girth}}, {}});
  return kOk;
}

std::string rational_text(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

int genus_formula_verb(const Options& o) {
  FaceVector f;
  for (const auto& [len, count] : pairs(o.faces, "--face")) {
    try {
      f[std::stoi(len)] += std::stoll(count);
    } catch (const std::exception&) {
      throw DomainError("--face expects length=count with integers");
    }
  }
  emit(o, {{{"m", o.letters}, {"value", rational_text(genus_formula(o.letters, f))}}, {}});
  return kOk;
}

int genus_invariance(const Options& o) {
  DiGraph g = graph_from_json(load(o, 0, "graph"));
  GenusOptions opt;
  opt.force = o.force;
  opt.max_rotations = o.max_rotations;
  InvarianceReport r = genus_invariance_suite(g, opt);
  Json j{{"g", r.g}, {"g_op", r.g_op}, {"g_R", r.g_r}, {"g_Exc", r.g_exc}, {"g_U", r.g_u}, {"equal", r.equal}};
  if (!r.equal) j["counterexample"] = r.counterexample;
  emit(o, {j, {}});
  return r.equal ? kOk : kNegative;
}

int genus_language(const Options& o) {
  Automaton a = automaton_from_json(load(o, 0, "automaton"));
  LanguageGenusResult r;
  if (!o.certificate.empty()) {
    r = language_genus_from_certificate(a, o.genus, certificate_from_json(read_json_file(o.certificate)));
  } else {
    CoverSearchSpec bounds;
    bounds.max_fiber = o.max_fiber;
    bounds.time_budget_seconds = default_time_budget(o);
    bounds.jobs = o.jobs;
    r = language_genus_leq(a, o.genus, bounds);
  }
  Json j{{"verdict", to_string(r.verdict)}, {"n", o.genus}, {"max_fiber", o.max_fiber}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    j["witness_genus"] = r.witness_genus;
  }
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  emit(o, {j, r.witness ? to_dot(*r.witness, "witness") : std::string()});
  switch (r.verdict) {
    case LanguageVerdict::yes: return kOk;
    case LanguageVerdict::no_within_bounds: return kNegative;
    case LanguageVerdict::budget: return kBudget;
  }
  return kNegative;
}

// ---- corpus ----

int corpus_list(const Options& o) {
  Json j = Json::array();
  for (const auto& e : corpus_entries()) j.push_back({{"name", e.name}, {"file", e.file}, {"description", e.description}});
  emit(o, {j, {}});
  return kOk;
}

int corpus_emit(const Options& o) {
  std::vector<std::string> names = o.files;
  if (names.empty()) throw DomainError("corpus emit needs a name (or 'all' with --dir)");
  if (names.size() == 1 && names[0] == "all") {
    names.clear();
    for (const auto& e : corpus_entries()) names.push_back(e.name);
  }
  if (!o.dir.empty()) {
    std::filesystem::create_directories(o.dir);
    for (const auto& n : names) {
      const CorpusEntry& e = corpus_entry(n);
      std::ofstream f(std::filesystem::path(o.dir) / e.file);
      if (!f) throw DomainError("cannot write into '" + o.dir + "'");
      f << dump(corpus_json(n));
    }
    return kOk;
  }
  if (names.size() != 1) throw DomainError("several names need --dir");
  emit(o, {corpus_json(names[0]), {}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regulus: directed emulators, automatic relations and the genus of regular languages"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-o,--output", o.output, "Write JSON here instead of stdout");
  app.add_flag("--dot", o.dot, "Also emit DOT (to stdout after the JSON, or to OUTPUT.dot)");
  app.add_option("--jobs", o.jobs, "Worker count for searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for randomised verbs");

  std::function<int()> action;
  auto verb = [&](CLI::App* group, const std::string& name, const std::string& help, std::function<int()> f) {
    CLI::App* sub = group->add_subcommand(name, help);
    sub->add_option("files", o.files, "Input files");
    sub->callback([&action, f] { action = f; });
    return sub;
  };

  auto* graph = app.add_subcommand("graph", "Functors on digraphs")->require_subcommand(1);
  verb(graph, "simplify", "R(G) with its quotient map", [&] { return graph_simplify(o); });
  verb(graph, "excise", "Remove every loop", [&] { return graph_unary(o, excise, "Exc"); });
  verb(graph, "op", "Reverse every edge", [&] { return graph_unary(o, opposite, "op"); });
  verb(graph, "forget", "Underlying undirected graph", [&] { return graph_forget(o); });
  verb(graph, "bidirect", "Bidirection of an undirected graph", [&] { return graph_bidirect(o); });
  verb(graph, "contract", "Contract a directed cycle", [&] { return graph_contract(o); })
      ->add_option("--cycle", o.cycle, "Edge ids of the cycle, in order")
      ->delimiter(',');
  verb(graph, "pullback", "Fibre product of two morphisms with a common target", [&] { return graph_pullback(o); });
  verb(graph, "reach", "Reachability sets", [&] { return graph_reach(o); });

  auto* sa = app.add_subcommand("sa", "Semi-automata")->require_subcommand(1);
  verb(sa, "tautological", "Label every edge by itself", [&] { return sa_tautological(o); });
  verb(sa, "relabel", "Apply a letter map", [&] { return sa_relabel(o); })
      ->add_option("--alpha", o.alpha, "from=to pairs")
      ->delimiter(',');
  verb(sa, "check", "Determinism and completeness", [&] { return sa_check(o); });

  auto* au = app.add_subcommand("auto", "Automata")->require_subcommand(1);
  verb(au, "accept", "Does the automaton accept a word", [&] { return auto_accept(o); })
      ->add_option("--word", o.word, "Space-separated letters");
  verb(au, "sample", "All accepted words up to a length", [&] { return auto_sample(o); })
      ->add_option("--max-length", o.max_length)
      ->check(CLI::NonNegativeNumber);
  verb(au, "minimize", "Minimal automaton", [&] { return auto_minimize(o); });
  verb(au, "complete", "Add a trash state", [&] { return auto_complete(o); });
  verb(au, "graph", "Graph of the minimal automaton", [&] { return auto_graph(o); });
  verb(au, "from-cover", "Automaton from a cover of Exc(R(G(A_min)))", [&] { return auto_from_cover(o); });
  verb(au, "equal", "Language equality", [&] { return auto_equal(o); });

  auto* rel = app.add_subcommand("rel", "Automatic relations")->require_subcommand(1);
  verb(rel, "check", "Is the relation automatic", [&] { return rel_check(o); });
  verb(rel, "quotient", "Quotient graph and canonical map", [&] { return rel_quotient(o); });
  verb(rel, "canonical", "Relation induced by an emulator", [&] { return rel_canonical(o); });
  verb(rel, "factorize", "Emulator as quotient then isomorphism", [&] { return rel_factorize(o); });
  verb(rel, "mn", "Labelled refinement fixpoint", [&] { return rel_mn(o); })
      ->add_option("--final", o.finals, "Comma-separated vertex set; repeat for a family");
  verb(rel, "final-systems", "Minimal complete final system", [&] { return rel_final_systems(o); });
  verb(rel, "join", "Least upper bound", [&] { return rel_lattice(o, join); });
  verb(rel, "meet", "Greatest lower bound", [&] { return rel_lattice(o, meet); });
  verb(rel, "max", "Coarsest automatic relation", [&] { return rel_max(o); });

  auto* emu = app.add_subcommand("emu", "Emulators and covers")->require_subcommand(1);
  verb(emu, "check", "Directed or undirected emulator", [&] { return emu_check(o, false); });
  verb(emu, "check-cover", "Directed or undirected cover", [&] { return emu_check(o, true); });
  verb(emu, "extract", "Cover inside an emulator", [&] { return emu_extract(o); });
  verb(emu, "extend", "Extend over an excision", [&] { return emu_extend(o); });
  verb(emu, "lift", "Directed emulator from an undirected one and a direction", [&] { return emu_lift(o); });
  auto* search = verb(emu, "search", "Bounded search for a low-genus cover", [&] { return emu_search(o); });
  search->add_option("--max-fiber", o.max_fiber)->check(CLI::PositiveNumber);
  search->add_option("--genus", o.genus)->check(CLI::NonNegativeNumber);
  search->add_option("--time", o.time_budget, "Seconds (default REGULUS_BUDGET or 60)");
  search->add_flag("--all-components", o.all_components, "Allow disconnected covers");
  verb(emu, "verify-cert", "Check a cover certificate", [&] { return emu_verify_cert(o); })
      ->add_option("--base", o.base, "Base graph, or an automaton to check against its language target");

  auto* gen = app.add_subcommand("genus", "Genus computations")->require_subcommand(1);
  auto* exact = verb(gen, "exact", "Exact genus with a rotation witness", [&] { return genus_exact_verb(o); });
  exact->add_flag("--force", o.force, "Ignore the rotation budget");
  exact->add_option("--max-rotations", o.max_rotations);
  exact->add_flag("--lower-bound-only", o.lower_bound_only, "Only the Euler bound");
  exact->add_option("--girth", o.girth)->check(CLI::PositiveNumber);
  verb(gen, "planar", "Planarity with a witness", [&] { return genus_planar(o); });
  verb(gen, "lower-bound", "Euler lower bound", [&] { return genus_lower_bound(o); })
      ->add_option("--girth", o.girth)
      ->check(CLI::PositiveNumber);
  auto* formula = verb(gen, "formula", "Genus from a face vector", [&] { return genus_formula_verb(o); });
  formula->add_option("--m", o.letters, "Out-degree / letter count")->check(CLI::PositiveNumber);
  formula->add_option("--face", o.faces, "length=count")->delimiter(',');
  auto* inv = verb(gen, "invariance", "Genus under op, R, Exc and U", [&] { return genus_invariance(o); });
  inv->add_flag("--force", o.force);
  inv->add_option("--max-rotations", o.max_rotations);
  auto* lang = verb(gen, "language", "Is the language genus at most n", [&] { return genus_language(o); });
  lang->add_option("--n", o.genus)->check(CLI::NonNegativeNumber);
  lang->add_option("--max-fiber", o.max_fiber)->check(CLI::PositiveNumber);
  lang->add_option("--time", o.time_budget, "Seconds (default REGULUS_BUDGET or 60)");
  lang->add_option("--certificate", o.certificate, "Use this cover certificate instead of searching");

  auto* corpus = app.add_subcommand("corpus", "Built-in fixtures")->require_subcommand(1);
  verb(corpus, "list", "Names and descriptions", [&] { return corpus_list(o); });
  verb(corpus, "emit", "Write a fixture ('all' with --dir for every one)", [&] { return corpus_emit(o); })
      ->add_option("--dir", o.dir, "Directory for the suggested file names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  try {
    return action ? action() : kInput;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
