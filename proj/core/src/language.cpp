#include "regulus/language.hpp"

#include <algorithm>
#include <set>

#include "regulus/emulation.hpp"
#include "regulus/functors.hpp"

namespace regulus {

InvarianceReport genus_invariance_suite(const DiGraph& g, const GenusOptions& options) {
  InvarianceReport r;
  r.g = genus_exact(g, options).genus;
  r.g_op = genus_exact(opposite(g), options).genus;
  r.g_r = genus_exact(simplify(g).graph, options).genus;
  r.g_exc = genus_exact(excise(g), options).genus;
  r.g_u = genus_exact(forget(g), options).genus;
  const std::pair<const char*, int> named[] = {{"op", r.g_op}, {"R", r.g_r}, {"Exc", r.g_exc}, {"U", r.g_u}};
  for (auto [name, value] : named)
    if (value != r.g && r.equal) {
      r.equal = false;
      r.counterexample = std::string(name) + ": genus " + std::to_string(value) + " vs " + std::to_string(r.g);
    }
  return r;
}

LanguageTarget language_target(const Automaton& a) {
  if (auto v = check_deterministic(a.semi); !v) throw PreconditionError("language genus: " + v.violation);
  if (a.initials.size() != 1) throw PreconditionError("language genus: expected exactly one initial state");
  LanguageTarget t{complete_with_trash(accessible_part(a)), {}, {}};
  t.minimal = minimize(t.prepared).amin;
  t.target = excise(simplify(t.minimal.graph()).graph);
  return t;
}

const char* to_string(LanguageVerdict v) {
  switch (v) {
    case LanguageVerdict::yes: return "yes";
    case LanguageVerdict::no_within_bounds: return "no_within_bounds";
    case LanguageVerdict::budget: return "budget";
  }
  return "?";
}

namespace {

// Turns a verified cover into the witness automaton and re-derives its genus.
// same policy as the search leaves: small graphs are always solved, under the time budget
GenusOptions witness_options(const CoverSearchSpec& b, const UndirectedGraph& u) {
  GenusOptions opt;
  opt.max_rotations = std::max(1e9, b.exact_max_rotations);
  opt.force = u.num_vertices() <= b.exact_max_vertices;
  opt.time_limit_seconds = b.time_budget_seconds;
  return opt;
}

void finish_with_cover(LanguageGenusResult& out, const Automaton& original, const LanguageTarget& t, int n,
                       const CoverCertificate& cert, const CoverSearchSpec& bounds) {
  Automaton w = automaton_from_cover(t.prepared, cert.morphism);
  if (!languages_equal(w, original)) throw std::logic_error("language genus: witness language differs");
  UndirectedGraph u = forget(w.graph());
  if (auto p = is_planar(u); p.planar) {
    out.witness_genus = 0;
  } else {
    try {
      out.witness_genus = genus_exact(u, witness_options(bounds, u)).genus;
    } catch (const BudgetError& e) {
      out.verdict = LanguageVerdict::budget;
      out.reason = std::string("witness genus could not be re-verified: ") + e.what();
      out.certificate = cert;
      out.witness = std::move(w);
      return;
    }
  }
  if (out.witness_genus > n)
    throw std::logic_error("language genus: witness has genus " + std::to_string(out.witness_genus));
  out.verdict = LanguageVerdict::yes;
  out.certificate = cert;
  out.witness = std::move(w);
}

}  // namespace

LanguageGenusResult language_genus_leq(const Automaton& a, int n, const CoverSearchSpec& bounds) {
  if (n < 0) throw DomainError("language genus: n must be non-negative");
  LanguageTarget t = language_target(a);
  CoverSearchSpec spec = bounds;
  spec.base = t.target;
  spec.genus_bound = n;
  CoverSearchResult s = search_covers(spec);
  LanguageGenusResult out;
  out.stats = s.stats;
  out.reason = s.reason;
  switch (s.outcome) {
    case SearchOutcome::found:
      finish_with_cover(out, a, t, n, *s.certificate, bounds);
      break;
    case SearchOutcome::exhausted:
      out.verdict = LanguageVerdict::no_within_bounds;
      if (out.reason.empty())
        out.reason = "no directed cover of genus <= " + std::to_string(n) + " with fibres of size <= " +
                     std::to_string(bounds.max_fiber);
      break;
    case SearchOutcome::budget_exceeded:
      out.verdict = LanguageVerdict::budget;
      break;
  }
  return out;
}

LanguageGenusResult language_genus_from_certificate(const Automaton& a, int n, const CoverCertificate& cert) {
  LanguageTarget t = language_target(a);
  if (auto v = verify_certificate(cert, t.target); !v) throw PreconditionError("certificate rejected: " + v.violation);
  if (cert.genus > n)
    throw PreconditionError("certificate has genus " + std::to_string(cert.genus) + " > " + std::to_string(n));
  LanguageGenusResult out;
  finish_with_cover(out, a, t, n, cert, CoverSearchSpec{});
  return out;
}

std::optional<GraphMorphism> find_monomorphism(const DiGraph& small, const DiGraph& big) {
  if (!small.is_simple() || !big.is_simple()) throw PreconditionError("find_monomorphism: graphs must be simple");
  const int n = small.num_vertices(), m = big.num_vertices();
  if (n > m || small.num_edges() > big.num_edges()) return std::nullopt;
  std::vector<std::vector<int>> adj(m, std::vector<int>(m, -1));
  for (int e = 0; e < big.num_edges(); ++e) adj[big.src(e)][big.dst(e)] = e;
  std::vector<int> vmap(n, -1);
  std::vector<bool> used(m, false);
  auto fits = [&](int v) {
    for (int e : small.out_edges(v))
      if (int w = small.dst(e); w <= v && adj[vmap[v]][vmap[w]] < 0) return false;
    for (int e : small.in_edges(v))
      if (int w = small.src(e); w < v && adj[vmap[w]][vmap[v]] < 0) return false;
    return true;
  };
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < m; ++c) {
      if (used[c]) continue;
      vmap[v] = c;
      used[c] = true;
      if (fits(v) && self(self, v + 1)) return true;
      used[c] = false;
    }
    vmap[v] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  std::vector<int> emap(small.num_edges());
  for (int e = 0; e < small.num_edges(); ++e) emap[e] = adj[vmap[small.src(e)]][vmap[small.dst(e)]];
  return GraphMorphism{small, big, vmap, emap};
}

namespace {

struct Found {
  int genus = -1;
  std::optional<CoverCertificate> cert;
};

Found least_genus_cover(const DiGraph& target, const CoverSearchSpec& bounds, int max_genus) {
  CoverSearchSpec spec = bounds;
  spec.base = target;
  for (int n = 0; n <= max_genus; ++n) {
    spec.genus_bound = n;
    CoverSearchResult s = search_covers(spec);
    if (s.certificate) return {s.certificate->genus, s.certificate};
  }
  return {};
}

int genus_of(const DiGraph& g, const CoverSearchSpec& bounds) {
  UndirectedGraph u = forget(g);
  if (is_planar(u).planar) return 0;
  return genus_exact(u, witness_options(bounds, u)).genus;
}

// Pulls a cover of `big` back along emb: small -> big and checks the result.
int transfer(const GraphMorphism& emb, const CoverCertificate& cert, const Automaton& lang, const LanguageTarget& t,
             const std::string& label, const CoverSearchSpec& bounds, MonotonicityReport& r) {
  Pullback pb = pullback(emb, cert.morphism);
  if (auto v = is_directed_cover(pb.pi1); !v) {
    r.failures.push_back(label + ": pulled-back morphism is not a cover: " + v.violation);
    return -1;
  }
  int g = genus_of(pb.graph, bounds);
  if (g > cert.genus)
    r.failures.push_back(label + ": pulled-back cover has genus " + std::to_string(g) + " > " +
                         std::to_string(cert.genus));
  Automaton w = automaton_from_cover(t.prepared, pb.pi1);
  if (!languages_equal(w, lang)) r.failures.push_back(label + ": pulled-back automaton changes the language");
  return g;
}

}  // namespace

MonotonicityReport genus_monotonicity_checks(const Automaton& l1, const Automaton& l2, const CoverSearchSpec& bounds,
                                             int max_genus) {
  MonotonicityReport r;
  LanguageTarget t1 = language_target(l1), t2 = language_target(l2);
  Found f1 = least_genus_cover(t1.target, bounds, max_genus);
  Found f2 = least_genus_cover(t2.target, bounds, max_genus);
  r.bound_l1 = f1.genus;
  r.bound_l2 = f2.genus;

  if (auto emb = find_monomorphism(t2.target, t1.target)) {
    r.subgraph = true;
    if (f1.cert) {
      r.transferred_l2 = transfer(*emb, *f1.cert, l2, t2, "subgraph", bounds, r);
      if (r.bound_l2 < 0 || r.bound_l2 > r.transferred_l2)
        r.notes.push_back("search bound for L2 is weaker than the transferred cover");
    } else {
      r.notes.push_back("no cover of L1 within bounds, nothing to transfer");
    }
  }

  std::set<std::string> s1(l1.semi.alphabet.begin(), l1.semi.alphabet.end());
  r.disjoint_alphabets = std::none_of(l2.semi.alphabet.begin(), l2.semi.alphabet.end(),
                                      [&](const std::string& x) { return s1.count(x) > 0; });
  if (r.disjoint_alphabets) {
    Automaton u = union_automaton(l1, l2);
    LanguageTarget tu = language_target(u);
    Found fu = least_genus_cover(tu.target, bounds, max_genus);
    r.bound_union = fu.genus;
    const std::pair<const LanguageTarget*, const Automaton*> parts[] = {{&t1, &l1}, {&t2, &l2}};
    for (int i = 0; i < 2; ++i) {
      const auto& [t, lang] = parts[i];
      std::string label = "union part " + std::to_string(i + 1);
      auto emb = find_monomorphism(t->target, tu.target);
      if (!emb) {
        r.failures.push_back(label + ": graph does not embed in the union's graph");
        continue;
      }
      if (fu.cert) {
        int g = transfer(*emb, *fu.cert, *lang, *t, label, bounds, r);
        if (g > fu.genus) r.failures.push_back(label + ": genus exceeds the union's");
      }
    }
  }
  return r;
}

}  // namespace regulus
