#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regulus/automaton.hpp"
#include "regulus/genus.hpp"
#include "regulus/search.hpp"

namespace regulus {

struct InvarianceReport {
  int g = 0, g_op = 0, g_r = 0, g_exc = 0, g_u = 0;
  bool equal = true;
  std::string counterexample;  // first functor whose genus differs
};

// Genus of G, op(G), R(G), Exc(G) and U(G). BudgetError propagates.
InvarianceReport genus_invariance_suite(const DiGraph& g, const GenusOptions& options = {});

// Exc(R(G(A_min))) for a deterministic single-input automaton, after trimming
// and completing it.
struct LanguageTarget {
  Automaton prepared;  // accessible, complete
  Automaton minimal;
  DiGraph target;
};
LanguageTarget language_target(const Automaton& a);

enum class LanguageVerdict { yes, no_within_bounds, budget };
const char* to_string(LanguageVerdict v);

struct LanguageGenusResult {
  LanguageVerdict verdict = LanguageVerdict::no_within_bounds;
  std::optional<Automaton> witness;
  std::optional<CoverCertificate> certificate;
  int witness_genus = -1;
  std::string reason;
  SearchStats stats;
};

// Searches for a directed cover of genus <= n of Exc(R(G(A_min))) within the
// fibre and time bounds of `bounds` (its base is ignored) and turns it into a
// deterministic automaton with the same language. no_within_bounds is not a
// proof that the language genus exceeds n.
LanguageGenusResult language_genus_leq(const Automaton& a, int n, const CoverSearchSpec& bounds);

// Same, but with the cover supplied from outside instead of searched for.
// PreconditionError when the certificate does not verify against the target.
LanguageGenusResult language_genus_from_certificate(const Automaton& a, int n, const CoverCertificate& cert);

// Injective morphism small -> big of simple loopless digraphs, if one exists.
std::optional<GraphMorphism> find_monomorphism(const DiGraph& small, const DiGraph& big);

struct MonotonicityReport {
  bool subgraph = false;  // Exc R G(L2) embeds in Exc R G(L1)
  bool disjoint_alphabets = false;
  int bound_l1 = -1;  // least genus n <= max_genus with a cover found, -1 if none
  int bound_l2 = -1;
  int bound_union = -1;  // only for disjoint alphabets
  int transferred_l2 = -1;  // genus of the L2 cover pulled back from L1's
  std::vector<std::string> notes;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Subgraph and disjoint-union monotonicity on small automata: covers found for
// the bigger graph are pulled back along the embedding and checked to give
// covers of no larger genus recognising the smaller language.
MonotonicityReport genus_monotonicity_checks(const Automaton& l1, const Automaton& l2, const CoverSearchSpec& bounds,
                                             int max_genus = 1);

}  // namespace regulus
