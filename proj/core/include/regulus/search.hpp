#pragma once

#include <optional>
#include <string>

#include "regulus/genus.hpp"
#include "regulus/morphism.hpp"

namespace regulus {

struct CoverSearchSpec {
  DiGraph base;
  int max_fiber = 1;
  int genus_bound = 0;
  bool connected_only = true;
  double time_budget_seconds = 60.0;
  int jobs = 1;
  // Exact genus is attempted on a candidate only within these limits.
  int exact_max_vertices = 14;
  double exact_max_rotations = 1e8;
};

struct CoverCertificate {
  DiGraph total;
  GraphMorphism morphism;  // total -> base
  RotationSystem rotation;  // on forget(total)
  int genus = 0;
};

enum class SearchOutcome { found, exhausted, budget_exceeded };

struct SearchStats {
  long long fiber_vectors = 0;
  long long pruned_vectors = 0;  // rejected by the a-priori Euler bound
  long long nodes = 0;
  long long leaves = 0;
};

struct CoverSearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<CoverCertificate> certificate;
  std::string reason;
  SearchStats stats;
};

// Throws DomainError on an empty base or a non-positive fibre bound.
CoverSearchResult search_covers(const CoverSearchSpec& spec);

// Morphism is a cover onto `base`, rotation is valid and traces to the stated genus.
Verdict verify_certificate(const CoverCertificate& cert, const DiGraph& base);

const char* to_string(SearchOutcome o);

}  // namespace regulus
