#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regulus/error.hpp"
#include "regulus/graph.hpp"

namespace regulus {

// Edge-ends ("darts") of an undirected graph: 2e is the end at end_a(e),
// 2e+1 the end at end_b(e). A loop contributes both darts to one vertex.
inline int dart(int edge, int end) { return 2 * edge + end; }
inline int dart_edge(int d) { return d / 2; }
inline int dart_mate(int d) { return d ^ 1; }
int dart_vertex(const UndirectedGraph& g, int d);

// Cyclic order of the darts at every vertex.
struct RotationSystem {
  std::vector<std::vector<int>> rotation;
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

// Every dart appears exactly once, at its own vertex.
Verdict validate_rotation(const UndirectedGraph& g, const RotationSystem& rot);

// Dart tokens "e+" (end a) and "e-" (end b).
std::string dart_token(const UndirectedGraph& g, int d);
int parse_dart_token(const UndirectedGraph& g, const std::string& token);
std::map<std::string, std::vector<std::string>> rotation_to_ids(const UndirectedGraph& g, const RotationSystem& rot);
RotationSystem rotation_from_ids(const UndirectedGraph& g, const std::map<std::string, std::vector<std::string>>& ids);

using FaceVector = std::map<int, long long>;  // face length -> count

struct FaceTrace {
  FaceVector faces;
  int num_faces = 0;
  int genus = 0;  // summed over connected components
};

// Faces are the orbits of d |-> σ(θ(d)). DomainError on an invalid rotation.
FaceTrace trace_faces(const UndirectedGraph& g, const RotationSystem& rot);

struct GenusOptions {
  double max_rotations = 1e9;  // product of (deg-1)! over the reduced graph
  bool force = false;
  double time_limit_seconds = 0;  // 0: none; BudgetError once exceeded
};

struct GenusResult {
  int genus = 0;
  RotationSystem witness;
};

// Minimum genus over all rotation systems. Loops, parallel edges and pendant
// trees are set aside first and re-inserted into the witness. BudgetError when
// the reduced graph exceeds the rotation budget and force is off.
GenusResult genus_exact(const UndirectedGraph& g, const GenusOptions& options = {});
GenusResult genus_exact(const DiGraph& g, const GenusOptions& options = {});

// Product of max(1, (deg-1)!) over the reduced graph used by genus_exact.
double rotation_count(const UndirectedGraph& g);

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> witness;  // genus-0 rotation when planar
};

PlanarityResult is_planar(const UndirectedGraph& g);
PlanarityResult is_planar(const DiGraph& g);

using Rational = boost::rational<long long>;

// ceil(1 - V/2 + E(γ-2)/(2γ)) per component that is not a tree, clamped at 0
// and summed. PreconditionError when the graph has a cycle shorter than γ.
int euler_lower_bound(const UndirectedGraph& g, int girth_floor);
// The unclamped rational value for a connected graph with the given counts.
Rational euler_bound_value(long long vertices, long long edges, int girth_floor);

// 1 + Σ_i f_i (i(m-1) - 2m) / (4m).
Rational genus_formula(int m, const FaceVector& f);

}  // namespace regulus
