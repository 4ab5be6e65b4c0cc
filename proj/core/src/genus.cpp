#include "regulus/genus.hpp"

#include <algorithm>
#include <chrono>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <cmath>
#include <set>

#include "regulus/functors.hpp"

namespace regulus {

int dart_vertex(const UndirectedGraph& g, int d) {
  return (d & 1) ? g.end_b(dart_edge(d)) : g.end_a(dart_edge(d));
}

Verdict validate_rotation(const UndirectedGraph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.rotation.size()) != g.num_vertices())
    return Verdict::fail("rotation has " + std::to_string(rot.rotation.size()) + " vertex lists for " +
                         std::to_string(g.num_vertices()) + " vertices");
  std::vector<int> seen(2 * g.num_edges(), 0);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int d : rot.rotation[v]) {
      if (d < 0 || d >= 2 * g.num_edges()) return Verdict::fail("unknown edge-end at '" + g.vertex_id(v) + "'");
      if (dart_vertex(g, d) != v)
        return Verdict::fail("edge-end " + dart_token(g, d) + " listed at '" + g.vertex_id(v) + "' but belongs elsewhere");
      if (seen[d]++) return Verdict::fail("edge-end " + dart_token(g, d) + " listed twice");
    }
  for (int d = 0; d < 2 * g.num_edges(); ++d)
    if (!seen[d]) return Verdict::fail("edge-end " + dart_token(g, d) + " missing");
  return Verdict::pass();
}

std::string dart_token(const UndirectedGraph& g, int d) { return g.edge_id(dart_edge(d)) + ((d & 1) ? "-" : "+"); }

int parse_dart_token(const UndirectedGraph& g, const std::string& token) {
  if (token.size() < 2) throw DomainError("bad edge-end token '" + token + "'");
  char sign = token.back();
  // U+2212 is accepted as a minus sign too.
  std::string id = token.substr(0, token.size() - 1);
  int end;
  if (sign == '+') end = 0;
  else if (sign == '-') end = 1;
  else if (token.size() > 3 && token.compare(token.size() - 3, 3, "\xE2\x88\x92") == 0) {
    id = token.substr(0, token.size() - 3);
    end = 1;
  } else {
    throw DomainError("bad edge-end token '" + token + "'");
  }
  return dart(g.edge(id), end);
}

std::map<std::string, std::vector<std::string>> rotation_to_ids(const UndirectedGraph& g, const RotationSystem& rot) {
  std::map<std::string, std::vector<std::string>> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto& list = out[g.vertex_id(v)];
    for (int d : rot.rotation[v]) list.push_back(dart_token(g, d));
  }
  return out;
}

RotationSystem rotation_from_ids(const UndirectedGraph& g, const std::map<std::string, std::vector<std::string>>& ids) {
  RotationSystem rot;
  rot.rotation.resize(g.num_vertices());
  for (const auto& [v, list] : ids) {
    int x = g.vertex(v);
    for (const auto& t : list) rot.rotation[x].push_back(parse_dart_token(g, t));
  }
  return rot;
}

namespace {

std::vector<int> successor_map(const UndirectedGraph& g, const RotationSystem& rot) {
  std::vector<int> sigma(2 * g.num_edges(), -1);
  for (const auto& list : rot.rotation)
    for (std::size_t i = 0; i < list.size(); ++i) sigma[list[i]] = list[(i + 1) % list.size()];
  return sigma;
}

}  // namespace

FaceTrace trace_faces(const UndirectedGraph& g, const RotationSystem& rot) {
  if (auto v = validate_rotation(g, rot); !v) throw DomainError("invalid rotation system: " + v.violation);
  auto sigma = successor_map(g, rot);
  const int darts = 2 * g.num_edges();
  std::vector<bool> seen(darts, false);
  FaceTrace t;
  for (int d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    int len = 0;
    for (int x = d; !seen[x]; x = sigma[dart_mate(x)]) {
      seen[x] = true;
      ++len;
    }
    ++t.faces[len];
    ++t.num_faces;
  }
  int comps = 0;
  components(g, &comps);
  // Isolated vertices bound one face each.
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.incident_edges(v).empty()) ++t.num_faces;
  int twice = 2 * comps - g.num_vertices() + g.num_edges() - t.num_faces;
  t.genus = twice / 2;
  return t;
}

namespace {

// Loops, parallel copies and pendant trees set aside from a graph, leaving a
// simple core of minimum degree 2 on the same vertex set.
struct Reduction {
  UndirectedGraph core;
  std::vector<int> core_to_edge;
  std::vector<int> loops;
  std::vector<std::pair<int, int>> parallels;  // (extra, representative)
  std::vector<int> pendants;
};

Reduction reduce(const UndirectedGraph& g, bool prune_pendants) {
  Reduction r;
  std::vector<bool> kept(g.num_edges(), false);
  std::map<std::pair<int, int>, int> rep;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) {
      r.loops.push_back(e);
      continue;
    }
    std::pair<int, int> key = std::minmax(g.end_a(e), g.end_b(e));
    auto [it, fresh] = rep.emplace(key, e);
    if (fresh) kept[e] = true;
    else r.parallels.emplace_back(e, it->second);
  }
  if (prune_pendants) {
    std::vector<int> degree(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e)
      if (kept[e]) ++degree[g.end_a(e)], ++degree[g.end_b(e)];
    std::vector<int> queue;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (degree[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      if (degree[v] != 1) continue;
      for (int e : g.incident_edges(v))
        if (kept[e]) {
          kept[e] = false;
          r.pendants.push_back(e);
          int w = g.other_end(e, v);
          --degree[v];
          if (--degree[w] == 1) queue.push_back(w);
          break;
        }
    }
  }
  for (const auto& v : g.vertex_ids()) r.core.add_vertex(v);
  for (int e = 0; e < g.num_edges(); ++e)
    if (kept[e]) {
      r.core.add_edge(g.edge_id(e), g.end_a(e), g.end_b(e));
      r.core_to_edge.push_back(e);
    }
  return r;
}

// Lifts a rotation of the core to the whole graph without changing the genus.
RotationSystem restore(const UndirectedGraph& g, const Reduction& r, const RotationSystem& core_rot) {
  RotationSystem rot;
  rot.rotation.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int cd : core_rot.rotation[v]) rot.rotation[v].push_back(dart(r.core_to_edge[dart_edge(cd)], cd & 1));
  auto dart_at = [&](int e, int v) { return g.end_a(e) == v ? dart(e, 0) : dart(e, 1); };
  for (int e : r.pendants) {
    rot.rotation[g.end_a(e)].push_back(dart(e, 0));
    rot.rotation[g.end_b(e)].push_back(dart(e, 1));
  }
  // A parallel copy goes right after its representative at one end and right
  // before it at the other, bounding a digon.
  for (auto [x, e] : r.parallels) {
    int u = g.end_a(e), v = g.end_b(e);
    auto& lu = rot.rotation[u];
    lu.insert(std::find(lu.begin(), lu.end(), dart(e, 0)) + 1, dart_at(x, u));
    auto& lv = rot.rotation[v];
    lv.insert(std::find(lv.begin(), lv.end(), dart(e, 1)), dart_at(x, v));
  }
  for (int l : r.loops) {
    auto& list = rot.rotation[g.end_a(l)];
    list.push_back(dart(l, 0));
    list.push_back(dart(l, 1));
  }
  return rot;
}

long long ceil_rational(const Rational& q) {
  long long n = q.numerator(), d = q.denominator();
  return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

// Branch and bound over rotations of a connected simple graph of minimum
// degree 2 (or a single vertex).
class RotationSearch {
 public:
  using Clock = std::chrono::steady_clock;

  RotationSearch(const UndirectedGraph& g, double time_limit) : g_(g), darts_(2 * g.num_edges()) {
    if (time_limit > 0)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(time_limit));
    gamma_ = girth(g).value_or(3);
    order_vertices();
    sigma_.assign(darts_, -1);
    closed_.assign(darts_, false);
  }

  GenusResult solve() {
    const int V = g_.num_vertices(), E = g_.num_edges();
    RotationSystem rot;
    rot.rotation.resize(V);
    if (E == 0) return {0, rot};
    long long lower = std::max(0LL, ceil_rational(euler_bound_value(V, E, gamma_)));
    long long upper = (E - V + 1) / 2;
    for (long long genus = lower; genus <= upper; ++genus) {
      target_ = static_cast<int>(2 - V + E - 2 * genus);
      if (search(0, 0, 0)) {
        for (int v = 0; v < V; ++v) rot.rotation[v] = best_[v];
        return {trace_faces(g_, rot).genus, rot};
      }
    }
    throw std::logic_error("rotation search found no embedding");
  }

 private:
  void order_vertices() {
    const int V = g_.num_vertices();
    std::vector<int> assigned_nbrs(V, 0);
    std::vector<bool> used(V, false);
    for (int step = 0; step < V; ++step) {
      int best = -1;
      for (int v = 0; v < V; ++v) {
        if (used[v]) continue;
        if (best == -1 || assigned_nbrs[v] > assigned_nbrs[best] ||
            (assigned_nbrs[v] == assigned_nbrs[best] && g_.degree(v) > g_.degree(best)))
          best = v;
      }
      used[best] = true;
      order_.push_back(best);
      for (int e : g_.incident_edges(best)) ++assigned_nbrs[g_.other_end(e, best)];
    }
    darts_at_.resize(V);
    for (int v = 0; v < V; ++v)
      for (int e : g_.incident_edges(v)) darts_at_[v].push_back(g_.end_a(e) == v ? dart(e, 0) : dart(e, 1));
    assigned_.assign(V, false);
    best_.resize(V);
  }

  // Closes every face through a newly defined φ-value; returns faces closed and
  // appends their darts to `marked`.
  int close_faces(int v, std::vector<int>& marked, int& closed_darts) {
    int faces = 0;
    for (int x : darts_at_[v]) {
      int d = dart_mate(x);  // φ(d) = σ(x) is now defined
      if (closed_[d]) continue;
      int len = 0, y = d;
      do {
        int m = dart_mate(y);
        if (!assigned_[dart_vertex(g_, m)]) break;
        y = sigma_[m];
        ++len;
      } while (y != d);
      if (y != d) continue;
      ++faces;
      y = d;
      do {
        closed_[y] = true;
        marked.push_back(y);
        y = sigma_[dart_mate(y)];
      } while (y != d);
      closed_darts += len;
    }
    return faces;
  }

  // Open faces already known to run through more than γ darts: every face
  // holding a chain of length L is at least that long, so the surplus
  // L - γ is unavailable for further faces.
  int chain_excess() const {
    int excess = 0;
    for (int d = 0; d < darts_; ++d) {
      if (closed_[d] || assigned_[dart_vertex(g_, d)]) continue;
      int len = 1, y = d;
      while (assigned_[dart_vertex(g_, dart_mate(y))]) {
        y = sigma_[dart_mate(y)];
        ++len;
      }
      excess += std::max(0, len - gamma_);
    }
    return excess;
  }

  bool search(std::size_t depth, int faces, int closed_darts) {
    if (depth == order_.size()) return faces >= target_;
    if (deadline_ && (++nodes_ & 1023) == 0 && Clock::now() > *deadline_)
      throw BudgetError("genus_exact: time limit reached");
    int v = order_[depth];
    std::vector<int> perm(darts_at_[v].begin() + 1, darts_at_[v].end());
    std::sort(perm.begin(), perm.end());
    const int first = darts_at_[v].front();
    assigned_[v] = true;
    bool found = false;
    do {
      if (depth == 0 && perm.size() >= 2 && perm.front() > perm.back()) continue;
      int prev = first;
      for (int d : perm) {
        sigma_[prev] = d;
        prev = d;
      }
      sigma_[prev] = first;
      std::vector<int> marked;
      int cd = closed_darts;
      int f = faces + close_faces(v, marked, cd);
      if (f + (darts_ - cd - chain_excess()) / gamma_ >= target_ && search(depth + 1, f, cd)) found = true;
      for (int d : marked) closed_[d] = false;
      if (found) {
        best_[v].assign(1, first);
        best_[v].insert(best_[v].end(), perm.begin(), perm.end());
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    assigned_[v] = false;
    return found;
  }

  const UndirectedGraph& g_;
  int darts_;
  std::optional<Clock::time_point> deadline_;
  long long nodes_ = 0;
  int gamma_ = 3;
  int target_ = 0;
  std::vector<int> order_;
  std::vector<std::vector<int>> darts_at_;
  std::vector<bool> assigned_;
  std::vector<int> sigma_;
  std::vector<bool> closed_;
  std::vector<std::vector<int>> best_;
};

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double rotation_count(const UndirectedGraph& g) {
  Reduction r = reduce(g, true);
  double total = 1;
  for (int v = 0; v < r.core.num_vertices(); ++v) total *= std::max(1.0, factorial(r.core.degree(v) - 1));
  return total;
}

GenusResult genus_exact(const UndirectedGraph& g, const GenusOptions& options) {
  Reduction r = reduce(g, true);
  if (!options.force) {
    double count = rotation_count(r.core);
    if (count > options.max_rotations)
      throw BudgetError("genus_exact: about " + std::to_string(count) +
                        " rotation systems exceed the budget; use the lower-bound operations or force");
  }
  int ncomp = 0;
  auto comp = components(r.core, &ncomp);
  RotationSystem core_rot;
  core_rot.rotation.resize(g.num_vertices());
  int genus = 0;
  for (int c = 0; c < ncomp; ++c) {
    UndirectedGraph part;
    std::vector<int> local(g.num_vertices(), -1), global_v;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (comp[v] == c) {
        local[v] = part.add_vertex(r.core.vertex_id(v));
        global_v.push_back(v);
      }
    std::vector<int> global_e;
    for (int e = 0; e < r.core.num_edges(); ++e)
      if (comp[r.core.end_a(e)] == c) {
        part.add_edge(r.core.edge_id(e), local[r.core.end_a(e)], local[r.core.end_b(e)]);
        global_e.push_back(e);
      }
    if (part.num_edges() == 0) continue;
    GenusResult sub = RotationSearch(part, options.time_limit_seconds).solve();
    genus += sub.genus;
    for (int v = 0; v < part.num_vertices(); ++v)
      for (int d : sub.witness.rotation[v]) core_rot.rotation[global_v[v]].push_back(dart(global_e[dart_edge(d)], d & 1));
  }
  RotationSystem rot = restore(g, r, core_rot);
  int traced = trace_faces(g, rot).genus;
  if (traced != genus) throw std::logic_error("genus_exact: restored witness has genus " + std::to_string(traced));
  return {genus, std::move(rot)};
}

GenusResult genus_exact(const DiGraph& g, const GenusOptions& options) { return genus_exact(forget(g), options); }

PlanarityResult is_planar(const UndirectedGraph& g) {
  using namespace boost;
  using Graph = adjacency_list<vecS, vecS, undirectedS, no_property, property<edge_index_t, int>>;
  Reduction r = reduce(g, false);
  const UndirectedGraph& core = r.core;
  Graph bg(core.num_vertices());
  for (int e = 0; e < core.num_edges(); ++e) add_edge(core.end_a(e), core.end_b(e), e, bg);
  using Edge = graph_traits<Graph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(num_vertices(bg));
  PlanarityResult out;
  if (core.num_vertices() == 0) {
    out.planar = true;
    out.witness = RotationSystem{};
    return out;
  }
  out.planar = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                            boyer_myrvold_params::embedding = &embedding[0]);
  if (!out.planar) return out;
  auto eindex = get(edge_index, bg);
  RotationSystem core_rot;
  core_rot.rotation.resize(core.num_vertices());
  for (int v = 0; v < core.num_vertices(); ++v)
    for (const Edge& be : embedding[v]) {
      int e = get(eindex, be);
      core_rot.rotation[v].push_back(core.end_a(e) == v ? dart(e, 0) : dart(e, 1));
    }
  RotationSystem rot = restore(g, r, core_rot);
  if (trace_faces(g, rot).genus != 0) throw std::logic_error("is_planar: planar embedding did not trace to genus 0");
  out.witness = std::move(rot);
  return out;
}

PlanarityResult is_planar(const DiGraph& g) { return is_planar(forget(g)); }

Rational euler_bound_value(long long vertices, long long edges, int girth_floor) {
  return Rational(1) - Rational(vertices, 2) + Rational(edges * (girth_floor - 2), 2LL * girth_floor);
}

int euler_lower_bound(const UndirectedGraph& g, int girth_floor) {
  if (girth_floor < 1) throw DomainError("girth floor must be at least 1");
  if (auto gam = girth(g); gam && *gam < girth_floor)
    throw PreconditionError("euler_lower_bound: graph has a cycle of length " + std::to_string(*gam) +
                            " below the floor " + std::to_string(girth_floor));
  int ncomp = 0;
  auto comp = components(g, &ncomp);
  std::vector<long long> nv(ncomp, 0), ne(ncomp, 0);
  for (int v = 0; v < g.num_vertices(); ++v) ++nv[comp[v]];
  for (int e = 0; e < g.num_edges(); ++e) ++ne[comp[g.end_a(e)]];
  long long total = 0;
  for (int c = 0; c < ncomp; ++c) {
    if (ne[c] < nv[c]) continue;  // tree
    total += std::max(0LL, ceil_rational(euler_bound_value(nv[c], ne[c], girth_floor)));
  }
  return static_cast<int>(total);
}

Rational genus_formula(int m, const FaceVector& f) {
  if (m < 1) throw DomainError("genus_formula: m must be at least 1");
  Rational g(1);
  for (const auto& [i, count] : f) g += Rational(count) * Rational(i * (m - 1) - 2 * m, 4 * m);
  return g;
}

}  // namespace regulus
