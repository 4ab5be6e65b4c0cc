#include "regulus/search.hpp"

#include <chrono>

#include "regulus/emulation.hpp"
#include "regulus/functors.hpp"

namespace regulus {

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::exhausted: return "exhausted";
    case SearchOutcome::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

Verdict verify_certificate(const CoverCertificate& cert, const DiGraph& base) {
  if (!(cert.morphism.target == base)) return Verdict::fail("certificate morphism does not target the base graph");
  if (!(cert.morphism.source == cert.total)) return Verdict::fail("certificate morphism does not start at the total graph");
  if (auto v = is_directed_cover(cert.morphism); !v) return Verdict::fail("not a directed cover: " + v.violation);
  UndirectedGraph u = forget(cert.total);
  if (auto v = validate_rotation(u, cert.rotation); !v) return Verdict::fail("bad rotation: " + v.violation);
  int traced = trace_faces(u, cert.rotation).genus;
  if (traced != cert.genus)
    return Verdict::fail("rotation traces to genus " + std::to_string(traced) + ", certificate claims " +
                         std::to_string(cert.genus));
  return Verdict::pass();
}

namespace {

using Clock = std::chrono::steady_clock;

class CoverSearch {
 public:
  explicit CoverSearch(const CoverSearchSpec& spec) : spec_(spec), g_(spec.base), start_(Clock::now()) {
    const int n = g_.num_vertices();
    bool loops = false;
    for (int e = 0; e < g_.num_edges(); ++e) loops = loops || g_.is_loop(e);
    floor_ = loops ? 1 : (girth(forget(g_)).value_or(3) >= 3 ? 3 : 2);
    min_out_ = n ? g_.num_edges() : 0;
    for (int v = 0; v < n; ++v) min_out_ = std::min<int>(min_out_, static_cast<int>(g_.out_edges(v).size()));
  }

  CoverSearchResult run() {
    const int n = g_.num_vertices();
    const int m = spec_.max_fiber;
    // Fibre-size vectors by total size, then lexicographically.
    for (int total = n; total <= n * m && !stop_; ++total) {
      std::vector<int> k(n, 1);
      enumerate_vectors(k, 0, total - n);
    }
    if (result_.certificate) result_.outcome = SearchOutcome::found;
    else if (timed_out_ || unknown_leaf_) result_.outcome = SearchOutcome::budget_exceeded;
    else result_.outcome = SearchOutcome::exhausted;
    if (timed_out_) result_.reason = "time budget exhausted";
    else if (!result_.certificate && unknown_leaf_) result_.reason = "some candidate covers exceeded the exact-genus limits";
    return std::move(result_);
  }

 private:
  void enumerate_vectors(std::vector<int>& k, int pos, int extra) {
    if (stop_) return;
    const int n = g_.num_vertices();
    if (pos == n) {
      if (extra == 0) try_vector(k);
      return;
    }
    int room = spec_.max_fiber - 1;
    for (int add = 0; add <= std::min(room, extra); ++add) {
      k[pos] = 1 + add;
      enumerate_vectors(k, pos + 1, extra - add);
      if (stop_) return;
    }
    k[pos] = 1;
  }

  void try_vector(const std::vector<int>& k) {
    ++result_.stats.fiber_vectors;
    long long V = 0, E = 0;
    for (int u = 0; u < g_.num_vertices(); ++u) {
      V += k[u];
      E += static_cast<long long>(k[u]) * static_cast<long long>(g_.out_edges(u).size());
    }
    // Every component of a cover of a graph with all out-degrees positive contains a cycle.
    if (min_out_ >= 1) {
      Rational b = euler_bound_value(V, E, floor_);
      if (b > Rational(spec_.genus_bound)) {
        ++result_.stats.pruned_vectors;
        return;
      }
    }
    k_ = k;
    offset_.assign(g_.num_vertices() + 1, 0);
    for (int u = 0; u < g_.num_vertices(); ++u) offset_[u + 1] = offset_[u] + k[u];
    used_.assign(g_.num_vertices(), 0);
    base_of_.assign(V, -1);
    target_.assign(V, std::vector<int>());
    queue_.clear();
    partial_ = UndirectedGraph();
    for (int x = 0; x < V; ++x) partial_.add_vertex(std::to_string(x));
    for (int u = 0; u < g_.num_vertices(); ++u)
      for (int i = 0; i < k[u]; ++i) {
        base_of_[offset_[u] + i] = u;
        target_[offset_[u] + i].assign(g_.out_edges(u).size(), -1);
      }
    touch(0);
    descend(0, 0);
  }

  int touch(int u) {
    int x = offset_[u] + used_[u]++;
    queue_.push_back(x);
    return x;
  }

  bool out_of_time() {
    if ((++result_.stats.nodes & 1023) == 0) {
      double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > spec_.time_budget_seconds) timed_out_ = stop_ = true;
    }
    return stop_;
  }

  // Decision point: queue_[head]'s out-edge `slot`.
  void descend(std::size_t head, std::size_t slot) {
    if (out_of_time()) return;
    if (head == queue_.size()) {
      int next = -1;
      for (int u = 0; u < g_.num_vertices() && next == -1; ++u)
        if (used_[u] < k_[u]) next = u;
      if (next == -1) {
        leaf();
        return;
      }
      touch(next);
      descend(head, 0);
      --used_[next];
      queue_.pop_back();
      return;
    }
    int x = queue_[head];
    int u = base_of_[x];
    auto outs = g_.out_edges(u);
    if (slot == outs.size()) {
      descend(head + 1, 0);
      return;
    }
    int e = outs[slot];
    int v = g_.dst(e);
    int limit = std::min(used_[v], k_[v] - 1);
    for (int t = 0; t <= limit && !stop_; ++t) {
      bool fresh = t == used_[v];
      int y = fresh ? touch(v) : offset_[v] + t;
      target_[x][slot] = y;
      partial_.add_edge(std::to_string(partial_.num_edges()), x, y);
      if (!prune()) descend(head, slot + 1);
      partial_.pop_edge();
      target_[x][slot] = -1;
      if (fresh) {
        --used_[v];
        queue_.pop_back();
      }
    }
  }

  bool prune() {
    if (spec_.genus_bound == 0) {
      const long long V = partial_.num_vertices(), E = partial_.num_edges();
      if (E < 9) return false;
      if (floor_ >= 3 && E > 3 * V - 6) return true;
      return !is_planar(partial_).planar;
    }
    return euler_lower_bound(partial_, floor_) > spec_.genus_bound;
  }

  void leaf() {
    ++result_.stats.leaves;
    DiGraph total;
    const int V = static_cast<int>(base_of_.size());
    std::vector<int> vmap(V), emap;
    for (int x = 0; x < V; ++x) {
      int u = base_of_[x];
      total.add_vertex(g_.vertex_id(u) + "#" + std::to_string(x - offset_[u]));
      vmap[x] = u;
    }
    for (int x = 0; x < V; ++x) {
      int u = base_of_[x];
      auto outs = g_.out_edges(u);
      for (std::size_t s = 0; s < outs.size(); ++s) {
        total.add_edge(g_.edge_id(outs[s]) + "#" + std::to_string(x - offset_[u]), x, target_[x][s]);
        emap.push_back(outs[s]);
      }
    }
    if (spec_.connected_only) {
      int comps = 0;
      weak_components(total, &comps);
      if (comps > 1) return;
    }
    GraphMorphism phi{total, g_, vmap, emap};
    UndirectedGraph u = forget(total);
    std::optional<GenusResult> genus;
    if (auto p = is_planar(u); p.planar) {
      genus = GenusResult{0, *p.witness};
    } else if (spec_.genus_bound > 0) {
      if (u.num_vertices() <= spec_.exact_max_vertices || rotation_count(u) <= spec_.exact_max_rotations) {
        try {
          GenusOptions opt;
          opt.max_rotations = std::max(spec_.exact_max_rotations, 1e9);
          opt.force = u.num_vertices() <= spec_.exact_max_vertices;
          double left = spec_.time_budget_seconds - std::chrono::duration<double>(Clock::now() - start_).count();
          opt.time_limit_seconds = std::max(left, 1e-3);
          genus = genus_exact(u, opt);
        } catch (const BudgetError&) {
          unknown_leaf_ = true;
        }
      } else {
        unknown_leaf_ = true;
      }
    }
    if (genus && genus->genus <= spec_.genus_bound) {
      result_.certificate = CoverCertificate{total, std::move(phi), genus->witness, genus->genus};
      stop_ = true;
    }
  }

  const CoverSearchSpec& spec_;
  const DiGraph& g_;
  Clock::time_point start_;
  int floor_ = 3;
  int min_out_ = 0;
  std::vector<int> k_, offset_, used_, base_of_, queue_;
  std::vector<std::vector<int>> target_;
  UndirectedGraph partial_;
  CoverSearchResult result_;
  bool stop_ = false;
  bool timed_out_ = false;
  bool unknown_leaf_ = false;
};

}  // namespace

CoverSearchResult search_covers(const CoverSearchSpec& spec) {
  if (spec.base.num_vertices() == 0) throw DomainError("search_covers: empty base graph");
  if (spec.max_fiber < 1) throw DomainError("search_covers: max_fiber must be at least 1");
  if (spec.genus_bound < 0) throw DomainError("search_covers: genus bound must be non-negative");
  return CoverSearch(spec).run();
}

}  // namespace regulus
