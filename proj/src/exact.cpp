#include "gencol/exact.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "gencol/errors.hpp"
#include "gencol/paths.hpp"
#include "gencol/reach.hpp"

namespace gencol {

namespace {

std::uint64_t resolve_limit(const Graph& g, const ExactBudget& budget, const char* op) {
  if (budget.node_limit != 0) return budget.node_limit;
  if (g.vertex_count() > kExactSizeCap)
    throw InputError(std::string(op) + ": graph exceeds the exact-size cap of " +
                     std::to_string(kExactSizeCap) + " vertices; raise the node budget to force");
  return kDefaultNodeLimit;
}

LinearOrder bfs_seed_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Vertex> seq;
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      seq.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return LinearOrder::from_sequence(seq);
}

LinearOrder peel_order(const Graph& g) {
  // min-degree peeling; first-removed vertex gets the largest rank
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<bool> gone(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removal;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    gone[pick] = true;
    removal.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!gone[w]) --deg[w];
  }
  std::reverse(removal.begin(), removal.end());
  return LinearOrder::from_sequence(removal);
}

enum class Objective { kWcol, kCol, kAdm };

int evaluate(const Graph& g, const LinearOrder& order, int r, Objective obj) {
  switch (obj) {
    case Objective::kWcol:
      return eval_wcol(g, order, r);
    case Objective::kCol:
      return eval_col(g, order, r);
    default:
      return eval_adm(g, order, r);
  }
}

// Exact orbit pruning for trees. Candidates that the automorphism group of
// the placed-coloured tree maps onto each other open value-identical
// subtrees; one representative per class suffices. Equality is decided by
// AHU canonical codes of the whole tree (rooted at its centre, placed
// vertices coloured by placement position, the candidate marked), which is a
// complete isomorphism invariant for rooted coloured trees.
class TreeOrbitFilter {
 public:
  TreeOrbitFilter(const Graph& g) : g_(g), n_(g.vertex_count()) {
    usable_ = n_ >= 2 && g.edge_count() == n_ - 1 && g.is_connected();
    if (!usable_) return;
    find_centers();
    // root at center1 via BFS; center2 (if any) sits directly below it
    parent_.assign(n_, -1);
    children_.assign(n_, {});
    std::deque<Vertex> queue{center1_};
    std::vector<bool> seen(n_, false);
    seen[center1_] = true;
    bottom_up_.clear();
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      bottom_up_.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          parent_[w] = u;
          children_[u].push_back(w);
          queue.push_back(w);
        }
      }
    }
    std::reverse(bottom_up_.begin(), bottom_up_.end());
  }

  bool usable() const { return usable_; }

  // Recomputes base codes for the current colouring. color difference only
  // matters through the callback: 0 = unplaced, otherwise unique per vertex.
  template <typename ColorFn>
  void prepare(ColorFn color) {
    table_.clear();
    code_.assign(n_, -1);
    child_codes_.assign(n_, {});
    for (Vertex v : bottom_up_) {
      auto& kids = child_codes_[v];
      for (Vertex c : children_[v])
        if (!(v == center1_ && c == center2_)) kids.push_back(code_[c]);
      std::sort(kids.begin(), kids.end());
      code_[v] = intern(color(v), kids);
    }
    if (center2_ != -1) {
      std::vector<int> top{code_[center1_], code_[center2_]};
      std::sort(top.begin(), top.end());
      root_code_ = intern(kVirtualRoot, top);
    } else {
      root_code_ = code_[center1_];
    }
  }

  // Canonical code of the tree with candidate x re-coloured by the marker.
  template <typename ColorFn>
  int signature(Vertex x, ColorFn color) {
    int fresh = intern(kMark, child_codes_[x]);
    Vertex cur = x;
    while (true) {
      if (cur == center1_ || cur == center2_) break;
      Vertex p = parent_[cur];
      std::vector<int> kids = child_codes_[p];
      auto it = std::lower_bound(kids.begin(), kids.end(), code_[cur]);
      kids.erase(it);
      kids.insert(std::upper_bound(kids.begin(), kids.end(), fresh), fresh);
      fresh = intern(color(p), kids);
      cur = p;
    }
    if (center2_ == -1) return fresh;
    std::vector<int> top{fresh, cur == center1_ ? code_[center2_] : code_[center1_]};
    std::sort(top.begin(), top.end());
    return intern(kVirtualRoot, top);
  }

 private:
  static constexpr int kMark = -1;
  static constexpr int kVirtualRoot = -2;

  void find_centers() {
    std::vector<int> degree(n_);
    std::vector<Vertex> frontier;
    for (Vertex v = 0; v < n_; ++v) {
      degree[v] = g_.degree(v);
      if (degree[v] <= 1) frontier.push_back(v);
    }
    int remaining = n_;
    std::vector<bool> gone(n_, false);
    while (remaining > 2) {
      std::vector<Vertex> next;
      for (Vertex v : frontier) {
        gone[v] = true;
        --remaining;
        for (Vertex w : g_.neighbors(v))
          if (!gone[w] && --degree[w] == 1) next.push_back(w);
      }
      frontier = std::move(next);
    }
    std::vector<Vertex> centers;
    for (Vertex v = 0; v < n_; ++v)
      if (!gone[v]) centers.push_back(v);
    center1_ = centers[0];
    center2_ = centers.size() > 1 ? centers[1] : -1;
  }

  int intern(int color, const std::vector<int>& kids) {
    key_.clear();
    key_.push_back(color);
    key_.insert(key_.end(), kids.begin(), kids.end());
    auto [it, added] = table_.try_emplace(key_, static_cast<int>(table_.size()));
    return it->second;
  }

  const Graph& g_;
  int n_;
  bool usable_ = false;
  Vertex center1_ = -1, center2_ = -1;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> bottom_up_;
  std::vector<int> code_;
  std::vector<std::vector<int>> child_codes_;
  int root_code_ = -1;
  std::map<std::vector<int>, int> table_;
  std::vector<int> key_;
};

// Prefix-first branch and bound shared by the three colouring numbers.
class OrderSearch {
 public:
  OrderSearch(const Graph& g, int r, Objective obj, std::uint64_t limit)
      : g_(g), r_(r), obj_(obj), limit_(limit), n_(g.vertex_count()), orbit_(g) {
    placed_.assign(n_, false);
    position_.assign(n_, 0);
    reach_in_.assign(n_, 0);
    adj_placed_.assign(n_, 0);
    near_.assign(n_, std::vector<bool>(n_, false));
    for (Vertex u = 0; u < n_; ++u) {
      auto dist = bfs_distances(g_, u);
      for (Vertex v = 0; v < n_; ++v)
        if (dist[v] != -1 && dist[v] <= r_) near_[u][v] = true;
    }
  }

  ExactResult run() {
    // Seed the incumbent with cheap constructive orders.
    ExactResult best;
    best.value = n_ + 1;
    for (const LinearOrder& seed :
         {LinearOrder::identity(n_), peel_order(g_), bfs_seed_order(g_)}) {
      int val = evaluate(g_, seed, r_, obj_);
      if (val < best.value) {
        best.value = val;
        best.witness = seed;
      }
    }
    incumbent_ = best.value;
    witness_ = best.witness;
    if (n_ > 0 && incumbent_ > 1) dfs(0);
    best.value = incumbent_;
    best.witness = witness_;
    best.nodes = nodes_;
    return best;
  }

 private:
  // Returns false when the subtree is exhausted normally; throws on budget.
  void dfs(int depth) {
    if (depth == n_) {
      // Every placement stayed below the incumbent, so this order improves it.
      incumbent_ = running_max_;
      witness_ = LinearOrder::from_sequence(prefix_);
      return;
    }
    Vertex last = depth > 0 ? prefix_.back() : -1;
    auto color = [&](Vertex v) { return placed_[v] ? position_[v] : 0; };
    bool orbits = orbit_.usable();
    if (orbits) orbit_.prepare(color);
    std::set<int> seen_signatures;
    for (Vertex x = 0; x < n_; ++x) {
      if (placed_[x]) continue;
      // Dominance: adjacent placements that no short path connects commute,
      // so only the id-ascending one is explored.
      if (last != -1 && x < last && !near_[x][last]) continue;
      if (orbits && !seen_signatures.insert(orbit_.signature(x, color)).second) continue;
      if (++nodes_ > limit_)
        throw ResourceError("order search node budget exhausted", 1, incumbent_);

      int count = place_count(x);
      if (count >= incumbent_) continue;

      placed_[x] = true;
      position_[x] = depth + 1;
      prefix_.push_back(x);
      int saved_max = running_max_;
      running_max_ = std::max(running_max_, count);
      std::vector<Vertex> touched = commit(x);

      if (!forced_violation(touched)) dfs(depth + 1);

      undo(x, touched);
      running_max_ = saved_max;
      prefix_.pop_back();
      placed_[x] = false;
    }
  }

  // Final reach count of x if placed now; exact for all three objectives
  // since smaller-ranked vertices are all known.
  int place_count(Vertex x) {
    switch (obj_) {
      case Objective::kWcol:
        return 1 + reach_in_[x];
      case Objective::kCol:
        return 1 + strong_endpoints(x);
      default:
        return 1 + packing_value(x);
    }
  }

  // u in Q is strongly reachable from x through a path whose internals all
  // come later than x, i.e. are unplaced right now.
  int strong_endpoints(Vertex x) {
    std::vector<int> dist(n_, -1);
    dist[x] = 0;
    std::deque<Vertex> queue{x};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (dist[u] >= r_ - 1) continue;
      for (Vertex w : g_.neighbors(u))
        if (dist[w] == -1 && !placed_[w]) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    int cnt = 0;
    for (Vertex u = 0; u < n_; ++u) {
      if (!placed_[u]) continue;
      for (Vertex y : g_.neighbors(u)) {
        if (dist[y] != -1 && dist[y] <= r_ - 1) {
          ++cnt;
          break;
        }
      }
    }
    return cnt;
  }

  int packing_value(Vertex x) {
    if (r_ == 0) return 0;
    std::vector<bool> inner(n_, false), targets(n_, false);
    for (Vertex u = 0; u < n_; ++u) {
      if (u == x) continue;
      if (placed_[u])
        targets[u] = true;
      else
        inner[u] = true;
    }
    return max_disjoint_paths(g_, x, inner, targets, r_);
  }

  // Bookkeeping after placing x: x's weak-reach ball through the unplaced
  // region feeds the forced counts of future placements.
  std::vector<Vertex> commit(Vertex x) {
    std::vector<Vertex> touched;
    if (obj_ == Objective::kWcol) {
      std::vector<int> dist(n_, -1);
      dist[x] = 0;
      std::deque<Vertex> queue{x};
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (dist[u] >= r_) continue;
        for (Vertex w : g_.neighbors(u)) {
          if (dist[w] == -1 && !placed_[w]) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
            reach_in_[w] += 1;
            touched.push_back(w);
          }
        }
      }
    } else {
      for (Vertex w : g_.neighbors(x)) {
        if (!placed_[w]) {
          adj_placed_[w] += 1;
          touched.push_back(w);
        }
      }
    }
    return touched;
  }

  void undo(Vertex x, const std::vector<Vertex>& touched) {
    if (obj_ == Objective::kWcol) {
      for (Vertex w : touched) reach_in_[w] -= 1;
    } else {
      for (Vertex w : touched) adj_placed_[w] -= 1;
    }
    (void)x;
  }

  // If an unplaced vertex is already forced to reach incumbent-many
  // vertices, no completion of this prefix can improve the incumbent.
  bool forced_violation(const std::vector<Vertex>& touched) const {
    if (obj_ == Objective::kWcol) {
      for (Vertex w : touched)
        if (!placed_[w] && 1 + reach_in_[w] >= incumbent_) return true;
    } else {
      for (Vertex w : touched)
        if (!placed_[w] && 1 + adj_placed_[w] >= incumbent_) return true;
    }
    return false;
  }

  const Graph& g_;
  int r_;
  Objective obj_;
  std::uint64_t limit_;
  int n_;
  std::uint64_t nodes_ = 0;
  int incumbent_ = 0;
  int running_max_ = 0;
  LinearOrder witness_;
  std::vector<bool> placed_;
  std::vector<int> position_;    // placement index, 1-based
  std::vector<int> reach_in_;    // wcol: placed vertices that weakly reach v
  std::vector<int> adj_placed_;  // col/adm: placed neighbours of v
  std::vector<Vertex> prefix_;
  std::vector<std::vector<bool>> near_;
  TreeOrbitFilter orbit_;
};

ExactResult solve(const Graph& g, int r, Objective obj, ExactBudget budget, const char* op) {
  if (r < 0) throw InputError("negative radius");
  std::uint64_t limit = resolve_limit(g, budget, op);
  if (g.vertex_count() == 0) return {0, LinearOrder(), 0};
  OrderSearch search(g, r, obj, limit);
  return search.run();
}

}  // namespace

ExactResult wcol_exact(const Graph& g, int r, ExactBudget budget) {
  return solve(g, r, Objective::kWcol, budget, "wcol_exact");
}

ExactResult col_exact(const Graph& g, int r, ExactBudget budget) {
  return solve(g, r, Objective::kCol, budget, "col_exact");
}

ExactResult adm_exact(const Graph& g, int r, ExactBudget budget) {
  return solve(g, r, Objective::kAdm, budget, "adm_exact");
}

int degeneracy(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<bool> gone(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  int worst = 0;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    worst = std::max(worst, deg[pick]);
    gone[pick] = true;
    for (Vertex w : g.neighbors(pick))
      if (!gone[w]) --deg[w];
  }
  return worst;
}

namespace {

// Neighbourhood of v in the graph where `eliminated` has been processed:
// everything outside the eliminated set reachable from v through it.
std::uint64_t eliminated_neighborhood(const Graph& g, std::uint64_t eliminated, Vertex v) {
  std::uint64_t result = 0;
  std::uint64_t visited = 1ULL << v;
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (visited & (1ULL << w)) continue;
      visited |= 1ULL << w;
      if (eliminated & (1ULL << w))
        queue.push_back(w);
      else
        result |= 1ULL << w;
    }
  }
  return result;
}

struct TwSolver {
  const Graph& g;
  std::uint64_t limit;
  std::uint64_t nodes = 0;
  std::uint64_t full;
  std::unordered_map<std::uint64_t, int> memo;

  int solve(std::uint64_t eliminated) {
    if (eliminated == full) return 0;
    auto it = memo.find(eliminated);
    if (it != memo.end()) return it->second;
    if (++nodes > limit) throw ResourceError("treewidth search budget exhausted", 0, g.vertex_count() - 1);
    int best = g.vertex_count();  // upper sentinel
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (eliminated & (1ULL << v)) continue;
      int deg = std::popcount(eliminated_neighborhood(g, eliminated, v));
      if (deg >= best) continue;
      int rest = solve(eliminated | (1ULL << v));
      best = std::min(best, std::max(deg, rest));
    }
    memo[eliminated] = best;
    return best;
  }
};

}  // namespace

EliminationResult treewidth_small(const Graph& g, ExactBudget budget) {
  std::uint64_t limit = resolve_limit(g, budget, "treewidth_small");
  int n = g.vertex_count();
  if (n > 60) throw InputError("treewidth_small supports at most 60 vertices");
  EliminationResult out;
  if (n == 0) return out;
  TwSolver solver{g, limit, 0, (n == 64 ? ~0ULL : (1ULL << n) - 1)};
  out.width = solver.solve(0);
  // Recover one optimal elimination order from the memo table.
  std::uint64_t eliminated = 0;
  while (eliminated != solver.full) {
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated & (1ULL << v)) continue;
      int deg = std::popcount(eliminated_neighborhood(g, eliminated, v));
      std::uint64_t next = eliminated | (1ULL << v);
      int rest = solver.solve(next);
      if (std::max(deg, rest) <= out.width) {
        out.elimination.push_back(v);
        eliminated = next;
        break;
      }
    }
  }
  out.nodes = solver.nodes;
  return out;
}

namespace {

struct TdSolver {
  const Graph& g;
  std::uint64_t limit;
  std::uint64_t nodes = 0;
  std::unordered_map<std::uint64_t, int> memo;

  std::vector<std::uint64_t> components(std::uint64_t mask) const {
    std::vector<std::uint64_t> comps;
    std::uint64_t remaining = mask;
    while (remaining) {
      Vertex s = std::countr_zero(remaining);
      std::uint64_t comp = 0;
      std::deque<Vertex> queue{s};
      comp |= 1ULL << s;
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
          std::uint64_t bit = 1ULL << w;
          if ((mask & bit) && !(comp & bit)) {
            comp |= bit;
            queue.push_back(w);
          }
        }
      }
      comps.push_back(comp);
      remaining &= ~comp;
    }
    return comps;
  }

  int depth(std::uint64_t mask) {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    if (++nodes > limit) throw ResourceError("treedepth search budget exhausted", 1, g.vertex_count());
    int result;
    auto comps = components(mask);
    if (comps.size() > 1) {
      result = 0;
      for (std::uint64_t c : comps) result = std::max(result, depth(c));
    } else if (std::popcount(mask) == 1) {
      result = 1;
    } else {
      result = g.vertex_count();
      std::uint64_t rest = mask;
      while (rest) {
        Vertex v = std::countr_zero(rest);
        rest &= rest - 1;
        result = std::min(result, 1 + depth(mask & ~(1ULL << v)));
      }
    }
    memo[mask] = result;
    return result;
  }
};

}  // namespace

int treedepth_small(const Graph& g, ExactBudget budget) {
  std::uint64_t limit = resolve_limit(g, budget, "treedepth_small");
  int n = g.vertex_count();
  if (n > 60) throw InputError("treedepth_small supports at most 60 vertices");
  if (n == 0) return 0;
  TdSolver solver{g, limit};
  return solver.depth(n == 64 ? ~0ULL : (1ULL << n) - 1);
}

bool biclique_bruteforce(const BipartiteGraph& bg, int k) {
  if (k < 1) throw InputError("biclique size must be >= 1");
  int n = bg.graph.vertex_count();
  if (n > 62) throw InputError("biclique_bruteforce supports at most 62 vertices");
  auto a = bg.side_vertices(1);
  auto b = bg.side_vertices(2);
  if (a.size() > b.size()) std::swap(a, b);
  if (static_cast<int>(a.size()) < k) return false;

  std::vector<std::uint64_t> nbr(n, 0);
  for (auto [u, v] : bg.graph.edges()) {
    nbr[u] |= 1ULL << v;
    nbr[v] |= 1ULL << u;
  }
  int s = static_cast<int>(a.size());
  std::vector<int> idx(k);
  // lexicographic k-subsets of the smaller side
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t common = ~0ULL;
    for (int i = 0; i < k; ++i) common &= nbr[a[idx[i]]];
    if (std::popcount(common) >= k) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == s - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return false;
}

ChainDiagnostic chain_diagnostic(const Graph& g, int r, ExactBudget budget) {
  if (r < 1) throw InputError("radius must be >= 1");
  ChainDiagnostic d;
  d.adm = adm_exact(g, r, budget).value;
  d.col = col_exact(g, r, budget).value;
  long long base = std::max(0, d.adm - 2);
  long long factor = std::max(0, d.adm - 1);
  long long pow = 1;
  for (int i = 0; i < r - 1; ++i) pow *= base;
  d.rhs = factor * pow + 1;
  d.holds = d.col <= d.rhs;
  return d;
}

}  // namespace gencol
