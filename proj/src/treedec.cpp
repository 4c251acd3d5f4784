#include "gencol/treedec.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gencol/errors.hpp"
#include "gencol/reach.hpp"
#include "gencol/rng.hpp"

namespace gencol {

namespace {

std::vector<Vertex> sorted_diff(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

bool TreeDecomposition::is_smooth() const {
  for (auto [c, p] : tree_edges()) {
    if (sorted_diff(bags[c], bags[p]).size() > 1) return false;
    if (sorted_diff(bags[p], bags[c]).size() > 1) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> TreeDecomposition::tree_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t < node_count(); ++t)
    if (parent[t] != -1) out.push_back({t, parent[t]});
  return out;
}

namespace {

bool tree_structure_ok(const TreeDecomposition& td, std::string& why) {
  int b = td.node_count();
  if (b == 0) {
    why = "decomposition has no nodes";
    return false;
  }
  if (static_cast<int>(td.parent.size()) != b) {
    why = "parent array size mismatch";
    return false;
  }
  if (td.root < 0 || td.root >= b || td.parent[td.root] != -1) {
    why = "root node has no -1 parent entry";
    return false;
  }
  for (int t = 0; t < b; ++t) {
    if (t == td.root) continue;
    if (td.parent[t] < 0 || td.parent[t] >= b) {
      why = "node " + std::to_string(t) + " has an out-of-range parent";
      return false;
    }
  }
  // every node must reach the root through parents without cycles
  for (int t = 0; t < b; ++t) {
    int steps = 0;
    int x = t;
    while (x != td.root && steps <= b) {
      x = td.parent[x];
      ++steps;
    }
    if (x != td.root) {
      why = "parent links of node " + std::to_string(t) + " do not reach the root";
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<int>> adj(td.node_count());
  for (auto [c, p] : td.tree_edges()) {
    adj[c].push_back(p);
    adj[p].push_back(c);
  }
  return adj;
}

// path between two tree nodes (inclusive)
std::vector<int> tree_path(const TreeDecomposition& td, int a, int b) {
  auto adj = tree_adjacency(td);
  std::vector<int> prev(td.node_count(), -2);
  prev[a] = -1;
  std::deque<int> queue{a};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (int w : adj[u])
      if (prev[w] == -2) {
        prev[w] = u;
        queue.push_back(w);
      }
  }
  std::vector<int> path;
  for (int x = b; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

TdValidity validate_td(const Graph& g, const TreeDecomposition& td, int separator_spot_checks,
                       std::uint64_t seed) {
  TdValidity out;
  std::string why;
  if (!tree_structure_ok(td, why)) {
    out.violation = why;
    return out;
  }
  int n = g.vertex_count();
  for (const auto& bag : td.bags) {
    for (Vertex v : bag)
      if (v < 0 || v >= n) {
        out.violation = "bag vertex " + std::to_string(v) + " out of range";
        return out;
      }
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      out.violation = "bags must be sorted duplicate-free lists";
      return out;
    }
  }

  // holder lists in one pass over the bags
  std::vector<std::vector<int>> holders(n);
  for (int t = 0; t < td.node_count(); ++t)
    for (Vertex v : td.bags[t]) holders[v].push_back(t);

  // (i) vertex coverage
  for (Vertex v = 0; v < n; ++v)
    if (holders[v].empty()) {
      out.violation = "vertex " + std::to_string(v) + " is in no bag";
      return out;
    }

  // (ii) edge coverage: collect co-bag pairs once
  std::set<Edge> covered_pairs;
  for (const auto& bag : td.bags)
    for (size_t i = 0; i < bag.size(); ++i)
      for (size_t j = i + 1; j < bag.size(); ++j) covered_pairs.insert({bag[i], bag[j]});
  for (auto [u, v] : g.edges()) {
    if (!covered_pairs.count({u, v})) {
      out.violation = "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is uncovered";
      return out;
    }
  }

  // (iii) the nodes holding each vertex form a subtree
  auto adj = tree_adjacency(td);
  std::vector<int> mark(td.node_count(), -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int t : holders[v]) mark[t] = v;
    std::deque<int> queue{holders[v].front()};
    mark[holders[v].front()] = v + n;  // visited
    size_t reached = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u])
        if (mark[w] == v) {
          mark[w] = v + n;
          ++reached;
          queue.push_back(w);
        }
    }
    if (reached != holders[v].size()) {
      out.violation = "bags containing vertex " + std::to_string(v) + " are not connected";
      return out;
    }
  }

  if (separator_spot_checks > 0) {
    // Random instances of the separator property: removing a bag on the
    // tree path between two nodes must disconnect their bag vertices.
    Rng rng(seed);
    for (int check = 0; check < separator_spot_checks; ++check) {
      int a = static_cast<int>(rng.below(td.node_count()));
      int b = static_cast<int>(rng.below(td.node_count()));
      auto path = tree_path(td, a, b);
      if (path.size() < 3 || td.bags[a].empty() || td.bags[b].empty()) continue;
      int s = path[1 + rng.below(path.size() - 2)];
      Vertex u = td.bags[a][rng.below(td.bags[a].size())];
      Vertex v = td.bags[b][rng.below(td.bags[b].size())];
      const auto& sep = td.bags[s];
      if (std::binary_search(sep.begin(), sep.end(), u) ||
          std::binary_search(sep.begin(), sep.end(), v))
        continue;
      // BFS from u avoiding the separator bag
      std::vector<bool> blocked(n, false);
      for (Vertex x : sep) blocked[x] = true;
      std::vector<bool> seen(n, false);
      seen[u] = true;
      std::deque<Vertex> queue{u};
      while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(x))
          if (!seen[w] && !blocked[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
      if (seen[v]) {
        out.violation = "separator property failed for bag " + std::to_string(s);
        return out;
      }
    }
  }

  out.valid = true;
  out.width = td.width();
  out.smooth = td.is_smooth();
  return out;
}

TreeDecomposition make_smooth(const Graph& g, const TreeDecomposition& td) {
  auto validity = validate_td(g, td);
  if (!validity.valid) throw InputError("make_smooth: invalid decomposition: " + validity.violation);
  if (td.is_smooth()) return td;

  // Contraction phase: fold any bag that is a subset of its tree neighbour.
  std::vector<std::vector<Vertex>> bags = td.bags;
  std::vector<int> parent = td.parent;
  int root = td.root;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < static_cast<int>(bags.size()) && !changed; ++t) {
      if (t == root) continue;
      int p = parent[t];
      bool child_sub = std::includes(bags[p].begin(), bags[p].end(), bags[t].begin(), bags[t].end());
      bool parent_sub = std::includes(bags[t].begin(), bags[t].end(), bags[p].begin(), bags[p].end());
      if (!child_sub && !parent_sub) continue;
      if (parent_sub && !child_sub) bags[p] = bags[t];
      // drop node t, reattach its children to p
      std::vector<std::vector<Vertex>> nb;
      std::vector<int> np;
      std::vector<int> remap(bags.size(), -1);
      for (int x = 0; x < static_cast<int>(bags.size()); ++x) {
        if (x == t) continue;
        remap[x] = static_cast<int>(nb.size());
        nb.push_back(bags[x]);
        np.push_back(parent[x]);
      }
      for (int x = 0; x < static_cast<int>(np.size()); ++x) {
        if (np[x] == t) np[x] = p;
        if (np[x] != -1) np[x] = remap[np[x]];
      }
      bags = std::move(nb);
      parent = std::move(np);
      root = remap[root];
      changed = true;
    }
  }

  // Interpolation phase: walk each edge through one-vertex steps.
  TreeDecomposition out;
  out.bags = bags;
  out.parent = parent;
  out.root = root;
  for (int t = 0; t < static_cast<int>(bags.size()); ++t) {
    if (t == out.root) continue;
    int p = out.parent[t];
    auto drop = sorted_diff(bags[t], bags[p]);  // leave these on the way up
    auto add = sorted_diff(bags[p], bags[t]);
    if (drop.size() <= 1 && add.size() <= 1) continue;
    std::vector<Vertex> current = bags[t];
    int attach_to = p;
    // chain is built from the parent side: p - Y_... - X_... - t
    std::vector<std::vector<Vertex>> chain;
    for (size_t i = 0; i + 1 < drop.size() + add.size(); ++i) {
      // step i from t towards p
      std::vector<Vertex> next = current;
      if (i < drop.size()) {
        next.erase(std::find(next.begin(), next.end(), drop[i]));
      } else {
        next.insert(std::upper_bound(next.begin(), next.end(), add[i - drop.size()]),
                    add[i - drop.size()]);
      }
      chain.push_back(next);
      current = next;
    }
    // append chain nodes, linking t -> chain[0] -> ... -> chain.back() -> p
    int prev = attach_to;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      out.bags.push_back(*it);
      out.parent.push_back(prev);
      prev = static_cast<int>(out.bags.size()) - 1;
    }
    out.parent[t] = prev;
  }
  return out;
}

LinearOrder td_order(const Graph& g, const TreeDecomposition& td) {
  auto validity = validate_td(g, td);
  if (!validity.valid) throw InputError("td_order: invalid decomposition: " + validity.violation);
  if (!validity.smooth) throw InputError("td_order requires a smooth decomposition");

  // root-first traversal positions (children in id order)
  std::vector<std::vector<int>> children(td.node_count());
  for (int t = 0; t < td.node_count(); ++t)
    if (t != td.root) children[td.parent[t]].push_back(t);
  std::vector<int> position(td.node_count(), -1);
  int counter = 0;
  std::deque<int> queue{td.root};
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    position[t] = counter++;
    for (int c : children[t]) queue.push_back(c);
  }

  int n = g.vertex_count();
  std::vector<int> first_pos(n, -1);
  for (int t = 0; t < td.node_count(); ++t)
    for (Vertex v : td.bags[t])
      if (first_pos[v] == -1 || position[t] < first_pos[v]) first_pos[v] = position[t];

  std::vector<Vertex> seq(n);
  for (Vertex v = 0; v < n; ++v) seq[v] = v;
  std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
    if (first_pos[a] != first_pos[b]) return first_pos[a] < first_pos[b];
    return a < b;
  });
  return LinearOrder::from_sequence(seq);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

BinomialCertificate binomial_certificate(const Graph& g, const TreeDecomposition& td, int r) {
  if (r < 1) throw InputError("binomial_certificate requires r >= 1");
  BinomialCertificate cert;
  cert.r = r;
  cert.width = td.width();
  cert.bound = binomial(r + cert.width, cert.width);
  cert.value = eval_wcol(g, td_order(g, td), r);
  if (cert.value > cert.bound)
    throw InvariantError("weak colouring certificate exceeded C(r+k,k): " +
                         std::to_string(cert.value) + " > " + std::to_string(cert.bound));
  return cert;
}

TreeDecomposition td_from_elimination(const Graph& g, const std::vector<Vertex>& elimination) {
  int n = g.vertex_count();
  if (static_cast<int>(elimination.size()) != n)
    throw InputError("elimination order must list every vertex exactly once");
  std::vector<int> elim_index(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = elimination[i];
    g.check_vertex(v);
    if (elim_index[v] != -1) throw InputError("duplicate vertex in elimination order");
    elim_index[v] = i;
  }
  if (n == 0) throw InputError("empty graph has no decomposition");

  // Node k holds the vertex eliminated (n-1-k)-th, so the root (last
  // eliminated) is node 0.
  TreeDecomposition td;
  td.bags.assign(n, {});
  td.parent.assign(n, -1);
  td.root = 0;
  auto node_of = [&](int elim_i) { return n - 1 - elim_i; };

  for (int i = 0; i < n; ++i) {
    Vertex v = elimination[i];
    // neighbours of v after eliminating everything before it: reachable
    // through already-eliminated vertices
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{v};
    seen[v] = true;
    std::vector<Vertex> bag{v};
    int successor = -1;  // earliest-eliminated bag partner
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = true;
        if (elim_index[w] < i) {
          stack.push_back(w);
        } else {
          bag.push_back(w);
          if (successor == -1 || elim_index[w] < successor) successor = elim_index[w];
        }
      }
    }
    std::sort(bag.begin(), bag.end());
    td.bags[node_of(i)] = bag;
    if (i == n - 1) continue;  // root
    // isolated remainder: chain to the next eliminated vertex
    if (successor == -1) successor = i + 1;
    td.parent[node_of(i)] = node_of(successor);
  }
  return td;
}

std::pair<Graph, TreeDecomposition> random_partial_ktree(int k, int n, Rng& rng,
                                                         std::uint64_t keep_num,
                                                         std::uint64_t keep_den) {
  if (k < 1) throw InputError("k must be >= 1");
  if (n < k + 1) throw InputError("a k-tree needs at least k+1 vertices");

  // bags[t] is the (k+1)-clique created at step t; node 0 is the root clique
  TreeDecomposition td;
  std::vector<Vertex> base(k + 1);
  for (int i = 0; i <= k; ++i) base[i] = i;
  td.bags.push_back(base);
  td.parent.push_back(-1);
  td.root = 0;

  std::set<Edge> edges;
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) edges.insert({u, v});

  // cliques[i] = (k-subset of some bag, node that contains it)
  std::vector<std::pair<std::vector<Vertex>, int>> cliques;
  for (int drop = 0; drop <= k; ++drop) {
    std::vector<Vertex> c;
    for (int i = 0; i <= k; ++i)
      if (i != drop) c.push_back(base[i]);
    cliques.push_back({c, 0});
  }

  for (Vertex v = k + 1; v < n; ++v) {
    auto [clique, host] = cliques[rng.below(cliques.size())];
    std::vector<Vertex> bag = clique;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(bag);
    td.parent.push_back(host);
    int node = static_cast<int>(td.bags.size()) - 1;
    for (Vertex u : clique) edges.insert({std::min(u, v), std::max(u, v)});
    for (size_t drop = 0; drop < bag.size(); ++drop) {
      std::vector<Vertex> c;
      for (size_t i = 0; i < bag.size(); ++i)
        if (i != drop) c.push_back(bag[i]);
      cliques.push_back({c, node});
    }
  }

  std::vector<Edge> kept;
  for (const Edge& e : edges)
    if (rng.chance(keep_num, keep_den)) kept.push_back(e);
  return {Graph(n, kept), td};
}

}  // namespace gencol
