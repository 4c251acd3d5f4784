#include "gencol/extremal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "gencol/errors.hpp"

namespace gencol {

namespace {

long long sat_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > std::numeric_limits<long long>::max()) return std::numeric_limits<long long>::max();
  return static_cast<long long>(p);
}

long long sat_add(long long a, long long b) {
  if (a > std::numeric_limits<long long>::max() - b) return std::numeric_limits<long long>::max();
  return a + b;
}

// node count and leaf count of the construction tree for parameters (k', r')
struct SizePair {
  long long nodes;
  long long leaves;
};

SizePair size_rec(int k, int r, long long c, std::map<std::pair<int, int>, SizePair>& memo) {
  auto key = std::make_pair(k, r);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  SizePair out;
  if (r == 1 || k == 1) {
    int depth = (r == 1 ? k : r) + 1;  // number of levels
    long long level = 1, total = 0;
    for (int i = 0; i < depth; ++i) {
      total = sat_add(total, level);
      if (i + 1 < depth) level = sat_mul(level, c);
    }
    out = {total, level};
  } else {
    SizePair a = size_rec(k, r - 1, c, memo);
    SizePair b = size_rec(k - 1, r, c, memo);
    out.nodes = sat_add(a.nodes, sat_mul(a.leaves, sat_mul(c, b.nodes)));
    out.leaves = sat_mul(a.leaves, sat_mul(c, b.leaves));
  }
  memo[key] = out;
  return out;
}

// Construction-time tree: local node indices, bags hold node indices.
struct ProtoTree {
  std::vector<int> parent;               // -1 for the root (index 0)
  std::vector<std::vector<int>> bags;
  std::vector<int> leaves;
};

ProtoTree cary_tree(int depth, long long c) {
  ProtoTree t;
  t.parent.push_back(-1);
  t.bags.emplace_back();
  std::vector<int> level{0};
  for (int d = 1; d < depth; ++d) {
    std::vector<int> next;
    for (int z : level) {
      for (long long i = 0; i < c; ++i) {
        t.parent.push_back(z);
        t.bags.emplace_back();
        next.push_back(static_cast<int>(t.parent.size()) - 1);
      }
    }
    level = std::move(next);
  }
  t.leaves = level;
  return t;
}

ProtoTree build(int k, int r, long long c) {
  if (r == 1) {
    // ancestor-closure bags on a tree with k+1 levels
    ProtoTree t = cary_tree(k + 1, c);
    for (int x = 0; x < static_cast<int>(t.parent.size()); ++x) {
      for (int a = x; a != -1; a = t.parent[a]) t.bags[x].push_back(a);
    }
    return t;
  }
  if (k == 1) {
    // parent-child bags on a tree with r+1 levels
    ProtoTree t = cary_tree(r + 1, c);
    t.bags[0] = {0};
    for (int x = 1; x < static_cast<int>(t.parent.size()); ++x) t.bags[x] = {t.parent[x], x};
    return t;
  }

  ProtoTree a = build(k, r - 1, c);
  ProtoTree b = build(k - 1, r, c);
  ProtoTree t = a;
  t.leaves.clear();
  for (int z : a.leaves) {
    for (long long copy = 0; copy < c; ++copy) {
      int offset = static_cast<int>(t.parent.size());
      for (int x = 0; x < static_cast<int>(b.parent.size()); ++x) {
        t.parent.push_back(b.parent[x] == -1 ? z : b.parent[x] + offset);
        std::vector<int> bag;
        bag.reserve(b.bags[x].size() + 1);
        for (int y : b.bags[x]) bag.push_back(y + offset);
        bag.push_back(z);  // the attachment vertex joins every copied bag
        t.bags.push_back(std::move(bag));
      }
      for (int leaf : b.leaves) t.leaves.push_back(leaf + offset);
    }
  }
  return t;
}

}  // namespace

long long size_estimate(int k, int r) {
  if (k < 1 || r < 1) throw InputError("gen_gkr parameters must be >= 1");
  long long c = binomial(r + k, k);
  std::map<std::pair<int, int>, SizePair> memo;
  return size_rec(k, r, c, memo).nodes;
}

ExtremalInstance gen_gkr(int k, int r, long long vertex_cap) {
  long long estimate = size_estimate(k, r);
  if (estimate > vertex_cap)
    throw ResourceError("gen_gkr(" + std::to_string(k) + "," + std::to_string(r) +
                            ") would have " + std::to_string(estimate) +
                            " vertices, above the cap of " + std::to_string(vertex_cap),
                        estimate, estimate);

  long long c = binomial(r + k, k);
  ProtoTree proto = build(k, r, c);
  int count = static_cast<int>(proto.parent.size());

  // BFS renumbering; the node-to-vertex bijection is then the identity.
  std::vector<std::vector<int>> children(count);
  for (int x = 1; x < count; ++x) children[proto.parent[x]].push_back(x);
  std::vector<int> number(count, -1);
  std::deque<int> queue{0};
  int next = 0;
  std::vector<int> bfs_order;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    number[x] = next++;
    bfs_order.push_back(x);
    for (int ch : children[x]) queue.push_back(ch);
  }

  ExtremalInstance inst;
  inst.k = k;
  inst.r = r;
  inst.c = c;
  inst.td.bags.assign(count, {});
  inst.td.parent.assign(count, -1);
  inst.td.root = 0;
  std::set<Edge> edges;
  for (int x : bfs_order) {
    int id = number[x];
    inst.td.parent[id] = proto.parent[x] == -1 ? -1 : number[proto.parent[x]];
    std::vector<Vertex> bag;
    bag.reserve(proto.bags[x].size());
    for (int y : proto.bags[x]) bag.push_back(number[y]);
    std::sort(bag.begin(), bag.end());
    inst.td.bags[id] = bag;
    for (size_t i = 0; i < bag.size(); ++i)
      for (size_t j = i + 1; j < bag.size(); ++j) edges.insert({bag[i], bag[j]});
  }
  inst.graph = Graph(count, {edges.begin(), edges.end()});
  return inst;
}

}  // namespace gencol
