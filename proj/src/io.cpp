#include "gencol/io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "gencol/errors.hpp"

namespace gencol {

namespace {

// next non-comment, non-blank line, or false at EOF
bool next_line(std::istream& in, std::string& line, char comment) {
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == comment) continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_line(in, line, '#')) throw InputError("edge list: missing header line");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw InputError("edge list: header must be 'n m'");
  std::string extra;
  if (header >> extra) throw InputError("edge list: trailing tokens in header");

  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, '#'))
      throw InputError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    std::istringstream row(line);
    long long u, v;
    if (!(row >> u >> v)) throw InputError("edge list: malformed edge line: " + line);
    if (row >> extra) throw InputError("edge list: trailing tokens on edge line: " + line);
    if (!(0 <= u && u < v && v < n))
      throw InputError("edge list: edges must satisfy 0 <= u < v < n: " + line);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_line(in, line, '#')) throw InputError("edge list: unexpected extra line: " + line);
  return Graph(static_cast<int>(n), edges);  // Graph ctor rejects duplicates
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

LinearOrder read_order(std::istream& in, int n) {
  std::string line;
  if (!next_line(in, line, '#')) throw InputError("order file: missing rank line");
  std::istringstream row(line);
  std::vector<int> ranks;
  int r;
  while (row >> r) ranks.push_back(r);
  if (static_cast<int>(ranks.size()) != n)
    throw InputError("order file: expected " + std::to_string(n) + " ranks, got " +
                     std::to_string(ranks.size()));
  return LinearOrder(std::move(ranks));
}

void write_order(const LinearOrder& order, std::ostream& out) {
  for (int v = 0; v < order.size(); ++v) {
    if (v) out << " ";
    out << order.rank(v);
  }
  out << "\n";
}

TreeDecomposition read_td(std::istream& in) {
  std::string line;
  if (!next_line(in, line, 'c')) throw InputError("td file: missing header");
  std::istringstream header(line);
  std::string s, td_tag;
  long long bags = 0, width_plus = 0, n = 0;
  if (!(header >> s >> td_tag >> bags >> width_plus >> n) || s != "s" || td_tag != "td" ||
      bags < 1 || n < 0)
    throw InputError("td file: header must be 's td <bags> <width+1> <n>'");

  TreeDecomposition out;
  out.bags.assign(bags, {});
  out.parent.assign(bags, -1);
  out.root = 0;
  std::vector<bool> seen(bags, false);
  std::vector<std::pair<int, int>> tree_edges;

  while (next_line(in, line, 'c')) {
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "b") {
      long long id;
      if (!(row >> id) || id < 1 || id > bags)
        throw InputError("td file: bad bag id in line: " + line);
      if (seen[id - 1]) throw InputError("td file: duplicate bag " + std::to_string(id));
      seen[id - 1] = true;
      long long v;
      while (row >> v) {
        if (v < 0 || v >= n) throw InputError("td file: vertex out of range in line: " + line);
        out.bags[id - 1].push_back(static_cast<Vertex>(v));
      }
      std::sort(out.bags[id - 1].begin(), out.bags[id - 1].end());
    } else {
      long long a, b;
      std::istringstream edge_row(line);
      if (!(edge_row >> a >> b) || a < 1 || b < 1 || a > bags || b > bags || a == b)
        throw InputError("td file: bad tree edge line: " + line);
      tree_edges.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1)});
    }
  }
  for (long long id = 0; id < bags; ++id)
    if (!seen[id]) throw InputError("td file: bag " + std::to_string(id + 1) + " missing");
  if (static_cast<long long>(tree_edges.size()) != bags - 1)
    throw InputError("td file: a decomposition with " + std::to_string(bags) +
                     " bags needs " + std::to_string(bags - 1) + " tree edges");

  // orient parents away from the root (bag 1)
  std::vector<std::vector<int>> adj(bags);
  for (auto [a, b] : tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> visited(bags, false);
  std::deque<int> queue{0};
  visited[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int w : adj[t]) {
      if (!visited[w]) {
        visited[w] = true;
        out.parent[w] = t;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != bags) throw InputError("td file: tree edges do not form a tree");
  if (out.width() + 1 != width_plus)
    throw InputError("td file: declared width+1 is " + std::to_string(width_plus) +
                     " but bags give " + std::to_string(out.width() + 1));
  return out;
}

void write_td(const TreeDecomposition& td, int n, std::ostream& out) {
  int bags = td.node_count();
  // bag 1 must be the root: swap file ids of node 0 and the root
  auto file_id = [&](int t) {
    if (t == td.root) return 1;
    if (t == 0) return td.root + 1;
    return t + 1;
  };
  out << "s td " << bags << " " << td.width() + 1 << " " << n << "\n";
  std::vector<std::pair<int, std::vector<Vertex>>> rows;
  for (int t = 0; t < bags; ++t) rows.push_back({file_id(t), td.bags[t]});
  std::sort(rows.begin(), rows.end());
  for (const auto& [id, bag] : rows) {
    out << "b " << id;
    for (Vertex v : bag) out << " " << v;
    out << "\n";
  }
  for (auto [c, p] : td.tree_edges()) {
    int a = file_id(c), b = file_id(p);
    out << std::min(a, b) << " " << std::max(a, b) << "\n";
  }
}

Cover read_cover(std::istream& in, int r) {
  Cover cover;
  cover.r = r;
  std::string line;
  while (next_line(in, line, '#')) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw InputError("cover file: missing ':' in line: " + line);
    Cluster cl;
    try {
      cl.center = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw InputError("cover file: bad center in line: " + line);
    }
    std::istringstream rest(line.substr(colon + 1));
    Vertex v;
    while (rest >> v) cl.members.push_back(v);
    std::sort(cl.members.begin(), cl.members.end());
    cl.members.erase(std::unique(cl.members.begin(), cl.members.end()), cl.members.end());
    if (cl.members.empty()) throw InputError("cover file: empty cluster in line: " + line);
    if (!std::binary_search(cl.members.begin(), cl.members.end(), cl.center))
      throw InputError("cover file: center not listed among members: " + line);
    cover.clusters.push_back(std::move(cl));
  }
  return cover;
}

void write_cover(const Cover& cover, std::ostream& out) {
  for (const Cluster& cl : cover.clusters) {
    out << cl.center << ":";
    for (Vertex v : cl.members) out << " " << v;
    out << "\n";
  }
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return in;
}

}  // namespace

Graph load_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

LinearOrder load_order_file(const std::string& path, int n) {
  auto in = open_input(path);
  return read_order(in, n);
}

TreeDecomposition load_td_file(const std::string& path) {
  auto in = open_input(path);
  return read_td(in);
}

Cover load_cover_file(const std::string& path, int r) {
  auto in = open_input(path);
  return read_cover(in, r);
}

void save_to_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << contents;
  if (!out) throw InputError("failed writing file: " + path);
}

}  // namespace gencol
