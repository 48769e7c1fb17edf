#include "tough/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "tough/errors.hpp"

namespace tough {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    const int v = __builtin_ctzll(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 1) throw PreconditionError("graph order must be >= 1");
  if (fits_word()) bits_.assign(n, 0);
}

bool Graph::has_edge(int u, int v) const {
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("loops are not allowed");
  if (has_edge(u, v)) throw PreconditionError("duplicate edge");
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  if (fits_word()) {
    bits_[u] |= VertexSet{1} << v;
    bits_[v] |= VertexSet{1} << u;
  }
  ++edges_;
}

VertexSet Graph::neighbor_bits(int u) const {
  if (!fits_word())
    throw PreconditionError("bitset adjacency requires order <= 64");
  return bits_[u];
}

Graph load_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line))
      throw ParseError(std::string("unexpected end of input, expected ") +
                       what);
  };

  next_line("header");
  long long n = 0, m = 0;
  {
    std::istringstream ls(line);
    std::string trailing;
    if (!(ls >> n >> m) || (ls >> trailing))
      throw ParseError("malformed header line: '" + line + "'");
  }
  if (n < 1) throw ParseError("vertex count must be >= 1");
  if (m < 0) throw ParseError("edge count must be >= 0");

  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    next_line("edge line");
    long long u = 0, v = 0;
    std::istringstream ls(line);
    std::string trailing;
    if (!(ls >> u >> v) || (ls >> trailing))
      throw ParseError("malformed edge line: '" + line + "'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex out of range on line: '" + line + "'");
    if (u == v) throw ParseError("loop rejected on line: '" + line + "'");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("duplicate edge on line: '" + line + "'");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  if (!g.fits_word())
    throw PreconditionError("components requires order <= 64");
  std::vector<VertexSet> out;
  VertexSet todo = full_set(g.order()) & ~removed;
  while (todo) {
    VertexSet comp = todo & (-todo);  // lowest remaining vertex
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1)
        next |= g.neighbor_bits(__builtin_ctzll(f));
      frontier = next & todo & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  const int d0 = g.degree(0);
  for (int u = 1; u < g.order(); ++u)
    if (g.degree(u) != d0) return {false, std::nullopt};
  return {true, d0};
}

StructuralFlags structural_flags(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  bool bipartite = true;
  int seen = 0;
  // BFS over all components; connectivity and 2-colorability in one pass.
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> queue{start};
    ++seen;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
          ++seen;
        } else if (color[v] == color[u]) {
          bipartite = false;
        }
      }
    }
    if (start == 0 && seen == n) break;
  }
  bool complete = true;
  for (int u = 0; u < n; ++u)
    if (g.degree(u) != n - 1) {
      complete = false;
      break;
    }
  // Re-run coloring over remaining components happens in the loop above,
  // so `seen` counts all vertices once the loop finishes.
  bool connected = true;
  {
    std::vector<char> vis(n, 0);
    std::vector<int> queue{0};
    vis[0] = 1;
    int cnt = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (int v : g.neighbors(queue[qi]))
        if (!vis[v]) {
          vis[v] = 1;
          ++cnt;
          queue.push_back(v);
        }
    connected = (cnt == n);
  }
  return {connected, bipartite, complete};
}

Graph gen_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle requires n >= 3");
  Graph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph gen_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw PreconditionError("complete bipartite requires positive sides");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph gen_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph gen_random_regular(int n, int d, std::uint64_t seed, int max_retries) {
  if (d < 1 || d >= n) throw PreconditionError("require 1 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw PreconditionError("n*d must be even");
  std::mt19937_64 rng(seed);
  std::vector<int> points(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i)
      points[i] = static_cast<int>(i) / d;
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
      const int u = points[i], v = points[i + 1];
      if (u == v || g.has_edge(u, v))
        ok = false;
      else
        g.add_edge(u, v);
    }
    if (ok) return g;
  }
  throw PreconditionError("pairing model failed to produce a simple graph");
}

Graph gen_extremal_hd(int d, int k) {
  if (d < 3) throw PreconditionError("require d >= 3");
  if (k % 2 != 0) throw PreconditionError("require k even");
  if (k < 2 || k >= d) throw PreconditionError("require 2 <= k < d");
  Graph g(k + d * (d + 1));
  for (int c = 0; c < d; ++c) {
    const int base = k + c * (d + 1);
    for (int u = 0; u <= d; ++u)
      for (int v = u + 1; v <= d; ++v) {
        const bool matched = (v == u + 1) && (u % 2 == 0) && (v < k);
        if (!matched) g.add_edge(base + u, base + v);
      }
    for (int j = 0; j < k; ++j) g.add_edge(j, base + j);
  }
  return g;
}

}  // namespace tough
