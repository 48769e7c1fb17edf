#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tough {

/// Largest order for which vertex subsets fit a single machine word; the
/// exact toughness search and all cut machinery require this.
inline constexpr int kWordVertexCap = 64;

/// Subset of {0,...,n-1}, one bit per vertex.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return __builtin_popcountll(s); }

inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<int> set_members(VertexSet s);

/// Simple undirected graph. Immutable once built through a loader or
/// generator; adjacency is kept both as sorted neighbor lists (any order)
/// and as bit rows when the order fits kWordVertexCap.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  int edge_count() const { return edges_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }

  /// Adjacency row of u as a bitset. Requires order() <= kWordVertexCap.
  VertexSet neighbor_bits(int u) const;

  bool fits_word() const { return n_ <= kWordVertexCap; }

 private:
  int n_;
  int edges_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> bits_;
};

struct DegreeProfile {
  bool regular = false;
  std::optional<int> degree;
};

struct StructuralFlags {
  bool connected = false;
  bool bipartite = false;
  bool complete = false;
};

/// Parses "n m" header followed by m "u v" lines. Loops, duplicate edges,
/// out-of-range endpoints and malformed lines are each rejected with a
/// distinct ParseError message.
Graph load_graph(std::string_view text);

/// Canonical edge-list serialization: header, then edges as "u v" with
/// u < v, sorted lexicographically, LF line endings.
std::string to_edge_list(const Graph& g);

/// Connected components of g - removed, each as a VertexSet, ordered by
/// smallest member. Empty remainder gives an empty list.
std::vector<VertexSet> components(const Graph& g, VertexSet removed);

DegreeProfile degree_profile(const Graph& g);
StructuralFlags structural_flags(const Graph& g);

Graph gen_complete(int n);
Graph gen_cycle(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_petersen();

/// Pairing-model d-regular graph on n vertices; whole samples are resampled
/// on loop/multi-edge collisions. Deterministic for a fixed seed.
Graph gen_random_regular(int n, int d, std::uint64_t seed,
                         int max_retries = 1000);

/// The matched-clique family: k independent hub vertices, d copies of
/// K_{d+1} minus a matching on the copy's k lowest-indexed vertices
/// (pairing 2i with 2i+1), and one edge from hub j to the j-th
/// degree-(d-1) vertex of every copy. d-regular of order k + d(d+1).
/// Hubs occupy vertices 0..k-1; copy c occupies k + c(d+1) onward.
/// Requires k even, 2 <= k < d, d >= 3.
Graph gen_extremal_hd(int d, int k);

}  // namespace tough
