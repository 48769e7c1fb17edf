#pragma once

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

struct ToughnessResult {
  Rational value;
  VertexSet witness = 0;
  int components = 0;
  /// Set when the input was already disconnected; value is 0/1 and the
  /// witness is empty in that case.
  bool disconnected = false;
};

/// Exact t(G) = min |S|/c(G-S) over all cuts, by subset enumeration over
/// ascending cut sizes with a ratio prune. The witness is the minimizer of
/// smallest cardinality, smallest bitset value. Requires n <= 64 and a
/// non-complete graph.
ToughnessResult toughness_exact(const Graph& g);

/// True iff t(G) >= t; stops at the first violating cut.
bool is_t_tough(const Graph& g, const Rational& t);

}  // namespace tough
