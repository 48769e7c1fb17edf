#pragma once

#include <vector>

#include "tough/graph.hpp"

namespace tough {

/// Eigenvalues sorted descending, with the solver's residual bound.
struct Spectrum {
  std::vector<double> values;
  double tolerance = 1e-9;

  double lambda1() const { return values.front(); }
  double lambda2() const { return values.at(1); }
  double lambda_min() const { return values.back(); }
  double lambda_mix() const {
    const double l2 = values.size() > 1 ? lambda2() : lambda1();
    return l2 > -lambda_min() ? l2 : -lambda_min();
  }
};

/// Nonempty disjoint blocks covering V(G).
struct Partition {
  std::vector<VertexSet> blocks;
};

/// Validates block disjointness/coverage against g; throws PreconditionError.
void validate_partition(const Graph& g, const Partition& p);

/// Quotient matrix B with b_ij = e(V_i,V_j)/|V_i| and b_ii = 2e(G[V_i])/|V_i|.
/// edge_counts keeps the underlying integer counts (diagonal doubled).
struct QuotientMatrix {
  int m = 0;
  std::vector<double> entries;  // row-major m x m
  std::vector<int> block_sizes;
  std::vector<long long> edge_counts;  // row-major, entry(i,j)*|V_i|

  double at(int i, int j) const { return entries[i * m + j]; }
};

/// Eigenvalues of the full adjacency matrix via cyclic Jacobi sweeps.
Spectrum adjacency_spectrum(const Graph& g);

double lambda2(const Graph& g);
double lambda_min(const Graph& g);

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

/// Real spectrum of B, computed on the symmetric conjugate
/// D^{-1/2} C D^{-1/2} where C is the edge-count matrix.
Spectrum quotient_spectrum(const QuotientMatrix& q);

/// det(xI - B), evaluated by Gaussian elimination with partial pivoting.
double char_poly_at(const QuotientMatrix& q, double x);

struct InterlacingReport {
  bool pass = false;
  double tolerance = 1e-7;
  // margin >= -tolerance everywhere when the report passes
  std::vector<double> lower_margins;  // lambda_i(B) - lambda_{i+n-m}(G)
  std::vector<double> upper_margins;  // lambda_i(G) - lambda_i(B)
};

/// Checks lambda_{i+n-m}(G) <= lambda_i(B) <= lambda_i(G) for every i.
InterlacingReport check_interlacing(const Graph& g, const Partition& p);

/// The partition {S, V(Q_1), ..., V(Q_c)} induced by a cut, with the
/// per-component statistics the spectral machinery consumes.
struct CutPartition {
  Partition partition;  // blocks[0] == s
  int cut_size = 0;                        // |S|
  std::vector<int> component_sizes;        // n_i
  std::vector<long long> boundary_edges;   // e_i = e(S, V(Q_i)), each >= 1
};

CutPartition cut_partition(const Graph& g, VertexSet s);

/// Eigenvalues of a dense symmetric matrix (row-major), descending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

}  // namespace tough
