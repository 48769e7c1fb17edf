#include "tough/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tough/errors.hpp"

namespace tough {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagThreshold = 1e-12;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  if (n == 1) return {a[0]};
  double scale = 0.0;
  for (double v : a) scale += v * v;
  scale = std::sqrt(scale);
  const double stop = kOffDiagThreshold * std::max(1.0, scale);

  int sweep = 0;
  while (off_diagonal_norm(a, n) > stop) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error("jacobi_eigenvalues: sweep cap exceeded");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

Spectrum adjacency_spectrum(const Graph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a[u * n + v] = 1.0;
  return Spectrum{jacobi_eigenvalues(std::move(a), n), 1e-9};
}

double lambda2(const Graph& g) {
  if (g.order() < 2)
    throw PreconditionError("lambda2 requires at least 2 vertices");
  return adjacency_spectrum(g).lambda2();
}

double lambda_min(const Graph& g) { return adjacency_spectrum(g).lambda_min(); }

void validate_partition(const Graph& g, const Partition& p) {
  if (!g.fits_word())
    throw PreconditionError("partitions require order <= 64");
  VertexSet covered = 0;
  for (VertexSet b : p.blocks) {
    if (b == 0) throw PreconditionError("partition has an empty block");
    if (covered & b) throw PreconditionError("partition blocks overlap");
    covered |= b;
  }
  if (covered != full_set(g.order()))
    throw PreconditionError("partition does not cover the vertex set");
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
  validate_partition(g, p);
  const int m = static_cast<int>(p.blocks.size());
  std::vector<int> block_of(g.order());
  QuotientMatrix q;
  q.m = m;
  q.block_sizes.resize(m);
  for (int i = 0; i < m; ++i) {
    q.block_sizes[i] = set_size(p.blocks[i]);
    for (int v : set_members(p.blocks[i])) block_of[v] = i;
  }
  q.edge_counts.assign(static_cast<std::size_t>(m) * m, 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      ++q.edge_counts[block_of[u] * m + block_of[v]];
  // Each cross edge contributes once to (i,j) and once to (j,i); each
  // within-block edge contributes twice to (i,i). So the counts already
  // read e(V_i,V_j) off the diagonal and 2e(G[V_i]) on it.
  q.entries.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      q.entries[i * m + j] =
          static_cast<double>(q.edge_counts[i * m + j]) / q.block_sizes[i];
  return q;
}

Spectrum quotient_spectrum(const QuotientMatrix& q) {
  const int m = q.m;
  std::vector<double> sym(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sym[i * m + j] = static_cast<double>(q.edge_counts[i * m + j]) /
                       std::sqrt(static_cast<double>(q.block_sizes[i]) *
                                 static_cast<double>(q.block_sizes[j]));
  return Spectrum{jacobi_eigenvalues(std::move(sym), m), 1e-9};
}

double char_poly_at(const QuotientMatrix& q, double x) {
  const int m = q.m;
  std::vector<double> a(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a[i * m + j] = (i == j ? x : 0.0) - q.at(i, j);
  double det = 1.0;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    if (a[piv * m + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int j = col; j < m; ++j) std::swap(a[piv * m + j], a[col * m + j]);
      det = -det;
    }
    det *= a[col * m + col];
    for (int r = col + 1; r < m; ++r) {
      const double f = a[r * m + col] / a[col * m + col];
      for (int j = col; j < m; ++j) a[r * m + j] -= f * a[col * m + j];
    }
  }
  return det;
}

InterlacingReport check_interlacing(const Graph& g, const Partition& p) {
  const Spectrum gs = adjacency_spectrum(g);
  const Spectrum bs = quotient_spectrum(quotient_matrix(g, p));
  const int n = g.order();
  const int m = static_cast<int>(bs.values.size());
  InterlacingReport rep;
  rep.pass = true;
  for (int i = 0; i < m; ++i) {
    const double upper = gs.values[i] - bs.values[i];
    const double lower = bs.values[i] - gs.values[i + n - m];
    rep.upper_margins.push_back(upper);
    rep.lower_margins.push_back(lower);
    if (upper < -rep.tolerance || lower < -rep.tolerance) rep.pass = false;
  }
  return rep;
}

CutPartition cut_partition(const Graph& g, VertexSet s) {
  if (s == 0) throw PreconditionError("cut must be nonempty");
  const auto comps = components(g, s);
  if (comps.size() < 2)
    throw PreconditionError("removing the set does not disconnect the graph");
  CutPartition cp;
  cp.cut_size = set_size(s);
  cp.partition.blocks.push_back(s);
  for (VertexSet comp : comps) {
    cp.partition.blocks.push_back(comp);
    cp.component_sizes.push_back(set_size(comp));
    long long e = 0;
    for (int v : set_members(comp)) e += set_size(g.neighbor_bits(v) & s);
    cp.boundary_edges.push_back(e);
  }
  return cp;
}

}  // namespace tough
