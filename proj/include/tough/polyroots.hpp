#pragma once

#include <vector>

#include "tough/graph.hpp"

namespace tough {

/// The weighted deleted-factor polynomial
///   f(x) = prod_i (x - a_i) + sum_i b_i * prod_{j != i} (x - a_j)
/// with a_1 >= ... >= a_n >= 0 and every b_i > 0. Monic of degree n and
/// real-rooted; its sign alternates on the distinct a-values, which is what
/// the root isolation below exploits.
struct PolySpec {
  std::vector<double> a;  // descending, last entry >= 0
  std::vector<double> b;  // all > 0

  void validate() const;
  int degree() const { return static_cast<int>(a.size()); }
};

/// Duplicate a-values merged: distinct values c_1 > ... > c_r with
/// multiplicities m_i and summed weights w_i. f factors as
/// prod_i (x - c_i)^{m_i - 1} times the collapsed degree-r polynomial.
struct CollapsedSpec {
  std::vector<double> c;
  std::vector<int> multiplicity;
  std::vector<double> w;
};

CollapsedSpec collapse(const PolySpec& p);

/// Direct product-sum evaluation; no expanded coefficients.
double eval_f(const PolySpec& p, double x);

/// All n real roots, descending, with multiplicity. Residual target 1e-10.
std::vector<double> all_roots(const PolySpec& p);

double largest_root(const PolySpec& p);

struct RootBracket {
  double upper;                // a_1
  std::vector<double> lowers;  // (b_i*a_1 + b_1*a_i)/(b_1 + b_i), i = 2..n
};

/// Bracket for the largest root: a_1 >= rho >= max lowers. Requires n >= 2.
RootBracket largest_root_bracket(const PolySpec& p);

/// The spec whose largest root equals lambda_2 of the cut's quotient
/// matrix: a_i = d - e_i/n_i (descending), b_i = e_i/|S| in lockstep.
/// Requires g connected d-regular and s a proper cut.
PolySpec cut_polynomial(const Graph& g, VertexSet s);

}  // namespace tough
