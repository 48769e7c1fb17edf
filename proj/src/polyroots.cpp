#include "tough/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tough/errors.hpp"
#include "tough/spectra.hpp"

namespace tough {

namespace {

constexpr double kBisectWidth = 1e-12;
constexpr int kBisectIterCap = 200;

/// Bisection on [lo, hi] with f(lo)*f(hi) <= 0; exact zeros at the
/// endpoints are returned immediately.
double bisect(const PolySpec& p, double lo, double hi) {
  double flo = eval_f(p, lo);
  double fhi = eval_f(p, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < kBisectIterCap && hi - lo > kBisectWidth; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eval_f(p, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void PolySpec::validate() const {
  if (a.empty() || a.size() != b.size())
    throw PreconditionError("PolySpec: need equal nonempty a and b lists");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] < a[i])
      throw PreconditionError("PolySpec: a must be sorted descending");
  if (a.back() < 0.0) throw PreconditionError("PolySpec: a_n must be >= 0");
  for (double w : b)
    if (!(w > 0.0)) throw PreconditionError("PolySpec: all b_i must be > 0");
}

double eval_f(const PolySpec& p, double x) {
  const int n = p.degree();
  double full = 1.0;
  for (double ai : p.a) full *= (x - ai);
  double acc = full;
  for (int i = 0; i < n; ++i) {
    double term = p.b[i];
    for (int j = 0; j < n; ++j)
      if (j != i) term *= (x - p.a[j]);
    acc += term;
  }
  return acc;
}

CollapsedSpec collapse(const PolySpec& p) {
  CollapsedSpec cs;
  for (int i = 0; i < p.degree(); ++i) {
    if (!cs.c.empty() && p.a[i] == cs.c.back()) {
      ++cs.multiplicity.back();
      cs.w.back() += p.b[i];
    } else {
      cs.c.push_back(p.a[i]);
      cs.multiplicity.push_back(1);
      cs.w.push_back(p.b[i]);
    }
  }
  return cs;
}

std::vector<double> all_roots(const PolySpec& p) {
  p.validate();
  const CollapsedSpec cs = collapse(p);
  const int r = static_cast<int>(cs.c.size());
  const PolySpec pc{cs.c, cs.w};

  // The collapsed polynomial alternates sign on c_1 > ... > c_r, giving one
  // root in each gap. The remaining root is the smallest: no root exceeds
  // c_1 (f > 0 there and beyond), and below c_r - sum(w) the weighted terms
  // cannot cancel the monic product.
  std::vector<double> roots;
  for (int j = 0; j + 1 < r; ++j) roots.push_back(bisect(pc, cs.c[j + 1], cs.c[j]));
  const double wsum = std::accumulate(cs.w.begin(), cs.w.end(), 0.0);
  roots.push_back(bisect(pc, cs.c.back() - wsum - 1.0, cs.c.back()));

  // Duplicated a-values re-enter as roots of multiplicity m_i - 1.
  for (int j = 0; j < r; ++j)
    for (int t = 1; t < cs.multiplicity[j]; ++t) roots.push_back(cs.c[j]);

  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

double largest_root(const PolySpec& p) { return all_roots(p).front(); }

RootBracket largest_root_bracket(const PolySpec& p) {
  p.validate();
  if (p.degree() < 2)
    throw PreconditionError("largest_root_bracket requires degree >= 2");
  RootBracket rb;
  rb.upper = p.a[0];
  for (int i = 1; i < p.degree(); ++i)
    rb.lowers.push_back((p.b[i] * p.a[0] + p.b[0] * p.a[i]) /
                        (p.b[0] + p.b[i]));
  return rb;
}

PolySpec cut_polynomial(const Graph& g, VertexSet s) {
  const auto prof = degree_profile(g);
  if (!prof.regular) throw PreconditionError("cut_polynomial: graph not regular");
  if (!structural_flags(g).connected)
    throw PreconditionError("cut_polynomial: graph not connected");
  const int d = *prof.degree;
  const CutPartition cp = cut_partition(g, s);
  const int c = static_cast<int>(cp.component_sizes.size());

  // Order components by e_i/n_i ascending so a_i = d - e_i/n_i comes out
  // descending; compare exactly via cross-multiplication so equal rationals
  // collapse to identical doubles later.
  std::vector<int> idx(c);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return cp.boundary_edges[i] * cp.component_sizes[j] <
           cp.boundary_edges[j] * cp.component_sizes[i];
  });

  PolySpec p;
  for (int i : idx) {
    p.a.push_back(d - static_cast<double>(cp.boundary_edges[i]) /
                          static_cast<double>(cp.component_sizes[i]));
    p.b.push_back(static_cast<double>(cp.boundary_edges[i]) /
                  static_cast<double>(cp.cut_size));
  }
  p.validate();
  return p;
}

}  // namespace tough
