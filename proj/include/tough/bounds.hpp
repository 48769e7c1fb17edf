#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

/// Slack granted to spectral comparisons so eigensolver noise can never
/// manufacture a false counterexample.
inline constexpr double kSpectralSlack = 1e-7;

/// min{ (d+1)/d * (d - lambda2), 1 }. Requires d >= 3, lambda2 < d.
double main_bound(int d, double lambda2);

enum class ClassicalBound { alon, brouwer, brouwer_conjecture, haemers };

/// The named classical lower-bound expression, lambda = max{l2, -lmin}:
///   alon               (1/3)(d^2/(d*lambda + lambda^2) - 1)
///   brouwer            d/lambda - 2
///   brouwer_conjecture d/lambda - 1
///   haemers            (d - l2)/(-lmin)
double classical_bound(ClassicalBound which, int d, double lambda2,
                       double lambda_min);

enum class ThresholdTheorem { liu_chen, cioaba_wong, zhang, chen_lin_wang };

const char* threshold_name(ThresholdTheorem t);

struct Threshold {
  double lambda2_threshold = 0.0;
  Rational guaranteed{1};
  bool strict = false;  // conclusion is t > guaranteed rather than t >=
};

/// The lambda2 threshold under which the named theorem guarantees its
/// toughness conclusion. chen_lin_wang takes the parameter b (default:
/// smallest b >= 2 with d <= b^2 + b); zhang applies to non-bipartite
/// graphs only, which the caller enforces.
Threshold threshold(ThresholdTheorem which, int d,
                    std::optional<int> b = std::nullopt);

struct ExtremalGap {
  double lambda2_closed;  // (d - 2 + sqrt(d^2 + 4(d-k) + 4)) / 2
  double gap;             // d - lambda2, in rationalized form
  double gap_lower;       // k / (d + 2)
};

/// Closed-form second eigenvalue of the matched-clique family and the
/// spectral gap it certifies. Requires k even, 2 <= k < d.
ExtremalGap extremal_gap(int d, int k);

struct ThresholdCheck {
  std::string name;
  bool applicable = false;  // hypothesis shape fits this graph at all
  bool hypothesis = false;  // lambda2 below the threshold (with slack)
  bool conclusion = false;  // exact rational comparison on t
};

struct BoundReport {
  std::string graph_id;
  int n = 0;
  int d = 0;
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double lambda_mix = 0.0;
  std::optional<Rational> toughness;  // absent beyond the exact cap
  VertexSet witness = 0;
  double main = 0.0;
  double alon = 0.0;
  double brouwer = 0.0;
  double brouwer_conj = 0.0;
  double haemers = 0.0;
  std::vector<ThresholdCheck> threshold_checks;
  bool main_theorem_ok = false;
};

/// Full certification of one graph: spectrum, exact toughness (when
/// n <= exact_cap), every bound, every applicable threshold theorem.
/// Requires connected, non-complete, d-regular input with d >= 3.
BoundReport verify_graph(const Graph& g, const std::string& graph_id,
                         int exact_cap = 24);

std::string report_to_json(const BoundReport& r);
std::string report_csv_header();
std::string report_to_csv_row(const BoundReport& r);

}  // namespace tough
