#include "tough/bounds.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "tough/errors.hpp"
#include "tough/spectra.hpp"
#include "tough/toughness.hpp"

namespace tough {

double main_bound(int d, double lambda2) {
  if (d < 3) throw PreconditionError("main_bound requires d >= 3");
  if (!(lambda2 < d))
    throw PreconditionError("main_bound requires lambda2 < d");
  const double v = (d + 1.0) / d * (d - lambda2);
  return v < 1.0 ? v : 1.0;
}

double classical_bound(ClassicalBound which, int d, double lambda2,
                       double lambda_min) {
  const double lam = lambda2 > -lambda_min ? lambda2 : -lambda_min;
  if (!(lam > 0.0))
    throw PreconditionError("classical_bound requires max{l2,-ln} > 0");
  switch (which) {
    case ClassicalBound::alon:
      return (d * static_cast<double>(d) / (d * lam + lam * lam) - 1.0) / 3.0;
    case ClassicalBound::brouwer:
      return d / lam - 2.0;
    case ClassicalBound::brouwer_conjecture:
      return d / lam - 1.0;
    case ClassicalBound::haemers:
      if (!(lambda_min < 0.0))
        throw PreconditionError("haemers bound requires lambda_min < 0");
      return (d - lambda2) / (-lambda_min);
  }
  throw PreconditionError("unknown classical bound");
}

const char* threshold_name(ThresholdTheorem t) {
  switch (t) {
    case ThresholdTheorem::liu_chen: return "liu_chen";
    case ThresholdTheorem::cioaba_wong: return "cioaba_wong";
    case ThresholdTheorem::zhang: return "zhang";
    case ThresholdTheorem::chen_lin_wang: return "chen_lin_wang";
  }
  return "?";
}

Threshold threshold(ThresholdTheorem which, int d, std::optional<int> b) {
  if (d < 3) throw PreconditionError("threshold requires d >= 3");
  switch (which) {
    case ThresholdTheorem::liu_chen:
      return {d - 1.0 + (d % 2 == 0 ? 3.0 : 2.0) / (d + 1.0), Rational(1),
              false};
    case ThresholdTheorem::cioaba_wong:
      return {(d - 2.0 + std::sqrt(d * static_cast<double>(d) +
                                   (d % 2 == 0 ? 12.0 : 8.0))) /
                  2.0,
              Rational(1), false};
    case ThresholdTheorem::zhang:
      return {(std::sqrt(1.0 + 4.0 * (d - 1.0) * (d - 1.0)) - 1.0) / 2.0,
              Rational(1), true};
    case ThresholdTheorem::chen_lin_wang: {
      int bb;
      if (b) {
        bb = *b;
        if (bb < 2 || d > bb * bb + bb)
          throw PreconditionError("chen_lin_wang requires b >= 2, d <= b^2+b");
      } else {
        bb = 2;
        while (d > bb * bb + bb) ++bb;
      }
      const double extra = bb % 2 == 0 ? 4.0 : 8.0;
      return {(d - 2.0 +
               std::sqrt(d * static_cast<double>(d) + 4.0 * (d - bb) + extra)) /
                  2.0,
              Rational(1, bb), false};
    }
  }
  throw PreconditionError("unknown threshold theorem");
}

ExtremalGap extremal_gap(int d, int k) {
  if (d < 3 || k % 2 != 0 || k < 2 || k >= d)
    throw PreconditionError("extremal_gap requires k even, 2 <= k < d");
  const double root =
      std::sqrt(d * static_cast<double>(d) + 4.0 * (d - k) + 4.0);
  ExtremalGap eg;
  eg.lambda2_closed = (d - 2.0 + root) / 2.0;
  eg.gap = 2.0 * k / (d + 2.0 + root);
  eg.gap_lower = static_cast<double>(k) / (d + 2.0);
  return eg;
}

BoundReport verify_graph(const Graph& g, const std::string& graph_id,
                         int exact_cap) {
  const auto flags = structural_flags(g);
  if (!flags.connected) throw PreconditionError("verify_graph: disconnected");
  if (flags.complete) throw PreconditionError("verify_graph: complete graph");
  const auto prof = degree_profile(g);
  if (!prof.regular) throw PreconditionError("verify_graph: not regular");
  const int d = *prof.degree;
  if (d < 3) throw PreconditionError("verify_graph: requires d >= 3");

  BoundReport r;
  r.graph_id = graph_id;
  r.n = g.order();
  r.d = d;
  const Spectrum sp = adjacency_spectrum(g);
  r.lambda2 = sp.lambda2();
  r.lambda_min = sp.lambda_min();
  r.lambda_mix = sp.lambda_mix();
  r.main = main_bound(d, r.lambda2);
  r.alon = classical_bound(ClassicalBound::alon, d, r.lambda2, r.lambda_min);
  r.brouwer =
      classical_bound(ClassicalBound::brouwer, d, r.lambda2, r.lambda_min);
  r.brouwer_conj = classical_bound(ClassicalBound::brouwer_conjecture, d,
                                   r.lambda2, r.lambda_min);
  r.haemers =
      classical_bound(ClassicalBound::haemers, d, r.lambda2, r.lambda_min);

  if (g.order() <= exact_cap) {
    const ToughnessResult t = toughness_exact(g);
    r.toughness = t.value;
    r.witness = t.witness;
    r.main_theorem_ok = t.value.to_double() >= r.main - kSpectralSlack;
  }

  for (ThresholdTheorem th :
       {ThresholdTheorem::liu_chen, ThresholdTheorem::cioaba_wong,
        ThresholdTheorem::zhang, ThresholdTheorem::chen_lin_wang}) {
    ThresholdCheck chk;
    chk.name = threshold_name(th);
    chk.applicable = th != ThresholdTheorem::zhang || !flags.bipartite;
    if (chk.applicable) {
      const Threshold t = threshold(th, d);
      // Slack in the theorem's favor: only claim the hypothesis when
      // lambda2 is safely below the threshold.
      chk.hypothesis = r.lambda2 < t.lambda2_threshold - kSpectralSlack;
      if (chk.hypothesis && r.toughness) {
        chk.conclusion = t.strict ? *r.toughness > t.guaranteed
                                  : *r.toughness >= t.guaranteed;
      }
    }
    r.threshold_checks.push_back(chk);
  }
  return r;
}

std::string report_to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["d"] = r.d;
  j["lambda2"] = r.lambda2;
  j["lambda_min"] = r.lambda_min;
  if (r.toughness) {
    j["toughness"] = r.toughness->str();
    j["witness"] = set_members(r.witness);
  } else {
    j["toughness"] = nullptr;
  }
  j["bounds"] = {{"main", r.main},
                 {"alon", r.alon},
                 {"brouwer", r.brouwer},
                 {"brouwer_conj", r.brouwer_conj},
                 {"haemers", r.haemers}};
  j["thresholds"] = nlohmann::ordered_json::array();
  for (const auto& c : r.threshold_checks)
    j["thresholds"].push_back({{"name", c.name},
                               {"applicable", c.applicable},
                               {"hypothesis", c.hypothesis},
                               {"conclusion", c.conclusion}});
  j["main_theorem_ok"] = r.main_theorem_ok;
  return j.dump(2);
}

std::string report_csv_header() {
  return "graph_id,n,d,lambda2,lambda_min,toughness,main,alon,brouwer,"
         "brouwer_conj,haemers,main_theorem_ok";
}

std::string report_to_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << r.graph_id << ',' << r.n << ',' << r.d << ',' << r.lambda2 << ','
      << r.lambda_min << ',' << (r.toughness ? r.toughness->str() : "") << ','
      << r.main << ',' << r.alon << ',' << r.brouwer << ',' << r.brouwer_conj
      << ',' << r.haemers << ',' << (r.main_theorem_ok ? 1 : 0);
  return out.str();
}

}  // namespace tough
