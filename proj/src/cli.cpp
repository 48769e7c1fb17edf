#include "tough/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tough/bounds.hpp"
#include "tough/errors.hpp"
#include "tough/graph.hpp"
#include "tough/polyroots.hpp"
#include "tough/spectra.hpp"
#include "tough/toughness.hpp"

namespace tough::cli {

namespace {

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open output file: " + path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    const int v = std::stoi(text);
    return {v, v};
  }
  const int lo = std::stoi(text.substr(0, pos));
  const int hi = std::stoi(text.substr(pos + 2));
  if (lo > hi) throw ParseError("empty range: " + text);
  return {lo, hi};
}

struct GenOptions {
  std::string family;
  int n = 0, a = 0, b = 0, d = 0, k = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_gen(const GenOptions& o, std::ostream& out) {
  Graph g = [&] {
    if (o.family == "complete") return gen_complete(o.n);
    if (o.family == "cycle") return gen_cycle(o.n);
    if (o.family == "complete-bipartite")
      return gen_complete_bipartite(o.a, o.b);
    if (o.family == "petersen") return gen_petersen();
    if (o.family == "random-regular")
      return gen_random_regular(o.n, o.d, o.seed);
    if (o.family == "hd") return gen_extremal_hd(o.d, o.k);
    throw ParseError("unknown family: " + o.family);
  }();
  write_output(to_edge_list(g), o.out_path, out);
  return kExitOk;
}

struct AnalyzeOptions {
  std::string input;
  std::string format = "json";
  int exact_cap = 24;
  std::string out_path;
};

int run_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const Graph g = load_graph(read_file(o.input));
  const BoundReport r = verify_graph(g, o.input, o.exact_cap);
  if (o.format == "csv")
    write_output(report_csv_header() + "\n" + report_to_csv_row(r), o.out_path,
                 out);
  else
    write_output(report_to_json(r), o.out_path, out);
  return (r.toughness && !r.main_theorem_ok) ? kExitViolation : kExitOk;
}

struct VerifyOptions {
  int count = 0;
  int d = 3;
  std::string n_range = "10..14";
  std::uint64_t seed = 0;
  int exact_cap = 24;
  std::string out_path;
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
  const auto [lo, hi] = parse_range(o.n_range);
  // Samples cycle over the orders in range compatible with a d-regular
  // graph (n*d even, n > d); an infeasible range fails every sample.
  std::vector<int> orders;
  for (int n = lo; n <= hi; ++n)
    if (n * o.d % 2 == 0 && n > o.d) orders.push_back(n);
  int tested = 0, passed = 0, failed = 0, gen_failures = 0, skipped_exact = 0;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (int i = 0; i < o.count; ++i) {
    if (orders.empty()) {
      ++gen_failures;
      continue;
    }
    const int n = orders[i % orders.size()];
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    // Resample deterministically until the pairing model yields a
    // connected non-complete graph; impossible parameters (odd n*d) fail.
    std::mt19937_64 sub(seed);
    Graph g(1);
    bool got = false;
    try {
      for (int attempt = 0; attempt < 100 && !got; ++attempt) {
        g = gen_random_regular(n, o.d, sub());
        const auto flags = structural_flags(g);
        got = flags.connected && !flags.complete;
      }
    } catch (const PreconditionError&) {
    }
    if (!got) {
      ++gen_failures;
      continue;
    }
    std::ostringstream id;
    id << "rr-d" << o.d << "-n" << n << "-s" << seed;
    const BoundReport r = verify_graph(g, id.str(), o.exact_cap);
    ++tested;
    if (!r.toughness)
      ++skipped_exact;
    else if (r.main_theorem_ok)
      ++passed;
    else
      ++failed;
    reports.push_back(nlohmann::ordered_json::parse(report_to_json(r)));
  }
  nlohmann::ordered_json summary;
  summary["tested"] = tested;
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["skipped_exact"] = skipped_exact;
  summary["generation_failures"] = gen_failures;
  nlohmann::ordered_json doc;
  doc["summary"] = summary;
  doc["reports"] = reports;
  write_output(doc.dump(2), o.out_path, out);
  return failed > 0 ? kExitViolation : kExitOk;
}

struct SweepOptions {
  std::vector<std::string> inputs;
  int exact_cap = 24;
  std::string out_path;
};

int run_sweep(const SweepOptions& o, std::ostream& out) {
  std::ostringstream csv;
  csv << report_csv_header() << '\n';
  bool violation = false;
  for (const auto& path : o.inputs) {
    const Graph g = load_graph(read_file(path));
    const BoundReport r = verify_graph(g, path, o.exact_cap);
    if (r.toughness && !r.main_theorem_ok) violation = true;
    csv << report_to_csv_row(r) << '\n';
  }
  write_output(csv.str(), o.out_path, out);
  return violation ? kExitViolation : kExitOk;
}

struct LemmaCheckOptions {
  int count = 200;
  int n_max = 8;
  int a_max = 10;  // small values make duplicate-heavy streams
  std::uint64_t seed = 0;
  std::string out_path;
};

PolySpec random_poly_spec(std::mt19937_64& rng, int n_max, int a_max) {
  std::uniform_int_distribution<int> deg(1, n_max);
  std::uniform_int_distribution<int> avals(0, a_max);
  std::uniform_real_distribution<double> bvals(1e-6, 5.0);
  const int n = deg(rng);
  PolySpec p;
  for (int i = 0; i < n; ++i) {
    p.a.push_back(avals(rng));
    p.b.push_back(bvals(rng));
  }
  std::sort(p.a.begin(), p.a.end(), std::greater<>());
  return p;
}

int run_lemma_check(const LemmaCheckOptions& o, std::ostream& out,
                    std::ostream& err) {
  std::mt19937_64 rng(o.seed);
  int root_count_ok = 0, residual_ok = 0, vieta_ok = 0, bracket_ok = 0,
      alternation_ok = 0, cut_root_ok = 0;
  int failures = 0;

  for (int it = 0; it < o.count; ++it) {
    const PolySpec p = random_poly_spec(rng, o.n_max, o.a_max);
    const int n = p.degree();
    double bsum = 0.0, asum = 0.0;
    for (double w : p.b) bsum += w;
    for (double v : p.a) asum += v;
    const double scale =
        std::pow(std::max(1.0, p.a.front() + bsum), std::max(1, n - 1));

    const auto roots = all_roots(p);
    bool ok = static_cast<int>(roots.size()) == n;
    if (ok) ++root_count_ok;

    bool res_ok = true;
    double rsum = 0.0;
    for (double r : roots) {
      if (std::abs(eval_f(p, r)) > 1e-8 * scale) res_ok = false;
      rsum += r;
    }
    if (res_ok) ++residual_ok;
    ok = ok && res_ok;

    const bool vieta =
        std::abs(rsum - (asum - bsum)) <= 1e-8 * std::max(1.0, asum + bsum);
    if (vieta) ++vieta_ok;
    ok = ok && vieta;

    if (n >= 2) {
      const auto br = largest_root_bracket(p);
      double lo = br.lowers.front();
      for (double l : br.lowers) lo = std::max(lo, l);
      const double rho = roots.front();
      const bool bracket = rho <= br.upper + 1e-10 && rho >= lo - 1e-10 &&
                           rho >= p.a[1] - 1e-10;
      if (bracket) ++bracket_ok;
      ok = ok && bracket;
    } else {
      ++bracket_ok;
    }

    const CollapsedSpec cs = collapse(p);
    const PolySpec pc{cs.c, cs.w};
    bool alt = true;
    for (std::size_t j = 0; j < cs.c.size(); ++j) {
      const double fj = eval_f(pc, cs.c[j]);
      const int want = (j % 2 == 0) ? 1 : -1;
      if (fj == 0.0) {
        if (!(j + 1 == cs.c.size() && cs.c[j] == 0.0)) alt = false;
      } else if ((fj > 0 ? 1 : -1) != want) {
        alt = false;
      }
    }
    if (alt) ++alternation_ok;
    ok = ok && alt;

    if (!ok) ++failures;
  }

  // Cut-derived specs: largest root against lambda_2 of the quotient matrix.
  const int cut_trials = std::max(1, o.count / 4);
  int cut_done = 0;
  for (int it = 0; it < cut_trials; ++it) {
    const int d = 3 + static_cast<int>(rng() % 2);
    int n = 8 + 2 * static_cast<int>(rng() % 4);
    if ((n * d) % 2 != 0) ++n;
    Graph g(1);
    try {
      g = gen_random_regular(n, d, rng());
    } catch (const PreconditionError&) {
      continue;
    }
    if (!structural_flags(g).connected) continue;
    std::optional<VertexSet> cut;
    for (int tries = 0; tries < 200 && !cut; ++tries) {
      const VertexSet s = rng() & full_set(n);
      if (s != 0 && s != full_set(n) && components(g, s).size() >= 2)
        cut = s;
    }
    if (!cut) continue;
    ++cut_done;
    const PolySpec h = cut_polynomial(g, *cut);
    const Spectrum qs = quotient_spectrum(quotient_matrix(g, cut_partition(g, *cut).partition));
    if (std::abs(largest_root(h) - qs.lambda2()) <= 1e-7)
      ++cut_root_ok;
    else
      ++failures;
  }

  nlohmann::ordered_json j;
  j["count"] = o.count;
  j["root_count_ok"] = root_count_ok;
  j["residual_ok"] = residual_ok;
  j["vieta_ok"] = vieta_ok;
  j["bracket_ok"] = bracket_ok;
  j["alternation_ok"] = alternation_ok;
  j["cut_instances"] = cut_done;
  j["cut_root_ok"] = cut_root_ok;
  j["failures"] = failures;
  write_output(j.dump(2), o.out_path, out);
  if (failures > 0) {
    err << "lemma-check: " << failures << " property failure(s)\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"toughness and spectral-bound toolkit for regular graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* cgen = app.add_subcommand("gen", "emit an edge-list file");
  cgen->add_option("family", gen.family,
                   "complete|cycle|complete-bipartite|petersen|"
                   "random-regular|hd")
      ->required();
  cgen->add_option("--n", gen.n, "vertex count");
  cgen->add_option("--a", gen.a, "left side size");
  cgen->add_option("--b", gen.b, "right side size");
  cgen->add_option("--d", gen.d, "degree");
  cgen->add_option("--k", gen.k, "matching size");
  cgen->add_option("--seed", gen.seed, "RNG seed");
  cgen->add_option("-o,--out", gen.out_path, "output file (default stdout)");

  AnalyzeOptions an;
  auto* can = app.add_subcommand("analyze", "certify one graph file");
  can->add_option("input", an.input, "edge-list file")->required();
  can->add_option("--format", an.format, "json|csv");
  can->add_option("--exact-cap", an.exact_cap, "max n for exact toughness");
  can->add_option("-o,--out", an.out_path, "output file (default stdout)");

  VerifyOptions ver;
  auto* cver = app.add_subcommand("verify", "batch-certify random graphs");
  cver->add_option("--count", ver.count, "number of samples")->required();
  cver->add_option("--d", ver.d, "degree");
  cver->add_option("--n", ver.n_range, "vertex count or range LO..HI");
  cver->add_option("--seed", ver.seed, "base RNG seed");
  cver->add_option("--exact-cap", ver.exact_cap, "max n for exact toughness");
  cver->add_option("-o,--out", ver.out_path, "output file (default stdout)");

  SweepOptions sw;
  auto* csw = app.add_subcommand("sweep", "CSV report over many graph files");
  csw->add_option("inputs", sw.inputs, "edge-list files")->required();
  csw->add_option("--exact-cap", sw.exact_cap, "max n for exact toughness");
  csw->add_option("-o,--out", sw.out_path, "output file (default stdout)");

  LemmaCheckOptions lc;
  auto* clc = app.add_subcommand("lemma-check", "polynomial property sweep");
  clc->add_option("--count", lc.count, "number of random specs");
  clc->add_option("--n-max", lc.n_max, "max polynomial degree");
  clc->add_option("--a-max", lc.a_max, "a-values drawn from {0..a-max}");
  clc->add_option("--seed", lc.seed, "RNG seed");
  clc->add_option("-o,--out", lc.out_path, "output file (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cgen->parsed()) return run_gen(gen, out);
    if (can->parsed()) return run_analyze(an, out);
    if (cver->parsed()) return run_verify(ver, out);
    if (csw->parsed()) return run_sweep(sw, out);
    if (clc->parsed()) return run_lemma_check(lc, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitUsage;
}

}  // namespace tough::cli
