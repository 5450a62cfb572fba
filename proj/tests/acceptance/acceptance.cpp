// Acceptance criteria 1-9. `tii_acceptance N` runs criterion N; no argument
// runs all of them. Each prints one PASS/FAIL line; exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../helpers.hpp"
#include "tii/baselines.hpp"
#include "tii/commands.hpp"
#include "tii/graphgen.hpp"
#include "tii/integrity.hpp"
#include "tii/log.hpp"

using namespace tii;

namespace {

// Tolerances and budgets.
constexpr double kEuclideanExact = 1e-12;
constexpr double kSpectralExact = 1e-9;
constexpr double kDeltaConOracle = 1e-9;
constexpr double kProperty2 = 1e-12;
constexpr double kAlignedDrift = 1e-8;
constexpr double kUnalignedDrift = 0.1;
constexpr double kReferenceTii = 0.05;
constexpr double kGapThreshold = 0.25;
constexpr double kAucGap = 0.05;
constexpr std::size_t kSeeds = 5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// Scenario data shared by criteria 6, 7 and 9.
struct ScenarioRun {
  DynamicGraph graph;
  EmbeddingSeries uase;
  EmbeddingSeries shuffled;
};

const ScenarioRun& scenario_run(ScenarioKind kind, std::uint64_t seed) {
  static std::map<std::pair<ScenarioKind, std::uint64_t>, ScenarioRun> cache;
  const auto key = std::make_pair(kind, seed);
  auto it = cache.find(key);
  if (it == cache.end()) {
    ScenarioConfig cfg;
    cfg.kind = kind;
    cfg.n = 300;
    cfg.T = 100;
    cfg.seed = seed;
    auto g = generate_scenario(cfg);
    auto u = uase_embed(g, UaseConfig{64});
    auto s = shuffle_snapshots(u, seed);
    it = cache.emplace(key, ScenarioRun{std::move(g), std::move(u), std::move(s)}).first;
  }
  return it->second;
}

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  double worst_e = 0.0, worst_s = 0.0;
  for (std::size_t n : {4u, 50u, 300u}) {
    const auto empty = Snapshot::empty(n), full = Snapshot::complete(n);
    worst_e = std::max(worst_e, std::abs(euclidean_adjacency_distance(empty, full) - 1.0));
    worst_s = std::max(worst_s, std::abs(laplacian_spectral_distance(empty, full) - 1.0));
  }
  const double secs = elapsed(start);
  o.pass = worst_e <= kEuclideanExact && worst_s <= kSpectralExact && secs < 1.0;
  o.detail = "max |euclidean-1| = " + fmt(worst_e) + ", max |spectral-1| = " + fmt(worst_s) +
             ", " + fmt(secs) + " s";
  return o;
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 8), len(1, 8);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  double worst = 0.0;
  std::size_t dtw_mismatch = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const auto a = testutil::random_snapshot(n, density(rng), rng);
    const auto b = testutil::random_snapshot(n, density(rng), rng);
    worst = std::max(worst, std::abs(deltacon_distance(a, b) -
                                     oracle::deltacon(testutil::dense(a), testutil::dense(b))));
    std::vector<double> x(len(rng)), y(len(rng));
    for (auto& v : x) v = density(rng);
    for (auto& v : y) v = density(rng);
    dtw_mismatch += dtw_distance(x, y) != oracle::dtw_exhaustive(x, y);
  }
  const double secs = elapsed(start);
  Outcome o;
  o.pass = worst <= kDeltaConOracle && dtw_mismatch == 0 && secs < 30.0;
  o.detail = "deltacon max err " + fmt(worst) + ", dtw mismatches " +
             std::to_string(dtw_mismatch) + "/200, " + fmt(secs) + " s";
  return o;
}

Outcome criterion3() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(3);
  const auto specs = default_index_specs();
  std::size_t cells = 0, outside = 0, errors = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testutil::random_graph(30, 10, rng);
    std::vector<NamedEmbedding> models = {{"m", testutil::random_embedding(30, 8, 10, rng)}};
    for (const auto& cell : sweep(g, models, specs).cells) {
      ++cells;
      if (!cell.result) {
        ++errors;
        continue;
      }
      outside += !(cell.result->tii >= 0.0 && cell.result->tii <= 1.0);
    }
  }
  const double secs = elapsed(start);
  Outcome o;
  o.pass = outside == 0 && errors == 0 && cells == 4200 && secs < 120.0;
  o.detail = std::to_string(cells) + " cells, " + std::to_string(outside) + " outside [0,1], " +
             std::to_string(errors) + " errors, " + fmt(secs) + " s";
  return o;
}

Outcome criterion4() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(20);
    for (auto& x : v) x = u(rng);
    const ChangeSeries s(v);
    for (auto kind : {KernelKind::sym, KernelKind::gauss, KernelKind::kl, KernelKind::pearson,
                      KernelKind::spearman, KernelKind::xcorr, KernelKind::dtw}) {
      IndexSpec spec;
      spec.kernel.kind = kind;
      worst = std::max(worst, std::abs(integrity_from_series(s, s, spec).tii - 1.0));
    }
  }
  Outcome o;
  o.pass = worst <= kProperty2;
  o.detail = "7 kernels x 100 series, max |TII-1| = " + fmt(worst);
  return o;
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  double worst_aligned = 0.0, least_unaligned = 1.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto base = testutil::gaussian_matrix(50, 8, rng);
    std::vector<Eigen::MatrixXd> ms;
    for (int t = 0; t < 10; ++t) ms.push_back(base * testutil::random_orthogonal(8, rng));
    const EmbeddingSeries e(std::move(ms));
    for (auto kind : {ReprMeasureKind::row_cosine, ReprMeasureKind::row_unit_euclidean}) {
      const auto aligned = repr_change_series(e, {kind, true, 1.0});
      const auto raw = repr_change_series(e, {kind, false, 1.0});
      for (double v : aligned.values()) worst_aligned = std::max(worst_aligned, v);
      for (double v : raw.values()) least_unaligned = std::min(least_unaligned, v);
    }
  }
  Outcome o;
  o.pass = worst_aligned < kAlignedDrift && least_unaligned > kUnalignedDrift;
  o.detail = "max aligned dR " + fmt(worst_aligned) + ", min unaligned dR " + fmt(least_unaligned);
  return o;
}

Outcome criterion6() {
  const std::vector<std::pair<ScenarioKind, double>> targets = {
      {ScenarioKind::merge, 0.996}, {ScenarioKind::move, 0.990}, {ScenarioKind::periodic, 0.999}};
  const IndexSpec spec = parse_index_spec("euclidean:euclidean:pearson");
  Outcome o;
  for (const auto& [kind, target] : targets) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<double> uase, gap;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      const auto& run = scenario_run(kind, seed);
      const double u = total_integrity(run.graph, run.uase, spec).tii;
      uase.push_back(u);
      gap.push_back(u - total_integrity(run.graph, run.shuffled, spec).tii);
    }
    const double secs = elapsed(start);
    const double mu = median(uase), mg = median(gap);
    const bool ok = std::abs(mu - target) <= kReferenceTii && mg >= kGapThreshold && secs < 300.0;
    o.pass = o.pass && ok;
    o.detail += to_string(kind) + ": UASE " + fmt(mu) + " (target " + fmt(target) + "), gap " +
                fmt(mg) + ", " + fmt(secs) + " s; ";
  }
  return o;
}

Outcome criterion7() {
  std::vector<ScoreReport> reports;
  for (auto kind : {ScenarioKind::merge, ScenarioKind::move, ScenarioKind::periodic}) {
    const auto& run = scenario_run(kind, 1);
    std::vector<NamedEmbedding> models = {{"UASE", run.uase}, {"shuffled", run.shuffled}};
    ScoreReport r;
    r.dataset = to_string(kind);
    r.rows = score_rows(sweep(run.graph, models, default_index_specs()));
    reports.push_back(std::move(r));
  }
  ValidateOptions opt;
  opt.stable = {"UASE"};
  opt.shuffled = "shuffled";
  const auto v = build_validation_report(reports, opt);
  Outcome o;
  o.pass = false;
  for (const auto& e : v.entries) {
    if (e.spec != "No|euclidean:euclidean:pearson") continue;
    bool gaps_ok = e.gaps.size() == 3;
    std::string gaps;
    for (const auto& g : e.gaps) {
      gaps_ok = gaps_ok && g.gap >= kGapThreshold;
      gaps += fmt(g.gap) + " ";
    }
    o.pass = e.passed && gaps_ok && e.win_count == 3;
    o.detail = "Euclidean/Euclidean/Pearson gaps " + gaps + "wins " +
               std::to_string(e.win_count) + "/3, " + std::to_string(v.passing().size()) +
               " of 42 specs pass";
  }
  if (o.detail.empty()) o.detail = "spec missing from validation report";
  return o;
}

Outcome criterion8() {
  // An externally produced embedding enters through the file format.
  testutil::TempDir dir;
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::move;
  cfg.n = 60;
  cfg.T = 12;
  cfg.seed = 8;
  const auto g = generate_scenario(cfg);
  save_dataset(g, dir / "data", DatasetInfo{"move", 8, scenario_params_json(cfg)});
  std::mt19937_64 rng(8);
  const auto uase = uase_embed(g, UaseConfig{6});
  std::vector<Eigen::MatrixXd> noisy;
  for (const auto& m : uase.matrices()) noisy.push_back(m + 0.05 * testutil::gaussian_matrix(60, 6, rng));
  const EmbeddingSeries external(std::move(noisy));
  save_embeddings(external, dir / "external", "external");

  const bool round_trip = load_embeddings(dir / "external") == external;
  ScoreOptions opt;
  opt.dataset = dir / "data";
  opt.models = {{"external", dir / "external"}};
  opt.aligned = AlignedMode::both;
  const auto from_disk = build_score_report(opt);

  std::vector<IndexSpec> specs = default_index_specs();
  DefaultSpecOptions aligned;
  aligned.aligned = true;
  const auto more = default_index_specs(aligned);
  specs.insert(specs.end(), more.begin(), more.end());
  const auto in_memory = score_rows(sweep(g, {{"external", external}}, specs));

  Outcome o;
  o.pass = round_trip && from_disk.rows == in_memory && in_memory.size() == 84;
  o.detail = std::string("bit-exact reload ") + (round_trip ? "yes" : "no") + ", " +
             std::to_string(from_disk.rows.size()) + " file-scored rows " +
             (from_disk.rows == in_memory ? "identical to" : "differ from") + " in-memory sweep";
  return o;
}

Outcome criterion9() {
  std::vector<double> gaps, uase_auc, shuf_auc;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const auto& run = scenario_run(ScenarioKind::merge, seed);
    const double u = link_prediction_auc(run.uase, run.graph).mean;
    const double s = link_prediction_auc(run.shuffled, run.graph).mean;
    uase_auc.push_back(u);
    shuf_auc.push_back(s);
    gaps.push_back(u - s);
  }
  Outcome o;
  const double mg = median(gaps);
  o.pass = mg >= kAucGap;
  o.detail = "median AUC UASE " + fmt(median(uase_auc)) + ", shuffled " + fmt(median(shuf_auc)) +
             ", median gap " + fmt(mg) + " (need >= " + fmt(kAucGap) + ")";
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"exact extremal distances", criterion1},
      {"DeltaCon and DTW oracle equivalence", criterion2},
      {"TII in [0,1] for all 42 indexes", criterion3},
      {"identical change series score 1", criterion4},
      {"Procrustes invariance", criterion5},
      {"reference UASE scores and gaps", criterion6},
      {"validation selects Euclidean/Euclidean/Pearson", criterion7},
      {"external embedding ingestion", criterion8},
      {"merge link-prediction AUC gap", criterion9},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  set_warning_sink([](std::string_view) {});
  std::vector<std::size_t> which;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) which.push_back(std::strtoul(argv[i], nullptr, 10));
  } else {
    for (std::size_t i = 1; i <= criteria().size(); ++i) which.push_back(i);
  }
  bool all = true;
  for (std::size_t id : which) {
    if (id < 1 || id > criteria().size()) {
      std::printf("FAIL %zu: no such criterion\n", id);
      all = false;
      continue;
    }
    const auto& [name, fn] = criteria()[id - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("%s %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
