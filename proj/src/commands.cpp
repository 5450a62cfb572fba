#include "tii/commands.hpp"

#include <map>
#include <ostream>
#include <set>

#include "fileio.hpp"
#include "tii/baselines.hpp"
#include "tii/error.hpp"
#include "tii/graphgen.hpp"
#include "tii/integrity.hpp"
#include "tii/log.hpp"

namespace tii {

namespace {

void emit(const std::string& text, const std::filesystem::path& out, std::ostream& os) {
  if (out.empty()) {
    os << text;
  } else {
    detail::write_file_atomic(out, text);
  }
}

std::vector<NamedEmbedding> load_models(
    const std::vector<std::pair<std::string, std::filesystem::path>>& models) {
  std::vector<NamedEmbedding> loaded;
  std::set<std::string> seen;
  for (const auto& [name, path] : models) {
    if (!seen.insert(name).second) {
      throw ConfigError("model name '" + name + "' given twice");
    }
    loaded.emplace_back(name, load_embeddings(path));
  }
  return loaded;
}

}  // namespace

std::size_t cmd_generate(const GenerateOptions& opt, std::ostream& msg) {
  ScenarioConfig cfg;
  cfg.kind = parse_scenario(opt.scenario);
  cfg.n = opt.n;
  cfg.T = opt.T;
  cfg.seed = opt.seed;
  cfg.validate();
  const auto graph = generate_scenario(cfg);
  DatasetInfo info;
  info.scenario = to_string(cfg.kind);
  info.seed = cfg.seed;
  info.params = scenario_params_json(cfg);
  save_dataset(graph, opt.out, info);
  const auto total = graph.total_edges();
  msg << "total_edges " << total << '\n';
  return total;
}

void cmd_embed(const EmbedOptions& opt, std::ostream& msg) {
  if (opt.method == "uase") {
    const auto dataset = load_dataset(opt.in);
    if (opt.d > dataset.graph.n()) {
      throw ParameterError("d = " + std::to_string(opt.d) + " exceeds n = " +
                           std::to_string(dataset.graph.n()));
    }
    const auto e = uase_embed(dataset.graph, UaseConfig{opt.d});
    const std::string name = opt.model_name.empty() ? "UASE" : opt.model_name;
    save_embeddings(e, opt.out, name);
    msg << "wrote " << e.T() << " snapshots of " << e.n() << "x" << e.d() << '\n';
  } else if (opt.method == "shuffle") {
    const auto meta = read_embedding_meta(opt.in);
    const auto e = shuffle_snapshots(load_embeddings(opt.in), opt.seed);
    const std::string name =
        opt.model_name.empty() ? meta.model_name + "-shuffled" : opt.model_name;
    save_embeddings(e, opt.out, name);
    msg << "wrote " << e.T() << " shuffled snapshots\n";
  } else {
    throw ParameterError("unknown embedding method '" + opt.method + "'");
  }
}

AlignedMode parse_aligned_mode(const std::string& text) {
  if (text == "off") return AlignedMode::off;
  if (text == "on") return AlignedMode::on;
  if (text == "both") return AlignedMode::both;
  throw ParameterError("--aligned must be on, off or both");
}

std::pair<std::string, std::filesystem::path> parse_model_arg(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ParameterError("expected NAME=PATH, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

ScoreReport build_score_report(const ScoreOptions& opt) {
  if (opt.models.empty()) throw ConfigError("no embeddings given");
  const auto dataset = load_dataset(opt.dataset);
  const auto models = load_models(opt.models);

  std::vector<bool> modes;
  if (opt.aligned != AlignedMode::on) modes.push_back(false);
  if (opt.aligned != AlignedMode::off) modes.push_back(true);

  std::vector<IndexSpec> specs;
  for (bool aligned : modes) {
    if (opt.specs.empty()) {
      DefaultSpecOptions d;
      d.aligned = aligned;
      d.include_normalized_spectral = opt.include_normalized_spectral;
      d.k = opt.k;
      const auto block = default_index_specs(d);
      specs.insert(specs.end(), block.begin(), block.end());
    } else {
      IndexSpec base;
      base.graph.k = opt.k;
      base.repr.align = aligned;
      for (const auto& text : opt.specs) {
        auto spec = parse_index_spec(text, base);
        spec.repr.align = aligned;
        specs.push_back(spec);
      }
    }
  }
  ScoreReport report;
  report.dataset = opt.dataset.string();
  report.rows = score_rows(sweep(dataset.graph, models, specs));
  return report;
}

void cmd_score(const ScoreOptions& opt, std::ostream& out, std::ostream& msg) {
  const auto report = build_score_report(opt);
  std::size_t failed = 0;
  for (const auto& row : report.rows) {
    if (!row.tii) {
      ++failed;
      msg << "error: " << row.model << " " << row.spec << ": " << row.error << '\n';
    }
  }
  emit(opt.format == ReportFormat::csv ? to_csv(report) : to_json(report), opt.out, out);
  msg << report.rows.size() << " rows";
  if (failed) msg << ", " << failed << " with errors";
  msg << '\n';
}

ValidationReport build_validation_report(const std::vector<ScoreReport>& reports,
                                         const ValidateOptions& opt) {
  if (reports.empty()) throw ConfigError("no score reports given");
  if (opt.stable.empty()) throw ConfigError("no stable models given");
  if (opt.shuffled.empty()) throw ConfigError("no shuffled model given");
  const std::set<std::string> stable(opt.stable.begin(), opt.stable.end());
  if (stable.count(opt.shuffled)) {
    throw ConfigError("model '" + opt.shuffled + "' is both stable and shuffled");
  }

  // key "<Yes|No>|<spec>" -> per scenario scores; keys keep first-report order
  std::vector<std::string> keys;
  std::vector<std::map<std::string, ModelScores>> scores(reports.size());
  std::vector<std::set<std::string>> key_sets(reports.size());
  for (std::size_t s = 0; s < reports.size(); ++s) {
    std::set<std::string> models;
    for (const auto& row : reports[s].rows) {
      const std::string key = std::string(row.aligned ? "Yes" : "No") + "|" + row.spec;
      if (key_sets[s].insert(key).second && s == 0) keys.push_back(key);
      models.insert(row.model);
      if (row.tii) scores[s][key][row.model] = *row.tii;
    }
    if (!models.count(opt.shuffled)) {
      throw ConfigError("shuffled model '" + opt.shuffled + "' missing from report " +
                        std::to_string(s + 1));
    }
    for (const auto& m : stable) {
      if (!models.count(m)) {
        throw ConfigError("stable model '" + m + "' missing from report " +
                          std::to_string(s + 1));
      }
    }
    if (s > 0 && key_sets[s] != key_sets[0]) {
      throw InputError("spec sets differ between report 1 and report " +
                       std::to_string(s + 1));
    }
  }

  ValidationReport report;
  for (const auto& p : opt.reports) report.scenarios.push_back(p.string());
  if (report.scenarios.empty()) {
    for (const auto& r : reports) report.scenarios.push_back(r.dataset);
  }
  report.stable = opt.stable;
  report.shuffled = opt.shuffled;
  report.thresholds = opt.thresholds;

  for (const auto& key : keys) {
    std::vector<ModelScores> per_scenario;
    std::vector<std::string> missing;
    for (std::size_t s = 0; s < reports.size(); ++s) {
      auto& cell = scores[s][key];
      for (const auto& m : stable) {
        if (!cell.count(m)) missing.push_back(m + " in scenario " + std::to_string(s + 1));
      }
      if (!cell.count(opt.shuffled)) {
        missing.push_back(opt.shuffled + " in scenario " + std::to_string(s + 1));
      }
      per_scenario.push_back(cell);
    }
    if (!missing.empty()) {
      ValidationEntry entry;
      entry.spec = key;
      entry.scenario_count = reports.size();
      for (const auto& m : missing) entry.reasons.push_back("no score for " + m);
      report.entries.push_back(std::move(entry));
      continue;
    }
    report.entries.push_back(
        validate_index(key, per_scenario, stable, opt.shuffled, opt.thresholds));
  }
  return report;
}

int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& msg) {
  std::vector<ScoreReport> reports;
  for (const auto& path : opt.reports) {
    try {
      reports.push_back(parse_score_report(detail::read_file(path)));
    } catch (const FormatError& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
  }
  const auto report = build_validation_report(reports, opt);
  emit(opt.format == ReportFormat::csv ? to_csv(report) : to_json(report), opt.out, out);
  const auto passing = report.passing();
  msg << "passing (" << passing.size() << "/" << report.entries.size() << "):";
  for (const auto& p : passing) msg << ' ' << p;
  msg << '\n';
  return passing.empty() ? 2 : 0;
}

EvaluationReport build_evaluation_report(const EvaluateOptions& opt, std::ostream& msg) {
  if (opt.models.empty()) throw ConfigError("no embeddings given");
  const auto dataset = load_dataset(opt.dataset);
  const auto models = load_models(opt.models);
  IndexSpec spec = parse_index_spec(opt.spec);
  spec.repr.align = opt.aligned;

  EvaluationReport report;
  report.dataset = opt.dataset.string();
  report.spec = format_index_spec(spec);
  report.aligned = opt.aligned;
  std::vector<double> tiis;
  std::vector<double> aucs;
  for (const auto& [name, e] : models) {
    EvaluationRow row;
    row.model = name;
    try {
      row.tii = total_integrity(dataset.graph, e, spec).tii;
      const auto auc = link_prediction_auc(e, dataset.graph);
      row.mean_auc = auc.mean;
      row.auc_steps = auc.per_step.size();
    } catch (Error& err) {
      throw ConfigError("model '" + name + "': " + err.what());
    }
    tiis.push_back(row.tii);
    aucs.push_back(row.mean_auc);
    report.rows.push_back(std::move(row));
  }
  if (models.size() >= 2) {
    report.spearman_rho = spearman_rank_correlation(tiis, aucs);
  } else {
    msg << "notice: Spearman rho needs at least 2 models; omitted\n";
  }
  return report;
}

void cmd_evaluate(const EvaluateOptions& opt, std::ostream& out, std::ostream& msg) {
  const auto report = build_evaluation_report(opt, msg);
  emit(opt.format == ReportFormat::csv ? to_csv(report) : to_json(report), opt.out, out);
}

}  // namespace tii
