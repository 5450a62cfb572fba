#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tii/commands.hpp"
#include "tii/error.hpp"

namespace {

std::vector<std::pair<std::string, std::filesystem::path>> parse_models(
    const std::vector<std::string>& args) {
  std::vector<std::pair<std::string, std::filesystem::path>> out;
  for (const auto& a : args) out.push_back(tii::parse_model_arg(a));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal integrity index for dynamic graph embeddings"};
  app.require_subcommand(1);

  tii::GenerateOptions gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Sample a synthetic SBM scenario");
  generate->add_option("--scenario", gen.scenario, "merge | move | periodic")
      ->check(CLI::IsMember({"merge", "move", "periodic"}))
      ->required();
  generate->add_option("--n", gen.n, "Number of nodes")->capture_default_str();
  generate->add_option("--T", gen.T, "Number of snapshots")->capture_default_str();
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_option("--out", gen_out, "Output directory")->required();

  tii::EmbedOptions emb;
  std::string emb_in, emb_out;
  auto* embed = app.add_subcommand("embed", "Compute or shuffle embeddings");
  embed->add_option("--method", emb.method, "uase | shuffle")
      ->check(CLI::IsMember({"uase", "shuffle"}))
      ->required();
  embed->add_option("--d", emb.d, "Embedding dimension (uase)")->capture_default_str();
  embed->add_option("--seed", emb.seed, "Permutation seed (shuffle)")->capture_default_str();
  embed->add_option("--in", emb_in, "Dataset (uase) or embedding directory (shuffle)")
      ->required();
  embed->add_option("--out", emb_out, "Output directory")->required();
  embed->add_option("--name", emb.model_name, "Model name stored in meta.json");

  tii::ScoreOptions score;
  std::string score_dataset, score_out, score_aligned = "off", score_format = "csv";
  std::vector<std::string> score_models;
  auto* sc = app.add_subcommand("score", "Score embeddings under every index spec");
  sc->add_option("--dataset", score_dataset, "Dataset directory")->required();
  sc->add_option("--emb", score_models, "NAME=PATH (repeatable)")->required();
  sc->add_option("--aligned", score_aligned, "on | off | both")->capture_default_str();
  sc->add_option("--spec", score.specs, "Restrict to graph:repr:kernel (repeatable)");
  sc->add_flag("--with-nspectral", score.include_normalized_spectral,
               "Add the first-k normalized spectral family");
  sc->add_option("--k", score.k, "Eigenvalue count for nspectral")->capture_default_str();
  sc->add_option("--format", score_format, "csv | json")->capture_default_str();
  sc->add_option("--out", score_out, "Output file (default stdout)");

  tii::ValidateOptions val;
  std::vector<std::string> val_reports;
  std::string val_format = "csv", val_out;
  std::size_t val_wins = 0;
  auto* va = app.add_subcommand("validate", "Gap and win statistics across scenarios");
  va->add_option("--reports", val_reports, "Score reports, one per scenario")->required();
  va->add_option("--stable", val.stable, "Stable model names")->required();
  va->add_option("--shuffled", val.shuffled, "Shuffled baseline name")->required();
  va->add_option("--gap-threshold", val.thresholds.gap, "Minimum gap")
      ->capture_default_str();
  auto* wins_opt = va->add_option("--win-threshold", val_wins,
                                  "Minimum wins (default: every scenario)");
  va->add_option("--format", val_format, "csv | json")->capture_default_str();
  va->add_option("--out", val_out, "Output file (default stdout)");

  tii::EvaluateOptions ev;
  std::string ev_dataset, ev_out, ev_format = "csv";
  std::vector<std::string> ev_models;
  auto* evc = app.add_subcommand("evaluate", "TII against one-step link prediction AUC");
  evc->add_option("--dataset", ev_dataset, "Dataset directory")->required();
  evc->add_option("--emb", ev_models, "NAME=PATH (repeatable)")->required();
  evc->add_option("--spec", ev.spec, "graph:repr:kernel")->capture_default_str();
  evc->add_flag("--aligned", ev.aligned, "Procrustes-align before measuring");
  evc->add_option("--format", ev_format, "csv | json")->capture_default_str();
  evc->add_option("--out", ev_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error maps to 1
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*generate) {
      gen.out = gen_out;
      tii::cmd_generate(gen, std::cout);
    } else if (*embed) {
      emb.in = emb_in;
      emb.out = emb_out;
      tii::cmd_embed(emb, std::cerr);
    } else if (*sc) {
      score.dataset = score_dataset;
      score.models = parse_models(score_models);
      score.aligned = tii::parse_aligned_mode(score_aligned);
      score.format = tii::parse_format(score_format);
      score.out = score_out;
      tii::cmd_score(score, std::cout, std::cerr);
    } else if (*va) {
      for (const auto& r : val_reports) val.reports.emplace_back(r);
      if (*wins_opt) val.thresholds.wins = val_wins;
      val.format = tii::parse_format(val_format);
      val.out = val_out;
      return tii::cmd_validate(val, std::cout, std::cerr);
    } else if (*evc) {
      ev.dataset = ev_dataset;
      ev.models = parse_models(ev_models);
      ev.format = tii::parse_format(ev_format);
      ev.out = ev_out;
      tii::cmd_evaluate(ev, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
