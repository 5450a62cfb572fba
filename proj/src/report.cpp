#include "tii/report.hpp"

#include <json.hpp>

#include "fileio.hpp"
#include "tii/error.hpp"

namespace tii {

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw ParameterError("unknown output format '" + name + "'");
}

std::vector<ScoreRow> score_rows(const SweepTable& table) {
  std::vector<ScoreRow> rows;
  rows.reserve(table.cells.size());
  for (const auto& cell : table.cells) {
    const auto& spec = table.specs[cell.spec_index];
    ScoreRow row;
    row.aligned = spec.repr.align;
    row.delta_g = spec.graph.label();
    row.delta_r = spec.repr.label();
    row.kernel = spec.kernel.label();
    row.spec = format_index_spec(spec);
    row.model = cell.model;
    if (cell.result) row.tii = cell.result->tii;
    row.error = cell.error;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
      }
      record.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw FormatError("unterminated quoted CSV field");
  if (any || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

const char* yes_no(bool b) { return b ? "Yes" : "No"; }

bool parse_yes_no(const std::string& s) {
  if (s == "Yes") return true;
  if (s == "No") return false;
  throw FormatError("expected Yes/No in aligned column, got '" + s + "'");
}

std::string fmt(double x) { return detail::format_double(x); }

}  // namespace

std::string to_csv(const ScoreReport& report) {
  std::string out = "aligned,delta_g,delta_r,kernel,spec,model,tii,error\n";
  for (const auto& r : report.rows) {
    out += yes_no(r.aligned);
    out += ',' + csv_field(r.delta_g) + ',' + csv_field(r.delta_r) + ',' +
           csv_field(r.kernel) + ',' + csv_field(r.spec) + ',' +
           csv_field(r.model) + ',' + (r.tii ? fmt(*r.tii) : "") + ',' +
           csv_field(r.error) + '\n';
  }
  return out;
}

std::string to_json(const ScoreReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = kScoreSchema;
  j["dataset"] = report.dataset;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["aligned"] = r.aligned;
    row["delta_g"] = r.delta_g;
    row["delta_r"] = r.delta_r;
    row["kernel"] = r.kernel;
    row["spec"] = r.spec;
    row["model"] = r.model;
    row["tii"] = r.tii ? nlohmann::ordered_json(*r.tii) : nlohmann::ordered_json(nullptr);
    row["error"] = r.error;
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

ScoreReport parse_score_report(const std::string& text) {
  ScoreReport report;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      if (j.value("schema", std::string()) != kScoreSchema) {
        throw FormatError("unsupported score report schema");
      }
      report.dataset = j.value("dataset", std::string());
      for (const auto& r : j.at("rows")) {
        ScoreRow row;
        row.aligned = r.at("aligned").get<bool>();
        row.delta_g = r.at("delta_g").get<std::string>();
        row.delta_r = r.at("delta_r").get<std::string>();
        row.kernel = r.at("kernel").get<std::string>();
        row.spec = r.at("spec").get<std::string>();
        row.model = r.at("model").get<std::string>();
        if (!r.at("tii").is_null()) row.tii = r.at("tii").get<double>();
        row.error = r.value("error", std::string());
        report.rows.push_back(std::move(row));
      }
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("score report: ") + e.what());
    }
    return report;
  }
  const auto records = parse_csv(text);
  static const std::vector<std::string> kHeader = {
      "aligned", "delta_g", "delta_r", "kernel", "spec", "model", "tii", "error"};
  if (records.empty() || records[0] != kHeader) {
    throw FormatError("score report: unexpected CSV header");
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    if (f.size() != kHeader.size()) {
      throw FormatError("score report line " + std::to_string(i + 1) +
                        ": expected 8 fields");
    }
    ScoreRow row{parse_yes_no(f[0]), f[1], f[2], f[3], f[4], f[5], std::nullopt, f[7]};
    if (!f[6].empty()) {
      double v = 0.0;
      if (!detail::parse_double(f[6], v)) {
        throw FormatError("score report line " + std::to_string(i + 1) +
                          ": bad tii value");
      }
      row.tii = v;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<std::string> ValidationReport::passing() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.passed) out.push_back(e.spec);
  }
  return out;
}

namespace {

std::pair<std::string, std::string> split_entry_key(const std::string& key) {
  const auto bar = key.find('|');
  if (bar == std::string::npos) return {"", key};
  return {key.substr(0, bar), key.substr(bar + 1)};
}

}  // namespace

std::string to_csv(const ValidationReport& report) {
  std::string out = "aligned,spec,gaps,win_count,scenario_count,passed,reasons\n";
  for (const auto& e : report.entries) {
    const auto [aligned, spec] = split_entry_key(e.spec);
    std::string gaps;
    for (const auto& g : e.gaps) {
      if (!gaps.empty()) gaps += ';';
      gaps += g.model + "@" + std::to_string(g.scenario) + "=" + fmt(g.gap);
    }
    std::string reasons;
    for (const auto& r : e.reasons) {
      if (!reasons.empty()) reasons += "; ";
      reasons += r;
    }
    out += csv_field(aligned) + ',' + csv_field(spec) + ',' + csv_field(gaps) +
           ',' + std::to_string(e.win_count) + ',' +
           std::to_string(e.scenario_count) + ',' + (e.passed ? "true" : "false") +
           ',' + csv_field(reasons) + '\n';
  }
  return out;
}

std::string to_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = kValidationSchema;
  j["scenarios"] = report.scenarios;
  j["stable"] = report.stable;
  j["shuffled"] = report.shuffled;
  j["thresholds"] = {{"gap", report.thresholds.gap},
                     {"wins", report.thresholds.wins
                                  ? nlohmann::ordered_json(*report.thresholds.wins)
                                  : nlohmann::ordered_json(nullptr)}};
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    const auto [aligned, spec] = split_entry_key(e.spec);
    nlohmann::ordered_json entry;
    entry["aligned"] = aligned;
    entry["spec"] = spec;
    entry["gaps"] = nlohmann::ordered_json::array();
    for (const auto& g : e.gaps) {
      entry["gaps"].push_back(
          {{"model", g.model}, {"scenario", g.scenario}, {"gap", g.gap}});
    }
    entry["win_count"] = e.win_count;
    entry["scenario_count"] = e.scenario_count;
    entry["passed"] = e.passed;
    entry["reasons"] = e.reasons;
    j["entries"].push_back(std::move(entry));
  }
  j["passing"] = report.passing();
  return j.dump(2) + "\n";
}

std::string to_csv(const EvaluationReport& report) {
  std::string out = "model,tii,mean_auc,auc_steps,spearman_rho\n";
  const std::string rho = report.spearman_rho ? fmt(*report.spearman_rho) : "";
  for (const auto& r : report.rows) {
    out += csv_field(r.model) + ',' + fmt(r.tii) + ',' + fmt(r.mean_auc) + ',' +
           std::to_string(r.auc_steps) + ',' + rho + '\n';
  }
  return out;
}

std::string to_json(const EvaluationReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = kEvaluationSchema;
  j["dataset"] = report.dataset;
  j["spec"] = report.spec;
  j["aligned"] = report.aligned;
  j["models"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    j["models"].push_back({{"model", r.model},
                           {"tii", r.tii},
                           {"mean_auc", r.mean_auc},
                           {"auc_steps", r.auc_steps}});
  }
  j["spearman_rho"] = report.spearman_rho
                          ? nlohmann::ordered_json(*report.spearman_rho)
                          : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace tii
