#include "tii/integrity.hpp"

#include <algorithm>
#include <numeric>

#include "tii/error.hpp"
#include "tii/parallel.hpp"

namespace tii {

void IndexSpec::validate() const {
  graph.validate();
  repr.validate();
  kernel.validate();
}

std::string IndexSpec::label() const {
  return graph.label() + "/" + repr.label() + "/" + kernel.label();
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

IndexSpec parse_index_spec(const std::string& text, const IndexSpec& base) {
  const auto parts = split(lower(text), ':');
  if (parts.size() != 3) {
    throw ParameterError("index spec must look like graph:repr:kernel, got '" +
                         text + "'");
  }
  IndexSpec spec = base;
  const auto& g = parts[0];
  if (g == "euclidean") {
    spec.graph.kind = GraphMeasureKind::euclidean;
  } else if (g == "deltacon") {
    spec.graph.kind = GraphMeasureKind::deltacon;
  } else if (g == "spectral" || g == "laplacian") {
    spec.graph.kind = GraphMeasureKind::laplacian_spectral;
  } else if (g.rfind("nspectral", 0) == 0) {
    spec.graph.kind = GraphMeasureKind::normalized_spectral_k;
    if (g.size() > 9) {
      if (g[9] != '-') throw ParameterError("bad graph measure '" + g + "'");
      try {
        spec.graph.k = std::stoul(g.substr(10));
      } catch (const std::exception&) {
        throw ParameterError("bad k in '" + g + "'");
      }
    }
  } else {
    throw ParameterError("unknown graph measure '" + g + "'");
  }

  if (parts[1] == "cosine") {
    spec.repr.kind = ReprMeasureKind::row_cosine;
  } else if (parts[1] == "euclidean") {
    spec.repr.kind = ReprMeasureKind::row_unit_euclidean;
  } else {
    throw ParameterError("unknown representation measure '" + parts[1] + "'");
  }

  static const std::pair<const char*, KernelKind> kKernels[] = {
      {"sym", KernelKind::sym},         {"gauss", KernelKind::gauss},
      {"kl", KernelKind::kl},           {"pearson", KernelKind::pearson},
      {"spearman", KernelKind::spearman}, {"xcorr", KernelKind::xcorr},
      {"dtw", KernelKind::dtw}};
  const auto it = std::find_if(std::begin(kKernels), std::end(kKernels),
                               [&](const auto& kv) { return parts[2] == kv.first; });
  if (it == std::end(kKernels)) {
    throw ParameterError("unknown kernel '" + parts[2] + "'");
  }
  spec.kernel.kind = it->second;
  spec.validate();
  return spec;
}

std::string format_index_spec(const IndexSpec& spec) {
  std::string g;
  switch (spec.graph.kind) {
    case GraphMeasureKind::euclidean: g = "euclidean"; break;
    case GraphMeasureKind::deltacon: g = "deltacon"; break;
    case GraphMeasureKind::laplacian_spectral: g = "spectral"; break;
    case GraphMeasureKind::normalized_spectral_k:
      g = "nspectral-" + std::to_string(spec.graph.k);
      break;
  }
  const std::string r =
      spec.repr.kind == ReprMeasureKind::row_cosine ? "cosine" : "euclidean";
  return g + ":" + r + ":" + lower(spec.kernel.label());
}

IntegrityResult integrity_from_series(const ChangeSeries& graph_change,
                                      const ChangeSeries& repr_change,
                                      const IndexSpec& spec) {
  spec.kernel.validate();
  if (graph_change.size() != repr_change.size()) {
    throw DimensionError("graph and representation change series differ in length");
  }
  if (graph_change.size() == 0) throw DimensionError("empty change series");
  IntegrityResult result{spec, 0.0, std::nullopt};
  if (is_pointwise(spec.kernel.kind)) {
    std::vector<double> steps(graph_change.size());
    for (std::size_t t = 0; t < steps.size(); ++t) {
      steps[t] = at_step(t, [&] {
        return pointwise_kernel(spec.kernel, graph_change[t], repr_change[t]);
      });
    }
    const double mean = std::accumulate(steps.begin(), steps.end(), 0.0) /
                        static_cast<double>(steps.size());
    result.tii = std::clamp(mean, 0.0, 1.0);
    result.per_step = std::move(steps);
  } else {
    result.tii = series_kernel(spec.kernel, graph_change.values(),
                               repr_change.values());
  }
  return result;
}

namespace {

void require_compatible(const DynamicGraph& g, const EmbeddingSeries& e) {
  if (g.T() != e.T() || g.n() != e.n()) {
    throw DimensionError("embedding shape (T=" + std::to_string(e.T()) +
                         ", n=" + std::to_string(e.n()) +
                         ") does not match graph (T=" + std::to_string(g.T()) +
                         ", n=" + std::to_string(g.n()) + ")");
  }
}

}  // namespace

IntegrityResult total_integrity(const DynamicGraph& g, const EmbeddingSeries& e,
                                const IndexSpec& spec) {
  spec.validate();
  require_compatible(g, e);
  return integrity_from_series(graph_change_series(g, spec.graph),
                               repr_change_series(e, spec.repr), spec);
}

std::vector<IndexSpec> default_index_specs(const DefaultSpecOptions& options) {
  std::vector<GraphMeasureSpec> graphs = {
      {GraphMeasureKind::deltacon, options.deltacon_epsilon, options.k},
      {GraphMeasureKind::laplacian_spectral, std::nullopt, options.k},
      {GraphMeasureKind::euclidean, std::nullopt, options.k},
  };
  if (options.include_normalized_spectral) {
    graphs.push_back({GraphMeasureKind::normalized_spectral_k, std::nullopt, options.k});
  }
  const ReprMeasureKind reprs[] = {ReprMeasureKind::row_cosine,
                                   ReprMeasureKind::row_unit_euclidean};
  const KernelKind kernels[] = {KernelKind::sym,      KernelKind::gauss,
                                KernelKind::kl,       KernelKind::pearson,
                                KernelKind::spearman, KernelKind::xcorr,
                                KernelKind::dtw};
  std::vector<IndexSpec> specs;
  for (const auto& graph : graphs) {
    for (auto repr : reprs) {
      for (auto kernel : kernels) {
        IndexSpec spec;
        spec.graph = graph;
        spec.repr.kind = repr;
        spec.repr.align = options.aligned;
        spec.kernel = {kernel, options.sigma, options.kl_eps, options.max_lag};
        specs.push_back(spec);
      }
    }
  }
  return specs;
}

namespace {

template <typename T>
struct Computed {
  std::optional<T> value;
  std::string error;
};

template <typename T, typename Fn>
Computed<T> capture(Fn&& fn) {
  try {
    return {fn(), {}};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

template <typename Spec>
std::vector<Spec> distinct(const std::vector<Spec>& all) {
  std::vector<Spec> out;
  for (const auto& s : all) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

template <typename Spec>
std::size_t index_of(const std::vector<Spec>& all, const Spec& s) {
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), s) - all.begin());
}

}  // namespace

SweepTable sweep(const DynamicGraph& g, const std::vector<NamedEmbedding>& models,
                 const std::vector<IndexSpec>& specs) {
  SweepTable table;
  table.specs = specs;
  for (const auto& [name, series] : models) table.models.push_back(name);
  if (models.empty() || specs.empty()) return table;

  std::vector<GraphMeasureSpec> graph_specs;
  std::vector<ReprMeasureSpec> repr_specs;
  for (const auto& s : specs) {
    graph_specs.push_back(s.graph);
    repr_specs.push_back(s.repr);
  }
  graph_specs = distinct(graph_specs);
  repr_specs = distinct(repr_specs);

  std::vector<Computed<ChangeSeries>> graph_changes(graph_specs.size());
  for (std::size_t i = 0; i < graph_specs.size(); ++i) {
    graph_changes[i] = capture<ChangeSeries>(
        [&] { return graph_change_series(g, graph_specs[i]); });
  }

  // repr_changes[model * |repr_specs| + r]
  const std::size_t nr = repr_specs.size();
  std::vector<Computed<ChangeSeries>> repr_changes(models.size() * nr);
  parallel_for(repr_changes.size(), [&](std::size_t idx) {
    const auto& series = models[idx / nr].second;
    repr_changes[idx] = capture<ChangeSeries>([&] {
      require_compatible(g, series);
      return repr_change_series(series, repr_specs[idx % nr]);
    });
  });

  table.cells.resize(specs.size() * models.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const auto& gc = graph_changes[index_of(graph_specs, specs[s].graph)];
    const std::size_t r = index_of(repr_specs, specs[s].repr);
    for (std::size_t m = 0; m < models.size(); ++m) {
      auto& cell = table.cells[s * models.size() + m];
      cell.model = models[m].first;
      cell.spec_index = s;
      const auto& rc = repr_changes[m * nr + r];
      if (!gc.value) {
        cell.error = "graph change: " + gc.error;
      } else if (!rc.value) {
        cell.error = "representation change: " + rc.error;
      } else {
        auto computed = capture<IntegrityResult>(
            [&] { return integrity_from_series(*gc.value, *rc.value, specs[s]); });
        cell.result = std::move(computed.value);
        cell.error = std::move(computed.error);
      }
    }
  }
  return table;
}

}  // namespace tii
