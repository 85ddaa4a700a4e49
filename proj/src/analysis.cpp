#include "preftriads/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace preftriads {

std::uint64_t ClassHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::array<double, 10> ClassHistogram::frequencies() const {
  std::array<double, 10> f{};
  const std::uint64_t t = total();
  if (t == 0) return f;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    f[i] = static_cast<double>(counts[i]) / static_cast<double>(t);
  }
  return f;
}

ClassHistogram census(const Graph& g, std::span<const std::uint8_t> codes) {
  const auto& table = dense_class_table3();
  ClassHistogram histogram;
  for_each_triangle(g, [&](NodeId u, NodeId v, NodeId w) {
    for (const NodeId node : {u, v, w}) {
      if (node >= codes.size() || codes[node] == kNoOrdering) {
        throw DataIntegrityError("node " + std::to_string(node) +
                                 " sits in a triangle but has no ordering");
      }
    }
    const std::uint8_t cls = table[(codes[u] * 6 + codes[v]) * 6 + codes[w]];
    ++histogram.counts[cls - 1];
  });
  return histogram;
}

std::string to_string(NullMode mode) {
  switch (mode) {
    case NullMode::kRewire:
      return "rewire";
    case NullMode::kResample:
      return "resample";
    case NullMode::kRewireResample:
      return "rewire+resample";
  }
  throw InvalidArgumentError("unknown null mode");
}

NullMode parse_null_mode(const std::string& text) {
  if (text == "rewire") return NullMode::kRewire;
  if (text == "resample") return NullMode::kResample;
  if (text == "rewire+resample") return NullMode::kRewireResample;
  throw InvalidArgumentError(
      "null mode must be rewire, resample or rewire+resample; got '" + text +
      "'");
}

NullEnsemble null_ensemble(const Graph& g, const PreferenceSet& ps,
                           std::size_t replicates, NullMode mode,
                           std::uint64_t base_seed, std::uint64_t swaps) {
  if (replicates < 1) {
    throw InvalidArgumentError("null ensemble needs at least 1 replicate");
  }
  const bool rewires = mode != NullMode::kResample;
  const bool resamples = mode != NullMode::kRewire;

  const std::vector<std::uint8_t> authentic =
      assignment_codes(ps, g.node_count());
  std::optional<EmpiricalDistribution> dist;
  if (resamples) dist = empirical_distribution(ps);
  const std::vector<std::uint32_t> degrees = g.degree_sequence();

  NullEnsemble ensemble;
  ensemble.mode = mode;
  ensemble.swaps_per_replicate = rewires ? swaps : 0;
  ensemble.seeds.reserve(replicates);
  ensemble.replicates.reserve(replicates);

  for (std::size_t i = 0; i < replicates; ++i) {
    const std::uint64_t seed = base_seed ^ static_cast<std::uint64_t>(i);
    ensemble.seeds.push_back(seed);

    Graph replica;
    const Graph* graph = &g;
    if (rewires) {
      replica = rewire(g, swaps, derive_seed(seed, 0)).graph;
      if (replica.degree_sequence() != degrees) {
        throw std::logic_error("rewired replicate changed a degree");
      }
      graph = &replica;
    }
    if (resamples) {
      const std::vector<std::uint8_t> codes = sample_assignment(
          *dist, ps.nodes, g.node_count(), derive_seed(seed, 1));
      ensemble.replicates.push_back(census(*graph, codes));
    } else {
      ensemble.replicates.push_back(census(*graph, authentic));
    }
  }
  return ensemble;
}

namespace {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// sample standard deviation (n-1); 0 for a single replicate
MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd ms;
  const double n = static_cast<double>(xs.size());
  ms.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (const double x : xs) ss += (x - ms.mean) * (x - ms.mean);
    ms.std = std::sqrt(ss / (n - 1.0));
  }
  return ms;
}

double tv_distance(const std::array<double, 10>& a,
                   const std::array<double, 10>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 10; ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

}  // namespace

ComparisonReport compare(const ClassHistogram& observed,
                         const NullEnsemble& ensemble) {
  const std::size_t r = ensemble.replicates.size();
  if (r == 0) {
    throw InvalidArgumentError("comparison needs a non-empty ensemble");
  }
  const bool any_triangles =
      std::any_of(ensemble.replicates.begin(), ensemble.replicates.end(),
                  [](const ClassHistogram& h) { return h.total() > 0; });
  if (!any_triangles) {
    throw UndefinedComparisonError(
        "every ensemble replicate has zero triangles");
  }

  std::vector<std::array<double, 10>> replicate_freqs;
  replicate_freqs.reserve(r);
  for (const ClassHistogram& h : ensemble.replicates) {
    replicate_freqs.push_back(h.frequencies());
  }
  std::array<double, 10> mean_freqs{};
  for (const auto& f : replicate_freqs) {
    for (std::size_t c = 0; c < 10; ++c) mean_freqs[c] += f[c];
  }
  for (double& m : mean_freqs) m /= static_cast<double>(r);

  ComparisonReport report;
  const std::array<double, 10> observed_freqs = observed.frequencies();
  const double denom = static_cast<double>(r) + 1.0;

  for (std::size_t c = 0; c < 10; ++c) {
    auto& pc = report.per_class[c];
    pc.observed_count = observed.counts[c];
    pc.observed_freq = observed_freqs[c];

    std::vector<double> freqs(r);
    std::vector<double> counts(r);
    std::size_t at_least = 0;
    std::size_t at_most = 0;
    for (std::size_t i = 0; i < r; ++i) {
      freqs[i] = replicate_freqs[i][c];
      counts[i] = static_cast<double>(ensemble.replicates[i].counts[c]);
      if (freqs[i] >= pc.observed_freq) ++at_least;
      if (freqs[i] <= pc.observed_freq) ++at_most;
    }
    const MeanStd fs = mean_std(freqs);
    const MeanStd cs = mean_std(counts);
    pc.mean_freq = fs.mean;
    pc.std_freq = fs.std;
    pc.mean_count = cs.mean;
    pc.std_count = cs.std;
    pc.p_two_sided = std::min(
        1.0, 2.0 * static_cast<double>(1 + std::min(at_least, at_most)) /
                 denom);
  }

  report.tv_distance = tv_distance(observed_freqs, mean_freqs);
  std::size_t tv_at_least = 0;
  for (const auto& f : replicate_freqs) {
    if (tv_distance(f, mean_freqs) >= report.tv_distance) ++tv_at_least;
  }
  report.p_overall = static_cast<double>(1 + tv_at_least) / denom;

  const double t = static_cast<double>(observed.total());
  report.chi_square = 0.0;
  report.chi_square_df = -1;
  for (std::size_t c = 0; c < 10; ++c) {
    if (mean_freqs[c] > 0.0) {
      const double expected = t * mean_freqs[c];
      if (t > 0.0) {
        const double diff = static_cast<double>(observed.counts[c]) - expected;
        report.chi_square += diff * diff / expected;
      }
      ++report.chi_square_df;
    } else if (observed.counts[c] > 0) {
      report.out_of_support_classes.push_back(static_cast<std::uint32_t>(c) +
                                              1);
    }
  }
  report.chi_square_df = std::max(report.chi_square_df, 0);
  return report;
}

ExperimentReport run_experiment(const PreferenceDataset& ds, const Graph& g,
                                const ExperimentConfig& config) {
  ExperimentReport report;
  report.config = config;
  report.swaps_per_replicate = static_cast<std::uint64_t>(
      std::ceil(config.swaps_multiplier * static_cast<double>(g.edge_count())));
  report.graph = GraphSummary{g.node_count(), g.edge_count(),
                              triangle_count(g), closed_triangle_fraction(g)};

  for (const PreferenceSet& ps : extract_subsets(ds)) {
    SetResult result;
    result.set_index = ps.set_index();
    result.topic_index = ps.topic_index;
    result.subset_rank = ps.subset_rank;
    result.topic_name = ds.topics[ps.topic_index].name;
    for (std::size_t i = 0; i < 3; ++i) {
      result.item_labels[i] = ps.alphabet.label(static_cast<std::uint32_t>(i));
    }
    try {
      const std::vector<std::uint8_t> codes =
          assignment_codes(ps, g.node_count());
      result.observed = census(g, codes);
      result.observed_zero_triangles = result.observed.total() == 0;
      NullEnsemble ensemble = null_ensemble(
          g, ps, config.replicates, config.mode,
          derive_seed(config.base_seed, result.set_index),
          report.swaps_per_replicate);
      result.ensemble_zero_triangles = std::all_of(
          ensemble.replicates.begin(), ensemble.replicates.end(),
          [](const ClassHistogram& h) { return h.total() == 0; });
      if (!result.ensemble_zero_triangles) {
        result.comparison = compare(result.observed, ensemble);
      }
      result.ensemble = std::move(ensemble);
    } catch (const Error& e) {
      result.error = e.what();
    }
    report.sets.push_back(std::move(result));
  }
  return report;
}

}  // namespace preftriads
