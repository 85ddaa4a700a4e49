#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "preftriads/dataset.hpp"
#include "preftriads/graph.hpp"
#include "preftriads/triad.hpp"

namespace preftriads {

inline constexpr std::uint64_t kDefaultSeed = 123456789;

// Triangle counts per equivalence class (index = class id - 1).
struct ClassHistogram {
  std::array<std::uint64_t, 10> counts{};

  std::uint64_t total() const;
  // counts / total; all zero when the histogram is empty
  std::array<double, 10> frequencies() const;

  friend bool operator==(const ClassHistogram&,
                         const ClassHistogram&) = default;
};

// Classifies the triad at every triangle of g. codes[node] is the ordering
// code (0..5) of that node, kNoOrdering where unassigned; a triangle touching
// an unassigned node raises DataIntegrityError naming it.
ClassHistogram census(const Graph& g, std::span<const std::uint8_t> codes);

enum class NullMode {
  kRewire,           // rewire edges, keep the authentic assignment
  kResample,         // keep edges, redraw assignments from the empirical law
  kRewireResample,   // both (the default protocol)
};

std::string to_string(NullMode mode);
NullMode parse_null_mode(const std::string& text);

struct NullEnsemble {
  NullMode mode = NullMode::kRewireResample;
  std::uint64_t swaps_per_replicate = 0;
  std::vector<std::uint64_t> seeds;          // per replicate
  std::vector<ClassHistogram> replicates;
};

// Builds `replicates` null histograms for (g, ps). Replicate i runs with seed
// base_seed xor i; rewiring and resampling inside a replicate use separate
// streams derived from that seed. Rewire saturation propagates.
NullEnsemble null_ensemble(const Graph& g, const PreferenceSet& ps,
                           std::size_t replicates, NullMode mode,
                           std::uint64_t base_seed, std::uint64_t swaps);

// Observed histogram against a null ensemble. Empirical p-values use +1/+1
// smoothing: p = (1 + #at-least-as-extreme) / (replicates + 1). Per-class
// p-values are two-sided on frequencies; the overall p ranks the observed
// total-variation distance to the ensemble mean among the replicates' own
// distances. Chi-square sums over classes the ensemble mean supports;
// out_of_support_classes lists observed classes it does not.
struct ComparisonReport {
  struct PerClass {
    std::uint64_t observed_count = 0;
    double observed_freq = 0.0;
    double mean_count = 0.0;
    double std_count = 0.0;
    double mean_freq = 0.0;
    double std_freq = 0.0;
    double p_two_sided = 1.0;
  };

  std::array<PerClass, 10> per_class{};
  double tv_distance = 0.0;
  double chi_square = 0.0;
  int chi_square_df = 0;
  std::vector<std::uint32_t> out_of_support_classes;
  double p_overall = 1.0;
};

// UndefinedComparisonError when every replicate has zero triangles.
ComparisonReport compare(const ClassHistogram& observed,
                         const NullEnsemble& ensemble);

struct ExperimentConfig {
  std::size_t replicates = 10;
  NullMode mode = NullMode::kRewireResample;
  std::uint64_t base_seed = kDefaultSeed;
  double swaps_multiplier = 10.0;  // successful swaps = multiplier x edges
};

struct SetResult {
  std::uint32_t set_index = 0;
  std::uint32_t topic_index = 0;
  std::uint32_t subset_rank = 0;
  std::string topic_name;
  std::array<std::string, 3> item_labels;
  ClassHistogram observed;
  std::optional<NullEnsemble> ensemble;
  std::optional<ComparisonReport> comparison;
  bool observed_zero_triangles = false;
  bool ensemble_zero_triangles = false;
  std::string error;  // non-empty if this set failed; the batch continues
};

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t triangle_count = 0;
  double closed_triangle_fraction = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::uint64_t swaps_per_replicate = 0;
  GraphSummary graph;
  std::vector<SetResult> sets;  // ordered by set_index
};

// The full protocol: census, null ensemble and comparison for every
// extracted preference set. Per-set failures land in SetResult::error
// without aborting the rest. Deterministic: per-set seeds derive from
// config.base_seed and the set index.
ExperimentReport run_experiment(const PreferenceDataset& ds, const Graph& g,
                                const ExperimentConfig& config);

}  // namespace preftriads
