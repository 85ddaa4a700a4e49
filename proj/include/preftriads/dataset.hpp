#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "preftriads/graph.hpp"
#include "preftriads/perm.hpp"
#include "preftriads/rng.hpp"

namespace preftriads {

inline constexpr std::uint8_t kNoOrdering = 0xFF;
inline constexpr std::size_t kItemsPerTopic = 5;
inline constexpr std::size_t kSubsetsPerTopic = 10;  // C(5,3)

struct TopicSpec {
  std::string name;
  AlternativeAlphabet items;
};

// Per-topic rankings, parallel arrays sorted by node id.
struct TopicRankings {
  std::vector<NodeId> nodes;
  std::vector<Permutation> orderings;

  const Permutation* find(NodeId node) const;
};

struct PreferenceDataset {
  std::vector<TopicSpec> topics;
  std::vector<TopicRankings> rankings;  // one per topic

  std::vector<NodeId> node_ids() const;  // union over topics, sorted
};

struct LoadOptions {
  // With false (default) a node missing any ranking for a topic that other
  // nodes answered makes the load fail; with true such nodes are dropped
  // from that topic only.
  bool drop_incomplete_nodes = false;
};

struct LoadReport {
  std::size_t node_count = 0;
  std::vector<std::size_t> rankings_per_topic;
  std::size_t dropped_rankings = 0;
};

// Preferences file: CSV with header "node_id,topic,ranking", ranking given as
// ">"-separated item labels. Topics file: CSV with header
// "topic,item1,item2,item3,item4,item5". Malformed input raises SchemaError
// or ParseError naming the line.
PreferenceDataset load_dataset(const std::filesystem::path& prefs_path,
                               const std::filesystem::path& topics_path,
                               const LoadOptions& options = {},
                               LoadReport* report = nullptr);

void write_dataset(const PreferenceDataset& ds, std::ostream& prefs_out,
                   std::ostream& topics_out);
void save_dataset(const PreferenceDataset& ds,
                  const std::filesystem::path& prefs_path,
                  const std::filesystem::path& topics_path);

// One of the topic x 3-item-subset extractions: every node's full ranking
// restricted to the kept items.
struct PreferenceSet {
  std::uint32_t topic_index = 0;
  std::uint32_t subset_rank = 0;  // 0..9, lexicographic over item 3-subsets
  std::array<std::uint32_t, 3> kept_items{};  // ascending item indices
  AlternativeAlphabet alphabet;               // labels of the kept items
  std::vector<NodeId> nodes;                  // sorted
  std::vector<Permutation> orderings;         // parallel to nodes

  std::uint32_t set_index() const {
    return topic_index * kSubsetsPerTopic + subset_rank;
  }
};

// The 3-subsets of {0..4} in lexicographic order.
const std::array<std::array<std::uint32_t, 3>, kSubsetsPerTopic>&
item_subsets3of5();

// Every (topic, 3-subset) restriction, ordered by set_index. Topics must have
// exactly 5 items (SchemaError otherwise).
std::vector<PreferenceSet> extract_subsets(const PreferenceDataset& ds);

// Dense node -> ordering-code array (kNoOrdering where a node has no
// assignment) for censuses over a graph with `node_count` nodes.
std::vector<std::uint8_t> assignment_codes(const PreferenceSet& ps,
                                           std::size_t node_count);

// Export for external tools: CSV with header "node_id,ordering", one row per
// node, orderings as ">"-separated item labels.
void write_preference_set_csv(const PreferenceSet& ps, std::ostream& out);

// Distribution over the 6 orderings on 3 alternatives, kept as exact counts.
class EmpiricalDistribution {
 public:
  static EmpiricalDistribution from_codes(std::span<const std::uint8_t> codes);

  const std::array<std::uint64_t, 6>& counts() const { return counts_; }
  std::uint64_t sample_count() const { return total_; }
  std::array<double, 6> weights() const;

  std::uint8_t sample(Rng& rng) const;

 private:
  std::array<std::uint64_t, 6> counts_{};
  std::uint64_t total_ = 0;
};

// EmptyInputError when the set has no nodes.
EmpiricalDistribution empirical_distribution(const PreferenceSet& ps);

// Independent draws from `dist`, one per node id in order, returned as a
// dense code array of size node_count. Deterministic in the seed.
std::vector<std::uint8_t> sample_assignment(const EmpiricalDistribution& dist,
                                            std::span<const NodeId> node_ids,
                                            std::size_t node_count,
                                            std::uint64_t seed);

// Synthetic stand-in dataset: `topic_count` topics of 5 items each, rankings
// drawn per node from a repeated-insertion Mallows model with dispersion
// 1 - skew around a per-topic random reference ordering. skew 0 is uniform
// over all 120 rankings; skew 1 pins every node to the reference.
PreferenceDataset generate_synthetic_dataset(std::size_t node_count,
                                             std::size_t topic_count,
                                             std::uint64_t seed, double skew);

}  // namespace preftriads
