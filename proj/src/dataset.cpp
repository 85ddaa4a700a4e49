#include "preftriads/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "preftriads/triad.hpp"

namespace preftriads {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(',', pos);
    fields.push_back(line.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void check_label_writable(const std::string& label, const char* what) {
  if (label.find(',') != std::string::npos ||
      label.find('>') != std::string::npos ||
      label.find('\n') != std::string::npos) {
    throw SchemaError(std::string(what) + " '" + label +
                      "' contains a reserved character (comma, '>' or "
                      "newline)");
  }
}

}  // namespace

const Permutation* TopicRankings::find(NodeId node) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
  if (it == nodes.end() || *it != node) return nullptr;
  return &orderings[static_cast<std::size_t>(it - nodes.begin())];
}

std::vector<NodeId> PreferenceDataset::node_ids() const {
  std::set<NodeId> ids;
  for (const TopicRankings& tr : rankings) {
    ids.insert(tr.nodes.begin(), tr.nodes.end());
  }
  return {ids.begin(), ids.end()};
}

PreferenceDataset load_dataset(const std::filesystem::path& prefs_path,
                               const std::filesystem::path& topics_path,
                               const LoadOptions& options,
                               LoadReport* report) {
  std::ifstream topics_in(topics_path);
  if (!topics_in) {
    throw Error("cannot open topics file '" + topics_path.string() + "'");
  }
  std::ifstream prefs_in(prefs_path);
  if (!prefs_in) {
    throw Error("cannot open preferences file '" + prefs_path.string() + "'");
  }

  PreferenceDataset ds;
  std::map<std::string, std::uint32_t> topic_index;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(topics_in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (!line.starts_with("topic,")) {
        throw SchemaError("topics file line 1: expected header "
                          "'topic,item1,item2,item3,item4,item5'");
      }
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != 1 + kItemsPerTopic) {
      throw SchemaError("topics file line " + std::to_string(line_no) +
                        ": expected a topic name and " +
                        std::to_string(kItemsPerTopic) + " items");
    }
    if (topic_index.contains(fields[0])) {
      throw SchemaError("topics file line " + std::to_string(line_no) +
                        ": duplicate topic '" + fields[0] + "'");
    }
    topic_index.emplace(fields[0],
                        static_cast<std::uint32_t>(ds.topics.size()));
    ds.topics.push_back(TopicSpec{
        fields[0],
        AlternativeAlphabet({fields.begin() + 1, fields.end()})});
  }
  if (ds.topics.empty()) {
    throw SchemaError("topics file defines no topics");
  }
  ds.rankings.resize(ds.topics.size());

  // collect rows per topic, sorted by node id
  std::vector<std::map<NodeId, Permutation>> rows(ds.topics.size());
  line_no = 0;
  while (std::getline(prefs_in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "node_id,topic,ranking") {
        throw SchemaError(
            "preferences file line 1: expected header "
            "'node_id,topic,ranking'");
      }
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != 3) {
      throw SchemaError("preferences file line " + std::to_string(line_no) +
                        ": expected 'node_id,topic,ranking'");
    }
    NodeId node = 0;
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(fields[0], &used);
      if (used != fields[0].size() || value > UINT32_MAX) {
        throw std::invalid_argument("range");
      }
      node = static_cast<NodeId>(value);
    } catch (const std::exception&) {
      throw SchemaError("preferences file line " + std::to_string(line_no) +
                        ": bad node id '" + fields[0] + "'");
    }
    const auto topic_it = topic_index.find(fields[1]);
    if (topic_it == topic_index.end()) {
      throw SchemaError("preferences file line " + std::to_string(line_no) +
                        ": unknown topic '" + fields[1] + "'");
    }
    const std::uint32_t topic = topic_it->second;
    Permutation ordering = [&] {
      try {
        return parse_ordering(fields[2], ds.topics[topic].items);
      } catch (const ParseError& e) {
        throw ParseError("preferences file line " + std::to_string(line_no) +
                             ": " + e.what(),
                         e.label);
      }
    }();
    if (!rows[topic].emplace(node, std::move(ordering)).second) {
      throw SchemaError("preferences file line " + std::to_string(line_no) +
                        ": node " + fields[0] +
                        " ranked topic '" + fields[1] + "' twice");
    }
  }

  std::set<NodeId> all_nodes;
  for (const auto& topic_rows : rows) {
    for (const auto& [node, _] : topic_rows) all_nodes.insert(node);
  }

  LoadReport local;
  local.node_count = all_nodes.size();
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (!options.drop_incomplete_nodes) {
      for (const NodeId node : all_nodes) {
        if (!rows[t].contains(node)) {
          throw SchemaError("node " + std::to_string(node) +
                            " has no ranking for topic '" +
                            ds.topics[t].name +
                            "' (use drop-incomplete to skip such nodes)");
        }
      }
    } else {
      local.dropped_rankings += all_nodes.size() - rows[t].size();
    }
    TopicRankings& tr = ds.rankings[t];
    tr.nodes.reserve(rows[t].size());
    tr.orderings.reserve(rows[t].size());
    for (auto& [node, ordering] : rows[t]) {
      tr.nodes.push_back(node);
      tr.orderings.push_back(std::move(ordering));
    }
    local.rankings_per_topic.push_back(tr.nodes.size());
  }
  if (report != nullptr) *report = local;
  return ds;
}

void write_dataset(const PreferenceDataset& ds, std::ostream& prefs_out,
                   std::ostream& topics_out) {
  topics_out << "topic,item1,item2,item3,item4,item5\n";
  for (const TopicSpec& topic : ds.topics) {
    check_label_writable(topic.name, "topic name");
    if (topic.items.size() != kItemsPerTopic) {
      throw SchemaError("topic '" + topic.name + "' has " +
                        std::to_string(topic.items.size()) +
                        " items; the file schema needs " +
                        std::to_string(kItemsPerTopic));
    }
    topics_out << topic.name;
    for (const std::string& item : topic.items.labels()) {
      check_label_writable(item, "item label");
      topics_out << ',' << item;
    }
    topics_out << '\n';
  }

  prefs_out << "node_id,topic,ranking\n";
  // rows sorted by (node, topic) for stable, diff-friendly files
  for (const NodeId node : ds.node_ids()) {
    for (std::size_t t = 0; t < ds.topics.size(); ++t) {
      const Permutation* ordering = ds.rankings[t].find(node);
      if (ordering == nullptr) continue;
      prefs_out << node << ',' << ds.topics[t].name << ','
                << format_ordering(*ordering, ds.topics[t].items,
                                   /*force_delimited=*/true)
                << '\n';
    }
  }
}

void save_dataset(const PreferenceDataset& ds,
                  const std::filesystem::path& prefs_path,
                  const std::filesystem::path& topics_path) {
  std::ofstream prefs_out(prefs_path);
  if (!prefs_out) {
    throw Error("cannot write preferences file '" + prefs_path.string() + "'");
  }
  std::ofstream topics_out(topics_path);
  if (!topics_out) {
    throw Error("cannot write topics file '" + topics_path.string() + "'");
  }
  write_dataset(ds, prefs_out, topics_out);
}

const std::array<std::array<std::uint32_t, 3>, kSubsetsPerTopic>&
item_subsets3of5() {
  static const std::array<std::array<std::uint32_t, 3>, kSubsetsPerTopic>
      subsets = [] {
        std::array<std::array<std::uint32_t, 3>, kSubsetsPerTopic> out{};
        std::size_t i = 0;
        for (std::uint32_t a = 0; a < kItemsPerTopic; ++a) {
          for (std::uint32_t b = a + 1; b < kItemsPerTopic; ++b) {
            for (std::uint32_t c = b + 1; c < kItemsPerTopic; ++c) {
              out[i++] = {a, b, c};
            }
          }
        }
        return out;
      }();
  return subsets;
}

std::vector<PreferenceSet> extract_subsets(const PreferenceDataset& ds) {
  std::vector<PreferenceSet> sets;
  sets.reserve(ds.topics.size() * kSubsetsPerTopic);
  for (std::uint32_t t = 0; t < ds.topics.size(); ++t) {
    const TopicSpec& topic = ds.topics[t];
    if (topic.items.size() != kItemsPerTopic) {
      throw SchemaError("topic '" + topic.name + "' has " +
                        std::to_string(topic.items.size()) +
                        " items; subset extraction needs " +
                        std::to_string(kItemsPerTopic));
    }
    const TopicRankings& tr = ds.rankings[t];
    for (std::uint32_t rank = 0; rank < kSubsetsPerTopic; ++rank) {
      const auto& keep = item_subsets3of5()[rank];
      std::vector<std::string> labels;
      for (const std::uint32_t item : keep) {
        labels.push_back(topic.items.label(item));
      }
      PreferenceSet ps{t,
                       rank,
                       keep,
                       AlternativeAlphabet(std::move(labels)),
                       tr.nodes,
                       {}};
      ps.orderings.reserve(tr.orderings.size());
      for (const Permutation& full : tr.orderings) {
        ps.orderings.push_back(restrict_ordering(full, keep));
      }
      sets.push_back(std::move(ps));
    }
  }
  return sets;
}

void write_preference_set_csv(const PreferenceSet& ps, std::ostream& out) {
  out << "node_id,ordering\n";
  for (std::size_t i = 0; i < ps.nodes.size(); ++i) {
    out << ps.nodes[i] << ','
        << format_ordering(ps.orderings[i], ps.alphabet,
                           /*force_delimited=*/true)
        << '\n';
  }
}

std::vector<std::uint8_t> assignment_codes(const PreferenceSet& ps,
                                           std::size_t node_count) {
  std::vector<std::uint8_t> codes(node_count, kNoOrdering);
  for (std::size_t i = 0; i < ps.nodes.size(); ++i) {
    if (ps.nodes[i] < node_count) {
      codes[ps.nodes[i]] = ordering_code(ps.orderings[i]);
    }
  }
  return codes;
}

EmpiricalDistribution EmpiricalDistribution::from_codes(
    std::span<const std::uint8_t> codes) {
  if (codes.empty()) {
    throw EmptyInputError("empirical distribution of an empty set");
  }
  EmpiricalDistribution dist;
  for (const std::uint8_t code : codes) {
    if (code >= 6) {
      throw InvalidArgumentError("ordering code out of range");
    }
    ++dist.counts_[code];
    ++dist.total_;
  }
  return dist;
}

std::array<double, 6> EmpiricalDistribution::weights() const {
  std::array<double, 6> w{};
  for (std::size_t i = 0; i < 6; ++i) {
    w[i] = static_cast<double>(counts_[i]) / static_cast<double>(total_);
  }
  return w;
}

std::uint8_t EmpiricalDistribution::sample(Rng& rng) const {
  std::uint64_t draw = rng.below(total_);
  for (std::uint8_t code = 0; code < 6; ++code) {
    if (draw < counts_[code]) return code;
    draw -= counts_[code];
  }
  return 5;  // unreachable: counts sum to total_
}

EmpiricalDistribution empirical_distribution(const PreferenceSet& ps) {
  if (ps.nodes.empty()) {
    throw EmptyInputError("preference set for topic " +
                          std::to_string(ps.topic_index) + ", subset " +
                          std::to_string(ps.subset_rank) + " has no nodes");
  }
  std::vector<std::uint8_t> codes;
  codes.reserve(ps.orderings.size());
  for (const Permutation& p : ps.orderings) codes.push_back(ordering_code(p));
  return EmpiricalDistribution::from_codes(codes);
}

std::vector<std::uint8_t> sample_assignment(const EmpiricalDistribution& dist,
                                            std::span<const NodeId> node_ids,
                                            std::size_t node_count,
                                            std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint8_t> codes(node_count, kNoOrdering);
  for (const NodeId node : node_ids) {
    const std::uint8_t code = dist.sample(rng);
    if (node < node_count) codes[node] = code;
  }
  return codes;
}

namespace {

// Repeated-insertion Mallows sampler: item j of the reference is inserted at
// position i in {0..j} with weight theta^(j-i), so theta = 1 keeps every
// ranking equally likely and theta = 0 reproduces the reference exactly.
std::vector<std::uint32_t> mallows_word(const Permutation& reference,
                                        double theta, Rng& rng) {
  std::vector<std::uint32_t> word;
  word.reserve(reference.size());
  for (std::uint32_t j = 0; j < reference.size(); ++j) {
    double total = 0.0;
    double w = 1.0;
    for (std::uint32_t k = 0; k <= j; ++k) {
      total += w;
      w *= theta;
    }
    const double u = rng.unit() * total;
    std::uint32_t position = j;
    double cumulative = 0.0;
    w = 1.0;
    for (std::uint32_t i = j + 1; i-- > 0;) {  // i = j, j-1, ..., 0
      cumulative += w;
      w *= theta;
      if (u < cumulative) {
        position = i;
        break;
      }
    }
    word.insert(word.begin() + position, reference[j]);
  }
  return word;
}

}  // namespace

PreferenceDataset generate_synthetic_dataset(std::size_t node_count,
                                             std::size_t topic_count,
                                             std::uint64_t seed, double skew) {
  if (node_count < 3) {
    throw InvalidSizeError("synthetic dataset needs at least 3 nodes");
  }
  if (topic_count < 1) {
    throw InvalidSizeError("synthetic dataset needs at least 1 topic");
  }
  if (skew < 0.0 || skew > 1.0) {
    throw InvalidArgumentError("skew must lie in [0, 1]");
  }
  const double theta = 1.0 - skew;
  Rng rng(seed);

  PreferenceDataset ds;
  std::vector<Permutation> references;
  for (std::size_t t = 0; t < topic_count; ++t) {
    ds.topics.push_back(TopicSpec{
        "topic_" + std::to_string(t),
        AlternativeAlphabet::default_for(kItemsPerTopic)});
    std::vector<std::uint32_t> ref(kItemsPerTopic);
    std::iota(ref.begin(), ref.end(), 0u);
    rng.shuffle(ref.begin(), ref.end());
    references.push_back(Permutation(std::move(ref)));
  }

  ds.rankings.resize(topic_count);
  for (std::size_t t = 0; t < topic_count; ++t) {
    TopicRankings& tr = ds.rankings[t];
    tr.nodes.reserve(node_count);
    tr.orderings.reserve(node_count);
    for (NodeId node = 0; node < node_count; ++node) {
      tr.nodes.push_back(node);
      tr.orderings.push_back(
          Permutation(mallows_word(references[t], theta, rng)));
    }
  }
  return ds;
}

}  // namespace preftriads
