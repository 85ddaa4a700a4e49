// preftriads: classify preference triangles, count their equivalence
// classes, and compare a network's class census against degree-preserving
// null models.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "preftriads/analysis.hpp"
#include "preftriads/counting.hpp"
#include "preftriads/dataset.hpp"
#include "preftriads/graph.hpp"
#include "preftriads/report.hpp"
#include "preftriads/triad.hpp"

namespace {

using namespace preftriads;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir = ".";
  std::string formats = "json,csv,svg";
};

std::set<std::string> parse_formats(const std::string& formats) {
  std::set<std::string> out;
  std::size_t pos = 0;
  while (pos <= formats.size()) {
    const auto next = formats.find(',', pos);
    const std::string token = formats.substr(pos, next - pos);
    if (!token.empty()) {
      if (token != "json" && token != "csv" && token != "svg") {
        throw CLI::ValidationError("--format",
                                   "unknown format '" + token + "'");
      }
      out.insert(token);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (out.empty()) {
    throw CLI::ValidationError("--format", "no output format selected");
  }
  return out;
}

std::filesystem::path ensure_out_dir(const std::string& dir) {
  const std::filesystem::path path(dir);
  std::filesystem::create_directories(path);
  return path;
}

int cmd_count(std::uint32_t n_min, std::uint32_t n_max, bool verify,
              const std::string& csv_path) {
  std::ostringstream table;
  table << "n,factorial,order3_count,class_count";
  if (verify) table << ",enumerated";
  table << '\n';
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    table << n << ',' << factorial(n).str() << ',' << order3_count(n).str()
          << ',' << class_count(n).str();
    if (verify) {
      if (n <= 4) {
        const std::size_t enumerated = enumerate_classes(n).entries.size();
        if (class_count(n) != enumerated) {
          std::cerr << "enumeration mismatch at n = " << n << ": formula "
                    << class_count(n).str() << ", brute force " << enumerated
                    << "\n";
          return kExitFailure;
        }
        table << ',' << enumerated;
      } else {
        table << ",skipped";
      }
    }
    table << '\n';
  }
  std::cout << table.str();
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "cannot write '" << csv_path << "'\n";
      return kExitFailure;
    }
    out << table.str();
  }
  return kExitOk;
}

int cmd_classify(const std::vector<std::string>& words) {
  // alphabet comes from the first ordering so any three labels work
  std::vector<std::string> labels;
  if (words[0].find('>') != std::string::npos) {
    std::size_t pos = 0;
    while (true) {
      const auto next = words[0].find('>', pos);
      std::string token = words[0].substr(pos, next - pos);
      const auto b = token.find_first_not_of(" \t");
      const auto e = token.find_last_not_of(" \t");
      labels.push_back(b == std::string::npos
                           ? std::string()
                           : token.substr(b, e - b + 1));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (const char c : words[0]) labels.emplace_back(1, c);
  }
  std::sort(labels.begin(), labels.end());
  const AlternativeAlphabet alphabet{std::move(labels)};
  if (alphabet.size() != 3) {
    throw InvalidSizeError("classify needs orderings over exactly 3 "
                           "alternatives");
  }

  const PreferenceTriad triad(parse_ordering(words[0], alphabet),
                              parse_ordering(words[1], alphabet),
                              parse_ordering(words[2], alphabet));
  const std::uint32_t cls = classify3(triad);
  const CanonicalTriad canonical = canonicalize(triad);
  const ClassDescriptor d = describe_class(triad);

  std::cout << "class: " << cls << '\n' << "canonical:";
  for (std::size_t i = 0; i < 3; ++i) {
    std::cout << (i == 0 ? " " : " > ")
              << format_ordering(canonical.ordering(i),
                                 AlternativeAlphabet::default_for(3));
  }
  std::cout << '\n'
            << "identical_pairs: " << d.identical_pairs << '\n'
            << "shared_top: " << d.shared_top << '\n'
            << "kendall_distances: " << d.pairwise_distances[0] << ','
            << d.pairwise_distances[1] << ',' << d.pairwise_distances[2]
            << '\n';
  return kExitOk;
}

void print_graph_summary(const Graph& g, const IngestReport& ingest) {
  char line[160];
  std::snprintf(line, sizeof(line),
                "graph: %zu nodes, %zu edges, closed triangle fraction %.4f",
                g.node_count(), g.edge_count(), closed_triangle_fraction(g));
  std::cout << line << '\n';
  if (ingest.dropped_loops > 0 || ingest.merged_duplicates > 0) {
    std::cout << "ingest: dropped " << ingest.dropped_loops
              << " self-loops, merged " << ingest.merged_duplicates
              << " duplicate edges\n";
  }
}

int cmd_analyze(const std::string& edges_path, const std::string& prefs_path,
                const std::string& topics_path, const GlobalOptions& global,
                std::size_t replicates, const std::string& mode_name,
                double swaps_multiplier, bool drop_incomplete,
                bool export_sets) {
  const std::filesystem::path out = ensure_out_dir(global.out_dir);
  const std::set<std::string> formats = parse_formats(global.formats);

  IngestReport ingest;
  const Graph g = load_edge_list(edges_path, &ingest);
  print_graph_summary(g, ingest);

  LoadOptions load_options;
  load_options.drop_incomplete_nodes = drop_incomplete;
  LoadReport load_report;
  const PreferenceDataset ds =
      load_dataset(prefs_path, topics_path, load_options, &load_report);
  std::cout << "dataset: " << load_report.node_count << " nodes, "
            << ds.topics.size() << " topics\n";

  ExperimentConfig config;
  config.replicates = replicates;
  config.mode = parse_null_mode(mode_name);
  config.base_seed = global.seed;
  config.swaps_multiplier = swaps_multiplier;

  if (export_sets) {
    char set_name[64];
    for (const PreferenceSet& ps : extract_subsets(ds)) {
      std::snprintf(set_name, sizeof(set_name), "set_%03u_prefs.csv",
                    ps.set_index());
      std::ofstream set_out(out / set_name);
      write_preference_set_csv(ps, set_out);
    }
  }

  const ExperimentReport report = run_experiment(ds, g, config);

  if (formats.contains("json")) {
    std::ofstream json_out(out / "report.json");
    json_out << report_to_json(report);
  }
  char name[64];
  for (const SetResult& s : report.sets) {
    if (!s.error.empty()) continue;
    if (formats.contains("csv")) {
      std::snprintf(name, sizeof(name), "set_%03u.csv", s.set_index);
      std::ofstream csv_out(out / name);
      write_histogram_csv(s, csv_out);
    }
    if (formats.contains("svg")) {
      std::snprintf(name, sizeof(name), "set_%03u.svg", s.set_index);
      std::ofstream svg_out(out / name);
      write_histogram_svg(s, svg_out);
    }
  }

  std::cout << "set,topic,items,triangles,tv_distance,p_overall\n";
  std::size_t failed = 0;
  for (const SetResult& s : report.sets) {
    if (!s.error.empty()) {
      ++failed;
      std::cout << s.set_index << ',' << s.topic_name << ",-,error,,\n";
      continue;
    }
    char row[256];
    if (s.comparison) {
      std::snprintf(row, sizeof(row), "%u,%s,%s|%s|%s,%llu,%.4f,%.4f",
                    s.set_index, s.topic_name.c_str(),
                    s.item_labels[0].c_str(), s.item_labels[1].c_str(),
                    s.item_labels[2].c_str(),
                    static_cast<unsigned long long>(s.observed.total()),
                    s.comparison->tv_distance, s.comparison->p_overall);
    } else {
      std::snprintf(row, sizeof(row), "%u,%s,%s|%s|%s,%llu,,", s.set_index,
                    s.topic_name.c_str(), s.item_labels[0].c_str(),
                    s.item_labels[1].c_str(), s.item_labels[2].c_str(),
                    static_cast<unsigned long long>(s.observed.total()));
    }
    std::cout << row << '\n';
  }
  std::cout << "report: " << report.sets.size() << " preference sets, "
            << failed << " failed; outputs in " << out.string() << '\n';
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_rewire(const std::string& edges_path, const std::string& output_path,
               std::uint64_t swaps, double swaps_multiplier,
               std::uint64_t seed) {
  IngestReport ingest;
  const Graph g = load_edge_list(edges_path, &ingest);
  print_graph_summary(g, ingest);
  if (swaps == 0) {
    swaps = static_cast<std::uint64_t>(
        std::ceil(swaps_multiplier * static_cast<double>(g.edge_count())));
  }
  std::cout << "requesting " << swaps << " successful swaps (seed " << seed
            << ")\n";

  const double ctf_before = closed_triangle_fraction(g);
  RewireResult result{Graph(), RewireReport{}};
  bool saturated = false;
  try {
    result = rewire(g, swaps, seed);
  } catch (const SaturationError& e) {
    std::cerr << "saturated: " << e.what() << '\n';
    result = e.partial;
    saturated = true;
  }

  save_edge_list(result.graph, output_path);
  const bool degrees_ok =
      result.graph.degree_sequence() == g.degree_sequence();
  char stats[256];
  std::snprintf(stats, sizeof(stats),
                "swaps: %llu achieved / %llu attempts (loop %llu, duplicate "
                "%llu, same-edge %llu)",
                static_cast<unsigned long long>(result.report.achieved),
                static_cast<unsigned long long>(result.report.attempts),
                static_cast<unsigned long long>(result.report.rejected_loop),
                static_cast<unsigned long long>(
                    result.report.rejected_duplicate),
                static_cast<unsigned long long>(
                    result.report.rejected_same_edge));
  std::cout << stats << '\n'
            << "degree sequence preserved: " << (degrees_ok ? "yes" : "NO")
            << '\n';
  char ctf[128];
  std::snprintf(ctf, sizeof(ctf),
                "closed triangle fraction: %.4f before, %.4f after",
                ctf_before, closed_triangle_fraction(result.graph));
  std::cout << ctf << '\n'
            << "note: connectivity is not enforced during rewiring\n"
            << "wrote " << output_path << '\n';
  if (!degrees_ok) return kExitFailure;
  return saturated ? kExitFailure : kExitOk;
}

int cmd_gen_synth(std::size_t nodes, std::size_t topics, double skew,
                  double mean_degree, const GlobalOptions& global) {
  const std::filesystem::path out = ensure_out_dir(global.out_dir);
  const PreferenceDataset ds =
      generate_synthetic_dataset(nodes, topics, global.seed, skew);
  save_dataset(ds, out / "prefs.csv", out / "topics.csv");

  const double p =
      nodes > 1 ? mean_degree / static_cast<double>(nodes - 1) : 0.0;
  const Graph g = gnp_random_graph(static_cast<NodeId>(nodes), p,
                                   derive_seed(global.seed, 0xED6E5));
  save_edge_list(g, out / "edges.txt");

  std::cout << "wrote " << (out / "prefs.csv").string() << ", "
            << (out / "topics.csv").string() << ", "
            << (out / "edges.txt").string() << '\n';
  print_graph_summary(g, IngestReport{});
  return kExitOk;
}

int cmd_class_table(std::uint32_t n, const std::string& csv_path) {
  std::ostringstream table;
  if (n == 3) {
    class_table3().write_csv(table);
  } else {
    enumerate_classes(n).write_csv(table);
  }
  std::cout << table.str();
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "cannot write '" << csv_path << "'\n";
      return kExitFailure;
    }
    out << table.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "preference-triangle toolkit: equivalence classes of preference "
      "triads, closed-form class counts, and network class censuses "
      "against degree-preserving null models"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "base seed for all randomness")
      ->capture_default_str();
  app.add_option("--out", global.out_dir, "output directory")
      ->capture_default_str();
  app.add_option("--format", global.formats,
                 "comma-separated outputs: json,csv,svg")
      ->capture_default_str();

  // count
  std::uint32_t n_min = 2;
  std::uint32_t n_max = 6;
  bool verify = false;
  std::string csv_path;
  CLI::App* count =
      app.add_subcommand("count", "class counts for a range of n");
  count->add_option("n_min", n_min, "smallest n (>= 2)")->required();
  count->add_option("n_max", n_max, "largest n")->required();
  count->add_flag("--verify", verify,
                  "cross-check against brute-force enumeration (n <= 4)");
  count->add_option("--csv", csv_path, "also write the table to this file");
  count->fallthrough();

  // classify
  std::vector<std::string> orderings;
  CLI::App* classify = app.add_subcommand(
      "classify", "classify one triangle of three preference orderings");
  classify->add_option("orderings", orderings, "three orderings, e.g. ABC ACB BAC")
      ->expected(3);
  classify->fallthrough();

  // analyze
  std::string edges_path, prefs_path, topics_path;
  std::size_t replicates = 10;
  std::string mode_name = "rewire+resample";
  double swaps_multiplier = 10.0;
  bool drop_incomplete = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze",
      "class census of a network against a null-model ensemble, per "
      "extracted preference set");
  analyze->add_option("edges", edges_path, "edge-list file")->required();
  analyze->add_option("prefs", prefs_path, "preferences CSV")->required();
  analyze->add_option("topics", topics_path, "topics CSV")->required();
  analyze->add_option("--replicates", replicates, "null replicates per set")
      ->capture_default_str();
  analyze
      ->add_option("--mode", mode_name,
                   "null model: rewire, resample or rewire+resample")
      ->capture_default_str();
  analyze
      ->add_option("--swaps-multiplier", swaps_multiplier,
                   "successful swaps per replicate = multiplier x edges")
      ->capture_default_str();
  analyze->add_flag("--drop-incomplete", drop_incomplete,
                    "drop nodes missing a topic instead of failing");
  bool export_sets = false;
  analyze->add_flag("--export-sets", export_sets,
                    "also write each extracted preference set as "
                    "set_NNN_prefs.csv");
  analyze->fallthrough();

  // rewire
  std::string rewire_output;
  std::uint64_t swaps = 0;
  double rewire_multiplier = 10.0;
  CLI::App* rewire_cmd = app.add_subcommand(
      "rewire", "degree-preserving randomization of an edge list");
  rewire_cmd->add_option("edges", edges_path, "edge-list file")->required();
  rewire_cmd->add_option("output", rewire_output, "rewired edge-list file")
      ->required();
  rewire_cmd->add_option("--swaps", swaps,
                         "successful swaps (default: multiplier x edges)");
  rewire_cmd
      ->add_option("--swaps-multiplier", rewire_multiplier,
                   "used when --swaps is absent")
      ->capture_default_str();
  rewire_cmd->fallthrough();

  // gen-synth
  std::size_t nodes = 844;
  std::size_t topic_count = 8;
  double skew = 0.25;
  double mean_degree = 14.5;
  CLI::App* gen = app.add_subcommand(
      "gen-synth", "synthetic preference dataset plus a companion graph");
  gen->add_option("nodes", nodes, "node count (>= 3)")->required();
  gen->add_option("topics", topic_count, "topic count")->required();
  gen->add_option("--skew", skew,
                  "0 = uniform rankings, 1 = identical per topic")
      ->capture_default_str();
  gen->add_option("--mean-degree", mean_degree, "target mean degree")
      ->capture_default_str();
  gen->fallthrough();

  // class-table
  std::uint32_t table_n = 3;
  std::string table_csv;
  CLI::App* table_cmd = app.add_subcommand(
      "class-table", "canonical representatives and orbit sizes as CSV");
  table_cmd->add_option("--n", table_n, "alternative count")
      ->capture_default_str();
  table_cmd->add_option("--csv", table_csv, "also write to this file");
  table_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      if (n_min < 2 || n_min > n_max) {
        std::cerr << "usage error: need 2 <= n_min <= n_max\n";
        return kExitUsage;
      }
      return cmd_count(n_min, n_max, verify, csv_path);
    }
    if (classify->parsed()) {
      try {
        return cmd_classify(orderings);
      } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
      } catch (const InvalidSizeError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
      } catch (const InvalidArgumentError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
      }
    }
    if (analyze->parsed()) {
      return cmd_analyze(edges_path, prefs_path, topics_path, global,
                         replicates, mode_name, swaps_multiplier,
                         drop_incomplete, export_sets);
    }
    if (rewire_cmd->parsed()) {
      return cmd_rewire(edges_path, rewire_output, swaps, rewire_multiplier,
                        global.seed);
    }
    if (gen->parsed()) {
      return cmd_gen_synth(nodes, topic_count, skew, mean_degree, global);
    }
    if (table_cmd->parsed()) {
      if (table_n < 2 || table_n > 5) {
        std::cerr << "usage error: class-table supports 2 <= n <= 5\n";
        return kExitUsage;
      }
      return cmd_class_table(table_n, table_csv);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
