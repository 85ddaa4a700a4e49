#include "preftriads/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "json.hpp"

namespace preftriads {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T, std::size_t N>
ordered_json to_array(const std::array<T, N>& xs) {
  ordered_json a = ordered_json::array();
  for (const T& x : xs) a.push_back(x);
  return a;
}

ordered_json histogram_json(const ClassHistogram& h) {
  ordered_json j;
  j["total"] = h.total();
  j["counts"] = to_array(h.counts);
  j["frequencies"] = to_array(h.frequencies());
  return j;
}

ordered_json ensemble_json(const NullEnsemble& e) {
  ordered_json j;
  j["mode"] = to_string(e.mode);
  j["swaps_per_replicate"] = e.swaps_per_replicate;
  j["replicates"] = e.replicates.size();
  j["seeds"] = e.seeds;
  ordered_json totals = ordered_json::array();
  ordered_json counts = ordered_json::array();
  for (const ClassHistogram& h : e.replicates) {
    totals.push_back(h.total());
    counts.push_back(to_array(h.counts));
  }
  j["totals"] = std::move(totals);
  j["counts"] = std::move(counts);
  return j;
}

ordered_json comparison_json(const ComparisonReport& c) {
  ordered_json j;
  j["tv_distance"] = c.tv_distance;
  j["chi_square"] = c.chi_square;
  j["chi_square_df"] = c.chi_square_df;
  j["p_overall"] = c.p_overall;
  j["out_of_support_classes"] = c.out_of_support_classes;
  ordered_json per_class = ordered_json::array();
  for (std::size_t i = 0; i < c.per_class.size(); ++i) {
    const auto& pc = c.per_class[i];
    ordered_json row;
    row["class_id"] = i + 1;
    row["observed_count"] = pc.observed_count;
    row["observed_freq"] = pc.observed_freq;
    row["mean_count"] = pc.mean_count;
    row["std_count"] = pc.std_count;
    row["mean_freq"] = pc.mean_freq;
    row["std_freq"] = pc.std_freq;
    row["p_two_sided"] = pc.p_two_sided;
    per_class.push_back(std::move(row));
  }
  j["per_class"] = std::move(per_class);
  return j;
}

}  // namespace

std::string report_to_json(const ExperimentReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["config"]["replicates"] = report.config.replicates;
  j["config"]["mode"] = to_string(report.config.mode);
  j["config"]["base_seed"] = report.config.base_seed;
  j["config"]["swaps_multiplier"] = report.config.swaps_multiplier;
  j["config"]["swaps_per_replicate"] = report.swaps_per_replicate;
  j["config"]["rewire_preserves_connectivity"] = false;
  j["graph"]["nodes"] = report.graph.nodes;
  j["graph"]["edges"] = report.graph.edges;
  j["graph"]["triangles"] = report.graph.triangle_count;
  j["graph"]["closed_triangle_fraction"] =
      report.graph.closed_triangle_fraction;

  ordered_json sets = ordered_json::array();
  for (const SetResult& s : report.sets) {
    ordered_json entry;
    entry["set_index"] = s.set_index;
    entry["topic_index"] = s.topic_index;
    entry["subset_rank"] = s.subset_rank;
    entry["topic"] = s.topic_name;
    entry["items"] = s.item_labels;
    if (!s.error.empty()) {
      entry["error"] = s.error;
    } else {
      entry["observed"] = histogram_json(s.observed);
      if (s.ensemble) entry["ensemble"] = ensemble_json(*s.ensemble);
      entry["comparison"] =
          s.comparison ? comparison_json(*s.comparison) : ordered_json();
      entry["flags"]["observed_zero_triangles"] = s.observed_zero_triangles;
      entry["flags"]["ensemble_zero_triangles"] = s.ensemble_zero_triangles;
    }
    sets.push_back(std::move(entry));
  }
  j["sets"] = std::move(sets);
  return j.dump(2) + "\n";
}

void write_histogram_csv(const SetResult& set, std::ostream& out) {
  out << "class_id,observed_count,ensemble_mean,ensemble_std\n";
  std::array<double, 10> mean{};
  std::array<double, 10> std_dev{};
  if (set.ensemble && !set.ensemble->replicates.empty()) {
    const double r = static_cast<double>(set.ensemble->replicates.size());
    for (const ClassHistogram& h : set.ensemble->replicates) {
      for (std::size_t c = 0; c < 10; ++c) {
        mean[c] += static_cast<double>(h.counts[c]);
      }
    }
    for (double& m : mean) m /= r;
    if (set.ensemble->replicates.size() > 1) {
      for (const ClassHistogram& h : set.ensemble->replicates) {
        for (std::size_t c = 0; c < 10; ++c) {
          const double d = static_cast<double>(h.counts[c]) - mean[c];
          std_dev[c] += d * d;
        }
      }
      for (double& s : std_dev) s = std::sqrt(s / (r - 1.0));
    }
  }
  char buffer[64];
  for (std::size_t c = 0; c < 10; ++c) {
    std::snprintf(buffer, sizeof(buffer), "%zu,%llu,%.6f,%.6f\n", c + 1,
                  static_cast<unsigned long long>(set.observed.counts[c]),
                  mean[c], std_dev[c]);
    out << buffer;
  }
}

namespace {

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double value, const char* format = "%.2f") {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), format, value);
  return buffer;
}

}  // namespace

void write_histogram_svg(const SetResult& set, std::ostream& out) {
  const double width = 960.0;
  const double height = 420.0;
  const double left = 64.0;
  const double right = 24.0;
  const double top = 48.0;
  const double bottom = 64.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  const std::array<double, 10> observed = set.observed.frequencies();
  std::vector<std::array<double, 10>> replicate_freqs;
  if (set.ensemble) {
    for (const ClassHistogram& h : set.ensemble->replicates) {
      replicate_freqs.push_back(h.frequencies());
    }
  }

  double ymax = 0.0;
  for (const double f : observed) ymax = std::max(ymax, f);
  for (const auto& f : replicate_freqs) {
    for (const double v : f) ymax = std::max(ymax, v);
  }
  ymax = std::max(0.05, std::ceil(ymax * 20.0) / 20.0);  // multiples of 0.05

  const auto y_of = [&](double freq) { return top + plot_h * (1.0 - freq / ymax); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n"
      << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  std::string title = "triangle classes: " + set.topic_name + " / " +
                      set.item_labels[0] + ", " + set.item_labels[1] + ", " +
                      set.item_labels[2];
  out << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"16\" fill=\"#222\">"
      << xml_escape(title) << "</text>\n";

  // y grid and labels
  for (int tick = 0; tick <= 5; ++tick) {
    const double freq = ymax * tick / 5.0;
    const double y = y_of(freq);
    out << "<line x1=\"" << left << "\" y1=\"" << fmt(y) << "\" x2=\""
        << width - right << "\" y2=\"" << fmt(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << fmt(y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\" "
           "text-anchor=\"end\">"
        << fmt(freq, "%.3f") << "</text>\n";
  }

  const std::size_t bars_per_group = 1 + replicate_freqs.size();
  const double group_w = plot_w / 10.0;
  const double bar_w =
      std::max(0.5, group_w * 0.9 / static_cast<double>(bars_per_group));
  for (std::size_t c = 0; c < 10; ++c) {
    const double group_x = left + group_w * static_cast<double>(c) +
                           group_w * 0.05;
    // observed bar first, then the replicates
    out << "<rect x=\"" << fmt(group_x) << "\" y=\"" << fmt(y_of(observed[c]))
        << "\" width=\"" << fmt(bar_w) << "\" height=\""
        << fmt(plot_h - (y_of(observed[c]) - top)) << "\" fill=\"#1f6fb4\"/>\n";
    for (std::size_t i = 0; i < replicate_freqs.size(); ++i) {
      const double x = group_x + bar_w * static_cast<double>(i + 1);
      const double freq = replicate_freqs[i][c];
      out << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y_of(freq))
          << "\" width=\"" << fmt(bar_w) << "\" height=\""
          << fmt(plot_h - (y_of(freq) - top)) << "\" fill=\"#b8b8b8\"/>\n";
    }
    out << "<text x=\"" << fmt(group_x + group_w * 0.45) << "\" y=\""
        << fmt(top + plot_h + 18)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\" "
           "text-anchor=\"middle\">"
        << c + 1 << "</text>\n";
  }

  out << "<line x1=\"" << left << "\" y1=\"" << fmt(top + plot_h) << "\" x2=\""
      << width - right << "\" y2=\"" << fmt(top + plot_h)
      << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << fmt(left + plot_w / 2) << "\" y=\""
      << fmt(height - 22)
      << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\" "
         "text-anchor=\"middle\">equivalence class</text>\n";

  // legend
  const double lx = width - right - 230.0;
  out << "<rect x=\"" << fmt(lx) << "\" y=\"14\" width=\"12\" height=\"12\" "
         "fill=\"#1f6fb4\"/>\n"
      << "<text x=\"" << fmt(lx + 18)
      << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#222\">observed</text>\n"
      << "<rect x=\"" << fmt(lx + 100) << "\" y=\"14\" width=\"12\" "
         "height=\"12\" fill=\"#b8b8b8\"/>\n"
      << "<text x=\"" << fmt(lx + 118)
      << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#222\">null replicates</text>\n";

  out << "</svg>\n";
}

}  // namespace preftriads
