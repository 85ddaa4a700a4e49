#pragma once

#include <iosfwd>
#include <string>

#include "preftriads/analysis.hpp"

namespace preftriads {

// Machine-readable report: schema version, config echo, per-set entries.
// Output is deterministic for a given report (ordered keys, stable number
// formatting), so identical runs serialize byte-identically.
std::string report_to_json(const ExperimentReport& report);

// Per-set CSV: class_id,observed_count,ensemble_mean,ensemble_std
void write_histogram_csv(const SetResult& set, std::ostream& out);

// Grouped-bar histogram (observed plus one bar per replicate and class) as a
// self-contained SVG with no external references.
void write_histogram_svg(const SetResult& set, std::ostream& out);

}  // namespace preftriads
