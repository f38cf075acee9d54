#pragma once

// Sweep output files. The CSV has one row per cell in (n, value) order:
//   n,z,trials,frac_insoluble_full,frac_insoluble_2sat,mean_decisions,
//   median_decisions,sqrt_mean_decisions
// (the second column is named "p" for uniform-model sweeps). Numbers are
// printed with "%.10g", so equal summaries give byte-identical files.

#include "nkland/experiment.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace nkland {

std::string csv_header(SweepParameter parameter);
void write_csv(const SweepSummary &summary, std::ostream &out);
std::string to_csv(const SweepSummary &summary);

/// Grid, seeds, tool version and per-n crossing estimates.
std::string metadata_json(const SweepGrid &grid, const SweepSummary &summary);

/// One JSON object per line.
std::string trial_json(const TrialRecord &record);

/// Insoluble-fraction curves (full and 2-SAT sub-problem), one polyline per n.
std::string fraction_svg(const SweepSummary &summary);

/// Writes summary.csv, meta.json and optionally fractions.svg into dir.
/// Throws Error naming the path on I/O failure.
void write_report(const std::filesystem::path &dir, const SweepGrid &grid,
                  const SweepSummary &summary, bool svg = false);

} // namespace nkland
