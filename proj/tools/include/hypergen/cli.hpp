#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypergen/plot.hpp"
#include "hypergen/report.hpp"

namespace hypergen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point behind the `hypergen` binary. `args` excludes the program
/// name. Usage problems go to `err` and return 1, failures at run time
/// return 2.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The plot drawn for a measured pattern, or nothing when the statistic has
/// no plottable points.
std::optional<PlotSpec> pattern_plot(PatternId id, const PatternStats& stats);

/// Writes `<output>/report/*.csv` and `<output>/plots/*.svg`.
void write_report_files(const PatternReport& report, const std::string& output_dir);

}  // namespace hypergen::cli
