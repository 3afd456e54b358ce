// report.hpp -- figure-style output: SVG bar panels and plain-text tables

#pragma once

#include <string>
#include <vector>

#include "symlab/experiment.hpp"

namespace symlab {

enum class ReportStyle { bars_svg, table_text };

/// One self-contained SVG panel for a grid cell: eight horizontal bars (the
/// two training means on top, then the six probe categories), bar length =
/// mean score on a [0,1] axis, whiskers = 95% CI.
std::string render_svg_panel(const CellReport& cell);

/// Aligned per-cell tables of mean/std/ci95/n.
std::string render_text_table(const ScoreReport& report);

/// Writes panel_<encoding>_<layers>.svg per cell and/or report.txt into
/// out_dir; returns the paths written. Throws Error on an empty report.
std::vector<std::string> render_report(const ScoreReport& report,
                                       const std::string& out_dir,
                                       ReportStyle style);

} // namespace symlab
