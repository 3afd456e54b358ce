#include "symlab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace symlab {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// panel geometry
constexpr double kPlotLeft = 150.0;
constexpr double kPlotWidth = 520.0;
constexpr double kBarHeight = 22.0;
constexpr double kBarPitch = 34.0;
constexpr double kTopMargin = 48.0;

double to_x(double score) { return kPlotLeft + score * kPlotWidth; }

} // namespace

std::string render_svg_panel(const CellReport& cell) {
    const auto values = cell_category_values(cell);
    const double height = kTopMargin + kBarPitch * 8 + 36.0;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"700\" height=\"" +
           fmt("%.0f", height) + "\" viewBox=\"0 0 700 " + fmt("%.0f", height) + "\">\n";
    svg += "<style>text{font-family:sans-serif;font-size:13px;}.t{font-size:15px;font-weight:bold;}"
           ".axis{stroke:#444;stroke-width:1;}.grid{stroke:#ddd;stroke-width:1;}"
           ".whisker{stroke:#222;stroke-width:1.5;}</style>\n";
    svg += "<rect width=\"700\" height=\"" + fmt("%.0f", height) + "\" fill=\"white\"/>\n";
    svg += "<text class=\"t\" x=\"20\" y=\"26\">" + std::string(to_string(cell.encoding)) +
           " encoding, " + std::to_string(cell.layers) +
           (cell.layers == 1 ? " hidden layer" : " hidden layers") + "</text>\n";

    // x grid and labels
    for (int tick = 0; tick <= 4; ++tick) {
        const double score = tick * 0.25;
        const double x = to_x(score);
        svg += "<line class=\"grid\" x1=\"" + fmt("%.1f", x) + "\" y1=\"" +
               fmt("%.1f", kTopMargin - 8) + "\" x2=\"" + fmt("%.1f", x) + "\" y2=\"" +
               fmt("%.1f", kTopMargin + kBarPitch * 8) + "\"/>\n";
        svg += "<text x=\"" + fmt("%.1f", x - 10) + "\" y=\"" +
               fmt("%.1f", kTopMargin + kBarPitch * 8 + 18) + "\">" + fmt("%.2f", score) +
               "</text>\n";
    }

    for (std::size_t c = 0; c < kCategories.size(); ++c) {
        const double y = kTopMargin + kBarPitch * static_cast<double>(c);
        const double mid = y + kBarHeight / 2.0;
        svg += "<text x=\"20\" y=\"" + fmt("%.1f", mid + 5) + "\">" +
               std::string(kCategories[c]) + "</text>\n";
        const Summary s = summarize(values[c]);
        if (s.n == 0) {
            svg += "<text x=\"" + fmt("%.1f", kPlotLeft + 4) + "\" y=\"" +
                   fmt("%.1f", mid + 5) + "\">n/a</text>\n";
            continue;
        }
        const char* fill = c < 2 ? "#5b84b1" : "#bf6767";
        svg += "<rect x=\"" + fmt("%.1f", kPlotLeft) + "\" y=\"" + fmt("%.1f", y) +
               "\" width=\"" + fmt("%.2f", s.mean * kPlotWidth) + "\" height=\"" +
               fmt("%.0f", kBarHeight) + "\" fill=\"" + fill + "\"/>\n";
        const double lo = to_x(std::max(0.0, s.mean - s.ci95));
        const double hi = to_x(std::min(1.0, s.mean + s.ci95));
        svg += "<line class=\"whisker\" x1=\"" + fmt("%.2f", lo) + "\" y1=\"" +
               fmt("%.1f", mid) + "\" x2=\"" + fmt("%.2f", hi) + "\" y2=\"" +
               fmt("%.1f", mid) + "\"/>\n";
        for (const double x : {lo, hi}) {
            svg += "<line class=\"whisker\" x1=\"" + fmt("%.2f", x) + "\" y1=\"" +
                   fmt("%.1f", mid - 5) + "\" x2=\"" + fmt("%.2f", x) + "\" y2=\"" +
                   fmt("%.1f", mid + 5) + "\"/>\n";
        }
        svg += "<text x=\"" + fmt("%.1f", to_x(1.0) + 8) + "\" y=\"" + fmt("%.1f", mid + 5) +
               "\">" + fmt("%.3f", s.mean) + "</text>\n";
    }
    svg += "<line class=\"axis\" x1=\"" + fmt("%.1f", kPlotLeft) + "\" y1=\"" +
           fmt("%.1f", kTopMargin - 8) + "\" x2=\"" + fmt("%.1f", kPlotLeft) + "\" y2=\"" +
           fmt("%.1f", kTopMargin + kBarPitch * 8) + "\"/>\n";
    svg += "</svg>\n";
    return svg;
}

std::string render_text_table(const ScoreReport& report) {
    std::string out;
    char row[160];
    for (const CellReport& cell : report.cells) {
        out += std::string(to_string(cell.encoding)) + " encoding, " +
               std::to_string(cell.layers) + " hidden layer(s)\n";
        out += "  category    mean      std       ci95      n\n";
        const auto values = cell_category_values(cell);
        for (std::size_t c = 0; c < kCategories.size(); ++c) {
            const Summary s = summarize(values[c]);
            std::snprintf(row, sizeof row, "  %-10s  %-8.4f  %-8.4f  %-8.4f  %zu\n",
                          kCategories[c], s.mean, s.stddev, s.ci95, s.n);
            out += row;
        }
        out += '\n';
    }
    return out;
}

std::vector<std::string> render_report(const ScoreReport& report,
                                       const std::string& out_dir,
                                       ReportStyle style) {
    if (report.cells.empty()) throw Error("cannot render an empty report");
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    if (style == ReportStyle::bars_svg) {
        for (const CellReport& cell : report.cells) {
            const std::filesystem::path path =
                dir / ("panel_" + std::string(to_string(cell.encoding)) + "_" +
                       std::to_string(cell.layers) + ".svg");
            std::ofstream out(path);
            out << render_svg_panel(cell);
            written.push_back(path.string());
        }
    } else {
        const std::filesystem::path path = dir / "report.txt";
        std::ofstream out(path);
        out << render_text_table(report);
        written.push_back(path.string());
    }
    return written;
}

} // namespace symlab
