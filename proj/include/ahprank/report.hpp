#ifndef AHPRANK_REPORT_HPP
#define AHPRANK_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahprank/ahp.hpp"
#include "ahprank/dataset.hpp"
#include "ahprank/dates.hpp"

namespace ahprank {

/// Disclaimer carried by every report: AHP scores compare the graded
/// products against each other only.
extern const char* const kRelativeScoreCaveat;

struct ReportRow {
    int rank = 0; // 1..n, dense, consistent with row order
    std::string product;
    Group group = Group::desktop_gis;
    double final_score = 0.0;
    std::map<Quality, double> quality_scores;
};

struct RankingReport {
    Date reference_date;
    Method method = Method::column_normalization;
    CriteriaWeights weights;
    std::vector<ReportRow> rows; // final score descending, ties by name
    std::map<Group, double> group_means;
    std::map<Quality, std::optional<double>> per_quality_cr;
    std::string caveat;
};

/// One bar series per quality (or the final aggregate), descending by
/// score with the report's tie order.
struct PlotSeries {
    std::string label;
    struct Bar {
        std::string product;
        double score = 0.0;
        Group group = Group::desktop_gis;
    };
    std::vector<Bar> bars;
};

/// Assembles the report. `groups` maps every product in the result to
/// its set; a missing or extra product throws AhpError.
RankingReport build_report(const AhpResult& result, const std::vector<std::string>& products,
                           const std::map<std::string, Group>& groups, const Date& reference_date);

PlotSeries quality_series(const RankingReport& report, const AhpResult& result, Quality q);
PlotSeries final_series(const RankingReport& report);

// Deterministic emitters: stable key order, scores fixed to 6 decimals,
// byte-identical output for equal inputs.
std::string emit_report_json(const RankingReport& report);
std::string emit_series_csv(const PlotSeries& series);

struct SvgStyle {
    // Fixed palette, one color per product set.
    std::string desktop_color = "#1b9e77";
    std::string standalone_color = "#d95f02";
    std::string library_color = "#7570b3";
    int plot_width = 560;   // bar area, px
    int label_width = 150;  // product names, px
    int value_width = 80;   // numeric labels, px
    int bar_height = 16;
    int bar_gap = 6;
    int margin = 12;
    int title_height = 28;

    const std::string& color_for(Group g) const;
};

/// Horizontal bar chart, one bar per product, lengths proportional to
/// score (the longest bar spans the plot width). Self-contained SVG 1.1,
/// deterministic byte-for-byte. Throws AhpError on an empty series.
std::string render_svg_bars(const PlotSeries& series, const SvgStyle& style = {});

// Summary-statistics emitters used by the stats command.
std::string emit_stats_text(const SummaryStats& stats);
std::string emit_stats_json(const SummaryStats& stats);

} // namespace ahprank

#endif
