#include "ahprank/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ahprank/errors.hpp"

namespace ahprank {

const char* const kRelativeScoreCaveat =
    "Scores are relative pairwise-comparison weights over this product set; "
    "they are not absolute quality ranks.";

namespace {

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
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

} // namespace

RankingReport build_report(const AhpResult& result, const std::vector<std::string>& products,
                           const std::map<std::string, Group>& groups, const Date& reference_date) {
    const std::size_t n = products.size();
    if (result.final_scores.size() != n)
        throw AhpError("report: result covers " + std::to_string(result.final_scores.size()) +
                       " products, got " + std::to_string(n) + " names");
    for (const auto& name : products)
        if (!groups.count(name)) throw AhpError("report: no group for product \"" + name + "\"");

    RankingReport report;
    report.reference_date = reference_date;
    report.method = result.method;
    report.weights = result.weights;
    report.per_quality_cr = result.per_quality_cr;
    report.caveat = kRelativeScoreCaveat;

    report.rows.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        ReportRow row;
        row.product = products[j];
        row.group = groups.at(products[j]);
        row.final_score = result.final_scores[j];
        for (const auto& [q, vec] : result.per_quality) row.quality_scores[q] = vec[j];
        report.rows.push_back(std::move(row));
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.final_score != b.final_score) return a.final_score > b.final_score;
        return a.product < b.product;
    });
    for (std::size_t j = 0; j < n; ++j) report.rows[j].rank = static_cast<int>(j) + 1;

    std::map<Group, std::pair<double, int>> sums;
    for (const auto& row : report.rows) {
        sums[row.group].first += row.final_score;
        sums[row.group].second += 1;
    }
    for (const auto& [g, acc] : sums) report.group_means[g] = acc.first / acc.second;

    return report;
}

namespace {

PlotSeries series_from_scores(const RankingReport& report, std::string label,
                              const std::map<std::string, double>& score_of) {
    PlotSeries series;
    series.label = std::move(label);
    series.bars.reserve(report.rows.size());
    for (const auto& row : report.rows)
        series.bars.push_back({row.product, score_of.at(row.product), row.group});
    std::sort(series.bars.begin(), series.bars.end(),
              [](const PlotSeries::Bar& a, const PlotSeries::Bar& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.product < b.product;
              });
    return series;
}

} // namespace

PlotSeries quality_series(const RankingReport& report, const AhpResult& result, Quality q) {
    auto it = result.per_quality.find(q);
    if (it == result.per_quality.end())
        throw AhpError(std::string("no result for quality ") + std::string(quality_id(q)));
    std::map<std::string, double> score_of;
    for (const auto& row : report.rows) score_of[row.product] = row.quality_scores.at(q);
    return series_from_scores(report, std::string(quality_id(q)), score_of);
}

PlotSeries final_series(const RankingReport& report) {
    std::map<std::string, double> score_of;
    for (const auto& row : report.rows) score_of[row.product] = row.final_score;
    return series_from_scores(report, "final", score_of);
}

std::string emit_report_json(const RankingReport& report) {
    // Hand-assembled so that key order and 6-decimal number formatting
    // are contractual, not a library detail.
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema_version\": 1,\n";
    out << "  \"reference_date\": \"" << format_date(report.reference_date) << "\",\n";
    out << "  \"method\": \"" << method_id(report.method) << "\",\n";
    out << "  \"caveat\": \"" << json_escape(report.caveat) << "\",\n";

    out << "  \"weights\": {";
    bool first = true;
    for (const auto& [q, w] : report.weights.weights) {
        out << (first ? "" : ", ") << "\"" << quality_id(q) << "\": " << fixed6(w);
        first = false;
    }
    out << "},\n";

    out << "  \"per_quality_cr\": {";
    first = true;
    for (const auto& [q, cr] : report.per_quality_cr) {
        out << (first ? "" : ", ") << "\"" << quality_id(q) << "\": ";
        if (cr)
            out << fixed6(*cr);
        else
            out << "null";
        first = false;
    }
    out << "},\n";

    out << "  \"rows\": [\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        out << "    {\"rank\": " << row.rank << ", \"name\": \"" << json_escape(row.product)
            << "\", \"group\": \"" << group_id(row.group) << "\", \"final\": "
            << fixed6(row.final_score) << ", \"scores\": {";
        bool inner_first = true;
        for (const auto& [q, score] : row.quality_scores) {
            out << (inner_first ? "" : ", ") << "\"" << quality_id(q) << "\": " << fixed6(score);
            inner_first = false;
        }
        out << "}}" << (i + 1 < report.rows.size() ? "," : "") << "\n";
    }
    out << "  ],\n";

    out << "  \"group_means\": {";
    first = true;
    for (const auto& [g, mean] : report.group_means) {
        out << (first ? "" : ", ") << "\"" << group_id(g) << "\": " << fixed6(mean);
        first = false;
    }
    out << "}\n";
    out << "}\n";
    return out.str();
}

std::string emit_series_csv(const PlotSeries& series) {
    std::string out = "product,group,score\n";
    for (const auto& bar : series.bars) {
        out += bar.product;
        out += ',';
        out += group_id(bar.group);
        out += ',';
        out += fixed6(bar.score);
        out += '\n';
    }
    return out;
}

const std::string& SvgStyle::color_for(Group g) const {
    switch (g) {
        case Group::desktop_gis: return desktop_color;
        case Group::standalone_tool: return standalone_color;
        case Group::programming_library: return library_color;
    }
    return desktop_color;
}

std::string render_svg_bars(const PlotSeries& series, const SvgStyle& style) {
    if (series.bars.empty()) throw AhpError("svg: series has no bars");

    const int n = static_cast<int>(series.bars.size());
    const int row_h = style.bar_height + style.bar_gap;
    const int width = style.margin * 2 + style.label_width + style.plot_width + style.value_width;
    const int height = style.margin * 2 + style.title_height + n * row_h;
    const int plot_x = style.margin + style.label_width;
    const int top = style.margin + style.title_height;

    double max_score = 0.0;
    for (const auto& bar : series.bars) max_score = std::max(max_score, bar.score);
    if (max_score <= 0.0) max_score = 1.0;

    auto px = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    svg << "  <text x=\"" << style.margin << "\" y=\"" << style.margin + 16
        << "\" font-family=\"sans-serif\" font-size=\"15\" font-weight=\"bold\">"
        << xml_escape(series.label) << "</text>\n";

    for (int i = 0; i < n; ++i) {
        const auto& bar = series.bars[static_cast<std::size_t>(i)];
        const int y = top + i * row_h;
        const double bar_w = style.plot_width * (bar.score / max_score);
        svg << "  <text x=\"" << plot_x - 6 << "\" y=\"" << y + style.bar_height - 4
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
            << xml_escape(bar.product) << "</text>\n";
        svg << "  <rect x=\"" << plot_x << "\" y=\"" << y << "\" width=\"" << px(bar_w)
            << "\" height=\"" << style.bar_height << "\" fill=\"" << style.color_for(bar.group)
            << "\"/>\n";
        svg << "  <text x=\"" << px(plot_x + bar_w + 6) << "\" y=\"" << y + style.bar_height - 4
            << "\" font-family=\"sans-serif\" font-size=\"10\">" << fixed6(bar.score)
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string emit_stats_text(const SummaryStats& stats) {
    std::ostringstream out;
    auto line = [&out](std::string_view label, const StatCount& c) {
        out << label << ": " << c.count << "/" << c.known << "\n";
    };
    out << "products: " << stats.n << "\n";
    line("open_source", stats.open_source);
    line("alive", stats.alive);
    line("dead", stats.dead);
    line("unclear_status", stats.unclear_status);
    line("windows", stats.windows);
    line("cpp", stats.cpp);
    line("developers_lte_5", stats.few_developers);
    line("install_instructions", stats.install_instructions);
    line("linear_instructions", stats.linear_instructions);
    line("automated_install", stats.automated_install);
    line("install_validation", stats.install_validation);

    out << "licenses:";
    bool any = false;
    for (const auto& [license, count] : stats.license_histogram) {
        out << (any ? "," : "") << " " << license_id(license) << "=" << count;
        any = true;
    }
    out << "\n";

    auto histogram = [&out](std::string_view label, const std::map<std::string, int>& h) {
        out << label << ":";
        bool first = true;
        for (const auto& [member, count] : h) {
            out << (first ? "" : ",") << " " << member << "=" << count;
            first = false;
        }
        out << "\n";
    };
    histogram("issue_trackers", stats.issue_tracker_histogram);
    histogram("version_control", stats.version_control_histogram);
    return out.str();
}

std::string emit_stats_json(const SummaryStats& stats) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json j;
    j["n"] = stats.n;
    auto put = [&j](const char* key, const StatCount& c) {
        j[key] = {{"count", c.count}, {"known", c.known}};
    };
    put("open_source", stats.open_source);
    put("alive", stats.alive);
    put("dead", stats.dead);
    put("unclear_status", stats.unclear_status);
    put("windows", stats.windows);
    put("cpp", stats.cpp);
    put("developers_lte_5", stats.few_developers);
    put("install_instructions", stats.install_instructions);
    put("linear_instructions", stats.linear_instructions);
    put("automated_install", stats.automated_install);
    put("install_validation", stats.install_validation);
    ordered_json licenses;
    for (const auto& [license, count] : stats.license_histogram)
        licenses[std::string(license_id(license))] = count;
    j["licenses"] = std::move(licenses);
    ordered_json trackers;
    for (const auto& [member, count] : stats.issue_tracker_histogram) trackers[member] = count;
    j["issue_trackers"] = std::move(trackers);
    ordered_json vcs;
    for (const auto& [member, count] : stats.version_control_histogram) vcs[member] = count;
    j["version_control"] = std::move(vcs);
    return j.dump(2) + "\n";
}

} // namespace ahprank
