#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ahprank/ahp.hpp"
#include "ahprank/dataset.hpp"
#include "ahprank/errors.hpp"
#include "ahprank/grading_template.hpp"
#include "ahprank/report.hpp"

namespace fs = std::filesystem;
using namespace ahprank;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("error writing " + path.string());
}

Date parse_reference_date(const std::string& flag) {
    if (flag.empty()) return current_date_utc();
    const auto d = parse_date(flag);
    if (!d) throw ParseError("--reference-date must be YYYY-MM-DD, got \"" + flag + "\"");
    return *d;
}

void print_violations(const std::vector<Violation>& violations) {
    for (const auto& v : violations) std::cerr << v.to_string() << "\n";
}

std::vector<ProductRecord> load_records_strict(const fs::path& path, bool strict) {
    auto parsed = parse_records(read_file(path), builtin_template());
    if (!parsed.violations.empty()) {
        print_violations(parsed.violations);
        if (strict)
            throw ParseError(std::to_string(parsed.violations.size()) + " validation violation(s) in " +
                             path.string());
        std::cerr << "warning: continuing despite " << parsed.violations.size()
                  << " violation(s) (--no-strict)\n";
    }
    return std::move(parsed.records);
}

CriteriaWeights load_weights(const std::string& spec, const GradeMatrix& gm) {
    if (spec == "equal") return CriteriaWeights::equal(gm.qualities);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(spec));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("weights file: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw ParseError("weights file must be a JSON object of quality -> number");
    std::map<Quality, double> raw;
    for (const auto& [key, value] : doc.items()) {
        const auto q = parse_quality(key);
        if (!q) throw ParseError("weights file: unknown quality \"" + key + "\"");
        if (!value.is_number()) throw ParseError("weights file: weight for " + key + " is not a number");
        raw[*q] = value.get<double>();
    }
    double raw_sum = 0.0;
    auto weights = CriteriaWeights::normalized(std::move(raw), &raw_sum);
    if (std::abs(raw_sum - 1.0) > 1e-6)
        std::cerr << "warning: weights sum to " << raw_sum << "; renormalized to 1\n";
    return weights.restricted_to(gm.qualities);
}

void print_ranking_table(const RankingReport& report) {
    std::size_t name_w = 7;
    for (const auto& row : report.rows) name_w = std::max(name_w, row.product.size());
    std::printf("%4s  %-*s  %-20s  %s\n", "rank", static_cast<int>(name_w), "product", "group", "final");
    for (const auto& row : report.rows)
        std::printf("%4d  %-*s  %-20s  %.6f\n", row.rank, static_cast<int>(name_w),
                    row.product.c_str(), std::string(group_id(row.group)).c_str(), row.final_score);
    std::printf("\n%s\n", report.caveat.c_str());
}

int cmd_rank(const std::string& grades_path, const std::string& records_path,
             const std::string& weights_spec, const std::string& method_name,
             const std::string& out_dir, const std::string& reference_flag, bool strict) {
    const Date reference = parse_reference_date(reference_flag);
    const auto method = parse_method(method_name);
    if (!method) throw ParseError("unknown method \"" + method_name + "\" (use column or eigen)");

    const GradeMatrix gm = parse_grade_matrix(read_file(grades_path));

    std::map<std::string, Group> groups;
    for (std::size_t j = 0; j < gm.products.size(); ++j) groups[gm.products[j]] = gm.groups[j];

    if (!records_path.empty()) {
        const auto records = load_records_strict(records_path, strict);
        std::map<std::string, Group> record_groups;
        for (const auto& rec : records) record_groups[rec.name] = rec.group;
        for (const auto& name : gm.products) {
            auto it = record_groups.find(name);
            if (it == record_groups.end())
                throw ParseError("product \"" + name + "\" is in the grade matrix but not the records");
            if (it->second != groups[name])
                throw ParseError("product \"" + name + "\" has different groups in matrix and records");
        }
        if (records.size() != gm.products.size())
            throw ParseError("records and grade matrix cover different product sets");
    }

    const CriteriaWeights weights = load_weights(weights_spec, gm);
    const AhpResult result = run_ahp(gm, weights, *method);
    const RankingReport report = build_report(result, gm.products, groups, reference);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    fs::create_directories(fs::path(out_dir) / "svg", ec);
    if (ec) throw IoError("cannot create output directory " + out_dir);

    write_file(fs::path(out_dir) / "report.json", emit_report_json(report));
    for (Quality q : gm.qualities) {
        const PlotSeries series = quality_series(report, result, q);
        write_file(fs::path(out_dir) / (std::string(quality_id(q)) + ".csv"),
                   emit_series_csv(series));
        write_file(fs::path(out_dir) / "svg" / ("ahp_" + std::string(quality_id(q)) + ".svg"),
                   render_svg_bars(series));
    }
    const PlotSeries final = final_series(report);
    write_file(fs::path(out_dir) / "final.csv", emit_series_csv(final));
    write_file(fs::path(out_dir) / "svg" / "ahp_final.svg", render_svg_bars(final));

    print_ranking_table(report);
    return kExitOk;
}

int cmd_stats(const std::string& records_path, const std::string& reference_flag,
              const std::string& out_dir, bool strict) {
    const Date reference = parse_reference_date(reference_flag);
    auto records = load_records_strict(records_path, strict);

    // Products with an unclear status but a known update date are
    // classified against the reference date.
    for (auto& rec : records)
        if (rec.status == ProductStatus::unclear && rec.last_updated)
            rec.status = classify_liveness(*rec.last_updated, reference) == Liveness::alive
                             ? ProductStatus::alive
                             : ProductStatus::dead;

    const SummaryStats stats = summary_stats(records);
    std::fputs(emit_stats_text(stats).c_str(), stdout);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir);
    write_file(fs::path(out_dir) / "stats.json", emit_stats_json(stats));
    return kExitOk;
}

int cmd_validate(const std::string& records_path, const std::string& grades_path) {
    std::size_t violation_count = 0;

    if (!records_path.empty()) {
        const auto parsed = parse_records(read_file(records_path), builtin_template());
        print_violations(parsed.violations);
        violation_count += parsed.violations.size();
    }
    if (!grades_path.empty()) {
        try {
            parse_grade_matrix(read_file(grades_path));
        } catch (const ParseError& e) {
            std::cerr << e.what() << "\n";
            ++violation_count;
        }
    }

    std::printf("%zu violation%s\n", violation_count, violation_count == 1 ? "" : "s");
    return violation_count == 0 ? kExitOk : kExitValidation;
}

int cmd_template_export(const std::string& out_path) {
    const std::string schema = template_to_json(builtin_template());
    if (out_path.empty())
        std::fputs(schema.c_str(), stdout);
    else
        write_file(out_path, schema);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"AHP ranking of software products from quality gradings"};
    app.require_subcommand(1);

    std::string grades_path, records_path, out_dir = ".", weights_spec = "equal";
    std::string method_name = "column", reference_flag, template_out;
    bool strict = true;

    auto* rank = app.add_subcommand("rank", "Rank products per quality and overall");
    rank->add_option("--grades", grades_path, "Grade matrix CSV")->required();
    rank->add_option("--records", records_path, "Product records JSON (cross-checked)");
    rank->add_option("--weights", weights_spec, "\"equal\" or a JSON weights file");
    rank->add_option("--method", method_name, "column (default) or eigen");
    rank->add_option("--out", out_dir, "Output directory")->required();
    rank->add_option("--reference-date", reference_flag, "Pin the report date (YYYY-MM-DD)");
    rank->add_flag("--strict,!--no-strict", strict, "Fail on validation violations (default)");

    auto* stats = app.add_subcommand("stats", "Summary statistics over a records file");
    stats->add_option("--records", records_path, "Product records JSON")->required();
    stats->add_option("--reference-date", reference_flag, "Liveness reference date (YYYY-MM-DD)");
    stats->add_option("--out", out_dir, "Directory for stats.json");
    stats->add_flag("--strict,!--no-strict", strict, "Fail on validation violations (default)");

    auto* validate = app.add_subcommand("validate", "Validate records and/or a grade matrix");
    validate->add_option("--records", records_path, "Product records JSON");
    validate->add_option("--grades", grades_path, "Grade matrix CSV");

    auto* tmpl = app.add_subcommand("template", "Grading template operations");
    tmpl->require_subcommand(1);
    auto* tmpl_export = tmpl->add_subcommand("export", "Write the built-in template schema JSON");
    tmpl_export->add_option("--out", template_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank->parsed())
            return cmd_rank(grades_path, records_path, weights_spec, method_name, out_dir,
                            reference_flag, strict);
        if (stats->parsed()) return cmd_stats(records_path, reference_flag, out_dir, strict);
        if (validate->parsed()) {
            if (records_path.empty() && grades_path.empty()) {
                std::cerr << "validate: give --records and/or --grades\n";
                return kExitValidation;
            }
            return cmd_validate(records_path, grades_path);
        }
        if (tmpl_export->parsed()) return cmd_template_export(template_out);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const AhpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
