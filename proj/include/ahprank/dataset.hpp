#ifndef AHPRANK_DATASET_HPP
#define AHPRANK_DATASET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahprank/dates.hpp"
#include "ahprank/grading_template.hpp"
#include "ahprank/quality.hpp"

namespace ahprank {

enum class ProductStatus { alive, dead, unclear };
enum class ProductCategory { concept_, public_, private_ };
enum class DevelopmentModel { open_source, freeware, commercial };
enum class License { gnu_gpl, bsd, mit, terms_of_use, trial, none, unclear };
enum class Platform { windows, linux_, osx, android, other };
enum class Language { fortran, matlab, c, cpp, java, r, ruby, python, cython, basic, pascal, idl, unclear };

std::string_view status_id(ProductStatus);
std::string_view category_id(ProductCategory);
std::string_view development_model_id(DevelopmentModel);
std::string_view license_id(License);
std::string_view platform_id(Platform);
std::string_view language_id(Language);

std::optional<ProductStatus> parse_status(std::string_view);
std::optional<ProductCategory> parse_category(std::string_view);
std::optional<DevelopmentModel> parse_development_model(std::string_view);
std::optional<License> parse_license(std::string_view);
std::optional<Platform> parse_platform(std::string_view);
std::optional<Language> parse_language(std::string_view);

struct ProductRecord {
    std::string name;
    Group group = Group::desktop_gis;
    ProductStatus status = ProductStatus::unclear;
    std::optional<Date> last_updated;
    ProductCategory category = ProductCategory::public_;
    DevelopmentModel development_model = DevelopmentModel::freeware;
    License license = License::unclear;
    std::vector<Platform> platforms; // kept sorted, unique
    std::vector<Language> languages; // kept sorted, unique
    std::optional<std::int64_t> n_developers;
    std::map<std::string, Answer> answers; // question id -> answer

    bool has_platform(Platform p) const;
    bool has_language(Language l) const;

    friend bool operator==(const ProductRecord&, const ProductRecord&) = default;
};

/// Grades for n products over m qualities, every cell an integer 1..10.
/// Parsed column order is canonicalized to the Quality enumeration order.
struct GradeMatrix {
    std::vector<std::string> products;
    std::vector<Group> groups; // parallel to products
    std::vector<Quality> qualities;
    std::vector<int> grades; // row-major, products x qualities

    int at(std::size_t product, std::size_t quality) const {
        return grades[product * qualities.size() + quality];
    }
    std::size_t product_count() const { return products.size(); }
    std::size_t quality_count() const { return qualities.size(); }
    std::optional<std::size_t> quality_index(Quality q) const;
    /// One quality's grades across all products.
    std::vector<int> column(std::size_t quality) const;

    friend bool operator==(const GradeMatrix&, const GradeMatrix&) = default;
};

/// CSV with header `name,group,<quality ids...>`; `#` lines are comments.
/// Throws ParseError with row/column coordinates on any malformed cell.
GradeMatrix parse_grade_matrix(const std::string& csv_text);
std::string serialize_grade_matrix(const GradeMatrix& gm);

struct ParsedRecords {
    std::vector<ProductRecord> records;
    std::vector<Violation> violations;
};

/// Parses the records document and validates every answer against the
/// template. Structural problems throw ParseError; per-answer problems
/// are collected so callers can report them all (strict callers treat a
/// non-empty violation list as failure).
ParsedRecords parse_records(const std::string& json_text, const GradingTemplate& t);
std::string serialize_records(const std::vector<ProductRecord>& records);

/// Count of products satisfying some predicate, over those where the
/// underlying field or answer was known at all.
struct StatCount {
    int count = 0;
    int known = 0;

    friend bool operator==(const StatCount&, const StatCount&) = default;
};

struct SummaryStats {
    int n = 0;
    StatCount open_source;
    StatCount alive;
    StatCount dead;
    StatCount unclear_status;
    StatCount windows;
    StatCount cpp;
    StatCount few_developers; // five or fewer
    StatCount install_instructions;
    StatCount linear_instructions; // known = products whose answer was yes/no
    StatCount automated_install;
    StatCount install_validation;
    std::map<License, int> license_histogram;
    std::map<std::string, int> issue_tracker_histogram;   // tool id -> products
    std::map<std::string, int> version_control_histogram; // system id -> products

    friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

/// Pure tally over validated records; absent or unclear values never
/// count toward a statistic, they only shrink its `known` denominator.
SummaryStats summary_stats(const std::vector<ProductRecord>& records);

std::map<Group, std::vector<std::string>> group_partition(const std::vector<ProductRecord>& records);

} // namespace ahprank

#endif
