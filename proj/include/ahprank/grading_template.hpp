#ifndef AHPRANK_GRADING_TEMPLATE_HPP
#define AHPRANK_GRADING_TEMPLATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ahprank/quality.hpp"

namespace ahprank {

// Answer metric kinds. Choice kinds carry a member list; a member marked
// with a trailing '*' in the schema requires explanatory text when chosen.
enum class MetricKind {
    yes_no,
    yes_star_no,
    yes_no_na,
    yes_no_unclear,
    number, // non-negative integer (0 admitted; datasets use it for counts)
    date,
    text,
    url,
    enum_set, // subset of the declared members
    grade_1_10,
};

std::string_view metric_kind_id(MetricKind k);
std::optional<MetricKind> parse_metric_kind(std::string_view id);

struct MetricMember {
    std::string name;
    bool requires_note = false;

    friend bool operator==(const MetricMember&, const MetricMember&) = default;
};

struct MetricType {
    MetricKind kind = MetricKind::text;
    // Effective member list for choice kinds. Defaults derive from the
    // kind (e.g. yes_star_no -> yes*, no); questions may declare a
    // variant list, e.g. the uninstall question's {unavail, yes*, no}.
    std::vector<MetricMember> members;

    bool is_choice() const;
    const MetricMember* find_member(std::string_view name) const;

    static MetricType of(MetricKind kind);
    static MetricType with_members(MetricKind kind, std::vector<std::string> starred_names);

    friend bool operator==(const MetricType&, const MetricType&) = default;
};

struct Question {
    std::string id; // slug key, unique across the template
    std::optional<Quality> quality; // nullopt = summary information section
    std::string prompt;
    MetricType metric;
    bool requires_install = false; // the "(I)" marker

    friend bool operator==(const Question&, const Question&) = default;
};

struct QualitySection {
    Quality quality;
    std::vector<Question> questions;
    Question overall_impression; // metric grade_1_10

    friend bool operator==(const QualitySection&, const QualitySection&) = default;
};

struct GradingTemplate {
    std::vector<Question> summary_questions;
    std::vector<QualitySection> qualities;

    std::size_t question_count() const;
    const Question* find_question(std::string_view id) const;

    friend bool operator==(const GradingTemplate&, const GradingTemplate&) = default;
};

/// The built-in grading instrument: summary information plus all 13
/// quality sections. Construction failure is a defect, not a runtime
/// condition.
const GradingTemplate& builtin_template();

// An answer value as found in a records file: an integer, a single
// choice/text/date/url string, or a set of members/urls. Starred choices
// carry their explanation in `note`.
struct Answer {
    using Value = std::variant<std::int64_t, std::string, std::vector<std::string>>;
    Value value;
    std::string note;

    static Answer integer(std::int64_t v) { return {Value{v}, {}}; }
    static Answer str(std::string v, std::string note = {}) {
        return {Value{std::move(v)}, std::move(note)};
    }
    static Answer set(std::vector<std::string> v, std::string note = {}) {
        return {Value{std::move(v)}, std::move(note)};
    }

    friend bool operator==(const Answer&, const Answer&) = default;
};

struct Violation {
    std::string question_id;
    std::string expected; // metric description
    std::string found;    // offending value rendered as text
    std::string message;

    std::string to_string() const;
};

/// Checks one answer against the question's metric. Returns nullopt when
/// the answer conforms; otherwise a structured violation so that callers
/// can aggregate instead of aborting on the first problem.
std::optional<Violation> validate_answer(const Question& q, const Answer& a);

std::string describe_metric(const MetricType& m);
std::string render_answer(const Answer& a);

// Template schema (JSON) import/export; see docs/template-schema notes in
// the README. Round-trips exactly.
std::string template_to_json(const GradingTemplate& t);
GradingTemplate template_from_json(const std::string& json_text);

} // namespace ahprank

#endif
