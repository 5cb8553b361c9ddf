#include "ahprank/grading_template.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ahprank/dates.hpp"
#include "ahprank/errors.hpp"

namespace ahprank {

using ordered_json = nlohmann::ordered_json;

namespace {

struct KindInfo {
    MetricKind kind;
    std::string_view id;
};

constexpr KindInfo kKinds[] = {
    {MetricKind::yes_no, "yes_no"},
    {MetricKind::yes_star_no, "yes_star_no"},
    {MetricKind::yes_no_na, "yes_no_na"},
    {MetricKind::yes_no_unclear, "yes_no_unclear"},
    {MetricKind::number, "number"},
    {MetricKind::date, "date"},
    {MetricKind::text, "text"},
    {MetricKind::url, "url"},
    {MetricKind::enum_set, "enum_set"},
    {MetricKind::grade_1_10, "grade_1_10"},
};

std::vector<MetricMember> default_members(MetricKind kind) {
    switch (kind) {
        case MetricKind::yes_no: return {{"yes", false}, {"no", false}};
        case MetricKind::yes_star_no: return {{"yes", true}, {"no", false}};
        case MetricKind::yes_no_na: return {{"yes", false}, {"no", false}, {"n/a", false}};
        case MetricKind::yes_no_unclear: return {{"yes", false}, {"no", false}, {"unclear", false}};
        default: return {};
    }
}

MetricMember parse_member(std::string_view name) {
    if (!name.empty() && name.back() == '*')
        return {std::string(name.substr(0, name.size() - 1)), true};
    return {std::string(name), false};
}

std::string member_spec(const MetricMember& m) {
    return m.requires_note ? m.name + "*" : m.name;
}

bool looks_like_url(const std::string& s) {
    return s.find("://") != std::string::npos && s.find("://") > 0;
}

} // namespace

std::string_view metric_kind_id(MetricKind k) {
    for (const auto& info : kKinds)
        if (info.kind == k) return info.id;
    return {};
}

std::optional<MetricKind> parse_metric_kind(std::string_view id) {
    for (const auto& info : kKinds)
        if (info.id == id) return info.kind;
    return std::nullopt;
}

bool MetricType::is_choice() const {
    switch (kind) {
        case MetricKind::yes_no:
        case MetricKind::yes_star_no:
        case MetricKind::yes_no_na:
        case MetricKind::yes_no_unclear:
        case MetricKind::enum_set: return true;
        default: return false;
    }
}

const MetricMember* MetricType::find_member(std::string_view name) const {
    for (const auto& m : members)
        if (m.name == name) return &m;
    return nullptr;
}

MetricType MetricType::of(MetricKind kind) {
    return {kind, default_members(kind)};
}

MetricType MetricType::with_members(MetricKind kind, std::vector<std::string> starred_names) {
    MetricType m{kind, {}};
    m.members.reserve(starred_names.size());
    for (const auto& name : starred_names) m.members.push_back(parse_member(name));
    return m;
}

std::size_t GradingTemplate::question_count() const {
    std::size_t n = summary_questions.size();
    for (const auto& section : qualities) n += section.questions.size() + 1;
    return n;
}

const Question* GradingTemplate::find_question(std::string_view id) const {
    for (const auto& q : summary_questions)
        if (q.id == id) return &q;
    for (const auto& section : qualities) {
        for (const auto& q : section.questions)
            if (q.id == id) return &q;
        if (section.overall_impression.id == id) return &section.overall_impression;
    }
    return nullptr;
}

std::string describe_metric(const MetricType& m) {
    std::string out{metric_kind_id(m.kind)};
    if (m.is_choice() && !m.members.empty()) {
        out += " {";
        for (std::size_t i = 0; i < m.members.size(); ++i) {
            if (i) out += ", ";
            out += member_spec(m.members[i]);
        }
        out += "}";
    }
    return out;
}

std::string render_answer(const Answer& a) {
    std::string out;
    if (const auto* i = std::get_if<std::int64_t>(&a.value)) {
        out = std::to_string(*i);
    } else if (const auto* s = std::get_if<std::string>(&a.value)) {
        out = "\"" + *s + "\"";
    } else {
        const auto& v = std::get<std::vector<std::string>>(a.value);
        out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += v[i];
        }
        out += "]";
    }
    if (!a.note.empty()) out += " (note: " + a.note + ")";
    return out;
}

std::string Violation::to_string() const {
    return question_id + ": " + message + " (expected " + expected + ", found " + found + ")";
}

namespace {

std::optional<Violation> violation(const Question& q, const Answer& a, const std::string& message) {
    return Violation{q.id, describe_metric(q.metric), render_answer(a), message};
}

std::optional<Violation> check_choice(const Question& q, const Answer& a,
                                      const std::string& value) {
    const MetricMember* member = q.metric.find_member(value);
    if (!member) return violation(q, a, "not a member of the metric");
    if (member->requires_note && a.note.empty())
        return violation(q, a, "explanation required for \"" + member->name + "\"");
    return std::nullopt;
}

} // namespace

std::optional<Violation> validate_answer(const Question& q, const Answer& a) {
    const auto* as_int = std::get_if<std::int64_t>(&a.value);
    const auto* as_str = std::get_if<std::string>(&a.value);
    const auto* as_set = std::get_if<std::vector<std::string>>(&a.value);

    switch (q.metric.kind) {
        case MetricKind::number:
            if (!as_int) return violation(q, a, "expected a non-negative integer");
            if (*as_int < 0) return violation(q, a, "number must be >= 0");
            return std::nullopt;

        case MetricKind::grade_1_10:
            if (!as_int) return violation(q, a, "expected an integer grade");
            if (*as_int < 1 || *as_int > 10) return violation(q, a, "grade out of range 1..10");
            return std::nullopt;

        case MetricKind::date:
            if (!as_str) return violation(q, a, "expected a YYYY-MM-DD date");
            if (!parse_date(*as_str)) return violation(q, a, "not a valid YYYY-MM-DD date");
            return std::nullopt;

        case MetricKind::text:
            if (!as_str) return violation(q, a, "expected text");
            return std::nullopt;

        case MetricKind::url: {
            // Single url or a set of urls ("set of url" questions).
            if (as_str) {
                if (!looks_like_url(*as_str)) return violation(q, a, "not a url");
                return std::nullopt;
            }
            if (as_set) {
                for (const auto& u : *as_set)
                    if (!looks_like_url(u)) return violation(q, a, "\"" + u + "\" is not a url");
                return std::nullopt;
            }
            return violation(q, a, "expected a url or list of urls");
        }

        case MetricKind::enum_set: {
            // Subset of the declared members; a bare string is a
            // one-element subset.
            if (as_str) return check_choice(q, a, *as_str);
            if (!as_set) return violation(q, a, "expected member(s) of the metric");
            for (const auto& v : *as_set) {
                auto bad = check_choice(q, a, v);
                if (bad) return bad;
            }
            for (std::size_t i = 0; i < as_set->size(); ++i)
                for (std::size_t j = i + 1; j < as_set->size(); ++j)
                    if ((*as_set)[i] == (*as_set)[j])
                        return violation(q, a, "duplicate member \"" + (*as_set)[i] + "\"");
            return std::nullopt;
        }

        case MetricKind::yes_no:
        case MetricKind::yes_star_no:
        case MetricKind::yes_no_na:
        case MetricKind::yes_no_unclear:
            if (!as_str) return violation(q, a, "expected one choice");
            return check_choice(q, a, *as_str);
    }
    return violation(q, a, "unknown metric");
}

namespace {

ordered_json question_to_json(const Question& q) {
    ordered_json j;
    j["id"] = q.id;
    j["prompt"] = q.prompt;
    j["metric"] = std::string(metric_kind_id(q.metric.kind));
    if (q.metric.is_choice() && q.metric.members != default_members(q.metric.kind)) {
        ordered_json members = ordered_json::array();
        for (const auto& m : q.metric.members) members.push_back(member_spec(m));
        j["metric_members"] = members;
    }
    j["requires_install"] = q.requires_install;
    return j;
}

Question question_from_json(const ordered_json& j, std::optional<Quality> quality) {
    if (!j.is_object()) throw ParseError("question entry is not an object");
    Question q;
    q.quality = quality;
    q.id = j.at("id").get<std::string>();
    q.prompt = j.at("prompt").get<std::string>();
    const auto kind = parse_metric_kind(j.at("metric").get<std::string>());
    if (!kind) throw ParseError("unknown metric kind in question " + q.id);
    if (j.contains("metric_members")) {
        std::vector<std::string> names;
        for (const auto& m : j.at("metric_members")) names.push_back(m.get<std::string>());
        q.metric = MetricType::with_members(*kind, names);
    } else {
        q.metric = MetricType::of(*kind);
    }
    if (q.metric.kind == MetricKind::enum_set && q.metric.members.empty())
        throw ParseError("enum_set question " + q.id + " declares no members");
    q.requires_install = j.value("requires_install", false);
    return q;
}

} // namespace

std::string template_to_json(const GradingTemplate& t) {
    ordered_json j;
    j["question_count"] = t.question_count();
    j["summary"] = ordered_json::array();
    for (const auto& q : t.summary_questions) j["summary"].push_back(question_to_json(q));
    j["qualities"] = ordered_json::array();
    for (const auto& section : t.qualities) {
        ordered_json s;
        s["quality"] = std::string(quality_id(section.quality));
        s["questions"] = ordered_json::array();
        for (const auto& q : section.questions) s["questions"].push_back(question_to_json(q));
        s["impression"] = question_to_json(section.overall_impression);
        j["qualities"].push_back(std::move(s));
    }
    return j.dump(2) + "\n";
}

GradingTemplate template_from_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("template schema: ") + e.what());
    }
    try {
        GradingTemplate t;
        for (const auto& q : j.at("summary"))
            t.summary_questions.push_back(question_from_json(q, std::nullopt));
        for (const auto& s : j.at("qualities")) {
            const auto quality = parse_quality(s.at("quality").get<std::string>());
            if (!quality)
                throw ParseError("unknown quality id " + s.at("quality").get<std::string>());
            QualitySection section;
            section.quality = *quality;
            for (const auto& q : s.at("questions"))
                section.questions.push_back(question_from_json(q, quality));
            section.overall_impression = question_from_json(s.at("impression"), quality);
            t.qualities.push_back(std::move(section));
        }
        if (j.contains("question_count") &&
            j.at("question_count").get<std::size_t>() != t.question_count())
            throw ParseError("declared question_count does not match the question list");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("template schema: ") + e.what());
    }
}

} // namespace ahprank
