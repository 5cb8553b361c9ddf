#include "ahprank/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ahprank/errors.hpp"

namespace ahprank {

using ordered_json = nlohmann::ordered_json;

namespace {

template <typename Enum>
struct IdEntry {
    Enum value;
    std::string_view id;
};

constexpr IdEntry<ProductStatus> kStatusIds[] = {
    {ProductStatus::alive, "alive"}, {ProductStatus::dead, "dead"}, {ProductStatus::unclear, "unclear"}};
constexpr IdEntry<ProductCategory> kCategoryIds[] = {
    {ProductCategory::concept_, "concept"}, {ProductCategory::public_, "public"}, {ProductCategory::private_, "private"}};
constexpr IdEntry<DevelopmentModel> kModelIds[] = {
    {DevelopmentModel::open_source, "open_source"}, {DevelopmentModel::freeware, "freeware"}, {DevelopmentModel::commercial, "commercial"}};
constexpr IdEntry<License> kLicenseIds[] = {
    {License::gnu_gpl, "gnu_gpl"}, {License::bsd, "bsd"}, {License::mit, "mit"},
    {License::terms_of_use, "terms_of_use"}, {License::trial, "trial"}, {License::none, "none"}, {License::unclear, "unclear"}};
constexpr IdEntry<Platform> kPlatformIds[] = {
    {Platform::windows, "windows"}, {Platform::linux_, "linux"}, {Platform::osx, "osx"}, {Platform::android, "android"}, {Platform::other, "other"}};
constexpr IdEntry<Language> kLanguageIds[] = {
    {Language::fortran, "fortran"}, {Language::matlab, "matlab"}, {Language::c, "c"}, {Language::cpp, "cpp"},
    {Language::java, "java"}, {Language::r, "r"}, {Language::ruby, "ruby"}, {Language::python, "python"},
    {Language::cython, "cython"}, {Language::basic, "basic"}, {Language::pascal, "pascal"}, {Language::idl, "idl"},
    {Language::unclear, "unclear"}};

template <typename Enum, std::size_t N>
std::string_view id_of(const IdEntry<Enum> (&table)[N], Enum v) {
    for (const auto& e : table)
        if (e.value == v) return e.id;
    return {};
}

template <typename Enum, std::size_t N>
std::optional<Enum> enum_of(const IdEntry<Enum> (&table)[N], std::string_view id) {
    for (const auto& e : table)
        if (e.id == id) return e.value;
    return std::nullopt;
}

} // namespace

std::string_view status_id(ProductStatus v) { return id_of(kStatusIds, v); }
std::string_view category_id(ProductCategory v) { return id_of(kCategoryIds, v); }
std::string_view development_model_id(DevelopmentModel v) { return id_of(kModelIds, v); }
std::string_view license_id(License v) { return id_of(kLicenseIds, v); }
std::string_view platform_id(Platform v) { return id_of(kPlatformIds, v); }
std::string_view language_id(Language v) { return id_of(kLanguageIds, v); }

std::optional<ProductStatus> parse_status(std::string_view id) { return enum_of(kStatusIds, id); }
std::optional<ProductCategory> parse_category(std::string_view id) { return enum_of(kCategoryIds, id); }
std::optional<DevelopmentModel> parse_development_model(std::string_view id) { return enum_of(kModelIds, id); }
std::optional<License> parse_license(std::string_view id) { return enum_of(kLicenseIds, id); }
std::optional<Platform> parse_platform(std::string_view id) { return enum_of(kPlatformIds, id); }
std::optional<Language> parse_language(std::string_view id) { return enum_of(kLanguageIds, id); }

bool ProductRecord::has_platform(Platform p) const {
    return std::find(platforms.begin(), platforms.end(), p) != platforms.end();
}

bool ProductRecord::has_language(Language l) const {
    return std::find(languages.begin(), languages.end(), l) != languages.end();
}

std::optional<std::size_t> GradeMatrix::quality_index(Quality q) const {
    for (std::size_t i = 0; i < qualities.size(); ++i)
        if (qualities[i] == q) return i;
    return std::nullopt;
}

std::vector<int> GradeMatrix::column(std::size_t quality) const {
    std::vector<int> out(products.size());
    for (std::size_t j = 0; j < products.size(); ++j) out[j] = at(j, quality);
    return out;
}

// ---------------------------------------------------------------------------
// Grade matrix CSV

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void cell_error(std::size_t line, std::size_t col, const std::string& what) {
    throw ParseError("grade matrix: " + what + " at (" + std::to_string(line) + "," +
                     std::to_string(col) + ")");
}

} // namespace

GradeMatrix parse_grade_matrix(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    std::size_t line_no = 0;

    // Header: name,group,<quality ids in any order>
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        header = split_csv_line(trim(line));
        break;
    }
    if (header.size() < 3 || trim(header[0]) != "name" || trim(header[1]) != "group")
        throw ParseError("grade matrix: header must start with name,group followed by quality columns");

    std::vector<Quality> file_order;
    for (std::size_t c = 2; c < header.size(); ++c) {
        const std::string id = trim(header[c]);
        const auto q = parse_quality(id);
        if (!q) throw ParseError("grade matrix: unknown quality column \"" + id + "\"");
        if (std::find(file_order.begin(), file_order.end(), *q) != file_order.end())
            throw ParseError("grade matrix: duplicate quality column \"" + id + "\"");
        file_order.push_back(*q);
    }

    // Canonical order: the Quality enumeration, restricted to the columns
    // present in the file.
    GradeMatrix gm;
    for (Quality q : all_qualities())
        if (std::find(file_order.begin(), file_order.end(), q) != file_order.end())
            gm.qualities.push_back(q);

    std::vector<std::size_t> canon_of_file(file_order.size());
    for (std::size_t c = 0; c < file_order.size(); ++c)
        canon_of_file[c] = *gm.quality_index(file_order[c]);

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto fields = split_csv_line(t);
        if (fields.size() != header.size())
            throw ParseError("grade matrix: row at line " + std::to_string(line_no) + " has " +
                             std::to_string(fields.size()) + " cells, expected " +
                             std::to_string(header.size()));

        const std::string name = trim(fields[0]);
        if (name.empty()) cell_error(line_no, 1, "empty product name");
        if (std::find(gm.products.begin(), gm.products.end(), name) != gm.products.end())
            cell_error(line_no, 1, "duplicate product name \"" + name + "\"");

        const auto group = parse_group(trim(fields[1]));
        if (!group) cell_error(line_no, 2, "unknown group \"" + trim(fields[1]) + "\"");

        std::vector<int> row(file_order.size());
        for (std::size_t c = 2; c < fields.size(); ++c) {
            const std::string cell = trim(fields[c]);
            if (cell.empty()) cell_error(line_no, c + 1, "missing grade");
            int value = 0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (ec != std::errc() || ptr != cell.data() + cell.size())
                cell_error(line_no, c + 1, "grade \"" + cell + "\" is not an integer");
            if (value < 1 || value > 10) cell_error(line_no, c + 1, "grade out of range");
            row[canon_of_file[c - 2]] = value;
        }

        gm.products.push_back(name);
        gm.groups.push_back(*group);
        gm.grades.insert(gm.grades.end(), row.begin(), row.end());
    }

    if (gm.products.size() < 2)
        throw ParseError("grade matrix: need at least two products for pairwise comparison");
    return gm;
}

std::string serialize_grade_matrix(const GradeMatrix& gm) {
    std::string out = "name,group";
    for (Quality q : gm.qualities) {
        out += ',';
        out += quality_id(q);
    }
    out += '\n';
    for (std::size_t j = 0; j < gm.products.size(); ++j) {
        out += gm.products[j];
        out += ',';
        out += group_id(gm.groups[j]);
        for (std::size_t c = 0; c < gm.qualities.size(); ++c) {
            out += ',';
            out += std::to_string(gm.at(j, c));
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Records JSON

namespace {

Answer answer_from_json(const ordered_json& j) {
    // Accepted forms: integer, string, array of strings, or
    // {"value": <one of those>, "note": "..."}.
    const ordered_json* value = &j;
    std::string note;
    if (j.is_object()) {
        if (!j.contains("value")) throw ParseError("answer object lacks \"value\"");
        value = &j.at("value");
        note = j.value("note", std::string{});
        for (const auto& [key, _] : j.items())
            if (key != "value" && key != "note")
                throw ParseError("answer object has unknown key \"" + key + "\"");
    }
    if (value->is_number_integer()) return {Answer::Value{value->get<std::int64_t>()}, note};
    if (value->is_string()) return {Answer::Value{value->get<std::string>()}, note};
    if (value->is_array()) {
        std::vector<std::string> items;
        for (const auto& e : *value) {
            if (!e.is_string()) throw ParseError("answer arrays may only contain strings");
            items.push_back(e.get<std::string>());
        }
        return {Answer::Value{std::move(items)}, note};
    }
    throw ParseError("answer must be an integer, string, or array of strings");
}

ordered_json answer_to_json(const Answer& a) {
    ordered_json value;
    if (const auto* i = std::get_if<std::int64_t>(&a.value))
        value = *i;
    else if (const auto* s = std::get_if<std::string>(&a.value))
        value = *s;
    else
        value = std::get<std::vector<std::string>>(a.value);
    if (a.note.empty()) return value;
    ordered_json j;
    j["value"] = std::move(value);
    j["note"] = a.note;
    return j;
}

void metadata_violation(std::vector<Violation>& out, const std::string& product,
                        const std::string& field, const std::string& found,
                        const std::string& expected) {
    out.push_back(Violation{product + "/metadata." + field, expected, found, "invalid metadata value"});
}

template <typename Enum>
std::vector<Enum> parse_id_set(const ordered_json& arr, std::optional<Enum> (*parse)(std::string_view),
                               const std::string& product, const std::string& field,
                               const std::string& expected, std::vector<Violation>& violations) {
    std::vector<Enum> out;
    if (!arr.is_array()) {
        metadata_violation(violations, product, field, arr.dump(), expected);
        return out;
    }
    for (const auto& e : arr) {
        if (!e.is_string()) {
            metadata_violation(violations, product, field, e.dump(), expected);
            continue;
        }
        const auto v = parse(e.get<std::string>());
        if (!v) {
            metadata_violation(violations, product, field, e.get<std::string>(), expected);
            continue;
        }
        if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ParsedRecords parse_records(const std::string& json_text, const GradingTemplate& t) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("records: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("records: top level must be a JSON array");

    ParsedRecords out;
    for (const auto& entry : doc) {
        if (!entry.is_object()) throw ParseError("records: entries must be objects");
        if (!entry.contains("name") || !entry.at("name").is_string())
            throw ParseError("records: every entry needs a string \"name\"");

        ProductRecord rec;
        rec.name = entry.at("name").get<std::string>();
        if (rec.name.empty()) throw ParseError("records: empty product name");
        for (const auto& prior : out.records)
            if (prior.name == rec.name)
                throw ParseError("records: duplicate product \"" + rec.name + "\"");

        const std::string group_text = entry.value("group", std::string{});
        const auto group = parse_group(group_text);
        if (!group) throw ParseError("records: product \"" + rec.name + "\" has unknown group \"" + group_text + "\"");
        rec.group = *group;

        if (entry.contains("metadata")) {
            const auto& md = entry.at("metadata");
            if (!md.is_object()) throw ParseError("records: metadata must be an object");
            for (const auto& [key, value] : md.items()) {
                const std::string text = value.is_string() ? value.get<std::string>() : std::string{};
                if (key == "status") {
                    const auto v = parse_status(text);
                    if (v) rec.status = *v;
                    else metadata_violation(out.violations, rec.name, key, value.dump(), "alive|dead|unclear");
                } else if (key == "last_updated") {
                    const auto d = parse_date(text);
                    if (d) rec.last_updated = d;
                    else metadata_violation(out.violations, rec.name, key, value.dump(), "YYYY-MM-DD");
                } else if (key == "category") {
                    const auto v = parse_category(text);
                    if (v) rec.category = *v;
                    else metadata_violation(out.violations, rec.name, key, value.dump(), "concept|public|private");
                } else if (key == "development_model") {
                    const auto v = parse_development_model(text);
                    if (v) rec.development_model = *v;
                    else metadata_violation(out.violations, rec.name, key, value.dump(), "open_source|freeware|commercial");
                } else if (key == "license") {
                    const auto v = parse_license(text);
                    if (v) rec.license = *v;
                    else metadata_violation(out.violations, rec.name, key, value.dump(), "license id");
                } else if (key == "platforms") {
                    rec.platforms = parse_id_set<Platform>(value, parse_platform, rec.name, key,
                                                           "platform ids", out.violations);
                } else if (key == "languages") {
                    rec.languages = parse_id_set<Language>(value, parse_language, rec.name, key,
                                                           "language ids", out.violations);
                } else if (key == "n_developers") {
                    if (value.is_number_integer() && value.get<std::int64_t>() >= 0)
                        rec.n_developers = value.get<std::int64_t>();
                    else
                        metadata_violation(out.violations, rec.name, key, value.dump(), "integer >= 0");
                } else {
                    metadata_violation(out.violations, rec.name, key, value.dump(), "a known metadata field");
                }
            }
        }

        if (entry.contains("answers")) {
            const auto& answers = entry.at("answers");
            if (!answers.is_object()) throw ParseError("records: answers must be an object");
            for (const auto& [qid, value] : answers.items()) {
                const Question* question = t.find_question(qid);
                if (!question) {
                    out.violations.push_back(Violation{rec.name + "/" + qid, "a template question id",
                                                       value.dump(), "unknown question id"});
                    continue;
                }
                Answer a;
                try {
                    a = answer_from_json(value);
                } catch (const ParseError& e) {
                    out.violations.push_back(
                        Violation{rec.name + "/" + qid, describe_metric(question->metric), value.dump(), e.what()});
                    continue;
                }
                if (auto v = validate_answer(*question, a)) {
                    v->question_id = rec.name + "/" + v->question_id;
                    out.violations.push_back(std::move(*v));
                }
                rec.answers[qid] = std::move(a);
            }
        }

        // Open-source products must expose their source.
        if (rec.development_model == DevelopmentModel::open_source) {
            auto it = rec.answers.find("summary.source_available");
            const bool ok = it != rec.answers.end() &&
                            std::holds_alternative<std::string>(it->second.value) &&
                            std::get<std::string>(it->second.value) == "yes";
            if (!ok)
                out.violations.push_back(Violation{
                    rec.name + "/summary.source_available", "\"yes\" for open-source products",
                    it == rec.answers.end() ? "(absent)" : render_answer(it->second),
                    "open_source development model requires an available-source answer of yes"});
        }

        out.records.push_back(std::move(rec));
    }
    return out;
}

std::string serialize_records(const std::vector<ProductRecord>& records) {
    ordered_json doc = ordered_json::array();
    for (const auto& rec : records) {
        ordered_json j;
        j["name"] = rec.name;
        j["group"] = std::string(group_id(rec.group));
        ordered_json md;
        md["status"] = std::string(status_id(rec.status));
        if (rec.last_updated) md["last_updated"] = format_date(*rec.last_updated);
        md["category"] = std::string(category_id(rec.category));
        md["development_model"] = std::string(development_model_id(rec.development_model));
        md["license"] = std::string(license_id(rec.license));
        ordered_json platforms = ordered_json::array();
        for (Platform p : rec.platforms) platforms.push_back(std::string(platform_id(p)));
        md["platforms"] = std::move(platforms);
        ordered_json languages = ordered_json::array();
        for (Language l : rec.languages) languages.push_back(std::string(language_id(l)));
        md["languages"] = std::move(languages);
        if (rec.n_developers) md["n_developers"] = *rec.n_developers;
        j["metadata"] = std::move(md);
        ordered_json answers;
        for (const auto& [qid, a] : rec.answers) answers[qid] = answer_to_json(a);
        j["answers"] = std::move(answers);
        doc.push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Summary statistics

namespace {

// Looks up a choice answer; returns empty when absent.
std::string choice_answer(const ProductRecord& rec, const std::string& qid) {
    auto it = rec.answers.find(qid);
    if (it == rec.answers.end()) return {};
    if (const auto* s = std::get_if<std::string>(&it->second.value)) return *s;
    return {};
}

// Tallies a yes/no-style answer: yes counts, no counts toward known,
// anything else (n/a, unclear, absent) only shrinks the denominator.
void tally_yes_no(StatCount& stat, const std::string& value) {
    if (value == "yes") {
        ++stat.count;
        ++stat.known;
    } else if (value == "no") {
        ++stat.known;
    }
}

} // namespace

SummaryStats summary_stats(const std::vector<ProductRecord>& records) {
    SummaryStats s;
    s.n = static_cast<int>(records.size());

    for (const auto& rec : records) {
        ++s.open_source.known;
        if (rec.development_model == DevelopmentModel::open_source) ++s.open_source.count;
        s.license_histogram[rec.license]++;

        // Status is a three-way categorical; every record carries one, so
        // all three counters share the full denominator.
        ++s.alive.known;
        ++s.dead.known;
        ++s.unclear_status.known;
        switch (rec.status) {
            case ProductStatus::alive: ++s.alive.count; break;
            case ProductStatus::dead: ++s.dead.count; break;
            case ProductStatus::unclear: ++s.unclear_status.count; break;
        }

        if (!rec.platforms.empty()) {
            ++s.windows.known;
            if (rec.has_platform(Platform::windows)) ++s.windows.count;
        }
        if (!rec.languages.empty()) {
            ++s.cpp.known;
            if (rec.has_language(Language::cpp)) ++s.cpp.count;
        }
        if (rec.n_developers) {
            ++s.few_developers.known;
            if (*rec.n_developers <= 5) ++s.few_developers.count;
        }

        tally_yes_no(s.install_instructions, choice_answer(rec, "install.instructions"));
        tally_yes_no(s.linear_instructions, choice_answer(rec, "install.instructions_linear"));
        tally_yes_no(s.automated_install, choice_answer(rec, "install.automated"));
        tally_yes_no(s.install_validation, choice_answer(rec, "install.validation"));

        auto tally_members = [&rec](std::map<std::string, int>& histogram, const std::string& qid) {
            auto it = rec.answers.find(qid);
            if (it == rec.answers.end()) return;
            if (const auto* set = std::get_if<std::vector<std::string>>(&it->second.value)) {
                for (const auto& member : *set) histogram[member]++;
            } else if (const auto* one = std::get_if<std::string>(&it->second.value)) {
                histogram[*one]++;
            }
        };
        tally_members(s.issue_tracker_histogram, "maintainability.issue_tracker");
        tally_members(s.version_control_histogram, "maintainability.version_control");
    }
    return s;
}

std::map<Group, std::vector<std::string>> group_partition(const std::vector<ProductRecord>& records) {
    std::map<Group, std::vector<std::string>> out;
    for (Group g : all_groups()) out[g]; // stable keys even when empty
    for (const auto& rec : records) out[rec.group].push_back(rec.name);
    return out;
}

} // namespace ahprank
