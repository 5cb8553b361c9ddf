#include "ahprank/quality.hpp"

namespace ahprank {

namespace {

struct QualityInfo {
    Quality q;
    std::string_view id;
    std::string_view display;
};

constexpr QualityInfo kQualityInfo[kQualityCount] = {
    {Quality::installability, "installability", "Installability"},
    {Quality::correctness_verifiability, "correctness_verifiability", "Correctness & Verifiability"},
    {Quality::reliability, "reliability", "Reliability"},
    {Quality::robustness, "robustness", "Robustness"},
    {Quality::performance, "performance", "Performance"},
    {Quality::usability, "usability", "Usability"},
    {Quality::maintainability, "maintainability", "Maintainability"},
    {Quality::reusability, "reusability", "Reusability"},
    {Quality::portability, "portability", "Portability"},
    {Quality::understandability, "understandability", "Understandability"},
    {Quality::interoperability, "interoperability", "Interoperability"},
    {Quality::transparency, "transparency", "Transparency"},
    {Quality::reproducibility, "reproducibility", "Reproducibility"},
};

} // namespace

std::string_view quality_id(Quality q) {
    return kQualityInfo[static_cast<std::size_t>(q)].id;
}

std::string_view quality_display_name(Quality q) {
    return kQualityInfo[static_cast<std::size_t>(q)].display;
}

std::optional<Quality> parse_quality(std::string_view id) {
    for (const auto& info : kQualityInfo)
        if (info.id == id) return info.q;
    return std::nullopt;
}

std::string_view group_id(Group g) {
    switch (g) {
        case Group::desktop_gis: return "desktop_gis";
        case Group::standalone_tool: return "standalone_tool";
        case Group::programming_library: return "programming_library";
    }
    return {};
}

std::string_view group_display_name(Group g) {
    switch (g) {
        case Group::desktop_gis: return "Desktop GIS";
        case Group::standalone_tool: return "Stand-alone tools";
        case Group::programming_library: return "Programming libraries";
    }
    return {};
}

std::optional<Group> parse_group(std::string_view id) {
    for (Group g : all_groups())
        if (group_id(g) == id) return g;
    return std::nullopt;
}

} // namespace ahprank
