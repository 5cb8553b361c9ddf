#ifndef AHPRANK_QUALITY_HPP
#define AHPRANK_QUALITY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ahprank {

// The 13 graded software qualities, in canonical order. Correctness and
// verifiability are measured together and form a single entry.
enum class Quality {
    installability,
    correctness_verifiability,
    reliability,
    robustness,
    performance,
    usability,
    maintainability,
    reusability,
    portability,
    understandability,
    interoperability,
    transparency,
    reproducibility,
};

inline constexpr std::size_t kQualityCount = 13;

constexpr std::array<Quality, kQualityCount> all_qualities() {
    return {Quality::installability,    Quality::correctness_verifiability,
            Quality::reliability,       Quality::robustness,
            Quality::performance,       Quality::usability,
            Quality::maintainability,   Quality::reusability,
            Quality::portability,       Quality::understandability,
            Quality::interoperability,  Quality::transparency,
            Quality::reproducibility};
}

/// Stable identifier used in file formats and question ids.
std::string_view quality_id(Quality q);

/// Human-readable name for tables and chart labels.
std::string_view quality_display_name(Quality q);

std::optional<Quality> parse_quality(std::string_view id);

// Product sets used to group the graded software.
enum class Group {
    desktop_gis,
    standalone_tool,
    programming_library,
};

inline constexpr std::size_t kGroupCount = 3;

constexpr std::array<Group, kGroupCount> all_groups() {
    return {Group::desktop_gis, Group::standalone_tool, Group::programming_library};
}

std::string_view group_id(Group g);
std::string_view group_display_name(Group g);
std::optional<Group> parse_group(std::string_view id);

} // namespace ahprank

#endif
