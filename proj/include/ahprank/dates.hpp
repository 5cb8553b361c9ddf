#ifndef AHPRANK_DATES_HPP
#define AHPRANK_DATES_HPP

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ahprank {

/// Calendar date (proleptic Gregorian). Thin wrapper over
/// std::chrono::year_month_day with ISO-8601 text conversions.
struct Date {
    std::chrono::year_month_day ymd{};

    Date() = default;
    Date(int year, unsigned month, unsigned day)
        : ymd(std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}) {}

    bool valid() const { return ymd.ok(); }

    friend std::strong_ordering operator<=>(const Date& a, const Date& b) {
        return std::chrono::sys_days(a.ymd) <=> std::chrono::sys_days(b.ymd);
    }
    friend bool operator==(const Date& a, const Date& b) { return a.ymd == b.ymd; }
};

/// Parses "YYYY-MM-DD". Rejects calendar-invalid dates such as Feb 30.
std::optional<Date> parse_date(std::string_view text);

std::string format_date(const Date& d);

/// Shifts by whole calendar months. When the day of month has no
/// counterpart in the target month (e.g. Jan 31 - 1 month), the result is
/// clamped to the last day of that month.
Date add_months(const Date& d, int months);

enum class Liveness { alive, dead };

/// A product counts as alive when it was updated within the last 18
/// months of the reference date, boundary inclusive.
/// Throws AhpError if last_updated is after the reference date.
Liveness classify_liveness(const Date& last_updated, const Date& reference);

inline constexpr int kLivenessWindowMonths = 18;

/// Today's date in UTC; used as the default reference date.
Date current_date_utc();

} // namespace ahprank

#endif
