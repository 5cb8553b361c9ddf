#include "ahprank/dates.hpp"

#include <cctype>
#include <cstdio>

#include "ahprank/errors.hpp"

namespace ahprank {

namespace chr = std::chrono;

std::optional<Date> parse_date(std::string_view text) {
    // Strict YYYY-MM-DD, four-two-two digits.
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;

    auto num = [&](std::size_t pos, std::size_t len) {
        int v = 0;
        for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
        return v;
    };
    Date d(num(0, 4), static_cast<unsigned>(num(5, 2)), static_cast<unsigned>(num(8, 2)));
    if (!d.valid()) return std::nullopt;
    return d;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.ymd.year()),
                  static_cast<unsigned>(d.ymd.month()), static_cast<unsigned>(d.ymd.day()));
    return buf;
}

Date add_months(const Date& d, int months) {
    Date out = d;
    out.ymd += chr::months(months);
    if (!out.ymd.ok()) {
        // Day overflowed the target month; clamp to its last day.
        out.ymd = out.ymd.year() / out.ymd.month() / chr::last;
    }
    return out;
}

Liveness classify_liveness(const Date& last_updated, const Date& reference) {
    if (last_updated > reference)
        throw AhpError("last_updated " + format_date(last_updated) + " is after reference date " +
                       format_date(reference));
    const Date threshold = add_months(reference, -kLivenessWindowMonths);
    return last_updated >= threshold ? Liveness::alive : Liveness::dead;
}

Date current_date_utc() {
    const auto now = chr::time_point_cast<chr::days>(chr::system_clock::now());
    Date d;
    d.ymd = chr::year_month_day(chr::sys_days(now.time_since_epoch()));
    return d;
}

} // namespace ahprank
