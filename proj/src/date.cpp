#include "rfr/date.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "rfr/errors.hpp"

namespace rfr {

namespace {

// Days-from-civil / civil-from-days (Howard Hinnant's algorithms),
// exact over the full proleptic Gregorian range we care about.
int days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const int yoe = y - era * 400;                                  // [0, 399]
    const int doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1; // [0, 365]
    const int doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;          // [0, 146096]
    return era * 146097 + doe - 719468;
}

struct Ymd {
    int y, m, d;
};

Ymd civil_from_days(int z) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const int doe = z - era * 146097;                                     // [0, 146096]
    const int yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;// [0, 399]
    const int y = yoe + era * 400;
    const int doy = doe - (365 * yoe + yoe / 4 - yoe / 100);              // [0, 365]
    const int mp = (5 * doy + 2) / 153;                                   // [0, 11]
    const int d = doy - (153 * mp + 2) / 5 + 1;                           // [1, 31]
    const int m = mp + (mp < 10 ? 3 : -9);                                // [1, 12]
    return {y + (m <= 2), m, d};
}

}  // namespace

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> lengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return lengths[static_cast<std::size_t>(month - 1)];
}

Date::Date(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
        throw input_error("invalid calendar date " + std::to_string(year) + "-" +
                          std::to_string(month) + "-" + std::to_string(day));
    serial_ = days_from_civil(year, month, day);
}

Date Date::from_iso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw input_error("bad ISO date '" + std::string(text) + "' (expected YYYY-MM-DD)");
    auto parse_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw input_error("bad ISO date '" + std::string(text) + "'");
        return v;
    };
    return Date(parse_int(text.substr(0, 4)), parse_int(text.substr(5, 2)),
                parse_int(text.substr(8, 2)));
}

int Date::year() const { return civil_from_days(serial_).y; }
int Date::month() const { return civil_from_days(serial_).m; }
int Date::day() const { return civil_from_days(serial_).d; }

int Date::weekday() const {
    // 1970-01-01 was a Thursday.
    const int wd = (serial_ >= -4 ? (serial_ + 4) % 7 : (serial_ + 5) % 7 + 6);
    return wd;
}

Date Date::plus_months(int n) const {
    const Ymd c = civil_from_days(serial_);
    int months = c.y * 12 + (c.m - 1) + n;
    int y = months / 12;
    int m = months % 12;
    if (m < 0) {
        m += 12;
        --y;
    }
    ++m;
    const int d = std::min(c.d, days_in_month(y, m));
    return Date(y, m, d);
}

std::string Date::to_iso() const {
    const Ymd c = civil_from_days(serial_);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.y, c.m, c.d);
    return buf;
}

Date easter_sunday(int year) {
    const int a = year % 19;
    const int b = year / 100;
    const int c = year % 100;
    const int d = b / 4;
    const int e = b % 4;
    const int f = (b + 8) / 25;
    const int g = (b - f + 1) / 3;
    const int h = (19 * a + b - d - g + 15) % 30;
    const int i = c / 4;
    const int k = c % 4;
    const int l = (32 + 2 * e + 2 * i - h - k) % 7;
    const int m = (a + 11 * h + 22 * l) / 451;
    const int month = (h + l - 7 * m + 114) / 31;
    const int day = (h + l - 7 * m + 114) % 31 + 1;
    return Date(year, month, day);
}

namespace {

bool is_target_holiday(Date d) {
    const int m = d.month();
    const int day = d.day();
    if (m == 1 && day == 1) return true;
    if (m == 5 && day == 1) return true;
    if (m == 12 && (day == 25 || day == 26)) return true;
    const Date easter = easter_sunday(d.year());
    return d == easter.plus_days(-2) || d == easter.plus_days(1);
}

}  // namespace

bool is_business_day(Date d, Calendar cal) {
    const int wd = d.weekday();
    if (wd == 0 || wd == 6) return false;
    if (cal == Calendar::target && is_target_holiday(d)) return false;
    return true;
}

Date next_business_day(Date d, Calendar cal) {
    do {
        d = d.plus_days(1);
    } while (!is_business_day(d, cal));
    return d;
}

Date previous_business_day(Date d, Calendar cal) {
    do {
        d = d.plus_days(-1);
    } while (!is_business_day(d, cal));
    return d;
}

Date adjust_modified_following(Date d, Calendar cal) {
    if (is_business_day(d, cal)) return d;
    const Date fwd = next_business_day(d, cal);
    if (fwd.month() != d.month()) return previous_business_day(d, cal);
    return fwd;
}

}  // namespace rfr
