#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace rfr {

/// Proleptic Gregorian calendar date, stored as a serial day number
/// (days since 1970-01-01). Day arithmetic is exact integer arithmetic.
class Date {
public:
    Date() = default;
    Date(int year, int month, int day);

    static Date from_serial(int serial) {
        Date d;
        d.serial_ = serial;
        return d;
    }

    /// Parses strict ISO-8601 `YYYY-MM-DD`.
    static Date from_iso(std::string_view text);

    int serial() const { return serial_; }
    int year() const;
    int month() const;
    int day() const;

    /// 0 = Sunday ... 6 = Saturday.
    int weekday() const;

    Date plus_days(int n) const { return from_serial(serial_ + n); }

    /// Adds calendar months, clamping the day of month to the month end
    /// (2020-01-31 + 1M = 2020-02-29).
    Date plus_months(int n) const;

    std::string to_iso() const;

    friend auto operator<=>(const Date&, const Date&) = default;

private:
    int serial_ = 0;
};

/// Exact day difference.
inline int operator-(const Date& a, const Date& b) { return a.serial() - b.serial(); }

bool is_leap_year(int year);
int days_in_month(int year, int month);

/// Gregorian Easter Sunday (anonymous computus).
Date easter_sunday(int year);

/// Business-day calendars. Target adds the fixed TARGET closing days
/// (Jan 1, Good Friday, Easter Monday, May 1, Dec 25, Dec 26) to weekends.
enum class Calendar { weekends_only, target };

bool is_business_day(Date d, Calendar cal);
Date next_business_day(Date d, Calendar cal);
Date previous_business_day(Date d, Calendar cal);

/// Modified-following roll: next business day unless that leaves the month,
/// in which case the preceding business day. Identity on business days.
Date adjust_modified_following(Date d, Calendar cal);

}  // namespace rfr
