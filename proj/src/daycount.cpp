#include "rfr/daycount.hpp"

#include <algorithm>

#include "rfr/errors.hpp"

namespace rfr {

double year_fraction(Date d1, Date d2, DayCount dc) {
    if (d1 > d2)
        throw input_error("year_fraction requires d1 <= d2, got " + d1.to_iso() + " > " +
                          d2.to_iso());
    switch (dc) {
        case DayCount::act_360:
            return (d2 - d1) / 360.0;
        case DayCount::act_365_fixed:
            return (d2 - d1) / 365.0;
        case DayCount::thirty_e_360: {
            const int dd1 = std::min(d1.day(), 30);
            const int dd2 = std::min(d2.day(), 30);
            return (360 * (d2.year() - d1.year()) + 30 * (d2.month() - d1.month()) +
                    (dd2 - dd1)) /
                   360.0;
        }
    }
    throw input_error("unknown day count");
}

std::string to_string(DayCount dc) {
    switch (dc) {
        case DayCount::act_360: return "ACT/360";
        case DayCount::act_365_fixed: return "ACT/365F";
        case DayCount::thirty_e_360: return "30E/360";
    }
    return "?";
}

DayCount parse_day_count(std::string_view text) {
    if (text == "ACT/360") return DayCount::act_360;
    if (text == "ACT/365F") return DayCount::act_365_fixed;
    if (text == "30E/360") return DayCount::thirty_e_360;
    throw input_error("unknown day count '" + std::string(text) + "'");
}

}  // namespace rfr
