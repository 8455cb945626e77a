#pragma once

#include <string>
#include <string_view>

#include "rfr/date.hpp"

namespace rfr {

enum class DayCount { act_360, act_365_fixed, thirty_e_360 };

/// Year fraction between two ordered dates under the given convention.
/// ACT conventions divide the exact day difference by 360/365; 30E/360
/// clamps both days of month at 30 (Eurobond rule). Throws on d1 > d2.
double year_fraction(Date d1, Date d2, DayCount dc);

std::string to_string(DayCount dc);
DayCount parse_day_count(std::string_view text);

}  // namespace rfr
