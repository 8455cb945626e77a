#include "rfr/schedule.hpp"

#include "rfr/errors.hpp"

namespace rfr {

Schedule::Schedule(std::vector<Date> dates, DayCount dc, Calendar cal)
    : dates_(std::move(dates)), day_count_(dc), calendar_(cal) {
    if (dates_.size() < 2) throw input_error("schedule needs at least one period");
    accruals_.reserve(dates_.size() - 1);
    for (std::size_t i = 1; i < dates_.size(); ++i) {
        if (dates_[i] <= dates_[i - 1])
            throw input_error("schedule dates must strictly increase at " + dates_[i].to_iso());
        accruals_.push_back(year_fraction(dates_[i - 1], dates_[i], dc));
    }
}

Schedule generate_schedule(Date start, Date end, int frequency_months, Calendar cal,
                           DayCount dc) {
    if (start >= end) throw input_error("empty schedule span " + start.to_iso() + " .. " + end.to_iso());
    if (frequency_months <= 0) throw input_error("schedule frequency must be positive");

    std::vector<Date> unadjusted{start};
    for (int k = 1;; ++k) {
        const Date next = start.plus_months(k * frequency_months);
        if (next >= end) break;
        unadjusted.push_back(next);
    }
    unadjusted.push_back(end);  // short final stub when the frequency does not divide the span

    std::vector<Date> rolled;
    rolled.reserve(unadjusted.size());
    for (const Date& d : unadjusted) rolled.push_back(adjust_modified_following(d, cal));
    return Schedule(std::move(rolled), dc, cal);
}

Schedule generate_schedule(Date start, int tenor_months, int frequency_months, Calendar cal,
                           DayCount dc) {
    if (tenor_months <= 0) throw input_error("schedule tenor must be positive");
    return generate_schedule(start, start.plus_months(tenor_months), frequency_months, cal, dc);
}

OvernightSubschedule::OvernightSubschedule(Date start, Date end, Calendar cal) {
    if (start >= end)
        throw input_error("overnight subschedule needs start < end, got " + start.to_iso() +
                          " .. " + end.to_iso());
    if (!is_business_day(start, cal))
        throw input_error("overnight subschedule start " + start.to_iso() + " is not a business day");
    if (!is_business_day(end, cal))
        throw input_error("overnight subschedule end " + end.to_iso() + " is not a business day");

    dates_.push_back(start);
    Date cur = start;
    while (cur < end) {
        cur = next_business_day(cur, cal);
        dates_.push_back(cur);
    }
    // The walk lands exactly on `end` because `end` is itself a business day.
}

OvernightSubschedule overnight_subschedule(Date t_prev, Date t_i, Calendar cal) {
    return OvernightSubschedule(t_prev, t_i, cal);
}

}  // namespace rfr
