#pragma once

#include <cstddef>
#include <vector>

#include "rfr/date.hpp"
#include "rfr/daycount.hpp"

namespace rfr {

/// Coupon schedule [T_0, ..., T_n] with per-period accrual fractions.
/// Dates are strictly increasing and already rolled; accruals are always
/// recomputed from the stored dates, never cached externally.
class Schedule {
public:
    Schedule(std::vector<Date> dates, DayCount dc, Calendar cal);

    const std::vector<Date>& dates() const { return dates_; }
    std::size_t periods() const { return dates_.size() - 1; }
    Date start() const { return dates_.front(); }
    Date end() const { return dates_.back(); }

    /// Period i covers [period_start(i), period_end(i)], i in [0, periods()).
    Date period_start(std::size_t i) const { return dates_[i]; }
    Date period_end(std::size_t i) const { return dates_[i + 1]; }
    double accrual(std::size_t i) const { return accruals_[i]; }

    DayCount day_count() const { return day_count_; }
    Calendar calendar() const { return calendar_; }

private:
    std::vector<Date> dates_;
    std::vector<double> accruals_;
    DayCount day_count_;
    Calendar calendar_;
};

/// Generates periodic coupon dates from `start` to `end` every
/// `frequency_months`, short final stub, all dates rolled modified-following.
Schedule generate_schedule(Date start, Date end, int frequency_months, Calendar cal,
                           DayCount dc);

/// Tenor variant: end = start + tenor_months.
Schedule generate_schedule(Date start, int tenor_months, int frequency_months, Calendar cal,
                           DayCount dc);

/// Daily compounding grid nested inside one floating coupon period:
/// every consecutive business-day pair in (start, end]. Step fractions are
/// ACT/360 and partition the coupon period exactly in whole days.
class OvernightSubschedule {
public:
    OvernightSubschedule(Date start, Date end, Calendar cal);

    const std::vector<Date>& dates() const { return dates_; }
    std::size_t steps() const { return dates_.size() - 1; }

    Date step_start(std::size_t k) const { return dates_[k]; }
    Date step_end(std::size_t k) const { return dates_[k + 1]; }
    int step_days(std::size_t k) const { return dates_[k + 1] - dates_[k]; }
    double step_fraction(std::size_t k) const { return step_days(k) / 360.0; }

    int total_days() const { return dates_.back() - dates_.front(); }
    double total_fraction() const { return total_days() / 360.0; }

private:
    std::vector<Date> dates_;
};

OvernightSubschedule overnight_subschedule(Date t_prev, Date t_i, Calendar cal);

}  // namespace rfr
