#include "rfr/curve.hpp"

#include <algorithm>
#include <cmath>

#include "rfr/errors.hpp"

namespace rfr {

DiscountCurve::DiscountCurve(Date anchor, std::vector<double> pillar_times,
                             std::vector<double> log_discounts, CollateralTag tag)
    : anchor_(anchor), tag_(std::move(tag)) {
    if (pillar_times.size() != log_discounts.size())
        throw input_error("curve pillar/log-df size mismatch");
    if (pillar_times.empty()) throw input_error("curve needs at least one pillar");
    times_.reserve(pillar_times.size() + 1);
    log_dfs_.reserve(pillar_times.size() + 1);
    times_.push_back(0.0);
    log_dfs_.push_back(0.0);
    double prev = 0.0;
    for (std::size_t i = 0; i < pillar_times.size(); ++i) {
        if (!(pillar_times[i] > prev))
            throw input_error("curve pillar times must be strictly increasing and positive");
        if (!std::isfinite(log_discounts[i]))
            throw input_error("curve log discount factor must be finite");
        prev = pillar_times[i];
        times_.push_back(pillar_times[i]);
        log_dfs_.push_back(log_discounts[i]);
    }
}

DiscountCurve DiscountCurve::from_dates(Date anchor, const std::vector<Date>& pillar_dates,
                                        const std::vector<double>& discount_factors,
                                        CollateralTag tag) {
    if (pillar_dates.size() != discount_factors.size())
        throw input_error("curve pillar/df size mismatch");
    std::vector<double> times;
    std::vector<double> log_dfs;
    times.reserve(pillar_dates.size());
    log_dfs.reserve(pillar_dates.size());
    for (std::size_t i = 0; i < pillar_dates.size(); ++i) {
        if (!(discount_factors[i] > 0.0))
            throw input_error("discount factor must be positive at " + pillar_dates[i].to_iso());
        times.push_back((pillar_dates[i] - anchor) / 365.0);
        log_dfs.push_back(std::log(discount_factors[i]));
    }
    DiscountCurve curve(anchor, std::move(times), std::move(log_dfs), std::move(tag));
    curve.dates_ = pillar_dates;
    return curve;
}

DiscountCurve DiscountCurve::flat(Date anchor, double zero_rate, CollateralTag tag,
                                  double horizon_years) {
    return DiscountCurve(anchor, {horizon_years}, {-zero_rate * horizon_years}, std::move(tag));
}

std::vector<double> DiscountCurve::pillar_times() const {
    return {times_.begin() + 1, times_.end()};
}

std::vector<double> DiscountCurve::log_discounts() const {
    return {log_dfs_.begin() + 1, log_dfs_.end()};
}

double DiscountCurve::log_df_time(double t) const {
    if (t < 0.0)
        throw input_error("discount query before curve anchor " + anchor_.to_iso());
    if (t == 0.0) return 0.0;
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.end()) {
        // Flat instantaneous forward beyond the last pillar.
        const std::size_t n = times_.size();
        const double slope =
            (log_dfs_[n - 1] - log_dfs_[n - 2]) / (times_[n - 1] - times_[n - 2]);
        return log_dfs_[n - 1] + slope * (t - times_[n - 1]);
    }
    const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
    const std::size_t lo = hi - 1;
    if (t == times_[lo]) return log_dfs_[lo];
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    return log_dfs_[lo] + w * (log_dfs_[hi] - log_dfs_[lo]);
}

double DiscountCurve::df_time(double t) const { return std::exp(log_df_time(t)); }

double DiscountCurve::df(Date maturity) const {
    if (maturity < anchor_)
        throw input_error("discount date " + maturity.to_iso() + " before curve anchor " +
                          anchor_.to_iso());
    return df_time(time_from_anchor(maturity));
}

double DiscountCurve::zero_rate(Date maturity, DayCount dc) const {
    if (maturity <= anchor_)
        throw input_error("zero rate needs maturity after anchor " + anchor_.to_iso());
    const double tau = year_fraction(anchor_, maturity, dc);
    return -log_df_time(time_from_anchor(maturity)) / tau;
}

double DiscountCurve::simple_forward(Date t1, Date t2, DayCount dc) const {
    if (t1 >= t2)
        throw input_error("simple forward needs T1 < T2, got " + t1.to_iso() + " .. " +
                          t2.to_iso());
    const double tau = year_fraction(t1, t2, dc);
    const double ratio_log = log_df_time(time_from_anchor(t1)) - log_df_time(time_from_anchor(t2));
    return std::expm1(ratio_log) / tau;
}

DiscountCurve DiscountCurve::apply_spread(Spread delta, CollateralTag new_tag) const {
    DiscountCurve shifted = *this;
    for (std::size_t i = 0; i < shifted.times_.size(); ++i)
        shifted.log_dfs_[i] -= delta.value * shifted.times_[i];
    shifted.tag_ = std::move(new_tag);
    return shifted;
}

double DiscountCurve::compounded_forward_discrete(const OvernightSubschedule& sub,
                                                  Spread delta) const {
    if (sub.dates().front() < anchor_)
        throw input_error("subschedule starts before curve anchor " + anchor_.to_iso());
    const double tau = sub.total_fraction();
    if (delta.value == 0.0) {
        // The product telescopes; evaluate the closed form directly.
        const double ratio_log = log_df_time(time_from_anchor(sub.dates().front())) -
                                 log_df_time(time_from_anchor(sub.dates().back()));
        return std::expm1(ratio_log) / tau;
    }
    double product = 1.0;
    double prev_log = log_df_time(time_from_anchor(sub.dates().front()));
    for (std::size_t k = 0; k < sub.steps(); ++k) {
        const double next_log = log_df_time(time_from_anchor(sub.step_end(k)));
        product *= std::exp(prev_log - next_log) + delta.value * sub.step_fraction(k);
        prev_log = next_log;
    }
    return (product - 1.0) / tau;
}

double DiscountCurve::compounded_forward_continuous(Date t1, Date t2, Spread delta) const {
    if (t1 >= t2)
        throw input_error("compounded forward needs T1 < T2, got " + t1.to_iso() + " .. " +
                          t2.to_iso());
    if (t1 < anchor_)
        throw input_error("compounded forward starts before curve anchor " + anchor_.to_iso());
    const double tau = year_fraction(t1, t2, DayCount::act_360);
    const double ratio = std::exp(log_df_time(time_from_anchor(t1)) -
                                  log_df_time(time_from_anchor(t2)));
    return (std::exp(delta.value * tau) * ratio - 1.0) / tau;
}

}  // namespace rfr
