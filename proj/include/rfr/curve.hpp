#pragma once

#include <string>
#include <vector>

#include "rfr/date.hpp"
#include "rfr/daycount.hpp"
#include "rfr/schedule.hpp"

namespace rfr {

/// Collateral/curve tag. Pricing refuses to mix curves whose tag differs
/// from the trade's CSA; re-tagging is always explicit.
struct CollateralTag {
    std::string name;
    friend bool operator==(const CollateralTag&, const CollateralTag&) = default;
};

namespace tags {
inline const CollateralTag eonia{"EON"};
inline const CollateralTag estr{"EST"};
}  // namespace tags

/// Constant overnight-rate spread (annualized, decimal).
/// The EONIA -> ESTR transition value is -0.00085 (-8.5 bps).
struct Spread {
    double value = 0.0;
};

inline constexpr double kTransitionSpread = -0.00085;

/// Discount curve P(t;T): pillar times in ACT/365F years from the anchor
/// with log discount factors, linear interpolation in log P (log-linear in P)
/// and flat instantaneous-forward extrapolation beyond the last pillar.
/// Immutable after construction.
class DiscountCurve {
public:
    /// `pillar_times` strictly increasing and positive; the anchor point
    /// (t=0, log P=0) is implicit and must not be supplied.
    DiscountCurve(Date anchor, std::vector<double> pillar_times,
                  std::vector<double> log_discounts, CollateralTag tag);

    /// Builds from dated pillars and discount factors; keeps the dates so the
    /// curve can be dumped to CSV.
    static DiscountCurve from_dates(Date anchor, const std::vector<Date>& pillar_dates,
                                    const std::vector<double>& discount_factors,
                                    CollateralTag tag);

    /// Flat continuously-compounded zero rate (ACT/365F clock).
    static DiscountCurve flat(Date anchor, double zero_rate, CollateralTag tag,
                              double horizon_years = 120.0);

    Date anchor() const { return anchor_; }
    const CollateralTag& tag() const { return tag_; }

    /// Pillar times excluding the implicit anchor point.
    std::vector<double> pillar_times() const;
    std::vector<double> log_discounts() const;
    const std::vector<Date>& pillar_dates() const { return dates_; }
    double max_time() const { return times_.back(); }

    /// ACT/365F years from anchor; the curve's internal clock.
    double time_from_anchor(Date d) const { return (d - anchor_) / 365.0; }

    double log_df_time(double t) const;
    double df_time(double t) const;
    double df(Date maturity) const;

    /// Zero rate R = -log P / tau under the requested convention.
    double zero_rate(Date maturity, DayCount dc = DayCount::act_365_fixed) const;

    /// Simple (linearly compounded) forward F = (P(T1)/P(T2) - 1) / tau_F.
    double simple_forward(Date t1, Date t2, DayCount dc = DayCount::act_360) const;

    /// New curve with every discount factor multiplied by exp(-spread * t),
    /// t in ACT/365F years. Linear in log P, so the relation holds at every
    /// query date, not only at pillars.
    DiscountCurve apply_spread(Spread delta, CollateralTag new_tag) const;

    /// Forward compounded overnight rate over one coupon, exact product form
    /// (1/tau_i) * [prod_k (P(T_{i,k-1})/P(T_{i,k}) + delta*tau_{i,k}) - 1].
    /// No small-spread truncation. delta = 0 telescopes to the simple forward.
    double compounded_forward_discrete(const OvernightSubschedule& sub, Spread delta) const;

    /// Continuous-compounding limit (1/tau) * [exp(delta*tau) * P(T1)/P(T2) - 1]
    /// with tau = ACT/360(T1, T2).
    double compounded_forward_continuous(Date t1, Date t2, Spread delta) const;

private:
    Date anchor_;
    std::vector<double> times_;     // leading 0.0 for the anchor
    std::vector<double> log_dfs_;   // leading 0.0 for the anchor
    std::vector<Date> dates_;       // empty when built time-only
    CollateralTag tag_;
};

}  // namespace rfr
