#include "rfr/instruments.hpp"

#include <cmath>

#include "rfr/errors.hpp"

namespace rfr {

std::string to_string(RateIndex x) {
    switch (x) {
        case RateIndex::overnight_eonia: return "ON-EONIA";
        case RateIndex::overnight_estr: return "ON-EST";
        case RateIndex::euribor_6m: return "EURIBOR-6M";
    }
    return "?";
}

RateIndex parse_rate_index(std::string_view text) {
    if (text == "ON-EONIA") return RateIndex::overnight_eonia;
    if (text == "ON-EST") return RateIndex::overnight_estr;
    if (text == "EURIBOR-6M") return RateIndex::euribor_6m;
    throw input_error("unknown rate index '" + std::string(text) + "'");
}

SwapSpec::SwapSpec(double notional_, Side side_, double fixed_rate_, Schedule floating,
                   Schedule fixed, RateIndex underlying_, CollateralTag collateral_)
    : notional(notional_),
      side(side_),
      fixed_rate(fixed_rate_),
      floating_leg(std::move(floating)),
      fixed_leg(std::move(fixed)),
      underlying(underlying_),
      collateral(std::move(collateral_)) {
    if (!(notional > 0.0)) throw input_error("swap notional must be positive");
    if (floating_leg.start() != fixed_leg.start() || floating_leg.end() != fixed_leg.end())
        throw input_error("swap legs must share start and end dates");
}

void FixingTable::add(Date d, double rate) {
    if (!std::isfinite(rate))
        throw input_error("fixing rate must be finite at " + d.to_iso());
    fixings_[d] = rate;
}

std::optional<double> FixingTable::find(Date d) const {
    const auto it = fixings_.find(d);
    if (it == fixings_.end()) return std::nullopt;
    return it->second;
}

double FixingTable::at(Date d) const {
    const auto it = fixings_.find(d);
    if (it == fixings_.end()) throw input_error("missing fixing for " + d.to_iso());
    return it->second;
}

double spot_compounded_rate(const FixingTable& fixings, const OvernightSubschedule& sub) {
    double product = 1.0;
    for (std::size_t k = 0; k < sub.steps(); ++k)
        product *= 1.0 + fixings.at(sub.step_start(k)) * sub.step_fraction(k);
    return (product - 1.0) / sub.total_fraction();
}

FixingTable shift_fixings(const FixingTable& fixings, Spread delta) {
    FixingTable shifted;
    for (const auto& [date, rate] : fixings.entries()) shifted.add(date, rate + delta.value);
    return shifted;
}

SwapSpec make_ois_spec(Date start, int tenor_months, double fixed_rate, double notional,
                       Side side, RateIndex underlying, CollateralTag collateral,
                       const MarketConventions& conv) {
    if (!is_overnight(underlying)) throw input_error("OIS underlying must be an overnight index");
    Schedule floating = generate_schedule(start, tenor_months, conv.ois_floating_frequency_months,
                                          conv.calendar, conv.ois_floating_day_count);
    Schedule fixed = generate_schedule(start, tenor_months, conv.ois_fixed_frequency_months,
                                       conv.calendar, conv.ois_fixed_day_count);
    return SwapSpec(notional, side, fixed_rate, std::move(floating), std::move(fixed), underlying,
                    std::move(collateral));
}

SwapSpec make_irs_spec(Date start, int tenor_months, double fixed_rate, double notional,
                       Side side, CollateralTag collateral, const MarketConventions& conv) {
    Schedule floating = generate_schedule(start, tenor_months, conv.irs_floating_frequency_months,
                                          conv.calendar, conv.irs_floating_day_count);
    Schedule fixed = generate_schedule(start, tenor_months, conv.irs_fixed_frequency_months,
                                       conv.calendar, conv.irs_fixed_day_count);
    return SwapSpec(notional, side, fixed_rate, std::move(floating), std::move(fixed),
                    RateIndex::euribor_6m, std::move(collateral));
}

namespace {

void require_collateral_match(const SwapSpec& spec, const DiscountCurve& discount) {
    if (!(discount.tag() == spec.collateral))
        throw input_error("collateral mismatch: trade CSA '" + spec.collateral.name +
                          "' priced with '" + discount.tag().name + "' discount curve");
}

/// P(asof; T) = P(t0; T) / P(t0; asof) on the discount curve.
double forward_df(const DiscountCurve& curve, Date asof, Date maturity) {
    return std::exp(curve.log_df_time(curve.time_from_anchor(maturity)) -
                    curve.log_df_time(curve.time_from_anchor(asof)));
}

/// Compounded overnight coupon spanning `asof`: realized fixings for steps
/// fixing strictly before asof, curve forwards for the rest.
double blended_overnight_rate(const DiscountCurve& forward, const OvernightSubschedule& sub,
                              Date asof, const FixingTable* fixings) {
    double product = 1.0;
    for (std::size_t k = 0; k < sub.steps(); ++k) {
        if (sub.step_start(k) < asof) {
            if (fixings == nullptr)
                throw input_error("missing fixing for " + sub.step_start(k).to_iso() +
                                  " (seasoned coupon)");
            product *= 1.0 + fixings->at(sub.step_start(k)) * sub.step_fraction(k);
        } else {
            product *= std::exp(forward.log_df_time(forward.time_from_anchor(sub.step_start(k))) -
                                forward.log_df_time(forward.time_from_anchor(sub.step_end(k))));
        }
    }
    return (product - 1.0) / sub.total_fraction();
}

}  // namespace

double annuity(const SwapSpec& spec, const DiscountCurve& discount, Date asof) {
    require_collateral_match(spec, discount);
    if (asof < discount.anchor())
        throw input_error("valuation date before curve anchor " + discount.anchor().to_iso());
    const Schedule& fixed = spec.fixed_leg;
    double sum = 0.0;
    for (std::size_t j = 0; j < fixed.periods(); ++j) {
        if (fixed.period_end(j) < asof) continue;
        sum += forward_df(discount, asof, fixed.period_end(j)) * fixed.accrual(j);
    }
    return sum;
}

double floating_leg_pv(const SwapSpec& spec, const DiscountCurve& discount,
                       const DiscountCurve& forward, Date asof, const FixingTable* fixings) {
    require_collateral_match(spec, discount);
    const Schedule& floating = spec.floating_leg;
    const Calendar cal = floating.calendar();
    double pv = 0.0;
    for (std::size_t i = 0; i < floating.periods(); ++i) {
        const Date pay = floating.period_end(i);
        if (pay < asof) continue;
        const Date fix_start = floating.period_start(i);
        double rate = 0.0;
        if (is_overnight(spec.underlying)) {
            const OvernightSubschedule sub(fix_start, pay, cal);
            rate = fix_start < asof ? blended_overnight_rate(forward, sub, asof, fixings)
                                    : forward.compounded_forward_discrete(sub, Spread{0.0});
        } else if (fix_start < asof) {
            // IBOR coupon: the whole rate fixed at the period start.
            if (fixings == nullptr)
                throw input_error("missing fixing for " + fix_start.to_iso() +
                                  " (seasoned coupon)");
            rate = fixings->at(fix_start);
        } else {
            // tau_F = tau_R: divide the curve ratio by the coupon accrual.
            const double ratio_log =
                forward.log_df_time(forward.time_from_anchor(fix_start)) -
                forward.log_df_time(forward.time_from_anchor(pay));
            rate = std::expm1(ratio_log) / floating.accrual(i);
        }
        pv += forward_df(discount, asof, pay) * rate * floating.accrual(i);
    }
    return pv;
}

double price_swap(const SwapSpec& spec, const DiscountCurve& discount,
                  const DiscountCurve& forward, Date asof, const FixingTable* fixings) {
    const double floating_pv = floating_leg_pv(spec, discount, forward, asof, fixings);
    const double fixed_annuity = annuity(spec, discount, asof);
    return omega(spec.side) * spec.notional * (floating_pv - spec.fixed_rate * fixed_annuity);
}

double par_rate(const SwapSpec& spec, const DiscountCurve& discount,
                const DiscountCurve& forward, Date asof, const FixingTable* fixings) {
    const double fixed_annuity = annuity(spec, discount, asof);
    if (!(fixed_annuity > 0.0))
        throw input_error("degenerate swap: zero annuity at " + asof.to_iso());
    return floating_leg_pv(spec, discount, forward, asof, fixings) / fixed_annuity;
}

}  // namespace rfr
