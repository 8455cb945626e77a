#include "rfr/credit.hpp"

#include <algorithm>
#include <cmath>

#include "rfr/errors.hpp"

namespace rfr {

CreditCurve::CreditCurve(Date anchor, std::vector<double> pillar_times,
                         std::vector<double> hazard_rates, double recovery)
    : anchor_(anchor),
      times_(std::move(pillar_times)),
      hazards_(std::move(hazard_rates)),
      recovery_(recovery) {
    if (times_.size() != hazards_.size())
        throw input_error("credit curve pillar/hazard size mismatch");
    if (times_.empty()) throw input_error("credit curve needs at least one segment");
    if (!(recovery_ >= 0.0 && recovery_ <= 1.0))
        throw input_error("recovery must lie in [0, 1]");
    double prev = 0.0;
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!(times_[i] > prev))
            throw input_error("credit pillar times must be strictly increasing and positive");
        if (!(hazards_[i] >= 0.0) || !std::isfinite(hazards_[i]))
            throw input_error("hazard rate must be finite and non-negative");
        prev = times_[i];
    }
}

CreditCurve CreditCurve::flat(Date anchor, double hazard_rate, double recovery) {
    return CreditCurve(anchor, {120.0}, {hazard_rate}, recovery);
}

CreditCurve CreditCurve::from_dates(Date anchor, const std::vector<Date>& pillar_dates,
                                    const std::vector<double>& hazard_rates, double recovery) {
    std::vector<double> times;
    times.reserve(pillar_dates.size());
    for (const Date& d : pillar_dates) times.push_back((d - anchor) / 365.0);
    CreditCurve curve(anchor, std::move(times), hazard_rates, recovery);
    curve.dates_ = pillar_dates;
    return curve;
}

double CreditCurve::hazard_at(double t) const {
    if (t < 0.0) throw input_error("hazard query before credit anchor");
    const auto it = std::lower_bound(times_.begin(), times_.end(), t);
    const std::size_t idx =
        it == times_.end() ? times_.size() - 1 : static_cast<std::size_t>(it - times_.begin());
    return hazards_[idx];
}

double CreditCurve::cumulative_hazard(double t) const {
    if (t < 0.0) throw input_error("survival query before credit anchor");
    double integral = 0.0;
    double seg_start = 0.0;
    for (std::size_t i = 0; i < times_.size(); ++i) {
        const double seg_end = std::min(times_[i], t);
        if (seg_end > seg_start) integral += hazards_[i] * (seg_end - seg_start);
        if (t <= times_[i]) return integral;
        seg_start = times_[i];
    }
    return integral + hazards_.back() * (t - times_.back());
}

double CreditCurve::survival_time(double t) const { return std::exp(-cumulative_hazard(t)); }

double CreditCurve::survival(Date maturity) const {
    if (maturity < anchor_)
        throw input_error("survival date " + maturity.to_iso() + " before credit anchor " +
                          anchor_.to_iso());
    return survival_time(time_from_anchor(maturity));
}

FundingSetup::FundingSetup(DiscountCurve reference_curve, CreditCurve credit_curve)
    : reference(std::move(reference_curve)), credit(std::move(credit_curve)) {
    if (reference.anchor() != credit.anchor())
        throw input_error("funding setup requires a shared anchor date");
}

double risky_zcb(const FundingSetup& setup, Date maturity) {
    const double p = setup.reference.df(maturity);
    const double s = setup.credit.survival(maturity);
    const double rec = setup.credit.recovery();
    return p * (rec + (1.0 - rec) * s);
}

double funding_zero_spread(const FundingSetup& setup, Date maturity, DayCount dc) {
    if (maturity <= setup.reference.anchor())
        throw input_error("funding spread needs maturity after anchor");
    const double tau = year_fraction(setup.reference.anchor(), maturity, dc);
    const double s = setup.credit.survival(maturity);
    const double rec = setup.credit.recovery();
    // log(P / P_I) with the reference level cancelled.
    return -std::log(rec + (1.0 - rec) * s) / tau;
}

double short_funding_spread_time(const CreditCurve& credit, double t) {
    return credit.hazard_at(t) * (1.0 - credit.recovery());
}

double short_funding_spread(const CreditCurve& credit, Date u) {
    if (u < credit.anchor())
        throw input_error("funding spread date before credit anchor");
    return short_funding_spread_time(credit, credit.time_from_anchor(u));
}

double fva_single_cashflow(const FundingSetup& setup, double cashflow, Date maturity) {
    if (cashflow < 0.0)
        throw input_error("single-cash-flow FVA requires a non-negative cash flow "
                          "(positive-exposure setting)");
    const double p = setup.reference.df(maturity);
    return -(p - risky_zcb(setup, maturity)) * cashflow;
}

double fva_single_cashflow_integral(const FundingSetup& setup, double cashflow, Date maturity) {
    if (cashflow < 0.0)
        throw input_error("single-cash-flow FVA requires a non-negative cash flow "
                          "(positive-exposure setting)");
    const double horizon = setup.credit.time_from_anchor(maturity);
    const CreditCurve& credit = setup.credit;
    const double rec = credit.recovery();
    // integral of s_I(u) S_I(t,u) du = (1-Rec) * sum over hazard segments of
    // [S(seg_start) - S(seg_end)], exact for piecewise-constant gamma.
    double integral = 0.0;
    double seg_start = 0.0;
    for (std::size_t i = 0; i <= credit.pillar_times().size() && seg_start < horizon; ++i) {
        const double seg_end = i < credit.pillar_times().size()
                                   ? std::min(credit.pillar_times()[i], horizon)
                                   : horizon;
        if (seg_end > seg_start)
            integral += credit.survival_time(seg_start) - credit.survival_time(seg_end);
        seg_start = seg_end;
    }
    integral *= (1.0 - rec);
    return -setup.reference.df(maturity) * cashflow * integral;
}

double fva_deterministic_exposure(const FundingSetup& setup,
                                  std::span<const ExposureStep> exposure) {
    double horizon = 0.0;
    double prev = 0.0;
    for (const ExposureStep& step : exposure) {
        if (!(step.until_time > prev))
            throw input_error("exposure step boundaries must strictly increase");
        if (step.amount < 0.0)
            throw input_error("deterministic exposure must be non-negative "
                              "(positive-exposure setting)");
        prev = step.until_time;
        horizon = step.until_time;
    }
    if (exposure.empty()) return 0.0;

    // Segment boundaries: exposure breaks, credit pillars, curve pillars.
    std::vector<double> cuts{0.0};
    for (const ExposureStep& step : exposure) cuts.push_back(step.until_time);
    for (double t : setup.credit.pillar_times())
        if (t > 0.0 && t < horizon) cuts.push_back(t);
    for (double t : setup.reference.pillar_times())
        if (t > 0.0 && t < horizon) cuts.push_back(t);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto exposure_at = [&](double t) {
        for (const ExposureStep& step : exposure)
            if (t <= step.until_time) return step.amount;
        return 0.0;
    };

    const double loss_given_default = 1.0 - setup.credit.recovery();
    double fva = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        const double h = b - a;
        const double mid = 0.5 * (a + b);
        const double amount = exposure_at(mid);
        if (amount == 0.0) continue;
        const double gamma = setup.credit.hazard_at(mid);
        // On the segment both log P and the cumulative hazard are linear:
        // integrand = amount * gamma * LGD * exp(g(u)), g linear with slope -q.
        const double g_a = setup.reference.log_df_time(a) - setup.credit.cumulative_hazard(a);
        const double g_b = setup.reference.log_df_time(b) - setup.credit.cumulative_hazard(b);
        const double q = -(g_b - g_a) / h;
        double segment;
        if (std::abs(q * h) < 1e-12)
            segment = std::exp(g_a) * h * (1.0 - 0.5 * q * h);
        else
            segment = std::exp(g_a) * (-std::expm1(-q * h)) / q;
        fva -= amount * gamma * loss_given_default * segment;
    }
    return fva;
}

TransitionInvarianceResult transition_invariance_check(const FundingSetup& eonia_setup,
                                                       Spread delta, double cashflow,
                                                       Date maturity, DayCount spread_dc) {
    if (cashflow < 0.0)
        throw input_error("transition invariance check requires a non-negative cash flow");
    const Date anchor = eonia_setup.reference.anchor();
    const double p_eonia = eonia_setup.reference.df(maturity);
    const double p_risky_eonia = risky_zcb(eonia_setup, maturity);
    const double value_eonia = p_risky_eonia * cashflow;

    // The institution's funding level is held fixed: the reference shift is
    // absorbed one-for-one by the funding zero spread, stated under spread_dc.
    const double tau_spread = year_fraction(anchor, maturity, spread_dc);
    const double spread_eonia = std::log(p_eonia / p_risky_eonia) / tau_spread;
    const double spread_estr = spread_eonia - delta.value;

    const DiscountCurve shifted = eonia_setup.reference.apply_spread(delta, tags::estr);
    const double p_estr = shifted.df(maturity);
    const double p_risky_estr = p_estr * std::exp(-spread_estr * tau_spread);
    const double value_estr = p_risky_estr * cashflow;

    return TransitionInvarianceResult{value_eonia, value_estr, value_estr - value_eonia};
}

}  // namespace rfr
