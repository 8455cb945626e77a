#include "rfr/transition.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>

#include "rfr/errors.hpp"

namespace rfr {

CompoundingRegime parse_regime(std::string_view text) {
    if (text == "discrete") return CompoundingRegime::discrete;
    if (text == "continuous") return CompoundingRegime::continuous;
    throw input_error("unknown regime '" + std::string(text) + "' (discrete|continuous)");
}

std::string to_string(CompoundingRegime r) {
    return r == CompoundingRegime::discrete ? "discrete" : "continuous";
}

double sigma_discrete(const DiscountCurve& curve, const OvernightSubschedule& sub,
                      Spread delta) {
    if (sub.dates().front() < curve.anchor())
        throw input_error("subschedule starts before curve anchor " + curve.anchor().to_iso());
    if (delta.value == 0.0) return 0.0;
    const double log_start = curve.log_df_time(curve.time_from_anchor(sub.dates().front()));
    double weighted = 0.0;
    double prev_log = log_start;
    for (std::size_t k = 0; k < sub.steps(); ++k) {
        const double next_log = curve.log_df_time(curve.time_from_anchor(sub.step_end(k)));
        weighted += sub.step_fraction(k) * std::exp(next_log - prev_log);
        prev_log = next_log;
    }
    const double coupon_ratio = std::exp(log_start - prev_log);  // P(T_{i-1}) / P(T_i)
    return delta.value / sub.total_fraction() * coupon_ratio * weighted;
}

double sigma_continuous(const DiscountCurve& curve, Date t1, Date t2, Spread delta) {
    if (t1 >= t2)
        throw input_error("sigma_continuous needs T1 < T2, got " + t1.to_iso() + " .. " +
                          t2.to_iso());
    if (t1 < curve.anchor())
        throw input_error("period starts before curve anchor " + curve.anchor().to_iso());
    const double tau = year_fraction(t1, t2, DayCount::act_360);
    const double ratio = std::exp(curve.log_df_time(curve.time_from_anchor(t1)) -
                                  curve.log_df_time(curve.time_from_anchor(t2)));
    return std::expm1(delta.value * tau) / tau * ratio;
}

namespace {

/// Fills out[i] = eval(i) for i in [0, n), optionally under OpenMP. Each slot
/// is written exactly once with identical arithmetic on both paths, so the
/// result does not depend on the backend or the thread count. Exceptions may
/// not leave an OpenMP region; they are captured per slot and rethrown after.
void fill_slots(std::vector<double>& out, ExecMode mode,
                const std::function<double(std::int64_t)>& eval) {
    const std::int64_t n = static_cast<std::int64_t>(out.size());
    if (mode == ExecMode::parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = eval(i);
            } catch (...) {
#pragma omp critical
                if (error == nullptr) error = std::current_exception();
            }
        }
        if (error != nullptr) std::rethrow_exception(error);
    } else {
        for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = eval(i);
    }
}

}  // namespace

std::vector<double> leg_sigma(const DiscountCurve& curve, const Schedule& floating_leg,
                              Spread delta, CompoundingRegime regime, ExecMode mode) {
    std::vector<double> sigmas(floating_leg.periods());
    const Calendar cal = floating_leg.calendar();
    fill_slots(sigmas, mode, [&](std::int64_t i) {
        const auto idx = static_cast<std::size_t>(i);
        const Date start = floating_leg.period_start(idx);
        const Date end = floating_leg.period_end(idx);
        if (regime == CompoundingRegime::discrete)
            return sigma_discrete(curve, OvernightSubschedule(start, end, cal), delta);
        return sigma_continuous(curve, start, end, delta);
    });
    return sigmas;
}

std::vector<double> leg_compounded_forwards(const DiscountCurve& curve,
                                            const Schedule& floating_leg, Spread delta,
                                            ExecMode mode) {
    std::vector<double> forwards(floating_leg.periods());
    const Calendar cal = floating_leg.calendar();
    fill_slots(forwards, mode, [&](std::int64_t i) {
        const auto idx = static_cast<std::size_t>(i);
        const OvernightSubschedule sub(floating_leg.period_start(idx),
                                       floating_leg.period_end(idx), cal);
        return curve.compounded_forward_discrete(sub, delta);
    });
    return forwards;
}

double delta_par_rate(const DiscountCurve& curve, const SwapSpec& spec, Spread delta,
                      CompoundingRegime regime, ExecMode mode) {
    const std::vector<double> sigmas = leg_sigma(curve, spec.floating_leg, delta, regime, mode);
    double numerator = 0.0;
    for (std::size_t i = 0; i < spec.floating_leg.periods(); ++i)
        numerator += curve.df(spec.floating_leg.period_end(i)) * sigmas[i] *
                     spec.floating_leg.accrual(i);
    double annuity_value = 0.0;
    for (std::size_t j = 0; j < spec.fixed_leg.periods(); ++j)
        annuity_value += curve.df(spec.fixed_leg.period_end(j)) * spec.fixed_leg.accrual(j);
    if (!(annuity_value > 0.0))
        throw input_error("degenerate annuity in par-rate spread");
    return numerator / annuity_value;
}

TransitionSummary summarize_rows(const std::vector<TransitionRow>& rows) {
    TransitionSummary s;
    if (rows.empty()) return s;
    double sum_sq = 0.0;
    s.min_bps = rows.front().par_spread_minus_delta * 1e4;
    s.max_bps = s.min_bps;
    for (const TransitionRow& row : rows) {
        const double bps = row.par_spread_minus_delta * 1e4;
        sum_sq += bps * bps;
        s.min_bps = std::min(s.min_bps, bps);
        s.max_bps = std::max(s.max_bps, bps);
        s.max_abs_bps = std::max(s.max_abs_bps, std::abs(bps));
    }
    s.rmse_bps = std::sqrt(sum_sq / static_cast<double>(rows.size()));
    return s;
}

TheoreticalEstrQuotes theoretical_estr_ois_quotes(const QuoteSet& eonia_quotes, Spread delta,
                                                  CompoundingRegime regime,
                                                  const MarketConventions& conv, ExecMode mode) {
    const DiscountCurve curve = bootstrap_ois(eonia_quotes, tags::eonia, conv);
    const std::vector<Quote> ois = eonia_quotes.of_kind(QuoteKind::ois);
    const Date asof = eonia_quotes.asof();

    std::vector<double> spreads(ois.size());
    fill_slots(spreads, mode, [&](std::int64_t i) {
        const Quote& q = ois[static_cast<std::size_t>(i)];
        const SwapSpec spec = make_ois_spec(asof, q.tenor_months, 0.0, 1.0, Side::payer,
                                            RateIndex::overnight_eonia, tags::eonia, conv);
        // Tenor-level parallelism; the per-coupon kernel runs serial inside.
        return delta_par_rate(curve, spec, delta, regime, ExecMode::serial);
    });

    TransitionReport report;
    report.asof = asof;
    report.reference_spread = delta.value;
    report.rows.reserve(ois.size());
    std::vector<Quote> shifted;
    shifted.reserve(ois.size());
    for (std::size_t i = 0; i < ois.size(); ++i) {
        TransitionRow row;
        row.tenor_months = ois[i].tenor_months;
        row.eonia_par = ois[i].rate;
        row.estr_par = ois[i].rate + spreads[i];
        row.par_spread = spreads[i];
        row.par_spread_minus_delta = spreads[i] - delta.value;
        report.rows.push_back(row);
        shifted.push_back(Quote{QuoteKind::ois, ois[i].tenor_months, row.estr_par});
    }
    report.summary = summarize_rows(report.rows);
    return TheoreticalEstrQuotes{QuoteSet(asof, std::move(shifted)), std::move(report)};
}

ForwardDiffReport constant_par_rates_analysis(const QuoteSet& irs_quotes,
                                              const QuoteSet& ois_quotes, Spread delta,
                                              const MarketConventions& conv, ExecMode mode) {
    const Date asof = ois_quotes.asof();
    if (asof != irs_quotes.asof()) throw input_error("quote sets have different asof dates");
    const DiscountCurve disc_eonia = bootstrap_ois(ois_quotes, tags::eonia, conv);
    const DiscountCurve disc_estr = disc_eonia.apply_spread(delta, tags::estr);
    const DiscountCurve pseudo_eonia = bootstrap_ibor(irs_quotes, disc_eonia, conv);
    const DiscountCurve pseudo_estr = bootstrap_ibor(irs_quotes, disc_estr, conv);

    const std::vector<Quote> irs = irs_quotes.of_kind(QuoteKind::irs_6m);
    const Schedule grid =
        generate_schedule(asof, irs.back().tenor_months, conv.irs_floating_frequency_months,
                          conv.calendar, conv.irs_floating_day_count);

    auto forward_on = [](const DiscountCurve& c, const Schedule& g, std::size_t i) {
        const double log_ratio = c.log_df_time(c.time_from_anchor(g.period_start(i))) -
                                 c.log_df_time(c.time_from_anchor(g.period_end(i)));
        return std::expm1(log_ratio) / g.accrual(i);
    };

    std::vector<double> fwd_eonia(grid.periods());
    std::vector<double> fwd_estr(grid.periods());
    fill_slots(fwd_eonia, mode, [&](std::int64_t i) {
        return forward_on(pseudo_eonia, grid, static_cast<std::size_t>(i));
    });
    fill_slots(fwd_estr, mode, [&](std::int64_t i) {
        return forward_on(pseudo_estr, grid, static_cast<std::size_t>(i));
    });

    ForwardDiffReport report;
    report.asof = asof;
    report.rows.reserve(grid.periods());
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < grid.periods(); ++i) {
        ForwardDiffRow row;
        row.start = grid.period_start(i);
        row.end = grid.period_end(i);
        row.fwd_eonia = fwd_eonia[i];
        row.fwd_estr = fwd_estr[i];
        row.diff_bps = (fwd_eonia[i] - fwd_estr[i]) * 1e4;
        sum_sq += row.diff_bps * row.diff_bps;
        report.rows.push_back(row);
    }
    report.rmse_bps = std::sqrt(sum_sq / static_cast<double>(report.rows.size()));
    return report;
}

TransitionReport constant_forward_rates_analysis(const QuoteSet& irs_quotes,
                                                 const QuoteSet& ois_quotes, Spread delta,
                                                 const MarketConventions& conv, ExecMode mode) {
    const Date asof = ois_quotes.asof();
    if (asof != irs_quotes.asof()) throw input_error("quote sets have different asof dates");
    const DiscountCurve disc_eonia = bootstrap_ois(ois_quotes, tags::eonia, conv);
    const DiscountCurve disc_estr = disc_eonia.apply_spread(delta, tags::estr);
    const DiscountCurve pseudo_eonia = bootstrap_ibor(irs_quotes, disc_eonia, conv);

    const std::vector<Quote> irs = irs_quotes.of_kind(QuoteKind::irs_6m);
    std::vector<double> theoretical(irs.size());
    fill_slots(theoretical, mode, [&](std::int64_t i) {
        const Quote& q = irs[static_cast<std::size_t>(i)];
        const SwapSpec spec =
            make_irs_spec(asof, q.tenor_months, 0.0, 1.0, Side::payer, tags::estr, conv);
        return par_rate(spec, disc_estr, pseudo_eonia, asof);
    });

    TransitionReport report;
    report.asof = asof;
    report.reference_spread = 0.0;  // residual is the raw theoretical-minus-market spread
    report.rows.reserve(irs.size());
    for (std::size_t i = 0; i < irs.size(); ++i) {
        TransitionRow row;
        row.tenor_months = irs[i].tenor_months;
        row.eonia_par = irs[i].rate;
        row.estr_par = theoretical[i];
        row.par_spread = theoretical[i] - irs[i].rate;
        row.par_spread_minus_delta = row.par_spread;
        report.rows.push_back(row);
    }
    report.summary = summarize_rows(report.rows);
    return report;
}

}  // namespace rfr
