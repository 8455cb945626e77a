#pragma once

#include <vector>

#include "rfr/bootstrap.hpp"
#include "rfr/curve.hpp"
#include "rfr/instruments.hpp"

namespace rfr {

/// Compounding regime for the forward-rate spread: `discrete` evaluates the
/// first-order daily-compounding formula, `continuous` its closed-form limit.
enum class CompoundingRegime { discrete, continuous };

CompoundingRegime parse_regime(std::string_view text);
std::string to_string(CompoundingRegime r);

/// Kernel execution backend. `parallel` runs coupon/tenor loops under
/// OpenMP; `serial` is the reference path. Both fill independent output
/// slots with identical arithmetic, so results are bitwise equal.
enum class ExecMode { serial, parallel };

/// Forward-rate spread Sigma_d between the shifted and unshifted compounded
/// overnight forwards over one coupon, first order in the spread:
/// (delta/tau_i) * P(T_{i-1})/P(T_i) * sum_l tau_{i,l} P(T_{i,l})/P(T_{i,l-1}).
double sigma_discrete(const DiscountCurve& curve, const OvernightSubschedule& sub, Spread delta);

/// Continuous-compounding limit Sigma_c =
/// (1/tau_i) * (exp(delta*tau_i) - 1) * P(T1)/P(T2), tau_i = ACT/360.
double sigma_continuous(const DiscountCurve& curve, Date t1, Date t2, Spread delta);

/// Sigma per floating coupon of a leg; the hot data-parallel kernel.
std::vector<double> leg_sigma(const DiscountCurve& curve, const Schedule& floating_leg,
                              Spread delta, CompoundingRegime regime,
                              ExecMode mode = ExecMode::parallel);

/// Exact-product compounded forward per floating coupon (no truncation);
/// benchmark companion of leg_sigma.
std::vector<double> leg_compounded_forwards(const DiscountCurve& curve,
                                            const Schedule& floating_leg, Spread delta,
                                            ExecMode mode = ExecMode::parallel);

/// Par-rate spread delta_d (or delta_c): discounted, accrual-weighted average
/// of the per-coupon Sigmas divided by the fixed-leg annuity. Valuation at
/// the curve anchor.
double delta_par_rate(const DiscountCurve& curve, const SwapSpec& spec, Spread delta,
                      CompoundingRegime regime, ExecMode mode = ExecMode::parallel);

/// One row of a par-rate transition report.
struct TransitionRow {
    int tenor_months = 0;
    double eonia_par = 0.0;
    double estr_par = 0.0;
    double par_spread = 0.0;             // estr_par - eonia_par
    double par_spread_minus_delta = 0.0; // residual against the reference spread
};

struct TransitionSummary {
    double rmse_bps = 0.0;
    double max_abs_bps = 0.0;
    double min_bps = 0.0;
    double max_bps = 0.0;
};

/// Per-tenor par rates under both benchmarks plus residual statistics.
/// `reference_spread` is the constant spread subtracted row-wise to form the
/// residual (the transition spread for OIS reports, zero for direct IRS
/// repricing reports). Summary statistics are over the residual in bps.
struct TransitionReport {
    Date asof;
    double reference_spread = 0.0;
    std::vector<TransitionRow> rows;
    TransitionSummary summary;
};

TransitionSummary summarize_rows(const std::vector<TransitionRow>& rows);

/// One row of a forward-rate difference report.
struct ForwardDiffRow {
    Date start;
    Date end;
    double fwd_eonia = 0.0;
    double fwd_estr = 0.0;
    double diff_bps = 0.0;  // (fwd_eonia - fwd_estr) in bps
};

struct ForwardDiffReport {
    Date asof;
    std::vector<ForwardDiffRow> rows;
    double rmse_bps = 0.0;
};

struct TheoreticalEstrQuotes {
    QuoteSet estr_quotes;
    TransitionReport report;
};

/// Bootstraps the EONIA curve from OIS quotes and builds the theoretical
/// shifted-benchmark OIS term structure R + delta_par_rate tenor by tenor.
TheoreticalEstrQuotes theoretical_estr_ois_quotes(const QuoteSet& eonia_quotes, Spread delta,
                                                  CompoundingRegime regime,
                                                  const MarketConventions& conv = {},
                                                  ExecMode mode = ExecMode::parallel);

/// Constant-par-rates view of the discounting switch: bootstraps the
/// EURIBOR-6M pseudo-curve under the original and the spread-shifted
/// discounting and reports the 6M forward differences over the semiannual
/// grid to the longest IRS maturity.
ForwardDiffReport constant_par_rates_analysis(const QuoteSet& irs_quotes,
                                              const QuoteSet& ois_quotes, Spread delta,
                                              const MarketConventions& conv = {},
                                              ExecMode mode = ExecMode::parallel);

/// Constant-forward-rates view: reprices IRS par rates with shifted-curve
/// discounting but unshifted forwards and reports theoretical minus market
/// par rates per tenor (residual reference 0).
TransitionReport constant_forward_rates_analysis(const QuoteSet& irs_quotes,
                                                 const QuoteSet& ois_quotes, Spread delta,
                                                 const MarketConventions& conv = {},
                                                 ExecMode mode = ExecMode::parallel);

}  // namespace rfr
