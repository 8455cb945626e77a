#include "rfr/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rfr/errors.hpp"

namespace rfr {

std::string to_string(QuoteKind k) {
    return k == QuoteKind::ois ? "OIS" : "IRS-6M";
}

QuoteKind parse_quote_kind(std::string_view text) {
    if (text == "OIS") return QuoteKind::ois;
    if (text == "IRS-6M") return QuoteKind::irs_6m;
    throw input_error("unknown quote kind '" + std::string(text) + "'");
}

QuoteSet::QuoteSet(Date asof, std::vector<Quote> quotes) : asof_(asof), quotes_(std::move(quotes)) {
    if (quotes_.empty()) throw input_error("quote set is empty");
    std::sort(quotes_.begin(), quotes_.end(), [](const Quote& a, const Quote& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.tenor_months < b.tenor_months;
    });
    for (std::size_t i = 0; i < quotes_.size(); ++i) {
        const Quote& q = quotes_[i];
        if (q.tenor_months <= 0)
            throw input_error("quote tenor must be positive, got " +
                              std::to_string(q.tenor_months) + "M");
        if (!(q.rate > -0.05 && q.rate < 0.20))
            throw input_error("quote rate " + std::to_string(q.rate) + " at " +
                              std::to_string(q.tenor_months) +
                              "M outside the (-5%, 20%) sanity band");
        if (i > 0 && quotes_[i - 1].kind == q.kind &&
            quotes_[i - 1].tenor_months == q.tenor_months)
            throw input_error("duplicate quote tenor " + std::to_string(q.tenor_months) + "M");
    }
}

std::vector<Quote> QuoteSet::of_kind(QuoteKind kind) const {
    std::vector<Quote> out;
    for (const Quote& q : quotes_)
        if (q.kind == kind) out.push_back(q);
    return out;
}

namespace {

/// Bisection-safeguarded Newton on a bracketing interval. The derivative is
/// taken by central difference; steps leaving the bracket fall back to
/// bisection. Converges on |dx| <= tol. The bracket doubles as a sanity gate:
/// quotes whose implied forward leaves it are reported as crossed/absurd.
double solve_bracketed(const std::function<double(double)>& f, double lo, double hi, double tol,
                       int max_iter, const std::string& label) {
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo * f_hi > 0.0)
        throw numerical_error("no repricing root inside the admissible forward band at " +
                              label + "; quotes look crossed or absurd");

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fx * f_lo < 0.0) {
            hi = x;
            f_hi = fx;
        } else {
            lo = x;
            f_lo = fx;
        }
        const double h = std::max(1e-8, 1e-7 * std::abs(x));
        const double dfdx = (f(x + h) - f(x - h)) / (2.0 * h);
        double next = dfdx != 0.0 ? x - fx / dfdx : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double dx = next - x;
        x = next;
        if (std::abs(dx) <= tol) return x;
    }
    throw numerical_error("bootstrap did not converge at " + label);
}

constexpr double kLogDfTol = 1e-14;
constexpr int kMaxIterations = 100;

SwapSpec build_spec(QuoteKind kind, RateIndex underlying, Date asof, const Quote& q,
                    const CollateralTag& collateral, const MarketConventions& conv) {
    if (kind == QuoteKind::ois)
        return make_ois_spec(asof, q.tenor_months, q.rate, 1.0, Side::payer, underlying,
                             collateral, conv);
    return make_irs_spec(asof, q.tenor_months, q.rate, 1.0, Side::payer, collateral, conv);
}

/// Sequential pillar-by-pillar bootstrap: each quote adds one pillar at its
/// maturity; `price` values the quote's swap against the candidate curve.
DiscountCurve bootstrap_sequential(
    const std::vector<Quote>& quotes, Date asof, const CollateralTag& curve_tag,
    const CollateralTag& spec_collateral, const MarketConventions& conv, QuoteKind kind,
    RateIndex underlying,
    const std::function<double(const DiscountCurve&, const SwapSpec&)>& price) {
    std::vector<Date> pillar_dates;
    std::vector<double> times;
    std::vector<double> log_dfs;
    pillar_dates.reserve(quotes.size());

    for (const Quote& q : quotes) {
        const SwapSpec spec = build_spec(kind, underlying, asof, q, spec_collateral, conv);
        const Date maturity = spec.floating_leg.end();
        const double t = (maturity - asof) / 365.0;
        if (!times.empty() && t <= times.back())
            throw input_error("quote maturities must strictly increase at " +
                              std::to_string(q.tenor_months) + "M");

        // Initial guess extends the last segment's forward rate flat.
        const double prev_t = times.empty() ? 0.0 : times.back();
        const double prev_log = log_dfs.empty() ? 0.0 : log_dfs.back();
        const double guess_fwd =
            log_dfs.size() < 2 ? q.rate
                               : -(log_dfs.back() - log_dfs[log_dfs.size() - 2]) /
                                     (times.back() - times[times.size() - 2]);
        const double dt = t - prev_t;

        times.push_back(t);
        log_dfs.push_back(prev_log - guess_fwd * dt);
        pillar_dates.push_back(maturity);

        auto pv_at = [&](double x) {
            log_dfs.back() = x;
            const DiscountCurve candidate(asof, times, log_dfs, curve_tag);
            return price(candidate, spec);
        };
        // Admissible segment forwards: a generous band around the guess,
        // capped well beyond the quote sanity band.
        const double lo = prev_log - std::max(guess_fwd + 0.30, 0.40) * dt;
        const double hi = prev_log - std::min(guess_fwd - 0.30, -0.15) * dt;
        const double solved = solve_bracketed(pv_at, lo, hi, kLogDfTol, kMaxIterations,
                                              std::to_string(q.tenor_months) + "M pillar");
        log_dfs.back() = solved;

        const DiscountCurve candidate(asof, times, log_dfs, curve_tag);
        if (std::abs(price(candidate, spec)) > 1e-10 * spec.notional)
            throw numerical_error("bootstrap residual above tolerance at " +
                                  std::to_string(q.tenor_months) + "M pillar");
    }

    std::vector<double> dfs;
    dfs.reserve(log_dfs.size());
    for (double l : log_dfs) dfs.push_back(std::exp(l));
    return DiscountCurve::from_dates(asof, pillar_dates, dfs, curve_tag);
}

}  // namespace

DiscountCurve bootstrap_ois(const QuoteSet& quotes, CollateralTag tag,
                            const MarketConventions& conv) {
    const std::vector<Quote> ois = quotes.of_kind(QuoteKind::ois);
    if (ois.empty()) throw input_error("no OIS quotes to bootstrap");
    const RateIndex underlying =
        tag == tags::estr ? RateIndex::overnight_estr : RateIndex::overnight_eonia;
    const Date asof = quotes.asof();
    return bootstrap_sequential(ois, asof, tag, tag, conv, QuoteKind::ois, underlying,
                                [&](const DiscountCurve& candidate, const SwapSpec& spec) {
                                    // Single-curve: the curve discounts its own forwards.
                                    return price_swap(spec, candidate, candidate, asof);
                                });
}

DiscountCurve bootstrap_forward_curve(const QuoteSet& quotes, QuoteKind kind,
                                      RateIndex underlying, const DiscountCurve& discount,
                                      const MarketConventions& conv) {
    const std::vector<Quote> selected = quotes.of_kind(kind);
    if (selected.empty()) throw input_error("no " + to_string(kind) + " quotes to bootstrap");
    if (quotes.asof() != discount.anchor())
        throw input_error("quote set and discount curve anchors differ");

    // The discount curve must cover the longest instrument.
    const Quote& longest = selected.back();
    const double t_last =
        (adjust_modified_following(quotes.asof().plus_months(longest.tenor_months),
                                   conv.calendar) -
         quotes.asof()) /
        365.0;
    if (discount.max_time() + 1e-9 < t_last)
        throw input_error("discount curve coverage ends before the " +
                          std::to_string(longest.tenor_months) + "M quote maturity");

    const CollateralTag pseudo_tag{to_string(underlying) + "/" + discount.tag().name};
    const Date asof = quotes.asof();
    return bootstrap_sequential(selected, asof, pseudo_tag, discount.tag(), conv, kind,
                                underlying,
                                [&](const DiscountCurve& candidate, const SwapSpec& spec) {
                                    return price_swap(spec, discount, candidate, asof);
                                });
}

double repricing_residual(const Quote& quote, Date asof, const DiscountCurve& discount,
                          const DiscountCurve& forward, CollateralTag collateral,
                          const MarketConventions& conv) {
    const RateIndex underlying =
        quote.kind == QuoteKind::ois
            ? (collateral == tags::estr ? RateIndex::overnight_estr : RateIndex::overnight_eonia)
            : RateIndex::euribor_6m;
    const SwapSpec spec = build_spec(quote.kind, underlying, asof, quote, collateral, conv);
    return price_swap(spec, discount, forward, asof) / spec.notional;
}

}  // namespace rfr
