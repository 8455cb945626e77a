#pragma once

#include <vector>

#include "rfr/curve.hpp"
#include "rfr/instruments.hpp"

namespace rfr {

enum class QuoteKind { ois, irs_6m };

std::string to_string(QuoteKind k);
QuoteKind parse_quote_kind(std::string_view text);

/// One market par quote.
struct Quote {
    QuoteKind kind = QuoteKind::ois;
    int tenor_months = 0;
    double rate = 0.0;
};

/// Validated quote collection for one valuation date: tenors strictly
/// increasing per kind, rates inside the (-5%, 20%) sanity band.
class QuoteSet {
public:
    QuoteSet(Date asof, std::vector<Quote> quotes);

    Date asof() const { return asof_; }
    const std::vector<Quote>& quotes() const { return quotes_; }
    std::vector<Quote> of_kind(QuoteKind kind) const;

private:
    Date asof_;
    std::vector<Quote> quotes_;  // sorted by (kind, tenor)
};

/// Single-curve OIS bootstrap: one pillar per quote maturity, sequential 1-D
/// root solve on the newest log discount factor (bisection-safeguarded
/// Newton, 1e-14 tolerance on log-df). The curve reprices every input OIS to
/// |PV| <= 1e-10 * N by construction; non-convergence names the pillar tenor.
DiscountCurve bootstrap_ois(const QuoteSet& quotes, CollateralTag tag,
                            const MarketConventions& conv = {});

/// Multi-curve bootstrap of a forward pseudo-curve under a given discounting
/// curve. Quotes of the requested kind are repriced with `discount` for
/// discounting and the pseudo-curve for forwards; quotes and discount curve
/// must share the CSA. The pseudo-curve tag records index and collateral.
DiscountCurve bootstrap_forward_curve(const QuoteSet& quotes, QuoteKind kind,
                                      RateIndex underlying, const DiscountCurve& discount,
                                      const MarketConventions& conv = {});

/// EURIBOR-6M pseudo-curve from IRS quotes.
inline DiscountCurve bootstrap_ibor(const QuoteSet& quotes, const DiscountCurve& discount,
                                    const MarketConventions& conv = {}) {
    return bootstrap_forward_curve(quotes, QuoteKind::irs_6m, RateIndex::euribor_6m, discount,
                                   conv);
}

/// Repricing residual of one quote against built curves, per unit notional.
double repricing_residual(const Quote& quote, Date asof, const DiscountCurve& discount,
                          const DiscountCurve& forward, CollateralTag collateral,
                          const MarketConventions& conv = {});

}  // namespace rfr
