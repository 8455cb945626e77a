#pragma once

#include "rfr/bootstrap.hpp"

namespace rfr {

/// Synthetic market snapshot: smooth Nelson-Siegel-shaped OIS and IRS-6M par
/// quote sets for one valuation date. Shipped as reproducible in-code
/// fixtures (and mirrored under data/) for the transition analyses.
struct FixtureMarket {
    Date asof;
    QuoteSet ois_quotes;
    QuoteSet irs_quotes;
};

/// Mid-2019 shape: short end near -0.45%, long end rising towards +0.8%.
FixtureMarket fixture_market_2019();

/// Mid-2020 shape: short end near -0.47%, markedly lower and flatter long end.
FixtureMarket fixture_market_2020();

/// Zero-rate degenerate market (every quote 0%), same tenor grid.
FixtureMarket fixture_market_zero(Date asof);

/// Tenor grid shared by the fixtures, in months.
const std::vector<int>& fixture_tenors_months();

}  // namespace rfr
