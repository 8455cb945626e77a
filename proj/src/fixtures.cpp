#include "rfr/fixtures.hpp"

#include <cmath>

namespace rfr {

namespace {

struct NelsonSiegel {
    double beta0;   // long-end level
    double beta1;   // short-end offset (rate at t=0 is beta0 + beta1)
    double beta2;   // hump
    double decay;
};

double ns_rate(const NelsonSiegel& p, double t_years) {
    const double x = p.decay * t_years;
    const double slope = x < 1e-12 ? 1.0 : -std::expm1(-x) / x;
    const double hump = slope - std::exp(-x);
    return p.beta0 + p.beta1 * slope + p.beta2 * hump;
}

/// EURIBOR-6M over OIS basis, mildly decaying in tenor.
double basis_6m(double t_years) { return 0.0013 + 0.0005 * std::exp(-t_years / 10.0); }

FixtureMarket build(Date asof, const NelsonSiegel& params) {
    std::vector<Quote> ois;
    std::vector<Quote> irs;
    for (int months : fixture_tenors_months()) {
        const double t = months / 12.0;
        const double rate = ns_rate(params, t);
        ois.push_back(Quote{QuoteKind::ois, months, rate});
        irs.push_back(Quote{QuoteKind::irs_6m, months, rate + basis_6m(t)});
    }
    return FixtureMarket{asof, QuoteSet(asof, std::move(ois)), QuoteSet(asof, std::move(irs))};
}

}  // namespace

const std::vector<int>& fixture_tenors_months() {
    static const std::vector<int> tenors{12,  24,  36,  48,  60,  72,  84,  96,  108, 120,
                                         144, 180, 240, 300, 360, 420, 480, 540, 600};
    return tenors;
}

FixtureMarket fixture_market_2019() {
    return build(Date(2019, 6, 24), NelsonSiegel{0.0090, -0.0135, -0.0050, 0.25});
}

FixtureMarket fixture_market_2020() {
    return build(Date(2020, 6, 30), NelsonSiegel{0.0040, -0.0087, -0.0040, 0.18});
}

FixtureMarket fixture_market_zero(Date asof) {
    std::vector<Quote> ois;
    std::vector<Quote> irs;
    for (int months : fixture_tenors_months()) {
        ois.push_back(Quote{QuoteKind::ois, months, 0.0});
        irs.push_back(Quote{QuoteKind::irs_6m, months, 0.0});
    }
    return FixtureMarket{asof, QuoteSet(asof, std::move(ois)), QuoteSet(asof, std::move(irs))};
}

}  // namespace rfr
