// Independent brute-force references used to freeze expected values.
// Everything here recomputes from first principles and must stay independent
// of the library code paths it checks (dates are walked month by month, the
// compounded product is accumulated step by step in extended precision, the
// FVA integral is done by quadrature).
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "rfr/credit.hpp"
#include "rfr/curve.hpp"
#include "rfr/date.hpp"
#include "rfr/schedule.hpp"

namespace oracles {

/// Day count between two dates by walking the calendar one month at a time,
/// never touching serial-day arithmetic.
inline long walk_days(int y1, int m1, int d1, int y2, int m2, int d2) {
    long days = 0;
    int y = y1, m = m1, d = d1;
    while (y != y2 || m != m2) {
        days += rfr::days_in_month(y, m) - d;
        d = 0;
        if (++m > 12) {
            m = 1;
            ++y;
        }
    }
    return days + (d2 - d);
}

/// Exact compounded product forward over a subschedule in extended precision:
/// (prod_k [P(T_{k-1})/P(T_k) + delta * tau_k] - 1) / tau_total.
inline double product_forward(const rfr::DiscountCurve& curve,
                              const rfr::OvernightSubschedule& sub, double delta) {
    long double product = 1.0L;
    for (std::size_t k = 0; k < sub.steps(); ++k) {
        const long double ratio =
            static_cast<long double>(curve.df(sub.step_start(k))) / curve.df(sub.step_end(k));
        product *= ratio + static_cast<long double>(delta) * sub.step_fraction(k);
    }
    return static_cast<double>((product - 1.0L) / sub.total_fraction());
}

/// Realized compounded rate from explicit per-step rates.
inline double product_spot_rate(const std::vector<double>& rates,
                                const std::vector<double>& fractions) {
    long double product = 1.0L;
    long double total = 0.0L;
    for (std::size_t k = 0; k < rates.size(); ++k) {
        product *= 1.0L + static_cast<long double>(rates[k]) * fractions[k];
        total += fractions[k];
    }
    return static_cast<double>((product - 1.0L) / total);
}

/// Composite Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / (2 * panels);
    double sum = f(a) + f(b);
    for (int i = 1; i < 2 * panels; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// FVA for a single cash flow by numerical quadrature of the funding-spread
/// survival integral: -P(t;T) * C * integral of s_I(u) S_I(t,u) du.
inline double fva_by_quadrature(const rfr::FundingSetup& setup, double cashflow,
                                rfr::Date maturity, int panels = 20000) {
    const double horizon = setup.credit.time_from_anchor(maturity);
    auto integrand = [&](double u) {
        return rfr::short_funding_spread_time(setup.credit, u) * setup.credit.survival_time(u);
    };
    return -setup.reference.df(maturity) * cashflow * simpson(integrand, 0.0, horizon, panels);
}

}  // namespace oracles
