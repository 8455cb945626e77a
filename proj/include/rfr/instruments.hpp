#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rfr/curve.hpp"
#include "rfr/schedule.hpp"

namespace rfr {

enum class Side { payer, receiver };

inline double omega(Side s) { return s == Side::payer ? 1.0 : -1.0; }

enum class RateIndex { overnight_eonia, overnight_estr, euribor_6m };

inline bool is_overnight(RateIndex x) { return x != RateIndex::euribor_6m; }

std::string to_string(RateIndex x);
RateIndex parse_rate_index(std::string_view text);

/// Fixed-vs-floating swap contract. Covers both OIS (compounded overnight
/// underlying) and IRS (EURIBOR-6M underlying). Floating and fixed legs
/// share start and end dates.
struct SwapSpec {
    double notional = 1.0;
    Side side = Side::payer;
    double fixed_rate = 0.0;
    Schedule floating_leg;
    Schedule fixed_leg;
    RateIndex underlying = RateIndex::overnight_eonia;
    CollateralTag collateral;

    SwapSpec(double notional, Side side, double fixed_rate, Schedule floating,
             Schedule fixed, RateIndex underlying, CollateralTag collateral);
};

/// Realized overnight (or IBOR) fixings by fixing date.
class FixingTable {
public:
    FixingTable() = default;

    void add(Date d, double rate);
    std::optional<double> find(Date d) const;
    /// Lookup that names the missing date in the error.
    double at(Date d) const;
    std::size_t size() const { return fixings_.size(); }
    bool empty() const { return fixings_.empty(); }
    const std::map<Date, double>& entries() const { return fixings_; }

private:
    std::map<Date, double> fixings_;
};

/// Realized compounded overnight rate over one coupon:
/// (1/tau_i) * [prod_k (1 + R_k * tau_{i,k}) - 1].
double spot_compounded_rate(const FixingTable& fixings, const OvernightSubschedule& sub);

/// Every fixing shifted by the constant spread; the ISDA-style fallback map
/// between the two overnight benchmarks.
FixingTable shift_fixings(const FixingTable& fixings, Spread delta);

/// Market conventions for the EUR instruments behind the quote sets.
struct MarketConventions {
    Calendar calendar = Calendar::target;
    int ois_fixed_frequency_months = 12;
    int ois_floating_frequency_months = 12;
    DayCount ois_fixed_day_count = DayCount::act_360;
    DayCount ois_floating_day_count = DayCount::act_360;
    int irs_fixed_frequency_months = 12;
    int irs_floating_frequency_months = 6;
    DayCount irs_fixed_day_count = DayCount::thirty_e_360;
    DayCount irs_floating_day_count = DayCount::act_360;
};

SwapSpec make_ois_spec(Date start, int tenor_months, double fixed_rate, double notional,
                       Side side, RateIndex underlying, CollateralTag collateral,
                       const MarketConventions& conv = {});

SwapSpec make_irs_spec(Date start, int tenor_months, double fixed_rate, double notional,
                       Side side, CollateralTag collateral, const MarketConventions& conv = {});

/// Swap annuity A(t) = sum_j P(t;S_j) tau_K over future fixed periods.
/// The discount curve tag must match the trade's CSA.
double annuity(const SwapSpec& spec, const DiscountCurve& discount, Date asof);

/// Floating-leg PV per unit notional over future coupons. Overnight coupons
/// take forwards from `forward` via the exact compounded product (zero
/// spread); EURIBOR coupons take simple forwards from the pseudo-curve, with
/// tau_F equal to the coupon accrual. The coupon spanning `asof` compounds
/// realized fixings up to `asof` and forwards after.
double floating_leg_pv(const SwapSpec& spec, const DiscountCurve& discount,
                       const DiscountCurve& forward, Date asof,
                       const FixingTable* fixings = nullptr);

/// Swap price omega * N * [floating PV - K * annuity].
double price_swap(const SwapSpec& spec, const DiscountCurve& discount,
                  const DiscountCurve& forward, Date asof,
                  const FixingTable* fixings = nullptr);

/// Fixed rate making the swap worth zero. Ignores spec.fixed_rate.
double par_rate(const SwapSpec& spec, const DiscountCurve& discount,
                const DiscountCurve& forward, Date asof, const FixingTable* fixings = nullptr);

}  // namespace rfr
