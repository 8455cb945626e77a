#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rfr/errors.hpp"
#include "rfr/fixtures.hpp"
#include "rfr/transition.hpp"

using namespace rfr;

namespace {

const Spread kDelta{kTransitionSpread};
const Date kAsof(2019, 6, 24);

MarketConventions weekend_conv() {
    MarketConventions conv;
    conv.calendar = Calendar::weekends_only;
    return conv;
}

}  // namespace

TEST_CASE("sigma_discrete on a zero-rate curve is the spread itself") {
    const DiscountCurve zero = DiscountCurve::flat(kAsof, 0.0, tags::eonia);
    const Schedule leg = generate_schedule(kAsof, 120, 12, Calendar::target, DayCount::act_360);
    for (std::size_t i = 0; i < leg.periods(); ++i) {
        const OvernightSubschedule sub(leg.period_start(i), leg.period_end(i), Calendar::target);
        CHECK(std::abs(sigma_discrete(zero, sub, kDelta) - kDelta.value) <= 1e-15);
        CHECK(sigma_discrete(zero, sub, Spread{0.0}) == 0.0);
    }
}

TEST_CASE("sigma_discrete truncation against the exact product") {
    // Flat 1% curve, 1Y coupon with daily steps: the first-order spread differs
    // from the exact product by O(delta^2).
    const DiscountCurve curve = DiscountCurve::flat(kAsof, 0.01, tags::eonia);
    const Date start(2020, 6, 24);
    const Date end(2021, 6, 24);
    const OvernightSubschedule sub(start, end, Calendar::target);
    const double truncated = curve.compounded_forward_discrete(sub, Spread{0.0}) +
                             sigma_discrete(curve, sub, kDelta);
    const double exact = oracles::product_forward(curve, sub, kDelta.value);
    CHECK(std::abs(truncated - exact) <= 10.0 * kDelta.value * kDelta.value);
}

TEST_CASE("sigma_continuous closed form") {
    const DiscountCurve zero = DiscountCurve::flat(kAsof, 0.0, tags::eonia);
    const Date end = kAsof.plus_days(360);  // tau = 1 under ACT/360
    CHECK(sigma_continuous(zero, kAsof, end, kDelta) ==
          doctest::Approx(std::expm1(kTransitionSpread)).epsilon(1e-15));
    CHECK(sigma_continuous(zero, kAsof, end, kDelta) ==
          doctest::Approx(-0.00084964).epsilon(1e-7));
    CHECK(sigma_continuous(zero, kAsof, end, Spread{0.0}) == 0.0);
    CHECK_THROWS_AS(sigma_continuous(zero, end, kAsof, kDelta), input_error);
}

TEST_CASE("discrete and continuous sigmas agree to first order") {
    const DiscountCurve curve = DiscountCurve::flat(kAsof, 0.01, tags::eonia);
    // Short coupon: one month of daily steps.
    const Date start(2019, 7, 1);
    const Date end(2019, 8, 1);
    const OvernightSubschedule sub(start, end, Calendar::target);
    const double discrete = sigma_discrete(curve, sub, kDelta);
    const double continuous = sigma_continuous(curve, start, end, kDelta);
    CHECK(std::abs(discrete - continuous) <= 1e-7);

    // Annual coupons on fixture-like levels stay within a basis point by a
    // wide margin (the gap is dominated by the delta^2 * tau / 2 term).
    const Date year_end(2020, 7, 1);
    const OvernightSubschedule annual(start, year_end, Calendar::target);
    CHECK(std::abs(sigma_discrete(curve, annual, kDelta) -
                   sigma_continuous(curve, start, year_end, kDelta)) <= 1e-4);
}

TEST_CASE("delta_par_rate equals the spread on a zero-rate curve with matching legs") {
    const MarketConventions conv = weekend_conv();
    const DiscountCurve zero = DiscountCurve::flat(kAsof, 0.0, tags::eonia);
    const SwapSpec spec = make_ois_spec(kAsof, 240, 0.0, 1.0, Side::payer,
                                        RateIndex::overnight_eonia, tags::eonia, conv);
    REQUIRE(spec.floating_leg.dates() == spec.fixed_leg.dates());
    for (CompoundingRegime regime :
         {CompoundingRegime::discrete, CompoundingRegime::continuous}) {
        if (regime == CompoundingRegime::discrete)
            CHECK(std::abs(delta_par_rate(zero, spec, kDelta, regime) - kDelta.value) <= 1e-15);
        CHECK(delta_par_rate(zero, spec, Spread{0.0}, regime) == 0.0);
    }
}

TEST_CASE("delta_par_rate stays within half a basis point of the spread on fixtures") {
    const MarketConventions conv;
    const FixtureMarket market = fixture_market_2019();
    const DiscountCurve curve = bootstrap_ois(market.ois_quotes, tags::eonia, conv);
    for (int months : {12, 120, 360, 600}) {
        const SwapSpec spec = make_ois_spec(market.asof, months, 0.0, 1.0, Side::payer,
                                            RateIndex::overnight_eonia, tags::eonia, conv);
        const double spread = delta_par_rate(curve, spec, kDelta, CompoundingRegime::discrete);
        CHECK(std::abs(spread - kDelta.value) <= 0.5e-4);
    }
}

TEST_CASE("parallel kernels match the serial reference bitwise") {
    const MarketConventions conv;
    const FixtureMarket market = fixture_market_2019();
    const DiscountCurve curve = bootstrap_ois(market.ois_quotes, tags::eonia, conv);
    const Schedule leg =
        generate_schedule(market.asof, 600, 12, conv.calendar, DayCount::act_360);

    for (CompoundingRegime regime :
         {CompoundingRegime::discrete, CompoundingRegime::continuous}) {
        const auto serial = leg_sigma(curve, leg, kDelta, regime, ExecMode::serial);
        const auto parallel = leg_sigma(curve, leg, kDelta, regime, ExecMode::parallel);
        CHECK(serial == parallel);
    }
    CHECK(leg_compounded_forwards(curve, leg, kDelta, ExecMode::serial) ==
          leg_compounded_forwards(curve, leg, kDelta, ExecMode::parallel));

    const auto theo_serial = theoretical_estr_ois_quotes(
        market.ois_quotes, kDelta, CompoundingRegime::discrete, conv, ExecMode::serial);
    const auto theo_parallel = theoretical_estr_ois_quotes(
        market.ois_quotes, kDelta, CompoundingRegime::discrete, conv, ExecMode::parallel);
    REQUIRE(theo_serial.report.rows.size() == theo_parallel.report.rows.size());
    for (std::size_t i = 0; i < theo_serial.report.rows.size(); ++i)
        CHECK(theo_serial.report.rows[i].estr_par == theo_parallel.report.rows[i].estr_par);
}

TEST_CASE("domain errors surface cleanly from the parallel backend") {
    // Leg starting before the curve anchor: every slot throws inside the
    // OpenMP region and the error must come back as a normal exception.
    const DiscountCurve late_anchor = DiscountCurve::flat(Date(2021, 1, 4), 0.0, tags::eonia);
    const Schedule leg = generate_schedule(kAsof, 60, 12, Calendar::target, DayCount::act_360);
    CHECK_THROWS_AS(
        leg_sigma(late_anchor, leg, kDelta, CompoundingRegime::discrete, ExecMode::parallel),
        input_error);
    CHECK_THROWS_AS(
        leg_sigma(late_anchor, leg, kDelta, CompoundingRegime::discrete, ExecMode::serial),
        input_error);
}

TEST_CASE("theoretical shifted quotes on zero rates move by exactly the spread") {
    const FixtureMarket market = fixture_market_zero(kAsof);
    const MarketConventions conv;
    const auto theo =
        theoretical_estr_ois_quotes(market.ois_quotes, kDelta, CompoundingRegime::discrete, conv);
    const auto original = market.ois_quotes.of_kind(QuoteKind::ois);
    const auto shifted = theo.estr_quotes.of_kind(QuoteKind::ois);
    for (std::size_t i = 0; i < original.size(); ++i)
        CHECK(std::abs(shifted[i].rate - (original[i].rate + kDelta.value)) <= 1e-12);
    CHECK(theo.report.summary.rmse_bps <= 1e-8);
}

TEST_CASE("zero spread leaves the quote set unchanged") {
    const MarketConventions conv;
    const FixtureMarket market = fixture_market_2019();
    const auto theo = theoretical_estr_ois_quotes(market.ois_quotes, Spread{0.0},
                                                  CompoundingRegime::discrete, conv);
    const auto original = market.ois_quotes.of_kind(QuoteKind::ois);
    const auto shifted = theo.estr_quotes.of_kind(QuoteKind::ois);
    for (std::size_t i = 0; i < original.size(); ++i)
        CHECK(shifted[i].rate == original[i].rate);
    CHECK(theo.report.summary.rmse_bps == 0.0);
}

TEST_CASE("report summary invariants") {
    const MarketConventions conv;
    const FixtureMarket market = fixture_market_2019();
    const auto theo =
        theoretical_estr_ois_quotes(market.ois_quotes, kDelta, CompoundingRegime::discrete, conv);
    const TransitionReport& report = theo.report;

    for (const TransitionRow& row : report.rows) {
        CHECK(row.par_spread == doctest::Approx(row.estr_par - row.eonia_par).epsilon(1e-12));
        CHECK(row.par_spread_minus_delta ==
              doctest::Approx(row.par_spread - report.reference_spread).epsilon(1e-12));
    }
    const TransitionSummary recomputed = summarize_rows(report.rows);
    CHECK(report.summary.rmse_bps == doctest::Approx(recomputed.rmse_bps).epsilon(1e-12));
    CHECK(report.summary.max_abs_bps ==
          doctest::Approx(recomputed.max_abs_bps).epsilon(1e-12));
}

TEST_CASE("regime choice moves the theoretical quotes far less than a basis point") {
    const MarketConventions conv;
    const FixtureMarket market = fixture_market_2019();
    const auto discrete =
        theoretical_estr_ois_quotes(market.ois_quotes, kDelta, CompoundingRegime::discrete, conv);
    const auto continuous = theoretical_estr_ois_quotes(market.ois_quotes, kDelta,
                                                        CompoundingRegime::continuous, conv);
    for (std::size_t i = 0; i < discrete.report.rows.size(); ++i)
        CHECK(std::abs(discrete.report.rows[i].estr_par - continuous.report.rows[i].estr_par) <=
              1e-4);
}

TEST_CASE("fixed point: shifting there and back recovers the quotes") {
    // First order in the spread: exact to O(delta^2), far below a tenth of a
    // basis point on either fixture.
    const MarketConventions conv;
    for (const FixtureMarket& market : {fixture_market_zero(kAsof), fixture_market_2019()}) {
        const auto there = theoretical_estr_ois_quotes(market.ois_quotes, kDelta,
                                                       CompoundingRegime::discrete, conv);
        const auto back = theoretical_estr_ois_quotes(there.estr_quotes, Spread{-kDelta.value},
                                                      CompoundingRegime::discrete, conv);
        const auto original = market.ois_quotes.of_kind(QuoteKind::ois);
        const auto rebuilt = back.estr_quotes.of_kind(QuoteKind::ois);
        for (std::size_t i = 0; i < original.size(); ++i)
            CHECK(std::abs(rebuilt[i].rate - original[i].rate) <= 1e-6);
    }
}

TEST_CASE("constant par rates analysis") {
    const MarketConventions conv;
    const FixtureMarket market = fixture_market_2019();

    SUBCASE("zero spread produces exactly zero forward differences") {
        const auto report =
            constant_par_rates_analysis(market.irs_quotes, market.ois_quotes, Spread{0.0}, conv);
        for (const ForwardDiffRow& row : report.rows) CHECK(row.diff_bps == 0.0);
        CHECK(report.rmse_bps == 0.0);
    }

    SUBCASE("fixture run stays within a basis point") {
        const auto report =
            constant_par_rates_analysis(market.irs_quotes, market.ois_quotes, kDelta, conv);
        CHECK(report.rows.size() == 100);  // semiannual grid to 50Y
        for (const ForwardDiffRow& row : report.rows) {
            CHECK(std::abs(row.diff_bps) <= 1.0);
            CHECK(row.diff_bps == doctest::Approx((row.fwd_eonia - row.fwd_estr) * 1e4)
                                      .epsilon(1e-9));
        }
        CHECK(report.rmse_bps <= 0.5);
    }

    SUBCASE("flat quotes stay within a basis point") {
        std::vector<Quote> ois;
        std::vector<Quote> irs;
        for (int months : fixture_tenors_months()) {
            ois.push_back(Quote{QuoteKind::ois, months, 0.005});
            irs.push_back(Quote{QuoteKind::irs_6m, months, 0.0065});
        }
        const QuoteSet flat_ois(kAsof, std::move(ois));
        const QuoteSet flat_irs(kAsof, std::move(irs));
        const auto report = constant_par_rates_analysis(flat_irs, flat_ois, kDelta, conv);
        for (const ForwardDiffRow& row : report.rows) CHECK(std::abs(row.diff_bps) <= 1.0);
    }
}

TEST_CASE("constant forward rates analysis") {
    const MarketConventions conv;
    const FixtureMarket market = fixture_market_2019();

    SUBCASE("zero spread reprices to the market") {
        const auto report = constant_forward_rates_analysis(market.irs_quotes, market.ois_quotes,
                                                            Spread{0.0}, conv);
        for (const TransitionRow& row : report.rows)
            CHECK(std::abs(row.par_spread) <= 1e-12);
    }

    SUBCASE("single-period closed form from the two discountings") {
        std::vector<Quote> one_ois{Quote{QuoteKind::ois, 12, -0.0042}};
        std::vector<Quote> one_irs{Quote{QuoteKind::irs_6m, 12, -0.0025}};
        const QuoteSet ois(kAsof, std::move(one_ois));
        const QuoteSet irs(kAsof, std::move(one_irs));
        const auto report = constant_forward_rates_analysis(irs, ois, kDelta, conv);
        REQUIRE(report.rows.size() == 1);

        // Hand algebra: R = [P'(T1) F1 tau1 + P'(T2) F2 tau2] / [P'(T2) tau_K]
        // with forwards off the unshifted pseudo-curve and P' the shifted
        // discounting.
        const DiscountCurve disc = bootstrap_ois(ois, tags::eonia, conv);
        const DiscountCurve pseudo = bootstrap_ibor(irs, disc, conv);
        const DiscountCurve disc_shift = disc.apply_spread(kDelta, tags::estr);
        const SwapSpec spec =
            make_irs_spec(kAsof, 12, 0.0, 1.0, Side::payer, tags::estr, conv);
        const Date t1 = spec.floating_leg.period_end(0);
        const Date t2 = spec.floating_leg.period_end(1);
        const double f1t1 = pseudo.df(kAsof) / pseudo.df(t1) - 1.0;
        const double f2t2 = pseudo.df(t1) / pseudo.df(t2) - 1.0;
        const double expected = (disc_shift.df(t1) * f1t1 + disc_shift.df(t2) * f2t2) /
                                (disc_shift.df(t2) * spec.fixed_leg.accrual(0));
        CHECK(report.rows[0].estr_par == doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("lower flatter market shrinks the RMSE") {
        const FixtureMarket market_2020 = fixture_market_2020();
        const auto report_2019 = constant_forward_rates_analysis(market.irs_quotes,
                                                                 market.ois_quotes, kDelta, conv);
        const auto report_2020 = constant_forward_rates_analysis(
            market_2020.irs_quotes, market_2020.ois_quotes, kDelta, conv);
        CHECK(report_2020.summary.rmse_bps < report_2019.summary.rmse_bps);
    }
}

TEST_CASE("OIS residual RMSE shrinks on the lower flatter market") {
    const MarketConventions conv;
    const auto report_2019 = theoretical_estr_ois_quotes(fixture_market_2019().ois_quotes, kDelta,
                                                         CompoundingRegime::discrete, conv);
    const auto report_2020 = theoretical_estr_ois_quotes(fixture_market_2020().ois_quotes, kDelta,
                                                         CompoundingRegime::discrete, conv);
    CHECK(report_2020.report.summary.rmse_bps < report_2019.report.summary.rmse_bps);
    CHECK(report_2019.report.summary.max_abs_bps <= 0.5);
    CHECK(report_2019.report.summary.rmse_bps <= 0.5);
}
