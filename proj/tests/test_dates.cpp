#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rfr/date.hpp"
#include "rfr/daycount.hpp"
#include "rfr/errors.hpp"

using namespace rfr;

TEST_CASE("date construction and serial arithmetic") {
    const Date d(2020, 1, 1);
    CHECK(d.year() == 2020);
    CHECK(d.month() == 1);
    CHECK(d.day() == 1);
    CHECK(d.to_iso() == "2020-01-01");
    CHECK(Date::from_iso("2020-01-01") == d);
    CHECK(Date(2020, 7, 1) - Date(2020, 1, 1) == 182);
    CHECK(d.plus_days(366) == Date(2021, 1, 1));  // 2020 is a leap year

    CHECK_THROWS_AS(Date(2021, 2, 29), input_error);
    CHECK_THROWS_AS(Date(2020, 13, 1), input_error);
    CHECK_THROWS_AS(Date::from_iso("2020/01/01"), input_error);

    // Serial differences agree with an independent calendar walk.
    CHECK(Date(2069, 6, 24) - Date(2019, 6, 24) == oracles::walk_days(2019, 6, 24, 2069, 6, 24));
    CHECK(Date(2069, 6, 24) - Date(2019, 6, 24) == 18263);
}

TEST_CASE("date order is total and round-trips through serial") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> span(-20000, 40000);
    for (int i = 0; i < 200; ++i) {
        const Date d = Date(2000, 1, 1).plus_days(span(rng));
        CHECK(Date(d.year(), d.month(), d.day()) == d);
        CHECK(Date::from_iso(d.to_iso()) == d);
    }
}

TEST_CASE("month arithmetic clamps to month end") {
    CHECK(Date(2020, 1, 31).plus_months(1) == Date(2020, 2, 29));
    CHECK(Date(2019, 1, 31).plus_months(1) == Date(2019, 2, 28));
    CHECK(Date(2020, 1, 31).plus_months(6) == Date(2020, 7, 31));
    CHECK(Date(2020, 7, 1).plus_months(12) == Date(2021, 7, 1));
    CHECK(Date(2020, 3, 15).plus_months(-3) == Date(2019, 12, 15));
}

TEST_CASE("weekdays and weekend calendar") {
    CHECK(Date(2020, 6, 29).weekday() == 1);  // Monday
    CHECK(Date(2019, 6, 24).weekday() == 1);  // fixture asof, a Monday
    CHECK(Date(2020, 6, 30).weekday() == 2);  // fixture asof, a Tuesday
    CHECK(is_business_day(Date(2020, 7, 3), Calendar::weekends_only));
    CHECK_FALSE(is_business_day(Date(2020, 7, 4), Calendar::weekends_only));
    CHECK_FALSE(is_business_day(Date(2020, 7, 5), Calendar::weekends_only));
    CHECK(next_business_day(Date(2020, 7, 3), Calendar::weekends_only) == Date(2020, 7, 6));
}

TEST_CASE("target calendar holidays") {
    CHECK(easter_sunday(2019) == Date(2019, 4, 21));
    CHECK(easter_sunday(2020) == Date(2020, 4, 12));
    CHECK(easter_sunday(2021) == Date(2021, 4, 4));

    CHECK_FALSE(is_business_day(Date(2020, 4, 10), Calendar::target));  // Good Friday
    CHECK_FALSE(is_business_day(Date(2020, 4, 13), Calendar::target));  // Easter Monday
    CHECK_FALSE(is_business_day(Date(2020, 1, 1), Calendar::target));
    CHECK_FALSE(is_business_day(Date(2020, 5, 1), Calendar::target));
    CHECK_FALSE(is_business_day(Date(2019, 12, 25), Calendar::target));
    CHECK_FALSE(is_business_day(Date(2019, 12, 26), Calendar::target));
    CHECK(is_business_day(Date(2020, 4, 14), Calendar::target));
    // Good Friday is a weekday, so the two calendars genuinely differ.
    CHECK(is_business_day(Date(2020, 4, 10), Calendar::weekends_only));
}

TEST_CASE("modified following roll") {
    // Saturday 2021-01-31 rolls back because Monday leaves the month.
    CHECK(adjust_modified_following(Date(2021, 1, 31), Calendar::weekends_only) ==
          Date(2021, 1, 29));
    // Saturday mid-month rolls forward.
    CHECK(adjust_modified_following(Date(2020, 7, 4), Calendar::weekends_only) ==
          Date(2020, 7, 6));
    // Rolling a business day is the identity, and rolling is idempotent.
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> span(0, 15000);
    for (int i = 0; i < 300; ++i) {
        const Date d = Date(2015, 1, 1).plus_days(span(rng));
        for (Calendar cal : {Calendar::weekends_only, Calendar::target}) {
            const Date rolled = adjust_modified_following(d, cal);
            CHECK(is_business_day(rolled, cal));
            CHECK(adjust_modified_following(rolled, cal) == rolled);
            CHECK(rolled.month() == d.month());
        }
    }
}

TEST_CASE("year fractions per convention") {
    CHECK(year_fraction(Date(2020, 1, 1), Date(2020, 7, 1), DayCount::act_360) ==
          doctest::Approx(182.0 / 360.0).epsilon(1e-15));
    CHECK(year_fraction(Date(2020, 3, 15), Date(2020, 3, 15), DayCount::act_360) == 0.0);
    CHECK(year_fraction(Date(2020, 3, 15), Date(2020, 3, 15), DayCount::thirty_e_360) == 0.0);

    // Expected value frozen from the calendar-walk oracle.
    const double walked = oracles::walk_days(2019, 6, 24, 2069, 6, 24) / 365.0;
    CHECK(year_fraction(Date(2019, 6, 24), Date(2069, 6, 24), DayCount::act_365_fixed) ==
          doctest::Approx(walked).epsilon(1e-15));
    CHECK(year_fraction(Date(2019, 6, 24), Date(2069, 6, 24), DayCount::act_365_fixed) ==
          doctest::Approx(18263.0 / 365.0).epsilon(1e-15));

    // 30E/360 whole years and the 31st-day clamp.
    CHECK(year_fraction(Date(2020, 7, 1), Date(2021, 7, 1), DayCount::thirty_e_360) == 1.0);
    CHECK(year_fraction(Date(2020, 1, 31), Date(2020, 7, 31), DayCount::thirty_e_360) == 0.5);

    CHECK_THROWS_AS(year_fraction(Date(2020, 1, 2), Date(2020, 1, 1), DayCount::act_360),
                    input_error);
}

TEST_CASE("ACT year fractions are additive over adjacent intervals") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> step(1, 900);
    for (int i = 0; i < 200; ++i) {
        const Date a = Date(2018, 1, 1).plus_days(step(rng));
        const Date b = a.plus_days(step(rng));
        const Date c = b.plus_days(step(rng));
        for (DayCount dc : {DayCount::act_360, DayCount::act_365_fixed}) {
            const double split = year_fraction(a, b, dc) + year_fraction(b, c, dc);
            CHECK(split == doctest::Approx(year_fraction(a, c, dc)).epsilon(1e-15));
        }
    }
}
