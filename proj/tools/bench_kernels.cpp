// Benchmark: serial reference vs OpenMP-parallel transition kernels.
//
// Workload: per-coupon compounded-forward spreads over daily-stepped legs out
// to 50Y, plus the full theoretical term-structure build on the shipped
// fixtures. Results must match bitwise between the two backends.
#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rfr/fixtures.hpp"
#include "rfr/transition.hpp"

using namespace rfr;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn>
double time_best_of(int repetitions, Fn&& fn) {
    double best = 1e30;
    for (int i = 0; i < repetitions; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel backend degrades to the serial loop\n");
#endif

    const FixtureMarket market = fixture_market_2019();
    const MarketConventions conv;
    const DiscountCurve curve = bootstrap_ois(market.ois_quotes, tags::eonia, conv);
    const Schedule leg = generate_schedule(market.asof, 600, 12, conv.calendar,
                                           DayCount::act_360);
    const Spread delta{kTransitionSpread};
    constexpr int kReps = 5;

    std::printf("%-34s %12s %12s %9s\n", "kernel", "serial [ms]", "parallel [ms]", "speedup");

    {
        std::vector<double> serial_out;
        std::vector<double> parallel_out;
        const double t_serial = time_best_of(kReps, [&] {
            serial_out = leg_sigma(curve, leg, delta, CompoundingRegime::discrete,
                                   ExecMode::serial);
        });
        const double t_parallel = time_best_of(kReps, [&] {
            parallel_out = leg_sigma(curve, leg, delta, CompoundingRegime::discrete,
                                     ExecMode::parallel);
        });
        std::printf("%-34s %12.3f %12.3f %8.2fx %s\n", "leg_sigma discrete, 50Y daily",
                    t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
                    serial_out == parallel_out ? "(bitwise equal)" : "(MISMATCH)");
    }
    {
        std::vector<double> serial_out;
        std::vector<double> parallel_out;
        const double t_serial = time_best_of(kReps, [&] {
            serial_out = leg_compounded_forwards(curve, leg, delta, ExecMode::serial);
        });
        const double t_parallel = time_best_of(kReps, [&] {
            parallel_out = leg_compounded_forwards(curve, leg, delta, ExecMode::parallel);
        });
        std::printf("%-34s %12.3f %12.3f %8.2fx %s\n", "exact product forwards, 50Y daily",
                    t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
                    serial_out == parallel_out ? "(bitwise equal)" : "(MISMATCH)");
    }
    {
        TheoreticalEstrQuotes serial_out = theoretical_estr_ois_quotes(
            market.ois_quotes, delta, CompoundingRegime::discrete, conv, ExecMode::serial);
        TheoreticalEstrQuotes parallel_out = serial_out;
        const double t_serial = time_best_of(kReps, [&] {
            serial_out = theoretical_estr_ois_quotes(market.ois_quotes, delta,
                                                     CompoundingRegime::discrete, conv,
                                                     ExecMode::serial);
        });
        const double t_parallel = time_best_of(kReps, [&] {
            parallel_out = theoretical_estr_ois_quotes(market.ois_quotes, delta,
                                                       CompoundingRegime::discrete, conv,
                                                       ExecMode::parallel);
        });
        bool equal = serial_out.report.rows.size() == parallel_out.report.rows.size();
        for (std::size_t i = 0; equal && i < serial_out.report.rows.size(); ++i)
            equal = serial_out.report.rows[i].estr_par == parallel_out.report.rows[i].estr_par;
        std::printf("%-34s %12.3f %12.3f %8.2fx %s\n", "theoretical term structure",
                    t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
                    equal ? "(bitwise equal)" : "(MISMATCH)");
    }
    return 0;
}
