// rfr: EONIA/ESTR transition pricing toolkit.
//
// Subcommands: bootstrap, transition-ois, transition-irs, fva, price.
// Exit codes: 0 success, 2 input error, 3 numerical failure.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "rfr/bootstrap.hpp"
#include "rfr/credit.hpp"
#include "rfr/csv.hpp"
#include "rfr/curve.hpp"
#include "rfr/errors.hpp"
#include "rfr/fixtures.hpp"
#include "rfr/transition.hpp"

namespace fs = std::filesystem;
using namespace rfr;

namespace {

struct RunConfig {
    std::string asof;
    std::string quotes_path;
    std::string irs_quotes_path;
    std::string fixings_path;
    std::string hazard_path;
    std::string trades_path;
    double delta = kTransitionSpread;
    std::string regime = "discrete";
    double recovery = 0.4;
    double cashflow = 1.0;
    std::string pay_date;
    std::string spread_daycount = "ACT/365F";
    int ois_float_frequency = 12;
    std::string out_dir = ".";
};

fs::path resolve_out_dir(const RunConfig& config) {
    // RFR_OUT_DIR overrides the --out flag when set.
    const char* env = std::getenv("RFR_OUT_DIR");
    const fs::path dir = env != nullptr && *env != '\0' ? fs::path(env)
                                                        : fs::path(config.out_dir);
    fs::create_directories(dir);
    return dir;
}

MarketConventions conventions_from(const RunConfig& config) {
    MarketConventions conv;
    conv.ois_floating_frequency_months = config.ois_float_frequency;
    conv.ois_fixed_frequency_months = config.ois_float_frequency;
    return conv;
}

QuoteSet load_quotes(const RunConfig& config, const std::string& path, const char* flag) {
    if (path.empty()) throw input_error(std::string("missing required option ") + flag);
    QuoteSet quotes = read_quote_csv(path);
    if (!config.asof.empty() && Date::from_iso(config.asof) != quotes.asof())
        throw input_error("--asof " + config.asof + " does not match quote file asof " +
                          quotes.asof().to_iso());
    return quotes;
}

void write_residuals(const fs::path& path, const QuoteSet& quotes, QuoteKind kind,
                     const DiscountCurve& discount, const DiscountCurve& forward,
                     const CollateralTag& collateral, const MarketConventions& conv) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path.string());
    out << "kind,tenor_months,quote_rate,pv_residual_per_notional,requote_minus_quote\n";
    for (const Quote& q : quotes.of_kind(kind)) {
        const double residual = repricing_residual(q, quotes.asof(), discount, forward,
                                                   collateral, conv);
        const SwapSpec probe =
            kind == QuoteKind::ois
                ? make_ois_spec(quotes.asof(), q.tenor_months, 0.0, 1.0, Side::payer,
                                collateral == tags::estr ? RateIndex::overnight_estr
                                                         : RateIndex::overnight_eonia,
                                collateral, conv)
                : make_irs_spec(quotes.asof(), q.tenor_months, 0.0, 1.0, Side::payer, collateral,
                                conv);
        const double requote = par_rate(probe, discount, forward, quotes.asof());
        out << to_string(q.kind) << ',' << q.tenor_months << ',' << format_number(q.rate) << ','
            << format_number(residual) << ',' << format_number(requote - q.rate) << '\n';
    }
}

int cmd_bootstrap(const RunConfig& config) {
    const fs::path out_dir = resolve_out_dir(config);
    const MarketConventions conv = conventions_from(config);
    const QuoteSet ois_quotes = load_quotes(config, config.quotes_path, "--quotes");
    const DiscountCurve curve = bootstrap_ois(ois_quotes, tags::eonia, conv);
    write_curve_csv(out_dir / "ois_curve.csv", curve);
    write_residuals(out_dir / "ois_residuals.csv", ois_quotes, QuoteKind::ois, curve, curve,
                    tags::eonia, conv);
    std::cout << "ois_curve: " << curve.pillar_dates().size() << " pillars, anchor "
              << curve.anchor().to_iso() << "\n";

    if (!config.irs_quotes_path.empty()) {
        const QuoteSet irs_quotes = load_quotes(config, config.irs_quotes_path, "--irs-quotes");
        const DiscountCurve pseudo = bootstrap_ibor(irs_quotes, curve, conv);
        write_curve_csv(out_dir / "euribor6m_curve.csv", pseudo);
        write_residuals(out_dir / "euribor6m_residuals.csv", irs_quotes, QuoteKind::irs_6m,
                        curve, pseudo, tags::eonia, conv);
        std::cout << "euribor6m_curve: " << pseudo.pillar_dates().size() << " pillars\n";
    }
    return 0;
}

int cmd_transition_ois(const RunConfig& config) {
    const fs::path out_dir = resolve_out_dir(config);
    const MarketConventions conv = conventions_from(config);
    const QuoteSet quotes = load_quotes(config, config.quotes_path, "--quotes");
    const auto result = theoretical_estr_ois_quotes(quotes, Spread{config.delta},
                                                    parse_regime(config.regime), conv);
    write_transition_report_csv(out_dir / "transition_ois_report.csv", result.report);
    write_quote_csv(out_dir / "estr_quotes.csv", result.estr_quotes);

    std::vector<std::vector<double>> par_series;
    std::vector<std::vector<double>> spread_series;
    for (const TransitionRow& row : result.report.rows) {
        const double tenor_years = row.tenor_months / 12.0;
        par_series.push_back({tenor_years, row.eonia_par, row.estr_par});
        spread_series.push_back(
            {tenor_years, row.par_spread * 1e4, config.delta * 1e4});
    }
    write_series_csv(out_dir / "transition_ois_par_rates.csv",
                     "tenor_years,eonia_par,estr_par", par_series);
    write_series_csv(out_dir / "transition_ois_spread_bps.csv",
                     "tenor_years,par_spread_bps,delta_bps", spread_series);
    std::cout << "transition-ois rmse_bps: " << format_number(result.report.summary.rmse_bps)
              << "\n";
    return 0;
}

int cmd_transition_irs(const RunConfig& config) {
    const fs::path out_dir = resolve_out_dir(config);
    const MarketConventions conv = conventions_from(config);
    const QuoteSet ois_quotes = load_quotes(config, config.quotes_path, "--quotes");
    const QuoteSet irs_quotes = load_quotes(config, config.irs_quotes_path, "--irs-quotes");

    const ForwardDiffReport indirect =
        constant_par_rates_analysis(irs_quotes, ois_quotes, Spread{config.delta}, conv);
    write_forward_diff_csv(out_dir / "transition_irs_forward_diffs.csv", indirect);

    const TransitionReport direct =
        constant_forward_rates_analysis(irs_quotes, ois_quotes, Spread{config.delta}, conv);
    write_transition_report_csv(out_dir / "transition_irs_par_report.csv", direct);

    std::cout << "constant-par-rates rmse_bps: " << format_number(indirect.rmse_bps) << "\n";
    std::cout << "constant-forward-rates rmse_bps: "
              << format_number(direct.summary.rmse_bps) << "\n";
    return 0;
}

int cmd_fva(const RunConfig& config) {
    const fs::path out_dir = resolve_out_dir(config);
    if (config.pay_date.empty()) throw input_error("--pay-date is required for fva");

    std::optional<QuoteSet> quotes;
    Date asof;
    if (!config.quotes_path.empty()) {
        quotes = load_quotes(config, config.quotes_path, "--quotes");
        asof = quotes->asof();
    } else if (!config.asof.empty()) {
        asof = Date::from_iso(config.asof);
    } else {
        throw input_error("fva needs --quotes or --asof");
    }

    const MarketConventions conv = conventions_from(config);
    const DiscountCurve reference = quotes ? bootstrap_ois(*quotes, tags::eonia, conv)
                                           : DiscountCurve::flat(asof, 0.0, tags::eonia);
    const CreditCurve credit = config.hazard_path.empty()
                                   ? CreditCurve::flat(asof, 0.0, config.recovery)
                                   : read_credit_csv(config.hazard_path, asof, config.recovery);
    const FundingSetup setup(reference, credit);

    const Date pay_date = Date::from_iso(config.pay_date);
    const double base_value = setup.reference.df(pay_date) * config.cashflow;
    const double fva = fva_single_cashflow(setup, config.cashflow, pay_date);
    const double fva_integral = fva_single_cashflow_integral(setup, config.cashflow, pay_date);
    const double fair_value = base_value + fva;
    const auto invariance =
        transition_invariance_check(setup, Spread{config.delta}, config.cashflow, pay_date,
                                    parse_day_count(config.spread_daycount));

    std::ofstream out(out_dir / "fva_report.csv", std::ios::binary);
    if (!out) throw input_error("cannot write fva_report.csv");
    out << "quantity,value\n";
    out << "base_value," << format_number(base_value) << '\n';
    out << "fva," << format_number(fva) << '\n';
    out << "fva_integral_route," << format_number(fva_integral) << '\n';
    out << "fair_value," << format_number(fair_value) << '\n';
    out << "risky_zcb," << format_number(risky_zcb(setup, pay_date)) << '\n';
    out << "funding_zero_spread,"
        << format_number(funding_zero_spread(setup, pay_date,
                                             parse_day_count(config.spread_daycount)))
        << '\n';
    out << "value_eonia," << format_number(invariance.value_eonia) << '\n';
    out << "value_estr," << format_number(invariance.value_estr) << '\n';
    out << "transition_diff," << format_number(invariance.difference) << '\n';

    std::cout << "V_0: " << format_number(base_value) << "\n";
    std::cout << "FVA: " << format_number(fva) << "\n";
    std::cout << "V: " << format_number(fair_value) << "\n";
    std::cout << "transition diff: " << format_number(invariance.difference) << "\n";
    return 0;
}

int cmd_price(const RunConfig& config) {
    if (config.trades_path.empty()) throw input_error("missing required option --trades");
    const fs::path out_dir = resolve_out_dir(config);
    const MarketConventions conv = conventions_from(config);
    const QuoteSet ois_quotes = load_quotes(config, config.quotes_path, "--quotes");
    const Date asof = ois_quotes.asof();

    const DiscountCurve eonia = bootstrap_ois(ois_quotes, tags::eonia, conv);
    const DiscountCurve estr = eonia.apply_spread(Spread{config.delta}, tags::estr);

    FixingTable fixings;
    if (!config.fixings_path.empty()) fixings = read_fixing_csv(config.fixings_path);

    std::optional<DiscountCurve> pseudo_eonia;
    std::optional<DiscountCurve> pseudo_estr;
    if (!config.irs_quotes_path.empty()) {
        const QuoteSet irs_quotes = load_quotes(config, config.irs_quotes_path, "--irs-quotes");
        pseudo_eonia = bootstrap_ibor(irs_quotes, eonia, conv);
        pseudo_estr = bootstrap_ibor(irs_quotes, estr, conv);
    }

    auto discount_for = [&](const CollateralTag& tag) -> const DiscountCurve& {
        if (tag == tags::eonia) return eonia;
        if (tag == tags::estr) return estr;
        throw input_error("unknown collateral tag '" + tag.name + "' (EON|EST)");
    };
    auto forward_for = [&](const TradeRecord& trade) -> const DiscountCurve& {
        switch (trade.underlying) {
            case RateIndex::overnight_eonia: return eonia;
            case RateIndex::overnight_estr: return estr;
            case RateIndex::euribor_6m: break;
        }
        const auto& pseudo = trade.collateral == tags::estr ? pseudo_estr : pseudo_eonia;
        if (!pseudo)
            throw input_error("trade " + trade.trade_id +
                              " needs --irs-quotes for EURIBOR forwards");
        return *pseudo;
    };

    std::ofstream out(out_dir / "trade_values.csv", std::ios::binary);
    if (!out) throw input_error("cannot write trade_values.csv");
    out << "trade_id,value\n";
    for (const TradeRecord& trade : read_trade_csv(config.trades_path)) {
        Schedule floating =
            trade.type == "OIS"
                ? generate_schedule(trade.start, trade.end, conv.ois_floating_frequency_months,
                                    conv.calendar, conv.ois_floating_day_count)
                : generate_schedule(trade.start, trade.end, conv.irs_floating_frequency_months,
                                    conv.calendar, conv.irs_floating_day_count);
        Schedule fixed =
            trade.type == "OIS"
                ? generate_schedule(trade.start, trade.end, conv.ois_fixed_frequency_months,
                                    conv.calendar, conv.ois_fixed_day_count)
                : generate_schedule(trade.start, trade.end, conv.irs_fixed_frequency_months,
                                    conv.calendar, conv.irs_fixed_day_count);
        if (trade.type == "OIS" && !is_overnight(trade.underlying))
            throw input_error("trade " + trade.trade_id + ": OIS needs an overnight underlying");
        if (trade.type == "IRS" && is_overnight(trade.underlying))
            throw input_error("trade " + trade.trade_id + ": IRS needs the EURIBOR underlying");
        const SwapSpec spec(trade.notional, trade.side, trade.fixed_rate, std::move(floating),
                            std::move(fixed), trade.underlying, trade.collateral);
        const double value = price_swap(spec, discount_for(trade.collateral), forward_for(trade),
                                        asof, fixings.empty() ? nullptr : &fixings);
        out << trade.trade_id << ',' << format_number(value) << '\n';
        std::cout << trade.trade_id << ": " << format_number(value) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EONIA/ESTR transition pricing toolkit"};
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--asof", config.asof, "Valuation date YYYY-MM-DD");
    app.add_option("--quotes", config.quotes_path, "OIS quote CSV");
    app.add_option("--irs-quotes", config.irs_quotes_path, "IRS-6M quote CSV");
    app.add_option("--fixings", config.fixings_path, "Fixing CSV (date,rate)");
    app.add_option("--hazard", config.hazard_path, "Credit curve CSV (pillar_date,hazard_rate)");
    app.add_option("--trades", config.trades_path, "Trade CSV");
    app.add_option("--delta", config.delta, "Overnight benchmark spread (decimal)");
    app.add_option("--regime", config.regime, "Compounding regime: discrete|continuous");
    app.add_option("--recovery", config.recovery, "Recovery rate in [0,1]");
    app.add_option("--cashflow", config.cashflow, "Cash flow amount for fva");
    app.add_option("--pay-date", config.pay_date, "Cash flow payment date YYYY-MM-DD");
    app.add_option("--spread-daycount", config.spread_daycount,
                   "Funding-spread day count: ACT/360|ACT/365F|30E/360");
    app.add_option("--ois-float-freq", config.ois_float_frequency,
                   "OIS coupon frequency in months");
    app.add_option("--out", config.out_dir, "Output directory (RFR_OUT_DIR overrides)");

    auto* boot = app.add_subcommand("bootstrap", "Bootstrap curves and dump them");
    auto* tois = app.add_subcommand("transition-ois", "Theoretical shifted OIS term structure");
    auto* tirs = app.add_subcommand("transition-irs", "IRS discounting-switch impact reports");
    auto* fva = app.add_subcommand("fva", "Single-cash-flow FVA and transition invariance");
    auto* price = app.add_subcommand("price", "Value a trade file");
    for (CLI::App* sub : {boot, tois, tirs, fva, price}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (boot->parsed()) return cmd_bootstrap(config);
        if (tois->parsed()) return cmd_transition_ois(config);
        if (tirs->parsed()) return cmd_transition_irs(config);
        if (fva->parsed()) return cmd_fva(config);
        if (price->parsed()) return cmd_price(config);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
