#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rfr/bootstrap.hpp"
#include "rfr/credit.hpp"
#include "rfr/instruments.hpp"
#include "rfr/transition.hpp"

namespace rfr {

/// Fixed number formatting for all emitted files: 15 significant digits,
/// C locale. Identical inputs therefore produce byte-identical outputs.
std::string format_number(double value);

/// Full-precision formatting (17 significant digits) for inputs that must
/// round-trip exactly, e.g. shipped quote fixtures.
std::string format_number_exact(double value);

// --- readers (all errors carry file:line) ---

/// Quote file: `asof,kind,tenor_months,rate`, kind in {OIS, IRS-6M}.
QuoteSet read_quote_csv(const std::filesystem::path& path);

/// Fixing file: `date,rate`.
FixingTable read_fixing_csv(const std::filesystem::path& path);

/// Credit curve file: `pillar_date,hazard_rate`; recovery supplied separately.
CreditCurve read_credit_csv(const std::filesystem::path& path, Date anchor, double recovery);

/// Trade file:
/// `trade_id,type,start,end,fixed_rate,notional,payer,underlying,collateral`
/// with type in {OIS, IRS} and payer in {P, R}.
struct TradeRecord {
    std::string trade_id;
    std::string type;  // "OIS" | "IRS"
    Date start;
    Date end;
    double fixed_rate = 0.0;
    double notional = 0.0;
    Side side = Side::payer;
    RateIndex underlying = RateIndex::overnight_eonia;
    CollateralTag collateral;
};

std::vector<TradeRecord> read_trade_csv(const std::filesystem::path& path);

// --- writers ---

void write_quote_csv(const std::filesystem::path& path, const QuoteSet& quotes);

/// Curve dump: `pillar_date,discount_factor,zero_rate_act365f`.
void write_curve_csv(const std::filesystem::path& path, const DiscountCurve& curve);

void write_transition_report_csv(const std::filesystem::path& path,
                                 const TransitionReport& report);

void write_forward_diff_csv(const std::filesystem::path& path, const ForwardDiffReport& report);

/// Plot-ready series: header plus one row per x value.
void write_series_csv(const std::filesystem::path& path, const std::string& header,
                      const std::vector<std::vector<double>>& rows);

}  // namespace rfr
