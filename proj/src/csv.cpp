#include "rfr/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rfr/errors.hpp"

namespace rfr {

std::string format_number(double value) {
    if (value == 0.0) return "0";  // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

std::string format_number_exact(double value) {
    if (value == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

struct CsvReader {
    std::filesystem::path path;
    std::ifstream stream;
    std::size_t line_no = 0;

    explicit CsvReader(const std::filesystem::path& p) : path(p), stream(p) {
        if (!stream) throw input_error("cannot open " + p.string());
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error(path.filename().string() + ":" + std::to_string(line_no) + ": " + msg);
    }

    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(stream, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            fields = split_fields(line);
            return true;
        }
        return false;
    }

    double parse_double(const std::string& text, const char* what) const {
        double v = 0.0;
        const char* begin = text.data();
        const char* end = begin + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end) fail(std::string("bad ") + what + " '" + text + "'");
        return v;
    }

    int parse_int(const std::string& text, const char* what) const {
        int v = 0;
        const char* begin = text.data();
        const char* end = begin + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end) fail(std::string("bad ") + what + " '" + text + "'");
        return v;
    }

    Date parse_date(const std::string& text, const char* what) const {
        try {
            return Date::from_iso(text);
        } catch (const input_error& e) {
            fail(std::string("bad ") + what + ": " + e.what());
        }
    }

    void expect_fields(const std::vector<std::string>& fields, std::size_t n) const {
        if (fields.size() != n)
            fail("expected " + std::to_string(n) + " fields, got " +
                 std::to_string(fields.size()));
    }
};

bool is_header(const std::vector<std::string>& fields, std::string_view first) {
    return !fields.empty() && fields[0] == first;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // '\n' line endings everywhere
    if (!out) throw input_error("cannot write " + path.string());
    return out;
}

}  // namespace

QuoteSet read_quote_csv(const std::filesystem::path& path) {
    CsvReader reader(path);
    std::vector<std::string> fields;
    std::vector<Quote> quotes;
    bool have_asof = false;
    Date asof;
    while (reader.next(fields)) {
        if (reader.line_no == 1 && is_header(fields, "asof")) continue;
        reader.expect_fields(fields, 4);
        const Date row_asof = reader.parse_date(fields[0], "asof date");
        if (!have_asof) {
            asof = row_asof;
            have_asof = true;
        } else if (row_asof != asof) {
            reader.fail("asof date " + fields[0] + " differs from " + asof.to_iso());
        }
        Quote q;
        try {
            q.kind = parse_quote_kind(fields[1]);
        } catch (const input_error& e) {
            reader.fail(e.what());
        }
        q.tenor_months = reader.parse_int(fields[2], "tenor");
        q.rate = reader.parse_double(fields[3], "rate");
        quotes.push_back(q);
    }
    if (!have_asof) throw input_error(path.filename().string() + ": no quotes found");
    try {
        return QuoteSet(asof, std::move(quotes));
    } catch (const input_error& e) {
        throw input_error(path.filename().string() + ": " + e.what());
    }
}

FixingTable read_fixing_csv(const std::filesystem::path& path) {
    CsvReader reader(path);
    std::vector<std::string> fields;
    FixingTable table;
    while (reader.next(fields)) {
        if (reader.line_no == 1 && is_header(fields, "date")) continue;
        reader.expect_fields(fields, 2);
        table.add(reader.parse_date(fields[0], "fixing date"),
                  reader.parse_double(fields[1], "rate"));
    }
    return table;
}

CreditCurve read_credit_csv(const std::filesystem::path& path, Date anchor, double recovery) {
    CsvReader reader(path);
    std::vector<std::string> fields;
    std::vector<Date> dates;
    std::vector<double> hazards;
    while (reader.next(fields)) {
        if (reader.line_no == 1 && is_header(fields, "pillar_date")) continue;
        reader.expect_fields(fields, 2);
        dates.push_back(reader.parse_date(fields[0], "pillar date"));
        hazards.push_back(reader.parse_double(fields[1], "hazard rate"));
    }
    if (dates.empty()) throw input_error(path.filename().string() + ": no hazard pillars found");
    try {
        return CreditCurve::from_dates(anchor, dates, hazards, recovery);
    } catch (const input_error& e) {
        throw input_error(path.filename().string() + ": " + e.what());
    }
}

std::vector<TradeRecord> read_trade_csv(const std::filesystem::path& path) {
    CsvReader reader(path);
    std::vector<std::string> fields;
    std::vector<TradeRecord> trades;
    while (reader.next(fields)) {
        if (reader.line_no == 1 && is_header(fields, "trade_id")) continue;
        reader.expect_fields(fields, 9);
        TradeRecord t;
        t.trade_id = fields[0];
        t.type = fields[1];
        if (t.type != "OIS" && t.type != "IRS") reader.fail("bad trade type '" + t.type + "'");
        t.start = reader.parse_date(fields[2], "start date");
        t.end = reader.parse_date(fields[3], "end date");
        t.fixed_rate = reader.parse_double(fields[4], "fixed rate");
        t.notional = reader.parse_double(fields[5], "notional");
        if (fields[6] == "P")
            t.side = Side::payer;
        else if (fields[6] == "R")
            t.side = Side::receiver;
        else
            reader.fail("bad payer flag '" + fields[6] + "' (P|R)");
        try {
            t.underlying = parse_rate_index(fields[7]);
        } catch (const input_error& e) {
            reader.fail(e.what());
        }
        t.collateral = CollateralTag{fields[8]};
        trades.push_back(std::move(t));
    }
    return trades;
}

void write_quote_csv(const std::filesystem::path& path, const QuoteSet& quotes) {
    std::ofstream out = open_output(path);
    out << "asof,kind,tenor_months,rate\n";
    for (const Quote& q : quotes.quotes())
        out << quotes.asof().to_iso() << ',' << to_string(q.kind) << ',' << q.tenor_months << ','
            << format_number_exact(q.rate) << '\n';
}

void write_curve_csv(const std::filesystem::path& path, const DiscountCurve& curve) {
    if (curve.pillar_dates().empty())
        throw input_error("curve has no dated pillars to dump");
    std::ofstream out = open_output(path);
    out << "pillar_date,discount_factor,zero_rate_act365f\n";
    for (const Date& d : curve.pillar_dates())
        out << d.to_iso() << ',' << format_number(curve.df(d)) << ','
            << format_number(curve.zero_rate(d, DayCount::act_365_fixed)) << '\n';
}

void write_transition_report_csv(const std::filesystem::path& path,
                                 const TransitionReport& report) {
    std::ofstream out = open_output(path);
    out << "tenor_months,eonia_par,estr_par,par_spread,par_spread_minus_delta\n";
    for (const TransitionRow& row : report.rows)
        out << row.tenor_months << ',' << format_number(row.eonia_par) << ','
            << format_number(row.estr_par) << ',' << format_number(row.par_spread) << ','
            << format_number(row.par_spread_minus_delta) << '\n';
    out << "# rmse_bps," << format_number(report.summary.rmse_bps) << '\n';
    out << "# max_abs_bps," << format_number(report.summary.max_abs_bps) << '\n';
    out << "# min_bps," << format_number(report.summary.min_bps) << '\n';
    out << "# max_bps," << format_number(report.summary.max_bps) << '\n';
}

void write_forward_diff_csv(const std::filesystem::path& path, const ForwardDiffReport& report) {
    std::ofstream out = open_output(path);
    out << "period_start,period_end,fwd_eonia,fwd_estr,diff_bps\n";
    for (const ForwardDiffRow& row : report.rows)
        out << row.start.to_iso() << ',' << row.end.to_iso() << ','
            << format_number(row.fwd_eonia) << ',' << format_number(row.fwd_estr) << ','
            << format_number(row.diff_bps) << '\n';
    out << "# rmse_bps," << format_number(report.rmse_bps) << '\n';
}

void write_series_csv(const std::filesystem::path& path, const std::string& header,
                      const std::vector<std::vector<double>>& rows) {
    std::ofstream out = open_output(path);
    out << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << format_number(row[i]);
        }
        out << '\n';
    }
}

}  // namespace rfr
