#include "lcforge/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "lcforge/error.hpp"

namespace lcforge::census {

namespace {

using nlohmann::json;

bool has_fixture(const CensusReport& report) {
    return !report.rows.empty() && report.rows.front().fixture.has_value();
}

std::string optional_field(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

json optional_json(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::uint64_t> optional_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::uint64_t>();
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string to_csv(const CensusReport& report) {
    const bool fixture = has_fixture(report);
    std::ostringstream out;
    out << (fixture ? "L,census,formula,fixture,verdict\n" : "L,census,formula,verdict\n");
    for (const auto& row : report.rows) {
        out << row.L << ',' << row.census << ',' << optional_field(row.formula) << ',';
        if (fixture) out << optional_field(row.fixture) << ',';
        out << to_string(row.verdict) << '\n';
    }
    return out.str();
}

std::string to_json(const CensusReport& report, bool stable) {
    const auto& q = report.query;
    json mode;
    if (const auto* s = std::get_if<Sampled>(&q.mode)) {
        mode = {{"kind", "sampled"}, {"samples", s->count}, {"seed", s->seed}};
    } else {
        mode = {{"kind", "exhaustive"}};
    }
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r = {{"L", row.L},
                  {"census", row.census},
                  {"formula", optional_json(row.formula)},
                  {"verdict", to_string(row.verdict)}};
        if (row.fixture) r["fixture"] = *row.fixture;
        rows.push_back(std::move(r));
    }
    json totals = {{"census", report.totals.census},
                   {"population", report.totals.population},
                   {"formula", optional_json(report.totals.formula)}};
    if (report.totals.fixture) totals["fixture"] = *report.totals.fixture;

    json doc = {{"n", q.n},
                {"k", q.k},
                {"class", to_string(q.cls)},
                {"mode", std::move(mode)},
                {"rows", std::move(rows)},
                {"totals", std::move(totals)}};
    if (!stable) doc["elapsed_ms"] = report.elapsed.count();
    return doc.dump(2) + "\n";
}

CensusReport from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
        CensusReport report;
        report.query.n = doc.at("n").get<int>();
        report.query.k = doc.at("k").get<std::size_t>();
        report.query.cls = parse_sequence_class(doc.at("class").get<std::string>());
        const json& mode = doc.at("mode");
        if (mode.at("kind") == "sampled") {
            report.query.mode = Sampled{mode.at("samples").get<std::uint64_t>(),
                                        mode.at("seed").get<std::uint64_t>()};
        } else {
            report.query.mode = Exhaustive{};
        }
        for (const json& r : doc.at("rows")) {
            report.rows.push_back({r.at("L").get<std::int64_t>(), r.at("census").get<std::uint64_t>(),
                                   optional_from(r, "formula"), optional_from(r, "fixture"),
                                   parse_verdict(r.at("verdict").get<std::string>())});
        }
        const json& totals = doc.at("totals");
        report.totals = {totals.at("census").get<std::uint64_t>(),
                         totals.at("population").get<std::uint64_t>(), optional_from(totals, "formula"),
                         optional_from(totals, "fixture")};
        if (doc.contains("elapsed_ms")) {
            report.elapsed = std::chrono::milliseconds(doc.at("elapsed_ms").get<std::int64_t>());
        }
        return report;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidQuery, std::string("malformed census report: ") + e.what());
    }
}

std::string to_table(const CensusReport& report, bool stable) {
    const auto& q = report.query;
    const auto* sampled = std::get_if<Sampled>(&q.mode);
    const bool fixture = has_fixture(report);
    std::ostringstream out;
    out << "n=" << q.n << " k=" << q.k << " class=" << to_string(q.cls) << " mode="
        << (sampled ? "sampled(" + std::to_string(sampled->count) + ", seed " +
                          std::to_string(sampled->seed) + ")"
                    : std::string("exhaustive"))
        << '\n';

    out << pad("L", 4) << pad("census", 12);
    if (sampled) out << pad("proportion", 12) << pad("3-sigma interval", 22);
    out << pad("formula", 12);
    if (fixture) out << pad("fixture", 12);
    out << "  verdict\n";
    for (const auto& row : report.rows) {
        out << pad(std::to_string(row.L), 4) << pad(std::to_string(row.census), 12);
        if (sampled) {
            const auto iv = three_sigma_interval(row.census, report.totals.population);
            const double p = static_cast<double>(row.census) / static_cast<double>(report.totals.population);
            out << pad(fixed(p, 6), 12) << pad("[" + fixed(iv.lower, 6) + ", " + fixed(iv.upper, 6) + "]", 22);
        }
        out << pad(row.formula ? std::to_string(*row.formula) : "-", 12);
        if (fixture) out << pad(row.fixture ? std::to_string(*row.fixture) : "-", 12);
        out << "  " << to_string(row.verdict) << '\n';
    }
    out << "total census=" << report.totals.census << " population=" << report.totals.population;
    if (report.totals.formula) out << " formula=" << *report.totals.formula;
    if (report.totals.fixture) out << " fixture=" << *report.totals.fixture;
    out << '\n';
    if (!stable) out << "elapsed " << report.elapsed.count() << " ms\n";
    return out.str();
}

}  // namespace lcforge::census
