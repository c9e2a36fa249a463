#include "lcforge/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "lcforge/error.hpp"
#include "lcforge/kerror.hpp"

namespace lcforge::census {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

bool in_class(std::uint32_t period, SequenceClass cls) noexcept {
    if (cls == SequenceClass::All) return true;
    const bool odd = std::popcount(period) & 1;
    return odd == (cls == SequenceClass::FullLC);
}

void validate(const CensusQuery& q) {
    if (q.n < 0 || q.n > kMaxCensusExponent) {
        throw Error(ErrorCode::TooLarge, "census exponent must be in [0, " +
                                             std::to_string(kMaxCensusExponent) + "]");
    }
    if (q.k > kMaxCensusK) {
        throw Error(ErrorCode::InvalidQuery, "census k must be <= " + std::to_string(kMaxCensusK));
    }
    if (std::holds_alternative<Exhaustive>(q.mode)) {
        if (q.n > kMaxExhaustiveExponent) {
            throw Error(ErrorCode::TooLarge,
                        "exhaustive census is limited to n <= 4; use sampling for n = 5");
        }
    } else if (std::get<Sampled>(q.mode).count == 0) {
        throw Error(ErrorCode::InvalidQuery, "sampled census needs at least one draw");
    }
}

// Splits [0, total) into `parts` contiguous shards and runs work(begin, end, tally) on each.
template <typename Work>
std::vector<std::uint64_t> run_sharded(std::uint64_t total, unsigned parts, std::size_t bins,
                                       Work&& work) {
    parts = static_cast<unsigned>(std::clamp<std::uint64_t>(parts, 1, std::max<std::uint64_t>(total, 1)));
    std::vector<std::vector<std::uint64_t>> tallies(parts, std::vector<std::uint64_t>(bins, 0));
    {
        std::vector<std::jthread> workers;
        workers.reserve(parts);
        for (unsigned p = 0; p < parts; ++p) {
            const std::uint64_t begin = total * p / parts;
            const std::uint64_t end = total * (p + 1) / parts;
            workers.emplace_back([&, p, begin, end] { work(begin, end, tallies[p]); });
        }
    }
    std::vector<std::uint64_t> merged(bins, 0);
    for (const auto& t : tallies) {
        for (std::size_t i = 0; i < bins; ++i) merged[i] += t[i];
    }
    return merged;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::None: return "None";
        case Verdict::Match: return "Match";
        case Verdict::Mismatch: return "Mismatch";
        case Verdict::FixtureWrong: return "FixtureWrong";
        case Verdict::Covered: return "Covered";
        case Verdict::NotCovered: return "NotCovered";
    }
    return "?";
}

Verdict parse_verdict(std::string_view text) {
    for (Verdict v : {Verdict::None, Verdict::Match, Verdict::Mismatch, Verdict::FixtureWrong,
                      Verdict::Covered, Verdict::NotCovered}) {
        if (text == to_string(v)) return v;
    }
    throw Error(ErrorCode::InvalidQuery, "unknown verdict '" + std::string(text) + "'");
}

bool CensusReport::passed() const noexcept {
    return std::none_of(rows.begin(), rows.end(), [](const CensusRow& r) {
        return r.verdict == Verdict::Mismatch || r.verdict == Verdict::NotCovered;
    });
}

Interval three_sigma_interval(std::uint64_t hits, std::uint64_t samples) {
    // Wilson score interval with z = 3; unlike p +- 3 sigma(p) it does not collapse at 0 or N hits.
    constexpr double z2 = 9.0;
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    const double scale = 1 + z2 / n;
    const double centre = (p + z2 / (2 * n)) / scale;
    const double half = 3 * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / scale;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

bool interval_covers(std::uint64_t hits, std::uint64_t samples, const BigCount& numerator,
                     const BigCount& denominator) {
    // p = F/C lies in the score interval iff (h/N - p)^2 <= 9 p (1 - p) / N; scaled by N^2 C^2.
    const BigCount h = hits;
    const BigCount n = samples;
    const BigCount diff = h * denominator - numerator * n;
    return diff * diff <= 9 * numerator * (denominator - numerator) * n;
}

std::uint64_t class_size(int n, SequenceClass cls) {
    if (n < 0 || n > kMaxCensusExponent) throw Error(ErrorCode::TooLarge, "class size overflows");
    const unsigned bits = 1u << n;
    if (cls == SequenceClass::All) return std::uint64_t{1} << bits;
    return std::uint64_t{1} << (bits - 1);
}

std::uint32_t sample_period(int n, SequenceClass cls, std::uint64_t seed, std::uint64_t index) {
    const unsigned bits = 1u << n;
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    auto period = static_cast<std::uint32_t>(splitmix64(seed ^ splitmix64(index)) & mask);
    // Flipping position 0 is a bijection between the parity classes.
    if (!in_class(period, cls)) period ^= 1u;
    return period;
}

unsigned default_jobs() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

CensusReport census_distribution(const CensusQuery& query, unsigned jobs) {
    validate(query);
    const auto started = std::chrono::steady_clock::now();
    if (jobs == 0) jobs = default_jobs();

    const int n = query.n;
    const std::size_t length = std::size_t{1} << n;
    const LaneSearcher searcher(n, query.k);
    const std::size_t bins = length + 1;

    std::vector<std::uint64_t> tally;
    std::uint64_t population = 0;
    if (std::holds_alternative<Exhaustive>(query.mode)) {
        // Sequence index order: position 0 is the least significant bit.
        const std::uint64_t total = std::uint64_t{1} << length;
        tally = run_sharded(total, jobs, bins, [&](std::uint64_t begin, std::uint64_t end, auto& t) {
            for (std::uint64_t i = begin; i < end; ++i) {
                const auto period = static_cast<std::uint32_t>(i);
                if (in_class(period, query.cls)) ++t[searcher.value(period)];
            }
        });
        population = class_size(n, query.cls);
    } else {
        const auto& sampled = std::get<Sampled>(query.mode);
        tally = run_sharded(sampled.count, jobs, bins,
                            [&](std::uint64_t begin, std::uint64_t end, auto& t) {
                                for (std::uint64_t i = begin; i < end; ++i) {
                                    ++t[searcher.value(sample_period(n, query.cls, sampled.seed, i))];
                                }
                            });
        population = sampled.count;
    }

    CensusReport report{query, {}, {}, {}};
    // With k >= 1 no sequence keeps L = 2^n, so that row is only listed for k = 0.
    const std::size_t last = query.k == 0 ? length : length - 1;
    if (query.k > 0 && tally[length] != 0) {
        throw std::logic_error("k-error search left a sequence at full linear complexity");
    }
    for (std::size_t L = 0; L <= last; ++L) {
        report.rows.push_back({static_cast<std::int64_t>(L), tally[L], std::nullopt, std::nullopt,
                               Verdict::None});
        report.totals.census += tally[L];
    }
    report.totals.population = population;
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    return report;
}

std::optional<CountFunction> select_formula(std::size_t k, SequenceClass cls) {
    using namespace counting;
    switch (k) {
        case 0:
            if (cls == SequenceClass::All) return &rueppel_N;
            break;
        case 1:
            if (cls == SequenceClass::FullLC) return &meidl_N1_full;
            break;
        case 2:
            if (cls == SequenceClass::All) return &N2_total;
            if (cls == SequenceClass::FullLC) return &N2_lcfull;
            return &N2_lcless;
        case 3:
            if (cls == SequenceClass::All) return &N3_total;
            if (cls == SequenceClass::FullLC) return &N3_lcfull;
            return &N3_lcless;
        case 4:
            if (cls == SequenceClass::FullLC) return &N4_lcfull;
            break;
        default: break;
    }
    return std::nullopt;
}

void attach_formulas(CensusReport& report) {
    const auto& q = report.query;
    const auto formula = select_formula(q.k, q.cls);
    if (!formula) {
        throw Error(ErrorCode::NoFormulaAvailable,
                    "no closed form for k = " + std::to_string(q.k) + " over class " + to_string(q.cls));
    }
    const bool exhaustive = std::holds_alternative<Exhaustive>(q.mode);
    const BigCount class_total = class_size(q.n, q.cls);
    std::uint64_t formula_total = 0;
    for (auto& row : report.rows) {
        const BigCount value = (*formula)(q.n, row.L);
        row.formula = value.convert_to<std::uint64_t>();
        formula_total += *row.formula;
        if (exhaustive) {
            row.verdict = row.census == *row.formula ? Verdict::Match : Verdict::Mismatch;
        } else {
            row.verdict = interval_covers(row.census, report.totals.population, value, class_total)
                              ? Verdict::Covered
                              : Verdict::NotCovered;
        }
    }
    report.totals.formula = formula_total;
}

CensusReport verify_formulas(int n, std::size_t k, SequenceClass cls, unsigned jobs) {
    if (n > kMaxExhaustiveExponent) {
        throw Error(ErrorCode::TooLarge, "verification runs exhaustively and needs n <= 4");
    }
    if (!select_formula(k, cls)) {
        throw Error(ErrorCode::NoFormulaAvailable,
                    "no closed form for k = " + std::to_string(k) + " over class " + to_string(cls));
    }
    CensusReport report = census_distribution({n, k, cls, Exhaustive{}}, jobs);
    attach_formulas(report);
    return report;
}

CensusReport refutation_report(unsigned jobs) {
    CensusReport report = verify_formulas(4, 3, SequenceClass::All, jobs);
    std::uint64_t fixture_total = 0;
    for (auto& row : report.rows) {
        row.fixture = counting::kavuluru_table1(row.L).convert_to<std::uint64_t>();
        fixture_total += *row.fixture;
        if (row.verdict == Verdict::Match && *row.fixture != row.census) row.verdict = Verdict::FixtureWrong;
    }
    report.totals.fixture = fixture_total;
    return report;
}

}  // namespace lcforge::census
