#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "lcforge/counting.hpp"
#include "lcforge/sequence.hpp"

namespace lcforge::census {

struct Exhaustive {
    friend bool operator==(const Exhaustive&, const Exhaustive&) = default;
};

/// Uniform draws from the class. Draw i depends only on (seed, i), so any
/// subrange of draws can be produced independently.
struct Sampled {
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    friend bool operator==(const Sampled&, const Sampled&) = default;
};

using Mode = std::variant<Exhaustive, Sampled>;

inline constexpr std::size_t kMaxCensusK = 4;
inline constexpr int kMaxExhaustiveExponent = 4;

struct CensusQuery {
    int n = 0;
    std::size_t k = 0;
    SequenceClass cls = SequenceClass::All;
    Mode mode = Exhaustive{};
    friend bool operator==(const CensusQuery&, const CensusQuery&) = default;
};

enum class Verdict { None, Match, Mismatch, FixtureWrong, Covered, NotCovered };

const char* to_string(Verdict v) noexcept;
Verdict parse_verdict(std::string_view text);

struct CensusRow {
    std::int64_t L = 0;
    /// Exact count (exhaustive) or number of hits among the draws (sampled).
    std::uint64_t census = 0;
    std::optional<std::uint64_t> formula;
    std::optional<std::uint64_t> fixture;
    Verdict verdict = Verdict::None;
    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusTotals {
    std::uint64_t census = 0;
    /// Class size (exhaustive) or number of draws (sampled).
    std::uint64_t population = 0;
    std::optional<std::uint64_t> formula;
    std::optional<std::uint64_t> fixture;
    friend bool operator==(const CensusTotals&, const CensusTotals&) = default;
};

struct CensusReport {
    CensusQuery query;
    std::vector<CensusRow> rows;
    CensusTotals totals;
    std::chrono::milliseconds elapsed{0};

    /// No row is Mismatch or NotCovered.
    bool passed() const noexcept;
};

struct Interval {
    double lower = 0;
    double upper = 0;
};

/// Wilson score interval at three standard deviations: every p with
/// |hits/samples - p| <= 3 sqrt(p (1 - p) / samples).
Interval three_sigma_interval(std::uint64_t hits, std::uint64_t samples);

/// Exact membership test of numerator/denominator in three_sigma_interval(hits, samples).
bool interval_covers(std::uint64_t hits, std::uint64_t samples, const BigCount& numerator,
                     const BigCount& denominator);

/// 2^(2^n) for All, 2^(2^n - 1) for either parity class.
std::uint64_t class_size(int n, SequenceClass cls);

/// Packed period of draw `index` for a sampled query.
std::uint32_t sample_period(int n, SequenceClass cls, std::uint64_t seed, std::uint64_t index);

/// Worker count used when the caller passes 0.
unsigned default_jobs() noexcept;

/// Per-L distribution of L_k over the query's class. Reports are independent of `jobs`.
CensusReport census_distribution(const CensusQuery& query, unsigned jobs = 0);

using CountFunction = BigCount (*)(int, std::int64_t);

/// Closed form matching (k, class), if one exists.
std::optional<CountFunction> select_formula(std::size_t k, SequenceClass cls);

/// Fills formula counts and verdicts; throws NoFormulaAvailable.
void attach_formulas(CensusReport& report);

/// Exhaustive census at n <= 4 checked row by row against the matching closed form.
CensusReport verify_formulas(int n, std::size_t k, SequenceClass cls, unsigned jobs = 0);

/// n = 4, k = 3 census against the complete 3-error formula and the literature column.
CensusReport refutation_report(unsigned jobs = 0);

}  // namespace lcforge::census
