#pragma once

#include <cstdint>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcforge {

/// Exact non-negative count; counts like 2^(L-1) outgrow 64 bits from n = 7 on.
using BigCount = boost::multiprecision::cpp_int;

namespace counting {

/// c <= 2^(r-2) - 1
struct Small {
    friend bool operator==(const Small&, const Small&) = default;
};
/// c = 2^(r-1) - 2^(r-m), 1 < m <= r
struct PowerGap {
    int m = 0;
    friend bool operator==(const PowerGap&, const PowerGap&) = default;
};
/// c = 2^(r-1) - 2^(r-m) + x, 1 < m < r-1, 0 < x < 2^(r-m-1)
struct GapPlus {
    int m = 0;
    std::uint64_t x = 0;
    friend bool operator==(const GapPlus&, const GapPlus&) = default;
};

using Subcase = std::variant<Small, PowerGap, GapPlus>;

/// L = 2^n - 2^r + c with 2 <= r <= n and 1 <= c <= 2^(r-1) - 1.
struct CaseForm {
    int r = 0;
    std::uint64_t c = 0;
    Subcase subcase;
    friend bool operator==(const CaseForm&, const CaseForm&) = default;
};
struct ZeroForm {
    friend bool operator==(const ZeroForm&, const ZeroForm&) = default;
};
/// No (r, c) exists: 2^n - L is zero or a power of two.
struct OthersForm {
    friend bool operator==(const OthersForm&, const OthersForm&) = default;
};

struct LDecomposition {
    int n = 0;
    std::int64_t L = 0;
    std::variant<ZeroForm, OthersForm, CaseForm> kind;
};

/// Largest n accepted by the counting functions.
inline constexpr int kMaxCountingExponent = 20;

LDecomposition decompose_L(int n, std::int64_t L);

BigCount binomial(const BigCount& n, unsigned k);

/// Number of sequences with linear complexity L.
BigCount rueppel_N(int n, std::int64_t L);

/// 1-error counts over the odd-weight class (linear complexity 2^n).
BigCount meidl_N1_full(int n, std::int64_t L);

/// 2-error counts over the even-weight class (linear complexity below 2^n).
BigCount N2_lcless(int n, std::int64_t L);
/// 3-error counts over the even-weight class; equal to N2_lcless because a
/// 3-bit change of an even-weight period gives odd weight.
BigCount N3_lcless(int n, std::int64_t L);

BigCount f_term(int r, int m);
BigCount g_term(int r, int m);

/// 3-error counts over the odd-weight class.
BigCount N3_lcfull(int n, std::int64_t L);
/// 2-error counts over the odd-weight class; equal to meidl_N1_full.
BigCount N2_lcfull(int n, std::int64_t L);
/// 4-error counts over the odd-weight class; equal to N3_lcfull.
BigCount N4_lcfull(int n, std::int64_t L);

/// Complete 2-error counting function over all sequences.
BigCount N2_total(int n, std::int64_t L);
/// Complete 3-error counting function over all sequences.
BigCount N3_total(int n, std::int64_t L);

/// The n = 4 column of 3-error counts from the earlier literature, verbatim.
/// Several entries are wrong and the column sums to more than 2^16.
BigCount kavuluru_table1(std::int64_t L);

}  // namespace counting
}  // namespace lcforge
