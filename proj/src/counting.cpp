#include "lcforge/counting.hpp"

#include <array>
#include <bit>
#include <string>

#include "lcforge/error.hpp"

namespace lcforge::counting {

namespace {

BigCount pow2(std::int64_t e) { return BigCount(1) << static_cast<unsigned>(e); }

// C(2^e, k)
BigCount choose_pow2(int e, unsigned k) { return binomial(pow2(e), k); }

void check_n_and_L(int n, std::int64_t L) {
    if (n < 0 || n > kMaxCountingExponent) {
        throw Error(ErrorCode::InvalidL, "exponent " + std::to_string(n) + " out of range");
    }
    if (L < 0 || L > (std::int64_t{1} << n)) {
        throw Error(ErrorCode::InvalidL,
                    "L = " + std::to_string(L) + " outside [0, 2^" + std::to_string(n) + "]");
    }
}

// Shared evaluation skeleton: validates, decomposes and dispatches on the form.
template <typename OnZero, typename OnCase>
BigCount evaluate(int n, std::int64_t L, OnZero&& on_zero, OnCase&& on_case) {
    const LDecomposition d = decompose_L(n, L);
    if (std::holds_alternative<ZeroForm>(d.kind)) return on_zero();
    if (std::holds_alternative<OthersForm>(d.kind)) return 0;
    return on_case(std::get<CaseForm>(d.kind));
}

// Bracketed factors of the even-weight class.
BigCount less_small(int r) { return choose_pow2(r, 2) + 1; }
BigCount less_power_gap(int r, int m) { return choose_pow2(r, 2) + 1 - 3 * pow2(r + m - 3); }
BigCount less_gap_plus(int r, int m) { return choose_pow2(r, 2) + 1 + pow2(r - m) - pow2(r + m - 2); }

}  // namespace

LDecomposition decompose_L(int n, std::int64_t L) {
    check_n_and_L(n, L);
    LDecomposition out{n, L, ZeroForm{}};
    if (L == 0) return out;
    const auto gap = static_cast<std::uint64_t>((std::int64_t{1} << n) - L);
    if (gap == 0 || std::has_single_bit(gap)) {
        out.kind = OthersForm{};
        return out;
    }
    const int r = std::bit_width(gap);
    const std::uint64_t c = (std::uint64_t{1} << r) - gap;
    CaseForm form{r, c, Small{}};
    if (c > (std::uint64_t{1} << (r - 2)) - 1) {
        const std::uint64_t e = (std::uint64_t{1} << (r - 1)) - c;
        if (std::has_single_bit(e)) {
            form.subcase = PowerGap{r - std::countr_zero(e)};
        } else {
            const int m = r - std::bit_width(e);
            form.subcase = GapPlus{m, (std::uint64_t{1} << (r - m)) - e};
        }
    }
    out.kind = form;
    return out;
}

BigCount binomial(const BigCount& n, unsigned k) {
    if (n < k) return 0;
    BigCount c = 1;
    for (unsigned i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

BigCount rueppel_N(int n, std::int64_t L) {
    check_n_and_L(n, L);
    return L == 0 ? BigCount(1) : pow2(L - 1);
}

BigCount meidl_N1_full(int n, std::int64_t L) {
    return evaluate(
        n, L, [&] { return pow2(n); }, [&](const CaseForm& f) { return pow2(L + f.r - 1); });
}

BigCount N2_lcless(int n, std::int64_t L) {
    return evaluate(
        n, L, [&] { return choose_pow2(n, 2) + 1; },
        [&](const CaseForm& f) -> BigCount {
            const BigCount scale = pow2(L - 1);
            if (std::holds_alternative<Small>(f.subcase)) return scale * less_small(f.r);
            if (const auto* pg = std::get_if<PowerGap>(&f.subcase)) return scale * less_power_gap(f.r, pg->m);
            return scale * less_gap_plus(f.r, std::get<GapPlus>(f.subcase).m);
        });
}

BigCount N3_lcless(int n, std::int64_t L) { return N2_lcless(n, L); }

BigCount f_term(int r, int m) {
    if (!(1 < m && m <= r) || r > kMaxCountingExponent) {
        throw Error(ErrorCode::InvalidParams, "f(r, m) needs 1 < m <= r");
    }
    const BigCount pairs_outer = choose_pow2(r - m, 2);
    const BigCount shrink = pow2(m - 2) - 1;
    BigCount value = choose_pow2(r, 3) - pow2(r - m) * choose_pow2(m, 3) -
                     pairs_outer * choose_pow2(m, 2) * pow2(m + 1) + pairs_outer * pow2(2 * m) * shrink -
                     pow2(r - 2) * shrink;
    // 2^(r-m-1) * C(2^(m-1), 3); the power is 1/2 when m == r.
    const BigCount triples = choose_pow2(m - 1, 3);
    if (m < r) {
        value += pow2(r - m - 1) * triples;
    } else {
        if (triples % 2 != 0) throw Error(ErrorCode::InvalidParams, "f(r, r) is not integral");
        value += triples / 2;
    }
    return value;
}

BigCount g_term(int r, int m) {
    if (!(1 < m && m < r - 1) || r > kMaxCountingExponent) {
        throw Error(ErrorCode::InvalidParams, "g(r, m) needs 1 < m < r - 1");
    }
    const BigCount pairs_outer = choose_pow2(r - m, 2);
    return choose_pow2(r, 3) - (pow2(m - 2) - 1) * pow2(r + 1) -
           (pow2(m - 1) - 1) * pairs_outer * pow2(m + 1) -
           3 * pow2(r - m - 2) * (choose_pow2(m, 3) - 4 * choose_pow2(m - 1, 2)) -
           pairs_outer * (choose_pow2(m, 2) - pow2(m - 1)) * pow2(m);
}

BigCount N3_lcfull(int n, std::int64_t L) {
    return evaluate(
        n, L, [&] { return choose_pow2(n, 3) + pow2(n); },
        [&](const CaseForm& f) -> BigCount {
            const BigCount scale = pow2(L - 1);
            if (std::holds_alternative<Small>(f.subcase)) return scale * (choose_pow2(f.r, 3) + pow2(f.r));
            // For r <= 3 only the Small case L(3, 1) is populated.
            if (f.r <= 3) return 0;
            if (const auto* pg = std::get_if<PowerGap>(&f.subcase)) return scale * f_term(f.r, pg->m);
            return scale * g_term(f.r, std::get<GapPlus>(f.subcase).m);
        });
}

BigCount N2_lcfull(int n, std::int64_t L) { return meidl_N1_full(n, L); }

BigCount N4_lcfull(int n, std::int64_t L) { return N3_lcfull(n, L); }

BigCount N2_total(int n, std::int64_t L) {
    return evaluate(
        n, L, [&] { return choose_pow2(n, 2) + pow2(n) + 1; },
        [&](const CaseForm& f) -> BigCount {
            const BigCount scale = pow2(L - 1);
            const BigCount base = choose_pow2(f.r, 2) + pow2(f.r) + 1;
            if (std::holds_alternative<Small>(f.subcase)) return scale * base;
            if (const auto* pg = std::get_if<PowerGap>(&f.subcase)) {
                return scale * (base - 3 * pow2(f.r + pg->m - 3));
            }
            const int m = std::get<GapPlus>(f.subcase).m;
            return scale * (base + pow2(f.r - m) - pow2(f.r + m - 2));
        });
}

BigCount N3_total(int n, std::int64_t L) {
    return evaluate(
        n, L, [&] { return choose_pow2(n, 3) + choose_pow2(n, 2) + pow2(n) + 1; },
        [&](const CaseForm& f) -> BigCount {
            const BigCount scale = pow2(L - 1);
            const int r = f.r;
            if (std::holds_alternative<Small>(f.subcase)) {
                // C(2^r, 3), not C(2^n, 3): only the former makes the class sums come out right.
                return scale * (choose_pow2(r, 3) + choose_pow2(r, 2) + pow2(r) + 1);
            }
            if (const auto* pg = std::get_if<PowerGap>(&f.subcase)) {
                const BigCount less = choose_pow2(r, 2) + 1 - 3 * pow2(r + pg->m - 3);
                return r <= 3 ? scale * less : scale * (less + f_term(r, pg->m));
            }
            const int m = std::get<GapPlus>(f.subcase).m;
            return scale * (choose_pow2(r, 2) + 1 + pow2(r - m) - pow2(r + m - 2) + g_term(r, m));
        });
}

BigCount kavuluru_table1(std::int64_t L) {
    static constexpr std::array<unsigned, 16> kColumn = {697,   697,   1394, 2788,  5128, 10704,
                                                         18720, 30272, 0,    23808, 22016, 37888,
                                                         0,     4096,  0,    0};
    if (L < 0 || L >= static_cast<std::int64_t>(kColumn.size())) {
        throw Error(ErrorCode::InvalidL, "table covers L = 0..15 only");
    }
    return kColumn[static_cast<std::size_t>(L)];
}

}  // namespace lcforge::counting
