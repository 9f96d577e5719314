#include <cstdint>
#include <numeric>

#include "doctest.h"
#include "popov/error.hpp"
#include "popov/exact_arith.hpp"

using namespace popov;

namespace {

// Minus-sign expansion by repeated ceiling division, independent of hj_expand.
std::vector<Int> oracle_coeffs(Int b, Int t) {
    std::vector<Int> out;
    while (t > 0) {
        const Int c = (b + t - 1) / t;
        out.push_back(c);
        const Int next = c * t - b;
        b = t;
        t = next;
    }
    return out;
}

}  // namespace

TEST_CASE("rem is nonnegative for negative dividends") {
    CHECK(rem(Int(-7), Int(3)) == 2);
    CHECK(rem(Int(7), Int(3)) == 1);
    CHECK(rem(Int(-6), Int(3)) == 0);
    CHECK(floor_div(Int(-7), Int(3)) == -3);
    CHECK(ceil_div(Int(-7), Int(3)) == -2);
    CHECK(ceil_div(Int(7), Int(3)) == 3);
    CHECK(gcd(Int(12), Int(18)) == 6);
}

TEST_CASE("narrowing throws instead of wrapping") {
    const Int big = Int(1) << 63;
    CHECK(to_i64(big - 1) == INT64_MAX);
    CHECK(to_i64(-big) == INT64_MIN);
    try {
        to_i64(big);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::out_of_range);
    }
}

TEST_CASE("expansion of 3/1") {
    const HJExpansion hj = hj_expand(3, 1);
    REQUIRE(hj.r() == 1);
    CHECK(hj.c(1) == 3);
    CHECK(hj.P == std::vector<Int>{0, 1, 3});
    CHECK(hj.Q == std::vector<Int>{-1, 0, 1});
    CHECK(hj.tchain == std::vector<Int>{3, 1, 0});
}

TEST_CASE("expansion of 1/1 is empty") {
    const HJExpansion hj = hj_expand(1, 1);
    CHECK(hj.r() == 0);
    CHECK(hj.P == std::vector<Int>{0, 1});
    CHECK(hj.Q == std::vector<Int>{-1, 0});
}

TEST_CASE("expansion properties for b <= 200") {
    for (long long b = 2; b <= 200; ++b) {
        for (long long t = 1; t < b; ++t) {
            if (std::gcd(b, t) != 1) continue;
            const HJExpansion hj = hj_expand(b, t);
            CAPTURE(b);
            CAPTURE(t);
            REQUIRE(hj.coeffs == oracle_coeffs(b, t));
            CHECK(hj_value(hj.coeffs) == Rational(b, t));
            const std::size_t r = hj.r();
            CHECK(hj.P[r + 1] == b);
            CHECK(hj.Q[r + 1] == t);
            for (std::size_t i = 1; i <= r; ++i) CHECK(hj.c(i) >= 2);
            for (std::size_t i = 0; i <= r; ++i) {
                CHECK(hj.P[i] * hj.Q[i + 1] - hj.P[i + 1] * hj.Q[i] == 1);
                CHECK(hj.P[i] < hj.P[i + 1]);
                CHECK(hj.Q[i] < hj.Q[i + 1]);
            }
            for (std::size_t i = 2; i <= r + 1; ++i) {
                CHECK(hj.P[i] == hj.c(i - 1) * hj.P[i - 1] - hj.P[i - 2]);
                CHECK(hj.Q[i] == hj.c(i - 1) * hj.Q[i - 1] - hj.Q[i - 2]);
            }
        }
    }
}
