#include <algorithm>
#include <climits>

#include "doctest.h"
#include "popov/error.hpp"
#include "popov/weight_lattice.hpp"
#include "sweep.hpp"

using namespace popov;
using popov::test::sweep_pairs;

namespace {

// Label of X0^d0 X1^d1 X3^d3 read off the exponents directly.
LambdaLabel oracle_mu(long long p, long long q, const Monomial3& mon) {
    const i64 omega = p * mon.d1 - q * mon.d3;
    return {mon.d0 - omega, mon.d1 - mon.d3, omega};
}

struct FiberRange {
    i64 lo = LLONG_MAX;
    i64 hi = LLONG_MIN;
    bool empty() const { return lo > hi; }
};

// Monomials with d1 - d3 = c and d0 - omega = n, scanned over d3.
FiberRange enumerate_fiber(long long p, long long q, i64 n, i64 c) {
    FiberRange f;
    for (i64 d3 = 0; d3 <= 400; ++d3) {
        const i64 d1 = d3 + c;
        if (d1 < 0) continue;
        const i64 omega = p * d1 - q * d3;
        if (n + omega < 0) continue;
        f.lo = std::min(f.lo, omega);
        f.hi = std::max(f.hi, omega);
    }
    return f;
}

Lattice lattice(long long p, long long q, long long m) { return Lattice(prepare_pair(p, q, m)); }

}  // namespace

TEST_CASE("label map examples") {
    const Lattice lat = lattice(1, 4, 2);
    CHECK(lat.mu({0, 0, 0}) == LambdaLabel{0, 0, 0});
    CHECK(lat.mu({2, 2, 0}) == LambdaLabel{0, 2, 2});
    CHECK(lat.mu({0, 1, 1}) == LambdaLabel{3, 0, -3});
    CHECK(lat.f_lambda({0, 2, 2}) == Monomial3{2, 2, 0});
    CHECK(lat.f_lambda({0, 0, 0}) == Monomial3{});
    try {
        lat.f_lambda({0, 1, 0});
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_in_lattice);
    }
}

TEST_CASE("fiber extremes of the worked example") {
    const Lattice lat = lattice(1, 4, 2);
    CHECK(lat.omega_max(0, 2) == 2);
    CHECK(lat.omega_max(4, -1) == -4);
    CHECK(lat.omega_max(3, 0) == 0);
    CHECK(lat.omega_min(0, 2) == 2);
    CHECK(lat.omega_min(0, 4) == 1);
    CHECK(lat.omega_min(0, 0) == 0);
    CHECK(lat.c_min({0, 1}) == 1);
    for (i64 n = 0; n <= 3; ++n) CHECK(lat.c_min({n, 0}) == 0);
    try {
        lat.omega_max(0, -1);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::empty_fiber);
    }
}

TEST_CASE("F and lambda_c of the worked examples") {
    const Lattice a = lattice(1, 4, 2);
    CHECK(a.big_F(1) == Monomial3{2, 2, 0});
    CHECK(a.big_F(2) == Monomial3{1, 5, 1});
    CHECK(a.lambda_c(4) == LambdaLabel{2, 4, -2});
    CHECK(a.f_lambda(a.lambda_c(4)) == Monomial3{0, 6, 2});
    CHECK(lattice(1, 3, 3).big_F(1) == Monomial3{1, 4, 1});
    CHECK(a.check_generation(1, 20).ok);
}

TEST_CASE("theta of the worked example") {
    const Lattice lat = lattice(1, 4, 2);
    CHECK(lat.theta(0, 2) == 1);
    CHECK(lat.theta(1, 2) == 2);
}

TEST_CASE("label map and fibers agree with enumeration over the sweep") {
    for (const auto& [p, q, m] : sweep_pairs(7, 6)) {
        const Lattice lat = lattice(p, q, m);
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(m);
        for (i64 d0 = 0; d0 <= 4; ++d0) {
            for (i64 d1 = 0; d1 <= 6; ++d1) {
                for (i64 d3 = 0; d3 <= 6; ++d3) {
                    const Monomial3 mon{d0, d1, d3};
                    const LambdaLabel lam = lat.mu(mon);
                    REQUIRE(lam == oracle_mu(p, q, mon));
                    CHECK(lat.in_lattice(lam));
                    CHECK(lat.f_lambda(lam) == mon);
                }
            }
        }
        for (i64 n = -2; n <= 2 * lat.qp; ++n) {
            for (i64 c = -2; c <= 2 * m; ++c) {
                const FiberRange f = enumerate_fiber(p, q, n, c);
                CAPTURE(n);
                CAPTURE(c);
                REQUIRE(lat.fiber_nonempty(n, c) == !f.empty());
                if (f.empty()) continue;
                CHECK(lat.omega_max(n, c) == f.hi);
                CHECK(lat.omega_max_enumerated(n, c) == f.hi);
                CHECK(lat.omega_min(n, c) == f.lo);
                CHECK(lat.omega_min_closed(n, c) == f.lo);
                const i64 mn = lat.omega_min(n, c);
                for (const LambdaLabel& lam : lat.fiber(n, c)) {
                    CHECK((lam.omega == mn) == (n + lam.omega < lat.qp));
                }
            }
        }
    }
}

TEST_CASE("multiplicativity and eigen labels over the sweep") {
    for (const auto& [p, q, m] : sweep_pairs(9, 9)) {
        const Lattice lat = lattice(p, q, m);
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(m);
        for (std::size_t i = 0; i <= lat.r + 1; ++i) {
            const LambdaLabel lam{lat.ns[i], m * lat.P[i], -lat.ns[i]};
            CHECK(lat.omega_min(lat.ns[i], m * lat.P[i]) == -lat.ns[i]);
            CHECK(lat.f_lambda(lam) == lat.eigen_monomial(i));
        }
        for (std::size_t i = 1; i <= lat.r; ++i) CHECK(lat.lambda_c(m * lat.P[i]) == LambdaLabel{lat.ns[i], m * lat.P[i], -lat.ns[i]});
        for (i64 c = m; c <= m * (lat.b + 1); c += m) {
            for (i64 c2 = c; c2 <= m * (lat.b + 1); c2 += m) {
                CHECK(lat.f_lambda(lat.lambda_c(c)).divides(lat.f_lambda(lat.lambda_c(c2))));
            }
        }
        const Monomial3 x{1, 2, 0}, y{0, 3, 1};
        CHECK(lat.mu(x * y) == lat.mu(x) + lat.mu(y));
        if (lat.beta == 0) continue;
        for (i64 j = 1; j < lat.b; ++j) CHECK(lat.big_F(j).d0 >= 1);
    }
}
