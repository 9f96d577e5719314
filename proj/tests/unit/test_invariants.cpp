#include <algorithm>
#include <set>

#include "doctest.h"
#include "popov/error.hpp"
#include "popov/invariants.hpp"
#include "sweep.hpp"

using namespace popov;
using popov::test::sweep_pairs;

namespace {

// Irreducible elements of M+ inside [0, bound]^2, found by exhaustive sums.
std::vector<Point2> oracle_generators(long long p, long long q, long long m, long long bound) {
    std::vector<Point2> elems;
    for (long long i = 0; i <= bound; ++i) {
        for (long long j = 0; j <= bound; ++j) {
            if (q * j <= p * i && (i - j) % m == 0 && (i || j)) elems.push_back({i, j});
        }
    }
    const std::set<Point2> members(elems.begin(), elems.end());
    std::vector<Point2> out;
    for (const Point2& u : elems) {
        bool reducible = false;
        for (const Point2& v : elems) {
            if (v.first > u.first || v.second > u.second || v == u) continue;
            if (members.count({u.first - v.first, u.second - v.second})) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Errc code_of(long long p, long long q, long long m) {
    try {
        validate_pair(p, q, m);
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::consistency_failure;
}

}  // namespace

TEST_CASE("pair validation") {
    CHECK_FALSE(validate_pair(1, 4, 2).smooth);
    CHECK(validate_pair(3, 3, 5).smooth);
    CHECK(code_of(2, 4, 1) == Errc::invalid_pair);
    CHECK(code_of(0, 4, 1) == Errc::invalid_pair);
    CHECK(code_of(5, 4, 1) == Errc::invalid_pair);
    CHECK(code_of(1, 4, 0) == Errc::invalid_pair);
}

TEST_CASE("derived invariants of the worked examples") {
    const DerivedInvariants a = derive_invariants(validate_pair(1, 4, 2));
    CHECK(a.k == 1);
    CHECK(a.a == 2);
    CHECK(a.b == 3);
    CHECK(a.alpha == 0);
    CHECK(a.beta == 2);
    CHECK(a.t == 1);
    const DerivedInvariants b = derive_invariants(validate_pair(1, 3, 3));
    CHECK(b.k == 1);
    CHECK(b.a == 3);
    CHECK(b.b == 2);
    CHECK(b.alpha == 1);
    CHECK(b.beta == 1);
    CHECK(b.t == 1);
    // m p = 1 = alpha (q - p) + beta forces alpha = 1 here.
    const DerivedInvariants c = derive_invariants(validate_pair(1, 2, 1));
    CHECK(c.alpha == 1);
    CHECK(c.beta == 0);
    CHECK(c.b == 1);
    CHECK(c.t == 1);
}

TEST_CASE("smooth pairs are refused by the pipeline") {
    try {
        derive_invariants(validate_pair(3, 3, 5));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::smooth_case_unsupported);
    }
}

TEST_CASE("toric criterion") {
    CHECK(is_toric(validate_pair(1, 2, 1)));
    CHECK_FALSE(is_toric(validate_pair(1, 4, 2)));
    CHECK(is_toric(validate_pair(2, 5, 3)));
}

TEST_CASE("sequences of the worked examples") {
    const PairData a = prepare_pair(1, 4, 2);
    CHECK(a.seq.e == std::vector<Int>{1, 3, 8});
    CHECK(a.seq.l == std::vector<Int>{1, 1, 2});
    CHECK(a.seq.n == std::vector<Int>{3, 1, 0});
    const PairData b = prepare_pair(1, 3, 3);
    CHECK(b.seq.e == std::vector<Int>{1, 5, 9});
    CHECK(b.seq.l == std::vector<Int>{1, 2, 3});
    CHECK(b.seq.n == std::vector<Int>{2, 1, 0});
}

TEST_CASE("semigroup generators of the worked examples") {
    CHECK(prepare_pair(1, 4, 2).semigroup.gens == std::vector<Point2>{{2, 0}, {5, 1}, {8, 2}});
    CHECK(prepare_pair(1, 3, 3).semigroup.gens == std::vector<Point2>{{3, 0}, {4, 1}, {9, 3}});
    CHECK(prepare_pair(1, 2, 1).semigroup.gens == std::vector<Point2>{{1, 0}, {2, 1}});
}

TEST_CASE("semigroup generators agree with exhaustive irreducibles") {
    for (const auto& [p, q, m] : sweep_pairs(7, 7)) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(m);
        const SemigroupGenerators sg = semigroup_generators(validate_pair(p, q, m));
        CHECK(sg.gens == oracle_generators(p, q, m, m * q + 1));
        for (const Point2& g : sg.gens) CHECK(in_semigroup(p, q, m, g));
    }
}

TEST_CASE("sequence chain over the sweep") {
    for (const auto& [p, q, m] : sweep_pairs(12, 12)) {
        const PairData d = prepare_pair(p, q, m);
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(m);
        const std::size_t r = d.r();
        const SequenceTable& s = d.seq;
        REQUIRE(s.n.size() == r + 2);
        for (std::size_t i = 0; i <= r + 1; ++i) CHECK(s.n[i] == -d.pair.p * s.e[i] + d.pair.q * s.l[i]);
        CHECK(s.n[0] == d.pair.q - d.pair.p);
        CHECK(s.n[r] == d.inv.k);
        CHECK(s.n[r + 1] == 0);
        for (std::size_t i = 1; i <= r + 1; ++i) CHECK(s.n[i - 1] > s.n[i]);
        for (std::size_t i = 2; i <= r + 1; ++i) CHECK(s.n[i] == d.hj.c(i - 1) * s.n[i - 1] - s.n[i - 2]);
        CHECK(s.e[r + 1] == d.inv.a * d.pair.q);
        CHECK(s.l[r + 1] == d.inv.a * d.pair.p);
        if (!d.toric) {
            for (std::size_t i = 0; i <= r + 1; ++i) {
                CHECK(s.n[i] == d.inv.k * (d.inv.t * d.hj.P[i] - d.inv.b * d.hj.Q[i]));
            }
        }
        CHECK(gcd(d.inv.b, d.inv.t) == 1);
        CHECK((d.inv.t == d.inv.b) == d.toric);
    }
}
