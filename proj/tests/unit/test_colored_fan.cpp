#include "doctest.h"
#include "popov/colored_fan.hpp"
#include "sweep.hpp"

using namespace popov;
using popov::test::sweep_pairs;

namespace {

LatticeVector v(long long x1, long long x2) { return {Int(x1), Int(x2)}; }

const ColoredCone* find_cone(const ColoredFan& fan, const std::string& label) {
    for (const ColoredCone& c : fan.cones) {
        if (c.label == label) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("base rays") {
    const PairData d = prepare_pair(1, 4, 2);
    const BaseRays br = base_rays(d.inv, d.pair);
    CHECK(br.D == v(-3, 2));
    CHECK(br.s_minus == v(1, 0));
    CHECK(br.s_plus == v(1, 2));
    CHECK(br.D_prime == v(0, 1));
    const PairData t = prepare_pair(1, 2, 1);
    CHECK(base_rays(t.inv, t.pair).D == v(-1, 1));
}

TEST_CASE("valuation cone in the color basis") {
    const PairData d = prepare_pair(1, 4, 2);
    const BaseRays br = base_rays(d.inv, d.pair);
    CHECK(valuation_functional(br.s_plus, d.pair) == 1);
    CHECK(valuation_functional(br.s_minus, d.pair) == 1);
    CHECK(in_valuation_cone(br.D, d.pair));
    CHECK(in_valuation_cone(br.D_prime, d.pair));
    CHECK_FALSE(in_valuation_cone(br.s_plus, d.pair));
}

TEST_CASE("embedding fan of the weighted blow-up") {
    const PairData d = prepare_pair(1, 4, 2);
    const EmbeddingFans ef = embedding_fans(d.inv, d.pair);
    CHECK(ef.E_prime.cones.size() == 4);
    const ColoredCone* closed = find_cone(ef.E_prime, "closed");
    REQUIRE(closed);
    CHECK(closed->colors.empty());
    REQUIRE(closed->rays.size() == 2);
    CHECK(ef.E_prime.rays[closed->rays[0]] == v(-3, 2));
    CHECK(ef.E_prime.rays[closed->rays[1]] == v(0, 1));
    for (const ColoredFan* f : {&ef.E, &ef.E_minus, &ef.E_plus, &ef.E_prime}) {
        CAPTURE(f->name);
        CHECK(fan_defect(*f, d.pair).empty());
    }
}

TEST_CASE("resolution fans of the worked examples") {
    CHECK(resolution_fan(prepare_pair(1, 4, 2)).rays == std::vector<LatticeVector>{v(0, 1), v(-1, 1), v(-3, 2)});
    CHECK(resolution_fan(prepare_pair(1, 3, 3)).rays == std::vector<LatticeVector>{v(0, 1), v(-1, 2), v(-2, 3)});
}

TEST_CASE("orbit poset of the (1,4,2) resolution") {
    const OrbitPoset poset = orbit_poset(resolution_fan(prepare_pair(1, 4, 2)));
    CHECK(poset.labels.size() == 6);
    const std::vector<std::size_t> closed = poset.closed_orbits();
    REQUIRE(closed.size() == 2);
    CHECK(poset.labels[closed[0]] == "Y:1");
    CHECK(poset.labels[closed[1]] == "Y:2");
}

TEST_CASE("zero cone alone is one orbit") {
    ColoredFan fan{"point", {}, {ColoredCone{{}, {}, "open"}}};
    const OrbitPoset poset = orbit_poset(fan);
    CHECK(poset.labels.size() == 1);
    CHECK(poset.closed_orbits() == std::vector<std::size_t>{0});
}

TEST_CASE("a fan missing a face is rejected") {
    const PairData d = prepare_pair(1, 4, 2);
    ColoredFan fan{"broken", {v(0, 1), v(-3, 2)}, {ColoredCone{{}, {}, "open"}, ColoredCone{{0, 1}, {}, "closed"}}};
    CHECK_FALSE(fan_defect(fan, d.pair).empty());
}

TEST_CASE("valuation pairing example") {
    const PairData d = prepare_pair(1, 4, 2);
    CHECK(valuation_pairing(d, 0, sigma(d, 2)) == 3);
}

TEST_CASE("resolution fan properties over the sweep") {
    for (const auto& [p, q, m] : sweep_pairs(12, 12)) {
        const PairData d = prepare_pair(p, q, m);
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(m);
        const std::size_t r = d.r();
        const ColoredFan fan = resolution_fan(d);
        CHECK(fan_defect(fan, d.pair).empty());
        REQUIRE(fan.rays.size() == r + 2);
        for (std::size_t i = 1; i <= r + 1; ++i) CHECK(abs(det(fan.rays[i - 1], fan.rays[i])) == 1);
        const BaseRays br = base_rays(d.inv, d.pair);
        CHECK(det(br.D_prime, br.D) == d.inv.b);
        for (const LatticeVector& ray : fan.rays) CHECK(in_valuation_cone(ray, d.pair));
        CHECK(orbit_poset(fan).closed_orbits().size() == r + 1);

        // v_{D_j}(sigma_i) = P_j Q_i - P_i Q_j, with its sign pattern.
        for (std::size_t i = 0; i <= r + 1; ++i) {
            for (std::size_t j = 0; j <= r + 1; ++j) {
                const Int expect = d.hj.P[j] * d.hj.Q[i] - d.hj.P[i] * d.hj.Q[j];
                const Int got = valuation_pairing(d, j, sigma(d, i));
                CHECK(got == expect);
                if (i > j) CHECK(got > 0);
                if (i == j) CHECK(got == 0);
                if (i < j) CHECK(got < 0);
            }
            if (i <= r) CHECK(valuation_pairing(d, i, sigma(d, i + 1)) == 1);
        }
        CHECK(check_global_generation(d).ok);
        const EmbeddingFans ef = embedding_fans(d.inv, d.pair);
        for (const ColoredFan* f : {&ef.E, &ef.E_minus, &ef.E_plus, &ef.E_prime}) CHECK(fan_defect(*f, d.pair).empty());
    }
}
