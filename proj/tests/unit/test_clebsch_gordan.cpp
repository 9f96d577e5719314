#include <numeric>

#include "doctest.h"
#include "popov/clebsch_gordan.hpp"

using namespace popov;

namespace {

TensorVector tv(std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    TensorVector v;
    for (const auto& [key, c] : terms) v.terms[key] = c;
    return v;
}

}  // namespace

TEST_CASE("single factor is a plain monomial") {
    for (int i = 0; i <= 4; ++i) CHECK(cg_vector({4}, i) == tv({{{i}, 1}}));
}

TEST_CASE("vectors of the worked example") {
    CHECK(cg_vector({1, 3}, 1) == tv({{{1, 0}, Rational(1, 4)}, {{0, 1}, Rational(3, 4)}}));
    CHECK(cg_vector({1, 1}, 1) == tv({{{0, 1}, Rational(1, 2)}, {{1, 0}, Rational(1, 2)}}));
}

TEST_CASE("lowering action examples") {
    CHECK(lowering_action(cg_vector({1, 3}, 0), {1, 3}) == Rational(4) * cg_vector({1, 3}, 1));
    CHECK(lowering_action(cg_vector({1, 1}, 0), {1, 1}) == Rational(2) * cg_vector({1, 1}, 1));
    CHECK(lowering_action(cg_vector({1, 3}, 4), {1, 3}).terms.empty());
}

TEST_CASE("binomials") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(8, 0) == 1);
    CHECK(binomial(8, 8) == 1);
}

TEST_CASE("equivariance for total weight up to 8") {
    const auto parts = compositions_up_to(8);
    CHECK(parts.size() == 255);
    for (const std::vector<int>& mu : parts) {
        const int n = std::accumulate(mu.begin(), mu.end(), 0);
        CAPTURE(mu.size());
        CHECK(cg_vector(mu, 0).terms.at(std::vector<int>(mu.size(), 0)) == 1);
        for (int i = 0; i < n; ++i) {
            CHECK(lowering_action(cg_vector(mu, i), mu) == Rational(n - i) * cg_vector(mu, i + 1));
        }
        CHECK(lowering_action(cg_vector(mu, n), mu).terms.empty());
    }
}
