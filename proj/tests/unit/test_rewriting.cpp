#include <cstdlib>

#include "doctest.h"
#include "popov/rewriting.hpp"

using namespace popov;

TEST_CASE("graded lexicographic order") {
    CHECK(term_less({4, 0, 0}, {0, 5, 0}));
    CHECK(term_less({0, 2, 0}, {1, 0, 1}));
    CHECK(term_less({0, 0, 2}, {0, 1, 1}));
    CHECK_FALSE(term_less({1, 1, 0}, {1, 1, 0}));
}

TEST_CASE("binomial orients towards the smaller term") {
    const RewriteSystem sys = complete_rewrite_system({
        {{0, 3, 1}, Monomial3{1, 0, 0}},
        {{3, 0, 0}, std::nullopt},
    });
    CHECK(sys.normal_form({0, 3, 1}) == Monomial3{1, 0, 0});
    CHECK(sys.reduces_to_zero({3, 0, 0}));
    CHECK(sys.reduces_to_zero({0, 9, 3}));
    CHECK(sys.reduces_to_zero({2, 3, 1}));
    CHECK_FALSE(sys.reduces_to_zero({2, 2, 0}));
    CHECK(sys.same_class(sys.normal_form({1, 3, 1}), sys.normal_form({2, 0, 0})));
    CHECK(sys.locally_confluent());
}

TEST_CASE("a unit difference rewrites to one") {
    const RewriteSystem sys = complete_rewrite_system({{{0, 2, 1}, Monomial3{}}});
    CHECK(sys.normal_form({0, 2, 1}) == Monomial3{});
    CHECK(sys.normal_form({1, 4, 2}) == Monomial3{1, 0, 0});
    CHECK(sys.normal_form({0, 5, 2}) == Monomial3{0, 1, 0});
}

TEST_CASE("completion adds the missing overlap") {
    // X0 X1 = X3 and X1 X3 = 1 force X0 X1^2 = 1 through X1 X3.
    const RewriteSystem sys = complete_rewrite_system({
        {{1, 1, 0}, Monomial3{0, 0, 1}},
        {{0, 1, 1}, Monomial3{}},
    });
    CHECK(sys.locally_confluent());
    CHECK(sys.same_class(sys.normal_form({1, 2, 0}), Monomial3{}));
    CHECK(sys.same_class(sys.normal_form({0, 0, 2}), sys.normal_form({1, 1, 1})));
}

TEST_CASE("budget overrun is reported with the partial rules") {
    std::vector<Relation> rels;
    for (i64 i = 0; i <= 5; ++i) rels.push_back({{i, 5 - i, 0}, std::nullopt});
    try {
        complete_rewrite_system(rels, 2);
        FAIL("no throw");
    } catch (const BudgetExceeded& e) {
        CHECK(e.code() == Errc::budget_exceeded);
        CHECK(e.partial().size() <= 2);
    }
    CHECK(complete_rewrite_system(rels, 100).rules().size() == 6);
}

TEST_CASE("budget override from the environment") {
    setenv("POPOV_COMPLETION_BUDGET", "7", 1);
    CHECK(completion_budget() == 7);
    unsetenv("POPOV_COMPLETION_BUDGET");
    CHECK(completion_budget() == 10000);
}
