#pragma once

#include <optional>
#include <vector>

#include "popov/error.hpp"
#include "popov/weight_lattice.hpp"

namespace popov {

// Graded lexicographic order with X0 > X1 > third variable.
bool term_less(const Monomial3& a, const Monomial3& b);

// lhs - rhs = 0, or lhs = 0 when rhs is empty.
struct Relation {
    Monomial3 lhs;
    std::optional<Monomial3> rhs;
};

struct Rule {
    Monomial3 lhs;
    std::optional<Monomial3> rhs;  // empty: lhs rewrites to zero
    bool operator==(const Rule&) const = default;
};

class RewriteSystem {
public:
    RewriteSystem() = default;
    explicit RewriteSystem(std::vector<Rule> rules) : rules_(std::move(rules)) {}

    const std::vector<Rule>& rules() const { return rules_; }

    // Empty result means zero.
    std::optional<Monomial3> normal_form(Monomial3 mon) const;
    bool reduces_to_zero(const Monomial3& mon) const { return !normal_form(mon); }
    bool same_class(const std::optional<Monomial3>& a, const std::optional<Monomial3>& b) const;

    // Every critical pair joins. The completion guarantees it; this re-derives it.
    bool locally_confluent() const;

private:
    std::vector<Rule> rules_;
};

std::size_t completion_budget();

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t budget, std::vector<Rule> partial);
    const std::vector<Rule>& partial() const { return partial_; }

private:
    std::vector<Rule> partial_;
};

RewriteSystem complete_rewrite_system(const std::vector<Relation>& relations, std::size_t budget = completion_budget());

}  // namespace popov
