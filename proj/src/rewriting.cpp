#include "popov/rewriting.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace popov {

bool term_less(const Monomial3& a, const Monomial3& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.d0 != b.d0) return a.d0 < b.d0;
    if (a.d1 != b.d1) return a.d1 < b.d1;
    return a.d3 < b.d3;
}

namespace {

Monomial3 lcm(const Monomial3& a, const Monomial3& b) {
    return Monomial3{std::max(a.d0, b.d0), std::max(a.d1, b.d1), std::max(a.d3, b.d3)};
}

bool coprime(const Monomial3& a, const Monomial3& b) {
    return std::min(a.d0, b.d0) == 0 && std::min(a.d1, b.d1) == 0 && std::min(a.d3, b.d3) == 0;
}

std::optional<Monomial3> reduce(Monomial3 mon, const std::vector<Rule>& rules) {
    for (;;) {
        auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.lhs.divides(mon); });
        if (it == rules.end()) return mon;
        if (!it->rhs) return std::nullopt;
        mon = (mon / it->lhs) * *it->rhs;
    }
}

// Rule from a relation whose two sides are already in normal form; empty when
// the relation is trivial.
std::optional<Rule> orient(const std::optional<Monomial3>& u, const std::optional<Monomial3>& v) {
    if (!u && !v) return std::nullopt;
    if (!u) return Rule{*v, std::nullopt};
    if (!v) return Rule{*u, std::nullopt};
    if (*u == *v) return std::nullopt;
    if (term_less(*u, *v)) return Rule{*v, *u};
    return Rule{*u, *v};
}

// The two sides of the S-polynomial of a pair, or nothing when it vanishes.
std::optional<std::pair<std::optional<Monomial3>, std::optional<Monomial3>>> s_pair(const Rule& a,
                                                                                   const Rule& b) {
    if (!a.rhs && !b.rhs) return std::nullopt;
    if (coprime(a.lhs, b.lhs)) return std::nullopt;
    const Monomial3 L = lcm(a.lhs, b.lhs);
    std::optional<Monomial3> u;
    std::optional<Monomial3> v;
    if (a.rhs) u = (L / a.lhs) * *a.rhs;
    if (b.rhs) v = (L / b.lhs) * *b.rhs;
    return std::make_pair(u, v);
}

std::vector<Rule> interreduce(std::vector<Rule> rules) {
    std::vector<Rule> minimal;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < rules.size() && !redundant; ++j) {
            if (i == j || !rules[j].lhs.divides(rules[i].lhs)) continue;
            // Equal leads: keep the first copy.
            redundant = rules[j].lhs != rules[i].lhs || j < i;
        }
        if (!redundant) minimal.push_back(rules[i]);
    }
    for (Rule& r : minimal) {
        if (r.rhs) r.rhs = reduce(*r.rhs, minimal);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Rule& x, const Rule& y) { return term_less(x.lhs, y.lhs); });
    return minimal;
}

}  // namespace

std::optional<Monomial3> RewriteSystem::normal_form(Monomial3 mon) const { return reduce(mon, rules_); }

bool RewriteSystem::same_class(const std::optional<Monomial3>& a, const std::optional<Monomial3>& b) const {
    auto na = a ? normal_form(*a) : std::nullopt;
    auto nb = b ? normal_form(*b) : std::nullopt;
    return na == nb;
}

bool RewriteSystem::locally_confluent() const {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        for (std::size_t j = i + 1; j < rules_.size(); ++j) {
            auto sp = s_pair(rules_[i], rules_[j]);
            if (sp && !same_class(sp->first, sp->second)) return false;
        }
    }
    return true;
}

std::size_t completion_budget() {
    if (const char* env = std::getenv("POPOV_COMPLETION_BUDGET")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw Error(Errc::invalid_argument, std::string("POPOV_COMPLETION_BUDGET=") + env);
    }
    return 10000;
}

BudgetExceeded::BudgetExceeded(std::size_t budget, std::vector<Rule> partial)
    : Error(Errc::budget_exceeded,
            "completion exceeded " + std::to_string(budget) + " rules (" + std::to_string(partial.size()) + " kept)"),
      partial_(std::move(partial)) {}

RewriteSystem complete_rewrite_system(const std::vector<Relation>& relations, std::size_t budget) {
    std::vector<Rule> rules;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    auto add = [&](const Rule& rule) {
        if (rules.size() >= budget) throw BudgetExceeded(budget, rules);
        for (std::size_t i = 0; i < rules.size(); ++i) pairs.emplace_back(i, rules.size());
        rules.push_back(rule);
    };
    for (const Relation& rel : relations) {
        auto u = reduce(rel.lhs, rules);
        auto v = rel.rhs ? reduce(*rel.rhs, rules) : std::nullopt;
        if (auto rule = orient(u, v)) add(*rule);
    }
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        auto sp = s_pair(rules[i], rules[j]);
        if (!sp) continue;
        auto u = sp->first ? reduce(*sp->first, rules) : std::nullopt;
        auto v = sp->second ? reduce(*sp->second, rules) : std::nullopt;
        if (auto rule = orient(u, v)) add(*rule);
    }
    return RewriteSystem(interreduce(std::move(rules)));
}

}  // namespace popov
