#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "popov/rewriting.hpp"
#include "popov/weight_lattice.hpp"

namespace popov {

enum class Family { I1, I0, J1, J0 };
const char* family_name(Family f);

struct Monomial5 {
    std::array<i64, 5> exp{};  // X0..X4
    bool operator==(const Monomial5&) const = default;
    bool is_one() const;
};

std::string to_string(const Monomial5& mon);

// lhs - rhs when rhs is present, else the monomial lhs.
struct Generator {
    Monomial5 lhs;
    std::optional<Monomial5> rhs;
    std::string role;  // e.g. "K(5,1)", "F2", "X0^n"
    bool operator==(const Generator&) const = default;
};

std::string to_string(const Generator& g);

struct IdealSpec {
    Family family = Family::J0;
    std::size_t index = 0;  // i for the J families
    std::vector<Generator> generators;
    std::vector<Generator> f_presentation;  // J families: F_j in place of K
    std::array<int, 2> killed{};            // variables set to zero in the reduced ring
    const char* third_variable() const { return killed[1] == 3 ? "X4" : "X3"; }
    std::string name() const;
};

IdealSpec build_ideal(Family family, std::size_t i, const Lattice& lat);

// The presentation shown in the worked examples: the I family without X3, the
// J family through F_j for i <= r.
std::vector<Generator> display_generators(const IdealSpec& spec, const Lattice& lat);

std::vector<Relation> reduce_generators(const std::vector<Generator>& gens, const std::array<int, 2>& killed);

struct CompiledIdeal {
    IdealSpec spec;
    RewriteSystem system;
    RewriteSystem f_system;  // J families only
};

CompiledIdeal compile_ideal(IdealSpec spec);

struct WeightDim {
    i64 dim = 0;
    bool stabilized = false;
    i64 c_bound = 0;
};

// Distinct nonzero normal forms of the f_lambda of weight w with c <= c_bound,
// stabilized when the count is the same at c_bound, c_bound + m, c_bound + 2m.
WeightDim weight_space_dim(const RewriteSystem& sys, const Lattice& lat, const WeightLabel& w, i64 c_bound);

// Starts at c_min(w) + max(4, q - p) m and grows by m until stabilized or max_steps.
WeightDim weight_space_dim_auto(const RewriteSystem& sys, const Lattice& lat, const WeightLabel& w,
                                int max_steps = 64);

enum class Membership { in, not_in, not_applicable };

struct MembershipDecision {
    Membership verdict = Membership::not_applicable;
    std::string rule;
};

// Case analysis of membership by label; no rewriting involved.
MembershipDecision structural_membership(const LambdaLabel& lam, std::size_t i, Family family, const Lattice& lat);
std::vector<MembershipDecision> applicable_rules(const LambdaLabel& lam, std::size_t i, Family family,
                                                 const Lattice& lat);

// P from the greedy decomposition of n into n_j with j < i until the rest is below n_{i-1}.
i64 greedy_convergent_sum(i64 n, std::size_t i, const Lattice& lat);

std::vector<IdealSpec> borel_fixed_points(const Lattice& lat);
// Empty when the ideal passes the fixed-point predicate, else the reason.
std::string borel_defect(const CompiledIdeal& ideal, const Lattice& lat);

Monomial3 to_reduced(const Monomial5& mon, const std::array<int, 2>& killed);

}  // namespace popov
