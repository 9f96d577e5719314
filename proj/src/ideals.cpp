#include "popov/ideals.hpp"

#include <algorithm>
#include <set>

#include "popov/error.hpp"

namespace popov {

const char* family_name(Family f) {
    switch (f) {
        case Family::I1: return "I1";
        case Family::I0: return "I0";
        case Family::J1: return "J1";
        case Family::J0: return "J0";
    }
    return "?";
}

bool Monomial5::is_one() const {
    for (i64 e : exp) {
        if (e != 0) return false;
    }
    return true;
}

std::string to_string(const Monomial5& mon) {
    std::string out;
    for (int v = 0; v < 5; ++v) {
        if (mon.exp[v] == 0) continue;
        out += "X" + std::to_string(v);
        if (mon.exp[v] != 1) out += "^" + std::to_string(mon.exp[v]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Generator& g) {
    if (!g.rhs) return to_string(g.lhs);
    return to_string(g.lhs) + " - " + to_string(*g.rhs);
}

std::string IdealSpec::name() const {
    if (family == Family::I1 || family == Family::I0) return family_name(family);
    return std::string(family_name(family)) + "(" + std::to_string(index) + ")";
}

namespace {

Monomial5 var(int v, i64 e = 1) {
    Monomial5 m;
    m.exp[v] = e;
    return m;
}

Monomial5 mono(i64 d0, i64 d1, i64 d3, i64 d4 = 0) {
    Monomial5 m;
    m.exp = {d0, d1, 0, d3, d4};
    return m;
}

Monomial5 from_reduced(const Monomial3& mon) { return mono(mon.d0, mon.d1, mon.d3); }

}  // namespace

IdealSpec build_ideal(Family family, std::size_t i, const Lattice& lat) {
    IdealSpec spec;
    spec.family = family;
    if (family == Family::I1 || family == Family::I0) {
        spec.killed = {2, 3};
        spec.generators.push_back(Generator{var(0, lat.qp), mono(0, 1, 0, 1), "hypersurface"});
        spec.generators.push_back(Generator{var(2), std::nullopt, "X2"});
        spec.generators.push_back(Generator{var(3), std::nullopt, "X3"});
        const Monomial5 unit_part = mono(lat.m * lat.p, lat.m, 0);
        if (family == Family::I1) {
            spec.generators.push_back(Generator{Monomial5{}, unit_part, "unit"});
        } else {
            spec.generators.push_back(Generator{unit_part, std::nullopt, "unit"});
        }
        return spec;
    }
    if (i < 1 || i > lat.r + 1) throw Error(Errc::out_of_range, "J index " + std::to_string(i));
    spec.index = i;
    spec.killed = {2, 4};
    std::vector<Generator> head;
    head.push_back(Generator{var(0, lat.ns[i - 1]), std::nullopt, "X0^n"});
    head.push_back(Generator{var(2), std::nullopt, "X2"});
    head.push_back(Generator{var(4), std::nullopt, "X4"});
    const Monomial5 eigen = mono(0, lat.es[i], lat.ls[i]);
    if (family == Family::J1) {
        head.push_back(Generator{var(0, lat.ns[i]), eigen, "binomial"});
    } else {
        head.push_back(Generator{eigen, std::nullopt, "eigen"});
    }
    spec.generators = head;
    if (i <= lat.r) {
        for (auto [u1, u2] : lat.semigroup) {
            spec.generators.push_back(Generator{mono(lat.p * u1 - lat.q * u2, u1, u2), std::nullopt,
                                                "K(" + std::to_string(u1) + "," + std::to_string(u2) + ")"});
        }
    }
    spec.f_presentation = head;
    for (i64 j = 1; j <= lat.b - 1; ++j) {
        spec.f_presentation.push_back(Generator{from_reduced(lat.big_F(j)), std::nullopt, "F" + std::to_string(j)});
    }
    return spec;
}

std::vector<Generator> display_generators(const IdealSpec& spec, const Lattice& lat) {
    std::vector<Generator> out;
    if (spec.family == Family::I1 || spec.family == Family::I0) {
        for (const Generator& g : spec.generators) {
            if (g.role != "X3") out.push_back(g);
        }
        return out;
    }
    return spec.index <= lat.r ? spec.f_presentation : spec.generators;
}

Monomial3 to_reduced(const Monomial5& mon, const std::array<int, 2>& killed) {
    const int third = killed[1] == 3 ? 4 : 3;
    return Monomial3{mon.exp[0], mon.exp[1], mon.exp[third]};
}

std::vector<Relation> reduce_generators(const std::vector<Generator>& gens, const std::array<int, 2>& killed) {
    auto vanishes = [&](const Monomial5& m) { return m.exp[killed[0]] > 0 || m.exp[killed[1]] > 0; };
    std::vector<Relation> out;
    for (const Generator& g : gens) {
        const bool lhs_zero = vanishes(g.lhs);
        const bool rhs_zero = !g.rhs || vanishes(*g.rhs);
        if (lhs_zero && rhs_zero) continue;
        if (lhs_zero) {
            out.push_back(Relation{to_reduced(*g.rhs, killed), std::nullopt});
        } else if (rhs_zero) {
            out.push_back(Relation{to_reduced(g.lhs, killed), std::nullopt});
        } else {
            out.push_back(Relation{to_reduced(g.lhs, killed), to_reduced(*g.rhs, killed)});
        }
    }
    return out;
}

CompiledIdeal compile_ideal(IdealSpec spec) {
    CompiledIdeal out;
    out.system = complete_rewrite_system(reduce_generators(spec.generators, spec.killed));
    if (!spec.f_presentation.empty()) {
        out.f_system = complete_rewrite_system(reduce_generators(spec.f_presentation, spec.killed));
    }
    out.spec = std::move(spec);
    return out;
}

WeightDim weight_space_dim(const RewriteSystem& sys, const Lattice& lat, const WeightLabel& w, i64 c_bound) {
    const i64 start = lat.c_min(w);
    if (c_bound < start) throw Error(Errc::invalid_argument, "c bound below c_min");
    std::set<Monomial3> classes;
    i64 counts[3] = {0, 0, 0};
    i64 c = start;
    for (int level = 0; level < 3; ++level) {
        const i64 top = c_bound + level * lat.m;
        for (; c <= top; c += lat.m) {
            for (const LambdaLabel& lam : lat.fiber(w.n, c)) {
                if (auto nf = sys.normal_form(lat.f_lambda(lam))) classes.insert(*nf);
            }
        }
        counts[level] = static_cast<i64>(classes.size());
    }
    return WeightDim{counts[2], counts[0] == counts[1] && counts[1] == counts[2], c_bound};
}

WeightDim weight_space_dim_auto(const RewriteSystem& sys, const Lattice& lat, const WeightLabel& w, int max_steps) {
    // The least X0-degree over a fiber cycles with period dividing q - p in
    // steps of m, so a shorter window can miss every surviving class.
    const i64 c0 = lat.c_min(w);
    i64 bound = c0 + std::max<i64>(4, lat.qp) * lat.m;
    WeightDim out;
    for (int step = 0; step <= max_steps; ++step, bound += lat.m) {
        out = weight_space_dim(sys, lat, w, bound);
        if (out.stabilized) return out;
    }
    return out;
}

i64 greedy_convergent_sum(i64 n, std::size_t i, const Lattice& lat) {
    i64 rest = n;
    i64 P = 0;
    while (i >= 2 && rest >= lat.ns[i - 1]) {
        std::size_t j = 1;
        while (j < i && !(lat.ns[j] <= rest && rest < lat.ns[j - 1])) ++j;
        if (j >= i) throw Error(Errc::consistency_failure, "greedy step found no n_j");
        P += lat.P[j];
        rest -= lat.ns[j];
    }
    return P;
}

std::vector<MembershipDecision> applicable_rules(const LambdaLabel& lam, std::size_t i, Family family,
                                                 const Lattice& lat) {
    std::vector<MembershipDecision> out;
    if (family != Family::J0 && family != Family::J1) return out;
    if (i < 1 || i > lat.r + 1) return out;
    if (!lat.in_lattice(lam) || lam.c % lat.m != 0 || lam.n < 0 || lam.n >= lat.qp) return out;
    const i64 n = lam.n;
    const i64 x = lam.c / lat.m;
    const i64 Pi = lat.P[i];
    const i64 ni = lat.ns[i];
    const i64 nprev = lat.ns[i - 1];
    const bool minimal = lam.omega == lat.omega_min(n, lam.c);
    auto add = [&](bool in, const char* rule) {
        out.push_back(MembershipDecision{in ? Membership::in : Membership::not_in, rule});
    };
    if (!minimal) add(true, "non-minimal");
    if (family == Family::J0) {
        if (minimal) {
            if (0 < x && x < Pi && n < nprev) add(true, "in-K:below-P_i");
            if (x == Pi && n < ni) add(true, "in-K:at-P_i");
            if (x == Pi && ni <= n) add(true, "eigen-multiple");
            if (x > Pi) add(true, "in-K:beyond-P_i");
        }
        if (n < nprev) {
            add(!(x == 0 && minimal), "survivor:x0-power");
        } else {
            add(!(x == greedy_convergent_sum(n, i, lat) && minimal), "survivor:greedy");
        }
        return out;
    }
    if (!minimal) return out;
    if (x == 0) add(n >= nprev, "x0-power");
    if (x == Pi && ni <= n && n < nprev) add(false, "binomial-class");
    // The remaining cases go through K, which J1(r+1) does not contain.
    if (i > lat.r) return out;
    if (0 < x && x < Pi && n < nprev) add(true, "in-K:below-P_i");
    if (x == Pi && n < ni) add(true, "in-K:at-P_i");
    if (x > Pi && n < ni) add(true, "in-K:below-n_i");
    if (x > Pi && ni <= n && n < nprev) {
        const i64 w0 = lat.omega_min(0, lam.c);
        if (w0 + n < lat.qp) {
            add(true, "in-K:small-omega");
        } else if (x % Pi != 0) {
            add(true, "in-K:off-multiple");
        } else {
            // f = X0^{n'} f_{lambda_c} with f_{lambda_c} = sigma_i g, and
            // sigma_i = X0^{n_i} modulo the binomial: recurse on X0^{n' + n_i} g.
            const Monomial3 f_c = lat.f_lambda(lat.lambda_c(lam.c));
            const Monomial3 eigen = lat.eigen_monomial(i);
            if (!eigen.divides(f_c)) throw Error(Errc::consistency_failure, "sigma_i does not divide f_lambda_c");
            const Monomial3 g = f_c / eigen;
            const LambdaLabel next = lat.mu(Monomial3{n + w0 - lat.qp + ni, 0, 0} * g);
            const MembershipDecision sub = structural_membership(next, i, family, lat);
            if (sub.verdict != Membership::not_applicable) add(sub.verdict == Membership::in, "recurse:multiple");
        }
    }
    return out;
}

MembershipDecision structural_membership(const LambdaLabel& lam, std::size_t i, Family family, const Lattice& lat) {
    auto rules = applicable_rules(lam, i, family, lat);
    if (rules.empty()) return MembershipDecision{Membership::not_applicable, "outside hypotheses"};
    return rules.front();
}

std::vector<IdealSpec> borel_fixed_points(const Lattice& lat) {
    std::vector<IdealSpec> out;
    for (std::size_t i = 1; i <= lat.r + 1; ++i) out.push_back(build_ideal(Family::J0, i, lat));
    return out;
}

std::string borel_defect(const CompiledIdeal& ideal, const Lattice& lat) {
    const IdealSpec& spec = ideal.spec;
    if (spec.family != Family::J0) return "not a J0 ideal";
    auto has_var = [&](int v) {
        for (const Generator& g : spec.generators) {
            if (!g.rhs && g.lhs == var(v)) return true;
        }
        return false;
    };
    if (!has_var(2)) return "X2 missing";
    if (!has_var(4)) return "X4 missing";
    for (const Monomial3& g : lat.invariant_generators()) {
        if (g == Monomial3{} || !ideal.system.reduces_to_zero(g)) return "K generator " + to_string(g) + " not contained";
    }
    for (std::size_t j = 1; j <= lat.r + 1; ++j) {
        const bool power_in = ideal.system.reduces_to_zero(Monomial3{lat.ns[j], 0, 0});
        const bool eigen_in = ideal.system.reduces_to_zero(lat.eigen_monomial(j));
        if (power_in == eigen_in) return "j=" + std::to_string(j) + ": not exactly one of X0^n_j, X1^e_j X3^l_j";
        if (eigen_in != (j >= spec.index)) return "j=" + std::to_string(j) + ": minimal index rule violated";
    }
    return {};
}

}  // namespace popov
