#include "popov/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "popov/error.hpp"

namespace popov {

PairAnalysis::PairAnalysis(PairData d) : data(std::move(d)), lat(data) {
    ideals.push_back(compile_ideal(build_ideal(Family::I1, 0, lat)));
    ideals.push_back(compile_ideal(build_ideal(Family::I0, 0, lat)));
    for (std::size_t i = 1; i <= lat.r + 1; ++i) ideals.push_back(compile_ideal(build_ideal(Family::J1, i, lat)));
    for (std::size_t i = 1; i <= lat.r + 1; ++i) ideals.push_back(compile_ideal(build_ideal(Family::J0, i, lat)));
}

CompiledIdeal& PairAnalysis::ideal(Family family, std::size_t i) {
    for (CompiledIdeal& c : ideals) {
        if (c.spec.family == family && c.spec.index == i) return c;
    }
    throw Error(Errc::out_of_range, std::string("no ideal ") + family_name(family) + "(" + std::to_string(i) + ")");
}

const CompiledIdeal& PairAnalysis::ideal(Family family, std::size_t i) const {
    return const_cast<PairAnalysis*>(this)->ideal(family, i);
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool VerifyReport::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
    for (const CheckResult& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

void apply_mutation(PairAnalysis& analysis, const VerifyOptions& opts) {
    if (!opts.drop_k && !opts.drop_f) return;
    CompiledIdeal& target = analysis.ideal(Family::J0, 1);
    IdealSpec spec = target.spec;
    std::vector<Generator>& list = opts.drop_k ? spec.generators : spec.f_presentation;
    const std::string prefix = opts.drop_k ? "K(" : "F";
    std::vector<std::size_t> candidates;
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
        if (list[idx].role.rfind(prefix, 0) == 0) candidates.push_back(idx);
    }
    const std::size_t which = opts.drop_k ? *opts.drop_k : *opts.drop_f;
    if (which < 1 || which > candidates.size()) {
        throw Error(Errc::invalid_argument, "J0(1) has no " + std::string(opts.drop_k ? "K generator " : "F_") +
                                                std::to_string(which));
    }
    list.erase(list.begin() + static_cast<long>(candidates[which - 1]));
    // The mutated presentation drives every check on J0(1).
    if (opts.drop_f) spec.generators = spec.f_presentation;
    target = compile_ideal(std::move(spec));
}

namespace {

class Suite {
public:
    explicit Suite(VerifyReport& report) : report_(report) {}

    // body returns the number of instances checked; fail() records the first
    // counterexample and keeps counting.
    void run(const std::string& name, const std::function<void(CheckResult&)>& body) {
        CheckResult res;
        res.name = name;
        try {
            body(res);
        } catch (const Error& e) {
            if (e.code() == Errc::budget_exceeded) throw;
            res.status = CheckStatus::fail;
            res.detail = e.what();
        }
        report_.checks.push_back(std::move(res));
    }

private:
    VerifyReport& report_;
};

void fail(CheckResult& res, const std::string& detail) {
    if (res.status != CheckStatus::fail) {
        res.status = CheckStatus::fail;
        res.detail = detail;
    }
}

void expect(CheckResult& res, bool cond, const std::string& detail) {
    ++res.checked;
    if (!cond) fail(res, detail);
}

std::string label(const LambdaLabel& l) {
    return "(" + std::to_string(l.n) + "," + std::to_string(l.c) + "," + std::to_string(l.omega) + ")";
}

std::string at(const char* what, i64 v) { return std::string(what) + "=" + std::to_string(v); }

void hj_checks(Suite& s, const PairData& d) {
    const HJExpansion& hj = d.hj;
    const std::size_t last = hj.r() + 1;
    s.run("hj.determinant", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= last; ++i) {
            expect(res, hj.P[i - 1] * hj.Q[i] - hj.P[i] * hj.Q[i - 1] == 1, at("i", static_cast<i64>(i)));
        }
    });
    s.run("hj.reconstruction", [&](CheckResult& res) {
        if (hj.r() == 0) {
            expect(res, hj.b == 1 && hj.t == 1, "empty expansion with b != 1");
            return;
        }
        expect(res, hj_value(hj.coeffs) == Rational(hj.b, hj.t), "continued fraction differs from b/t");
        expect(res, hj.P[last] == hj.b && hj.Q[last] == hj.t, "last convergent differs from b/t");
    });
    s.run("hj.monotone", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= last; ++i) {
            expect(res, hj.P[i - 1] < hj.P[i] && hj.Q[i - 1] < hj.Q[i], at("i", static_cast<i64>(i)));
        }
        for (const Int& c : hj.coeffs) expect(res, c >= 2, "coefficient below 2");
    });
    s.run("hj.remainder-chain", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= hj.r(); ++i) {
            expect(res, hj.tchain[i - 1] == hj.c(i) * hj.tchain[i] - hj.tchain[i + 1], at("i", static_cast<i64>(i)));
            expect(res, hj.tchain[i - 1] > hj.tchain[i], at("strict i", static_cast<i64>(i)));
        }
        if (hj.r() >= 1) expect(res, hj.tchain[hj.r()] == 1, "t_r != 1");
        expect(res, hj.tchain[last] == 0, "t_{r+1} != 0");
    });
}

void sequence_checks(Suite& s, const PairData& d) {
    const auto& inv = d.inv;
    const auto& hj = d.hj;
    const auto& seq = d.seq;
    const std::size_t last = d.r() + 1;
    s.run("seq.ni-closed-form", [&](CheckResult& res) {
        // Toric pairs have b = t = 1 but Q_1 = 0, so the endpoint is excluded.
        const std::size_t top = d.toric ? last - 1 : last;
        for (std::size_t i = 0; i <= top; ++i) {
            expect(res, seq.n[i] == inv.k * (inv.t * hj.P[i] - inv.b * hj.Q[i]), at("i", static_cast<i64>(i)));
        }
    });
    s.run("seq.ni-recursion", [&](CheckResult& res) {
        for (std::size_t i = 2; i <= last; ++i) {
            expect(res, seq.n[i] == hj.c(i - 1) * seq.n[i - 1] - seq.n[i - 2], at("i", static_cast<i64>(i)));
        }
    });
    s.run("seq.ni-chain", [&](CheckResult& res) {
        const Int qp = d.pair.q - d.pair.p;
        expect(res, seq.n[0] == qp, "n_0 != q - p");
        if (d.r() >= 1) expect(res, seq.n[1] == qp - inv.beta, "n_1 != q - p - beta");
        for (std::size_t i = 1; i <= last; ++i) expect(res, seq.n[i - 1] > seq.n[i], at("i", static_cast<i64>(i)));
        expect(res, seq.n[d.r()] == inv.k, "n_r != k");
        expect(res, seq.n[last] == 0, "n_{r+1} != 0");
    });
    s.run("seq.t-ratio", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= d.r(); ++i) {
            expect(res, seq.n[i] == inv.k * hj.tchain[i], at("i", static_cast<i64>(i)));
        }
    });
    s.run("seq.endpoints", [&](CheckResult& res) {
        expect(res, seq.e[last] == inv.a * d.pair.q, "e_{r+1} != aq");
        expect(res, seq.l[last] == inv.a * d.pair.p, "l_{r+1} != ap");
        expect(res, seq.e[0] == 1 && seq.l[0] == 1, "e_0, l_0 != 1");
    });
}

void fan_checks(Suite& s, const PairData& d) {
    const ColoredFan fan = resolution_fan(d);
    const BaseRays br = base_rays(d.inv, d.pair);
    const std::size_t last = d.r() + 1;
    s.run("fan.unimodular", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= last; ++i) {
            expect(res, abs(det(fan.rays[i - 1], fan.rays[i])) == 1, at("cone", static_cast<i64>(i)));
        }
    });
    s.run("fan.singularity-order", [&](CheckResult& res) {
        expect(res, det(br.D_prime, br.D) == d.inv.b, "det(rho_D', rho_D) != b");
    });
    s.run("fan.endpoints", [&](CheckResult& res) {
        expect(res, fan.rays[0] == br.D_prime, "rho_0 != rho_D'");
        expect(res, fan.rays[last] == br.D, "rho_{r+1} != rho_D");
    });
    s.run("fan.refinement", [&](CheckResult& res) {
        // Every ray lies in cone(rho_D', rho_D), which has det(rho_D', rho_D) > 0.
        for (std::size_t i = 0; i <= last; ++i) {
            expect(res, det(br.D_prime, fan.rays[i]) >= 0 && det(fan.rays[i], br.D) >= 0,
                   at("ray", static_cast<i64>(i)));
        }
    });
    s.run("fan.valuation-cone", [&](CheckResult& res) {
        for (std::size_t i = 0; i <= last; ++i) {
            expect(res, in_valuation_cone(fan.rays[i], d.pair), at("ray", static_cast<i64>(i)));
        }
    });
    s.run("fan.primitive", [&](CheckResult& res) {
        for (std::size_t i = 0; i <= last; ++i) {
            expect(res, gcd(fan.rays[i].x1, fan.rays[i].x2) == 1, at("ray", static_cast<i64>(i)));
        }
    });
    s.run("fan.valid", [&](CheckResult& res) {
        const EmbeddingFans ef = embedding_fans(d.inv, d.pair);
        for (const ColoredFan* f : {&ef.E, &ef.E_minus, &ef.E_plus, &ef.E_prime, &fan}) {
            const std::string defect = fan_defect(*f, d.pair);
            expect(res, defect.empty(), f->name + ": " + defect);
        }
        const OrbitPoset poset = orbit_poset(fan);
        expect(res, poset.closed_orbits().size() == last, "closed orbit count != r + 1");
    });
    s.run("pairing.sign-pattern", [&](CheckResult& res) {
        for (std::size_t j = 0; j <= last; ++j) {
            for (std::size_t i = 0; i <= last; ++i) {
                const Int v = valuation_pairing(d, j, sigma(d, i));
                const std::string where = "j=" + std::to_string(j) + ", i=" + std::to_string(i);
                expect(res, v == d.hj.P[j] * d.hj.Q[i] - d.hj.P[i] * d.hj.Q[j], where + " formula");
                const int sign = v > 0 ? 1 : v < 0 ? -1 : 0;
                const int want = i > j ? 1 : i < j ? -1 : 0;
                expect(res, sign == want, where + " sign");
                if (i == j + 1) expect(res, v == 1, where + " adjacent value");
            }
        }
    });
    s.run("global-generation", [&](CheckResult& res) {
        const GlobalGeneration gg = check_global_generation(d);
        res.checked = gg.checked;
        if (!gg.ok) fail(res, gg.failures.front());
    });
}

void semigroup_checks(Suite& s, const PairData& d, const Lattice& lat) {
    s.run("semigroup.minimality", [&](CheckResult& res) {
        const auto& gens = d.semigroup.gens;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            expect(res, in_semigroup(lat.p, lat.q, lat.m, gens[g]), "generator outside M+");
            // Reachability of gens[g] from the others by a DP over the box below it.
            const auto [I, J] = gens[g];
            std::vector<std::vector<char>> reach(static_cast<std::size_t>(I + 1),
                                                 std::vector<char>(static_cast<std::size_t>(J + 1), 0));
            reach[0][0] = 1;
            for (i64 i = 0; i <= I; ++i) {
                for (i64 j = 0; j <= J; ++j) {
                    if (!reach[i][j]) continue;
                    for (std::size_t h = 0; h < gens.size(); ++h) {
                        if (h == g) continue;
                        const i64 ni = i + gens[h].first;
                        const i64 nj = j + gens[h].second;
                        if (ni <= I && nj <= J) reach[ni][nj] = 1;
                    }
                }
            }
            expect(res, !reach[I][J], "(" + std::to_string(I) + "," + std::to_string(J) + ") is redundant");
        }
    });
}

void lattice_checks(Suite& s, const Lattice& lat, i64 N, i64 C, Exec exec) {
    s.run("lattice.omega-max", [&](CheckResult& res) {
        for (i64 n = -N; n <= N; ++n) {
            for (i64 c = -C; c <= C; ++c) {
                if (!lat.fiber_nonempty(n, c)) continue;
                expect(res, lat.omega_max(n, c) == lat.omega_max_enumerated(n, c),
                       "(" + std::to_string(n) + "," + std::to_string(c) + ")");
            }
        }
    });
    s.run("lattice.min-biconditional", [&](CheckResult& res) {
        for (i64 n = -N; n <= N; ++n) {
            for (i64 c = -C; c <= C; ++c) {
                if (!lat.fiber_nonempty(n, c)) continue;
                const i64 wmin = lat.omega_min(n, c);
                for (const LambdaLabel& lam : lat.fiber(n, c)) {
                    expect(res, (lam.omega == wmin) == (lam.n + lam.omega < lat.qp), label(lam));
                }
            }
        }
    });
    s.run("lattice.closed-form", [&](CheckResult& res) {
        for (i64 n = -N; n <= N; ++n) {
            for (i64 c = -C; c <= C; ++c) {
                if (!lat.fiber_nonempty(n, c)) continue;
                expect(res, lat.omega_min(n, c) == lat.omega_min_closed(n, c),
                       "(" + std::to_string(n) + "," + std::to_string(c) + ")");
            }
        }
    });
    s.run("lattice.c-min", [&](CheckResult& res) {
        for (i64 n = 0; n <= lat.qp; ++n) expect(res, lat.c_min(WeightLabel{n, 0}) == 0, at("n", n));
        for (i64 n = -N; n <= N; ++n) {
            for (i64 dd = 0; dd < lat.m; ++dd) {
                const i64 c = lat.c_min(WeightLabel{n, dd});
                expect(res, lat.fiber_nonempty(n, c) && !lat.fiber_nonempty(n, c - lat.m),
                       "(" + std::to_string(n) + "," + std::to_string(dd) + ")");
            }
        }
    });
    s.run("lattice.min-additivity", [&](CheckResult& res) {
        const PairScan scan = min_additivity_scan(lat, lat.qp, 2 * lat.m, exec);
        res.checked = scan.checked;
        if (!scan.failures.empty()) fail(res, scan.failures.front());
    });
    s.run("lattice.min-range", [&](CheckResult& res) {
        for (i64 c = -C; c <= C; ++c) {
            if (!lat.fiber_nonempty(0, c)) continue;
            const i64 w = lat.omega_min(0, c);
            expect(res, 0 <= w && w < lat.qp, at("c", c));
        }
    });
    s.run("lattice.min-shift", [&](CheckResult& res) {
        for (i64 n = 0; n < lat.qp; ++n) {
            for (i64 c = 0; c <= C; ++c) {
                const i64 w0 = lat.omega_min(0, c);
                const i64 wn = lat.omega_min(n, c);
                const std::string where = "(" + std::to_string(n) + "," + std::to_string(c) + ")";
                expect(res, (w0 + n < lat.qp) == (w0 == wn), where + " (i)");
                expect(res, (w0 + n >= lat.qp) == (w0 == wn + lat.qp), where + " (ii)");
                if (n == 0) {
                    const i64 next = lat.omega_min(0, c + lat.m);
                    expect(res, (w0 >= lat.qp - lat.beta) == (next == w0 - lat.qp + lat.beta), where + " (iii)");
                    expect(res, (w0 < lat.qp - lat.beta) == (next == w0 + lat.beta), where + " (iv)");
                }
            }
        }
    });
    s.run("lattice.multiplicativity", [&](CheckResult& res) {
        std::vector<LambdaLabel> labels;
        for (i64 n = -lat.qp; n <= lat.qp; ++n) {
            for (i64 c = -lat.m; c <= lat.m; ++c) {
                for (const LambdaLabel& lam : lat.fiber(n, c)) labels.push_back(lam);
            }
        }
        for (const LambdaLabel& x : labels) {
            expect(res, lat.mu(lat.f_lambda(x)) == x, label(x) + " round trip");
            for (const LambdaLabel& y : labels) {
                expect(res, lat.f_lambda(x) * lat.f_lambda(y) == lat.f_lambda(x + y), label(x) + "+" + label(y));
            }
        }
    });
}

void residue_checks(Suite& s, const Lattice& lat) {
    const std::size_t last = lat.r + 1;
    s.run("residue.upper-bound", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= last; ++i) {
            for (i64 x = 1; x < lat.P[i]; ++x) {
                expect(res, rem64(lat.t * x, lat.b) <= lat.b + lat.tchain[i] - lat.tchain[i - 1],
                       "i=" + std::to_string(i) + ", x=" + std::to_string(x));
            }
        }
    });
    s.run("residue.lower-bound", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= last; ++i) {
            expect(res, rem64(lat.t * lat.P[i], lat.b) == lat.tchain[i], at("i", static_cast<i64>(i)));
            for (i64 x = 1; x < lat.P[i]; ++x) {
                expect(res, rem64(lat.t * x, lat.b) >= lat.tchain[i - 1],
                       "i=" + std::to_string(i) + ", x=" + std::to_string(x));
            }
        }
    });
    s.run("residue.shift", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= last; ++i) {
            for (i64 x = 1; x < lat.P[i]; ++x) {
                const i64 pmx = lat.p * lat.m * x;
                expect(res, rem64(pmx + lat.ns[i], lat.qp) == lat.ns[i] + rem64(pmx, lat.qp),
                       "i=" + std::to_string(i) + ", x=" + std::to_string(x));
            }
        }
    });
    s.run("lattice.min-bounds", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= last; ++i) {
            for (i64 x = 1; x < lat.P[i]; ++x) {
                const i64 w = lat.omega_min(0, lat.m * x);
                expect(res, lat.ns[i - 1] - lat.ns[i] <= w && w <= lat.qp - lat.ns[i - 1],
                       "i=" + std::to_string(i) + ", x=" + std::to_string(x));
            }
        }
    });
}

void theta_checks(Suite& s, const Lattice& lat, VerifyReport& report) {
    std::vector<std::size_t> defined;
    for (std::size_t i = 1; i <= lat.r + 1; ++i) {
        if (lat.theta_anchor(i)) {
            defined.push_back(i);
        } else {
            report.theta_skipped.push_back(i);
        }
    }
    auto guarded = [&](const std::string& name, const std::function<void(CheckResult&, std::size_t, std::size_t)>& body) {
        s.run(name, [&](CheckResult& res) {
            for (std::size_t i : defined) body(res, i, *lat.theta_anchor(i));
            if (defined.empty()) {
                res.status = CheckStatus::skipped;
                res.detail = "no index has a defined remainder function";
            }
        });
    };
    auto where = [](std::size_t i, i64 x) { return "i=" + std::to_string(i) + ", x=" + std::to_string(x); };
    guarded("theta.basics", [&](CheckResult& res, std::size_t i, std::size_t l) {
        const i64 range = lat.theta_range(i);
        expect(res, lat.theta(0, i) == lat.tchain[i - 1], where(i, 0) + " (iii)");
        i64 expansion = (lat.coeff[1] - 1) * lat.P[1];
        for (std::size_t j = 2; j <= l; ++j) expansion += (lat.coeff[j] - 2) * lat.P[j];
        expect(res, range == lat.P[l + 1] - lat.P[l] && range == expansion, "i=" + std::to_string(i) + " (iv)");
        std::set<i64> seen;
        for (i64 x = 0; x < range; ++x) {
            const i64 th = lat.theta(x, i);
            const i64 quotient = floor_div64(lat.t * (lat.P[i - 1] + x), lat.b) - lat.Q[i - 1];
            expect(res, th == lat.tchain[i - 1] + lat.t * x - lat.b * quotient, where(i, x) + " quotient form");
            expect(res, seen.insert(th).second, where(i, x) + " (ii)");
            if (x == 0) continue;
            const i64 prev = lat.theta(x - 1, i);
            const i64 prev_quotient = floor_div64(lat.t * (lat.P[i - 1] + x - 1), lat.b) - lat.Q[i - 1];
            if (prev + lat.t - lat.b < 0) {
                expect(res, quotient == prev_quotient && th == prev + lat.t, where(i, x) + " (i) carry 0");
            } else {
                expect(res, quotient == prev_quotient + 1 && th == prev + lat.t - lat.b, where(i, x) + " (i) carry 1");
            }
        }
    });
    guarded("theta.minimum", [&](CheckResult& res, std::size_t i, std::size_t) {
        for (i64 x = 0; x < lat.theta_range(i); ++x) {
            const i64 th = lat.theta(x, i);
            expect(res, th >= lat.tchain[i - 1] && ((th == lat.tchain[i - 1]) == (x == 0)), where(i, x));
        }
    });
    guarded("theta.periodic", [&](CheckResult& res, std::size_t i, std::size_t l) {
        for (std::size_t j = 1; j < l; ++j) {
            for (i64 x = lat.P[j]; x < lat.P[j + 1]; ++x) {
                const i64 th = lat.theta(x, i);
                expect(res, th == lat.theta(x % lat.P[j], i) + (x / lat.P[j]) * lat.tchain[j] && th > lat.tchain[i - 1],
                       where(i, x) + ", j=" + std::to_string(j));
            }
        }
    });
    guarded("theta.maxima", [&](CheckResult& res, std::size_t i, std::size_t l) {
        for (std::size_t j = 1; j < l; ++j) {
            i64 best = 0;
            for (i64 x = 0; x < lat.P[j + 1]; ++x) best = std::max(best, lat.theta(x, i));
            const i64 at_gap = lat.theta(lat.P[j + 1] - lat.P[j], i);
            const i64 formula = lat.tchain[i - 1] + lat.b - lat.tchain[j] + lat.tchain[j + 1];
            expect(res, best == at_gap && at_gap == formula, "i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }
    });
    guarded("theta.anchor-periodic", [&](CheckResult& res, std::size_t i, std::size_t l) {
        for (i64 x = lat.P[l]; x < lat.theta_range(i); ++x) {
            const i64 th = lat.theta(x, i);
            expect(res, th == lat.theta(x % lat.P[l], i) + (x / lat.P[l]) * lat.tchain[l] && th > lat.tchain[i - 1],
                   where(i, x));
        }
    });
}

void generation_checks(Suite& s, const Lattice& lat, i64 C) {
    s.run("lattice.lowest-labels", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= lat.r; ++i) {
            const LambdaLabel lam = lat.lambda_c(lat.m * lat.P[i]);
            expect(res, lam == LambdaLabel{lat.ns[i], lat.m * lat.P[i], -lat.ns[i]}, at("lambda_mP_i, i", static_cast<i64>(i)));
            expect(res, lat.f_lambda(lam) == lat.eigen_monomial(i), at("f_lambda_mP_i, i", static_cast<i64>(i)));
        }
        for (i64 c = lat.m; c <= C; c += lat.m) {
            const Monomial3 f = lat.f_lambda(lat.lambda_c(c));
            expect(res, f.d0 == 0, at("X0-free, c", c));
            for (i64 c2 = c; c2 <= C; c2 += lat.m) {
                expect(res, f.divides(lat.f_lambda(lat.lambda_c(c2))), at("divisibility, c", c) + at(" c'", c2));
            }
        }
        for (i64 j = 1; j < lat.b; ++j) expect(res, lat.big_F(j).d0 >= 1, at("F X0-degree, j", j));
    });
    s.run("generation", [&](CheckResult& res) {
        for (std::size_t i = 0; i <= lat.r; ++i) {
            const GenerationCheck g = lat.check_generation(i, C);
            res.checked += g.checked;
            if (!g.ok) fail(res, "i=" + std::to_string(i) + " " + label(*g.counterexample));
        }
    });
}

void ideal_checks(Suite& s, const PairAnalysis& an, i64 N, i64 C, const VerifyOptions& opts) {
    const Lattice& lat = an.lat;
    s.run("ideals.presentations-equal", [&](CheckResult& res) {
        for (const CompiledIdeal& ci : an.ideals) {
            if (ci.spec.f_presentation.empty()) continue;
            for (const Relation& rel : reduce_generators(ci.spec.f_presentation, ci.spec.killed)) {
                expect(res, ci.system.same_class(rel.lhs, rel.rhs), ci.spec.name() + ": F side not in K side");
            }
            for (const Relation& rel : reduce_generators(ci.spec.generators, ci.spec.killed)) {
                expect(res, ci.f_system.same_class(rel.lhs, rel.rhs), ci.spec.name() + ": K side not in F side");
            }
        }
    });
    s.run("ideals.confluent", [&](CheckResult& res) {
        for (const CompiledIdeal& ci : an.ideals) {
            expect(res, ci.system.locally_confluent(), ci.spec.name());
            for (const Relation& rel : reduce_generators(ci.spec.generators, ci.spec.killed)) {
                expect(res, ci.system.same_class(rel.lhs, rel.rhs), ci.spec.name() + ": generator not reduced to zero");
            }
        }
    });
    s.run("ideals.homogeneous", [&](CheckResult& res) {
        for (const CompiledIdeal& ci : an.ideals) {
            for (const Rule& rule : ci.system.rules()) {
                if (rule.rhs) expect(res, lat.weight(rule.lhs) == lat.weight(*rule.rhs), ci.spec.name() + " " + to_string(rule.lhs));
            }
            for (const Generator& g : ci.spec.generators) {
                if (!g.rhs) continue;
                const Monomial3 x = to_reduced(g.lhs, ci.spec.killed);
                const Monomial3 y = to_reduced(*g.rhs, ci.spec.killed);
                expect(res, lat.weight(x) == lat.weight(y), ci.spec.name() + " " + to_string(g));
            }
        }
    });
    s.run("ideals.hilbert", [&](CheckResult& res) {
        if (!opts.hilbert) {
            res.status = CheckStatus::skipped;
            res.detail = "disabled";
            return;
        }
        const auto weights = weight_box(lat, N);
        for (const CompiledIdeal& ci : an.ideals) {
            const auto dims = hilbert_profile(ci.system, lat, weights, opts.exec);
            for (std::size_t w = 0; w < weights.size(); ++w) {
                expect(res, dims[w].dim == 1 && dims[w].stabilized,
                       ci.spec.name() + " weight (" + std::to_string(weights[w].n) + "," + std::to_string(weights[w].d) +
                           "): dim " + std::to_string(dims[w].dim) + (dims[w].stabilized ? "" : " unstabilized"));
            }
        }
    });
    s.run("ideals.structural", [&](CheckResult& res) {
        for (const CompiledIdeal& ci : an.ideals) {
            if (ci.spec.family != Family::J0 && ci.spec.family != Family::J1) continue;
            const MembershipScan scan = membership_scan(ci, lat, C, opts.exec);
            res.checked += scan.applicable;
            if (!scan.mismatches.empty()) {
                const auto& mm = scan.mismatches.front();
                fail(res, ci.spec.name() + " " + label(mm.label) + " rule " + mm.rule);
            }
        }
    });
    s.run("ideals.descending-chain", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= lat.r + 1; ++i) {
            const CompiledIdeal& ci = an.ideal(Family::J0, i);
            expect(res, ci.system.reduces_to_zero(Monomial3{lat.ns[i - 1], 0, 0}), at("X0^n_{i-1} missing, i", static_cast<i64>(i)));
            for (i64 n = 0; n < lat.ns[i - 1]; ++n) {
                expect(res, !ci.system.reduces_to_zero(Monomial3{n, 0, 0}), at("i", static_cast<i64>(i)) + at(" n", n));
            }
        }
    });
    s.run("ideals.contain-k", [&](CheckResult& res) {
        for (const CompiledIdeal& ci : an.ideals) {
            // J1(r+1) identifies X1^{aq} X3^{ap} with 1, so it excludes K.
            const bool holds = ci.spec.family == Family::J0 || (ci.spec.family == Family::J1 && ci.spec.index <= lat.r);
            if (!holds) continue;
            for (const Monomial3& g : lat.invariant_generators()) {
                expect(res, ci.system.reduces_to_zero(g), ci.spec.name() + " " + to_string(g));
            }
        }
    });
    s.run("borel.count", [&](CheckResult& res) {
        expect(res, borel_fixed_points(lat).size() == lat.r + 1, "fixed point count != r + 1");
    });
    s.run("borel.predicate", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= lat.r + 1; ++i) {
            const std::string defect = borel_defect(an.ideal(Family::J0, i), lat);
            expect(res, defect.empty(), "J0(" + std::to_string(i) + "): " + defect);
        }
    });
    s.run("tangent", [&](CheckResult& res) {
        for (std::size_t i = 1; i <= lat.r + 1; ++i) {
            const std::size_t dim = tangent_dimension(i, lat, an.ideal(Family::J0, i));
            expect(res, dim == 3, at("i", static_cast<i64>(i)) + ": dimension " + std::to_string(dim));
        }
    });
}

}  // namespace

VerifyReport verify(PairAnalysis& an, const VerifyOptions& opts) {
    apply_mutation(an, opts);
    VerifyReport report;
    const Lattice& lat = an.lat;
    report.max_weight = opts.max_weight.value_or(2 * lat.qp);
    report.c_bound = opts.c_bound.value_or(lat.m * (lat.P[lat.r + 1] + 2));
    if (report.max_weight < 0 || report.c_bound < 0) throw Error(Errc::invalid_argument, "negative bound");
    Suite s(report);
    hj_checks(s, an.data);
    sequence_checks(s, an.data);
    fan_checks(s, an.data);
    semigroup_checks(s, an.data, lat);
    lattice_checks(s, lat, report.max_weight, report.c_bound, opts.exec);
    residue_checks(s, lat);
    theta_checks(s, lat, report);
    generation_checks(s, lat, report.c_bound);
    ideal_checks(s, an, report.max_weight, report.c_bound, opts);
    return report;
}

}  // namespace popov
