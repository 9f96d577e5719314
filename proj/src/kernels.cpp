#include "popov/kernels.hpp"

#include <optional>

namespace popov {

std::vector<WeightDim> hilbert_profile(const RewriteSystem& sys, const Lattice& lat,
                                       const std::vector<WeightLabel>& weights, Exec exec) {
    std::vector<WeightDim> out(weights.size());
    parallel_for(weights.size(), exec, [&](std::size_t idx) { out[idx] = weight_space_dim_auto(sys, lat, weights[idx]); });
    return out;
}

std::vector<WeightLabel> weight_box(const Lattice& lat, i64 max_weight) {
    std::vector<WeightLabel> out;
    for (i64 n = -max_weight; n <= max_weight; ++n) {
        for (i64 d = 0; d < lat.m; ++d) out.push_back(WeightLabel{n, d});
    }
    return out;
}

MembershipScan membership_scan(const CompiledIdeal& ideal, const Lattice& lat, i64 c_bound, Exec exec) {
    struct Slot {
        std::size_t checked = 0;
        std::size_t applicable = 0;
        std::vector<MembershipMismatch> mismatches;
    };
    const std::size_t levels = static_cast<std::size_t>(c_bound / lat.m) + 1;
    std::vector<Slot> slots(levels);
    parallel_for(levels, exec, [&](std::size_t idx) {
        Slot& slot = slots[idx];
        const i64 c = static_cast<i64>(idx) * lat.m;
        for (i64 n = 0; n < lat.qp; ++n) {
            for (const LambdaLabel& lam : lat.fiber(n, c)) {
                ++slot.checked;
                const auto rules = applicable_rules(lam, ideal.spec.index, ideal.spec.family, lat);
                if (rules.empty()) continue;
                ++slot.applicable;
                const bool in = ideal.system.reduces_to_zero(lat.f_lambda(lam));
                for (const MembershipDecision& rule : rules) {
                    const bool says_in = rule.verdict == Membership::in;
                    if (says_in != in) slot.mismatches.push_back(MembershipMismatch{lam, rule.rule, says_in});
                }
            }
        }
    });
    MembershipScan out;
    for (Slot& s : slots) {
        out.checked += s.checked;
        out.applicable += s.applicable;
        out.mismatches.insert(out.mismatches.end(), s.mismatches.begin(), s.mismatches.end());
    }
    return out;
}

PairScan min_additivity_scan(const Lattice& lat, i64 n_box, i64 c_box, Exec exec) {
    // omega_min over the doubled box, empty where the fiber is.
    const i64 N = 2 * n_box;
    const i64 C = 2 * c_box;
    const i64 width = 2 * C + 1;
    std::vector<std::optional<i64>> table(static_cast<std::size_t>((2 * N + 1) * width));
    auto at = [&](i64 n, i64 c) -> std::optional<i64>& {
        return table[static_cast<std::size_t>((n + N) * width + (c + C))];
    };
    const std::size_t rows = static_cast<std::size_t>(2 * N + 1);
    parallel_for(rows, exec, [&](std::size_t row) {
        const i64 n = static_cast<i64>(row) - N;
        for (i64 c = -C; c <= C; ++c) {
            if (lat.fiber_nonempty(n, c)) at(n, c) = lat.omega_min(n, c);
        }
    });
    struct Slot {
        std::size_t checked = 0;
        std::vector<std::string> failures;
    };
    const std::size_t outer = static_cast<std::size_t>(2 * n_box + 1);
    std::vector<Slot> slots(outer);
    parallel_for(outer, exec, [&](std::size_t idx) {
        Slot& slot = slots[idx];
        const i64 n = static_cast<i64>(idx) - n_box;
        for (i64 c = -c_box; c <= c_box; ++c) {
            const auto w = at(n, c);
            if (!w) continue;
            for (i64 n2 = -n_box; n2 <= n_box; ++n2) {
                for (i64 c2 = -c_box; c2 <= c_box; ++c2) {
                    const auto w2 = at(n2, c2);
                    if (!w2) continue;
                    const auto sum = at(n + n2, c + c2);
                    ++slot.checked;
                    const bool additive = sum && *sum == *w + *w2;
                    const bool predicted = *w + *w2 + n + n2 < lat.qp;
                    if (additive != predicted && slot.failures.size() < 4) {
                        slot.failures.push_back("(" + std::to_string(n) + "," + std::to_string(c) + ")+(" +
                                                std::to_string(n2) + "," + std::to_string(c2) + ")");
                    }
                }
            }
        }
    });
    PairScan out;
    for (Slot& s : slots) {
        out.checked += s.checked;
        out.failures.insert(out.failures.end(), s.failures.begin(), s.failures.end());
    }
    return out;
}

}  // namespace popov
