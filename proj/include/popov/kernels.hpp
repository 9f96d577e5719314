#pragma once

#include <exception>
#include <string>
#include <vector>

#include "popov/ideals.hpp"

namespace popov {

enum class Exec { serial, parallel };

// Runs body(idx) for idx in [0, count). Results must go to per-index slots so
// the outcome does not depend on the schedule. The first exception (lowest
// index) is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t count, Exec exec, Body&& body) {
    if (exec == Exec::serial) {
        for (std::size_t idx = 0; idx < count; ++idx) body(idx);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long idx = 0; idx < n; ++idx) {
        try {
            body(static_cast<std::size_t>(idx));
        } catch (...) {
            errors[static_cast<std::size_t>(idx)] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::vector<WeightDim> hilbert_profile(const RewriteSystem& sys, const Lattice& lat,
                                       const std::vector<WeightLabel>& weights, Exec exec);

// Every weight (n, d) with |n| <= max_weight and 0 <= d < m.
std::vector<WeightLabel> weight_box(const Lattice& lat, i64 max_weight);

struct MembershipMismatch {
    LambdaLabel label;
    std::string rule;
    bool structural_in = false;
};

struct MembershipScan {
    std::size_t checked = 0;
    std::size_t applicable = 0;
    std::vector<MembershipMismatch> mismatches;
};

// Compares every applicable case rule with normal-form membership over labels
// with 0 <= n < q - p, c in mZ, 0 <= c <= c_bound.
MembershipScan membership_scan(const CompiledIdeal& ideal, const Lattice& lat, i64 c_bound, Exec exec);

struct PairScan {
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

// Additivity of the minimal omega over pairs of labels with |n| <= n_box and
// |c| <= c_box whose sum stays in the doubled box.
PairScan min_additivity_scan(const Lattice& lat, i64 n_box, i64 c_box, Exec exec);

}  // namespace popov
