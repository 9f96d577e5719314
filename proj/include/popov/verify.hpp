#pragma once

#include <optional>
#include <string>
#include <vector>

#include "popov/colored_fan.hpp"
#include "popov/kernels.hpp"
#include "popov/tangent.hpp"

namespace popov {

/// Everything computed for one non-smooth pair.
struct PairAnalysis {
    PairData data;
    Lattice lat;
    std::vector<CompiledIdeal> ideals;  // I1, I0, then J1(i), J0(i) for i = 1..r+1

    explicit PairAnalysis(PairData d);
    const CompiledIdeal& ideal(Family family, std::size_t i = 0) const;
    CompiledIdeal& ideal(Family family, std::size_t i = 0);
};

enum class CheckStatus { pass, fail, skipped };
const char* status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::size_t checked = 0;
    std::string detail;  // counterexample on failure, reason when skipped
};

struct VerifyOptions {
    std::optional<i64> max_weight;  // default 2 (q - p)
    std::optional<i64> c_bound;     // default m (P_{r+1} + 2)
    std::optional<std::size_t> drop_k;  // 1-based K generator removed from J0(1)
    std::optional<std::size_t> drop_f;  // F_j removed from J0(1)
    bool hilbert = true;
    Exec exec = Exec::parallel;
};

struct VerifyReport {
    i64 max_weight = 0;
    i64 c_bound = 0;
    std::vector<CheckResult> checks;
    std::vector<std::size_t> theta_skipped;
    bool ok() const;
    const CheckResult* find(const std::string& name) const;
};

// Replaces J0(1) by the presentation with one K generator or one F_j removed.
void apply_mutation(PairAnalysis& analysis, const VerifyOptions& opts);

// Applies the mutation in opts, if any, before checking.

VerifyReport verify(PairAnalysis& analysis, const VerifyOptions& opts = {});

}  // namespace popov
