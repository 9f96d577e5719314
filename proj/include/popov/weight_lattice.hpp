#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "popov/invariants.hpp"

namespace popov {

using i64 = std::int64_t;

// Exponents of X0, X1 and the third variable (X3, or X4 for the I family).
struct Monomial3 {
    i64 d0 = 0;
    i64 d1 = 0;
    i64 d3 = 0;
    auto operator<=>(const Monomial3&) const = default;
    i64 degree() const { return d0 + d1 + d3; }
    bool divides(const Monomial3& o) const { return d0 <= o.d0 && d1 <= o.d1 && d3 <= o.d3; }
};

Monomial3 operator*(const Monomial3& a, const Monomial3& b);
Monomial3 operator/(const Monomial3& a, const Monomial3& b);  // requires b | a
std::string to_string(const Monomial3& mon, const char* third = "X3");

struct LambdaLabel {
    i64 n = 0;
    i64 c = 0;
    i64 omega = 0;
    auto operator<=>(const LambdaLabel&) const = default;
};

LambdaLabel operator+(const LambdaLabel& a, const LambdaLabel& b);

struct WeightLabel {
    i64 n = 0;
    i64 d = 0;  // residue in [0, m)
    auto operator<=>(const WeightLabel&) const = default;
};

struct GenerationCheck {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<LambdaLabel> counterexample;
    std::vector<Monomial3> module_generators;
};

/// Machine-integer view of one pair for the label machinery. Built once from
/// the exact data; construction fails with out-of-range if anything overflows.
class Lattice {
public:
    explicit Lattice(const PairData& data);

    i64 p, q, m, qp, k, a, b, t, alpha, beta, shift;
    std::size_t r;
    std::vector<i64> coeff;  // c_1..c_r at indices 1..r, index 0 unused
    std::vector<i64> P, Q, tchain, es, ls, ns;

    LambdaLabel mu(const Monomial3& mon) const;
    WeightLabel weight(const Monomial3& mon) const;
    WeightLabel weight(const LambdaLabel& lam) const;
    bool in_lattice(const LambdaLabel& lam) const;
    Monomial3 f_lambda(const LambdaLabel& lam) const;

    bool fiber_nonempty(i64 n, i64 c) const;
    i64 omega_max(i64 n, i64 c) const;
    i64 omega_max_enumerated(i64 n, i64 c) const;
    i64 omega_min(i64 n, i64 c) const;
    i64 omega_min_closed(i64 n, i64 c) const;
    std::vector<LambdaLabel> fiber(i64 n, i64 c) const;  // increasing omega

    i64 c_min(const WeightLabel& w) const;

    // Largest l <= i - 1 with c_l > 2 when every later c up to c_{i-1} is 2.
    std::optional<std::size_t> theta_anchor(std::size_t i) const;
    i64 theta(i64 x, std::size_t i) const;
    i64 theta_range(std::size_t i) const { return P[i] - P[i - 1]; }

    Monomial3 big_F(i64 j) const;
    LambdaLabel lambda_c(i64 c) const;

    GenerationCheck check_generation(std::size_t i, i64 c_bound) const;

    // Minimal semigroup generators and the invariant monomials they give.
    std::vector<Point2> semigroup;
    std::vector<Monomial3> invariant_generators() const;
    Monomial3 eigen_monomial(std::size_t i) const { return Monomial3{0, es[i], ls[i]}; }
};

i64 rem64(i64 a, i64 b);
i64 floor_div64(i64 a, i64 b);
i64 ceil_div64(i64 a, i64 b);

}  // namespace popov
