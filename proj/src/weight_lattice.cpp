#include "popov/weight_lattice.hpp"

#include <algorithm>

#include "popov/error.hpp"

namespace popov {

i64 floor_div64(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div64(i64 a, i64 b) { return -floor_div64(-a, b); }

i64 rem64(i64 a, i64 b) {
    if (b <= 0) throw Error(Errc::invalid_argument, "remainder by nonpositive modulus");
    i64 r = a % b;
    return r < 0 ? r + b : r;
}

Monomial3 operator*(const Monomial3& a, const Monomial3& b) {
    return Monomial3{a.d0 + b.d0, a.d1 + b.d1, a.d3 + b.d3};
}

Monomial3 operator/(const Monomial3& a, const Monomial3& b) {
    if (!b.divides(a)) throw Error(Errc::invalid_argument, "monomial quotient is not exact");
    return Monomial3{a.d0 - b.d0, a.d1 - b.d1, a.d3 - b.d3};
}

std::string to_string(const Monomial3& mon, const char* third) {
    std::string out;
    auto put = [&](const char* var, i64 exp) {
        if (exp == 0) return;
        out += var;
        if (exp != 1) out += "^" + std::to_string(exp);
    };
    put("X0", mon.d0);
    put("X1", mon.d1);
    put(third, mon.d3);
    return out.empty() ? "1" : out;
}

LambdaLabel operator+(const LambdaLabel& a, const LambdaLabel& b) {
    return LambdaLabel{a.n + b.n, a.c + b.c, a.omega + b.omega};
}

namespace {

std::vector<i64> narrow(const std::vector<Int>& v) {
    std::vector<i64> out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(to_i64(x));
    return out;
}

}  // namespace

Lattice::Lattice(const PairData& data) {
    if (data.pair.smooth) throw Error(Errc::smooth_case_unsupported, "lattice needs p < q");
    p = to_i64(data.pair.p);
    q = to_i64(data.pair.q);
    m = to_i64(data.pair.m);
    qp = q - p;
    k = to_i64(data.inv.k);
    a = to_i64(data.inv.a);
    b = to_i64(data.inv.b);
    t = to_i64(data.inv.t);
    alpha = to_i64(data.inv.alpha);
    beta = to_i64(data.inv.beta);
    shift = to_i64(data.shift);
    r = data.r();
    coeff.push_back(0);
    for (const Int& ci : data.hj.coeffs) coeff.push_back(to_i64(ci));
    P = narrow(data.hj.P);
    Q = narrow(data.hj.Q);
    tchain = narrow(data.hj.tchain);
    es = narrow(data.seq.e);
    ls = narrow(data.seq.l);
    ns = narrow(data.seq.n);
    semigroup = data.semigroup.gens;
}

LambdaLabel Lattice::mu(const Monomial3& mon) const {
    return LambdaLabel{mon.d0 - p * mon.d1 + q * mon.d3, mon.d1 - mon.d3, p * mon.d1 - q * mon.d3};
}

WeightLabel Lattice::weight(const LambdaLabel& lam) const { return WeightLabel{lam.n, rem64(lam.c, m)}; }

WeightLabel Lattice::weight(const Monomial3& mon) const { return weight(mu(mon)); }

bool Lattice::in_lattice(const LambdaLabel& lam) const {
    if (lam.n + lam.omega < 0) return false;
    const i64 x1 = q * lam.c - lam.omega;
    const i64 x3 = p * lam.c - lam.omega;
    return x1 >= 0 && x3 >= 0 && x1 % qp == 0 && x3 % qp == 0;
}

Monomial3 Lattice::f_lambda(const LambdaLabel& lam) const {
    if (!in_lattice(lam)) {
        throw Error(Errc::not_in_lattice, "(" + std::to_string(lam.n) + "," + std::to_string(lam.c) + "," +
                                              std::to_string(lam.omega) + ")");
    }
    return Monomial3{lam.n + lam.omega, (q * lam.c - lam.omega) / qp, (p * lam.c - lam.omega) / qp};
}

bool Lattice::fiber_nonempty(i64 n, i64 c) const { return n + std::min(p * c, q * c) >= 0; }

namespace {

[[noreturn]] void empty_fiber(i64 n, i64 c) {
    throw Error(Errc::empty_fiber, "(" + std::to_string(n) + "," + std::to_string(c) + ")");
}

}  // namespace

i64 Lattice::omega_max(i64 n, i64 c) const {
    if (!fiber_nonempty(n, c)) empty_fiber(n, c);
    return c < 0 ? q * c : p * c;
}

i64 Lattice::omega_max_enumerated(i64 n, i64 c) const {
    // Walk d3 = s, d1 = c + s, d0 = n + p c - (q - p) s over every admissible s.
    std::optional<i64> best;
    for (i64 s = std::max<i64>(0, -c);; ++s) {
        const i64 d0 = n + p * c - qp * s;
        if (d0 < 0) break;
        const i64 omega = p * (c + s) - q * s;
        best = best ? std::max(*best, omega) : omega;
    }
    if (!best) empty_fiber(n, c);
    return *best;
}

i64 Lattice::omega_min(i64 n, i64 c) const {
    i64 omega = omega_max(n, c);
    while (in_lattice(LambdaLabel{n, c, omega - qp})) omega -= qp;
    return omega;
}

i64 Lattice::omega_min_closed(i64 n, i64 c) const {
    if (!fiber_nonempty(n, c)) empty_fiber(n, c);
    return rem64(p * c + n, qp) - n;
}

std::vector<LambdaLabel> Lattice::fiber(i64 n, i64 c) const {
    std::vector<LambdaLabel> out;
    if (!fiber_nonempty(n, c)) return out;
    const i64 top = omega_max(n, c);
    for (i64 omega = omega_min(n, c); omega <= top; omega += qp) out.push_back(LambdaLabel{n, c, omega});
    return out;
}

i64 Lattice::c_min(const WeightLabel& w) const {
    // Any nonempty fiber has n >= -p c, hence c >= ceil(-n / p).
    i64 c = ceil_div64(-w.n, p);
    c += rem64(w.d - c, m);
    while (!fiber_nonempty(w.n, c)) c += m;
    return c;
}

std::optional<std::size_t> Lattice::theta_anchor(std::size_t i) const {
    if (i <= 1 || i > r + 1) return std::nullopt;
    for (std::size_t j = i - 1; j >= 1; --j) {
        if (coeff[j] > 2) return j;
        if (coeff[j] != 2) return std::nullopt;
    }
    return std::nullopt;
}

i64 Lattice::theta(i64 x, std::size_t i) const {
    if (!theta_anchor(i)) {
        throw Error(Errc::precondition_failure, "remainder function undefined at i=" + std::to_string(i));
    }
    if (x < 0 || x >= theta_range(i)) {
        throw Error(Errc::out_of_range, "x=" + std::to_string(x) + " outside [0, P_i - P_{i-1})");
    }
    return rem64(t * (P[i - 1] + x), b);
}

Monomial3 Lattice::big_F(i64 j) const {
    if (j < 1 || j > b - 1) throw Error(Errc::out_of_range, "F index " + std::to_string(j));
    const i64 c = m * j;
    return f_lambda(LambdaLabel{0, c, omega_min(0, c)});
}

LambdaLabel Lattice::lambda_c(i64 c) const {
    if (c <= 0 || c % m != 0) throw Error(Errc::out_of_range, "c=" + std::to_string(c) + " is not in mZ_{>0}");
    const i64 w = omega_min(0, c);
    return LambdaLabel{qp - w, c, w - qp};
}

std::vector<Monomial3> Lattice::invariant_generators() const {
    std::vector<Monomial3> out;
    for (auto [u1, u2] : semigroup) out.push_back(Monomial3{p * u1 - q * u2, u1, u2});
    return out;
}

GenerationCheck Lattice::check_generation(std::size_t i, i64 c_bound) const {
    if (i > r) throw Error(Errc::out_of_range, "generation index " + std::to_string(i));
    GenerationCheck out;
    const i64 n = ns[i];
    for (const LambdaLabel& lam : fiber(n, 0)) out.module_generators.push_back(f_lambda(lam));
    if (P[i] != 0) {
        for (const LambdaLabel& lam : fiber(n, m * P[i])) out.module_generators.push_back(f_lambda(lam));
    }
    const i64 start = c_min(WeightLabel{n, 0});
    for (i64 c = start; c <= c_bound; c += m) {
        for (const LambdaLabel& lam : fiber(n, c)) {
            ++out.checked;
            const Monomial3 f = f_lambda(lam);
            // The cofactor of a weight-(n, 0) generator inside a
            // weight-(n, 0) monomial has weight (0, 0), so divisibility suffices.
            const bool factored = std::any_of(out.module_generators.begin(), out.module_generators.end(),
                                              [&](const Monomial3& g) { return g.divides(f); });
            if (!factored) {
                out.ok = false;
                out.counterexample = lam;
                return out;
            }
        }
    }
    return out;
}

}  // namespace popov
