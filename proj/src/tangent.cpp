#include "popov/tangent.hpp"

#include <map>

#include "popov/error.hpp"

namespace popov {

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

namespace {

struct Term {
    std::size_t unknown;
    Rational coeff;
    Monomial3 mon;
};

[[noreturn]] void inconsistent(std::size_t i, const std::string& what) {
    throw Error(Errc::consistency_failure, "tangent system at i=" + std::to_string(i) + ": " + what);
}

}  // namespace

TangentSystem tangent_system(std::size_t i, const Lattice& lat, const CompiledIdeal& ideal) {
    if (i < 1 || i > lat.r + 1) throw Error(Errc::out_of_range, "tangent index " + std::to_string(i));
    if (ideal.spec.family != Family::J0 || ideal.spec.index != i) inconsistent(i, "ideal is not J0(i)");
    const RewriteSystem& sys = ideal.f_system;
    auto in_J = [&](const Monomial3& mon) { return sys.reduces_to_zero(mon); };
    auto require = [&](bool cond, const std::string& what) {
        if (!cond) inconsistent(i, what);
    };

    TangentSystem out;
    out.index = i;
    out.unknowns = {"a1", "a2", "a3", "a4"};
    for (i64 j = 1; j <= lat.b - 1; ++j) out.unknowns.push_back("b" + std::to_string(j));
    const std::size_t a1 = 0, a2 = 1, a3 = 2, a4 = 3;
    auto beta = [](i64 j) { return static_cast<std::size_t>(3 + j); };

    const Monomial3 x1x3{0, 1, 1};
    const Monomial3 eigen_i = lat.eigen_monomial(i);
    const Monomial3 eigen_prev = lat.eigen_monomial(i - 1);
    const Monomial3 power_i{lat.ns[i], 0, 0};
    require(!in_J(x1x3), "X1X3 lies in the ideal");
    require(!in_J(Monomial3{0, 1, 0}), "X1 lies in the ideal");
    require(!in_J(Monomial3{0, 0, 1}), "X3 lies in the ideal");
    require(!in_J(Monomial3{}), "1 lies in the ideal");
    require(!in_J(power_i), "X0^n_i lies in the ideal");
    require(!in_J(eigen_prev), "X1^e_{i-1} X3^l_{i-1} lies in the ideal");

    std::vector<std::vector<Term>> relations;
    // phi(X0^{q-p} - X1 X4 + X2 X3) with phi(X0^{n_{i-1}}) = a1 sigma_{i-1},
    // phi(X2) = a2 X1, phi(X4) = a3 X3.
    const Monomial3 lifted{lat.qp - lat.ns[i - 1], eigen_prev.d1, eigen_prev.d3};
    if (i > 1) {
        require(lifted == x1x3 * lat.big_F(lat.P[i - 1]), "hypersurface term is not X1X3 F_{P_{i-1}}");
        require(in_J(lifted), "hypersurface term survives for i > 1");
    }
    relations.push_back({{a1, 1, lifted}, {a3, -1, x1x3}, {a2, 1, x1x3}});

    for (i64 j = 1; j <= lat.b - 1; ++j) {
        const Monomial3 F = lat.big_F(j);
        const i64 omega = F.d0;
        const i64 d1 = F.d1;
        const i64 d3 = F.d3;
        if (j > lat.P[i]) {
            require(d1 + 1 >= eigen_i.d1 && d3 + 1 >= eigen_i.d3, "exponent bound for j > P_i");
            const Monomial3 f{omega, d1 + 1 - eigen_i.d1, d3 + 1 - eigen_i.d3};
            require(x1x3 * F == eigen_i * f, "relation for j > P_i is not an identity");
            const Monomial3 image = power_i * f;
            require(in_J(image), "X0^n_i f survives for j > P_i");
            relations.push_back({{beta(j), 1, x1x3}, {a4, -1, image}});
        } else if (j == lat.P[i]) {
            require(F == Monomial3{lat.qp - lat.ns[i], eigen_i.d1 - 1, eigen_i.d3 - 1}, "F_{P_i} shape");
            const Monomial3 image{lat.qp, 0, 0};
            require(in_J(image), "X0^{q-p} survives");
            relations.push_back({{beta(j), 1, x1x3}, {a4, -1, image}});
        } else {
            require(d1 < eigen_i.d1 && d3 < eigen_i.d3, "exponent bound for j < P_i");
            const i64 n = omega + lat.ns[i];
            const i64 c = lat.m * (lat.P[i] - j);
            const Monomial3 cofactor{0, eigen_i.d1 - d1, eigen_i.d3 - d3};
            require(cofactor == lat.f_lambda(lat.lambda_c(c)), "cofactor is not f_{lambda_c}");
            require(cofactor * F == Monomial3{omega, 0, 0} * eigen_i, "relation for j < P_i is not an identity");
            const Monomial3 image{n, 0, 0};
            require(lat.ns[i - 1] <= n && n < lat.qp, "X0 exponent outside [n_{i-1}, q-p)");
            require(in_J(image), "X0^n survives for j < P_i");
            require(!in_J(cofactor), "f_{lambda_c} lies in the ideal");
            relations.push_back({{beta(j), 1, cofactor}, {a4, -1, image}});
        }
    }

    for (const auto& rel : relations) {
        std::map<Monomial3, std::vector<Rational>> groups;
        for (const Term& term : rel) {
            auto nf = sys.normal_form(term.mon);
            if (!nf) continue;
            auto& row = groups[*nf];
            row.resize(out.unknowns.size());
            row[term.unknown] += term.coeff;
        }
        for (auto& [mon, row] : groups) {
            bool nonzero = false;
            for (const Rational& v : row) nonzero = nonzero || v != 0;
            if (nonzero) out.equations.push_back(row);
        }
    }
    out.rank = rational_rank(out.equations);
    out.dimension = out.unknowns.size() - out.rank;
    return out;
}

std::size_t tangent_dimension(std::size_t i, const Lattice& lat, const CompiledIdeal& ideal) {
    return tangent_system(i, lat, ideal).dimension;
}

}  // namespace popov
