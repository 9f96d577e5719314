#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace popov {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Nonnegative remainder of m1 by m2 (m2 > 0), whatever the sign of m1.
Int rem(const Int& m1, const Int& m2);
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

// Narrowing used at the boundary to the machine-integer engines; throws
// out-of-range instead of wrapping.
std::int64_t to_i64(const Int& v);

std::string to_string(const Int& v);

/// Minus-sign continued fraction b/t = c_1 - 1/(c_2 - ... - 1/c_r) together
/// with the convergent sequences P_0..P_{r+1}, Q_0..Q_{r+1} and the
/// remainder chain t_0 = b, t_1 = t, ..., t_{r+1} = 0.
struct HJExpansion {
    Int b;
    Int t;
    std::vector<Int> coeffs;  // c_1..c_r, stored 0-based
    std::vector<Int> P;
    std::vector<Int> Q;
    std::vector<Int> tchain;

    std::size_t r() const { return coeffs.size(); }
    // 1-based access to c_i as written in formulas.
    const Int& c(std::size_t i) const { return coeffs.at(i - 1); }
};

HJExpansion hj_expand(const Int& b, const Int& t);

// Folds c_1 - 1/(c_2 - ...) back into an exact rational.
Rational hj_value(const std::vector<Int>& coeffs);

}  // namespace popov
