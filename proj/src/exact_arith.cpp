#include "popov/exact_arith.hpp"

#include <limits>

#include "popov/error.hpp"

namespace popov {

Int rem(const Int& m1, const Int& m2) {
    if (m2 <= 0) throw Error(Errc::invalid_argument, "rem divisor must be positive");
    Int r = m1 % m2;  // truncating, sign follows m1
    if (r < 0) r += m2;
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw Error(Errc::invalid_argument, "division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b == 0) throw Error(Errc::invalid_argument, "division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

std::int64_t to_i64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(Errc::out_of_range, "value " + v.str() + " exceeds 64-bit range");
    return v.convert_to<std::int64_t>();
}

std::string to_string(const Int& v) { return v.str(); }

HJExpansion hj_expand(const Int& b, const Int& t) {
    if (t <= 0 || t > b || gcd(b, t) != 1)
        throw Error(Errc::invalid_argument,
                    "hj_expand needs 1 <= t <= b with gcd 1, got b=" + b.str() + " t=" + t.str());
    HJExpansion hj;
    hj.b = b;
    hj.t = t;
    hj.tchain = {b};
    if (b == t) {
        // b = t = 1: empty expansion, the degenerate toric case.
        hj.tchain.push_back(0);
    } else {
        hj.tchain.push_back(t);
        while (hj.tchain.back() != 0) {
            const Int& prev = hj.tchain[hj.tchain.size() - 2];
            const Int& cur = hj.tchain.back();
            Int c = ceil_div(prev, cur);
            hj.coeffs.push_back(c);
            hj.tchain.push_back(c * cur - prev);
        }
    }
    const std::size_t r = hj.coeffs.size();
    hj.P = {0, 1};
    hj.Q = {-1, 0};
    for (std::size_t i = 2; i <= r + 1; ++i) {
        hj.P.push_back(hj.c(i - 1) * hj.P[i - 1] - hj.P[i - 2]);
        hj.Q.push_back(hj.c(i - 1) * hj.Q[i - 1] - hj.Q[i - 2]);
    }
    return hj;
}

Rational hj_value(const std::vector<Int>& coeffs) {
    if (coeffs.empty()) throw Error(Errc::invalid_argument, "empty continued fraction");
    Rational v(coeffs.back());
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) v = Rational(coeffs[k]) - Rational(1) / v;
    return v;
}

}  // namespace popov
