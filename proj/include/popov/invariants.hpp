#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "popov/exact_arith.hpp"

namespace popov {

struct PopovPair {
    Int p;
    Int q;
    Int m;
    bool smooth = false;  // p == q, height 1
};

PopovPair validate_pair(const Int& p, const Int& q, const Int& m);

struct DerivedInvariants {
    Int k;      // gcd(m, q - p)
    Int a;      // m / k
    Int b;      // (q - p) / k
    Int alpha;  // m p = alpha (q - p) + beta
    Int beta;   // 0 <= beta < q - p
    Int t;      // (q - p - beta) / k
};

DerivedInvariants derive_invariants(const PopovPair& pair);
bool is_toric(const PopovPair& pair);

// Coefficient of P_i in the second coordinate of the resolution rays and in
// the exponents e_i, l_i. It is alpha + 1 off the toric case; in the toric case
// (beta = 0) the ray formula only closes up with alpha itself, so the uniform
// expression ceil(m p / (q - p)) is used.
Int ray_shift(const PopovPair& pair);

struct SequenceTable {
    std::vector<Int> e;
    std::vector<Int> l;
    std::vector<Int> n;
};

SequenceTable eln_sequences(const DerivedInvariants& inv, const HJExpansion& hj, const PopovPair& pair);

using Point2 = std::pair<std::int64_t, std::int64_t>;

struct SemigroupGenerators {
    std::vector<Point2> gens;     // sorted by (u1, u2)
    std::int64_t scan_bound = 0;  // final i-bound of the scan
    std::int64_t verified_up_to = 0;
};

// Membership in M+ = {(i, j) >= 0 : q j <= p i, m | i - j}.
bool in_semigroup(std::int64_t p, std::int64_t q, std::int64_t m, Point2 u);

SemigroupGenerators semigroup_generators(const PopovPair& pair);

/// Everything derived from one pair that later modules consume.
struct PairData {
    PopovPair pair;
    DerivedInvariants inv;
    HJExpansion hj;
    SequenceTable seq;
    SemigroupGenerators semigroup;
    bool toric = false;
    Int shift;

    std::size_t r() const { return hj.r(); }
};

PairData prepare_pair(const Int& p, const Int& q, const Int& m);

}  // namespace popov
