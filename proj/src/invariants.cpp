#include "popov/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "popov/error.hpp"

namespace popov {

PopovPair validate_pair(const Int& p, const Int& q, const Int& m) {
    if (p <= 0) throw Error(Errc::invalid_pair, "p must be positive");
    if (q < p) throw Error(Errc::invalid_pair, "need p <= q");
    if (m <= 0) throw Error(Errc::invalid_pair, "m must be positive");
    // Any p = q is height 1, whatever the representation.
    if (p == q) return PopovPair{p, q, m, true};
    if (gcd(p, q) != 1) throw Error(Errc::invalid_pair, "gcd(p, q) = " + gcd(p, q).str());
    return PopovPair{p, q, m, false};
}

static void require_nonsmooth(const PopovPair& pair) {
    if (pair.smooth)
        throw Error(Errc::smooth_case_unsupported, "p = q: the resolution pipeline needs p < q");
}

DerivedInvariants derive_invariants(const PopovPair& pair) {
    require_nonsmooth(pair);
    const Int d = pair.q - pair.p;
    DerivedInvariants inv;
    inv.k = gcd(pair.m, d);
    inv.a = pair.m / inv.k;
    inv.b = d / inv.k;
    inv.alpha = floor_div(pair.m * pair.p, d);
    inv.beta = rem(pair.m * pair.p, d);
    inv.t = (d - inv.beta) / inv.k;
    if (inv.t != (inv.alpha + 1) * inv.b - inv.a * pair.p)
        throw Error(Errc::consistency_failure, "the two expressions for t disagree");
    return inv;
}

bool is_toric(const PopovPair& pair) {
    require_nonsmooth(pair);
    return pair.m % (pair.q - pair.p) == 0;
}

Int ray_shift(const PopovPair& pair) {
    require_nonsmooth(pair);
    return ceil_div(pair.m * pair.p, pair.q - pair.p);
}

SequenceTable eln_sequences(const DerivedInvariants& inv, const HJExpansion& hj, const PopovPair& pair) {
    require_nonsmooth(pair);
    if (hj.b != inv.b || hj.t != inv.t)
        throw Error(Errc::invalid_argument, "HJ expansion was not built from (b, t)");
    const Int s = ray_shift(pair);
    SequenceTable seq;
    for (std::size_t i = 0; i < hj.P.size(); ++i) {
        seq.e.push_back((s + pair.m) * hj.P[i] - hj.Q[i]);
        seq.l.push_back(s * hj.P[i] - hj.Q[i]);
        seq.n.push_back(-pair.p * seq.e.back() + pair.q * seq.l.back());
    }
    return seq;
}

bool in_semigroup(std::int64_t p, std::int64_t q, std::int64_t m, Point2 u) {
    auto [i, j] = u;
    return i >= 0 && j >= 0 && q * j <= p * i && (i - j) % m == 0;
}

namespace {

struct Scan {
    std::int64_t p, q, m;

    bool member(Point2 u) const { return in_semigroup(p, q, m, u); }

    // Incremental sweep in (i, j) order: a point is reducible iff it is a
    // generator found earlier plus a nonzero semigroup element.
    std::vector<Point2> candidates(std::int64_t bound) const {
        std::vector<Point2> gens;
        for (std::int64_t i = 1; i <= bound; ++i) {
            for (std::int64_t j = 0; q * j <= p * i; ++j) {
                if ((i - j) % m != 0) continue;
                bool reducible = false;
                for (const auto& g : gens) {
                    if (g.first < i && g.second <= j && member({i - g.first, j - g.second})) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) gens.push_back({i, j});
            }
        }
        return gens;
    }

    // All semigroup points with i <= upto decompose into gens.
    bool saturated(const std::vector<Point2>& gens, std::int64_t upto) const {
        std::set<Point2> reach;
        for (std::int64_t i = 1; i <= upto; ++i) {
            for (std::int64_t j = 0; q * j <= p * i; ++j) {
                if ((i - j) % m != 0) continue;
                bool ok = false;
                for (const auto& g : gens) {
                    Point2 rest{i - g.first, j - g.second};
                    if (rest == Point2{0, 0} || (member(rest) && reach.count(rest))) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return false;
                reach.insert({i, j});
            }
        }
        return true;
    }
};

}  // namespace

SemigroupGenerators semigroup_generators(const PopovPair& pair) {
    Scan scan{to_i64(pair.p), to_i64(pair.q), to_i64(pair.m)};
    std::int64_t bound = scan.q * (scan.m + scan.q);
    const std::int64_t limit = bound << 6;
    while (bound <= limit) {
        auto gens = scan.candidates(bound);
        std::int64_t top = 0;
        for (const auto& g : gens) top = std::max({top, g.first, g.second});
        const std::int64_t upto = 2 * top;
        if (!gens.empty() && scan.saturated(gens, upto)) {
            std::sort(gens.begin(), gens.end());
            return SemigroupGenerators{gens, bound, upto};
        }
        bound *= 2;
    }
    throw Error(Errc::bound_failure, "semigroup scan did not saturate below i = " + std::to_string(limit));
}

PairData prepare_pair(const Int& p, const Int& q, const Int& m) {
    PairData d;
    d.pair = validate_pair(p, q, m);
    d.inv = derive_invariants(d.pair);
    d.toric = is_toric(d.pair);
    d.hj = hj_expand(d.inv.b, d.inv.t);
    d.seq = eln_sequences(d.inv, d.hj, d.pair);
    d.semigroup = semigroup_generators(d.pair);
    d.shift = ray_shift(d.pair);
    return d;
}

}  // namespace popov
