#include <array>
#include <string>

#include "doctest.h"
#include "popov/error.hpp"
#include "popov/kernels.hpp"
#include "popov/verify.hpp"

using namespace popov;

namespace {

bool same(const std::vector<WeightDim>& a, const std::vector<WeightDim>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].dim != b[i].dim || a[i].stabilized != b[i].stabilized || a[i].c_bound != b[i].c_bound) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parallel kernels match the serial path") {
    for (auto [p, q, m] : {std::array<long long, 3>{1, 4, 2}, {1, 3, 3}, {2, 7, 3}, {3, 8, 4}}) {
        const PairAnalysis an(prepare_pair(p, q, m));
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(m);
        const auto box = weight_box(an.lat, 2 * an.lat.qp);
        for (const CompiledIdeal& ci : an.ideals) {
            CHECK(same(hilbert_profile(ci.system, an.lat, box, Exec::serial),
                       hilbert_profile(ci.system, an.lat, box, Exec::parallel)));
            const MembershipScan s = membership_scan(ci, an.lat, 3 * m * an.lat.b, Exec::serial);
            const MembershipScan t = membership_scan(ci, an.lat, 3 * m * an.lat.b, Exec::parallel);
            CHECK(s.checked == t.checked);
            CHECK(s.applicable == t.applicable);
            CHECK(s.mismatches.size() == t.mismatches.size());
        }
        const PairScan s = min_additivity_scan(an.lat, an.lat.qp, 2 * m, Exec::serial);
        const PairScan t = min_additivity_scan(an.lat, an.lat.qp, 2 * m, Exec::parallel);
        CHECK(s.checked == t.checked);
        CHECK(s.failures == t.failures);
        CHECK(s.failures.empty());
    }
}

TEST_CASE("weight box covers every residue") {
    const Lattice lat(prepare_pair(1, 4, 2));
    const auto box = weight_box(lat, 6);
    CHECK(box.size() == 13 * 2);
}

TEST_CASE("the lowest failing index is rethrown") {
    try {
        parallel_for(64, Exec::parallel, [](std::size_t idx) {
            if (idx == 7 || idx == 40) throw Error(Errc::consistency_failure, std::to_string(idx));
        });
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).ends_with(": 7"));
    }
}
