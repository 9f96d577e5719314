#include "popov/report.hpp"

#include <sstream>

namespace popov {

Json int_json(const Int& v) {
    static const Int safe = (Int(1) << 53) - 1;
    if (abs(v) <= safe) return static_cast<long long>(v);
    return v.str();
}

namespace {

Json int_list(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(int_json(x));
    return out;
}

Json exponents(const Monomial5& m) {
    Json out = Json::array();
    for (i64 e : m.exp) out.push_back(e);
    return out;
}

Json generator_json(const Generator& g) {
    Json out;
    out["kind"] = g.rhs ? "difference" : "monomial";
    out["lhs"] = exponents(g.lhs);
    out["rhs"] = g.rhs ? exponents(*g.rhs) : Json(nullptr);
    out["role"] = g.role;
    out["text"] = to_string(g);
    return out;
}

Json generator_list(const std::vector<Generator>& gens) {
    Json out = Json::array();
    for (const Generator& g : gens) out.push_back(generator_json(g));
    return out;
}

}  // namespace

Json pair_json(const PopovPair& pair) {
    Json out;
    out["p"] = int_json(pair.p);
    out["q"] = int_json(pair.q);
    out["m"] = int_json(pair.m);
    return out;
}

Json fan_json(const ColoredFan& fan) {
    Json out;
    out["name"] = fan.name;
    out["rays"] = Json::array();
    for (const LatticeVector& r : fan.rays) out["rays"].push_back(Json::array({int_json(r.x1), int_json(r.x2)}));
    out["cones"] = Json::array();
    for (const ColoredCone& c : fan.cones) {
        Json cone;
        cone["rays"] = c.rays;
        cone["colors"] = Json::array();
        for (Color col : c.colors) cone["colors"].push_back(color_name(col));
        cone["label"] = c.label;
        out["cones"].push_back(cone);
    }
    return out;
}

Json poset_json(const OrbitPoset& poset) {
    Json out;
    out["orbits"] = poset.labels;
    out["covers"] = Json::array();
    for (const auto& cov : poset.covers) out["covers"].push_back(cov);
    out["closed"] = Json::array();
    for (std::size_t i : poset.closed_orbits()) out["closed"].push_back(poset.labels[i]);
    return out;
}

Json ideal_json(const CompiledIdeal& ideal, const Lattice& lat) {
    const IdealSpec& spec = ideal.spec;
    Json out;
    out["name"] = spec.name();
    out["family"] = family_name(spec.family);
    if (spec.index) out["index"] = spec.index;
    out["generators"] = generator_list(spec.generators);
    if (!spec.f_presentation.empty()) out["f_presentation"] = generator_list(spec.f_presentation);
    out["display"] = Json::array();
    for (const Generator& g : display_generators(spec, lat)) out["display"].push_back(to_string(g));
    out["rewrite_rules"] = Json::array();
    for (const Rule& r : ideal.system.rules()) {
        const char* third = spec.third_variable();
        out["rewrite_rules"].push_back(to_string(r.lhs, third) + " -> " + (r.rhs ? to_string(*r.rhs, third) : "0"));
    }
    return out;
}

Json verify_json(const VerifyReport& report) {
    Json out;
    out["ok"] = report.ok();
    out["max_weight"] = report.max_weight;
    out["c_bound"] = report.c_bound;
    out["theta_skipped"] = report.theta_skipped;
    out["checks"] = Json::array();
    for (const CheckResult& c : report.checks) {
        Json item;
        item["name"] = c.name;
        item["status"] = status_name(c.status);
        item["checked"] = c.checked;
        if (!c.detail.empty()) item["detail"] = c.detail;
        out["checks"].push_back(item);
    }
    return out;
}

Json classification_json(const PopovPair& pair) {
    Json out;
    out["schema"] = "1";
    out["pair"] = pair_json(pair);
    out["smooth"] = true;
    out["notice"] = "height 1: the variety is smooth; the resolution pipeline does not apply";
    return out;
}

namespace {

// A degenerate tangent system is reported in place of its dimension.
Json tangent_json(std::size_t i, const PairAnalysis& an) {
    try {
        return tangent_dimension(i, an.lat, an.ideal(Family::J0, i));
    } catch (const Error& e) {
        if (e.code() != Errc::consistency_failure) throw;
        return e.what();
    }
}

}  // namespace

Json analysis_json(const PairAnalysis& an, const VerifyReport& report) {
    const PairData& d = an.data;
    const Lattice& lat = an.lat;
    Json out;
    out["schema"] = "1";
    out["pair"] = pair_json(d.pair);
    out["smooth"] = false;
    out["toric"] = d.toric;
    if (d.toric) out["notice"] = "already smooth after weighted blow-up";
    Json inv;
    inv["k"] = int_json(d.inv.k);
    inv["a"] = int_json(d.inv.a);
    inv["b"] = int_json(d.inv.b);
    inv["alpha"] = int_json(d.inv.alpha);
    inv["beta"] = int_json(d.inv.beta);
    inv["t"] = int_json(d.inv.t);
    out["invariants"] = inv;
    Json hj;
    hj["r"] = d.r();
    hj["coeffs"] = int_list(d.hj.coeffs);
    hj["P"] = int_list(d.hj.P);
    hj["Q"] = int_list(d.hj.Q);
    hj["tchain"] = int_list(d.hj.tchain);
    out["hj"] = hj;
    out["sequences"] = Json::array();
    for (std::size_t i = 0; i < d.seq.n.size(); ++i) {
        Json row;
        row["i"] = i;
        row["e"] = int_json(d.seq.e[i]);
        row["l"] = int_json(d.seq.l[i]);
        row["n"] = int_json(d.seq.n[i]);
        out["sequences"].push_back(row);
    }
    Json sg;
    sg["generators"] = Json::array();
    for (auto [u1, u2] : d.semigroup.gens) sg["generators"].push_back(Json::array({u1, u2}));
    sg["scan_bound"] = d.semigroup.scan_bound;
    sg["verified_up_to"] = d.semigroup.verified_up_to;
    sg["invariant_ring"] = Json::array();
    for (const Monomial3& g : lat.invariant_generators()) sg["invariant_ring"].push_back(to_string(g));
    out["semigroup"] = sg;
    const BaseRays br = base_rays(d.inv, d.pair);
    Json base;
    base["D"] = Json::array({int_json(br.D.x1), int_json(br.D.x2)});
    base["S-"] = Json::array({int_json(br.s_minus.x1), int_json(br.s_minus.x2)});
    base["S+"] = Json::array({int_json(br.s_plus.x1), int_json(br.s_plus.x2)});
    base["D'"] = Json::array({int_json(br.D_prime.x1), int_json(br.D_prime.x2)});
    out["base_rays"] = base;
    const EmbeddingFans ef = embedding_fans(d.inv, d.pair);
    const ColoredFan res = resolution_fan(d);
    Json fans;
    for (const ColoredFan* f : {&ef.E, &ef.E_minus, &ef.E_plus, &ef.E_prime, &res}) fans[f->name] = fan_json(*f);
    out["fans"] = fans;
    out["orbit_poset"] = poset_json(orbit_poset(res));
    out["F"] = Json::array();
    for (i64 j = 1; j < lat.b; ++j) out["F"].push_back(to_string(lat.big_F(j)));
    out["ideals"] = Json::array();
    for (const CompiledIdeal& ci : an.ideals) out["ideals"].push_back(ideal_json(ci, lat));
    out["borel_fixed_points"] = Json::array();
    for (const IdealSpec& spec : borel_fixed_points(lat)) out["borel_fixed_points"].push_back(spec.name());
    out["tangent_dimensions"] = Json::array();
    for (std::size_t i = 1; i <= lat.r + 1; ++i) {
        out["tangent_dimensions"].push_back(tangent_json(i, an));
    }
    out["verification"] = verify_json(report);
    return out;
}

namespace {

std::string join(const std::vector<Int>& v) {
    std::string out;
    for (const Int& x : v) out += (out.empty() ? "" : ", ") + x.str();
    return "[" + out + "]";
}

void checks_text(std::ostringstream& os, const VerifyReport& report) {
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const CheckResult& c : report.checks) {
        if (c.status == CheckStatus::pass) ++pass;
        if (c.status == CheckStatus::fail) ++fail;
        if (c.status == CheckStatus::skipped) ++skipped;
        if (c.status != CheckStatus::pass) {
            os << "  " << status_name(c.status) << " " << c.name << ": " << c.detail << "\n";
        }
    }
    os << "checks: " << pass << " pass, " << fail << " fail, " << skipped << " skipped"
       << " (max weight " << report.max_weight << ", c bound " << report.c_bound << ")\n";
}

}  // namespace

std::string analysis_text(const PairAnalysis& an, const VerifyReport& report) {
    const PairData& d = an.data;
    const Lattice& lat = an.lat;
    std::ostringstream os;
    os << "pair (p, q, m) = (" << d.pair.p << ", " << d.pair.q << ", " << d.pair.m << ")"
       << (d.toric ? ", toric: already smooth after weighted blow-up" : "") << "\n";
    os << "k=" << d.inv.k << " a=" << d.inv.a << " b=" << d.inv.b << " alpha=" << d.inv.alpha << " beta=" << d.inv.beta
       << " t=" << d.inv.t << "\n";
    os << "b/t coefficients " << join(d.hj.coeffs) << ", P " << join(d.hj.P) << ", Q " << join(d.hj.Q) << "\n";
    for (std::size_t i = 0; i < d.seq.n.size(); ++i) {
        os << "  (e, l, n)_" << i << " = (" << d.seq.e[i] << ", " << d.seq.l[i] << ", " << d.seq.n[i] << ")\n";
    }
    os << "semigroup generators:";
    for (auto [u1, u2] : d.semigroup.gens) os << " (" << u1 << "," << u2 << ")";
    os << "\nresolution rays:";
    for (const LatticeVector& r : resolution_fan(d).rays) os << " (" << r.x1 << "," << r.x2 << ")";
    os << "\n";
    for (i64 j = 1; j < lat.b; ++j) os << "F_" << j << " = " << to_string(lat.big_F(j)) << "\n";
    for (const CompiledIdeal& ci : an.ideals) {
        os << ci.spec.name() << " = (";
        bool first = true;
        for (const Generator& g : display_generators(ci.spec, lat)) {
            os << (first ? "" : ", ") << to_string(g);
            first = false;
        }
        os << ")\n";
    }
    os << "Borel-fixed points: " << borel_fixed_points(lat).size() << "\n";
    os << "tangent dimensions:";
    for (std::size_t i = 1; i <= lat.r + 1; ++i) {
        const Json t = tangent_json(i, an);
        os << " " << (t.is_string() ? t.get<std::string>() : t.dump());
    }
    os << "\n";
    checks_text(os, report);
    return os.str();
}

std::string verify_text(const PairAnalysis& an, const VerifyReport& report) {
    std::ostringstream os;
    os << "verify (" << an.data.pair.p << ", " << an.data.pair.q << ", " << an.data.pair.m << "): "
       << (report.ok() ? "PASS" : "FAIL") << "\n";
    checks_text(os, report);
    return os.str();
}

}  // namespace popov
