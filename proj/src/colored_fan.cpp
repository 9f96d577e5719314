#include "popov/colored_fan.hpp"

#include <algorithm>

#include "popov/error.hpp"

namespace popov {

Int det(const LatticeVector& a, const LatticeVector& b) { return a.x1 * b.x2 - a.x2 * b.x1; }

const char* color_name(Color c) { return c == Color::s_plus ? "S+" : "S-"; }

BaseRays base_rays(const DerivedInvariants& inv, const PopovPair& pair) {
    if (pair.smooth) throw Error(Errc::smooth_case_unsupported, "base rays need p < q");
    return BaseRays{
        LatticeVector{-inv.b, inv.a * pair.p},
        LatticeVector{1, 0},
        LatticeVector{1, pair.m},
        LatticeVector{0, 1},
    };
}

Rational valuation_functional(const LatticeVector& v, const PopovPair& pair) {
    // Solve v = x (1, m) + y (1, 0) by Cramer's rule.
    const LatticeVector s_plus{1, pair.m};
    const LatticeVector s_minus{1, 0};
    const Rational d(det(s_plus, s_minus));
    const Rational x = Rational(det(v, s_minus)) / d;
    const Rational y = Rational(det(s_plus, v)) / d;
    return x + y;
}

bool in_valuation_cone(const LatticeVector& v, const PopovPair& pair) {
    return valuation_functional(v, pair) <= 0;
}

bool relint_meets_valuation_cone(const std::vector<LatticeVector>& gens, const PopovPair& pair) {
    if (gens.empty()) return true;
    if (gens.size() == 1) return in_valuation_cone(gens[0], pair);
    // The functional is linear, so the open segment meets the closed half-plane
    // unless both ends are strictly outside, or one end is on the boundary and
    // the other strictly outside.
    const Rational f0 = valuation_functional(gens[0], pair);
    const Rational f1 = valuation_functional(gens[1], pair);
    return std::min(f0, f1) < 0 || (f0 == 0 && f1 == 0);
}

namespace {

bool colors_lie_on(const std::vector<std::size_t>& face, const std::vector<LatticeVector>& rays,
                   const LatticeVector& color_ray) {
    for (std::size_t idx : face) {
        const LatticeVector& r = rays[idx];
        if (det(r, color_ray) == 0 && r.x1 * color_ray.x1 + r.x2 * color_ray.x2 > 0) return true;
    }
    return false;
}

// One maximal colored cone and every face whose relative interior meets V.
// Colors of a face are the colors of the cone whose ray it contains.
ColoredFan simple_fan(const std::string& name, const LatticeVector& r0, const LatticeVector& r1,
                      const std::vector<Color>& colors, const PopovPair& pair) {
    ColoredFan fan;
    fan.name = name;
    fan.rays = {r0, r1};
    const LatticeVector s_plus{1, pair.m};
    const LatticeVector s_minus{1, 0};
    auto face_colors = [&](const std::vector<std::size_t>& face) {
        std::vector<Color> out;
        for (Color c : colors) {
            const LatticeVector& cr = c == Color::s_plus ? s_plus : s_minus;
            if (face.size() == 2 || colors_lie_on(face, fan.rays, cr)) out.push_back(c);
        }
        return out;
    };
    auto label_ray = [&](const LatticeVector& v) -> std::string {
        if (v == LatticeVector{0, 1}) return "D'";
        return "D";
    };
    fan.cones.push_back(ColoredCone{{}, {}, "open"});
    for (std::size_t i = 0; i < 2; ++i) {
        if (!relint_meets_valuation_cone({fan.rays[i]}, pair)) continue;
        fan.cones.push_back(ColoredCone{{i}, face_colors({i}), label_ray(fan.rays[i])});
    }
    fan.cones.push_back(ColoredCone{{0, 1}, face_colors({0, 1}), "closed"});
    return fan;
}

}  // namespace

EmbeddingFans embedding_fans(const DerivedInvariants& inv, const PopovPair& pair) {
    const BaseRays br = base_rays(inv, pair);
    return EmbeddingFans{
        simple_fan("E", br.D, br.s_minus, {Color::s_plus, Color::s_minus}, pair),
        simple_fan("E-", br.D, br.s_plus, {Color::s_plus}, pair),
        simple_fan("E+", br.D, br.s_minus, {Color::s_minus}, pair),
        simple_fan("E'", br.D, br.D_prime, {}, pair),
    };
}

ColoredFan resolution_fan(const PairData& data) {
    if (data.pair.smooth) throw Error(Errc::smooth_case_unsupported, "resolution fan needs p < q");
    ColoredFan fan;
    fan.name = "resolution";
    const std::size_t last = data.r() + 1;
    for (std::size_t i = 0; i <= last; ++i) {
        fan.rays.push_back(LatticeVector{-data.hj.P[i], data.shift * data.hj.P[i] - data.hj.Q[i]});
    }
    fan.cones.push_back(ColoredCone{{}, {}, "open"});
    for (std::size_t i = 0; i <= last; ++i) {
        std::string label = i == 0 ? "D'" : i == last ? "D" : "ray:" + std::to_string(i);
        fan.cones.push_back(ColoredCone{{i}, {}, label});
    }
    for (std::size_t i = 1; i <= last; ++i) {
        fan.cones.push_back(ColoredCone{{i - 1, i}, {}, "Y:" + std::to_string(i)});
    }
    return fan;
}

namespace {

bool same_direction(const LatticeVector& a, const LatticeVector& b) {
    return det(a, b) == 0 && a.x1 * b.x1 + a.x2 * b.x2 > 0;
}

// Oriented generators (a, b) with det(a, b) > 0.
std::pair<LatticeVector, LatticeVector> oriented(const ColoredFan& fan, const ColoredCone& c) {
    LatticeVector a = fan.rays[c.rays[0]];
    LatticeVector b = fan.rays[c.rays[1]];
    if (det(a, b) < 0) std::swap(a, b);
    return {a, b};
}

bool strictly_inside(const LatticeVector& v, const LatticeVector& a, const LatticeVector& b) {
    return det(a, v) > 0 && det(v, b) > 0;
}

bool relints_overlap(const ColoredFan& fan, const ColoredCone& x, const ColoredCone& y) {
    if (x.rays.empty() || y.rays.empty()) return x.rays.empty() && y.rays.empty();
    if (x.rays.size() == 1 && y.rays.size() == 1) {
        return same_direction(fan.rays[x.rays[0]], fan.rays[y.rays[0]]);
    }
    if (x.rays.size() == 1 || y.rays.size() == 1) {
        const ColoredCone& ray = x.rays.size() == 1 ? x : y;
        const ColoredCone& wedge = x.rays.size() == 1 ? y : x;
        auto [a, b] = oriented(fan, wedge);
        return strictly_inside(fan.rays[ray.rays[0]], a, b);
    }
    auto [a, b] = oriented(fan, x);
    auto [c, d] = oriented(fan, y);
    if (same_direction(a, c) && same_direction(b, d)) return true;
    return strictly_inside(c, a, b) || strictly_inside(d, a, b) || strictly_inside(a, c, d) ||
           strictly_inside(b, c, d);
}

bool has_cone(const ColoredFan& fan, std::vector<std::size_t> rays) {
    std::sort(rays.begin(), rays.end());
    for (const ColoredCone& c : fan.cones) {
        std::vector<std::size_t> cr = c.rays;
        std::sort(cr.begin(), cr.end());
        if (cr == rays) return true;
    }
    return false;
}

}  // namespace

std::string fan_defect(const ColoredFan& fan, const PopovPair& pair) {
    if (!has_cone(fan, {})) return "zero cone missing";
    for (std::size_t ci = 0; ci < fan.cones.size(); ++ci) {
        const ColoredCone& c = fan.cones[ci];
        if (c.rays.size() > 2) return "cone " + std::to_string(ci) + " has more than two rays";
        if (c.rays.size() == 2 && det(fan.rays[c.rays[0]], fan.rays[c.rays[1]]) == 0) {
            return "cone " + std::to_string(ci) + " is not strictly convex";
        }
        std::vector<LatticeVector> gens;
        for (std::size_t r : c.rays) gens.push_back(fan.rays[r]);
        if (!relint_meets_valuation_cone(gens, pair)) {
            return "cone " + std::to_string(ci) + " misses the valuation cone";
        }
        if (c.rays.size() == 2) {
            for (std::size_t r : c.rays) {
                std::vector<LatticeVector> face{fan.rays[r]};
                if (relint_meets_valuation_cone(face, pair) && !has_cone(fan, {r})) {
                    return "face of cone " + std::to_string(ci) + " missing";
                }
            }
        }
        for (std::size_t cj = ci + 1; cj < fan.cones.size(); ++cj) {
            if (relints_overlap(fan, c, fan.cones[cj])) {
                return "cones " + std::to_string(ci) + " and " + std::to_string(cj) + " overlap";
            }
        }
    }
    return {};
}

std::vector<std::size_t> OrbitPoset::closed_orbits() const {
    // Closed orbits come from maximal cones, which are facets of nothing.
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < covers.size(); ++i) {
        if (covers[i].empty()) out.push_back(i);
    }
    return out;
}

OrbitPoset orbit_poset(const ColoredFan& fan) {
    OrbitPoset poset;
    poset.covers.resize(fan.cones.size());
    for (const ColoredCone& c : fan.cones) poset.labels.push_back(c.label);
    // covers[i] lists the cones having cone i as a facet: their orbits lie in
    // the closure of orbit i with codimension one.
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
        const auto& small = fan.cones[i].rays;
        for (std::size_t j = 0; j < fan.cones.size(); ++j) {
            const auto& big = fan.cones[j].rays;
            if (big.size() != small.size() + 1) continue;
            bool sub = std::all_of(small.begin(), small.end(), [&](std::size_t r) {
                return std::find(big.begin(), big.end(), r) != big.end();
            });
            if (sub) poset.covers[i].push_back(j);
        }
    }
    return poset;
}

Int pairing(const LatticeVector& rho, const EigenMonomial& mon, const Int& m) {
    const Int diff = mon.e - mon.l;
    if (rem(diff, m) != 0) throw Error(Errc::invalid_argument, "Z^e W^l is not in the weight lattice");
    // chi(Z^e W^l) = l u1^* + ((e - l) / m) u2^*.
    return rho.x1 * mon.l + rho.x2 * (diff / m);
}

EigenMonomial sigma(const PairData& data, std::size_t i) {
    if (i >= data.seq.e.size()) throw Error(Errc::out_of_range, "sigma index " + std::to_string(i));
    return EigenMonomial{data.seq.e[i], data.seq.l[i]};
}

Int valuation_pairing(const PairData& data, std::size_t j, const EigenMonomial& mon) {
    if (j > data.r() + 1) throw Error(Errc::out_of_range, "ray index " + std::to_string(j));
    const LatticeVector rho{-data.hj.P[j], data.shift * data.hj.P[j] - data.hj.Q[j]};
    return pairing(rho, mon, data.pair.m);
}

GlobalGeneration check_global_generation(const PairData& data) {
    GlobalGeneration out;
    const std::size_t last = data.r() + 1;
    // prefix[j][i] = v_{D_j}(f_i) = sum over k <= i of v_{D_j}(sigma_k).
    std::vector<std::vector<Int>> prefix(last + 1, std::vector<Int>(last + 1));
    for (std::size_t j = 0; j <= last; ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i <= last; ++i) {
            acc += valuation_pairing(data, j, sigma(data, i));
            prefix[j][i] = acc;
        }
    }
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.failures.push_back(std::move(msg));
    };
    for (std::size_t i = 1; i <= last; ++i) {
        for (std::size_t j = 1; j <= last; ++j) {
            ++out.checked;
            if (-prefix[j][i - 1] > -prefix[j][j - 1]) {
                fail("(a) D_" + std::to_string(j) + " at i=" + std::to_string(i));
            }
            ++out.checked;
            if (-prefix[j - 1][i - 1] > -prefix[j - 1][j - 1]) {
                fail("(a) D_" + std::to_string(j - 1) + " at i=" + std::to_string(i) + ", j=" + std::to_string(j));
            }
        }
    }
    const LatticeVector s_plus{1, data.pair.m};
    const LatticeVector s_minus{1, 0};
    Int sum_plus = 0;
    Int sum_minus = 0;
    for (std::size_t i = 1; i <= last; ++i) {
        sum_plus += pairing(s_plus, sigma(data, i - 1), data.pair.m);
        sum_minus += pairing(s_minus, sigma(data, i - 1), data.pair.m);
        ++out.checked;
        if (sum_plus < 0) fail("(b) S+ at i=" + std::to_string(i));
        ++out.checked;
        if (sum_minus < 0) fail("(b) S- at i=" + std::to_string(i));
    }
    return out;
}

}  // namespace popov
