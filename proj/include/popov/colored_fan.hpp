#pragma once

#include <string>
#include <vector>

#include "popov/invariants.hpp"

namespace popov {

// Coordinates in the basis (u1, u2) dual to {(2,0), (m,m)}.
struct LatticeVector {
    Int x1;
    Int x2;
    bool operator==(const LatticeVector&) const = default;
};

Int det(const LatticeVector& a, const LatticeVector& b);

enum class Color { s_plus, s_minus };
const char* color_name(Color c);

struct ColoredCone {
    std::vector<std::size_t> rays;  // indices into ColoredFan::rays
    std::vector<Color> colors;
    std::string label;
};

struct ColoredFan {
    std::string name;
    std::vector<LatticeVector> rays;
    std::vector<ColoredCone> cones;
};

struct BaseRays {
    LatticeVector D;
    LatticeVector s_minus;
    LatticeVector s_plus;
    LatticeVector D_prime;
};

BaseRays base_rays(const DerivedInvariants& inv, const PopovPair& pair);

// x + y for v = x rho_{S+} + y rho_{S-}, by exact change of basis.
Rational valuation_functional(const LatticeVector& v, const PopovPair& pair);
bool in_valuation_cone(const LatticeVector& v, const PopovPair& pair);
bool relint_meets_valuation_cone(const std::vector<LatticeVector>& gens, const PopovPair& pair);

struct EmbeddingFans {
    ColoredFan E;
    ColoredFan E_minus;
    ColoredFan E_plus;
    ColoredFan E_prime;
};

EmbeddingFans embedding_fans(const DerivedInvariants& inv, const PopovPair& pair);
ColoredFan resolution_fan(const PairData& data);

// Empty when the fan is face-closed, contains the zero cone, has strictly
// convex cones and pairwise disjoint relative interiors; otherwise the reason.
std::string fan_defect(const ColoredFan& fan, const PopovPair& pair);

struct OrbitPoset {
    std::vector<std::string> labels;               // one per cone
    std::vector<std::vector<std::size_t>> covers;  // codimension-one orbits in each closure
    std::vector<std::size_t> closed_orbits() const;
};

OrbitPoset orbit_poset(const ColoredFan& fan);

struct EigenMonomial {
    Int e;
    Int l;
};

// rho(chi) for the character of Z^e W^l; needs m | e - l.
Int pairing(const LatticeVector& rho, const EigenMonomial& mon, const Int& m);

// v_{D_j}(sigma_i) on the resolution fan.
Int valuation_pairing(const PairData& data, std::size_t j, const EigenMonomial& mon);
EigenMonomial sigma(const PairData& data, std::size_t i);

struct GlobalGeneration {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

GlobalGeneration check_global_generation(const PairData& data);

}  // namespace popov
