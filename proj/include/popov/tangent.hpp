#pragma once

#include <string>
#include <vector>

#include "popov/exact_arith.hpp"
#include "popov/ideals.hpp"

namespace popov {

struct TangentSystem {
    std::size_t index = 0;
    std::vector<std::string> unknowns;             // a1..a4, b1..b_{b-1}
    std::vector<std::vector<Rational>> equations;  // one row per surviving normal form
    std::size_t rank = 0;
    std::size_t dimension = 0;
};

// Exact rank by fraction-free elimination over the rationals.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

// Equivariant homomorphisms from the fixed point J0(i) to its quotient, cut
// out by the hypersurface relation and one relation per F_j. Side conditions
// on membership that the construction relies on raise consistency-failure.
TangentSystem tangent_system(std::size_t i, const Lattice& lat, const CompiledIdeal& ideal);
std::size_t tangent_dimension(std::size_t i, const Lattice& lat, const CompiledIdeal& ideal);

}  // namespace popov
