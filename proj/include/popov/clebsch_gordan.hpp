#pragma once

#include <map>
#include <string>
#include <vector>

#include "popov/exact_arith.hpp"

namespace popov {

// Sum of coefficient * X^{mu_1 - i_1} Y^{i_1} (x) ... keyed by (i_1, ..., i_s).
struct TensorVector {
    std::map<std::vector<int>, Rational> terms;
    bool operator==(const TensorVector&) const = default;
};

TensorVector operator*(const Rational& s, const TensorVector& v);
std::string to_string(const TensorVector& v, const std::vector<int>& partition);

Int binomial(int n, int k);

TensorVector cg_vector(const std::vector<int>& partition, int i);

// f = Y d/dX on every factor, extended by the Leibniz rule.
TensorVector lowering_action(const TensorVector& v, const std::vector<int>& partition);

// All compositions (mu_1, ..., mu_s) with positive parts and total <= max_total.
std::vector<std::vector<int>> compositions_up_to(int max_total);

}  // namespace popov
