#include "popov/clebsch_gordan.hpp"

#include <numeric>

#include "popov/error.hpp"

namespace popov {

TensorVector operator*(const Rational& s, const TensorVector& v) {
    TensorVector out;
    if (s == 0) return out;
    for (const auto& [key, coeff] : v.terms) out.terms[key] = s * coeff;
    return out;
}

std::string to_string(const TensorVector& v, const std::vector<int>& partition) {
    std::string out;
    for (const auto& [key, coeff] : v.terms) {
        if (!out.empty()) out += " + ";
        out += coeff.str() + "*";
        for (std::size_t f = 0; f < key.size(); ++f) {
            if (f) out += "(x)";
            const int x = partition[f] - key[f];
            std::string factor;
            if (x) factor += x == 1 ? "X" : "X^" + std::to_string(x);
            if (key[f]) factor += key[f] == 1 ? "Y" : "Y^" + std::to_string(key[f]);
            out += factor.empty() ? "1" : factor;
        }
    }
    return out.empty() ? "0" : out;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int out = 1;
    for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

namespace {

void validate(const std::vector<int>& partition) {
    if (partition.empty()) throw Error(Errc::invalid_argument, "empty partition");
    for (int mu : partition) {
        if (mu < 0) throw Error(Errc::invalid_argument, "negative part");
    }
}

// Visit every (i_1, ..., i_s) with 0 <= i_j <= mu_j and sum = total.
template <class F>
void for_each_split(const std::vector<int>& bounds, int total, F&& visit) {
    std::vector<int> cur(bounds.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == bounds.size()) {
            if (left <= bounds[pos]) {
                cur[pos] = left;
                visit(cur);
            }
            return;
        }
        for (int v = 0; v <= std::min(left, bounds[pos]); ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
}

}  // namespace

TensorVector cg_vector(const std::vector<int>& partition, int i) {
    validate(partition);
    const int n = std::accumulate(partition.begin(), partition.end(), 0);
    if (i < 0 || i > n) throw Error(Errc::out_of_range, "i=" + std::to_string(i) + " outside [0, n]");
    TensorVector out;
    const Rational scale = Rational(1) / Rational(binomial(n, i));
    for_each_split(partition, i, [&](const std::vector<int>& key) {
        Int coeff = 1;
        for (std::size_t f = 0; f < key.size(); ++f) coeff *= binomial(partition[f], key[f]);
        out.terms[key] = scale * Rational(coeff);
    });
    return out;
}

TensorVector lowering_action(const TensorVector& v, const std::vector<int>& partition) {
    validate(partition);
    TensorVector out;
    for (const auto& [key, coeff] : v.terms) {
        for (std::size_t f = 0; f < key.size(); ++f) {
            const int x = partition[f] - key[f];
            if (x == 0) continue;
            // Y d/dX (X^x Y^y) = x X^{x-1} Y^{y+1}.
            std::vector<int> next = key;
            ++next[f];
            out.terms[next] += coeff * x;
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    }
    return out;
}

std::vector<std::vector<int>> compositions_up_to(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int v = 1; v <= left; ++v) {
            cur.push_back(v);
            self(self, left - v);
            cur.pop_back();
        }
    };
    rec(rec, max_total);
    return out;
}

}  // namespace popov
