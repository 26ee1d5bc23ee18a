#pragma once

#include <utility>

#include "bhk/invertible/matrix.hpp"

namespace bhk::inv {

/// Primitive positive solution of A r = d 1.
struct WeightSystem {
    std::vector<std::int64_t> weights;
    std::int64_t degree = 0;

    std::int64_t weight_sum() const {
        std::int64_t s = 0;
        for (auto w : weights) s += w;
        return s;
    }
    bool operator==(const WeightSystem&) const = default;
};

inline WeightSystem weights(const ExponentMatrix& a) {
    auto x = solve(a, std::vector<Rational>(a.size(), Rational(1)));
    BigInt lcm = 1;
    for (const auto& v : x) {
        if (v <= 0) throw ValidationError("no positive weight system for " + a.str());
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
    }
    std::vector<BigInt> r;
    BigInt g = 0;
    for (const auto& v : x) {
        r.push_back(boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v)));
        g = boost::multiprecision::gcd(g, r.back());
    }
    WeightSystem ws;
    for (auto& v : r) ws.weights.push_back(static_cast<std::int64_t>(v / g));
    ws.degree = static_cast<std::int64_t>(lcm / g);
    return ws;
}

/// d = sum of weights.
inline bool is_calabi_yau(const ExponentMatrix& a) {
    auto ws = weights(a);
    return ws.degree == ws.weight_sum();
}

/// A^T together with its (dual) weight system (q_0..q_n, d^T).
inline std::pair<ExponentMatrix, WeightSystem> transpose_mirror(const ExponentMatrix& a) {
    auto t = a.transposed();
    return {t, weights(t)};
}

}  // namespace bhk::inv
