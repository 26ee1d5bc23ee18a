#pragma once

#include "bhk/hypergeom/params.hpp"

namespace bhk::hyper {

/// (x)_k = x (x+1) ... (x+k-1)
inline Rational rising_factorial(const Rational& x, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x + i;
    return r;
}

namespace detail {

inline std::uint64_t rational_mod(const Rational& x, std::uint64_t p) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt pp = p;
    BigInt num = numerator(x) % pp, den = denominator(x) % pp;
    if (num < 0) num += pp;
    if (den == 0) throw PreconditionError("denominator of " + bhk::to_string(x) + " is divisible by " + std::to_string(p));
    return arith::mulmod(static_cast<std::uint64_t>(num),
                         arith::invmod(static_cast<std::int64_t>(den), static_cast<std::int64_t>(p)), p);
}

}  // namespace detail

/// sum_{k=start}^{cutoff} prod (alpha_i)_k / prod (b_j)_k z^k mod p, where b_j = beta_j,
/// except that a beta entry 0 stands for the lower parameter 1, so (1)_k = k!.
inline std::uint64_t truncated_series(const HypergeometricParameters& h, std::int64_t z, std::uint64_t p, std::uint64_t cutoff,
                                      std::uint64_t start = 0) {
    if (!arith::is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (cutoff > p - 1) throw PreconditionError("cutoff above p - 1");
    std::vector<std::uint64_t> a, b;
    for (const auto& x : h.alpha) a.push_back(detail::rational_mod(x, p));
    for (const auto& x : h.beta) b.push_back(detail::rational_mod(x == 0 ? Rational(1) : x, p));
    const std::uint64_t zm = static_cast<std::uint64_t>(arith::mod(z, static_cast<std::int64_t>(p)));
    std::uint64_t num = 1, den = 1, zk = 1, sum = 0;
    for (std::uint64_t k = 0; k <= cutoff; ++k) {
        if (k >= start) {
            if (den == 0) throw PreconditionError("a lower rising factorial vanishes mod " + std::to_string(p) + " at k = " + std::to_string(k));
            std::uint64_t term = arith::mulmod(arith::mulmod(num, arith::invmod(static_cast<std::int64_t>(den), static_cast<std::int64_t>(p)), p), zk, p);
            sum = (sum + term) % p;
        }
        for (auto x : a) num = arith::mulmod(num, (x + k) % p, p);
        for (auto x : b) den = arith::mulmod(den, (x + k) % p, p);
        zk = arith::mulmod(zk, zm, p);
    }
    return sum;
}

}  // namespace bhk::hyper
