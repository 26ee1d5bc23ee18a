#pragma once

#include "bhk/hypergeom/series.hpp"

namespace bhk::count {

/// a_p = 1 + p - #E(F_p) for E: y^2 = x (x - 1) (x - psi).
inline std::int64_t legendre_trace(std::int64_t psi, std::uint64_t p) {
    if (p < 3 || !arith::is_prime(p)) throw PreconditionError("legendre_trace needs an odd prime");
    const auto pi = static_cast<std::int64_t>(p);
    const std::int64_t l = arith::mod(psi, pi);
    if (l == 0 || l == 1) throw PreconditionError("psi = " + std::to_string(psi) + " gives a singular curve mod " + std::to_string(p));
    // squares[v] = number of y with y^2 = v
    std::vector<int> roots(p, 0);
    for (std::uint64_t y = 0; y < p; ++y) ++roots[arith::mulmod(y, y, p)];
    std::int64_t points = 1;  // point at infinity
    for (std::int64_t x = 0; x < pi; ++x) {
        std::int64_t v = arith::mod(x * (x - 1) % pi * arith::mod(x - l, pi), pi);
        points += roots[static_cast<std::size_t>(v)];
    }
    return 1 + pi - points;
}

/// Start index of the truncated sum; frozen after calibrate_igusa_start() on p <= 13.
inline constexpr std::uint64_t kIgusaStartIndex = 0;

/// (-1)^{(p-1)/2} sum_{n=start}^{(p-1)/2} ((1/2)_n / n!)^2 psi^n mod p.
inline std::uint64_t igusa_truncation(std::int64_t psi, std::uint64_t p, std::uint64_t start = kIgusaStartIndex) {
    if (p < 3 || !arith::is_prime(p)) throw PreconditionError("igusa_truncation needs an odd prime");
    const std::int64_t l = arith::mod(psi, static_cast<std::int64_t>(p));
    if (l == 0 || l == 1) throw PreconditionError("psi = " + std::to_string(psi) + " gives a singular curve mod " + std::to_string(p));
    auto h = hyper::HypergeometricParameters::make({Rational(1, 2), Rational(1, 2)}, {Rational(0), Rational(0)});
    std::uint64_t s = hyper::truncated_series(h, l, p, (p - 1) / 2, start);
    return ((p - 1) / 2) % 2 ? (p - s) % p : s;
}

struct IgusaCalibration {
    std::optional<std::uint64_t> start;  // index matching on every calibration prime, if unique
    std::vector<std::uint64_t> primes;
    std::uint64_t mismatches_start0 = 0;
    std::uint64_t mismatches_start1 = 0;
};

/// Compares both start indices with brute-force traces for every psi.
inline IgusaCalibration calibrate_igusa_start(const std::vector<std::uint64_t>& primes = {5, 7, 11, 13}) {
    IgusaCalibration c;
    c.primes = primes;
    for (auto p : primes)
        for (std::int64_t psi = 2; psi < static_cast<std::int64_t>(p); ++psi) {
            auto ap = static_cast<std::uint64_t>(arith::mod(legendre_trace(psi, p), static_cast<std::int64_t>(p)));
            c.mismatches_start0 += igusa_truncation(psi, p, 0) != ap;
            c.mismatches_start1 += igusa_truncation(psi, p, 1) != ap;
        }
    if (c.mismatches_start0 == 0 && c.mismatches_start1 != 0) c.start = 0;
    if (c.mismatches_start1 == 0 && c.mismatches_start0 != 0) c.start = 1;
    return c;
}

}  // namespace bhk::count
