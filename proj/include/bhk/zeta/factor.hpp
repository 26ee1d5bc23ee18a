#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "bhk/zeta/int_poly.hpp"

namespace bhk::zeta {

struct WeilFactor {
    IntPoly poly;
    int multiplicity = 1;
};

struct Factorization {
    std::vector<WeilFactor> factors;
    IntPoly residual = IntPoly::constant(1);  // left unfactored (degree > 4 without Weil-type divisors)
    bool complete() const { return residual.degree() == 0; }
};

namespace detail {

inline int strip(IntPoly& p, const IntPoly& f) {
    int k = 0;
    while (p.degree() >= f.degree()) {
        auto d = exact_div(p, f);
        if (!d) break;
        p = std::move(*d);
        ++k;
    }
    return k;
}

}  // namespace detail

/// Divides out 1 -+ q^{w/2} T, then every 1 + aT + q^w T^2 with |a| < 2 q^{w/2}, by exact
/// trial division. Any remainder of degree <= 4 is returned as one factor; larger ones
/// end up in residual.
inline Factorization factor_weil(IntPoly p, std::uint64_t q, int weight = 2) {
    if (weight % 2) throw PreconditionError("factor_weil supports even weight");
    if (p.is_zero() || p.coeff(0) != 1) throw PreconditionError("expected constant term 1");
    Factorization out;
    const BigInt r = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(weight / 2));
    for (int sgn : {-1, 1}) {
        IntPoly lin = IntPoly::linear(sgn * r);
        if (int k = detail::strip(p, lin)) out.factors.push_back({lin, k});
    }
    if (p.degree() >= 2) {
        const BigInt r2 = r * r;
        const auto bound = static_cast<std::int64_t>(2 * r);
        for (std::int64_t a = -bound + 1; a < bound && p.degree() >= 2; ++a) {
            IntPoly quad = IntPoly::quadratic(BigInt(a), r2);
            if (int k = detail::strip(p, quad)) out.factors.push_back({quad, k});
        }
    }
    if (p.degree() > 0) {
        if (p.degree() <= 4) out.factors.push_back({p, 1});
        else out.residual = p;
    }
    return out;
}

inline IntPoly product(const Factorization& f) {
    IntPoly r = f.residual;
    for (const auto& x : f.factors) r = r * x.poly.pow(static_cast<unsigned>(x.multiplicity));
    return r;
}

/// "(1-281T)^19(1+78T+281^2T^2)", factors in the order linear minus, linear plus, quadratics.
inline std::string display(const Factorization& f, std::uint64_t q) {
    const BigInt qq = q, q2 = qq * qq;
    auto term = [&](const BigInt& c, int power) {
        std::string mag;
        BigInt a = abs(c);
        if (power == 1 && a == qq) mag = std::to_string(q);
        else if (power == 2 && a == q2) mag = std::to_string(q) + "^2";
        else mag = a.str();
        return std::string(c < 0 ? "-" : "+") + mag + "T" + (power > 1 ? "^" + std::to_string(power) : "");
    };
    std::string s;
    auto add = [&](const IntPoly& p, int mult) {
        std::string body = "1";
        for (int i = 1; i <= p.degree(); ++i)
            if (p.coeff(static_cast<std::size_t>(i)) != 0) body += term(p.coeff(static_cast<std::size_t>(i)), i);
        s += "(" + body + ")" + (mult > 1 ? "^" + std::to_string(mult) : "");
    };
    for (const auto& x : f.factors) add(x.poly, x.multiplicity);
    if (!f.complete()) add(f.residual, 1);
    return s.empty() ? "1" : s;
}

/// Reciprocal roots of p (constant term 1) via the companion matrix of its reversal.
inline std::vector<std::complex<double>> reciprocal_roots(const IntPoly& p) {
    const int n = p.degree();
    if (n <= 0) return {};
    // reversal: x^n + c1 x^{n-1} + ... + cn has the reciprocal roots as roots
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -static_cast<double>(p.coeff(static_cast<std::size_t>(n - i)));
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

/// Every reciprocal root of every factor has |alpha| = q^{w/2} to relative tolerance tol.
inline bool weil_magnitudes_ok(const Factorization& f, std::uint64_t q, int weight = 2, double tol = 1e-6) {
    if (!f.complete()) return false;
    const double target = std::pow(static_cast<double>(q), weight / 2.0);
    for (const auto& x : f.factors)
        for (auto a : reciprocal_roots(x.poly))
            if (std::abs(std::abs(a) / target - 1.0) > tol) return false;
    return true;
}

/// GCD over Q, normalized to integer coefficients and constant term 1 when possible.
inline IntPoly common_factor(const IntPoly& a, const IntPoly& b) { return gcd_over_q(a, b); }

}  // namespace bhk::zeta
