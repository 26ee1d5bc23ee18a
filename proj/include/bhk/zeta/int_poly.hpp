#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bhk/common.hpp"

namespace bhk {

/// Integer polynomial, coefficients low-to-high, no trailing zeros.
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<std::int64_t> coeffs) {
        for (auto v : coeffs) c.emplace_back(v);
        normalize();
    }
    static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
    /// 1 + a T
    static IntPoly linear(BigInt a) { return IntPoly(std::vector<BigInt>{1, std::move(a)}); }
    /// 1 + a T + b T^2
    static IntPoly quadratic(BigInt a, BigInt b) { return IntPoly(std::vector<BigInt>{1, std::move(a), std::move(b)}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < c.size() ? c[i] : BigInt(0); }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<BigInt> r(c.size() + o.c.size() - 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        return IntPoly(std::move(r));
    }
    IntPoly operator+(const IntPoly& o) const {
        std::vector<BigInt> r(std::max(c.size(), o.c.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
        return IntPoly(std::move(r));
    }
    IntPoly operator-(const IntPoly& o) const {
        std::vector<BigInt> r(std::max(c.size(), o.c.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
        return IntPoly(std::move(r));
    }
    IntPoly pow(unsigned k) const {
        IntPoly r = constant(1);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }
    bool operator==(const IntPoly&) const = default;

    /// "1 + 78*T + 78961*T^2"
    std::string str(const std::string& var = "T") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            BigInt a = abs(c[i]);
            std::string term;
            if (i == 0 || a != 1) term = a.str();
            if (i > 0) term += (term.empty() ? "" : "*") + var + (i > 1 ? "^" + std::to_string(i) : "");
            if (s.empty()) s = (c[i] < 0 ? "-" : "") + term;
            else s += (c[i] < 0 ? " - " : " + ") + term;
        }
        return s;
    }
};

/// a / b when the quotient exists in Z[T]; b nonzero.
inline std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> rem = a.c, quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const BigInt& lead = b.c.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top % lead != 0) return std::nullopt;
        BigInt f = top / lead;
        quo[static_cast<std::size_t>(k)] = f;
        if (f != 0)
            for (std::size_t j = 0; j < b.c.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * b.c[j];
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(quo));
}

/// Phi_n
inline IntPoly cyclotomic(unsigned n) {
    static std::map<unsigned, IntPoly> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<BigInt> xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    IntPoly r(xn);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) r = *exact_div(r, cyclotomic(d));
    std::lock_guard<std::mutex> lock(m);
    cache[n] = r;
    return r;
}

/// x^n - 1
inline IntPoly x_pow_minus_one(unsigned n) {
    std::vector<BigInt> v(n + 1, 0);
    v[0] = -1;
    v[n] = 1;
    return IntPoly(std::move(v));
}

using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

/// GCD over Q, scaled to integer coefficients with constant term 1 when T does not divide it.
inline IntPoly gcd_over_q(const IntPoly& x, const IntPoly& y) {
    RatPoly a(x.c.begin(), x.c.end()), b(y.c.begin(), y.c.end());
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return {};
    // make primitive integral
    Rational scale = a[0] != 0 ? a[0] : a.back();
    BigInt den_lcm = 1;
    for (auto& v : a) {
        v /= scale;
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(v));
    }
    std::vector<BigInt> out;
    BigInt g = 0;
    for (auto& v : a) {
        out.push_back(boost::multiprecision::numerator(Rational(v * den_lcm)));
        g = boost::multiprecision::gcd(g, out.back());
    }
    for (auto& v : out) v /= g;
    if (out[0] < 0)
        for (auto& v : out) v = -v;
    return IntPoly(std::move(out));
}

}  // namespace bhk
