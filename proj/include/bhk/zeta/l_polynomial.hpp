#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhk/hypergeom/sums.hpp"
#include "bhk/zeta/int_poly.hpp"

namespace bhk::zeta {

using hyper::HypergeometricParameters;

/// Quadratic characters used as twists, evaluated at a prime q.
enum class Character { PhiMinus1, PhiPsi, PhiSqrtMinus1 };

inline const char* to_string(Character c) {
    switch (c) {
        case Character::PhiMinus1: return "phi_-1";
        case Character::PhiPsi: return "phi_psi";
        case Character::PhiSqrtMinus1: return "phi_sqrt-1";
    }
    return "?";
}

/// s_r -> sign^r * prod chi(q)^r * (tate ? q^r : 1) * s_r.
struct Twist {
    std::vector<Character> characters;
    bool tate = false;
    int sign = 1;
    std::int64_t psi = 0;  // for PhiPsi

    std::string str() const {
        std::string s;
        for (auto c : characters) s += (s.empty() ? "" : "*") + std::string(to_string(c));
        if (tate) s += std::string(s.empty() ? "" : ", ") + "s-1";
        if (sign < 0) s += std::string(s.empty() ? "" : ", ") + "sign -1";
        return s.empty() ? "none" : s;
    }
};

/// chi(q) for a prime q; throws where the character is ramified or q is inert.
inline int character_value(Character c, std::uint64_t q, std::int64_t psi = 0) {
    if (!arith::is_prime(q) || q == 2) throw PreconditionError("characters are evaluated at odd primes, got " + std::to_string(q));
    switch (c) {
        case Character::PhiMinus1: return ((q - 1) / 2) % 2 ? -1 : 1;
        case Character::PhiPsi: {
            int v = arith::legendre(psi, q);
            if (v == 0) throw PreconditionError("phi_psi is ramified at q = " + std::to_string(q));
            return v;
        }
        case Character::PhiSqrtMinus1:
            if (q % 4 != 1)
                throw PreconditionError("phi_sqrt-1 needs a split prime q = 1 mod 4 (inert primes are not supported)");
            return ((q - 1) / 4) % 2 ? -1 : 1;
    }
    return 1;
}

inline Rational twist_factor(const Twist& tw, std::uint64_t q, unsigned r) {
    int chi = tw.sign;
    for (auto c : tw.characters) chi *= character_value(c, q, tw.psi);
    Rational f = (r % 2 && chi < 0) ? -1 : 1;
    if (tw.tate) f *= Rational(BigInt(boost::multiprecision::pow(BigInt(q), r)));
    return f;
}

/// Integer polynomial with constant term 1 and reciprocal roots of absolute value q^{weight/2}.
struct LPolynomial {
    IntPoly poly;
    int degree = 0;
    int weight = 2;
    std::string provenance;
    std::vector<Rational> power_sums;     // s_1 .. s_k actually evaluated
    bool completed = false;               // top coefficients from the functional equation
    std::optional<bool> polynomial_check;  // T^{degree+1} coefficient vanishes; empty when above the cap
    int functional_sign = 0;              // epsilon of the functional equation, when known
};

/// exp(-sum_r s_r T^r / r) up to T^n, exact.
inline std::vector<Rational> newton_coefficients(const std::vector<Rational>& s, std::size_t n) {
    std::vector<Rational> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= n && k <= s.size(); ++k) {
        Rational acc = 0;
        for (std::size_t r = 1; r <= k; ++r) acc += s[r - 1] * c[k - r];
        c[k] = -acc / Rational(k);
    }
    return c;
}

/// Power sums of the reciprocal roots of P: the inverse of newton_coefficients.
inline std::vector<Rational> power_sums_of(const IntPoly& p, std::size_t n) {
    std::vector<Rational> s(n, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = Rational(k) * Rational(p.coeff(k));
        for (std::size_t r = 1; r < k; ++r) acc += s[r - 1] * Rational(p.coeff(k - r));
        s[k - 1] = -acc;
    }
    return s;
}

namespace detail {

inline IntPoly to_int_poly(const std::vector<Rational>& c, const std::string& what) {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (boost::multiprecision::denominator(c[i]) != 1)
            throw ResidualError(what + ": coefficient of T^" + std::to_string(i) + " is " + bhk::to_string(c[i]) + ", not integral");
        out.push_back(boost::multiprecision::numerator(c[i]));
    }
    return IntPoly(std::move(out));
}

}  // namespace detail

/// Candidates c_0..c_n with c_{n-i} = eps q^{w(n-2i)/2} c_i for eps = +-1, extending
/// the known coefficients c_0..c_k; knowns that contradict the equation rule eps out.
inline std::vector<std::pair<int, IntPoly>> complete_by_functional_equation(const std::vector<BigInt>& known, int n,
                                                                           std::uint64_t q, int weight) {
    if (weight % 2) throw PreconditionError("functional-equation completion needs even weight");
    const int k = static_cast<int>(known.size()) - 1;
    if (2 * k + 1 < n) throw PreconditionError("too few known coefficients to complete a degree " + std::to_string(n) + " polynomial");
    std::vector<std::pair<int, IntPoly>> out;
    for (int eps : {1, -1}) {
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
        bool ok = true;
        for (int i = 0; i <= n; ++i) {
            const int j = n - i;
            const BigInt scale = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(std::abs(n - 2 * j) * weight / 2));
            // c_i = eps q^{w(n-2j)/2} c_j with j = n - i
            if (i <= k) {
                c[static_cast<std::size_t>(i)] = known[static_cast<std::size_t>(i)];
                if (j <= k) {
                    BigInt lhs = known[static_cast<std::size_t>(i)];
                    BigInt rhs = known[static_cast<std::size_t>(j)];
                    if (n - 2 * j >= 0) ok &= lhs == eps * scale * rhs;
                    else ok &= lhs * scale == eps * rhs;
                }
            } else {
                c[static_cast<std::size_t>(i)] = eps * scale * known[static_cast<std::size_t>(j)];
            }
        }
        if (ok) out.emplace_back(eps, IntPoly(std::move(c)));
    }
    return out;
}

struct LOptions {
    hyper::Definition definition = hyper::Definition::Bcm;
    hyper::SumOptions sums;
    ff::FieldOptions field;
    bool allow_completion = false;  // complete above the field cap from the functional equation
    int weight = 2;
    unsigned max_power = 0;  // largest r with H over F_{q^r} evaluated; 0: up to the field cap
    ff::FieldCache* cache = nullptr;  // nullptr: the global cache
};

/// s_r = twist(r) * H_{q^r}(alpha; beta | t) for r = 1..count, t an element of F_q lifted to F_{q^r}.
inline std::vector<Rational> twisted_power_sums(const HypergeometricParameters& h, std::int64_t t, std::uint64_t q, unsigned count,
                                                const Twist& tw, const LOptions& o = {}) {
    ff::FieldCache& cache = o.cache ? *o.cache : ff::FieldCache::global();
    std::vector<Rational> s;
    for (unsigned r = 1; r <= count; ++r) {
        auto g = cache.gauss(q, r, o.field);
        const auto& f = *g->field;
        const ff::Element te = f.from_int(t);
        if (te == 0) throw PreconditionError("t = 0 in F_" + std::to_string(q));
        auto v = hyper::hyper_sum(o.definition, *g, h, te, o.sums);
        if (!v.is_real()) throw ResidualError("H over F_" + f.prime_power().str() + " is not rational: " + v.str());
        s.push_back(v.re * twist_factor(tw, q, r));
    }
    return s;
}

inline bool within_cap(std::uint64_t q, unsigned r) { return arith::checked_pow(q, r, ff::kFieldCap) <= ff::kFieldCap; }

/// exp(-sum_r s_r T^r / r) truncated at degree d, s_r the twisted sums over F_{q^r}.
inline LPolynomial twisted_l_polynomial(const HypergeometricParameters& h, std::int64_t t, std::uint64_t q, int degree,
                                        const Twist& tw, const LOptions& o = {}) {
    if (!arith::is_prime(q)) throw PreconditionError("L-polynomials are built over prime q, got " + std::to_string(q));
    LPolynomial out;
    out.degree = degree;
    out.weight = o.weight;
    out.provenance = "H" + h.str() + " twist " + tw.str();
    if (degree == 0) {
        out.poly = IntPoly::constant(1);
        return out;
    }
    unsigned reachable = 0;
    while (reachable < static_cast<unsigned>(degree) + 1 && within_cap(q, reachable + 1) &&
           (o.max_power == 0 || reachable < o.max_power))
        ++reachable;
    if (reachable < static_cast<unsigned>(degree)) {
        if (!o.allow_completion)
            throw CapExceeded("degree " + std::to_string(degree) + " needs H over F_" + std::to_string(q) + "^" +
                              std::to_string(degree) + ", above the field cap or the power limit");
        if (2 * reachable + 1 < static_cast<unsigned>(degree))
            throw CapExceeded("too few power sums below the field cap to complete degree " + std::to_string(degree));
    }
    out.power_sums = twisted_power_sums(h, t, q, reachable, tw, o);
    const std::size_t known = std::min<std::size_t>(reachable, static_cast<std::size_t>(degree));
    auto c = newton_coefficients(out.power_sums, std::min<std::size_t>(reachable, static_cast<std::size_t>(degree) + 1));
    if (reachable > static_cast<unsigned>(degree)) {
        out.polynomial_check = c[static_cast<std::size_t>(degree) + 1] == 0;
        if (!*out.polynomial_check)
            throw ResidualError(out.provenance + ": T^" + std::to_string(degree + 1) + " coefficient " +
                                bhk::to_string(c[static_cast<std::size_t>(degree) + 1]) + " does not vanish");
        c.pop_back();
    }
    if (known == static_cast<std::size_t>(degree)) {
        out.poly = detail::to_int_poly(c, out.provenance);
        return out;
    }
    c.resize(known + 1);
    auto ints = detail::to_int_poly(c, out.provenance);
    std::vector<BigInt> kc(known + 1, 0);
    for (std::size_t i = 0; i <= known; ++i) kc[i] = ints.coeff(i);
    auto cands = complete_by_functional_equation(kc, degree, q, o.weight);
    if (cands.empty()) throw ResidualError(out.provenance + ": known coefficients contradict the functional equation");
    if (cands.size() > 1)
        throw ResidualError(out.provenance + ": the functional-equation sign is not determined by the available power sums");
    out.functional_sign = cands[0].first;
    out.poly = cands[0].second;
    out.completed = true;
    return out;
}

inline LPolynomial l_polynomial(const HypergeometricParameters& h, std::int64_t t, std::uint64_t q, int degree,
                                const LOptions& o = {}) {
    return twisted_l_polynomial(h, t, q, degree, Twist{}, o);
}

}  // namespace bhk::zeta
