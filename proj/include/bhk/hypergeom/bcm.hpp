#pragma once

#include <map>

#include "bhk/hypergeom/params.hpp"
#include "bhk/zeta/int_poly.hpp"

namespace bhk::hyper {

/// prod (x^{p_j} - 1) / prod (x^{q_j} - 1) = prod (x - e(alpha_j)) / prod (x - e(beta_j)).
struct BcmData {
    std::vector<std::uint64_t> p_list;
    std::vector<std::uint64_t> q_list;
    Rational M;       // prod p_j^{p_j} / prod q_j^{q_j}
    int epsilon = 1;  // (-1)^{sum q_j}

    /// Multiplicity of e^{2 pi i m / n} as a root of D(x) = gcd of the two products.
    std::uint64_t s(std::int64_t m, std::uint64_t n) const {
        const auto r = static_cast<unsigned __int128>(arith::mod(m, static_cast<std::int64_t>(n)));
        auto count = [&](const std::vector<std::uint64_t>& v) {
            std::uint64_t c = 0;
            for (auto x : v) c += (x * r) % n == 0;
            return c;
        };
        return std::min(count(p_list), count(q_list));
    }
    std::uint64_t s0() const { return std::min(p_list.size(), q_list.size()); }

    IntPoly numerator() const {
        IntPoly r = IntPoly::constant(1);
        for (auto x : p_list) r = r * x_pow_minus_one(static_cast<unsigned>(x));
        return r;
    }
    IntPoly denominator() const {
        IntPoly r = IntPoly::constant(1);
        for (auto x : q_list) r = r * x_pow_minus_one(static_cast<unsigned>(x));
        return r;
    }
    /// D(x), monic
    IntPoly d_poly() const {
        IntPoly d = gcd_over_q(numerator(), denominator());
        if (!d.is_zero() && d.c.back() < 0) d = IntPoly::constant(-1) * d;
        return d;
    }

    std::string str() const {
        auto list = [](const std::vector<std::uint64_t>& v) {
            std::string s;
            for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
            return "(" + s + ")";
        };
        return "p=" + list(p_list) + " q=" + list(q_list) + " M=" + bhk::to_string(M) + " eps=" + std::to_string(epsilon);
    }
};

namespace detail {

/// n -> number of entries with exact denominator n, divided by phi(n).
inline std::map<std::uint64_t, std::int64_t> cyclotomic_exponents(const std::vector<Rational>& v) {
    std::map<std::uint64_t, std::int64_t> count;
    for (const auto& x : v) ++count[static_cast<std::uint64_t>(boost::multiprecision::denominator(x))];
    std::map<std::uint64_t, std::int64_t> out;
    for (auto [n, c] : count) {
        auto phi = static_cast<std::int64_t>(arith::euler_phi(n));
        if (c % phi != 0) throw PreconditionError("parameters are not defined over Q (denominator " + std::to_string(n) + ")");
        out[n] = c / phi;
    }
    return out;
}

inline IntPoly cyclotomic_product(const std::map<std::uint64_t, std::int64_t>& e) {
    IntPoly r = IntPoly::constant(1);
    for (auto [n, k] : e) r = r * cyclotomic(static_cast<unsigned>(n)).pow(static_cast<unsigned>(k));
    return r;
}

}  // namespace detail

/// Exact check of prod (x^{p_j}-1) * B(x) = prod (x^{q_j}-1) * A(x).
inline bool bcm_identity_holds(const HypergeometricParameters& h, const BcmData& b) {
    auto ca = detail::cyclotomic_exponents(h.alpha);
    auto cb = detail::cyclotomic_exponents(h.beta);
    return b.numerator() * detail::cyclotomic_product(cb) == b.denominator() * detail::cyclotomic_product(ca);
}

/// p_j, q_j by Moebius inversion: e_m = sum_{m | n} mu(n/m) c_n, where
/// prod Phi_n^{c_n} is the alpha product over the beta product.
inline BcmData bcm_data(const HypergeometricParameters& h) {
    if (!defined_over_q(h)) throw PreconditionError("parameters " + h.str() + " are not defined over Q");
    auto ca = detail::cyclotomic_exponents(h.alpha);
    auto cb = detail::cyclotomic_exponents(h.beta);
    std::map<std::uint64_t, std::int64_t> c = ca;
    for (auto [n, k] : cb) c[n] -= k;
    std::uint64_t top = 1;
    for (auto [n, k] : c) top = std::max(top, n);
    BcmData out;
    out.M = 1;
    std::uint64_t qsum = 0;
    for (std::uint64_t m = 1; m <= top; ++m) {
        std::int64_t e = 0;
        for (auto [n, k] : c)
            if (n % m == 0) e += arith::moebius(n / m) * k;
        for (std::int64_t i = 0; i < std::abs(e); ++i) {
            const Rational mm(BigInt(boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(m))));
            if (e > 0) {
                out.p_list.push_back(m);
                out.M *= mm;
            } else {
                out.q_list.push_back(m);
                out.M /= mm;
                qsum += m;
            }
        }
    }
    out.epsilon = qsum % 2 ? -1 : 1;
    if (!bcm_identity_holds(h, out)) throw Error("BCM resolution failed for " + h.str());
    return out;
}

}  // namespace bhk::hyper
