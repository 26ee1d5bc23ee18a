#pragma once

#include <string>

#include "bhk/counting/enumerate.hpp"
#include "bhk/invertible/symmetry.hpp"

namespace bhk::count {

enum class Variety { Affine, Projective };
enum class Method { Brute, Lastvar, Formula };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::Brute: return "brute";
        case Method::Lastvar: return "lastvar";
        case Method::Formula: return "formula";
    }
    return "?";
}
inline const char* to_string(Variety v) { return v == Variety::Affine ? "affine" : "projective"; }

struct CountResult {
    std::uint64_t count = 0;
    ff::PrimePower field;
    Variety variety = Variety::Affine;
    Method method = Method::Brute;
};

inline CountResult count_affine_bruteforce(const PencilSpec& s, const FieldTable& f, const CountConfig& cfg = {}) {
    return {affine_zeros_brute(to_poly(s, f), f, cfg), f.prime_power(), Variety::Affine, Method::Brute};
}

inline CountResult count_affine_lastvar(const PencilSpec& s, const FieldTable& f, const CountConfig& cfg = {}) {
    return {affine_zeros_lastvar(to_poly(s, f), f, cfg), f.prime_power(), Variety::Affine, Method::Lastvar};
}

namespace detail {

inline void require_standard_projective(const PencilSpec& s) {
    auto ws = inv::weights(s.matrix);
    for (auto w : ws.weights)
        if (w != ws.weights[0])
            throw PreconditionError("weighted projective space is not supported (weights differ)");
}

}  // namespace detail

/// Points of the projective hypersurface, summed over the charts
/// x_0 = .. = x_{c-1} = 0, x_c = 1.
inline CountResult count_projective(const PencilSpec& s, const FieldTable& f, const CountConfig& cfg = {},
                                    Method method = Method::Lastvar) {
    detail::require_standard_projective(s);
    auto g = to_poly(s, f);
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < g.nvars; ++c) {
        auto h = restrict_chart(g, c);
        total += method == Method::Brute ? affine_zeros_brute(h, f, cfg) : affine_zeros_lastvar(h, f, cfg);
    }
    return {total, f.prime_power(), Variety::Projective, method};
}

/// No projective point where F and every partial derivative vanish.
inline bool is_smooth_fiber(const PencilSpec& s, const FieldTable& f, const CountConfig& cfg = {}) {
    detail::require_standard_projective(s);
    auto g = to_poly(s, f);
    std::vector<SparsePoly> grad;
    for (std::size_t i = 0; i < g.nvars; ++i) grad.push_back(derivative(g, i, f));
    for (std::size_t c = 0; c < g.nvars; ++c) {
        auto h = restrict_chart(g, c);
        bool smooth = for_each_zero(h, f, cfg, [&](const std::vector<Element>& tail) {
            std::vector<Element> x(g.nvars, 0);
            x[c] = 1;
            std::copy(tail.begin(), tail.end(), x.begin() + static_cast<std::ptrdiff_t>(c) + 1);
            for (const auto& d : grad)
                if (evaluate(d, x, f) != 0) return true;
            return false;
        });
        if (!smooth) return false;
    }
    return true;
}

/// (-1)^n sum_{xi} (p-1)! / prod ((p-1) xi_i)! mod p, the affine count of F_A mod p.
/// With require_det_divides the hypothesis det A | p - 1 is enforced; otherwise only
/// integrality of every (p-1) xi_i is required.
inline std::uint64_t affine_count_mod_p(const ExponentMatrix& a, std::uint64_t p, bool require_det_divides = true) {
    if (!arith::is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    BigInt det = abs(inv::determinant(a));
    if (det == 0) throw ValidationError("exponent matrix is singular");
    if (require_det_divides && (p - 1) % static_cast<std::uint64_t>(det) != 0)
        throw PreconditionError("det A = " + det.str() + " does not divide p - 1 = " + std::to_string(p - 1));
    std::vector<std::uint64_t> fact(p, 1);
    for (std::uint64_t i = 1; i < p; ++i) fact[i] = arith::mulmod(fact[i - 1], i, p);
    auto xs = inv::xi_set(a);
    std::uint64_t sum = 0;
    for (const auto& xi : xs.elements) {
        std::uint64_t den = 1;
        for (const auto& c : xi.xi) {
            Rational k = c * Rational(p - 1);
            if (boost::multiprecision::denominator(k) != 1)
                throw PreconditionError("(p-1) xi is not integral for xi = " + xi.str());
            den = arith::mulmod(den, fact[static_cast<std::uint64_t>(boost::multiprecision::numerator(k))], p);
        }
        sum = (sum + arith::mulmod(fact[p - 1], arith::invmod(static_cast<std::int64_t>(den), static_cast<std::int64_t>(p)), p)) % p;
    }
    const std::size_t n = a.size() - 1;
    return n % 2 ? (p - sum) % p : sum;
}

struct CongruenceCounts {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool congruent = false;  // a = b mod q
};

/// Projective counts of the A and B pencils at psi, for Calabi-Yau A and B with
/// the same dual weights.
inline CongruenceCounts congruence_counts(const ExponentMatrix& a, const ExponentMatrix& b, std::int64_t psi, const FieldTable& f,
                                          const CountConfig& cfg = {}) {
    for (const auto* m : {&a, &b})
        if (!inv::is_calabi_yau(*m)) throw PreconditionError("congruence check needs Calabi-Yau matrices");
    if (inv::weights(a.transposed()) != inv::weights(b.transposed()))
        throw PreconditionError("dual weight systems differ");
    CongruenceCounts c;
    c.a = count_projective(PencilSpec::pencil(a, psi), f, cfg).count;
    c.b = count_projective(PencilSpec::pencil(b, psi), f, cfg).count;
    c.congruent = c.a % f.q() == c.b % f.q();
    return c;
}

/// count_projective(A, psi) = count_projective(B, psi) mod q.
inline bool congruence_check(const ExponentMatrix& a, const ExponentMatrix& b, std::int64_t psi, const FieldTable& f,
                             const CountConfig& cfg = {}) {
    return congruence_counts(a, b, psi, f, cfg).congruent;
}

}  // namespace bhk::count
