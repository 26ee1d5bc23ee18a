#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "bhk/invertible/symmetry.hpp"

namespace bhk::hyper {

using inv::frac;

/// Multisets alpha, beta in [0,1) of equal size, disjoint mod Z. Stored sorted.
struct HypergeometricParameters {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;

    std::size_t d() const { return alpha.size(); }

    static HypergeometricParameters make(std::vector<Rational> a, std::vector<Rational> b) {
        if (a.size() != b.size())
            throw PreconditionError("alpha and beta have different sizes (" + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
        for (auto& v : a) v = frac(v);
        for (auto& v : b) v = frac(v);
        for (const auto& x : a)
            for (const auto& y : b)
                if (x == y) throw PreconditionError("alpha and beta are not disjoint mod Z: both contain " + bhk::to_string(x));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return {std::move(a), std::move(b)};
    }

    /// Comma separated rationals, e.g. "1/4,1/2,3/4".
    static std::vector<Rational> parse_list(const std::string& text) {
        std::vector<Rational> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
            if (!item.empty()) out.push_back(parse_rational(item));
        }
        return out;
    }

    std::string str() const {
        auto list = [](const std::vector<Rational>& v) {
            std::string s;
            for (const auto& x : v) s += (s.empty() ? "" : ",") + bhk::to_string(x);
            return s;
        };
        return "(" + list(alpha) + "; " + list(beta) + ")";
    }

    std::uint64_t lcm_denominator() const {
        BigInt l = 1;
        for (const auto* v : {&alpha, &beta})
            for (const auto& x : *v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
        return static_cast<std::uint64_t>(l);
    }
};

namespace detail {

inline std::map<Rational, int> multiset(const std::vector<Rational>& v) {
    std::map<Rational, int> m;
    for (const auto& x : v) ++m[x];
    return m;
}

inline bool stable_under(const std::vector<Rational>& v, std::uint64_t c) {
    std::vector<Rational> w;
    for (const auto& x : v) w.push_back(frac(x * Rational(c)));
    return multiset(v) == multiset(w);
}

}  // namespace detail

struct FieldOfDefinition {
    bool over_q = false;
    bool over_gaussian = false;  // contained in Q(i)
    std::uint64_t conductor = 1;  // lcm of denominators
    std::uint64_t degree = 1;     // [K : Q]
    std::string description;
};

/// K generated by the coefficients of prod (x - e^{2 pi i alpha_j}) and
/// prod (x - e^{2 pi i beta_j}): the fixed field in Q(zeta_L) of the units
/// c mod L with c alpha = alpha and c beta = beta.
inline FieldOfDefinition field_of_definition(const HypergeometricParameters& h) {
    FieldOfDefinition out;
    const std::uint64_t l = h.lcm_denominator();
    out.conductor = l;
    std::uint64_t units = 0, stable = 0;
    bool gaussian = true;
    for (std::uint64_t c = 1; c <= l; ++c) {
        if (std::gcd(c, l) != 1) continue;
        ++units;
        bool s = detail::stable_under(h.alpha, c) && detail::stable_under(h.beta, c);
        stable += s;
        // Q(i) is fixed by exactly the c = 1 mod 4 (when 4 | L)
        if (!s && (l % 4 != 0 || c % 4 == 1)) gaussian = false;
    }
    if (l == 0) units = stable = 1;
    out.degree = stable ? units / stable : 0;
    out.over_q = stable == units;
    out.over_gaussian = out.over_q || gaussian;
    if (out.over_q) out.description = "Q";
    else if (out.over_gaussian && out.degree == 2) out.description = "Q(i)";
    else out.description = "degree " + std::to_string(out.degree) + " subfield of Q(zeta_" + std::to_string(l) + ")";
    return out;
}

inline bool defined_over_q(const HypergeometricParameters& h) { return field_of_definition(h).over_q; }

/// First denominator sharing a factor with q, if any.
inline std::optional<std::uint64_t> offending_denominator(std::uint64_t q, const HypergeometricParameters& h) {
    for (const auto* v : {&h.alpha, &h.beta})
        for (const auto& x : *v) {
            auto den = static_cast<std::uint64_t>(boost::multiprecision::denominator(x));
            if (std::gcd(den, q) != 1) return den;
        }
    return std::nullopt;
}

/// gcd(q, denominators) = 1.
inline bool is_good(std::uint64_t q, const HypergeometricParameters& h) { return !offending_denominator(q, h); }

struct Splitting {
    std::vector<Rational> alpha0, alpha1, beta0, beta1;  // alpha1, beta1 are the primed parts
};

namespace detail {

inline bool closed_under_galois(const std::vector<Rational>& v) {
    BigInt l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    auto lv = static_cast<std::uint64_t>(l);
    for (std::uint64_t c = 1; c <= lv; ++c)
        if (std::gcd(c, lv) == 1 && !stable_under(v, c)) return false;
    return true;
}

/// Largest sub-multiset defined over Q whose complement has (q-1) x integral.
inline std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> split_one(const std::vector<Rational>& v,
                                                                                         std::uint64_t q) {
    const std::size_t n = v.size();
    std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Rational> keep, rest;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? keep : rest).push_back(v[i]);
        if (best && keep.size() <= best->first.size()) continue;
        bool ok = closed_under_galois(keep);
        for (const auto& x : rest) ok &= boost::multiprecision::denominator(x * Rational(q - 1)) == 1;
        if (ok) best = std::pair{keep, rest};
    }
    return best;
}

}  // namespace detail

/// A partition alpha = alpha0 + alpha', beta = beta0 + beta' with alpha0, beta0
/// defined over Q and (q-1) alpha', (q-1) beta' integral; the Q-parts are taken maximal.
inline std::optional<Splitting> is_splittable(std::uint64_t q, const HypergeometricParameters& h) {
    if (h.d() > 16) throw CapExceeded("splitting search limited to d <= 16");
    auto a = detail::split_one(h.alpha, q);
    auto b = detail::split_one(h.beta, q);
    if (!a || !b) return std::nullopt;
    return Splitting{a->first, a->second, b->first, b->second};
}

}  // namespace bhk::hyper
