#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "bhk/common.hpp"

namespace bhk::ff {

/// Field elements are encoded as integers sum c_i p^i, where c_i is the
/// coefficient of X^i in F_p[X]/(modulus). For prime fields this is the residue.
using Element = std::uint32_t;

/// Largest supported field order (covers 281^3).
inline constexpr std::uint64_t kFieldCap = 25'000'000;

struct PrimePower {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::uint64_t q = 0;

    static PrimePower make(std::uint64_t p, unsigned r) {
        if (!arith::is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
        if (r == 0) throw PreconditionError("field degree must be positive");
        std::uint64_t q = arith::checked_pow(p, r, std::uint64_t{1} << 62);
        if (q > (std::uint64_t{1} << 62)) throw CapExceeded("p^r overflows");
        return {p, r, q};
    }

    /// Recognize q as a prime power.
    static PrimePower from_order(std::uint64_t q) {
        if (q < 2) throw PreconditionError(std::to_string(q) + " is not a prime power");
        auto factors = arith::prime_factors(q);
        if (factors.size() != 1) throw PreconditionError(std::to_string(q) + " is not a prime power");
        unsigned r = 0;
        for (std::uint64_t v = q; v > 1; v /= factors[0]) ++r;
        return make(factors[0], r);
    }

    /// Accepts "q" (a prime power) or "p^r".
    static PrimePower parse(const std::string& text) {
        try {
            auto caret = text.find('^');
            if (caret == std::string::npos) return from_order(std::stoull(text));
            return make(std::stoull(text.substr(0, caret)), static_cast<unsigned>(std::stoul(text.substr(caret + 1))));
        } catch (const std::logic_error&) {
            throw PreconditionError("cannot parse field order '" + text + "'");
        }
    }

    std::string str() const { return r == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(r); }

    bool operator==(const PrimePower&) const = default;
};

/// Deterministic alternatives: rank 0 is the smallest irreducible modulus and the
/// smallest primitive element; rank k skips the first k candidates.
struct FieldOptions {
    unsigned modulus_rank = 0;
    unsigned generator_rank = 0;
    auto operator<=>(const FieldOptions&) const = default;
};

namespace detail {

using Poly = std::vector<std::uint64_t>;  // coefficients low-to-high over F_p

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_rem(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    Poly g = f;
    trim(g);
    std::uint64_t lead_inv = arith::invmod(static_cast<std::int64_t>(g.back()), static_cast<std::int64_t>(p));
    while (a.size() >= g.size()) {
        std::uint64_t c = arith::mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - arith::mulmod(c, g[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + arith::mulmod(a[i], b[j], p)) % p;
    return poly_rem(std::move(prod), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_rem(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin's test: f (monic, degree r) is irreducible iff X^(p^r) = X mod f and
/// gcd(X^(p^(r/l)) - X, f) = 1 for every prime l | r.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const unsigned r = static_cast<unsigned>(f.size() - 1);
    auto frobenius_power = [&](unsigned k) {
        Poly x{0, 1};
        for (unsigned i = 0; i < k; ++i) x = poly_powmod(x, p, f, p);
        return x;
    };
    Poly xr = frobenius_power(r);
    Poly x = poly_rem(Poly{0, 1}, f, p);
    if (xr != x) return false;
    for (std::uint64_t l : arith::prime_factors(r)) {
        Poly h = frobenius_power(static_cast<unsigned>(r / l));
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        Poly g = poly_gcd(h, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

class FieldTable;
FieldTable build_field(std::uint64_t p, unsigned r, FieldOptions options = {});

/// A realized finite field F_q with exp/log and trace tables. Immutable after
/// construction.
class FieldTable {
   public:
    const PrimePower& prime_power() const { return pp_; }
    std::uint64_t p() const { return pp_.p; }
    unsigned r() const { return pp_.r; }
    std::uint64_t q() const { return pp_.q; }
    /// Order of the multiplicative group, q - 1.
    std::uint64_t order() const { return pp_.q - 1; }
    bool is_prime_field() const { return pp_.r == 1; }
    const FieldOptions& options() const { return options_; }

    /// Monic modulus, coefficients low-to-high (size r + 1).
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    Element generator() const { return generator_; }

    Element exp(std::uint64_t k) const { return exp_[k % order()]; }
    /// Discrete log to the fixed generator; x must be nonzero.
    std::uint64_t log(Element x) const {
        if (x == 0) throw PreconditionError("discrete log of zero");
        return log_[x];
    }
    std::uint64_t log_unchecked(Element x) const { return log_[x]; }

    /// Absolute trace to F_p.
    unsigned trace(Element x) const { return pp_.r == 1 ? static_cast<unsigned>(x) : trace_[x]; }

    Element add(Element a, Element b) const {
        if (pp_.r == 1) {
            std::uint64_t s = std::uint64_t{a} + b;
            return static_cast<Element>(s >= pp_.p ? s - pp_.p : s);
        }
        Element out = 0, place = 1;
        for (unsigned i = 0; i < pp_.r; ++i) {
            std::uint64_t da = a % pp_.p, db = b % pp_.p;
            a /= static_cast<Element>(pp_.p);
            b /= static_cast<Element>(pp_.p);
            out += static_cast<Element>((da + db) % pp_.p) * place;
            place *= static_cast<Element>(pp_.p);
        }
        return out;
    }
    Element neg(Element a) const {
        if (pp_.r == 1) return a == 0 ? 0 : static_cast<Element>(pp_.p - a);
        Element out = 0, place = 1;
        for (unsigned i = 0; i < pp_.r; ++i) {
            std::uint64_t da = a % pp_.p;
            a /= static_cast<Element>(pp_.p);
            out += static_cast<Element>((pp_.p - da) % pp_.p) * place;
            place *= static_cast<Element>(pp_.p);
        }
        return out;
    }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        if (pp_.r == 1) return static_cast<Element>(std::uint64_t{a} * b % pp_.p);
        std::uint64_t k = std::uint64_t{log_[a]} + log_[b];
        if (k >= order()) k -= order();
        return exp_[k];
    }
    Element inv(Element a) const {
        if (a == 0) throw PreconditionError("inverse of zero");
        std::uint64_t k = log_[a];
        return exp_[k == 0 ? 0 : order() - k];
    }
    /// a^e with 0^0 = 1; negative exponents need a != 0.
    Element pow(Element a, std::int64_t e) const {
        if (a == 0) {
            if (e < 0) throw PreconditionError("negative power of zero");
            return e == 0 ? 1 : 0;
        }
        auto k = static_cast<std::uint64_t>(arith::mod(e, static_cast<std::int64_t>(order())));
        return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * k) % order())];
    }

    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t c) const { return static_cast<Element>(arith::mod(c, static_cast<std::int64_t>(pp_.p))); }
    /// Validates an encoded element.
    Element element(std::uint64_t code) const {
        if (code >= pp_.q) throw PreconditionError("element code " + std::to_string(code) + " outside F_" + pp_.str());
        return static_cast<Element>(code);
    }
    bool in_prime_subfield(Element x) const { return x < pp_.p; }

    std::vector<unsigned> digits(Element x) const {
        std::vector<unsigned> d(pp_.r);
        for (unsigned i = 0; i < pp_.r; ++i) {
            d[i] = static_cast<unsigned>(x % pp_.p);
            x /= static_cast<Element>(pp_.p);
        }
        return d;
    }

    /// Multiplication by polynomial arithmetic, independent of the log tables.
    Element mul_by_polynomial(Element a, Element b) const {
        return encode(detail::poly_mulmod(to_poly(a), to_poly(b), modulus_, pp_.p));
    }

    /// "F_q: modulus [...] generator g" -- identifies the choices fixing the characters.
    std::string fingerprint() const {
        std::string out = "F_" + pp_.str() + " modulus [";
        for (std::size_t i = 0; i < modulus_.size(); ++i) out += (i ? "," : "") + std::to_string(modulus_[i]);
        return out + "] generator " + std::to_string(generator_);
    }

   private:
    friend FieldTable build_field(std::uint64_t, unsigned, FieldOptions);

    detail::Poly to_poly(Element x) const {
        detail::Poly out(pp_.r);
        for (unsigned i = 0; i < pp_.r; ++i) {
            out[i] = x % pp_.p;
            x /= static_cast<Element>(pp_.p);
        }
        detail::trim(out);
        return out;
    }
    Element encode(const detail::Poly& poly) const {
        Element out = 0, place = 1;
        for (std::size_t i = 0; i < poly.size() && i < pp_.r; ++i) {
            out += static_cast<Element>(poly[i]) * place;
            place *= static_cast<Element>(pp_.p);
        }
        return out;
    }

    PrimePower pp_;
    FieldOptions options_;
    std::vector<std::uint64_t> modulus_;
    Element generator_ = 0;
    std::vector<Element> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> trace_;  // only for r > 1, where p < 2^16
};

/// Builds F_{p^r}: the modulus is the rank-th monic irreducible of degree r in
/// increasing integer order of its low-to-high coefficient vector; the generator
/// is the rank-th element of order q - 1 in the same ordering.
inline FieldTable build_field(std::uint64_t p, unsigned r, FieldOptions options) {
    FieldTable f;
    f.pp_ = PrimePower::make(p, r);
    if (f.pp_.q > kFieldCap)
        throw CapExceeded("F_" + f.pp_.str() + " has " + std::to_string(f.pp_.q) + " elements; cap is " +
                          std::to_string(kFieldCap));
    f.options_ = options;
    const std::uint64_t q = f.pp_.q, n = q - 1;

    // Modulus.
    unsigned seen = 0;
    for (std::uint64_t k = 0; k < q; ++k) {
        detail::Poly cand(r + 1);
        std::uint64_t v = k;
        for (unsigned i = 0; i < r; ++i) {
            cand[i] = v % p;
            v /= p;
        }
        cand[r] = 1;
        if (r == 1 || detail::is_irreducible(cand, p)) {
            if (seen++ == options.modulus_rank) {
                f.modulus_ = cand;
                break;
            }
        }
    }
    if (f.modulus_.empty()) throw PreconditionError("not enough irreducible polynomials for the requested rank");

    // Generator: order q - 1 iff x^((q-1)/l) != 1 for every prime l | q - 1.
    const auto factors = arith::prime_factors(n);
    auto pow_slow = [&](Element x, std::uint64_t e) -> Element {
        if (r == 1) return static_cast<Element>(arith::powmod(x, e, p));
        return f.encode(detail::poly_powmod(f.to_poly(x), e, f.modulus_, p));
    };
    seen = 0;
    bool found = false;
    for (std::uint64_t x = 1; x < q && !found; ++x) {
        bool primitive = true;
        for (std::uint64_t l : factors) {
            if (pow_slow(static_cast<Element>(x), n / l) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive && seen++ == options.generator_rank) {
            f.generator_ = static_cast<Element>(x);
            found = true;
        }
    }
    if (!found) throw PreconditionError("not enough primitive elements for the requested rank");

    // exp/log tables. Multiplication by the generator is F_p-linear: precompute
    // the images of the basis X^i.
    f.exp_.resize(n);
    f.log_.assign(q, 0);
    if (r == 1) {
        std::uint64_t e = 1;
        for (std::uint64_t k = 0; k < n; ++k) {
            f.exp_[k] = static_cast<Element>(e);
            f.log_[e] = static_cast<std::uint32_t>(k);
            e = e * f.generator_ % p;
        }
    } else {
        std::vector<std::array<std::uint32_t, 32>> images(r);
        if (r > 32) throw CapExceeded("extension degree above 32");
        for (unsigned i = 0; i < r; ++i) {
            detail::Poly xi(i + 1, 0);
            xi[i] = 1;
            detail::Poly img = detail::poly_mulmod(xi, f.to_poly(f.generator_), f.modulus_, p);
            images[i].fill(0);
            for (std::size_t j = 0; j < img.size(); ++j) images[i][j] = static_cast<std::uint32_t>(img[j]);
        }
        std::array<std::uint64_t, 32> cur{}, next{};
        cur[0] = 1;
        for (std::uint64_t k = 0; k < n; ++k) {
            Element code = 0, place = 1;
            for (unsigned i = 0; i < r; ++i) {
                code += static_cast<Element>(cur[i]) * place;
                place *= static_cast<Element>(p);
            }
            f.exp_[k] = code;
            f.log_[code] = static_cast<std::uint32_t>(k);
            next.fill(0);
            for (unsigned i = 0; i < r; ++i) {
                if (cur[i] == 0) continue;
                for (unsigned j = 0; j < r; ++j) next[j] += cur[i] * images[i][j];
            }
            for (unsigned j = 0; j < r; ++j) cur[j] = next[j] % p;
        }
        // Trace of the basis X^i by direct Frobenius power sums, then linearity.
        std::vector<std::uint64_t> basis_trace(r);
        for (unsigned i = 0; i < r; ++i) {
            detail::Poly xi(i + 1, 0);
            xi[i] = 1;
            detail::Poly acc, y = xi;
            acc.assign(r, 0);
            for (unsigned k = 0; k < r; ++k) {
                for (std::size_t j = 0; j < y.size(); ++j) acc[j] = (acc[j] + y[j]) % p;
                y = detail::poly_powmod(y, p, f.modulus_, p);
            }
            detail::trim(acc);
            if (acc.size() > 1) throw Error("trace left the prime field");
            basis_trace[i] = acc.empty() ? 0 : acc[0];
        }
        f.trace_.resize(q);
        for (std::uint64_t x = 0; x < q; ++x) {
            std::uint64_t v = x, t = 0;
            for (unsigned i = 0; i < r; ++i) {
                t += (v % p) * basis_trace[i];
                v /= p;
            }
            f.trace_[x] = static_cast<std::uint16_t>(t % p);
        }
    }
    return f;
}

inline unsigned trace(Element x, const FieldTable& f) { return f.trace(x); }

/// Theta(x) = exp(2 pi i Tr(x) / p).
inline std::complex<double> additive_character(Element x, const FieldTable& f) {
    return std::polar(1.0, 2.0 * std::numbers::pi * f.trace(x) / static_cast<double>(f.p()));
}

/// omega(x)^m = exp(2 pi i m log(x) / (q - 1)); x must be nonzero.
inline std::complex<double> mult_character_power(Element x, std::int64_t m, const FieldTable& f) {
    const auto n = static_cast<std::int64_t>(f.order());
    std::uint64_t k = static_cast<std::uint64_t>(
        (static_cast<__int128>(f.log(x)) * arith::mod(m, n)) % n);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace bhk::ff
