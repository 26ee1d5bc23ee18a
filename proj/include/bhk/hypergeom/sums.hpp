#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <thread>

#include "bhk/ff/field_cache.hpp"
#include "bhk/hypergeom/bcm.hpp"

namespace bhk::hyper {

using ff::Element;
using ff::FieldTable;
using ff::GaussSumTable;

struct SumOptions {
    double tolerance = 1e-6;  // residual bound is tolerance * q^{d/2}
    unsigned jobs = 0;        // 0: hardware concurrency
};

enum class Definition { Classic, Bcm };

inline const char* to_string(Definition d) { return d == Definition::Classic ? "classic" : "bcm"; }

/// A sum rounded to (re + i im) with q^k re, q^k im integral, k = q_power.
struct HyperSumValue {
    std::complex<double> raw;
    Rational re = 0;
    Rational im = 0;
    unsigned q_power = 0;
    double residual = 0;
    double bound = 0;
    bool exact = false;  // false when the field of definition is beyond Q(i)
    std::string field;

    bool is_real() const { return exact && im == 0; }
    bool is_integer() const { return is_real() && boost::multiprecision::denominator(re) == 1; }
    BigInt integer() const {
        if (!is_integer()) throw PreconditionError("hypergeometric value " + str() + " is not a rational integer");
        return boost::multiprecision::numerator(re);
    }
    std::string str() const {
        if (!exact) {
            std::ostringstream os;
            os.precision(17);
            os << raw.real() << (raw.imag() < 0 ? " - " : " + ") << std::abs(raw.imag()) << "*i";
            return os.str();
        }
        if (im == 0) return bhk::to_string(re);
        std::string s = re == 0 ? "" : bhk::to_string(re) + (im < 0 ? " - " : " + ");
        Rational a = re == 0 ? im : abs(im);
        return s + (a == 1 ? "" : bhk::to_string(a) + "*") + "i";
    }
    bool same_value(const HyperSumValue& o) const { return exact && o.exact && re == o.re && im == o.im; }
};

namespace detail {

inline std::complex<double> pairwise_sum(const std::complex<double>* v, std::size_t n) {
    if (n <= 16) {
        std::complex<double> s = 0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

inline constexpr std::uint64_t kSumChunk = 1 << 14;

/// Sum of term(m), m = 0 .. n-1, in fixed chunks reduced pairwise; the result
/// does not depend on the thread count.
template <class Term>
std::complex<double> deterministic_sum(std::uint64_t n, unsigned jobs, const Term& term) {
    const std::uint64_t nchunks = (n + kSumChunk - 1) / kSumChunk;
    std::vector<std::complex<double>> partial(nchunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        std::vector<std::complex<double>> buf(kSumChunk);
        for (std::uint64_t c; (c = next.fetch_add(1)) < nchunks;) {
            const std::uint64_t lo = c * kSumChunk, hi = std::min(n, lo + kSumChunk);
            for (std::uint64_t m = lo; m < hi; ++m) buf[m - lo] = term(m);
            partial[c] = pairwise_sum(buf.data(), hi - lo);
        }
    };
    unsigned nt = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    nt = static_cast<unsigned>(std::min<std::uint64_t>(nt, nchunks));
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return pairwise_sum(partial.data(), partial.size());
}

/// e^{2 pi i k / n}
inline std::complex<double> unit_root(std::uint64_t k, std::uint64_t n) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n));
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

/// Rounds z into K = Q or Q(i) with denominators q^k, smallest k <= d first. The
/// accepted residual is tolerance * q^{d/2}, clamped to 1/(4 q^k).
inline HyperSumValue round_value(std::complex<double> z, std::uint64_t q, std::size_t d, const FieldOfDefinition& fod,
                                 const SumOptions& o) {
    HyperSumValue v;
    v.raw = z;
    v.field = fod.description;
    v.bound = o.tolerance * std::pow(static_cast<double>(q), static_cast<double>(d) / 2.0);
    if (!fod.over_gaussian) return v;
    double best = INFINITY;
    for (unsigned k = 0; k <= d; ++k) {
        const double scale = std::pow(static_cast<double>(q), k);
        const double a = std::round(z.real() * scale);
        const double b = fod.over_q ? 0.0 : std::round(z.imag() * scale);
        if (std::abs(a) > 9e15 || std::abs(b) > 9e15) break;
        const double res = std::abs(z - std::complex<double>(a, b) / scale);
        best = std::min(best, res);
        if (res <= std::min(v.bound, 0.25 / scale)) {
            const Rational den(BigInt(boost::multiprecision::pow(BigInt(q), k)));
            v.re = Rational(BigInt(static_cast<std::int64_t>(a))) / den;
            v.im = Rational(BigInt(static_cast<std::int64_t>(b))) / den;
            v.q_power = k;
            v.residual = res;
            v.exact = true;
            return v;
        }
    }
    std::ostringstream os;
    os.precision(17);
    os << "value " << z << " does not round into " << fod.description << " (best residual " << best << ", bound "
       << v.bound << ")";
    throw ResidualError(os.str());
}

inline std::int64_t scaled_index(const Rational& x, std::uint64_t n, const char* name) {
    Rational k = x * Rational(n);
    if (boost::multiprecision::denominator(k) != 1)
        throw PreconditionError("(q-1) " + std::string(name) + " = " + bhk::to_string(k) + " is not integral");
    return static_cast<std::int64_t>(boost::multiprecision::numerator(k));
}

}  // namespace detail

/// -(1/(q-1)) sum_m omega((-1)^d t)^m prod g(m + a_i) g(-m - b_i) / (g(a_i) g(-b_i)),
/// with a_i = (q-1) alpha_i and b_i = (q-1) beta_i.
inline HyperSumValue hyper_sum_classic(const GaussSumTable& g, const HypergeometricParameters& h, Element t,
                                       const SumOptions& o = {}) {
    const FieldTable& f = *g.field;
    const std::uint64_t n = f.order();
    if (t == 0) throw PreconditionError("t must be nonzero");
    std::vector<std::int64_t> a, b;
    for (const auto& x : h.alpha) a.push_back(detail::scaled_index(x, n, "alpha_i"));
    for (const auto& x : h.beta) b.push_back(detail::scaled_index(x, n, "beta_i"));
    std::complex<double> norm = 1;
    for (std::size_t i = 0; i < a.size(); ++i) norm /= g(a[i]) * g(-b[i]);
    const std::uint64_t lx = f.log(h.d() % 2 ? f.neg(t) : t);
    auto term = [&](std::uint64_t mu) {
        const auto m = static_cast<std::int64_t>(mu);
        std::complex<double> v = detail::unit_root(detail::mulmod_u64(lx, mu, n), n);
        for (std::size_t i = 0; i < a.size(); ++i) v *= g(m + a[i]) * g(-m - b[i]);
        return v;
    };
    auto sum = detail::deterministic_sum(n, o.jobs, term);
    return detail::round_value(-norm * sum / static_cast<double>(n), f.q(), h.d(), field_of_definition(h), o);
}

/// ((-1)^{r+s} / (1-q)) sum_m q^{s(m)-s(0)} prod g(p_j m) prod g(-q_j m) omega(eps M^{-1} t)^m.
inline HyperSumValue hyper_sum_bcm(const GaussSumTable& g, const HypergeometricParameters& h, Element t,
                                   const SumOptions& o = {}) {
    const FieldTable& f = *g.field;
    const std::uint64_t n = f.order();
    if (t == 0) throw PreconditionError("t must be nonzero");
    if (auto bad = offending_denominator(f.q(), h))
        throw PreconditionError("q = " + std::to_string(f.q()) + " is not good: denominator " + std::to_string(*bad));
    const BcmData bd = bcm_data(h);
    const BigInt pp = f.p();
    auto residue = [&](const BigInt& x) { return f.from_int(static_cast<std::int64_t>(((x % pp) + pp) % pp)); };
    Element arg = f.mul(f.mul(residue(boost::multiprecision::denominator(bd.M)), f.inv(residue(boost::multiprecision::numerator(bd.M)))), t);
    if (bd.epsilon < 0) arg = f.neg(arg);
    const std::uint64_t la = f.log(arg);
    const std::uint64_t s0 = bd.s0();
    std::vector<double> qinv(s0 + 1, 1.0);
    for (std::size_t k = 1; k <= s0; ++k) qinv[k] = qinv[k - 1] / static_cast<double>(f.q());
    std::vector<std::int64_t> ps(bd.p_list.begin(), bd.p_list.end()), qs(bd.q_list.begin(), bd.q_list.end());
    auto term = [&](std::uint64_t mu) {
        const auto m = static_cast<std::int64_t>(mu);
        std::complex<double> v = detail::unit_root(detail::mulmod_u64(la, mu, n), n) * qinv[s0 - bd.s(m, n)];
        for (auto x : ps) v *= g(x * m);
        for (auto x : qs) v *= g(-x * m);
        return v;
    };
    auto sum = detail::deterministic_sum(n, o.jobs, term);
    const double sign = (ps.size() + qs.size()) % 2 ? -1.0 : 1.0;
    FieldOfDefinition rational;
    rational.over_q = rational.over_gaussian = true;
    rational.description = "Q";
    return detail::round_value(sign * sum / (1.0 - static_cast<double>(f.q())), f.q(), h.d(), rational, o);
}

inline HyperSumValue hyper_sum(Definition def, const GaussSumTable& g, const HypergeometricParameters& h, Element t,
                               const SumOptions& o = {}) {
    return def == Definition::Classic ? hyper_sum_classic(g, h, t, o) : hyper_sum_bcm(g, h, t, o);
}

}  // namespace bhk::hyper
