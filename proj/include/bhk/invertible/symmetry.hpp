#pragma once

#include <functional>
#include <set>
#include <string>

#include "bhk/invertible/atomic.hpp"

namespace bhk::inv {

inline constexpr std::int64_t kGroupCap = 1'000'000;

inline Rational frac(const Rational& x) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt num = numerator(x), den = denominator(x);
    BigInt r = num % den;
    if (r < 0) r += den;
    return Rational(r, den);
}

/// Phases xi_i in [0,1); acts by x_i -> e^{2 pi i xi_i} x_i.
struct DiagonalSymmetry {
    std::vector<Rational> xi;

    DiagonalSymmetry() = default;
    explicit DiagonalSymmetry(std::vector<Rational> v) : xi(std::move(v)) {
        for (auto& x : xi) x = frac(x);
    }

    Rational age() const {
        Rational s = 0;
        for (const auto& x : xi) s += x;
        return s;
    }
    DiagonalSymmetry operator+(const DiagonalSymmetry& o) const {
        std::vector<Rational> v(xi.size());
        for (std::size_t i = 0; i < xi.size(); ++i) v[i] = xi[i] + o.xi[i];
        return DiagonalSymmetry(std::move(v));
    }
    bool is_identity() const {
        for (const auto& x : xi)
            if (x != 0) return false;
        return true;
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? "," : "") + bhk::to_string(xi[i]);
        return s + ")";
    }
    bool operator==(const DiagonalSymmetry&) const = default;
    bool operator<(const DiagonalSymmetry& o) const { return xi < o.xi; }
};

/// No phase is zero.
inline bool is_narrow(const DiagonalSymmetry& g) {
    for (const auto& x : g.xi)
        if (frac(x) == 0) return false;
    return true;
}

struct SymmetryGroup {
    std::vector<DiagonalSymmetry> elements;  // sorted
    std::vector<BigInt> abelian_invariants;   // d_1 | d_2 | ..., all > 1

    std::size_t order() const { return elements.size(); }
    bool contains(const DiagonalSymmetry& g) const { return std::binary_search(elements.begin(), elements.end(), g); }
};

inline std::string invariants_str(const std::vector<BigInt>& inv) {
    if (inv.empty()) return "trivial";
    std::string s;
    for (const auto& d : inv) s += (s.empty() ? "Z/" : " x Z/") + d.str();
    return s;
}

namespace detail {

inline std::vector<DiagonalSymmetry> closure(const std::vector<DiagonalSymmetry>& gens, std::size_t dim) {
    std::set<DiagonalSymmetry> seen{DiagonalSymmetry(std::vector<Rational>(dim, Rational(0)))};
    std::vector<DiagonalSymmetry> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<DiagonalSymmetry> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                auto s = g + h;
                if (seen.insert(s).second) {
                    if (static_cast<std::int64_t>(seen.size()) > kGroupCap)
                        throw CapExceeded("symmetry group larger than " + std::to_string(kGroupCap));
                    next.push_back(std::move(s));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

inline void check_group_cap(const ExponentMatrix& a) {
    BigInt det = abs(determinant(a));
    if (det == 0) throw ValidationError("exponent matrix is singular");
    if (det > kGroupCap) throw CapExceeded("|det A| = " + det.str() + " exceeds group cap " + std::to_string(kGroupCap));
}

/// Integer basis (columns) of {v in Z^n : c.v = 0 mod m}.
inline BigMatrix congruence_lattice_basis(const std::vector<std::int64_t>& c, std::int64_t m) {
    const std::size_t n = c.size();
    // Kernel of the row (c, m) in Z^{n+1} by unimodular column operations.
    std::vector<BigInt> w(c.begin(), c.end());
    w.push_back(m);
    const std::size_t k = n + 1;
    BigMatrix u(k, std::vector<BigInt>(k, 0));
    for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;
    while (true) {
        std::size_t piv = k;
        for (std::size_t j = 0; j < k; ++j)
            if (w[j] != 0 && (piv == k || abs(w[j]) < abs(w[piv]))) piv = j;
        bool done = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == piv || w[j] == 0) continue;
            BigInt f = w[j] / w[piv];
            w[j] -= f * w[piv];
            for (std::size_t i = 0; i < k; ++i) u[i][j] -= f * u[i][piv];
            if (w[j] != 0) done = false;
        }
        if (done) {
            BigMatrix basis(n, std::vector<BigInt>());
            for (std::size_t j = 0; j < k; ++j) {
                if (j == piv) continue;
                for (std::size_t i = 0; i < n; ++i) basis[i].push_back(u[i][j]);
            }
            return basis;
        }
    }
}

/// Solve B x = y exactly for square integer B; x must be integral.
inline std::vector<BigInt> solve_integral(const BigMatrix& b, const std::vector<BigInt>& y) {
    const std::size_t n = b.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = b[i][j];
        a[i][n] = y[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw Error("singular lattice basis");
        std::swap(a[c], a[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<BigInt> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = to_bigint(a[i][n] / a[i][i]);
    return x;
}

}  // namespace detail

/// Diagonal symmetries of F_A, generated by the columns of A^{-1}.
inline SymmetryGroup aut_group(const ExponentMatrix& a) {
    detail::check_group_cap(a);
    auto inv = inverse(a);
    std::vector<DiagonalSymmetry> gens;
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::vector<Rational> col(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) col[i] = inv[i][j];
        gens.emplace_back(col);
    }
    SymmetryGroup g;
    g.elements = detail::closure(gens, a.size());
    g.abelian_invariants = nontrivial(smith_invariants(to_big(a)));
    return g;
}

struct SlJQuotient {
    SymmetryGroup sl;
    SymmetryGroup j;
    std::vector<BigInt> quotient_invariants;

    BigInt quotient_order() const {
        BigInt o = 1;
        for (const auto& d : quotient_invariants) o *= d;
        return o;
    }
};

/// SL(F_A) (phases summing to an integer), J = <(r_i/d)> and the invariants of SL/J.
inline SlJQuotient sl_j_quotient(const ExponentMatrix& a) {
    const std::size_t n = a.size();
    auto ws = weights(a);
    auto dual = weights(a.transposed());
    auto aut = aut_group(a);

    SlJQuotient out;
    for (const auto& g : aut.elements)
        if (boost::multiprecision::denominator(g.age()) == 1) out.sl.elements.push_back(g);
    std::vector<Rational> jgen(n);
    for (std::size_t i = 0; i < n; ++i) jgen[i] = Rational(ws.weights[i], ws.degree);
    out.j.elements = detail::closure({DiagonalSymmetry(jgen)}, n);
    out.j.abelian_invariants = {BigInt(out.j.elements.size())};
    if (out.j.elements.size() == 1) out.j.abelian_invariants.clear();

    // Aut = Z^n / A Z^n via v -> A^{-1} v. SL corresponds to the lattice
    // L = {v : q.v = 0 mod d^T} and J to the span of A Z^n and the all-ones vector.
    BigMatrix basis = detail::congruence_lattice_basis(dual.weights, dual.degree);
    auto present = [&](const BigMatrix& gens) {
        const std::size_t cols = gens[0].size();
        BigMatrix rel(n, std::vector<BigInt>(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<BigInt> y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = gens[i][c];
            auto x = detail::solve_integral(basis, y);
            for (std::size_t i = 0; i < n; ++i) rel[i][c] = x[i];
        }
        return nontrivial(smith_invariants(rel));
    };
    BigMatrix sl_rel = to_big(a);
    out.sl.abelian_invariants = present(sl_rel);
    BigMatrix slj_rel = sl_rel;
    for (std::size_t i = 0; i < n; ++i) slj_rel[i].push_back(1);
    out.quotient_invariants = present(slj_rel);
    return out;
}

struct XiSet {
    std::vector<DiagonalSymmetry> elements;       // coordinates in [0,1], stored as exact values
    std::vector<std::vector<Rational>> excluded;  // candidates with a coordinate outside [0,1]
};

/// xi = (A^T)^{-1} v for v >= 1 with sum r_j v_j = d; exactly the age-one candidates.
/// Elements keep coordinate 1 as 1 (not reduced mod 1).
inline XiSet xi_set(const ExponentMatrix& a) {
    const std::size_t n = a.size();
    auto ws = weights(a);
    auto inv_t = inverse(a.transposed());
    XiSet out;
    std::vector<std::int64_t> v(n, 1);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t remaining) {
        if (k == n) {
            if (remaining != 0) return;
            std::vector<Rational> xi(n);
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) xi[i] += inv_t[i][j] * v[j];
                if (xi[i] < 0 || xi[i] > 1) inside = false;
            }
            if (inside) {
                DiagonalSymmetry g;
                g.xi = xi;
                out.elements.push_back(std::move(g));
            } else {
                out.excluded.push_back(std::move(xi));
            }
            return;
        }
        for (std::int64_t x = 1; x * ws.weights[k] <= remaining; ++x) {
            v[k] = x;
            rec(k + 1, remaining - x * ws.weights[k]);
        }
    };
    rec(0, ws.degree);
    return out;
}

}  // namespace bhk::inv
