#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "bhk/common.hpp"

namespace bhk::inv {

/// Square nonnegative integer matrix; row i lists the exponents of monomial i.
struct ExponentMatrix {
    std::vector<std::vector<std::int64_t>> a;

    ExponentMatrix() = default;
    ExponentMatrix(std::vector<std::vector<std::int64_t>> rows) : a(std::move(rows)) { check_shape(); }
    ExponentMatrix(std::initializer_list<std::vector<std::int64_t>> rows) : a(rows) { check_shape(); }

    std::size_t size() const { return a.size(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i][j]; }
    const std::vector<std::int64_t>& row(std::size_t i) const { return a[i]; }

    ExponentMatrix transposed() const {
        std::vector<std::vector<std::int64_t>> t(size(), std::vector<std::int64_t>(size()));
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) t[j][i] = a[i][j];
        return ExponentMatrix(std::move(t));
    }

    /// Simultaneous permutation: new variable k is old variable perm[k], same for rows.
    ExponentMatrix permuted(const std::vector<std::size_t>& perm) const {
        std::vector<std::vector<std::int64_t>> t(size(), std::vector<std::int64_t>(size()));
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) t[i][j] = a[perm[i]][perm[j]];
        return ExponentMatrix(std::move(t));
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < size(); ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
            os << ']';
        }
        os << ']';
        return os.str();
    }

    bool operator==(const ExponentMatrix&) const = default;

   private:
    void check_shape() const {
        if (a.empty()) throw ValidationError("exponent matrix is empty");
        for (const auto& r : a) {
            if (r.size() != a.size()) throw ValidationError("exponent matrix is not square");
            for (auto v : r)
                if (v < 0) throw ValidationError("exponent matrix has a negative entry");
        }
    }
};

using RationalMatrix = std::vector<std::vector<Rational>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

inline BigMatrix to_big(const ExponentMatrix& m) {
    BigMatrix out(m.size(), std::vector<BigInt>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
    return out;
}

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(const ExponentMatrix& m) {
    BigMatrix a = to_big(m);
    const std::size_t n = a.size();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Exact inverse over Q; throws if singular.
inline RationalMatrix inverse(const ExponentMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw ValidationError("exponent matrix is singular");
        std::swap(a[c], a[piv]);
        Rational inv = 1 / a[c][c];
        for (auto& v : a[c]) v *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    RationalMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

inline std::vector<Rational> solve(const ExponentMatrix& m, const std::vector<Rational>& rhs) {
    auto inv = inverse(m);
    std::vector<Rational> x(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) x[i] += inv[i][j] * rhs[j];
    return x;
}

/// Smith normal form diagonal d_1 | d_2 | ... (nonnegative, zeros last) of an
/// arbitrary rectangular integer matrix.
inline std::vector<BigInt> smith_invariants(BigMatrix a) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(a[t], a[pi]);
        for (auto& r : a) std::swap(r[t], r[pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                BigInt f = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                BigInt f = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& r : a) std::swap(r[t], r[j]);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility: fold any entry not divisible by the pivot into row t
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                            clean = false;
                        }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    while (diag.size() < std::min(rows, cols)) diag.push_back(0);
    return diag;
}

/// Invariants > 1 of the finite part.
inline std::vector<BigInt> nontrivial(const std::vector<BigInt>& diag) {
    std::vector<BigInt> out;
    for (const auto& d : diag)
        if (d != 1) out.push_back(d);
    return out;
}

}  // namespace bhk::inv
