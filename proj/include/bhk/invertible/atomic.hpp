#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

#include "bhk/invertible/weights.hpp"

namespace bhk::inv {

enum class AtomKind { Fermat = 0, Loop = 1, Chain = 2 };

inline const char* to_string(AtomKind k) {
    switch (k) {
        case AtomKind::Fermat: return "Fermat";
        case AtomKind::Loop: return "loop";
        case AtomKind::Chain: return "chain";
    }
    return "?";
}

/// variables[k] carries exponent exponents[k]; in a loop or chain variable k
/// also appears linearly in the monomial of variable k-1 (cyclically for loops).
struct AtomicBlock {
    AtomKind kind;
    std::vector<std::size_t> variables;
    std::vector<std::int64_t> exponents;

    std::string str() const {
        std::string s = std::string(inv::to_string(kind)) + "(";
        for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
        return s + ")";
    }
    bool operator==(const AtomicBlock&) const = default;
};

struct AtomicDecomposition {
    std::vector<AtomicBlock> blocks;

    /// Blocks without variable labels, e.g. "Fermat(4) Fermat(4) loop(3,3)".
    std::string str() const {
        std::string s;
        for (const auto& b : blocks) s += (s.empty() ? "" : " ") + b.str();
        return s;
    }
    /// (kind, exponents) per block: invariant under relabeling variables.
    std::vector<std::pair<AtomKind, std::vector<std::int64_t>>> shape() const {
        std::vector<std::pair<AtomKind, std::vector<std::int64_t>>> out;
        for (const auto& b : blocks) out.emplace_back(b.kind, b.exponents);
        return out;
    }
};

namespace detail {

struct RowShape {
    std::size_t main;
    std::optional<std::size_t> fed;
};

/// Returns an error message, or nothing on success.
inline std::optional<std::string> row_shapes(const ExponentMatrix& a, std::vector<RowShape>& out) {
    const std::size_t n = a.size();
    out.clear();
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<std::size_t> main, fed;
        std::size_t support = 0;
        for (std::size_t j = 0; j < n; ++j) {
            auto v = a(i, j);
            if (v == 0) continue;
            ++support;
            if (v >= 2) {
                if (main) return "monomial " + std::to_string(i) + " has two exponents >= 2";
                main = j;
            } else {
                if (fed) return "monomial " + std::to_string(i) + " has two linear factors";
                fed = j;
            }
        }
        if (support > 2) return "monomial " + std::to_string(i) + " involves more than two variables";
        if (!main) return "monomial " + std::to_string(i) + " has no exponent >= 2";
        out.push_back({*main, fed});
    }
    return std::nullopt;
}

}  // namespace detail

/// Decomposes A into Fermat, loop and chain atoms, or returns nullopt with a reason.
inline std::optional<AtomicDecomposition> try_atomic_decomposition(const ExponentMatrix& a, std::string* why = nullptr) {
    const std::size_t n = a.size();
    auto fail = [&](std::string msg) -> std::optional<AtomicDecomposition> {
        if (why) *why = std::move(msg);
        return std::nullopt;
    };
    std::vector<detail::RowShape> rows;
    if (auto err = detail::row_shapes(a, rows)) return fail(*err);

    std::vector<std::optional<std::size_t>> next(n);   // variable -> variable it feeds into
    std::vector<std::int64_t> expo(n, 0);
    std::vector<int> main_count(n, 0), in_degree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto [m, f] = rows[i];
        if (main_count[m]++) return fail("variable " + std::to_string(m) + " is the main variable of two monomials");
        expo[m] = a(i, m);
        next[m] = f;
        if (f && in_degree[*f]++) return fail("variable " + std::to_string(*f) + " appears linearly in two monomials");
    }

    AtomicDecomposition dec;
    std::vector<bool> used(n, false);
    // Paths start at in-degree 0.
    for (std::size_t v = 0; v < n; ++v) {
        if (in_degree[v] != 0) continue;
        AtomicBlock b;
        std::size_t cur = v;
        while (true) {
            used[cur] = true;
            b.variables.push_back(cur);
            b.exponents.push_back(expo[cur]);
            if (!next[cur]) break;
            cur = *next[cur];
        }
        b.kind = b.variables.size() == 1 ? AtomKind::Fermat : AtomKind::Chain;
        dec.blocks.push_back(std::move(b));
    }
    // Whatever remains lies on cycles.
    for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        AtomicBlock b{AtomKind::Loop, {}, {}};
        std::size_t cur = v;
        while (!used[cur]) {
            used[cur] = true;
            b.variables.push_back(cur);
            b.exponents.push_back(expo[cur]);
            cur = *next[cur];
        }
        // canonical rotation: smallest exponent sequence, then smallest variable
        std::size_t best = 0, len = b.exponents.size();
        auto rot = [&](std::size_t s) {
            std::vector<std::int64_t> e(len);
            std::vector<std::size_t> vs(len);
            for (std::size_t k = 0; k < len; ++k) {
                e[k] = b.exponents[(s + k) % len];
                vs[k] = b.variables[(s + k) % len];
            }
            return std::pair{e, vs};
        };
        for (std::size_t s = 1; s < len; ++s)
            if (rot(s) < rot(best)) best = s;
        std::tie(b.exponents, b.variables) = rot(best);
        dec.blocks.push_back(std::move(b));
    }
    std::sort(dec.blocks.begin(), dec.blocks.end(), [](const AtomicBlock& x, const AtomicBlock& y) {
        return std::tie(x.kind, x.exponents, x.variables) < std::tie(y.kind, y.exponents, y.variables);
    });
    return dec;
}

inline AtomicDecomposition atomic_decomposition(const ExponentMatrix& a) {
    std::string why;
    auto d = try_atomic_decomposition(a, &why);
    if (!d) throw ValidationError("not an invertible polynomial: " + why);
    return *d;
}

/// det != 0, positive weights and an atomic decomposition.
inline void validate_invertible(const ExponentMatrix& a) {
    if (determinant(a) == 0) throw ValidationError("exponent matrix is singular");
    (void)weights(a);
    (void)atomic_decomposition(a);
}

inline bool is_invertible(const ExponentMatrix& a) {
    try {
        validate_invertible(a);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

}  // namespace bhk::inv
