#pragma once

#include <optional>

#include "bhk/ff/field.hpp"
#include "bhk/invertible/atomic.hpp"

namespace bhk::count {

using ff::Element;
using ff::FieldTable;
using inv::ExponentMatrix;

/// F_A, or F_A - d^T psi x_0...x_n when deformed.
struct PencilSpec {
    ExponentMatrix matrix;
    bool deformed = false;
    std::int64_t psi = 0;          // integer representative, reduced into F_p
    std::int64_t dual_degree = 0;  // d^T

    std::size_t num_vars() const { return matrix.size(); }

    static PencilSpec undeformed(ExponentMatrix a) {
        PencilSpec s;
        s.dual_degree = inv::weights(a.transposed()).degree;
        s.matrix = std::move(a);
        return s;
    }
    static PencilSpec pencil(ExponentMatrix a, std::int64_t psi) {
        PencilSpec s = undeformed(std::move(a));
        s.deformed = true;
        s.psi = psi;
        return s;
    }
};

struct Term {
    Element coeff;
    std::vector<unsigned> exps;
};

/// A polynomial with coefficients in a fixed field.
struct SparsePoly {
    std::size_t nvars = 0;
    std::vector<Term> terms;

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& t : terms) d = std::max(d, t.exps[var]);
        return d;
    }
};

inline SparsePoly to_poly(const PencilSpec& s, const FieldTable& f) {
    SparsePoly out;
    out.nvars = s.num_vars();
    for (std::size_t i = 0; i < s.num_vars(); ++i) {
        Term t{1, {}};
        for (auto e : s.matrix.row(i)) t.exps.push_back(static_cast<unsigned>(e));
        out.terms.push_back(std::move(t));
    }
    if (s.deformed) {
        Element c = f.from_int(-(s.dual_degree % static_cast<std::int64_t>(f.p())) * arith::mod(s.psi, static_cast<std::int64_t>(f.p())));
        if (c != 0) out.terms.push_back({c, std::vector<unsigned>(s.num_vars(), 1)});
    }
    return out;
}

/// d/dx_var.
inline SparsePoly derivative(const SparsePoly& g, std::size_t var, const FieldTable& f) {
    SparsePoly out;
    out.nvars = g.nvars;
    for (const auto& t : g.terms) {
        if (t.exps[var] == 0) continue;
        Element c = f.mul(t.coeff, f.from_int(t.exps[var]));
        if (c == 0) continue;
        Term d = t;
        d.coeff = c;
        --d.exps[var];
        out.terms.push_back(std::move(d));
    }
    return out;
}

inline Element evaluate(const SparsePoly& g, const std::vector<Element>& x, const FieldTable& f) {
    if (x.size() != g.nvars) throw PreconditionError("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(g.nvars));
    Element acc = 0;
    for (const auto& t : g.terms) {
        Element m = t.coeff;
        for (std::size_t i = 0; i < g.nvars && m != 0; ++i) m = f.mul(m, f.pow(x[i], t.exps[i]));
        acc = f.add(acc, m);
    }
    return acc;
}

/// Exact evaluation at a point of F_q^{n+1}.
inline Element evaluate(const PencilSpec& s, const std::vector<Element>& x, const FieldTable& f) {
    return evaluate(to_poly(s, f), x, f);
}

/// Restriction to x_0 = ... = x_{c-1} = 0, x_c = 1; variables x_{c+1}.. remain.
inline SparsePoly restrict_chart(const SparsePoly& g, std::size_t c) {
    SparsePoly out;
    out.nvars = g.nvars - c - 1;
    for (const auto& t : g.terms) {
        bool vanishes = false;
        for (std::size_t i = 0; i < c; ++i) vanishes |= t.exps[i] > 0;
        if (vanishes) continue;
        out.terms.push_back({t.coeff, std::vector<unsigned>(t.exps.begin() + static_cast<std::ptrdiff_t>(c) + 1, t.exps.end())});
    }
    return out;
}

}  // namespace bhk::count
