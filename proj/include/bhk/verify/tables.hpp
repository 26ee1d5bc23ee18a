#pragma once

#include "bhk/invertible/symmetry.hpp"
#include "bhk/zeta/assemble.hpp"

namespace bhk::verify {

using zeta::Family;

struct QuotientCheck {
    std::string name;
    std::vector<BigInt> computed;
    std::vector<std::int64_t> printed;
    bool match = false;
};

inline std::string group_str(const std::vector<BigInt>& invariants) { return inv::invariants_str(invariants); }

/// SL/J invariants of the five quartic pencils against the printed groups.
inline std::vector<QuotientCheck> verify_quotients() {
    std::vector<QuotientCheck> out;
    for (const auto& p : fixtures::quartic_pencils()) {
        QuotientCheck c;
        c.name = p.name;
        c.printed = p.quotient;
        c.computed = inv::sl_j_quotient(p.matrix).quotient_invariants;
        std::vector<BigInt> want(p.quotient.begin(), p.quotient.end());
        auto a = c.computed;
        std::sort(a.begin(), a.end());
        std::sort(want.begin(), want.end());
        c.match = a == want;
        out.push_back(std::move(c));
    }
    return out;
}

struct RowCheck {
    Family family = Family::F4;
    std::int64_t psi = 0;
    fixtures::ZetaRow row;
    bool smooth = true;                // computed
    std::optional<zeta::ZetaReport> report;  // absent at psi = 0 and on singular fibers
    std::optional<std::uint64_t> count;      // direct projective count
    BigInt printed_count = 0;                // 1 + q + q^2 - c_1 of the printed row
    std::vector<std::string> notes;

    bool smooth_ok() const { return smooth == row.smooth; }
    std::optional<bool> polynomial_ok(std::uint64_t q) const {
        if (!report || !report->smooth) return std::nullopt;
        return report->px == zeta::row_polynomial(row, q);
    }
    std::optional<bool> count_ok() const {
        if (!count || !row.smooth) return std::nullopt;
        return BigInt(*count) == printed_count;
    }
    bool ok(std::uint64_t q) const {
        if (!smooth_ok()) return false;
        if (auto c = count_ok(); c && !*c) return false;
        if (auto p = polynomial_ok(q); p && !*p) return false;
        if (report && report->smooth && (!report->weil_ok || !report->product_ok || (report->trace_ok && !*report->trace_ok)))
            return false;
        return true;
    }
};

struct TableOptions {
    zeta::AssemblyOptions assembly;
    count::CountConfig count;
    bool all_psis = true;  // every listed psi, or the first of each row
};

/// Reassembles every printed row of the F4 or L2L2 table at q = 281.
inline std::vector<RowCheck> verify_zeta_table(Family fam, std::uint64_t q = fixtures::kTableQ, const TableOptions& o = {}) {
    if (q != static_cast<std::uint64_t>(fixtures::kTableQ))
        throw PreconditionError("the printed tables are for q = " + std::to_string(fixtures::kTableQ));
    auto f = ff::FieldCache::global().field(q, 1);
    std::vector<RowCheck> out;
    for (const auto& row : fam == Family::F4 ? fixtures::table_f4() : fixtures::table_l2l2()) {
        for (std::size_t k = 0; k < (o.all_psis ? row.psis.size() : 1); ++k) {
            RowCheck c;
            c.family = fam;
            c.psi = row.psis[k];
            c.row = row;
            c.printed_count = zeta::row_count(row, q);
            auto spec = count::PencilSpec::pencil(zeta::family_matrix(fam), c.psi);
            c.smooth = count::is_smooth_fiber(spec, *f, o.count);
            if (c.smooth) c.count = count::count_projective(spec, *f, o.count).count;
            if (c.psi % static_cast<std::int64_t>(q) == 0) {
                c.notes.push_back("t = psi^-4 undefined at psi = 0: count check only");
            } else if (c.smooth) {
                zeta::AssemblyOptions ao = o.assembly;
                ao.check_smooth = false;
                auto rep = zeta::assemble(fam, q, c.psi, ao);
                rep.direct_count = c.count;
                rep.trace_ok = BigInt(*c.count) == rep.predicted_count();
                c.report = std::move(rep);
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

struct PatternCheck {
    Family family = Family::F4;
    std::int64_t psi = 0;
    zeta::ZetaReport report;
    std::vector<std::pair<int, int>> pattern;  // (degree, multiplicity) of P_X / R_psi pieces
    std::vector<std::pair<int, int>> expected;
    bool quotient_ok = false;  // P_X / R_psi equals the product of the pieces
    bool ok() const {
        return report.smooth && pattern == expected && quotient_ok && report.product_ok && report.weil_ok && report.trace_ok &&
               *report.trace_ok;
    }
};

/// Degree pattern of P_X / R_psi with a full reconstruction and a direct count, for
/// each smooth psi in psis (every nonzero psi when empty).
inline std::vector<PatternCheck> verify_patterns(std::uint64_t q, std::vector<std::int64_t> psis = {}, const TableOptions& o = {}) {
    auto f = ff::FieldCache::global().field(q, 1);
    if (psis.empty())
        for (std::int64_t x = 1; x < static_cast<std::int64_t>(q); ++x) psis.push_back(x);
    const auto patterns = fixtures::factor_degree_patterns();
    std::vector<PatternCheck> out;
    for (Family fam : {Family::F4, Family::L2L2}) {
        for (auto psi : psis) {
            PatternCheck c;
            c.family = fam;
            c.psi = psi;
            c.expected = patterns[fam == Family::F4 ? 0 : 1].degree_multiplicity;
            c.report = zeta::assemble(fam, q, psi, o.assembly);
            if (!c.report.smooth) continue;
            zeta::trace_check(c.report, *f, o.count);
            IntPoly rest = IntPoly::constant(1);
            for (std::size_t i = 1; i < c.report.blocks.size(); ++i) {
                const auto& b = c.report.blocks[i];
                c.pattern.emplace_back(b.l.degree, b.multiplicity);
                rest = rest * b.l.poly.pow(static_cast<unsigned>(b.multiplicity));
            }
            auto quo = exact_div(c.report.px, c.report.r_psi());
            c.quotient_ok = quo && *quo == rest;
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace bhk::verify
