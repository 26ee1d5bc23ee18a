#pragma once

#include <array>

#include "bhk/counting/counting.hpp"
#include "bhk/fixtures.hpp"
#include "bhk/zeta/factor.hpp"
#include "bhk/zeta/l_polynomial.hpp"

namespace bhk::zeta {

using R = Rational;

enum class Family { F4, L2L2 };

inline const char* to_string(Family f) { return f == Family::F4 ? "F4" : "L2L2"; }

inline const inv::ExponentMatrix& family_matrix(Family f) { return f == Family::F4 ? fixtures::kF4 : fixtures::kL2L2; }

/// Signs s_r -> sign^r s_r of the three F4 blocks (R_psi, phi_-1 block, Q(i) block),
/// frozen from calibrate_f4_signs() on the psi = 3 row at q = 281.
inline constexpr std::array<int, 3> kBlockSigns = {1, 1, 1};
/// The L2L2 degree-4 block carries no sign freedom of its own.
inline constexpr int kDegree4Sign = 1;

struct Block {
    std::string name;
    LPolynomial l;
    int multiplicity = 1;
};

struct ZetaReport {
    Family family = Family::F4;
    std::uint64_t q = 0;
    std::int64_t psi = 0;
    bool smooth = true;
    IntPoly px;
    std::vector<Block> blocks;
    Factorization factors;
    std::string display;
    bool product_ok = false;  // factors multiply back to P_X
    bool weil_ok = false;
    std::optional<std::uint64_t> direct_count;
    std::optional<bool> trace_ok;
    std::vector<std::string> notes;

    /// 1 + q + q^2 - c_1(P_X)
    BigInt predicted_count() const { return 1 + BigInt(q) + BigInt(q) * q - px.coeff(1); }
    /// The degree-3 block shared by the families.
    const IntPoly& r_psi() const { return blocks.at(0).l.poly; }
};

struct AssemblyOptions {
    LOptions l;
    count::CountConfig count;
    bool check_smooth = true;
    std::array<int, 3> signs = kBlockSigns;
};

namespace detail {

inline HypergeometricParameters hp(std::vector<R> a, std::vector<R> b) { return HypergeometricParameters::make(std::move(a), std::move(b)); }

inline std::int64_t t_of_psi(std::int64_t psi, std::uint64_t q) {
    const auto qi = static_cast<std::int64_t>(q);
    const auto x = static_cast<std::uint64_t>(arith::mod(psi, qi));
    if (x == 0) throw PreconditionError("t = psi^-4 is undefined at psi = 0 mod " + std::to_string(q));
    const std::uint64_t x4 = arith::powmod(x, 4, q);
    return static_cast<std::int64_t>(arith::invmod(static_cast<std::int64_t>(x4), qi));
}

inline void require_split_prime(std::uint64_t q) {
    if (!arith::is_prime(q)) throw PreconditionError("assembly needs a prime q, got " + std::to_string(q));
    if (q % 4 != 1) throw PreconditionError("assembly needs q = 1 mod 4 (inert primes are not supported), got " + std::to_string(q));
}

inline void finish(ZetaReport& rep) {
    IntPoly px = IntPoly::constant(1);
    for (const auto& b : rep.blocks) px = px * b.l.poly.pow(static_cast<unsigned>(b.multiplicity));
    rep.px = px;
    rep.factors = factor_weil(px, rep.q);
    rep.display = display(rep.factors, rep.q);
    rep.product_ok = product(rep.factors) == px;
    rep.weil_ok = weil_magnitudes_ok(rep.factors, rep.q);
    int deg = 0;
    for (const auto& b : rep.blocks) deg += b.l.degree * b.multiplicity;
    if (deg != 21 || px.degree() != 21)
        throw Error("assembled P_X has degree " + std::to_string(px.degree()) + " (blocks " + std::to_string(deg) + "), expected 21");
}

inline bool smooth_fiber(Family fam, std::int64_t psi, std::uint64_t q, const AssemblyOptions& o) {
    auto f = ff::FieldCache::global().field(q, 1);
    return count::is_smooth_fiber(count::PencilSpec::pencil(family_matrix(fam), psi), *f, o.count);
}

inline Block hyper_block(std::string name, HypergeometricParameters h, std::int64_t t, std::uint64_t q, int degree, Twist tw,
                         int mult, const LOptions& lo) {
    return {std::move(name), twisted_l_polynomial(h, t, q, degree, tw, lo), mult};
}

}  // namespace detail

/// Degree-3 block H(1/4,1/2,3/4; 0,0,0 | t), t = psi^-4.
inline Block block_r_psi(std::uint64_t q, std::int64_t psi, int sign = kBlockSigns[0], const LOptions& lo = {}) {
    Twist tw;
    tw.sign = sign;
    return detail::hyper_block("R_psi", detail::hp({R(1, 4), R(1, 2), R(3, 4)}, {0, 0, 0}), detail::t_of_psi(psi, q), q, 3, tw, 1, lo);
}

/// P_X = L3 * L2(phi_-1, s-1)^3 * L1(phi_sqrt-1, s-1)^12 for q = 1 mod 4.
inline ZetaReport assemble_px_f4(std::uint64_t q, std::int64_t psi, const AssemblyOptions& o = {}) {
    detail::require_split_prime(q);
    ZetaReport rep;
    rep.family = Family::F4;
    rep.q = q;
    rep.psi = psi;
    if (o.check_smooth && !detail::smooth_fiber(Family::F4, psi, q, o)) {
        rep.smooth = false;
        rep.notes.push_back("not smooth");
        return rep;
    }
    const std::int64_t t = detail::t_of_psi(psi, q);
    rep.blocks.push_back(block_r_psi(q, psi, o.signs[0], o.l));
    Twist t2{{Character::PhiMinus1}, true, o.signs[1], psi};
    rep.blocks.push_back(detail::hyper_block("L2(phi_-1)", detail::hp({R(1, 4), R(3, 4)}, {0, R(1, 2)}), t, q, 2, t2, 3, o.l));
    Twist t1{{Character::PhiSqrtMinus1}, true, o.signs[2], psi};
    rep.blocks.push_back(detail::hyper_block("L1(phi_sqrt-1)", detail::hp({R(1, 2)}, {0}), t, q, 1, t1, 12, o.l));
    detail::finish(rep);
    return rep;
}

/// P_X = L3 * (1 - qT)^8 * L2(phi_-1, s-1) * L4(phi_sqrt-1 phi_psi, s-1)^2 for q = 1 mod 4.
/// Above the field cap the degree-4 block is completed from its functional equation.
inline ZetaReport assemble_px_l2l2(std::uint64_t q, std::int64_t psi, const AssemblyOptions& o = {}) {
    detail::require_split_prime(q);
    ZetaReport rep;
    rep.family = Family::L2L2;
    rep.q = q;
    rep.psi = psi;
    if (o.check_smooth && !detail::smooth_fiber(Family::L2L2, psi, q, o)) {
        rep.smooth = false;
        rep.notes.push_back("not smooth");
        return rep;
    }
    const std::int64_t t = detail::t_of_psi(psi, q);
    rep.blocks.push_back(block_r_psi(q, psi, o.signs[0], o.l));
    Block dedekind;
    dedekind.name = "zeta_Q(i)(s-1)^4";
    dedekind.l.poly = IntPoly::linear(-BigInt(q));
    dedekind.l.degree = 1;
    dedekind.l.provenance = "Dedekind zeta of Q(i) at a split prime, Tate twisted";
    dedekind.multiplicity = 8;
    rep.blocks.push_back(dedekind);
    Twist t2{{Character::PhiMinus1}, true, o.signs[1], psi};
    rep.blocks.push_back(detail::hyper_block("L2(phi_-1)", detail::hp({R(1, 4), R(3, 4)}, {0, R(1, 2)}), t, q, 2, t2, 1, o.l));
    Twist t4{{Character::PhiSqrtMinus1, Character::PhiPsi}, true, kDegree4Sign, psi};
    LOptions l4 = o.l;
    l4.allow_completion = true;
    rep.blocks.push_back(detail::hyper_block("L4(phi_sqrt-1 phi_psi)",
                                             detail::hp({R(1, 8), R(3, 8), R(5, 8), R(7, 8)}, {0, R(1, 4), R(1, 2), R(3, 4)}), t, q,
                                             4, t4, 2, l4));
    const auto& b4 = rep.blocks.back().l;
    if (b4.completed)
        rep.notes.push_back("degree-4 block: power sums r <= " + std::to_string(b4.power_sums.size()) +
                            " only (F_q^4 not evaluated); T^4 coefficient from the functional equation, sign " +
                            std::to_string(b4.functional_sign));
    detail::finish(rep);
    return rep;
}

inline ZetaReport assemble(Family fam, std::uint64_t q, std::int64_t psi, const AssemblyOptions& o = {}) {
    return fam == Family::F4 ? assemble_px_f4(q, psi, o) : assemble_px_l2l2(q, psi, o);
}

/// Direct projective count against 1 + q + q^2 - c_1(P_X); records both in the report.
inline bool trace_check(ZetaReport& rep, const ff::FieldTable& f, const count::CountConfig& cfg = {}) {
    if (!rep.smooth) throw PreconditionError("trace check needs a smooth fiber");
    if (f.q() != rep.q) throw PreconditionError("field does not match the report");
    auto c = count::count_projective(count::PencilSpec::pencil(family_matrix(rep.family), rep.psi), f, cfg).count;
    rep.direct_count = c;
    rep.trace_ok = BigInt(c) == rep.predicted_count();
    return *rep.trace_ok;
}

/// (1 - qT)^minus (1 + qT)^plus (1 + cT + q^2T^2) as printed in a table row.
inline IntPoly row_polynomial(const fixtures::ZetaRow& row, std::uint64_t q) {
    IntPoly p = IntPoly::linear(-BigInt(q)).pow(static_cast<unsigned>(row.minus)) * IntPoly::linear(BigInt(q)).pow(static_cast<unsigned>(row.plus));
    if (row.quadratic) p = p * IntPoly::quadratic(BigInt(*row.quadratic), BigInt(q) * q);
    return p;
}

/// 1 + q + q^2 - c_1 for a printed row.
inline BigInt row_count(const fixtures::ZetaRow& row, std::uint64_t q) { return 1 + BigInt(q) + BigInt(q) * q - row_polynomial(row, q).coeff(1); }

/// P(-T): the effect of s_r -> (-1)^r s_r.
inline IntPoly flip(const IntPoly& p) {
    std::vector<BigInt> c = p.c;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
}

/// Every sign choice for the three F4 blocks whose product reproduces the printed row.
inline std::vector<std::array<int, 3>> calibrate_f4_signs(std::uint64_t q = fixtures::kTableQ, std::int64_t psi = 3,
                                                          const LOptions& lo = {}) {
    std::optional<fixtures::ZetaRow> row;
    for (const auto& r : fixtures::table_f4())
        if (std::find(r.psis.begin(), r.psis.end(), psi) != r.psis.end()) row = r;
    if (!row || !row->smooth) throw PreconditionError("no smooth printed row for psi = " + std::to_string(psi));
    AssemblyOptions o;
    o.l = lo;
    o.check_smooth = false;
    o.signs = {1, 1, 1};
    auto base = assemble_px_f4(q, psi, o);
    const IntPoly want = row_polynomial(*row, q);
    std::vector<std::array<int, 3>> out;
    for (int mask = 0; mask < 8; ++mask) {
        std::array<int, 3> s{};
        IntPoly p = IntPoly::constant(1);
        for (int b = 0; b < 3; ++b) {
            s[static_cast<std::size_t>(b)] = mask >> b & 1 ? -1 : 1;
            const auto& blk = base.blocks[static_cast<std::size_t>(b)];
            p = p * (s[static_cast<std::size_t>(b)] < 0 ? flip(blk.l.poly) : blk.l.poly).pow(static_cast<unsigned>(blk.multiplicity));
        }
        if (p == want) out.push_back(s);
    }
    return out;
}

}  // namespace bhk::zeta
