#include <gtest/gtest.h>

#include "bhk/zeta/assemble.hpp"

using namespace bhk;
using namespace bhk::zeta;

namespace {

// Projective points of the pencil over F_p from a plain affine scan of F_p^4.
std::uint64_t naive_projective_count(Family fam, std::int64_t psi, std::uint64_t p) {
    const auto P = static_cast<std::int64_t>(p);
    std::vector<std::int64_t> p3(p), p4(p);
    for (std::int64_t x = 0; x < P; ++x) {
        p3[x] = x * x % P * x % P;
        p4[x] = p3[x] * x % P;
    }
    const std::int64_t c = arith::mod(-4 * psi, P);
    std::uint64_t zeros = 0;
    for (std::int64_t a = 0; a < P; ++a)
        for (std::int64_t b = 0; b < P; ++b)
            for (std::int64_t x = 0; x < P; ++x)
                for (std::int64_t y = 0; y < P; ++y) {
                    std::int64_t v = fam == Family::F4 ? p4[a] + p4[b] + p4[x] + p4[y]
                                                       : p3[a] * b + p3[b] * a + p3[x] * y + p3[y] * x;
                    v = (v + c * (a * b % P) % P * (x * y % P)) % P;
                    zeros += v == 0;
                }
    return (zeros - 1) / (p - 1);
}

IntPoly L(std::int64_t a) { return IntPoly::linear(BigInt(a)); }

}  // namespace

TEST(Newton, KnownRoots) {
    // (1 - 2T)(1 - 3T)(1 + 5T): s_r = 2^r + 3^r + (-5)^r
    std::vector<Rational> s;
    for (int r = 1; r <= 4; ++r) s.push_back(Rational(BigInt(boost::multiprecision::pow(BigInt(2), r) + boost::multiprecision::pow(BigInt(3), r) + boost::multiprecision::pow(BigInt(-5), r))));
    auto c = newton_coefficients(s, 4);
    IntPoly want = L(-2) * L(-3) * L(5);
    for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(c[i], Rational(want.coeff(i)));
    EXPECT_EQ(c[4], 0);
    auto back = power_sums_of(want, 4);
    EXPECT_EQ(back, s);
}

TEST(Characters, Values) {
    EXPECT_EQ(character_value(Character::PhiMinus1, 281), 1);
    EXPECT_EQ(character_value(Character::PhiMinus1, 43), -1);
    EXPECT_EQ(character_value(Character::PhiSqrtMinus1, 281), 1);
    EXPECT_EQ(character_value(Character::PhiSqrtMinus1, 13), -1);
    EXPECT_EQ(character_value(Character::PhiPsi, 281, 3), -1);
    EXPECT_EQ(character_value(Character::PhiPsi, 281, 2), 1);
    EXPECT_THROW(character_value(Character::PhiSqrtMinus1, 43), PreconditionError);
    EXPECT_THROW(character_value(Character::PhiPsi, 13, 26), PreconditionError);
    Twist tw{{Character::PhiMinus1}, true, 1, 0};
    EXPECT_EQ(twist_factor(tw, 43, 1), Rational(-43));
    EXPECT_EQ(twist_factor(tw, 43, 2), Rational(43 * 43));
}

TEST(Completion, FunctionalEquation) {
    const std::uint64_t q = 41;
    const BigInt Q = q;
    // eps = +1: (1 - qT)^2 (1 + qT)^2 has c2 != 0, so c0..c2 fix it
    IntPoly plus = L(-41).pow(2) * L(41).pow(2);
    auto c1 = complete_by_functional_equation({plus.coeff(0), plus.coeff(1), plus.coeff(2)}, 4, q, 2);
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(c1[0].first, 1);
    EXPECT_EQ(c1[0].second, plus);
    // eps = -1: (1 - q^2 T^2)(1 + 7T + q^2 T^2)
    IntPoly minus = IntPoly{1, 0, -41 * 41} * IntPoly::quadratic(7, Q * Q);
    auto two = complete_by_functional_equation({minus.coeff(0), minus.coeff(1), minus.coeff(2)}, 4, q, 2);
    EXPECT_EQ(two.size(), 2u);
    auto one = complete_by_functional_equation({minus.coeff(0), minus.coeff(1), minus.coeff(2), minus.coeff(3)}, 4, q, 2);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].first, -1);
    EXPECT_EQ(one[0].second, minus);
    // contradiction
    EXPECT_TRUE(complete_by_functional_equation({1, 1, 5, 0}, 4, q, 2).empty());
    EXPECT_THROW(complete_by_functional_equation({1, 1}, 4, q, 2), PreconditionError);
}

TEST(LPoly, DegreeZeroAndTrivialTwist) {
    auto h = HypergeometricParameters::make({Rational(1, 2)}, {0});
    EXPECT_EQ(l_polynomial(h, 3, 13, 0).poly, IntPoly::constant(1));
    auto a = l_polynomial(h, 3, 13, 1);
    auto b = twisted_l_polynomial(h, 3, 13, 1, Twist{});
    EXPECT_EQ(a.poly, b.poly);
    ASSERT_TRUE(a.polynomial_check);
    EXPECT_TRUE(*a.polynomial_check);
    EXPECT_THROW(l_polynomial(h, 3, 15, 1), PreconditionError);
}

TEST(LPoly, GeneratorAndDefinitionIndependent) {
    auto h = HypergeometricParameters::make({Rational(1, 4), Rational(1, 2), Rational(3, 4)}, {0, 0, 0});
    LOptions alt;
    alt.field = {1, 1};
    LOptions classic;
    classic.definition = hyper::Definition::Classic;
    for (std::int64_t t : {2, 5, 17}) {
        auto base = l_polynomial(h, t, 41, 3);
        EXPECT_EQ(base.poly, l_polynomial(h, t, 41, 3, alt).poly) << t;
        EXPECT_EQ(base.poly, l_polynomial(h, t, 41, 3, classic).poly) << t;
        ASSERT_TRUE(base.polynomial_check);
        EXPECT_TRUE(*base.polynomial_check);
    }
}

TEST(LPoly, Degree3BlockAt281) {
    auto h = HypergeometricParameters::make({Rational(1, 4), Rational(1, 2), Rational(3, 4)}, {0, 0, 0});
    const BigInt q2 = BigInt(281) * 281;
    auto t3 = static_cast<std::int64_t>(arith::invmod(81, 281));
    auto p3 = l_polynomial(h, t3, 281, 3).poly;
    EXPECT_TRUE(exact_div(p3, IntPoly::quadratic(78, q2)));
    EXPECT_TRUE(exact_div(p3, L(-281)));
    auto t2 = static_cast<std::int64_t>(arith::invmod(16, 281));
    auto p2 = l_polynomial(h, t2, 281, 3).poly;
    EXPECT_TRUE(exact_div(p2, IntPoly::quadratic(238, q2)));
    EXPECT_THROW(l_polynomial(h, t3, 281, 4), CapExceeded);
}

TEST(Factor, DworkRowShape) {
    const BigInt q2 = BigInt(281) * 281;
    IntPoly p = L(-281).pow(3) * L(281).pow(16) * IntPoly::quadratic(238, q2);
    auto f = factor_weil(p, 281);
    ASSERT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(f.factors[0].poly, L(-281));
    EXPECT_EQ(f.factors[0].multiplicity, 3);
    EXPECT_EQ(f.factors[1].multiplicity, 16);
    EXPECT_EQ(f.factors[2].poly, IntPoly::quadratic(238, q2));
    EXPECT_EQ(product(f), p);
    EXPECT_EQ(display(f, 281), "(1-281T)^3(1+281T)^16(1+238T+281^2T^2)");
    EXPECT_TRUE(weil_magnitudes_ok(f, 281));
    auto one = factor_weil(IntPoly::constant(1), 281);
    EXPECT_TRUE(one.factors.empty());
    EXPECT_EQ(display(one, 281), "1");
    // a non-Weil polynomial fails the magnitude check
    EXPECT_FALSE(weil_magnitudes_ok(factor_weil(IntPoly{1, 1000, 281 * 281}, 281), 281));
}

TEST(Factor, CommonFactor) {
    const std::uint64_t q = 281;
    auto f4 = fixtures::table_f4(), l2 = fixtures::table_l2l2();
    auto g3 = common_factor(row_polynomial(f4[3], q), row_polynomial(l2[3], q));
    EXPECT_GE(g3.degree(), 3);
    EXPECT_TRUE(exact_div(g3, L(-281) * IntPoly::quadratic(78, BigInt(q) * q)));
    auto g4 = common_factor(row_polynomial(f4[4], q), row_polynomial(l2[4], q));
    EXPECT_TRUE(exact_div(g4, IntPoly::quadratic(-434, BigInt(q) * q)));
    auto p = row_polynomial(f4[5], q);
    EXPECT_EQ(common_factor(p, p), p);
}

TEST(Assemble, FullReconstructionAt41) {
    const std::uint64_t q = 41;
    auto f = ff::FieldCache::global().field(q, 1);
    for (std::int64_t psi : {2, 3, 5, 7}) {
        for (Family fam : {Family::F4, Family::L2L2}) {
            auto rep = assemble(fam, q, psi);
            ASSERT_TRUE(rep.smooth);
            EXPECT_EQ(rep.px.degree(), 21);
            EXPECT_EQ(rep.px.coeff(0), 1);
            EXPECT_TRUE(rep.product_ok);
            EXPECT_TRUE(rep.weil_ok) << to_string(fam) << " psi=" << psi << " " << rep.display;
            for (const auto& b : rep.blocks) EXPECT_FALSE(b.l.completed);
            EXPECT_TRUE(trace_check(rep, *f));
            EXPECT_EQ(rep.predicted_count(), naive_projective_count(fam, psi, q)) << to_string(fam) << " psi=" << psi;
        }
    }
}

TEST(Assemble, CompletionMatchesFullAt41) {
    AssemblyOptions limited;
    limited.l.max_power = 3;
    for (std::int64_t psi : {2, 3, 4, 5, 6, 7, 8, 10, 11}) {
        auto full = assemble_px_l2l2(41, psi);
        auto part = assemble_px_l2l2(41, psi, limited);
        ASSERT_TRUE(part.blocks.back().l.completed);
        EXPECT_EQ(full.blocks.back().l.poly, part.blocks.back().l.poly) << psi;
        EXPECT_EQ(full.px, part.px);
    }
}

TEST(Assemble, NonSmoothAndPreconditions) {
    auto rep = assemble_px_f4(41, 1);
    EXPECT_FALSE(rep.smooth);
    auto f = ff::FieldCache::global().field(41, 1);
    EXPECT_THROW(trace_check(rep, *f), PreconditionError);
    EXPECT_FALSE(assemble_px_l2l2(41, 9).smooth);  // 9^4 = 1 mod 41
    EXPECT_THROW(assemble_px_f4(43, 2), PreconditionError);
    EXPECT_THROW(assemble_px_f4(41, 0), PreconditionError);
    EXPECT_THROW(assemble_px_f4(41, 41), PreconditionError);
}

TEST(Assemble, DegreePatternAt41) {
    auto pattern = fixtures::factor_degree_patterns();
    auto rep = assemble_px_f4(41, 2);
    auto q_psi = exact_div(rep.px, rep.r_psi());
    ASSERT_TRUE(q_psi);
    IntPoly rest = IntPoly::constant(1);
    std::vector<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < rep.blocks.size(); ++i) {
        seen.emplace_back(rep.blocks[i].l.degree, rep.blocks[i].multiplicity);
        rest = rest * rep.blocks[i].l.poly.pow(static_cast<unsigned>(rep.blocks[i].multiplicity));
    }
    EXPECT_EQ(*q_psi, rest);
    EXPECT_EQ(seen, pattern[0].degree_multiplicity);
    auto l2 = assemble_px_l2l2(41, 2);
    std::vector<std::pair<int, int>> seen2;
    for (std::size_t i = 1; i < l2.blocks.size(); ++i) seen2.emplace_back(l2.blocks[i].l.degree, l2.blocks[i].multiplicity);
    std::sort(seen2.begin(), seen2.end());
    auto want2 = pattern[1].degree_multiplicity;
    std::sort(want2.begin(), want2.end());
    EXPECT_EQ(seen2, want2);
}

TEST(Assemble, SignCalibrationIsUnique) {
    auto matches = calibrate_f4_signs();
    ASSERT_EQ(matches.size(), 1u);
    EXPECT_EQ(matches[0], kBlockSigns);
}
