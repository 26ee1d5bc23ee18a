#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bhk/fixtures.hpp"
#include "bhk/invertible/symmetry.hpp"

using namespace bhk;
using namespace bhk::inv;

namespace {

std::vector<std::int64_t> to_i64(const std::vector<BigInt>& v) {
    std::vector<std::int64_t> out;
    for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x));
    return out;
}

// |{x in SL/J : kx = 0}| by enumeration of SL and J.
std::int64_t torsion_count(const SlJQuotient& s, std::int64_t k) {
    std::int64_t hits = 0;
    for (const auto& g : s.sl.elements) {
        DiagonalSymmetry m(std::vector<Rational>(g.xi.size(), Rational(0)));
        for (std::int64_t i = 0; i < k; ++i) m = m + g;
        if (s.j.contains(m)) ++hits;
    }
    return hits / static_cast<std::int64_t>(s.j.order());
}

}  // namespace

TEST(Weights, Examples) {
    EXPECT_EQ(weights(fixtures::kF4), (WeightSystem{{1, 1, 1, 1}, 4}));
    EXPECT_EQ(weights(fixtures::kChain223), (WeightSystem{{1, 1, 1}, 3}));
    EXPECT_EQ(weights(fixtures::kFermat5Chain25), (WeightSystem{{2, 1, 1, 1}, 5}));
    EXPECT_EQ(weights(ExponentMatrix{{2, 0}, {0, 4}}), (WeightSystem{{2, 1}, 4}));
}

TEST(Weights, CalabiYau) {
    EXPECT_TRUE(is_calabi_yau(fixtures::kF4));
    EXPECT_TRUE(is_calabi_yau(fixtures::kChain223));
    EXPECT_TRUE(is_calabi_yau(ExponentMatrix{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
    EXPECT_FALSE(is_calabi_yau(ExponentMatrix{{5, 0, 0}, {0, 5, 0}, {0, 0, 5}}));
}

TEST(Weights, Transpose) {
    auto [t32, w32] = transpose_mirror(fixtures::kChain223);
    EXPECT_EQ(w32, (WeightSystem{{2, 1, 1}, 4}));
    auto [t33, w33] = transpose_mirror(fixtures::kFermat5Chain25);
    EXPECT_EQ(w33, (WeightSystem{{5, 1, 2, 2}, 10}));
    EXPECT_EQ(transpose_mirror(fixtures::kL2L2).second, weights(fixtures::kL2L2));
    for (const auto& p : fixtures::quartic_pencils()) EXPECT_EQ(weights(p.matrix.transposed().transposed()), weights(p.matrix));
}

TEST(Weights, Rejects) {
    EXPECT_THROW(ExponentMatrix({{1, 2}}), ValidationError);
    EXPECT_THROW(weights(ExponentMatrix{{1, 1}, {1, 1}}), ValidationError);
    EXPECT_EQ(determinant(fixtures::kChain223), 12);
    EXPECT_EQ(determinant(fixtures::kFermat5Chain25), 250);
    EXPECT_EQ(determinant(fixtures::kL2L2), 64);
}

TEST(Atomic, QuarticPencils) {
    EXPECT_EQ(atomic_decomposition(fixtures::kF2L2).str(), "Fermat(4) Fermat(4) loop(3,3)");
    EXPECT_EQ(atomic_decomposition(fixtures::kChain223).str(), "chain(2,2,3)");
    EXPECT_EQ(atomic_decomposition(fixtures::kL4).str(), "loop(3,3,3,3)");
    EXPECT_EQ(atomic_decomposition(fixtures::kF1L3).str(), "Fermat(4) loop(3,3,3)");
    EXPECT_EQ(atomic_decomposition(fixtures::kFermat5Chain25).str(), "Fermat(5) Fermat(5) chain(2,5)");
}

TEST(Atomic, PermutationInvariant) {
    std::mt19937 rng(7);
    for (const auto& m : {fixtures::kL4, fixtures::kF2L2, fixtures::kF1L3, fixtures::kFermat5Chain25,
                          ExponentMatrix{{2, 1, 0, 0, 0}, {0, 3, 1, 0, 0}, {0, 0, 4, 0, 0}, {0, 0, 0, 2, 1}, {0, 0, 0, 1, 5}}}) {
        auto base = atomic_decomposition(m).shape();
        std::vector<std::size_t> perm(m.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(atomic_decomposition(m.permuted(perm)).shape(), base);
        }
    }
}

TEST(Atomic, Rejects) {
    EXPECT_THROW(atomic_decomposition(ExponentMatrix{{2, 1, 1}, {0, 2, 0}, {0, 0, 2}}), ValidationError);
    EXPECT_THROW(atomic_decomposition(ExponentMatrix{{2, 2}, {0, 3}}), ValidationError);
    EXPECT_THROW(atomic_decomposition(ExponentMatrix{{2, 0, 1}, {0, 2, 1}, {0, 0, 3}}), ValidationError);
    EXPECT_FALSE(is_invertible(ExponentMatrix{{2, 2}, {0, 3}}));
    EXPECT_TRUE(is_invertible(fixtures::kL2L2));
}

TEST(Symmetry, AutOrders) {
    auto f4 = aut_group(fixtures::kF4);
    EXPECT_EQ(f4.order(), 256u);
    EXPECT_EQ(to_i64(f4.abelian_invariants), (std::vector<std::int64_t>{4, 4, 4, 4}));
    EXPECT_EQ(aut_group(fixtures::kChain223).order(), 12u);
    EXPECT_EQ(aut_group(fixtures::kFermat5Chain25).order(), 250u);
    for (const auto& p : fixtures::quartic_pencils())
        EXPECT_EQ(BigInt(aut_group(p.matrix).order()), abs(determinant(p.matrix))) << p.name;
}

TEST(Symmetry, QuarticQuotients) {
    for (const auto& p : fixtures::quartic_pencils()) {
        auto s = sl_j_quotient(p.matrix);
        // L2L2 is printed as Z/4 x Z/2, but SL has 16 elements and J has 4 (see
        // L2L2SubgroupOrders); the acceptance run reports that row.
        if (p.name != "L2L2") EXPECT_EQ(to_i64(s.quotient_invariants), p.quotient) << p.name;
        // J in SL in Aut, and |SL|/|J| is the quotient order
        for (const auto& g : s.j.elements) EXPECT_TRUE(s.sl.contains(g));
        EXPECT_EQ(BigInt(s.sl.order() / s.j.order()), s.quotient_order()) << p.name;
    }
}

// Oracle: brute force over (Z/8)^4 for phases fixing every monomial.
TEST(Symmetry, L2L2SubgroupOrders) {
    const auto& a = fixtures::kL2L2;
    int aut = 0, sl = 0;
    for (int k = 0; k < 8 * 8 * 8 * 8; ++k) {
        int v[4] = {k % 8, k / 8 % 8, k / 64 % 8, k / 512};
        bool fixed = true;
        for (std::size_t i = 0; i < 4; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * v[j];
            fixed &= s % 8 == 0;
        }
        if (!fixed) continue;
        ++aut;
        if ((v[0] + v[1] + v[2] + v[3]) % 8 == 0) ++sl;
    }
    auto s = sl_j_quotient(a);
    EXPECT_EQ(aut, 64);
    EXPECT_EQ(s.sl.order(), static_cast<std::size_t>(sl));
    EXPECT_EQ(s.j.order(), 4u);
    EXPECT_EQ(to_i64(s.quotient_invariants), (std::vector<std::int64_t>{4}));
}

TEST(Symmetry, QuotientMatchesEnumeration) {
    std::vector<ExponentMatrix> cases{ExponentMatrix{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}, fixtures::kChain223, fixtures::kFermat5Chain25};
    for (const auto& p : fixtures::quartic_pencils()) cases.push_back(p.matrix);
    for (const auto& m : cases) {
        auto s = sl_j_quotient(m);
        std::int64_t order = static_cast<std::int64_t>(s.sl.order() / s.j.order());
        for (std::int64_t k = 1; k <= order; ++k) {
            if (order % k) continue;
            std::int64_t predicted = 1;
            for (auto d : to_i64(s.quotient_invariants)) predicted *= std::gcd(k, d);
            EXPECT_EQ(torsion_count(s, k), predicted) << m.str() << " k=" << k;
        }
    }
    EXPECT_EQ(to_i64(sl_j_quotient(ExponentMatrix{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}).quotient_invariants),
              (std::vector<std::int64_t>{3}));
}

TEST(Symmetry, XiSet) {
    auto x32 = xi_set(fixtures::kChain223);
    ASSERT_EQ(x32.elements.size(), 1u);
    EXPECT_EQ(x32.elements[0].str(), "(1/2,1/4,1/4)");
    auto x33 = xi_set(fixtures::kFermat5Chain25);
    ASSERT_EQ(x33.elements.size(), 1u);
    EXPECT_EQ(x33.elements[0].str(), "(1/2,1/10,1/5,1/5)");
    for (const auto& p : fixtures::quartic_pencils()) {
        auto xs = xi_set(p.matrix);
        auto dual = weights(p.matrix.transposed());
        ASSERT_EQ(xs.elements.size(), 1u);
        for (std::size_t i = 0; i < dual.weights.size(); ++i)
            EXPECT_EQ(xs.elements[0].xi[i], Rational(dual.weights[i], dual.degree));
        EXPECT_TRUE(is_narrow(xs.elements[0]));
    }
}

TEST(Symmetry, Narrow) {
    EXPECT_TRUE(is_narrow(DiagonalSymmetry({Rational(1, 2), Rational(1, 4), Rational(1, 4)})));
    EXPECT_FALSE(is_narrow(DiagonalSymmetry({Rational(0), Rational(1, 2), Rational(1, 2)})));
    EXPECT_FALSE(is_narrow(DiagonalSymmetry({Rational(0), Rational(0)})));
    EXPECT_EQ(DiagonalSymmetry({Rational(3, 4), Rational(1, 2)}).age(), Rational(5, 4));
}

TEST(Symmetry, Cap) {
    EXPECT_THROW(aut_group(ExponentMatrix{{40, 0, 0, 0}, {0, 40, 0, 0}, {0, 0, 40, 0}, {0, 0, 0, 40}}), CapExceeded);
}
