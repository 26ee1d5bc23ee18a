#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "bhk/ff/field.hpp"
#include "bhk/ff/field_cache.hpp"
#include "bhk/ff/gauss.hpp"

using namespace bhk;
using namespace bhk::ff;

namespace {

// Multiplicative order of a mod p by repeated multiplication.
std::uint64_t order_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t x = a % p, k = 1;
    while (x != 1) {
        x = x * a % p;
        ++k;
    }
    return k;
}

// F_9 as a + b i with i^2 = -1, encoded a + 3b.
struct F9 {
    int a, b;
    F9 operator*(F9 o) const { return {((a * o.a - b * o.b) % 3 + 3) % 3, ((a * o.b + b * o.a) % 3 + 3) % 3}; }
    F9 operator+(F9 o) const { return {(a + o.a) % 3, (b + o.b) % 3}; }
    bool operator==(const F9&) const = default;
};

}  // namespace

TEST(Field, SmallestPrimitiveRoot73) {
    auto f = build_field(73, 1);
    std::uint64_t g = 2;
    while (order_mod(g, 73) != 72) ++g;
    EXPECT_EQ(f.generator(), g);
    EXPECT_EQ(f.generator(), 5u);
}

TEST(Field, F2) {
    auto f = build_field(2, 1);
    EXPECT_EQ(f.generator(), 1u);
    EXPECT_EQ(f.q(), 2u);
}

TEST(Field, F9ModulusGeneratorTrace) {
    auto f = build_field(3, 2);
    EXPECT_EQ(f.modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    // Oracle: orders and traces in the explicit model F_3[i].
    auto decode = [](Element x) { return F9{static_cast<int>(x % 3), static_cast<int>(x / 3)}; };
    Element smallest = 0;
    for (Element x = 1; x < 9; ++x) {
        F9 y = decode(x), acc = y;
        int k = 1;
        while (!(acc == F9{1, 0})) {
            acc = acc * y;
            ++k;
        }
        if (k == 8) {
            smallest = x;
            break;
        }
    }
    EXPECT_EQ(f.generator(), smallest);
    for (Element x = 0; x < 9; ++x) {
        F9 y = decode(x);
        F9 t = y + y * y * y;
        EXPECT_EQ(t.b, 0);
        EXPECT_EQ(f.trace(x), static_cast<unsigned>(t.a)) << x;
    }
}

TEST(Field, TablesConsistent) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {5, 3}, {7, 2}, {281, 1}}) {
        auto f = build_field(p, r);
        for (Element x = 1; x < f.q(); ++x) EXPECT_EQ(f.exp(f.log(x)), x);
        for (Element a = 0; a < f.q(); a += 7)
            for (Element b = 0; b < f.q(); b += 5) EXPECT_EQ(f.mul(a, b), f.mul_by_polynomial(a, b));
        // linear trace, not identically zero
        bool nonzero = false;
        for (Element a = 0; a < f.q(); ++a) nonzero |= f.trace(a) != 0;
        for (Element a = 0; a < f.q(); a += 3) {
            for (Element b = 0; b < f.q(); b += 11)
                EXPECT_EQ(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % f.p());
        }
        EXPECT_TRUE(nonzero);
    }
}

TEST(Field, Deterministic) {
    auto a = build_field(7, 3), b = build_field(7, 3);
    EXPECT_EQ(a.fingerprint(), b.fingerprint());
    for (std::uint64_t k = 0; k < a.order(); ++k) ASSERT_EQ(a.exp(k), b.exp(k));
}

TEST(Field, Errors) {
    EXPECT_THROW(build_field(15, 1), PreconditionError);
    EXPECT_THROW(build_field(281, 4), CapExceeded);
    EXPECT_THROW(build_field(73, 1).log(0), PreconditionError);
    EXPECT_EQ(PrimePower::parse("281^3").q, 22188041u);
    EXPECT_EQ(PrimePower::parse("49").r, 2u);
    EXPECT_THROW(PrimePower::parse("12"), PreconditionError);
}

TEST(Field, Characters) {
    auto f = build_field(5, 1);
    EXPECT_NEAR(std::abs(additive_character(0, f) - 1.0), 0, 1e-12);
    EXPECT_NEAR(std::abs(additive_character(1, f) - std::polar(1.0, 2 * M_PI / 5)), 0, 1e-12);
    auto g = build_field(3, 3);
    std::complex<double> s = 0;
    for (Element x = 0; x < g.q(); ++x) s += additive_character(x, g);
    EXPECT_NEAR(std::abs(s), 0, 1e-9);
    for (Element x = 1; x < g.q(); ++x) {
        EXPECT_NEAR(std::abs(mult_character_power(x, 0, g) - 1.0), 0, 1e-12);
        EXPECT_NEAR(std::abs(mult_character_power(x, g.order(), g) - 1.0), 0, 1e-9);
    }
    EXPECT_NEAR(std::abs(mult_character_power(g.generator(), 1, g) - std::polar(1.0, 2 * M_PI / 26)), 0, 1e-12);
    EXPECT_THROW(mult_character_power(0, 1, g), PreconditionError);
}

TEST(Gauss, QuadraticQ5) {
    auto f = build_field(5, 1);
    auto t = gauss_sum_table(f);
    EXPECT_NEAR(std::abs(t(2) - std::sqrt(5.0)), 0, 1e-9);
    // oracle: Legendre-weighted sum
    std::complex<double> s = 0;
    for (int x = 1; x < 5; ++x) s += double(arith::legendre(x, 5)) * std::polar(1.0, 2 * M_PI * x / 5);
    EXPECT_NEAR(std::abs(t(2) - s), 0, 1e-9);
}

TEST(Gauss, Identities73) {
    auto f = build_field(73, 1);
    auto t = gauss_sum_table(f, GaussMethod::Direct);
    const double q = 73;
    EXPECT_NEAR(std::abs(t(0) + 1.0), 0, 1e-9);
    for (std::int64_t m = 1; m < 72; ++m) {
        EXPECT_NEAR(std::norm(t(m)), q, 1e-9 * q);
        std::complex<double> rhs = mult_character_power(72, m, f) * q;  // omega(-1)^m q
        EXPECT_NEAR(std::abs(t(m) * t(-m) - rhs), 0, 1e-9 * q);
    }
}

TEST(Gauss, DftMatchesDirect) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{73, 1}, {2, 6}, {3, 4}, {7, 3}, {101, 1}, {997, 1}, {3, 8}, {9973, 1}}) {
        auto f = build_field(p, r);
        auto a = gauss_sums_direct(f), b = gauss_sums_dft(f);
        double worst = 0;
        for (std::size_t m = 0; m < a.size(); ++m) worst = std::max(worst, std::abs(a[m] - b[m]));
        EXPECT_LT(worst, 1e-9 * f.q()) << p << "^" << r;
        EXPECT_NEAR(std::abs(b[0] + 1.0), 0, 1e-6);
    }
}

TEST(Gauss, NormExtension) {
    auto t = gauss_sum_table(build_field(5, 4));
    for (std::int64_t m = 1; m < 624; ++m) EXPECT_NEAR(std::norm(t(m)), 625, 1e-9 * 625);
}

TEST(Gauss, Cache) {
    FieldCache cache;
    auto a = cache.gauss(13, 2), b = cache.gauss(13, 2);
    EXPECT_EQ(a.get(), b.get());
    auto c = cache.gauss(13, 2, {0, 1});
    EXPECT_NE(c->field->generator(), a->field->generator());
}
