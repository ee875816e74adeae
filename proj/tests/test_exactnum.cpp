#include <gtest/gtest.h>

#include <random>

#include "lacuna/exactnum.hpp"

using namespace lacuna;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

RationalPoly rpoly(std::initializer_list<Rational> c) { return RationalPoly(std::vector<Rational>(c)); }

const QuadraticRational w = QuadraticRational::omega();
const QuadraticRational i_unit = QuadraticRational::imag_unit();

} // namespace

TEST(Binomial, Examples) {
    EXPECT_EQ(binomial(5, 3), 10);
    EXPECT_EQ(binomial(11, 9), 55);
    for (unsigned long n : {0UL, 1UL, 7UL, 300UL}) EXPECT_EQ(binomial(n, 0), 1);
    EXPECT_EQ(binomial(3, 4), 0);
}

TEST(Binomial, PascalRuleAndSymmetryUpTo500) {
    for (unsigned long n = 1; n <= 500; ++n) {
        for (unsigned long k = 1; k < n; ++k) {
            ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << ' ' << k;
            ASSERT_EQ(binomial(n, k), binomial(n, n - k));
        }
    }
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("5/66")), "5/66");
    EXPECT_EQ(to_string(parse_rational("-2/4")), "-1/2");
    EXPECT_EQ(to_string(parse_rational("6/3")), "2");
    EXPECT_EQ(to_string(parse_rational("-0")), "0");
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "a", "1.5", "1/-2", "+3", "1 /2"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, RoundTripAndCanonical) {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    for (int t = 0; t < 2000; ++t) {
        long den = dist(rng);
        if (den == 0) den = 1;
        const Rational v = make_rational(dist(rng), den) * make_rational(dist(rng), 7) + make_rational(1, 3);
        ASSERT_TRUE(is_canonical(v));
        ASSERT_EQ(parse_rational(to_string(v)), v);
        ASSERT_EQ(to_string(parse_rational(to_string(v))), to_string(v));
    }
}

TEST(Rational, PowerNegativeExponent) {
    EXPECT_EQ(power(q(2), -3), q(1, 8));
    EXPECT_EQ(power(q(-2, 3), 3), q(-8, 27));
    EXPECT_EQ(power(q(0), 0), q(1));
    EXPECT_THROW(power(q(0), -1), std::domain_error);
}

TEST(Quadratic, PowExamples) {
    EXPECT_EQ(quad_pow(QuadraticRational(-1, 1, 1), 4), QuadraticRational(-1, -4, 0));
    EXPECT_EQ(quad_pow(w, 3), QuadraticRational(-3, 1, 0));
    EXPECT_EQ(quad_pow(QuadraticRational(-3, q(7, 5), q(-2)), 0), QuadraticRational(-3, 1, 0));
    // 1 + w + w^2 = 0
    EXPECT_TRUE((QuadraticRational(-3, 1) + w + quad_pow(w, 2)).is_zero());
}

TEST(Quadratic, TracePowerExamples) {
    EXPECT_EQ(trace_power(w, 3), 2);
    EXPECT_EQ(trace_power(QuadraticRational(-1, 1, 2), 2), -6);
    EXPECT_EQ(trace_power(QuadraticRational(-3, q(-1, 2), q(3, 2)), 4), 71);
}

TEST(Quadratic, MixingFields) {
    EXPECT_THROW(w + i_unit, std::domain_error);
    EXPECT_THROW(w * i_unit, std::domain_error);
    const QuadraticRational two(-1, 2);
    EXPECT_EQ((two * w).surd(), 1);
    EXPECT_EQ((w + two).d(), -3);
    EXPECT_THROW(QuadraticRational(5, 1, 1), std::invalid_argument);
}

TEST(Polynomial, ShiftExamples) {
    EXPECT_EQ(poly_shift(rpoly({0, 0, 1}), q(-1)), rpoly({1, -2, 1}));
    EXPECT_EQ(poly_shift(rpoly({5}), q(17, 3)), rpoly({5}));

    const QuadPoly cubed = poly_shift(rpoly({0, 0, 0, 1}), w);
    const QuadraticRational w2 = quad_pow(w, 2);
    const QuadPoly expected(std::vector<QuadraticRational>{
        QuadraticRational(-3, 1), w2 * q(3), w * q(3), QuadraticRational(-3, 1)});
    EXPECT_EQ(cubed, expected);
    EXPECT_EQ(w2, QuadraticRational(-3, -1) - w);
}

TEST(Polynomial, ReduceToRational) {
    const RationalPoly x = rpoly({0, 1});
    const QuadPoly s1 = poly_shift(x, w) + poly_shift(x, quad_pow(w, 2));
    EXPECT_EQ(poly_reduce_to_rational(s1), rpoly({-1, 2}));

    const RationalPoly x3 = rpoly({0, 0, 0, 1});
    const QuadPoly s3 = poly_shift(x3, w) + poly_shift(x3, quad_pow(w, 2));
    EXPECT_EQ(poly_reduce_to_rational(s3), rpoly({2, -3, -3, 2}));

    try {
        poly_reduce_to_rational(poly_shift(x, w));
        FAIL() << "expected NonRealResidue";
    } catch (const NonRealResidue& e) {
        EXPECT_EQ(e.degree(), 0U);
    }
}

TEST(Polynomial, ShiftRoundTripProperty) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rational> c;
        const int deg = static_cast<int>(rng() % 12);
        for (int k = 0; k <= deg; ++k) c.push_back(make_rational(dist(rng), 1 + (dist(rng) + 50) % 9));
        const RationalPoly p(c);
        const Rational shift = make_rational(dist(rng), 1 + (dist(rng) + 50) % 5);
        ASSERT_EQ(poly_shift(poly_shift(p, shift), Rational(-shift)), p);
        // p(x + c) at x0 equals p(x0 + c)
        const Rational x0 = make_rational(dist(rng), 3);
        ASSERT_EQ(poly_shift(p, shift)(x0), p(Rational(x0 + shift)));

        const QuadraticRational z(t % 2 ? -1 : -3, make_rational(dist(rng), 2), make_rational(dist(rng), 3));
        const QuadPoly lifted = poly_shift(p, z);
        ASSERT_EQ(poly_shift(lifted, -z), lift(p, z.d()));
    }
}

TEST(Polynomial, TracePowerInvariant) {
    // z^e + conj(z)^e is rational for every z, e
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int t = 0; t < 200; ++t) {
        const QuadraticRational z(t % 2 ? -1 : -3, make_rational(dist(rng), 2), make_rational(dist(rng), 5));
        const unsigned long e = rng() % 30;
        const QuadraticRational sum = quad_pow(z, e) + quad_pow(z.conj(), e);
        ASSERT_TRUE(sum.is_rational());
        ASSERT_EQ(trace_power(z, e), sum.real());
    }
}

TEST(Polynomial, ArithmeticAndText) {
    const RationalPoly a = rpoly({1, 1});
    EXPECT_EQ(a * a, rpoly({1, 2, 1}));
    EXPECT_EQ(a - a, RationalPoly());
    EXPECT_EQ(RationalPoly().degree(), -1);
    EXPECT_EQ(poly_pow(a, 3, Rational(0)), rpoly({1, 3, 3, 1}));
    EXPECT_EQ(to_string(rpoly({0, -1, 1})), R"(["0","-1","1"])");
    EXPECT_EQ(to_string(RationalPoly()), "[]");
    EXPECT_EQ(rpoly({q(1, 2), 0, 3})(q(2)), q(25, 2));
}
