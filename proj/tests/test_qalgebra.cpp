#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "bpart/qseries.hpp"
#include "bpart/xpoly.hpp"

using namespace bpart;

namespace {

QSeries from_monomials(int order, std::initializer_list<std::pair<int, XPoly>> terms) {
    QSeries s(order);
    for (const auto& [degree, coeff] : terms) s += QSeries::monomial(order, degree, coeff);
    return s;
}

// Independent counter: partitions of `total` into even parts of size at
// most `cap` (order of parts irrelevant).
long long count_even_partitions(int total, int cap) {
    if (total == 0) return 1;
    if (total < 0 || cap < 2) return 0;
    std::vector<long long> ways(static_cast<std::size_t>(total) + 1, 0);
    ways[0] = 1;
    for (int part = 2; part <= cap; part += 2) {
        for (int value = part; value <= total; ++value) {
            ways[static_cast<std::size_t>(value)] += ways[static_cast<std::size_t>(value - part)];
        }
    }
    return ways.back();
}

BigInt binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    BigInt result = 1;
    for (int i = 0; i < b; ++i) {
        result *= a - i;
        result /= i + 1;
    }
    return result;
}

XPoly random_xpoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> degree(0, 3);
    const int top = degree(rng);
    XPoly p;
    for (int i = 0; i <= top; ++i) p += XPoly::x_power(i, coeff(rng));
    return p;
}

QSeries random_series(std::mt19937& rng, int order) {
    QSeries s(order);
    for (int k = 0; k <= order; ++k) s += QSeries::monomial(order, k, random_xpoly(rng));
    return s;
}

} // namespace

TEST_CASE("xpoly basics and canonical form") {
    CHECK(XPoly{}.is_zero());
    CHECK(XPoly{}.degree() == -1);
    CHECK((XPoly{1, 2, 1}).degree() == 2);
    CHECK((XPoly{1, 2, 1}).at_one() == 4);
    CHECK((XPoly{0, 1} - XPoly{0, 1}).is_zero());
    CHECK(XPoly{1, 0, 0} == XPoly{1}); // trailing zeros are stripped
    CHECK(XPoly::x_power(3, 0).is_zero());
    CHECK((XPoly{1, 1} * XPoly{1}) == XPoly{1, 1});
    CHECK((XPoly{1, 1} * XPoly{1, -1}) == (XPoly{1, 0, -1}));
    CHECK((XPoly{1, 2, 1} * XPoly::x_power(1)) == (XPoly{0, 1, 2, 1}));
}

TEST_CASE("xpoly rendering") {
    CHECK(XPoly{}.str() == "0");
    CHECK(XPoly{6, 3}.str() == "6+3x");
    CHECK((XPoly{1, 2, 1}).str() == "1+2x+x^2");
    CHECK((XPoly{-1, 1}).str() == "-1+x");
    CHECK((XPoly{1, 0, -2}).str() == "1-2x^2");
    CHECK(XPoly::x_power(1).str() == "x");
}

TEST_CASE("series multiplication examples") {
    const int order = 4;
    // (1 + x q^2)(1 - q^2) = 1 + (x-1) q^2 - x q^4
    const QSeries a = from_monomials(order, {{0, XPoly{1}}, {2, XPoly{0, 1}}});
    const QSeries b = from_monomials(order, {{0, XPoly{1}}, {2, XPoly{-1}}});
    const QSeries expected =
        from_monomials(order, {{0, XPoly{1}}, {2, XPoly{-1, 1}}, {4, XPoly{0, -1}}});
    CHECK(a * b == expected);

    // multiplicative identity
    CHECK(a * QSeries::one(order) == a);

    // truncation drops q^4 at order 3
    const QSeries q2 = QSeries::monomial(3, 2, XPoly{1});
    CHECK((q2 * q2).is_zero());
}

TEST_CASE("series order discipline") {
    const QSeries a = QSeries::one(4);
    const QSeries b = QSeries::one(6);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK(a * b.truncated(4) == QSeries::one(4));
    CHECK(b.truncated(4).order() == 4);
    CHECK(b.truncated(6) == b); // idempotent at the same order
    CHECK_THROWS_AS(a.truncated(5), std::invalid_argument);
}

TEST_CASE("coefficient access") {
    const QSeries s = QSeries::one(4) - QSeries::monomial(4, 2, XPoly{1});
    CHECK(s.coeff(0) == XPoly{1});
    CHECK(s.coeff(1).is_zero());
    CHECK(s.coeff(2) == XPoly{-1});
    CHECK_THROWS_AS(s.coeff(5), std::invalid_argument);
    CHECK_THROWS_AS(s.coeff(-1), std::invalid_argument);
}

TEST_CASE("series rendering") {
    CHECK(QSeries(3).str() == "0");
    CHECK(QSeries::one(3).str() == "1");
    const QSeries s = from_monomials(30, {{23, XPoly::x_power(2)}, {25, XPoly::x_power(2)}});
    CHECK(s.str() == "x^2*q^23 + x^2*q^25");
    const QSeries t = QSeries::one(4) - QSeries::monomial(4, 2, XPoly{2});
    CHECK(t.str() == "1 - 2*q^2");
}

TEST_CASE("even q-Pochhammer symbols") {
    CHECK(q_pochhammer_even(0, 6) == QSeries::one(6));
    CHECK(q_pochhammer_even(1, 6) ==
          from_monomials(6, {{0, XPoly{1}}, {2, XPoly{-1}}}));
    CHECK(q_pochhammer_even(2, 6) ==
          from_monomials(6, {{0, XPoly{1}}, {2, XPoly{-1}}, {4, XPoly{-1}}, {6, XPoly{1}}}));
}

TEST_CASE("inverse even q-Pochhammer symbols") {
    CHECK(inv_q_pochhammer_even(0, 6) == QSeries::one(6));
    // geometric series for a single factor
    CHECK(inv_q_pochhammer_even(1, 6) ==
          from_monomials(6, {{0, XPoly{1}}, {2, XPoly{1}}, {4, XPoly{1}}, {6, XPoly{1}}}));
    // counts partitions of 0, 2, 4, 6 into parts from {2, 4}
    CHECK(inv_q_pochhammer_even(2, 6) ==
          from_monomials(6, {{0, XPoly{1}}, {2, XPoly{1}}, {4, XPoly{2}}, {6, XPoly{2}}}));
}

TEST_CASE("inverse Pochhammer coefficients count bounded even partitions") {
    const int order = 24;
    for (int d = 0; d <= 6; ++d) {
        const QSeries inv = inv_q_pochhammer_even(d, order);
        for (int k = 0; k <= order; ++k) {
            const long long expected = (k % 2 == 0) ? count_even_partitions(k, 2 * d) : 0;
            CAPTURE(d);
            CAPTURE(k);
            CHECK(inv.coeff(k) == XPoly(expected));
        }
    }
}

TEST_CASE("Pochhammer times inverse is exactly one") {
    for (int d = 0; d <= 12; ++d) {
        for (int order = 0; order <= 60; ++order) {
            CAPTURE(d);
            CAPTURE(order);
            CHECK(q_pochhammer_even(d, order) * inv_q_pochhammer_even(d, order) ==
                  QSeries::one(order));
        }
    }
}

TEST_CASE("Gaussian polynomial base cases and small values") {
    CHECK(q_binomial(5, -1, 1, 10).is_zero());
    CHECK(q_binomial(3, 4, 1, 10).is_zero());
    CHECK(q_binomial(0, 0, 1, 10) == QSeries::one(10));
    // [2;1] = 1 + q
    CHECK(q_binomial(2, 1, 1, 10) == from_monomials(10, {{0, XPoly{1}}, {1, XPoly{1}}}));
    // [3;2] in q^2 = 1 + q^2 + q^4
    CHECK(q_binomial(3, 2, 2, 10) ==
          from_monomials(10, {{0, XPoly{1}}, {2, XPoly{1}}, {4, XPoly{1}}}));
    CHECK_THROWS_AS(q_binomial(3, 2, 0, 10), std::invalid_argument);
}

TEST_CASE("Gaussian polynomial symmetry, positivity, q=1 specialization") {
    const int order = 110; // covers degree B(A-B) <= 100 for A <= 20
    for (int a = 0; a <= 20; ++a) {
        for (int b = 0; b <= a; ++b) {
            const QSeries lhs = q_binomial(a, b, 1, order);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(lhs == q_binomial(a, a - b, 1, order));
            for (int k = 0; k <= order; ++k) {
                const XPoly& c = lhs.coeff(k);
                CHECK(c.degree() <= 0);
                CHECK(c.coeff(0) >= 0);
            }
            CHECK(lhs.q_coefficient_sum() == XPoly(binomial(a, b)));
        }
    }
}

TEST_CASE("ring laws on random truncated series") {
    std::mt19937 rng(20240615);
    const int order = 8;
    for (int round = 0; round < 40; ++round) {
        const QSeries a = random_series(rng, order);
        const QSeries b = random_series(rng, order);
        const QSeries c = random_series(rng, order);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QSeries::one(order) == a);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("x evaluation helpers") {
    const QSeries s = from_monomials(6, {{2, XPoly{1, 2}}, {4, XPoly{0, 0, 3}}});
    const QSeries collapsed = s.at_x_one();
    CHECK(collapsed.coeff(2) == XPoly{3});
    CHECK(collapsed.coeff(4) == XPoly{3});
    CHECK(s.shifted(2).coeff(4) == XPoly{1, 2});
    CHECK(s.scaled(XPoly{2}).coeff(2) == XPoly{2, 4});
}
