#include <doctest.h>

#include "qgw/errors.hpp"
#include "qgw/qseries.hpp"
#include "random.hpp"

using namespace qgw;

namespace {
QSeries q_(int order) { return QSeries::monomial(1, 1, order); }
}  // namespace

TEST_CASE("ring axioms on random series") {
    testing::Random rnd(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rnd.integer(0, 12);
        QSeries a = rnd.series(n), b = rnd.series(n), c = rnd.series(n);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == QSeries(n));
        CHECK(a - b == a + (-b));
    }
}

TEST_CASE("truncation follows the smaller order") {
    QSeries a = QSeries::constant(1, 3), b = QSeries::constant(2, 7);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK(QSeries::monomial(5, 1, 4).is_zero());
}

TEST_CASE("inverse, exp, log round trips") {
    testing::Random rnd(12);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rnd.integer(1, 10);
        QSeries a = rnd.series(n, rnd.integer(1, 5));
        CHECK(a * inv(a) == QSeries::constant(1, n));
        QSeries z = rnd.series(n, 0);
        CHECK(log(exp(z)) == z);
        CHECK(exp(log(z + Rat(1))) == z + Rat(1));
    }
    CHECK_THROWS_AS(inv(q_(5)), zero_constant_term);
    CHECK_THROWS_AS(log(QSeries::constant(2, 5)), bad_constant_term);
    CHECK_THROWS_AS(exp(QSeries::constant(1, 5)), bad_constant_term);
}

TEST_CASE("exp is a homomorphism") {
    testing::Random rnd(13);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = rnd.series(9, 0), b = rnd.series(9, 0);
        CHECK(exp(a + b) == exp(a) * exp(b));
    }
}

TEST_CASE("D is a derivation and lowers no order") {
    testing::Random rnd(14);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = rnd.series(10), b = rnd.series(10);
        CHECK(D(a * b) == D(a) * b + a * D(b));
        for (int k = 0; k <= 10; ++k) CHECK(D(a)[k] == a[k] * k);
    }
}

TEST_CASE("powers agree with repeated products") {
    testing::Random rnd(15);
    QSeries a = rnd.series(8);
    QSeries p = QSeries::constant(1, 8);
    for (int n = 0; n <= 6; ++n) {
        CHECK(pow(a, n) == p);
        p *= a;
    }
}

TEST_CASE("composition and reversion") {
    testing::Random rnd(16);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries f = rnd.series(9, 0);
        f[1] = 1;
        QSeries g = revert_monic(f);
        CHECK(compose(f, g) == q_(9));
        CHECK(compose(g, f) == q_(9));
        QSeries a = rnd.series(9), b = rnd.series(9);
        CHECK(compose(a * b, f) == compose(a, f) * compose(b, f));
    }
    CHECK_THROWS_AS(revert_monic(QSeries::monomial(1, 2, 5)), not_monic);
    CHECK_THROWS(compose(q_(5), QSeries::constant(1, 5)));
}

TEST_CASE("reversion of q + q^2 gives signed Catalan numbers") {
    const int N = 15;
    QSeries f = q_(N) + QSeries::monomial(2, 1, N);
    QSeries g = revert_monic(f);
    for (int n = 1; n <= N; ++n) {
        const Int catalan = binomial(2 * (n - 1), n - 1) / n;
        CHECK(g[n] == Rat(n % 2 ? catalan : Int(-catalan)));
    }
}

TEST_CASE("first_difference and printing") {
    QSeries a = QSeries::constant(1, 5), b = a;
    CHECK(first_difference(a, b) == -1);
    b[3] = frac(1, 2);
    CHECK(first_difference(a, b) == 3);
    CHECK(b.valuation() == 0);
    CHECK(QSeries::monomial(2, 3, 4).valuation() == 2);
    CHECK(QSeries::monomial(1, -2, 2).to_string() == "-2*q + O(q^3)");
}
