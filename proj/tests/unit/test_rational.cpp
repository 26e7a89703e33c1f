#include <doctest.h>

#include "qgw/errors.hpp"
#include "qgw/qseries.hpp"
#include "qgw/rational.hpp"

using namespace qgw;

TEST_CASE("frac reduces to lowest terms") {
    CHECK(frac(-200, 24) == frac(-25, 3));
    CHECK(frac(-200, 24).get_den() == 3);
    CHECK(frac(4, -6).get_num() == -2);
}

TEST_CASE("parse and print rationals") {
    CHECK(parse_rat("3/6") == frac(1, 2));
    CHECK(parse_rat(" -7 ") == Rat(-7));
    CHECK(parse_rat("123456789012345678901234567890") == Rat(Int("123456789012345678901234567890")));
    CHECK(to_string(frac(-25, 12)) == "-25/12");
    CHECK(to_string(Rat(2875)) == "2875");
    for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.5", "--1"}) CHECK_THROWS_AS(parse_rat(bad), parse_error);
}

TEST_CASE("combinatorial numbers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(5, 7) == 0);
    CHECK(falling_factorial(7, 3) == 210);
    CHECK(falling_factorial(2, 3) == 0);
    CHECK(falling_factorial(-1, 2) == 2);
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(pow(frac(-2, 3), 3) == frac(-8, 27));
    CHECK(pow(frac(2, 3), -2) == frac(9, 4));
}

TEST_CASE("Bernoulli numbers agree with the expansion of t/(e^t - 1)") {
    const int N = 24;
    QSeries s(N);  // (e^t - 1)/t
    for (int k = 0; k <= N; ++k) s[k] = Rat(1) / Rat(factorial(k + 1));
    const QSeries gen = inv(s);
    for (int n = 0; n <= N; ++n) CHECK(bernoulli(n) == gen[n] * Rat(factorial(n)));
    CHECK(bernoulli(1) == frac(-1, 2));
    CHECK(bernoulli(2) == frac(1, 6));
    CHECK(bernoulli(4) == frac(-1, 30));
}
