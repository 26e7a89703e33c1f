#include <doctest.h>

#include "qgw/errors.hpp"
#include "qgw/quantizer.hpp"
#include "qgw/solver.hpp"
#include "random.hpp"

using namespace qgw;

namespace {

MultiSeries random_multiseries(testing::Random& rnd, int order, int W) {
    MultiSeries F(order, W);
    for (int k = 0; 2 * k <= W; ++k)
        for (int a = 0; 2 * k + a <= W; ++a)
            for (int b = 0; 2 * k + a + b <= W; ++b)
                if (2 * k + a + b > 0 && rnd.integer(0, 2) == 0) F.add(k, a, b, rnd.series(order));
    return F;
}

bool same(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries d = a;
    MultiSeries nb = b;
    nb *= Rat(-1);
    d += nb;
    return d.is_zero();
}

}  // namespace

TEST_CASE("weight grading and products") {
    CHECK(MultiSeries::weight({1, 2, 3}) == 7);
    MultiSeries a(4, 3);
    a.add(0, 1, 0, QSeries::constant(1, 4));
    const MultiSeries cube = a * a * a;
    CHECK(cube.coeff(0, 3, 0) == QSeries::constant(1, 4));
    CHECK((cube * a).is_zero());  // weight 4 exceeds the truncation
}

TEST_CASE("exp and log are inverse") {
    testing::Random rnd(61);
    for (int trial = 0; trial < 3; ++trial) {
        const MultiSeries F = random_multiseries(rnd, 4, 5);
        CHECK(same(log_series(exp_series(F)), F));
    }
    MultiSeries c(4, 3);
    c.add(0, 0, 0, QSeries::constant(1, 4));
    CHECK_THROWS_AS(exp_series(c), bad_constant_term);
    CHECK_THROWS_AS(log_series(MultiSeries(4, 3)), bad_constant_term);
}

TEST_CASE("shifts compose") {
    testing::Random rnd(62);
    const MultiSeries F = random_multiseries(rnd, 5, 5);
    const QSeries e = rnd.series(5), f = rnd.series(5);
    CHECK(same(shift_y(shift_y(F, e), f), shift_y(F, e + f)));
    CHECK(same(shift_y(shift_y(F, e), -e), F));
}

TEST_CASE("both orderings of shift and quantization agree") {
    testing::Random rnd(63);
    const MirrorData md = build_mirror(5);
    const PropagatorSet props = PropagatorSet::make(rnd.gauge(), md);
    MultiSeries F = random_multiseries(rnd, 5, 4);
    CHECK(same(quantize(F, props, Route::shift_first), quantize(F, props, Route::shift_last)));
}

TEST_CASE("quantizer matches the graph sums through genus two") {
    const MirrorData md = build_mirror(10);
    const ClassicalData cl = ClassicalData::from_mirror(md);
    VertexTable t = VertexTable::genus_zero(md, 3);
    solve_genus(1, Gauge::special(), md, t, cl, 5);
    solve_genus(2, Gauge::special(), md, t, cl, 5);
    testing::Random rnd(64);
    for (const Gauge& g : {Gauge::special(), rnd.gauge()}) {
        const OracleReport rep = compare_oracle(2, 3, g, md, t);
        CHECK(rep.convention == Convention::factorial);
        CHECK(rep.ok());
        CHECK(rep.entries.size() == 23);
    }
}

TEST_CASE("the logarithmic term shifts (1,0,n) by (n-1)!") {
    const MirrorData md = build_mirror(8);
    const ClassicalData cl = ClassicalData::from_mirror(md);
    VertexTable t = VertexTable::genus_zero(md, 3);
    solve_genus(1, Gauge::special(), md, t, cl, 5);
    const int W = 3;
    t.extend(0, W + 2, md);
    t.extend(1, W, md);
    const PropagatorSet props = PropagatorSet::make(Gauge::special(), md);
    const MultiSeries PB = build_PB(1, W, t, md);
    const MultiSeries fB = quantize(PB, props), fA = quantize(add_log_term(PB, 1), props);
    for (int n = 1; n <= 3; ++n)
        CHECK((extract(fA, 1, 0, n) - extract(fB, 1, 0, n)) * Rat(factorial(n)) ==
              QSeries::constant(Rat(factorial(n - 1)), 8));
    CHECK_THROWS_AS(extract(fB, 1, 0, 4), truncation_overflow);
    CHECK_THROWS_AS(extract(fB, 2, 0, 0), truncation_overflow);
}
