#include <doctest.h>

#include "qgw/errors.hpp"
#include "qgw/gauge.hpp"
#include "random.hpp"

using namespace qgw;

TEST_CASE("X-polynomials") {
    const XPoly p = XPoly::parse_list("-107/60,-1/12");
    CHECK(p.degree() == 1);
    CHECK(p.to_string() == "-1/12*X - 107/60");
    CHECK(XPoly::parse_list("1,0,0").degree() == 0);
    CHECK(XPoly().degree() == -1);
    CHECK(XPoly::parse_list("1,2") + XPoly::parse_list("-1,-2") == XPoly());
    const MirrorData md = build_mirror(8);
    CHECK(XPoly::parse_list("0,0,1").eval(md) == md.X * md.X);
    CHECK_THROWS_AS(XPoly::parse_list("1,a"), parse_error);
}

TEST_CASE("gauge parsing") {
    const Gauge s = Gauge::special();
    CHECK(Gauge::parse(s.to_string()) == s);
    CHECK(Gauge::parse("c1b=3/5;c2=-2/25;c3=-4/125") == s);
    CHECK(Gauge::parse("") == Gauge::zero());
    testing::Random rnd(41);
    for (int i = 0; i < 10; ++i) {
        const Gauge g = rnd.gauge();
        CHECK(Gauge::parse(g.to_string()) == g);
    }
    CHECK_THROWS_AS(Gauge::parse("c1a=1,2,3"), invalid_gauge);
    CHECK_THROWS_AS(Gauge::parse("c2=1,2,3,4"), invalid_gauge);
    CHECK_THROWS_AS(Gauge::parse("c3=1,2,3,4,5"), invalid_gauge);
    CHECK_THROWS_AS(Gauge::parse("c4=1"), parse_error);
    CHECK_THROWS_AS(Gauge::parse("c1a"), parse_error);
    CHECK_THROWS_AS(Gauge::parse("c1a=x"), parse_error);
}

TEST_CASE("propagators") {
    const MirrorData md = build_mirror(12);
    testing::Random rnd(42);
    const Gauge g = rnd.gauge();
    const PropagatorSet p = PropagatorSet::make(g, md);
    const QSeries& A = md.A;
    const QSeries& B = md.B1;
    const QSeries& X = md.X;
    CHECK(p.E_psi == B + g.c1a.eval(md));
    CHECK(p.E_phiphi == A + Rat(2) * B + g.c1b.eval(md));
    CHECK(p.E_phipsi == -md.B2 - g.c1b.eval(md) * B + g.c2.eval(md));
    const PropagatorSet t = p.modified();
    CHECK(t.E_phiphi == p.E_phiphi);
    CHECK(t.E_phipsi == p.E_psi * p.E_phiphi + p.E_phipsi);
    CHECK(t.E_psipsi == p.E_psi * p.E_psi * p.E_phiphi + Rat(2) * p.E_psi * p.E_phipsi + p.E_psipsi);
    // In gauge zero the modified propagators depend on the generators only through the
    // combinations E1 = A + 2B, E2 = -B2 + B E1 and E3.
    const PropagatorSet z = PropagatorSet::make(Gauge::zero(), md).modified();
    const QSeries E1 = A + Rat(2) * B;
    CHECK(z.E_phiphi == E1);
    CHECK(z.E_phipsi == -md.B2 + B * E1);
    CHECK(z.E_psipsi == -md.B3 - (B + X) * md.B2 + E1 * B * B - frac(2, 5) * X * B);
}
