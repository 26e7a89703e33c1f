#include <doctest.h>

#include "qgw/feynman.hpp"
#include "qgw/solver.hpp"
#include "qgw/stable_graph.hpp"
#include "random.hpp"

using namespace qgw;

namespace {

const MirrorData& md10() {
    static const MirrorData md = build_mirror(10);
    return md;
}

// Arbitrary vertex data: the graph-sum identities hold for any values of P_{g,m}.
VertexTable random_table(testing::Random& rnd, int order) {
    VertexTable t;
    t.set(0, 3, rnd.series(order));
    t.set(1, 1, rnd.series(order));
    t.set(2, 0, rnd.series(order));
    return t;
}

// Direct expansion: every half-edge typed phi or psi, every leg as the rule prescribes.
QSeries naive_sum(Rule rule, int g, int m, int n, const PropagatorSet& props, const VertexTable& table, int order) {
    const PropagatorSet edge = rule == Rule::original ? props : props.modified();
    auto weight = [&](int gv, int mv, int nv) {
        if (rule == Rule::original) return vertex_weight(gv, mv, nv, table, order);
        QSeries w(order);
        for (int j = 0; j <= mv; ++j)
            w += vertex_weight(gv, mv - j, nv + j, table, order) * pow(-props.E_psi, j) * Rat(binomial(mv, j));
        return w;
    };
    QSeries total(order);
    for (const auto& G : enumerate(g, m + n)) {
        const int E = G.num_edges(), L = G.num_legs();
        const int branch_bits = rule == Rule::original ? m : 0;
        for (long mask = 0; mask < (1L << (2 * E + branch_bits)); ++mask) {
            std::vector<int> mv(G.num_vertices(), 0), nv(G.num_vertices(), 0);
            QSeries term = QSeries::constant(Rat(1) / Rat(static_cast<unsigned long>(G.aut)), order);
            for (int e = 0; e < E; ++e) {
                const int tu = (mask >> (2 * e)) & 1, tv = (mask >> (2 * e + 1)) & 1;
                (tu ? nv : mv)[G.edges[e].first]++;
                (tv ? nv : mv)[G.edges[e].second]++;
                term *= tu + tv == 0 ? edge.E_phiphi : tu + tv == 1 ? edge.E_phipsi : edge.E_psipsi;
            }
            for (int l = 0; l < L; ++l) {
                const int v = G.legs[l];
                if (l >= m) {
                    nv[v]++;
                } else if (branch_bits && ((mask >> (2 * E + l)) & 1)) {
                    nv[v]++;
                    term *= -props.E_psi;
                } else {
                    mv[v]++;
                }
            }
            for (int v = 0; v < G.num_vertices(); ++v) term *= weight(G.genus[v], mv[v], nv[v]);
            total += term;
        }
    }
    return total;
}

}  // namespace

TEST_CASE("vertex weights") {
    const auto& md = md10();
    VertexTable t = VertexTable::genus_zero(md, 6);
    CHECK(vertex_weight(1, 0, 1, t, 10) == QSeries::constant(frac(-28, 3), 10));
    CHECK(vertex_weight(1, 0, 3, t, 10) == QSeries::constant(frac(-56, 3), 10));
    CHECK(vertex_weight(0, 3, 0, t, 10) == QSeries::constant(1, 10));
    // P_{0,3,1} = (2g+m+n-3)_n P_{0,3} = 1
    CHECK(vertex_weight(0, 3, 1, t, 10) == QSeries::constant(1, 10));
    CHECK(vertex_weight(0, 3, 2, t, 10) == QSeries::constant(2, 10));
    CHECK(vertex_weight(0, 4, 1, t, 10) == t.get(0, 4) * Rat(2));
    CHECK(vertex_weight(0, 2, 1, t, 10).is_zero());
}

TEST_CASE("symbolic contraction equals the direct half-edge expansion") {
    testing::Random rnd(21);
    const int order = 6;
    const MirrorData md = build_mirror(order);
    for (int trial = 0; trial < 2; ++trial) {
        VertexTable t = random_table(rnd, order);
        const Gauge gauge = rnd.gauge();
        const PropagatorSet props = PropagatorSet::make(gauge, md);
        for (int g = 0; g <= 2; ++g)
            for (int legs = 0; legs <= 2; ++legs)
                for (int m = 0; m <= legs; ++m) {
                    const int n = legs - m;
                    if (2 * g - 2 + legs <= 0) continue;
                    for (int h = 0; h <= g; ++h) t.extend(h, 2 * (g - h) + legs + 2, md);
                    INFO("g=" << g << " m=" << m << " n=" << n);
                    CHECK(graph_sum_B(g, m, n, gauge, md, t) == naive_sum(Rule::original, g, m, n, props, t, order));
                    CHECK(graph_sum_modified(g, m, n, gauge, md, t) ==
                          naive_sum(Rule::modified, g, m, n, props, t, order));
                }
    }
}

TEST_CASE("original and modified rules give the same sums") {
    testing::Random rnd(22);
    const int order = 6;
    const MirrorData md = build_mirror(order);
    VertexTable t = random_table(rnd, order);
    for (int h = 0; h <= 2; ++h) t.extend(h, 8 - 2 * h, md);
    const Gauge gauge = rnd.gauge();
    for (int g = 0; g <= 2; ++g)
        for (int legs = 0; legs <= 3; ++legs)
            for (int m = 0; m <= legs; ++m) {
                if (2 * g - 2 + legs <= 0) continue;
                INFO("g=" << g << " m=" << m);
                CHECK(graph_sum_B(g, m, legs - m, gauge, md, t) == graph_sum_modified(g, m, legs - m, gauge, md, t));
            }
}

TEST_CASE("A and B sums differ only on (1,0,n)") {
    const auto& md = md10();
    VertexTable t = VertexTable::genus_zero(md, 5);
    t.set(1, 1, md.A);
    t.extend(1, 3, md);
    const Gauge gauge = Gauge::special();
    for (int n = 1; n <= 3; ++n)
        CHECK(graph_sum_A(1, 0, n, gauge, md, t) - graph_sum_B(1, 0, n, gauge, md, t) ==
              QSeries::constant(Rat(factorial(n - 1)), 10));
    CHECK(graph_sum_A(1, 1, 0, gauge, md, t) == graph_sum_B(1, 1, 0, gauge, md, t));
}

TEST_CASE("the non-leading part excludes exactly the leading vertex") {
    const auto& md = md10();
    VertexTable t = VertexTable::genus_zero(md, 6);
    t.set(1, 1, md.B1);
    t.extend(1, 3, md);
    t.set(2, 0, md.A);
    t.extend(2, 1, md);
    const Gauge gauge = Gauge::special();
    CHECK(graph_sum_B(2, 0, 0, gauge, md, t) - nonleading_sum(Rule::original, 2, 0, gauge, md, t) == md.A);
}

TEST_CASE("evaluation is independent of the thread count") {
    const auto& md = md10();
    VertexTable t = VertexTable::genus_zero(md, 8);
    t.set(1, 1, md.B1);
    t.extend(1, 6, md);
    const auto& sum = symbolic_graph_sum(Rule::original, 2, 0, 2, 3);
    CHECK(sum == symbolic_graph_sum(Rule::original, 2, 0, 2, 1));
    t.set(2, 0, md.X);
    t.extend(2, 2, md);
    const PropagatorSet props = PropagatorSet::make(Gauge::special(), md);
    CHECK(evaluate(sum, Rule::original, props, t, {-1, -1}, 1) == evaluate(sum, Rule::original, props, t, {-1, -1}, 4));
}
