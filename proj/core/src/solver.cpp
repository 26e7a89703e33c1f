#include "qgw/solver.hpp"

#include <map>

#include "qgw/errors.hpp"

namespace qgw {

XPoly fit_X_polynomial(const QSeries& s, const MirrorData& md, int maxdeg, int margin) {
    if (maxdeg < 0 || margin < 0 || s.order() < maxdeg + margin)
        throw std::invalid_argument("fit_X_polynomial: order " + std::to_string(s.order()) +
                                    " too small for degree " + std::to_string(maxdeg) + " plus margin " +
                                    std::to_string(margin));
    const int order = std::min(s.order(), md.order);
    if (order < maxdeg + margin) throw std::invalid_argument("fit_X_polynomial: mirror data order too small");
    // X^k = (-3125)^k q^k + O(q^{k+1}): solve the triangular system column by column.
    std::vector<Rat> c(static_cast<std::size_t>(maxdeg) + 1, Rat(0));
    QSeries rest = s.truncated(order);
    QSeries xk = QSeries::constant(1, order);
    for (int k = 0; k <= maxdeg; ++k) {
        c[k] = rest[k] / xk[k];
        rest -= xk * c[k];
        xk = xk * md.X;
    }
    for (int k = maxdeg + 1; k <= order; ++k)
        if (rest[k] != 0) throw not_polynomial(k);
    return XPoly(std::move(c));
}

void prepare_table(Rule rule, int g, int m, int n, const MirrorData& md, VertexTable& table, int threads) {
    std::map<int, int> need;
    for (const auto& [mono, coeff] : symbolic_graph_sum(rule, g, m, n, threads))
        for (auto [s, e] : mono)
            if (sym::is_vertex(s)) {
                int& slot = need[sym::vertex_genus(s)];
                slot = std::max(slot, sym::vertex_m(s));
            }
    for (auto [h, mm] : need) {
        if (table.max_m(h) < 0) {
            if (h == g) continue;
            if (h == 0) {
                table.set(0, 3, vertex_P03(md));
            } else {
                throw missing_vertex_data(h, h == 1 ? 1 : 0);
            }
        }
        table.extend(h, mm, md);
    }
}

SolveReport solve_genus0(const MirrorData& md) {
    SolveReport r;
    r.genus = 0;
    r.insertions = 3;
    QSeries f = genus0_potential(md);
    r.P = QSeries::constant(1, md.order);
    r.invariants = f.coeffs();
    return r;
}

SolveReport solve_genus(int g, const Gauge& gauge, const MirrorData& md, VertexTable& table,
                        const ClassicalData& classical, int margin, int threads) {
    if (g < 1) throw std::invalid_argument("solve_genus requires g >= 1");
    gauge.validate();
    const int m = g == 1 ? 1 : 0;
    const int deg = 3 * g - 3 + m;
    const int order = md.order;
    if (order < deg + 1 + margin)
        throw std::invalid_argument("order " + std::to_string(order) + " too small: genus " + std::to_string(g) +
                                    " needs at least " + std::to_string(deg + 1 + margin));

    table.erase_genus(g);
    prepare_table(Rule::original, g, m, 0, md, table, threads);
    prepare_table(Rule::modified, g, m, 0, md, table, threads);
    prepare_table(Rule::original, g, m + 1, 0, md, table, threads);
    const QSeries R = nonleading_sum(Rule::original, g, m, gauge, md, table, threads);

    // Known part of P_{g,m} in q up to q^deg from the initial data.
    QSeries known(order);
    if (g == 1) {
        QSeries dF(order);  // (Q d/dQ) F_1 = -25/12 + sum d N_{1,d} Q^d
        dF[0] = frac(-25, 12);
        for (int d = 1; d <= deg; ++d) {
            auto v = classical.invariant(1, d);
            if (!v) throw insufficient_initial_data(1, d);
            dF[d] = *v * d;
        }
        known = md.I11 * compose(dF, md.mirror_map);
    } else {
        QSeries F(order);
        for (int d = 0; d <= deg; ++d) {
            auto v = classical.invariant(g, d);
            if (!v) throw insufficient_initial_data(g, d);
            F[d] = *v;
        }
        QSeries five_y = Rat(quintic_degree) * md.Y;
        known = pow(five_y, g - 1) * inv(pow(md.I0, 2 * g - 2)) * compose(F, md.mirror_map);
    }

    SolveReport r;
    r.genus = g;
    r.insertions = m;
    r.gauge = gauge;
    r.ambiguity = fit_X_polynomial((known + R).truncated(deg), md, deg, 0);
    r.P = r.ambiguity.eval(md) - R;

    // Back to F_g in Q.
    QSeries Fq = g == 1 ? r.P * inv(md.I11)
                        : pow(md.I0, 2 * g - 2) * inv(pow(Rat(quintic_degree) * md.Y, g - 1)) * r.P;
    QSeries FQ = compose(Fq, md.inverse_map);
    r.invariants.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    for (int d = 0; d <= order; ++d) r.invariants[d] = g == 1 ? (d ? FQ[d] / d : Rat(0)) : FQ[d];
    for (int d = (g == 1 ? 1 : 0); d <= deg; ++d)
        if (r.invariants[d] != *classical.invariant(g, d))
            throw error("internal: solved F_" + std::to_string(g) + " does not reproduce its initial datum at degree " +
                        std::to_string(d));

    table.set(g, m, r.P);
    // Polynomiality checks with margin: modified rule in gauge zero, and one more insertion here.
    prepare_table(Rule::modified, g, m, 0, md, table, threads);
    r.ambiguity_gauge_zero =
        fit_X_polynomial(graph_sum_modified(g, m, 0, Gauge::zero(), md, table, threads), md, deg, margin);
    table.extend(g, m + 1, md);
    fit_X_polynomial(graph_sum_B(g, m + 1, 0, gauge, md, table, threads), md, deg + 1, margin);
    r.residual_margin = order - deg - 1;
    return r;
}

}  // namespace qgw
