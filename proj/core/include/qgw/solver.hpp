#pragma once

#include <vector>

#include "qgw/classical.hpp"
#include "qgw/feynman.hpp"
#include "qgw/gauge.hpp"
#include "qgw/xpoly.hpp"

namespace qgw {

// Fits s = sum_{k<=maxdeg} c_k X^k on q^0..q^maxdeg and checks every remaining coefficient
// (at least `margin` of them). Throws not_polynomial with the first failing order.
XPoly fit_X_polynomial(const QSeries& s, const MirrorData& md, int maxdeg, int margin);

struct SolveReport {
    int genus = 0;
    int insertions = 0;                // m of the solved P_{g,m}: 1 at genus one, else 0
    Gauge gauge;
    XPoly ambiguity;                   // f_{g,m} in the solve gauge, original rule
    XPoly ambiguity_gauge_zero;        // f_{g,m} of the modified rule in gauge zero
    QSeries P;                         // P_{g,m}
    std::vector<Rat> invariants;       // N_{g,d}, d = 0..order (index 0 unused at genus <= 1)
    int residual_margin = 0;           // extra coefficients verified by every polynomiality check
};

// sum_d N_{0,d} Q^d packaged as a report (no ambiguity).
SolveReport solve_genus0(const MirrorData& md);

// One step of the recursion. Lower-genus entries of `table` are raised as needed and P_{g,m} is
// stored on success. Throws insufficient_initial_data, not_polynomial.
SolveReport solve_genus(int g, const Gauge& gauge, const MirrorData& md, VertexTable& table,
                        const ClassicalData& classical, int margin = 10, int threads = 1);

// Raises every genus present in `table` far enough for graph sums of type (g, m, n).
void prepare_table(Rule rule, int g, int m, int n, const MirrorData& md, VertexTable& table, int threads = 1);

}  // namespace qgw
