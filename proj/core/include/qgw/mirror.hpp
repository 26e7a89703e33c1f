#pragma once

#include <map>
#include <utility>

#include "qgw/qseries.hpp"

namespace qgw {

inline constexpr int quintic_degree = 5;
inline constexpr int quintic_euler = -200;

// I-function components, mirror map and the generator series, all to a common q-order.
struct MirrorData {
    int order = 0;
    QSeries I0, I1, I2, I3;
    QSeries J1, J2, J3;
    QSeries I11, I22;
    QSeries X, Y;
    QSeries A;                // D I11 / I11
    QSeries B1, B2, B3, B4;   // D^p I0 / I0
    QSeries mirror_map;       // Q(q) = q exp J1
    QSeries inverse_map;      // q(Q)
};

MirrorData build_mirror(int order);

// sum_{d>=1} N_{0,d} Q^d, the genus-zero potential without its cubic log term.
QSeries genus0_potential(const MirrorData& md);

// (Q d/dQ)^3 F_0 = 5 + sum d^3 N_{0,d} Q^d as a series in Q.
QSeries yukawa(const MirrorData& md);

// P_{g,m+1} from P_{g,m}.
QSeries raise_m(int g, const QSeries& P_gm, int m, const MirrorData& md);

// (5Y)^{-1} I0^2 I11^3 (Q d/dQ)^3 F_0 in q; throws mirror_identity_violation unless it is 1.
QSeries vertex_P03(const MirrorData& md);

// Normalized potentials P_{g,m}, filled in genus by genus.
class VertexTable {
public:
    void set(int g, int m, QSeries P);
    bool has(int g, int m) const;
    const QSeries& get(int g, int m) const;  // throws missing_vertex_data
    // Ensures P_{g,0..m_max} (from the lowest stored m of genus g upwards) by repeated raising.
    void extend(int g, int m_max, const MirrorData& md);
    int max_m(int g) const;  // -1 when genus g is absent
    void erase_genus(int g);

    // Table holding P_{0,3} = 1 and its raises up to m_max.
    static VertexTable genus_zero(const MirrorData& md, int m_max);

private:
    std::map<std::pair<int, int>, QSeries> p_;
};

}  // namespace qgw
