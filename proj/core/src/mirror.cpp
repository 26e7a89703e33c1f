#include "qgw/mirror.hpp"

#include <array>

#include "qgw/errors.hpp"

namespace qgw {

namespace {

// Polynomials in H modulo H^4.
using HPoly = std::array<Rat, 4>;

HPoly hmul(const HPoly& a, const HPoly& b) {
    HPoly r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
    return r;
}

// 1 / (H + c) modulo H^4 for c != 0.
HPoly hinv_linear(const Rat& c) {
    HPoly r{};
    Rat t = 1 / c;
    for (int i = 0; i < 4; ++i) {
        r[i] = t;
        t *= -1 / c;
    }
    return r;
}

}  // namespace

MirrorData build_mirror(int order) {
    if (order < 1) throw std::invalid_argument("build_mirror: order must be >= 1");
    MirrorData md;
    md.order = order;
    std::array<QSeries, 4> I{QSeries(order), QSeries(order), QSeries(order), QSeries(order)};

    // term_d(H) = prod_{m=1}^{5d} (5H + m) / prod_{m=1}^{d} (H + m)^5, built incrementally in d
    HPoly term{Rat(1), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 4; ++i) I[i][0] = term[i];
    for (int d = 1; d <= order; ++d) {
        for (int m = 5 * d - 4; m <= 5 * d; ++m) term = hmul(term, HPoly{Rat(m), Rat(5), Rat(0), Rat(0)});
        HPoly den = hinv_linear(Rat(d));
        for (int k = 0; k < 5; ++k) term = hmul(term, den);
        for (int i = 0; i < 4; ++i) I[i][d] = term[i];
    }
    md.I0 = I[0];
    md.I1 = I[1];
    md.I2 = I[2];
    md.I3 = I[3];

    QSeries i0inv = inv(md.I0);
    md.J1 = md.I1 * i0inv;
    md.J2 = md.I2 * i0inv;
    md.J3 = md.I3 * i0inv;
    md.I11 = D(md.J1) + Rat(1);

    md.Y = inv(QSeries::constant(1, order) - QSeries::monomial(1, 3125, order));
    md.X = QSeries::constant(1, order) - md.Y;

    md.A = D(md.I11) * inv(md.I11);
    QSeries d = md.I0;
    std::array<QSeries*, 4> Bp{&md.B1, &md.B2, &md.B3, &md.B4};
    for (auto* b : Bp) {
        d = D(d);
        *b = d * i0inv;
    }

    md.I22 = md.Y * inv(md.I0 * md.I0 * md.I11 * md.I11);
    md.mirror_map = QSeries::monomial(1, 1, order) * exp(md.J1);
    md.inverse_map = revert_monic(md.mirror_map);
    return md;
}

QSeries genus0_potential(const MirrorData& md) {
    // F_0 = (5/6)((log Q)^3 - J1^3) + (5/2)(J1 J2 - J3); the log Q part is exactly the classical term.
    QSeries g = frac(-5, 6) * md.J1 * md.J1 * md.J1 + frac(5, 2) * (md.J1 * md.J2 - md.J3);
    return compose(g, md.inverse_map);
}

QSeries yukawa(const MirrorData& md) {
    QSeries f = genus0_potential(md);
    return D(D(D(f))) + Rat(quintic_degree);
}

QSeries raise_m(int g, const QSeries& P, int m, const MirrorData& md) {
    // (Q d/dQ) = I11^{-1} D, D log I0 = B, D log Y = -X
    QSeries factor = Rat(2 * g - 2) * md.B1 - Rat(m) * md.A + Rat(g - 1) * md.X;
    return D(P) + factor * P;
}

QSeries vertex_P03(const MirrorData& md) {
    QSeries yq = compose(yukawa(md), md.mirror_map);
    QSeries p = inv(Rat(quintic_degree) * md.Y) * md.I0 * md.I0 * md.I11 * md.I11 * md.I11 * yq;
    int k = first_difference(p, QSeries::constant(1, p.order()));
    if (k >= 0) throw mirror_identity_violation(k);
    return p;
}

void VertexTable::set(int g, int m, QSeries P) { p_[{g, m}] = std::move(P); }

bool VertexTable::has(int g, int m) const { return p_.count({g, m}) > 0; }

const QSeries& VertexTable::get(int g, int m) const {
    auto it = p_.find({g, m});
    if (it == p_.end()) throw missing_vertex_data(g, m);
    return it->second;
}

int VertexTable::max_m(int g) const {
    int best = -1;
    for (const auto& [key, value] : p_)
        if (key.first == g) best = std::max(best, key.second);
    return best;
}

void VertexTable::extend(int g, int m_max, const MirrorData& md) {
    int m = max_m(g);
    if (m < 0) throw missing_vertex_data(g, 2 * g - 2 >= 1 ? 0 : 3 - 2 * g);
    for (; m < m_max; ++m) set(g, m + 1, raise_m(g, get(g, m), m, md));
}

void VertexTable::erase_genus(int g) {
    for (auto it = p_.begin(); it != p_.end();) {
        if (it->first.first == g) it = p_.erase(it);
        else ++it;
    }
}

VertexTable VertexTable::genus_zero(const MirrorData& md, int m_max) {
    VertexTable t;
    t.set(0, 3, vertex_P03(md));
    t.extend(0, m_max, md);
    return t;
}

}  // namespace qgw
