#include "qgw/quantizer.hpp"

#include <algorithm>

#include "qgw/errors.hpp"
#include "qgw/feynman.hpp"

namespace qgw {

QSeries MultiSeries::coeff(int k, int a, int b) const {
    auto it = terms_.find({k, a, b});
    return it == terms_.end() ? QSeries(order_) : it->second;
}

void MultiSeries::add(int k, int a, int b, const QSeries& c) {
    if (weight({k, a, b}) > weight_max_) return;
    if (c.order() < order_) {
        order_ = c.order();
        for (auto& [key, v] : terms_) v = v.truncated(order_);
    }
    auto it = terms_.find({k, a, b});
    if (it == terms_.end()) {
        QSeries t = c.truncated(order_);
        if (!t.is_zero()) terms_.emplace(Key{k, a, b}, std::move(t));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    genus_max_ = std::min(genus_max_, o.genus_max_);
    for (const auto& [key, c] : o.terms_) add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    return *this;
}

MultiSeries& MultiSeries::operator*=(const Rat& s) {
    if (s == 0) terms_.clear();
    for (auto& [key, c] : terms_) c *= s;
    return *this;
}

MultiSeries MultiSeries::part(int w) const {
    MultiSeries r(order_, weight_max_, genus_max_);
    for (const auto& [key, c] : terms_)
        if (weight(key) == w) r.terms_.emplace(key, c);
    return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r(std::min(a.order_, b.order_), std::min(a.weight_max_, b.weight_max_),
                  std::min(a.genus_max_, b.genus_max_));
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            const int k = std::get<0>(ka) + std::get<0>(kb);
            const int x = std::get<1>(ka) + std::get<1>(kb);
            const int y = std::get<2>(ka) + std::get<2>(kb);
            if (2 * k + x + y > r.weight_max_) continue;
            r.add(k, x, y, ca * cb);
        }
    return r;
}

MultiSeries build_PB(int g_max, int weight_max, const VertexTable& table, const MirrorData& md) {
    MultiSeries F(md.order, weight_max, g_max);
    for (int g = 0; g <= g_max; ++g)
        for (int legs = std::max(0, 3 - 2 * g); 2 * g - 2 + legs <= weight_max; ++legs) {
            if (2 * g - 2 + legs <= 0) continue;
            for (int m = 0; m <= legs; ++m) {
                const int n = legs - m;
                QSeries w = vertex_weight(g, m, n, table, md.order);
                if (w.is_zero()) continue;
                F.add(g - 1, m, n, w * (Rat(1) / Rat(factorial(m) * factorial(n))));
            }
        }
    return F;
}

MultiSeries add_log_term(const MultiSeries& F, int sign) {
    MultiSeries r = F;
    for (int n = 1; n <= F.weight_max(); ++n) r.add(0, 0, n, QSeries::constant(frac(sign, n), F.order()));
    return r;
}

MultiSeries shift_y(const MultiSeries& F, const QSeries& e) {
    MultiSeries r(std::min(F.order(), e.order()), F.weight_max(), F.genus_max());
    QSeries minus_e = -e;
    std::vector<QSeries> powers{QSeries::constant(1, r.order())};
    for (const auto& [key, c] : F.terms()) {
        auto [k, a, b] = key;
        while (static_cast<int>(powers.size()) <= b) powers.push_back(powers.back() * minus_e);
        // x^a (y - e x)^b = sum_j C(b,j) (-e)^j x^{a+j} y^{b-j}
        for (int j = 0; j <= b; ++j) r.add(k, a + j, b - j, c * powers[j] * Rat(binomial(b, j)));
    }
    return r;
}

MultiSeries exp_series(const MultiSeries& F) {
    const int W = F.weight_max();
    std::vector<MultiSeries> f(W + 1), e(W + 1);
    for (int w = 0; w <= W; ++w) f[w] = F.part(w);
    if (!f[0].is_zero()) throw bad_constant_term("exp_series requires positive weights");
    e[0] = MultiSeries(F.order(), W, F.genus_max());
    e[0].add(0, 0, 0, QSeries::constant(1, F.order()));
    // w E_w = sum_{u=1}^{w} u F_u E_{w-u}
    for (int w = 1; w <= W; ++w) {
        MultiSeries acc(F.order(), W, F.genus_max());
        for (int u = 1; u <= w; ++u) {
            if (f[u].is_zero() || e[w - u].is_zero()) continue;
            MultiSeries t = f[u] * e[w - u];
            t *= Rat(u);
            acc += t;
        }
        acc *= frac(1, w);
        e[w] = std::move(acc);
    }
    MultiSeries r(F.order(), W, F.genus_max());
    for (const auto& part : e) r += part;
    return r;
}

MultiSeries log_series(const MultiSeries& G) {
    const int W = G.weight_max();
    std::vector<MultiSeries> g(W + 1), l(W + 1);
    for (int w = 0; w <= W; ++w) g[w] = G.part(w);
    const auto& zero = g[0].terms();
    if (zero.size() != 1 || zero.begin()->first != MultiSeries::Key{0, 0, 0} ||
        zero.begin()->second != QSeries::constant(1, G.order()))
        throw bad_constant_term("log_series requires constant term 1");
    // w L_w = w G_w - sum_{u=1}^{w-1} u L_u G_{w-u}
    for (int w = 1; w <= W; ++w) {
        MultiSeries acc = g[w];
        for (int u = 1; u < w; ++u) {
            if (l[u].is_zero() || g[w - u].is_zero()) continue;
            MultiSeries t = l[u] * g[w - u];
            t *= frac(-u, w);
            acc += t;
        }
        l[w] = std::move(acc);
    }
    MultiSeries r(G.order(), W, G.genus_max());
    for (int w = 1; w <= W; ++w) r += l[w];
    return r;
}

MultiSeries apply_exp_hbarV(const MultiSeries& G, const PropagatorSet& edges) {
    const QSeries half_pp = edges.E_phiphi * frac(1, 2);
    const QSeries& pq = edges.E_phipsi;
    const QSeries half_qq = edges.E_psipsi * frac(1, 2);
    MultiSeries result = G;
    MultiSeries term = G;
    for (int j = 1; !term.is_zero(); ++j) {
        MultiSeries next(term.order(), term.weight_max(), term.genus_max());
        for (const auto& [key, c] : term.terms()) {
            auto [k, a, b] = key;
            if (a >= 2) next.add(k + 1, a - 2, b, half_pp * c * Rat(a * (a - 1)));
            if (a >= 1 && b >= 1) next.add(k + 1, a - 1, b - 1, pq * c * Rat(a * b));
            if (b >= 2) next.add(k + 1, a, b - 2, half_qq * c * Rat(b * (b - 1)));
        }
        next *= frac(1, j);
        result += next;
        term = std::move(next);
    }
    return result;
}

MultiSeries quantize(const MultiSeries& F, const PropagatorSet& props, Route route) {
    if (route == Route::shift_first)
        return log_series(apply_exp_hbarV(exp_series(shift_y(F, props.E_psi)), props.modified()));
    return shift_y(log_series(apply_exp_hbarV(exp_series(F), props)), props.E_psi);
}

QSeries extract(const MultiSeries& f, int g, int m, int n) {
    if (2 * g - 2 + m + n > f.weight_max() || g > f.genus_max())
        throw truncation_overflow("stratum (g=" + std::to_string(g) + ", m=" + std::to_string(m) +
                                  ", n=" + std::to_string(n) + ") exceeds the computed truncation (weight " +
                                  std::to_string(f.weight_max()) + ", genus " + std::to_string(f.genus_max()) + ")");
    return f.coeff(g - 1, m, n);
}

std::string to_string(Convention c) {
    switch (c) {
        case Convention::plain: return "plain";
        case Convention::factorial: return "factorial";
        default: return "inconsistent";
    }
}

bool OracleReport::ok() const {
    if (convention == Convention::inconsistent) return false;
    return std::all_of(entries.begin(), entries.end(), [](const OracleEntry& e) { return e.equal; });
}

OracleReport compare_oracle(int g_max, int legs_max, const Gauge& gauge, const MirrorData& md, VertexTable& table,
                            int threads) {
    const int W = 2 * g_max - 2 + legs_max;
    if (table.max_m(0) < 0) table.set(0, 3, vertex_P03(md));
    for (int g = 0; g <= g_max; ++g) {
        if (table.max_m(g) < 0) throw missing_vertex_data(g, g == 1 ? 1 : 0);
        table.extend(g, W - 2 * g + 2, md);
    }
    const PropagatorSet props = PropagatorSet::make(gauge, md);
    const MultiSeries f = quantize(build_PB(g_max, W, table, md), props);

    auto graph = [&](int g, int m, int n) { return graph_sum_B(g, m, n, gauge, md, table, threads); };
    auto sym_factor = [](int m, int n) { return Rat(factorial(m) * factorial(n)); };

    OracleReport rep;
    const QSeries g030 = graph(0, 3, 0), q030 = extract(f, 0, 3, 0);
    const QSeries g110 = graph(1, 1, 0), q110 = extract(f, 1, 1, 0);
    if (g030 == q030 && g110 == q110) rep.convention = Convention::plain;
    else if (g030 == q030 * sym_factor(3, 0) && g110 == q110 * sym_factor(1, 0)) rep.convention = Convention::factorial;
    else return rep;

    for (int g = 0; g <= g_max; ++g)
        for (int legs = 0; legs <= legs_max; ++legs) {
            if (2 * g - 2 + legs <= 0) continue;
            for (int m = legs; m >= 0; --m) {
                const int n = legs - m;
                QSeries q = extract(f, g, m, n);
                if (rep.convention == Convention::factorial) q *= sym_factor(m, n);
                const int diff = first_difference(graph(g, m, n), q);
                rep.entries.push_back({g, m, n, diff < 0, diff});
            }
        }
    return rep;
}

}  // namespace qgw
