#include "qgw/feynman.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

#include "qgw/errors.hpp"
#include "qgw/stable_graph.hpp"

namespace qgw {

namespace {

using Poly = SymbolicSum;

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Rat& slot = r[mono_mul(ma, mb)];
            slot += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

Monomial power_of(int symbol, int e) { return e == 0 ? Monomial{} : Monomial{{symbol, e}}; }

// P_{g,m,n} as a polynomial in the vertex symbols.
Poly original_weight(int g, int m, int n) {
    if (2 * g - 2 + m > 0) {
        Int f = falling_factorial(2 * g + m + n - 3, n);
        if (f == 0) return {};
        return {{power_of(sym::vertex(g, m), 1), Rat(f)}};
    }
    if (g == 1 && m == 0 && n >= 1)
        return {{Monomial{}, Rat(factorial(n - 1)) * (frac(quintic_euler, 24) - 1)}};
    return {};
}

// Coefficients of P^B(x, y - E_psi x): sum_j C(m,j) (-E_psi)^j P_{g,m-j,n+j}.
Poly modified_weight(int g, int m, int n) {
    Poly r;
    for (int j = 0; j <= m; ++j) {
        Poly w = original_weight(g, m - j, n + j);
        Rat c = Rat(binomial(m, j)) * (j % 2 ? -1 : 1);
        for (const auto& [mono, coeff] : w) {
            Rat& slot = r[mono_mul(mono, power_of(sym::e_psi, j))];
            slot += c * coeff;
        }
    }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

const Poly& cached_weight(Rule rule, int g, int m, int n) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, Poly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(static_cast<int>(rule), g, m, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, rule == Rule::original ? original_weight(g, m, n) : modified_weight(g, m, n))
        .first->second;
}

// Adds Cont(graph)/|Aut| to out. Every half-edge is typed phi or psi. Vertices are processed in
// order; choices at a vertex are aggregated by binomial multiplicities, and its weight and the
// propagators of all edges closed there are multiplied into the state's monomial at once. The
// state key is (psi half-edges already placed on edges into each later vertex, monomial).
void contract_graph(const StableGraph& graph, Rule rule, int m, Poly& out) {
    const int V = graph.num_vertices();
    std::vector<std::vector<int>> mult(V, std::vector<int>(V, 0));
    for (auto [u, v] : graph.edges) {
        ++mult[u][v];
        if (u != v) ++mult[v][u];
    }
    std::vector<int> branch_legs(V, 0), psi_legs(V, 0), shift(V + 1, 0), width(V, 0);
    for (int l = 0; l < graph.num_legs(); ++l) {
        const int v = graph.legs[l];
        if (l >= m) ++psi_legs[v];
        else if (rule == Rule::original) ++branch_legs[v];  // modified rule: plain phi leg
    }
    for (int v = 0; v < V; ++v) {
        int b = 1;
        while ((1 << b) <= graph.valence(v)) ++b;
        width[v] = b;
        shift[v + 1] = shift[v] + b;
    }
    if (shift[V] > 64) throw truncation_overflow("graph too large for the contraction state");
    auto field = [&](std::uint64_t s, int v) {
        return static_cast<int>((s >> shift[v]) & ((1ULL << width[v]) - 1));
    };

    using Key = std::pair<std::uint64_t, Monomial>;
    std::map<Key, Rat> states{{Key{0, Monomial{}}, Rat(1) / Rat(Int(std::to_string(graph.aut)))}};
    for (int w = 0; w < V; ++w) {
        int before = 0;  // edges from earlier vertices
        for (int u = 0; u < w; ++u) before += mult[u][w];
        const int loops = mult[w][w], val = graph.valence(w);
        std::vector<int> later;
        for (int x = w + 1; x < V; ++x)
            if (mult[w][x]) later.push_back(x);

        std::map<Key, Rat> next;
        for (const auto& [key, value] : states) {
            const int a = field(key.first, w);  // incoming edges whose far end is psi
            const std::uint64_t base = key.first & ~(((1ULL << width[w]) - 1) << shift[w]);
            // Fixed-part choices at w: j psi on psi-ended incoming, i psi on phi-ended incoming,
            // loops split (ff, mx, pp), r psi-branch legs.
            for (int j = 0; j <= a; ++j)
                for (int i = 0; i <= before - a; ++i)
                    for (int pp = 0; pp <= loops; ++pp)
                        for (int mx = 0; mx + pp <= loops; ++mx)
                            for (int r = 0; r <= branch_legs[w]; ++r) {
                                const int ff = loops - pp - mx;
                                const int psi_pp = j + pp, psi_mx = (a - j) + i + mx, psi_ff = (before - a - i) + ff;
                                Int c = binomial(a, j) * binomial(before - a, i) * binomial(branch_legs[w], r) *
                                        factorial(loops) / (factorial(ff) * factorial(mx) * factorial(pp));
                                c <<= mx;
                                Monomial props;
                                if (r > 0) props.emplace_back(sym::e_psi, r);
                                if (psi_ff > 0) props.emplace_back(sym::e_phiphi, psi_ff);
                                if (psi_mx > 0) props.emplace_back(sym::e_phipsi, psi_mx);
                                if (psi_pp > 0) props.emplace_back(sym::e_psipsi, psi_pp);
                                const int fixed_psi = j + i + mx + 2 * pp + r + psi_legs[w];
                                const Rat sign_value = value * Rat(r % 2 ? Int(-c) : c);
                                // Outgoing edges to later vertices: s_x psi half-edges towards x.
                                auto place = [&](auto&& self, std::size_t idx, int psi, std::uint64_t st,
                                                 const Int& cnt) -> void {
                                    if (idx == later.size()) {
                                        const Poly& wt = cached_weight(rule, graph.genus[w], val - psi, psi);
                                        for (const auto& [mono, coeff] : wt) {
                                            Rat& slot = next[Key{st, mono_mul(mono_mul(key.second, props), mono)}];
                                            slot += sign_value * Rat(cnt) * coeff;
                                        }
                                        return;
                                    }
                                    const int x = later[idx], cx = mult[w][x];
                                    for (int sx = 0; sx <= cx; ++sx)
                                        self(self, idx + 1, psi + sx, st + (static_cast<std::uint64_t>(sx) << shift[x]),
                                             cnt * binomial(cx, sx));
                                };
                                place(place, 0, fixed_psi, base, Int(1));
                            }
        }
        states.clear();
        for (auto& [key, value] : next)
            if (value != 0) states.emplace(key, std::move(value));
    }
    for (const auto& [key, value] : states) out[key.second] += value;
}

void add_into(Poly& into, const Poly& from) {
    for (const auto& [mono, coeff] : from) into[mono] += coeff;
}

Poly build_symbolic(Rule rule, int g, int m, int n, int threads) {
    const auto& graphs = enumerate(g, m + n);
    threads = std::max(1, std::min<int>(threads, static_cast<int>(graphs.size())));
    std::vector<Poly> partial(threads);
    auto work = [&](int t) {
        for (std::size_t i = t; i < graphs.size(); i += threads) contract_graph(graphs[i], rule, m, partial[t]);
    };
    if (threads == 1) work(0);
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    Poly total;
    for (const auto& p : partial) add_into(total, p);
    for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
    return total;
}

const QSeries& symbol_value(int s, Rule rule, const PropagatorSet& props, const PropagatorSet& edge_props,
                            const VertexTable& table) {
    (void)rule;
    switch (s) {
        case sym::e_psi: return props.E_psi;
        case sym::e_phiphi: return edge_props.E_phiphi;
        case sym::e_phipsi: return edge_props.E_phipsi;
        case sym::e_psipsi: return edge_props.E_psipsi;
        default: return table.get(sym::vertex_genus(s), sym::vertex_m(s));
    }
}

}  // namespace

QSeries vertex_weight(int g, int m, int n, const VertexTable& table, int order) {
    QSeries r(order);
    for (const auto& [mono, coeff] : original_weight(g, m, n)) {
        QSeries term = QSeries::constant(coeff, order);
        for (auto [s, e] : mono) term = term * pow(table.get(sym::vertex_genus(s), sym::vertex_m(s)), e);
        r += term;
    }
    return r;
}

const SymbolicSum& symbolic_graph_sum(Rule rule, int g, int m, int n, int threads) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, Poly> cache;
    auto key = std::make_tuple(static_cast<int>(rule), g, m, n);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Poly p = build_symbolic(rule, g, m, n, threads);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(p)).first->second;
}

QSeries evaluate(const SymbolicSum& sum, Rule rule, const PropagatorSet& props, const VertexTable& table,
                 std::pair<int, int> skip, int threads) {
    const PropagatorSet edge_props = rule == Rule::original ? props : props.modified();
    const int skip_symbol = skip.first >= 0 ? sym::vertex(skip.first, skip.second) : -1;

    // Powers of every symbol that occurs, computed up front so the workers only read.
    std::map<int, int> max_exp;
    std::vector<const std::pair<const Monomial, Rat>*> terms;
    int order = props.E_psi.order();
    for (const auto& entry : sum) {
        bool skipped = false;
        for (auto [s, e] : entry.first) skipped |= (s == skip_symbol);
        if (skipped) continue;
        terms.push_back(&entry);
        for (auto [s, e] : entry.first) max_exp[s] = std::max(max_exp[s], e);
    }
    std::map<int, std::vector<QSeries>> powers;
    for (auto [s, e] : max_exp) {
        const QSeries& base = symbol_value(s, rule, props, edge_props, table);
        order = std::min(order, base.order());
        auto& list = powers[s];
        list.push_back(base);
        for (int k = 2; k <= e; ++k) list.push_back(list.back() * base);
    }

    threads = std::max(1, std::min<int>(threads, static_cast<int>(terms.size())));
    std::vector<QSeries> partial(threads, QSeries(order));
    auto work = [&](int t) {
        for (std::size_t i = t; i < terms.size(); i += threads) {
            const auto& [mono, coeff] = *terms[i];
            QSeries term = QSeries::constant(coeff, order);
            for (auto [s, e] : mono) term = term * powers.at(s)[e - 1];
            partial[t] += term;
        }
    };
    if (threads == 1) work(0);
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    QSeries total(order);
    for (const auto& p : partial) total += p;
    return total;
}

QSeries graph_sum_B(int g, int m, int n, const Gauge& gauge, const MirrorData& md, const VertexTable& table,
                    int threads) {
    const auto& s = symbolic_graph_sum(Rule::original, g, m, n, threads);
    return evaluate(s, Rule::original, PropagatorSet::make(gauge, md), table, {-1, -1}, threads);
}

QSeries graph_sum_modified(int g, int m, int n, const Gauge& gauge, const MirrorData& md,
                           const VertexTable& table, int threads) {
    const auto& s = symbolic_graph_sum(Rule::modified, g, m, n, threads);
    return evaluate(s, Rule::modified, PropagatorSet::make(gauge, md), table, {-1, -1}, threads);
}

QSeries graph_sum_A(int g, int m, int n, const Gauge& gauge, const MirrorData& md, const VertexTable& table,
                    int threads) {
    QSeries f = graph_sum_B(g, m, n, gauge, md, table, threads);
    if (g == 1 && m == 0 && n >= 1) f = f + Rat(factorial(n - 1));
    return f;
}

QSeries nonleading_sum(Rule rule, int g, int m, const Gauge& gauge, const MirrorData& md,
                       const VertexTable& table, int threads) {
    const auto& s = symbolic_graph_sum(rule, g, m, 0, threads);
    return evaluate(s, rule, PropagatorSet::make(gauge, md), table, {g, m}, threads);
}

}  // namespace qgw
