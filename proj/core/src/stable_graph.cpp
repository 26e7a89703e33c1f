#include "qgw/stable_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qgw/errors.hpp"

namespace qgw {

int StableGraph::valence(int v) const {
    int n = 0;
    for (auto [a, b] : edges) n += (a == v) + (b == v);
    for (int l : legs) n += (l == v);
    return n;
}

int StableGraph::loops(int v) const {
    int n = 0;
    for (auto [a, b] : edges) n += (a == v && b == v);
    return n;
}

int StableGraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    int n = 0;
    for (auto [a, b] : edges) n += (a == u && b == v);
    return n;
}

int StableGraph::total_genus() const {
    return std::accumulate(genus.begin(), genus.end(), 0) + num_edges() - num_vertices() + 1;
}

bool StableGraph::is_connected() const {
    const int V = num_vertices();
    if (V == 0) return false;
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    for (int v = 1; v < V; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

bool StableGraph::is_stable() const {
    for (int v = 0; v < num_vertices(); ++v)
        if (2 * genus[v] - 2 + valence(v) <= 0) return false;
    return true;
}

std::string StableGraph::to_string() const {
    std::ostringstream out;
    out << "genera=";
    for (int v = 0; v < num_vertices(); ++v) out << (v ? "," : "") << genus[v];
    out << " edges=";
    for (std::size_t e = 0; e < edges.size(); ++e)
        out << (e ? "," : "") << edges[e].first << "-" << edges[e].second;
    out << " legs=";
    for (std::size_t l = 0; l < legs.size(); ++l) out << (l ? "," : "") << legs[l];
    out << " aut=" << aut;
    return out.str();
}

namespace {

// Structure code of g under the ordering pos -> vertex.
std::vector<int> code_for(const StableGraph& g, const std::vector<int>& order) {
    const int V = g.num_vertices();
    std::vector<int> where(V);
    for (int p = 0; p < V; ++p) where[order[p]] = p;
    std::vector<int> mult(static_cast<std::size_t>(V * V), 0);
    for (auto [a, b] : g.edges) {
        int u = where[a], v = where[b];
        if (u > v) std::swap(u, v);
        ++mult[u * V + v];
    }
    std::vector<int> code{V, g.num_edges()};
    for (int p = 0; p < V; ++p) code.push_back(g.genus[order[p]]);
    for (int l : g.legs) code.push_back(where[l]);
    for (int u = 0; u < V; ++u)
        for (int v = u; v < V; ++v) code.push_back(mult[u * V + v]);
    return code;
}

// Isomorphism-invariant vertex colours by iterated neighbourhood refinement.
std::vector<int> refined_colours(const StableGraph& g) {
    const int V = g.num_vertices();
    std::vector<std::vector<int>> sig(V);
    for (int v = 0; v < V; ++v) {
        sig[v] = {g.genus[v], g.loops(v), g.valence(v)};
        for (std::size_t l = 0; l < g.legs.size(); ++l)
            if (g.legs[l] == v) sig[v].push_back(static_cast<int>(l));
    }
    auto rank = [&](const std::vector<std::vector<int>>& s) {
        std::vector<std::vector<int>> sorted(s);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> c(V);
        for (int v = 0; v < V; ++v)
            c[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s[v]) - sorted.begin());
        return std::make_pair(c, static_cast<int>(sorted.size()));
    };
    auto [colour, classes] = rank(sig);
    while (true) {
        std::vector<std::vector<int>> next(V);
        for (int v = 0; v < V; ++v) {
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < V; ++u)
                if (u != v && g.multiplicity(u, v) > 0) nb.emplace_back(colour[u], g.multiplicity(u, v));
            std::sort(nb.begin(), nb.end());
            next[v] = {colour[v]};
            for (auto [c, m] : nb) {
                next[v].push_back(c);
                next[v].push_back(m);
            }
        }
        auto [c2, k2] = rank(next);
        colour = c2;
        if (k2 == classes) break;
        classes = k2;
    }
    return colour;
}

struct CanonResult {
    std::vector<int> code;
    std::vector<int> order;
    std::uint64_t vertex_auts = 0;
};

CanonResult canonicalize(const StableGraph& g) {
    const int V = g.num_vertices();
    std::vector<int> colour = refined_colours(g);
    std::vector<int> base(V);
    std::iota(base.begin(), base.end(), 0);
    std::sort(base.begin(), base.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    // Blocks of equal colour; all orderings permute within blocks only.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < V;) {
        int j = i;
        while (j < V && colour[base[j]] == colour[base[i]]) ++j;
        blocks.emplace_back(i, j);
        std::sort(base.begin() + i, base.begin() + j);
        i = j;
    }
    CanonResult best;
    std::vector<int> order = base;
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            std::vector<int> code = code_for(g, order);
            if (best.vertex_auts == 0 || code < best.code) {
                best.code = std::move(code);
                best.order = order;
                best.vertex_auts = 1;
            } else if (code == best.code) {
                ++best.vertex_auts;
            }
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(b + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return best;
}

std::uint64_t edge_symmetry(const StableGraph& g) {
    std::map<std::pair<int, int>, int> mult;
    for (auto e : g.edges) ++mult[e];
    std::uint64_t r = 1;
    for (auto [e, m] : mult) {
        for (int k = 2; k <= m; ++k) r *= static_cast<std::uint64_t>(k);
        if (e.first == e.second) r <<= m;
    }
    return r;
}

StableGraph relabel(const StableGraph& g, const std::vector<int>& order) {
    const int V = g.num_vertices();
    std::vector<int> where(V);
    for (int p = 0; p < V; ++p) where[order[p]] = p;
    StableGraph r;
    r.genus.resize(V);
    for (int p = 0; p < V; ++p) r.genus[p] = g.genus[order[p]];
    for (auto [a, b] : g.edges) {
        int u = where[a], v = where[b];
        r.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(r.edges.begin(), r.edges.end());
    for (int l : g.legs) r.legs.push_back(where[l]);
    r.aut = g.aut;
    return r;
}

StableGraph canonical_with_aut(const StableGraph& g) {
    CanonResult c = canonicalize(g);
    StableGraph r = relabel(g, c.order);
    r.aut = c.vertex_auts * edge_symmetry(r);
    return r;
}

// All graphs obtained from g by one degeneration (adding one edge).
std::vector<StableGraph> degenerations(const StableGraph& g) {
    std::vector<StableGraph> out;
    const int V = g.num_vertices();
    for (int v = 0; v < V; ++v) {
        if (g.genus[v] >= 1) {
            StableGraph h = g;
            --h.genus[v];
            h.edges.emplace_back(v, v);
            out.push_back(std::move(h));
        }
        // Half-edge items at v: legs (kind 0) and edge ends (kind 1, end 0/1).
        struct Item {
            int kind, index, end;
        };
        std::vector<Item> items;
        for (int l = 0; l < g.num_legs(); ++l)
            if (g.legs[l] == v) items.push_back({0, l, 0});
        for (int e = 0; e < g.num_edges(); ++e) {
            if (g.edges[e].first == v) items.push_back({1, e, 0});
            if (g.edges[e].second == v) items.push_back({1, e, 1});
        }
        const int k = static_cast<int>(items.size());
        for (int h1 = 0; h1 <= g.genus[v]; ++h1) {
            int h2 = g.genus[v] - h1;
            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                int n2 = __builtin_popcount(mask);
                int n1 = k - n2;
                if (2 * h1 - 2 + n1 + 1 <= 0 || 2 * h2 - 2 + n2 + 1 <= 0) continue;
                StableGraph h = g;
                h.genus[v] = h1;
                h.genus.push_back(h2);
                for (int i = 0; i < k; ++i) {
                    if (!(mask & (1u << i))) continue;
                    const Item& it = items[i];
                    if (it.kind == 0) h.legs[it.index] = V;
                    else if (it.end == 0) h.edges[it.index].first = V;
                    else h.edges[it.index].second = V;
                }
                h.edges.emplace_back(v, V);
                for (auto& e : h.edges)
                    if (e.first > e.second) std::swap(e.first, e.second);
                out.push_back(std::move(h));
            }
        }
    }
    return out;
}

bool graph_less(const std::pair<std::vector<int>, StableGraph>& a,
                const std::pair<std::vector<int>, StableGraph>& b) {
    return a.first < b.first;  // code starts with (V, E)
}

std::vector<StableGraph> run_enumeration(int g, int n, std::mt19937_64* rng) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw unstable(g, n);
    StableGraph leading;
    leading.genus = {g};
    leading.legs.assign(n, 0);
    std::vector<std::pair<std::vector<int>, StableGraph>> all;
    std::vector<StableGraph> level{canonical_with_aut(leading)};
    std::set<std::vector<int>> seen{canonical_code(leading)};
    all.emplace_back(canonical_code(leading), level.front());
    const int max_edges = 3 * g - 3 + n;
    for (int e = 1; e <= max_edges && !level.empty(); ++e) {
        if (rng) std::shuffle(level.begin(), level.end(), *rng);
        std::vector<StableGraph> next;
        for (const auto& base : level) {
            for (auto& cand : degenerations(base)) {
                if (rng) {
                    std::vector<int> perm(cand.num_vertices());
                    std::iota(perm.begin(), perm.end(), 0);
                    std::shuffle(perm.begin(), perm.end(), *rng);
                    cand = relabel(cand, perm);
                }
                CanonResult c = canonicalize(cand);
                if (!seen.insert(c.code).second) continue;
                StableGraph r = relabel(cand, c.order);
                r.aut = c.vertex_auts * edge_symmetry(r);
                all.emplace_back(c.code, r);
                next.push_back(std::move(r));
            }
        }
        level = std::move(next);
    }
    std::sort(all.begin(), all.end(), graph_less);
    std::vector<StableGraph> out;
    out.reserve(all.size());
    for (auto& [code, graph] : all) out.push_back(std::move(graph));
    return out;
}

}  // namespace

StableGraph canonical_form(const StableGraph& g) { return canonical_with_aut(g); }

std::vector<int> canonical_code(const StableGraph& g) { return canonicalize(g).code; }

std::uint64_t aut_order(const StableGraph& g) {
    CanonResult c = canonicalize(g);
    return c.vertex_auts * edge_symmetry(g);
}

const std::vector<StableGraph>& enumerate(int g, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<StableGraph>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({g, n});
        if (it != cache.end()) return it->second;
    }
    std::vector<StableGraph> graphs = run_enumeration(g, n, nullptr);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(g, n), std::move(graphs)).first->second;
}

std::vector<StableGraph> enumerate_seeded(int g, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_enumeration(g, n, &rng);
}

}  // namespace qgw
