#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "qgw/rational.hpp"
#include "qgw/stable_graph.hpp"

namespace qgw::testing {

// Counts vertex-labelled stable graphs of type (g, n) directly: genera, edge multiplicities
// (with self-loops) and leg positions over vertices 0..V-1.
inline Int count_labelled(int g, int n) {
    Int total = 0;
    for (int V = 1; V <= std::max(1, 2 * g - 2 + n); ++V) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < V; ++u)
            for (int v = u; v < V; ++v) slots.emplace_back(u, v);
        for (int E = V - 1; E <= g - 1 + V; ++E) {
            const int genus_sum = g - 1 + V - E;
            // multisets of E slots
            std::vector<int> mult(slots.size(), 0);
            std::function<void(std::size_t, int)> edges = [&](std::size_t i, int left) {
                if (i == slots.size()) {
                    if (left) return;
                    // connectivity
                    std::vector<int> parent(V);
                    std::iota(parent.begin(), parent.end(), 0);
                    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
                    std::vector<int> val(V, 0);
                    for (std::size_t s = 0; s < slots.size(); ++s) {
                        if (!mult[s]) continue;
                        parent[find(slots[s].first)] = find(slots[s].second);
                        val[slots[s].first] += mult[s];
                        val[slots[s].second] += mult[s];
                    }
                    for (int v = 1; v < V; ++v)
                        if (find(v) != find(0)) return;
                    std::vector<int> genus(V, 0), legs(n, 0);
                    std::function<void(int, int)> genera = [&](int v, int left_g) {
                        if (v == V) {
                            if (left_g) return;
                            std::function<void(int)> place = [&](int l) {
                                if (l == n) {
                                    std::vector<int> full = val;
                                    for (int x : legs) ++full[x];
                                    for (int x = 0; x < V; ++x)
                                        if (2 * genus[x] - 2 + full[x] <= 0) return;
                                    ++total;
                                    return;
                                }
                                for (int x = 0; x < V; ++x) {
                                    legs[l] = x;
                                    place(l + 1);
                                }
                            };
                            place(0);
                            return;
                        }
                        for (int k = 0; k <= left_g; ++k) {
                            genus[v] = k;
                            genera(v + 1, left_g - k);
                        }
                    };
                    genera(0, genus_sum);
                    return;
                }
                for (int k = 0; k <= left; ++k) {
                    mult[i] = k;
                    edges(i + 1, left - k);
                }
                mult[i] = 0;
            };
            if (genus_sum >= 0) edges(0, E);
        }
    }
    return total;
}

// |Aut| by backtracking over vertex permutations and oriented edge images.
inline std::uint64_t brute_aut(const StableGraph& G) {
    const int V = G.num_vertices(), E = G.num_edges();
    std::vector<int> sigma(V);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < V && ok; ++v) ok = G.genus[sigma[v]] == G.genus[v];
        for (int l = 0; l < G.num_legs() && ok; ++l) ok = sigma[G.legs[l]] == G.legs[l];
        if (!ok) continue;
        std::vector<bool> used(E, false);
        std::function<void(int)> map_edge = [&](int e) {
            if (e == E) {
                ++count;
                return;
            }
            auto [a, b] = G.edges[e];
            for (int f = 0; f < E; ++f) {
                if (used[f]) continue;
                auto [c, d] = G.edges[f];
                // two orientations of the image half-edges
                for (int o = 0; o < 2; ++o) {
                    const int x = o ? d : c, y = o ? c : d;
                    if (sigma[a] != x || sigma[b] != y) continue;
                    used[f] = true;
                    map_edge(e + 1);
                    used[f] = false;
                }
            }
        };
        map_edge(0);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

// Order of the vertex part of Aut(G): |Aut| divided by the half-edge permutations inside
// multi-edges and self-loops.
inline std::uint64_t vertex_aut(const StableGraph& G) {
    Int half = 1;
    for (int u = 0; u < G.num_vertices(); ++u) {
        half *= factorial(G.loops(u)) * (Int(1) << G.loops(u));
        for (int v = u + 1; v < G.num_vertices(); ++v) half *= factorial(G.multiplicity(u, v));
    }
    return static_cast<std::uint64_t>(Int(Int(std::to_string(G.aut)) / half).get_ui());
}


// sum over isomorphism classes of V!/|Aut_V|, i.e. the number of vertex-labelled representatives.
inline Int labelled_orbit_sum(const std::vector<StableGraph>& graphs) {
    Int total = 0;
    for (const auto& G : graphs) total += factorial(G.num_vertices()) / Int(std::to_string(vertex_aut(G)));
    return total;
}

}  // namespace qgw::testing
