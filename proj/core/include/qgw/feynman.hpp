#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qgw/gauge.hpp"
#include "qgw/mirror.hpp"

namespace qgw {

enum class Rule {
    original,  // legs phi - E_psi psi, propagators E
    modified,  // legs phi, propagators E~, vertices from P^B(x, y - E_psi x)
};

// Symbols of a graph-sum monomial: the leg factor E_psi, the three edge propagators and P_{g,m}.
namespace sym {
inline constexpr int e_psi = 0;
inline constexpr int e_phiphi = 1;
inline constexpr int e_phipsi = 2;
inline constexpr int e_psipsi = 3;
inline constexpr int vertex_base = 16;
inline constexpr int vertex(int g, int m) { return vertex_base + 64 * g + m; }
inline constexpr bool is_vertex(int s) { return s >= vertex_base; }
inline constexpr int vertex_genus(int s) { return (s - vertex_base) / 64; }
inline constexpr int vertex_m(int s) { return (s - vertex_base) % 64; }
}  // namespace sym

// Sorted (symbol, exponent) pairs.
using Monomial = std::vector<std::pair<int, int>>;
// A graph sum as an exact polynomial in the symbols, independent of gauge and vertex data.
using SymbolicSum = std::map<Monomial, Rat>;

// P_{g,m,n}; zero where 2g-2+m <= 0 except the (1,0,n) branch (n-1)! (chi/24 - 1).
QSeries vertex_weight(int g, int m, int n, const VertexTable& table, int order);

// Sum over G_{g,m+n} of Cont/|Aut|, kept symbolic. Cached; safe to call concurrently.
const SymbolicSum& symbolic_graph_sum(Rule rule, int g, int m, int n, int threads = 1);

// Substitutes series for the symbols. Monomials containing P_{skip.first, skip.second} are dropped
// when skip.first >= 0 (used to isolate the non-leading part of a sum).
QSeries evaluate(const SymbolicSum& sum, Rule rule, const PropagatorSet& props, const VertexTable& table,
                 std::pair<int, int> skip = {-1, -1}, int threads = 1);

QSeries graph_sum_B(int g, int m, int n, const Gauge& gauge, const MirrorData& md, const VertexTable& table,
                    int threads = 1);
QSeries graph_sum_modified(int g, int m, int n, const Gauge& gauge, const MirrorData& md,
                           const VertexTable& table, int threads = 1);
// f^A = f^B + delta_{g,1} delta_{m,0} (n-1)!.
QSeries graph_sum_A(int g, int m, int n, const Gauge& gauge, const MirrorData& md, const VertexTable& table,
                    int threads = 1);

// The graph sum of type (g, m, 0) with every monomial involving P_{g,m} removed, i.e. everything
// except the leading graph's own vertex term; needs only lower-genus data.
QSeries nonleading_sum(Rule rule, int g, int m, const Gauge& gauge, const MirrorData& md,
                       const VertexTable& table, int threads = 1);

}  // namespace qgw
