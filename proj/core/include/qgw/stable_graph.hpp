#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qgw {

// Connected genus-decorated multigraph with numbered legs. Edges are stored as vertex pairs
// (u <= v, self-loops u == v); leg i sits at vertex legs[i].
struct StableGraph {
    std::vector<int> genus;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> legs;
    std::uint64_t aut = 1;

    int num_vertices() const { return static_cast<int>(genus.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_legs() const { return static_cast<int>(legs.size()); }
    // Half-edges plus legs at v; self-loops count twice.
    int valence(int v) const;
    int loops(int v) const;
    int multiplicity(int u, int v) const;
    // sum g_v + h^1 of the graph.
    int total_genus() const;
    bool is_connected() const;
    bool is_stable() const;
    // Single vertex carrying all legs, no edges.
    bool is_leading() const { return genus.size() == 1 && edges.empty(); }

    // "genera=2,0 edges=0-1,1-1 legs=0,1 aut=2"
    std::string to_string() const;
};

// Relabels vertices canonically (legs stay fixed); the result compares equal for isomorphic graphs.
StableGraph canonical_form(const StableGraph& g);
// Lexicographically minimal structure code, the isomorphism-class key.
std::vector<int> canonical_code(const StableGraph& g);
// Order of the automorphism group of the half-edge structure fixing every leg.
std::uint64_t aut_order(const StableGraph& g);

// One canonical representative per isomorphism class of connected stable graphs of type (g, n),
// sorted by (|V|, |E|, canonical code). Results are cached; safe to call concurrently.
const std::vector<StableGraph>& enumerate(int g, int n);

// Uncached enumeration that scrambles processing order and vertex labels with the given seed;
// the returned list is canonical and sorted, so it must coincide with enumerate(g, n).
std::vector<StableGraph> enumerate_seeded(int g, int n, std::uint64_t seed);

}  // namespace qgw
