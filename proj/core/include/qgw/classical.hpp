#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgw/mirror.hpp"

namespace qgw {

// N_{g,0} = (-1)^g chi |B_{2g}| |B_{2g-2}| / (2 * 2g * (2g-2) * (2g-2)!), g >= 2.
Rat classical_Ng0(int g);

// Genus-h contribution C_0(h,d) of a degree-d cover of a rigid rational curve:
// C_0(h,1) = [t^{2h}] (sin(t/2)/(t/2))^{-2}, C_0(h,d) = d^{2h-3} C_0(h,1).
Rat multiple_cover(int h, int d);

// Initial data for the recursion: genus-zero instanton counts and low-degree invariants N_{g,d}.
struct ClassicalData {
    std::vector<Rat> n;                           // n[d], d >= 1 (n[0] unused)
    std::map<std::pair<int, int>, Rat> invariants;  // N_{g,d}

    // Instanton counts n_1..n_3 from the genus-zero potential, N_{1,1} and N_{2,1..3} from covers of
    // the rigid rational curves of degree <= 3 (no higher-genus curves occur in these degrees).
    static ClassicalData from_mirror(const MirrorData& md);

    // N_{g,d}: stored value, or the constant-map formula for d = 0, g >= 2.
    std::optional<Rat> invariant(int g, int d) const;

    // Lines "g, d, value" (value "n" or "n/d"); '#' starts a comment. Overrides existing entries.
    void load(std::istream& in, const std::string& source = "<stream>");
    void load_file(const std::string& path);
};

// Instanton counts n_d from genus-zero invariants: N_{0,d} = sum_{k|d} n_{d/k} / k^3.
std::vector<Rat> instanton_counts(const QSeries& genus0);

}  // namespace qgw
