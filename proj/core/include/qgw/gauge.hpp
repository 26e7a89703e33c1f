#pragma once

#include <string>

#include "qgw/mirror.hpp"
#include "qgw/xpoly.hpp"

namespace qgw {

// Propagator shifts: deg c1a, c1b <= 1, deg c2 <= 2, deg c3 <= 3.
struct Gauge {
    XPoly c1a, c1b, c2, c3;

    void validate() const;  // throws invalid_gauge
    static Gauge zero() { return {}; }
    // The gauge in which the propagators are (T^{phi phi}, T^{phi}, T): c1b = 3/5, c2 = -2/25, c3 = -4/125.
    static Gauge special();

    // "c1a=...;c1b=...;c2=...;c3=..." with comma-separated coefficient lists (degree 0 first);
    // omitted keys are zero. Degree bounds are enforced.
    static Gauge parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const Gauge& a, const Gauge& b) {
        return a.c1a == b.c1a && a.c1b == b.c1b && a.c2 == b.c2 && a.c3 == b.c3;
    }
};

struct PropagatorSet {
    QSeries E_psi, E_phiphi, E_phipsi, E_psipsi;

    static PropagatorSet make(const Gauge& gauge, const MirrorData& md);
    // Propagators of the modified rule (legs plain phi).
    PropagatorSet modified() const;
};

}  // namespace qgw
