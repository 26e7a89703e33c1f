#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qgw/gauge.hpp"
#include "qgw/mirror.hpp"

namespace qgw {

// Truncated series sum hbar^k x^a y^b c_{k,a,b}(q). Terms are graded by the weight 2k + a + b,
// which exp(hbar V) preserves; all products drop weights above weight_max.
class MultiSeries {
public:
    using Key = std::tuple<int, int, int>;  // (k, a, b)

    MultiSeries(int order = 0, int weight_max = 0, int genus_max = 1 << 20)
        : order_(order), weight_max_(weight_max), genus_max_(genus_max) {}

    int order() const { return order_; }
    int weight_max() const { return weight_max_; }
    // Highest genus whose coefficients are complete (inputs of higher genus were dropped).
    int genus_max() const { return genus_max_; }
    static int weight(const Key& k) { return 2 * std::get<0>(k) + std::get<1>(k) + std::get<2>(k); }

    const std::map<Key, QSeries>& terms() const { return terms_; }
    QSeries coeff(int k, int a, int b) const;
    void add(int k, int a, int b, const QSeries& c);
    bool is_zero() const { return terms_.empty(); }

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator*=(const Rat& s);
    // Homogeneous part of weight w.
    MultiSeries part(int w) const;

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

private:
    int order_;
    int weight_max_;
    int genus_max_;
    std::map<Key, QSeries> terms_;
};

// P^B = sum hbar^{g-1} x^m y^n / (m! n!) P_{g,m,n} over g <= g_max, 0 < 2g-2+m+n <= weight_max.
MultiSeries build_PB(int g_max, int weight_max, const VertexTable& table, const MirrorData& md);

// Adds -ln(1 - y) = sum y^n / n, turning P^B into the A-side input (negative of the PBA shift).
MultiSeries add_log_term(const MultiSeries& F, int sign);

// F(hbar, x, y - e x).
MultiSeries shift_y(const MultiSeries& F, const QSeries& e);

MultiSeries exp_series(const MultiSeries& F);  // requires weight >= 1 throughout
MultiSeries log_series(const MultiSeries& G);  // requires constant term 1 in weight 0

// exp(hbar V) G with V = 1/2 E_phiphi d_x^2 + E_phipsi d_x d_y + 1/2 E_psipsi d_y^2.
MultiSeries apply_exp_hbarV(const MultiSeries& G, const PropagatorSet& edges);

enum class Route {
    shift_first,  // log(exp(hbar V~) exp(P^B(x, y - E_psi x)))
    shift_last,   // [log(exp(hbar V) exp(P^B(u, v)))] at u = x, v = y - E_psi x
};

// log(exp(hbar V) exp(F)) for a prepared exponent F, in the chosen route.
MultiSeries quantize(const MultiSeries& F, const PropagatorSet& props, Route route = Route::shift_first);

// The hbar^{g-1} x^m y^n coefficient; throws truncation_overflow when outside the computed range.
QSeries extract(const MultiSeries& f, int g, int m, int n);

enum class Convention { plain, factorial, inconsistent };
std::string to_string(Convention c);

struct OracleEntry {
    int g, m, n;
    bool equal;
    int first_difference;  // q-order of the first mismatch, -1 when equal
};

struct OracleReport {
    Convention convention = Convention::inconsistent;
    std::vector<OracleEntry> entries;
    bool ok() const;
};

// Compares the quantizer with graph_sum_B for every stable (g, m, n), g <= g_max, m + n <= legs_max.
// The symmetrization convention is calibrated on (0,3,0) and (1,1,0), then frozen. The table is
// raised as needed and must hold P_{g,m} for every genus up to g_max.
OracleReport compare_oracle(int g_max, int legs_max, const Gauge& gauge, const MirrorData& md, VertexTable& table,
                            int threads = 1);

}  // namespace qgw
