#pragma once

#include <string>
#include <vector>

#include "qgw/rational.hpp"

namespace qgw {

// Truncated power series sum_{k=0}^{order} c_k q^k with exact coefficients.
class QSeries {
public:
    QSeries() = default;  // the zero series of order 0
    explicit QSeries(int order);
    QSeries(std::vector<Rat> coeffs);  // order = coeffs.size() - 1

    static QSeries constant(const Rat& c, int order);
    static QSeries monomial(int k, const Rat& c, int order);  // c q^k

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int k) const { return c_[k]; }
    Rat& operator[](int k) { return c_[k]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    QSeries truncated(int order) const;
    bool is_zero() const;
    // Smallest k with c_k != 0, or -1 for the zero series.
    int valuation() const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries& operator*=(const Rat& s);

    std::string to_string(const std::string& var = "q") const;

private:
    std::vector<Rat> c_{Rat(0)};
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator-(QSeries a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(QSeries a, const Rat& s);
QSeries operator*(const Rat& s, QSeries a);
QSeries operator+(QSeries a, const Rat& s);
QSeries operator-(QSeries a, const Rat& s);

// Coefficient-wise equality up to the common order.
bool operator==(const QSeries& a, const QSeries& b);
inline bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }
// First k <= common order with a_k != b_k, or -1 when equal.
int first_difference(const QSeries& a, const QSeries& b);

QSeries inv(const QSeries& a);                       // throws zero_constant_term
QSeries D(const QSeries& a);                         // q d/dq
QSeries exp(const QSeries& a);                       // requires a_0 = 0
QSeries log(const QSeries& a);                       // requires a_0 = 1
QSeries pow(const QSeries& a, int n);                // n >= 0
QSeries compose(const QSeries& a, const QSeries& b); // a(b(q)), requires b_0 = 0
QSeries revert_monic(const QSeries& a);              // compositional inverse, a = q + O(q^2)

}  // namespace qgw
