#pragma once

#include <string>
#include <vector>

#include "qgw/mirror.hpp"
#include "qgw/rational.hpp"

namespace qgw {

// Polynomial sum_k c_k X^k with exact coefficients; trailing zeros are trimmed.
class XPoly {
public:
    XPoly() = default;
    XPoly(std::vector<Rat> coeffs);
    XPoly(const Rat& c) : XPoly(std::vector<Rat>{c}) {}

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    // Substitutes the series X(q).
    QSeries eval(const MirrorData& md) const;
    QSeries eval(const QSeries& x) const;

    std::string to_string() const;  // e.g. "-1/12*X - 107/60"
    // Comma-separated coefficients from degree 0 upwards, e.g. "-107/60,-1/12".
    static XPoly parse_list(const std::string& text);

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);

private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace qgw
