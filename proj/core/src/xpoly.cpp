#include "qgw/xpoly.hpp"

#include <sstream>

namespace qgw {

XPoly::XPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void XPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QSeries XPoly::eval(const MirrorData& md) const { return eval(md.X); }

QSeries XPoly::eval(const QSeries& x) const {
    QSeries r(x.order());
    for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
    return r;
}

std::string XPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k] == 0) continue;
        Rat a = abs(c_[k]);
        if (first) out << (c_[k] < 0 ? "-" : "");
        else out << (c_[k] < 0 ? " - " : " + ");
        first = false;
        if (k == 0) out << qgw::to_string(a);
        else {
            if (a != 1) out << qgw::to_string(a) << "*";
            out << "X";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

XPoly XPoly::parse_list(const std::string& text) {
    std::vector<Rat> c;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) c.push_back(parse_rat(item));
    return XPoly(std::move(c));
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return XPoly(std::move(c));
}

XPoly operator-(const XPoly& a, const XPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return XPoly(std::move(c));
}

}  // namespace qgw
