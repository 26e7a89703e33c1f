#include "qgw/gauge.hpp"

#include <sstream>

#include "qgw/errors.hpp"

namespace qgw {

void Gauge::validate() const {
    auto check = [](const XPoly& p, int bound, const char* name) {
        if (p.degree() > bound)
            throw invalid_gauge(std::string(name) + " has degree " + std::to_string(p.degree()) +
                                " > " + std::to_string(bound));
    };
    check(c1a, 1, "c1a");
    check(c1b, 1, "c1b");
    check(c2, 2, "c2");
    check(c3, 3, "c3");
}

Gauge Gauge::special() {
    return {XPoly(), XPoly(frac(3, 5)), XPoly(frac(-2, 25)), XPoly(frac(-4, 125))};
}

Gauge Gauge::parse(const std::string& text) {
    Gauge g;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw parse_error("gauge entry without '=': '" + item + "'");
        std::string key = item.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        XPoly value = XPoly::parse_list(item.substr(eq + 1));
        if (key == "c1a") g.c1a = value;
        else if (key == "c1b") g.c1b = value;
        else if (key == "c2") g.c2 = value;
        else if (key == "c3") g.c3 = value;
        else throw parse_error("unknown gauge key '" + key + "'");
    }
    g.validate();
    return g;
}

std::string Gauge::to_string() const {
    auto list = [](const XPoly& p) {
        if (p.is_zero()) return std::string("0");
        std::string s;
        for (int k = 0; k <= p.degree(); ++k) s += (k ? "," : "") + qgw::to_string(p.coeff(k));
        return s;
    };
    return "c1a=" + list(c1a) + ";c1b=" + list(c1b) + ";c2=" + list(c2) + ";c3=" + list(c3);
}

PropagatorSet PropagatorSet::make(const Gauge& gauge, const MirrorData& md) {
    gauge.validate();
    const QSeries& A = md.A;
    const QSeries& B = md.B1;
    const QSeries& X = md.X;
    QSeries c1a = gauge.c1a.eval(md), c1b = gauge.c1b.eval(md);
    QSeries c2 = gauge.c2.eval(md), c3 = gauge.c3.eval(md);
    PropagatorSet p;
    p.E_psi = B + c1a;
    p.E_phiphi = A + Rat(2) * B + c1b;
    p.E_phipsi = -md.B2 - c1b * B + c2;
    p.E_psipsi = -md.B3 + (B - X) * md.B2 - frac(2, 5) * B * X + c1b * B * B - Rat(2) * c2 * B + c3;
    return p;
}

PropagatorSet PropagatorSet::modified() const {
    PropagatorSet p;
    p.E_psi = E_psi;
    p.E_phiphi = E_phiphi;
    p.E_phipsi = E_psi * E_phiphi + E_phipsi;
    p.E_psipsi = E_psi * E_psi * E_phiphi + Rat(2) * E_psi * E_phipsi + E_psipsi;
    return p;
}

}  // namespace qgw
