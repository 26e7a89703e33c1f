#include "qgw/classical.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "qgw/errors.hpp"

namespace qgw {

Rat classical_Ng0(int g) {
    if (g < 2) throw std::invalid_argument("classical_Ng0 requires g >= 2");
    Rat r = Rat(quintic_euler) * abs(bernoulli(2 * g)) * abs(bernoulli(2 * g - 2));
    r /= Rat(Int(2 * 2 * g * (2 * g - 2)) * factorial(2 * g - 2));
    return g % 2 ? Rat(-r) : r;
}

Rat multiple_cover(int h, int d) {
    if (h < 0 || d < 1) throw std::invalid_argument("multiple_cover requires h >= 0, d >= 1");
    // sin(t/2)/(t/2) = sum_k (-1)^k t^{2k} / (4^k (2k+1)!)
    const int order = 2 * h;
    QSeries s(order);
    for (int k = 0; 2 * k <= order; ++k) {
        Rat c = Rat(1) / (Rat(factorial(2 * k + 1)) * pow(Rat(4), k));
        s[2 * k] = k % 2 ? Rat(-c) : c;
    }
    QSeries w = inv(s * s);
    return w[2 * h] * pow(Rat(d), 2 * h - 3);
}

std::vector<Rat> instanton_counts(const QSeries& genus0) {
    const int order = genus0.order();
    std::vector<Rat> n(static_cast<std::size_t>(order) + 1, Rat(0));
    for (int d = 1; d <= order; ++d) {
        Rat v = genus0[d];
        for (int k = 2; k <= d; ++k)
            if (d % k == 0) v -= n[d / k] / pow(Rat(k), 3);
        n[d] = v;
    }
    return n;
}

ClassicalData ClassicalData::from_mirror(const MirrorData& md) {
    ClassicalData c;
    QSeries g0 = genus0_potential(md.order >= 3 ? md : build_mirror(3));
    c.n = instanton_counts(g0.truncated(3));
    auto covers = [&](int h, int d) {
        Rat v = 0;
        for (int k = 1; k <= d; ++k)
            if (d % k == 0) v += c.n[d / k] * multiple_cover(h, k);
        return v;
    };
    c.invariants[{1, 1}] = covers(1, 1);
    for (int d = 1; d <= 3; ++d) c.invariants[{2, d}] = covers(2, d);
    return c;
}

std::optional<Rat> ClassicalData::invariant(int g, int d) const {
    auto it = invariants.find({g, d});
    if (it != invariants.end()) return it->second;
    if (d == 0 && g >= 2) return classical_Ng0(g);
    return std::nullopt;
}

void ClassicalData::load(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() != 3)
            throw parse_error(source + ":" + std::to_string(lineno) + ": expected 'g, d, value'");
        try {
            Rat g = parse_rat(fields[0]), d = parse_rat(fields[1]);
            if (g.get_den() != 1 || d.get_den() != 1 || g < 0 || d < 0) throw parse_error("bad index");
            invariants[{static_cast<int>(g.get_num().get_si()), static_cast<int>(d.get_num().get_si())}] =
                parse_rat(fields[2]);
        } catch (const parse_error& e) {
            throw parse_error(source + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void ClassicalData::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open initial-data file '" + path + "'");
    load(in, path);
}

}  // namespace qgw
