#include "qgw/genpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "qgw/errors.hpp"

namespace qgw {

namespace {

constexpr int var_A = 0, var_B = 1, var_B2 = 2, var_B3 = 3, var_X = 4;  // generators
constexpr int var_E1 = 0, var_E2 = 1, var_E3 = 2, var_PB = 3, var_PX = 4;  // propagators

Exponents unit(int i) {
    Exponents e{};
    e[i] = 1;
    return e;
}

int weight(const Exponents& e, Basis basis) {
    const auto& w = variable_weights(basis);
    int s = 0;
    for (int i = 0; i < 5; ++i) s += w[i] * e[i];
    return s;
}

}  // namespace

const std::array<std::string, 5>& variable_names(Basis basis) {
    static const std::array<std::string, 5> gen{"A", "B", "B2", "B3", "X"};
    static const std::array<std::string, 5> prop{"E1", "E2", "E3", "B", "X"};
    return basis == Basis::generators ? gen : prop;
}

const Exponents& variable_weights(Basis basis) {
    static const Exponents gen{1, 1, 2, 3, 1};
    static const Exponents prop{1, 2, 3, 1, 1};
    return basis == Basis::generators ? gen : prop;
}

GenPoly GenPoly::constant(const Rat& c, Basis basis) {
    GenPoly p(basis);
    p.add_term(Exponents{}, c);
    return p;
}

GenPoly GenPoly::variable(int index, Basis basis) {
    GenPoly p(basis);
    p.add_term(unit(index), 1);
    return p;
}

GenPoly GenPoly::variable(const std::string& name, Basis basis) {
    const auto& names = variable_names(basis);
    for (int i = 0; i < 5; ++i)
        if (names[i] == name) return variable(i, basis);
    throw parse_error("unknown variable '" + name + "'");
}

Rat GenPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GenPoly::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
    if (o.basis_ != basis_) return *this += in_basis(o, basis_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
    if (o.basis_ != basis_) return *this -= in_basis(o, basis_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GenPoly& GenPoly::operator*=(const Rat& s) {
    if (s == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

std::string GenPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rat>> list(terms_.begin(), terms_.end());
    std::stable_sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
        int wa = weight(a.first, basis_), wb = weight(b.first, basis_);
        if (wa != wb) return wa > wb;
        return a.first > b.first;
    });
    const auto& names = variable_names(basis_);
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : list) {
        Rat a = abs(c);
        if (first) out << (c < 0 ? "-" : "");
        else out << (c < 0 ? " - " : " + ");
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool need_star = false;
        if (a != 1 || is_const) {
            out << qgw::to_string(a);
            need_star = true;
        }
        for (int i = 0; i < 5; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << names[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
GenPoly operator-(GenPoly a) { return a *= Rat(-1); }
GenPoly operator*(GenPoly a, const Rat& s) { return a *= s; }
GenPoly operator*(const Rat& s, GenPoly a) { return a *= s; }

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
    if (a.basis() != b.basis()) return a * in_basis(b, a.basis());
    GenPoly r(a.basis());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e;
            for (int i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

GenPoly pow(const GenPoly& a, int n) {
    GenPoly r = GenPoly::constant(1, a.basis());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(const std::string& text, Basis basis) : s_(text), basis_(basis) {}

    GenPoly run() {
        GenPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
    }
    bool starts_primary(char c) { return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '('; }

    GenPoly expr() {
        GenPoly p = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                p += term();
            } else if (c == '-') {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    GenPoly term() {
        GenPoly p = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p = p * unary();
            } else if (c == '/') {
                ++pos_;
                GenPoly d = unary();
                if (d.terms().size() != 1 || d.terms().begin()->first != Exponents{})
                    fail("division by a non-constant");
                p *= Rat(1) / d.terms().begin()->second;
            } else if (starts_primary(c)) {
                p = p * power();
            } else {
                return p;
            }
        }
    }

    GenPoly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    GenPoly power() {
        GenPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            base = pow(base, std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    GenPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            GenPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return GenPoly::constant(Rat(Int(s_.substr(start, pos_ - start))), basis_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return GenPoly::variable(s_.substr(start, pos_ - start), basis_);
        }
        fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
    }

    std::string s_;
    Basis basis_;
    std::size_t pos_ = 0;
};

}  // namespace

GenPoly GenPoly::parse(const std::string& text, Basis basis) { return Parser(text, basis).run(); }

// ---------------------------------------------------------------- basis changes

GenPoly substitute(const GenPoly& p, const std::array<GenPoly, 5>& images) {
    const Basis target = images[0].basis();
    GenPoly r(target);
    std::array<std::vector<GenPoly>, 5> powers;
    for (const auto& [e, c] : p.terms()) {
        GenPoly term = GenPoly::constant(c, target);
        for (int i = 0; i < 5; ++i) {
            auto& list = powers[i];
            if (list.empty()) list.push_back(GenPoly::constant(1, target));
            while (static_cast<int>(list.size()) <= e[i]) list.push_back(list.back() * images[i]);
            if (e[i] > 0) term = term * list[e[i]];
        }
        r += term;
    }
    return r;
}

GenPoly to_generators(const GenPoly& p) {
    if (p.basis() == Basis::generators) return p;
    const Basis G = Basis::generators;
    GenPoly A = GenPoly::variable(var_A, G), B = GenPoly::variable(var_B, G);
    GenPoly B2 = GenPoly::variable(var_B2, G), B3 = GenPoly::variable(var_B3, G);
    GenPoly X = GenPoly::variable(var_X, G);
    GenPoly E1 = A + Rat(2) * B;
    GenPoly E2 = -B2 + B * E1;
    GenPoly E3 = -B3 - (B + X) * B2 + E1 * B * B - frac(2, 5) * X * B;
    return substitute(p, {E1, E2, E3, B, X});
}

GenPoly to_propagators(const GenPoly& p) {
    if (p.basis() == Basis::propagators) return p;
    const Basis P = Basis::propagators;
    GenPoly E1 = GenPoly::variable(var_E1, P), E2 = GenPoly::variable(var_E2, P);
    GenPoly E3 = GenPoly::variable(var_E3, P), B = GenPoly::variable(var_PB, P);
    GenPoly X = GenPoly::variable(var_PX, P);
    GenPoly A = E1 - Rat(2) * B;
    GenPoly B2 = -E2 + B * E1;
    GenPoly B3 = -E3 - (B + X) * B2 + E1 * B * B - frac(2, 5) * X * B;
    return substitute(p, {A, B, B2, B3, X});
}

GenPoly in_basis(const GenPoly& p, Basis basis) {
    return basis == Basis::generators ? to_generators(p) : to_propagators(p);
}

// ---------------------------------------------------------------- calculus

GenPoly partial(const GenPoly& p, int index) {
    GenPoly r(p.basis());
    for (const auto& [e, c] : p.terms()) {
        if (e[index] == 0) continue;
        Exponents f = e;
        --f[index];
        r.add_term(f, c * e[index]);
    }
    return r;
}

std::array<GenPoly, 4> partials(const GenPoly& p) {
    GenPoly g = to_generators(p);
    return {partial(g, var_A), partial(g, var_B), partial(g, var_B2), partial(g, var_B3)};
}

GenPoly D_gen(const GenPoly& p) {
    const Basis G = Basis::generators;
    static const std::array<GenPoly, 5> images = [] {
        GenPoly A = GenPoly::variable(var_A, G), B = GenPoly::variable(var_B, G);
        GenPoly B2 = GenPoly::variable(var_B2, G), B3 = GenPoly::variable(var_B3, G);
        GenPoly X = GenPoly::variable(var_X, G);
        GenPoly A2 = Rat(2) * B * B - Rat(2) * A * B - Rat(4) * B2 - X * (A + Rat(2) * B + GenPoly::constant(frac(2, 5)));
        GenPoly B4 = -X * (Rat(2) * B3 + frac(7, 5) * B2 + frac(2, 5) * B + GenPoly::constant(frac(24, 625)));
        return std::array<GenPoly, 5>{A2 - A * A, B2 - B * B, B3 - B * B2, B4 - B * B3, X - X * X};
    }();
    GenPoly g = to_generators(p);
    GenPoly r(G);
    for (int i = 0; i < 5; ++i) r += partial(g, i) * images[i];
    return in_basis(r, p.basis());
}

QSeries eval(const GenPoly& p, const MirrorData& md) {
    const std::array<const QSeries*, 5> gen{&md.A, &md.B1, &md.B2, &md.B3, &md.X};
    std::array<QSeries, 5> values;
    if (p.basis() == Basis::generators) {
        for (int i = 0; i < 5; ++i) values[i] = *gen[i];
    } else {
        const QSeries& A = md.A;
        const QSeries& B = md.B1;
        const QSeries& X = md.X;
        QSeries E1 = A + Rat(2) * B;
        values = {E1, -md.B2 + B * E1, -md.B3 - (B + X) * md.B2 + E1 * B * B - frac(2, 5) * X * B, B, X};
    }
    std::array<std::vector<QSeries>, 5> powers;
    QSeries r(md.order);
    for (const auto& [e, c] : p.terms()) {
        QSeries term = QSeries::constant(c, md.order);
        for (int i = 0; i < 5; ++i) {
            auto& list = powers[i];
            if (list.empty()) list.push_back(QSeries::constant(1, md.order));
            while (static_cast<int>(list.size()) <= e[i]) list.push_back(list.back() * values[i]);
            if (e[i] > 0) term = term * list[e[i]];
        }
        r += term;
    }
    return r;
}

GenPoly raise_gen(int g, const GenPoly& P, int m) {
    const Basis G = Basis::generators;
    GenPoly factor = Rat(2 * g - 2) * GenPoly::variable(var_B, G) - Rat(m) * GenPoly::variable(var_A, G) +
                     Rat(g - 1) * GenPoly::variable(var_X, G);
    GenPoly p = to_generators(P);
    return D_gen(p) + factor * p;
}

// ---------------------------------------------------------------- fitting

GenPoly ringfit(const QSeries& s, Basis basis, const Exponents& weights, int bound, const MirrorData& md,
                int margin) {
    // Monomials of weighted degree <= bound in the variables of positive weight.
    std::vector<Exponents> monos;
    Exponents e{};
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == 5) {
            monos.push_back(e);
            return;
        }
        if (weights[i] <= 0) {
            e[i] = 0;
            self(self, i + 1, used);
            return;
        }
        for (int k = 0; used + k * weights[i] <= bound; ++k) {
            e[i] = k;
            self(self, i + 1, used + k * weights[i]);
        }
        e[i] = 0;
    };
    rec(rec, 0, 0);
    const int M = static_cast<int>(monos.size());
    const int order = std::min(s.order(), md.order);
    const int N = order + 1;
    if (N < M + margin)
        throw std::invalid_argument("ringfit: " + std::to_string(M) + " monomials need order >= " +
                                    std::to_string(M + margin - 1));

    // Augmented matrix rows = q-coefficients, columns = monomials | s.
    std::vector<std::vector<Rat>> a(N, std::vector<Rat>(M + 1));
    for (int j = 0; j < M; ++j) {
        GenPoly mono(basis);
        mono.add_term(monos[j], 1);
        QSeries v = eval(mono, md);
        for (int i = 0; i < N; ++i) a[i][j] = v[i];
    }
    for (int i = 0; i < N; ++i) a[i][M] = s[i];
    std::vector<int> row_id(N);
    for (int i = 0; i < N; ++i) row_id[i] = i;

    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < M && rank < N; ++col) {
        int piv = -1;
        for (int i = rank; i < N; ++i)
            if (a[i][col] != 0 && (piv < 0 || row_id[i] < row_id[piv])) piv = i;
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        std::swap(row_id[piv], row_id[rank]);
        Rat inv_p = 1 / a[rank][col];
        for (int j = col; j <= M; ++j) a[rank][j] *= inv_p;
        for (int i = 0; i < N; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j <= M; ++j)
                if (a[rank][j] != 0) a[i][j] -= f * a[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < M) throw kernel_detected(rank, M);
    int first_bad = -1;
    for (int i = rank; i < N; ++i)
        if (a[i][M] != 0 && (first_bad < 0 || row_id[i] < first_bad)) first_bad = row_id[i];
    if (first_bad >= 0) throw no_fit(first_bad);

    GenPoly r(basis);
    for (int k = 0; k < rank; ++k) r.add_term(monos[pivot_col[k]], a[k][M]);
    return r;
}

// ---------------------------------------------------------------- anomaly equations

GenPoly hae2_operator(const GenPoly& p) {
    const Basis G = Basis::generators;
    GenPoly A = GenPoly::variable(var_A, G), B = GenPoly::variable(var_B, G);
    GenPoly B2 = GenPoly::variable(var_B2, G), X = GenPoly::variable(var_X, G);
    auto d = partials(p);
    GenPoly E1 = A + Rat(2) * B;
    return Rat(-2) * d[0] + d[1] + E1 * d[2] + ((B - X) * E1 - B2 - frac(2, 5) * X) * d[3];
}

HAEReport verify_HAE(int g, const GenPoly& P_g, const std::map<int, GenPoly>& lower, const MirrorData& md) {
    HAEReport rep;
    rep.genus = g;
    rep.order = md.order;
    QSeries zero(md.order);
    rep.hae2_first_failure = first_difference(eval(hae2_operator(P_g), md), zero);
    if (lower.empty()) return rep;

    // P_{h,1} from the stored P_h (P_{1,1} itself at genus one).
    auto p1 = [&](int h) {
        auto it = lower.find(h);
        if (it == lower.end()) throw missing_vertex_data(h, h == 1 ? 1 : 0);
        return h == 1 ? to_generators(it->second) : raise_gen(h, it->second, 0);
    };
    GenPoly rhs = frac(1, 2) * raise_gen(g - 1, p1(g - 1), 1);
    for (int g1 = 1; g1 < g; ++g1) rhs += frac(1, 2) * p1(g1) * p1(g - g1);
    GenPoly lhs = -partials(P_g)[0];
    rep.hae1_checked = true;
    rep.hae1_first_failure = first_difference(eval(lhs, md), eval(rhs, md));
    return rep;
}

}  // namespace qgw
