#include "qgw/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "qgw/errors.hpp"

namespace qgw {

QSeries::QSeries(int order) : c_(static_cast<std::size_t>(std::max(order, 0)) + 1, Rat(0)) {}

QSeries::QSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.emplace_back(0);
}

QSeries QSeries::constant(const Rat& c, int order) {
    QSeries s(order);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::monomial(int k, const Rat& c, int order) {
    QSeries s(order);
    if (k <= order) s.c_[k] = c;
    return s;
}

QSeries QSeries::truncated(int order) const {
    QSeries s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

int QSeries::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (c_[k] != 0) return k;
    return -1;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    c_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    c_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
    *this = *this * o;
    return *this;
}

QSeries& QSeries::operator*=(const Rat& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

std::string QSeries::to_string(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) out << (c_[k] < 0 ? " - " : " + ");
        else if (c_[k] < 0) out << "-";
        first = false;
        Rat a = abs(c_[k]);
        if (k == 0) out << qgw::to_string(a);
        else {
            if (a != 1) out << qgw::to_string(a) << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    out << " + O(" << var << "^" << order() + 1 << ")";
    return out.str();
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
QSeries operator-(QSeries a) { return a *= Rat(-1); }
QSeries operator*(QSeries a, const Rat& s) { return a *= s; }
QSeries operator*(const Rat& s, QSeries a) { return a *= s; }
QSeries operator+(QSeries a, const Rat& s) {
    a[0] += s;
    return a;
}
QSeries operator-(QSeries a, const Rat& s) {
    a[0] -= s;
    return a;
}

namespace {

// Writes coefficients 0..n as integer numerators over one common denominator.
Int common_numerators(const QSeries& a, int n, std::vector<Int>& nums) {
    Int den = 1;
    for (int k = 0; k <= n; ++k)
        if (a[k] != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[k].get_den_mpz_t());
    nums.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        if (a[k] == 0) {
            nums[k] = 0;
            continue;
        }
        mpz_divexact(nums[k].get_mpz_t(), den.get_mpz_t(), a[k].get_den_mpz_t());
        nums[k] *= a[k].get_num();
    }
    return den;
}

}  // namespace

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Int> an, bn;
    Int da = common_numerators(a, n, an);
    Int db = common_numerators(b, n, bn);
    Int den = da * db;
    QSeries r(n);
    Int acc;
    for (int k = 0; k <= n; ++k) {
        acc = 0;
        for (int i = 0; i <= k; ++i) {
            if (an[i] == 0 || bn[k - i] == 0) continue;
            mpz_addmul(acc.get_mpz_t(), an[i].get_mpz_t(), bn[k - i].get_mpz_t());
        }
        if (acc == 0) continue;
        r[k] = Rat(acc, den);
        r[k].canonicalize();
    }
    return r;
}

bool operator==(const QSeries& a, const QSeries& b) { return first_difference(a, b) < 0; }

int first_difference(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (a[k] != b[k]) return k;
    return -1;
}

QSeries inv(const QSeries& a) {
    if (a[0] == 0) throw zero_constant_term();
    const int n = a.order();
    QSeries r(n);
    Rat a0inv = 1 / a[0];
    r[0] = a0inv;
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j)
            if (a[j] != 0) s += a[j] * r[k - j];
        r[k] = -s * a0inv;
    }
    return r;
}

QSeries D(const QSeries& a) {
    QSeries r(a.order());
    for (int k = 1; k <= a.order(); ++k) r[k] = a[k] * k;
    return r;
}

QSeries exp(const QSeries& a) {
    if (a[0] != 0) throw bad_constant_term("exp requires a series with zero constant term");
    const int n = a.order();
    QSeries r(n);
    r[0] = 1;
    // k e_k = sum_{j=1}^{k} j a_j e_{k-j}
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j)
            if (a[j] != 0) s += j * a[j] * r[k - j];
        r[k] = s / k;
    }
    return r;
}

QSeries log(const QSeries& a) {
    if (a[0] != 1) throw bad_constant_term("log requires a series with constant term 1");
    QSeries d = D(a) * inv(a);
    QSeries r(a.order());
    for (int k = 1; k <= a.order(); ++k) r[k] = d[k] / k;
    return r;
}

QSeries pow(const QSeries& a, int n) {
    QSeries r = QSeries::constant(1, a.order());
    QSeries b = a;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return r;
}

QSeries compose(const QSeries& a, const QSeries& b) {
    if (b[0] != 0) throw bad_constant_term("compose requires an inner series with zero constant term");
    const int n = std::min(a.order(), b.order());
    QSeries r = QSeries::constant(a[n], n);
    for (int k = n - 1; k >= 0; --k) r = r * b + a[k];
    return r;
}

QSeries revert_monic(const QSeries& a) {
    if (a.order() < 1 || a[0] != 0 || a[1] != 1) throw not_monic();
    const int n = a.order();
    // Lagrange inversion: b_k = (1/k) [q^{k-1}] (q / a)^k
    QSeries shifted(n - 1);
    for (int k = 0; k < n; ++k) shifted[k] = a[k + 1];
    QSeries h = inv(shifted);
    QSeries hk = QSeries::constant(1, n - 1);
    QSeries r(n);
    for (int k = 1; k <= n; ++k) {
        hk = hk * h;
        r[k] = hk[k - 1] / k;
    }
    return r;
}

}  // namespace qgw
