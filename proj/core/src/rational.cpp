#include "qgw/rational.hpp"

#include <cctype>
#include <mutex>
#include <vector>

#include "qgw/errors.hpp"

namespace qgw {

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string str(s);
        if (!str.empty() && str.front() == '+') str.erase(0, 1);
        std::size_t first = (!str.empty() && str.front() == '-') ? 1 : 0;
        if (str.size() == first) throw parse_error("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = first; i < str.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(str[i])))
                throw parse_error("malformed rational '" + std::string(text) + "'");
        return Int(str, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int factorial(int n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int falling_factorial(int a, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= a - i;
    return r;
}

Rat pow(const Rat& base, int exponent) {
    Rat b = exponent < 0 ? Rat(1 / base) : base;
    int e = exponent < 0 ? -exponent : exponent;
    Rat r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rat bernoulli(int n) {
    static std::mutex mutex;
    static std::vector<Rat> memo{Rat(1)};
    std::lock_guard<std::mutex> lock(mutex);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        Rat s = 0;
        for (int k = 0; k < m; ++k) s += Rat(binomial(m + 1, k)) * memo[k];
        memo.push_back(-s / (m + 1));
    }
    return memo[n];
}

}  // namespace qgw
