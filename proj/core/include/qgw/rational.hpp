#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qgw {

// Exact rational number. Arithmetic results are canonical, but the two-argument
// constructor is not: build fractions with frac().
using Rat = mpq_class;
using Int = mpz_class;

// "n" when the denominator is 1, otherwise "n/d".
// n/d in lowest terms.
inline Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r);

// Accepts "n", "-n", "n/d"; whitespace around the value is ignored.
Rat parse_rat(std::string_view text);

Int factorial(int n);
Int binomial(int n, int k);

// (a)_k = a (a-1) ... (a-k+1); (a)_0 = 1.
Int falling_factorial(int a, int k);

Rat pow(const Rat& base, int exponent);

// Bernoulli number B_n with B_1 = -1/2; memoized and thread-safe.
Rat bernoulli(int n);

}  // namespace qgw
