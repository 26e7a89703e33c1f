#pragma once

#include <array>
#include <map>
#include <string>

#include "qgw/mirror.hpp"

namespace qgw {

enum class Basis {
    generators,   // variables (A, B, B2, B3, X)
    propagators,  // variables (E1, E2, E3, B, X)
};

using Exponents = std::array<int, 5>;

// Polynomial with exact coefficients in the variables of one basis.
class GenPoly {
public:
    explicit GenPoly(Basis basis = Basis::generators) : basis_(basis) {}
    static GenPoly constant(const Rat& c, Basis basis = Basis::generators);
    static GenPoly variable(int index, Basis basis);
    // Variable by name: A, B, B2, B3, X (generators) or E1, E2, E3, B, X (propagators).
    static GenPoly variable(const std::string& name, Basis basis);

    // Sums of products of rationals and variables, with ^, parentheses and implicit multiplication,
    // e.g. "350/9*E3 + 25 E1 E2/6 - X^2/6".
    static GenPoly parse(const std::string& text, Basis basis);

    Basis basis() const { return basis_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    Rat coeff(const Exponents& e) const;
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const Rat& c);

    GenPoly& operator+=(const GenPoly& o);
    GenPoly& operator-=(const GenPoly& o);
    GenPoly& operator*=(const Rat& s);

    // Deterministic ordering: descending weighted degree, then descending exponents.
    std::string to_string() const;

    friend bool operator==(const GenPoly& a, const GenPoly& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GenPoly& a, const GenPoly& b) { return !(a == b); }

private:
    Basis basis_;
    std::map<Exponents, Rat> terms_;
};

GenPoly operator+(GenPoly a, const GenPoly& b);
GenPoly operator-(GenPoly a, const GenPoly& b);
GenPoly operator-(GenPoly a);
GenPoly operator*(const GenPoly& a, const GenPoly& b);
GenPoly operator*(GenPoly a, const Rat& s);
GenPoly operator*(const Rat& s, GenPoly a);
GenPoly pow(const GenPoly& a, int n);

// Variable names and weights (A, B, X: 1; B_p, E_p: p).
const std::array<std::string, 5>& variable_names(Basis basis);
const Exponents& variable_weights(Basis basis);

GenPoly to_generators(const GenPoly& p);
GenPoly to_propagators(const GenPoly& p);
GenPoly in_basis(const GenPoly& p, Basis basis);
// Substitutes images for the five variables (all images in one common basis).
GenPoly substitute(const GenPoly& p, const std::array<GenPoly, 5>& images);

// q d/dq on the ring, result in the basis of p.
GenPoly D_gen(const GenPoly& p);
// Formal partial derivative in variable `index` of p's own basis.
GenPoly partial(const GenPoly& p, int index);
// (d/dA, d/dB, d/dB2, d/dB3) of the generator-basis form of p.
std::array<GenPoly, 4> partials(const GenPoly& p);

QSeries eval(const GenPoly& p, const MirrorData& md);

// P_{g,m+1} from P_{g,m} on the ring (generator basis).
GenPoly raise_gen(int g, const GenPoly& P, int m);

// Expresses s through the monomials of `basis` with sum w_i e_i <= bound (variables of weight 0 are
// excluded). Throws kernel_detected, no_fit; needs order(s) + 1 >= #monomials + margin.
GenPoly ringfit(const QSeries& s, Basis basis, const Exponents& weights, int bound, const MirrorData& md,
                int margin);

struct HAEReport {
    int genus = 0;
    int order = 0;
    int hae1_first_failure = -1;  // q-order of the first mismatch, -1 when the identity holds
    int hae2_first_failure = -1;
    bool hae1_checked = false;
    bool ok() const { return hae1_first_failure < 0 && hae2_first_failure < 0; }
};

// -d_A P_g = 1/2 P_{g-1,2} + 1/2 sum_{g1+g2=g, gi>=1} P_{g1,1} P_{g2,1}
// (-2 d_A + d_B + (A+2B) d_{B2} + ((B-X)(A+2B) - B2 - 2X/5) d_{B3}) P_g = 0
// `lower` maps genus h (1 <= h < g) to P_h (P_{1,1} for h = 1); pass an empty map to check only
// the second equation.
HAEReport verify_HAE(int g, const GenPoly& P_g, const std::map<int, GenPoly>& lower, const MirrorData& md);

// HAE2 operator applied to p (generator basis).
GenPoly hae2_operator(const GenPoly& p);

}  // namespace qgw
