#pragma once

#include <stdexcept>
#include <string>

namespace qgw {

// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class zero_constant_term : public error {
public:
    zero_constant_term() : error("series has zero constant term") {}
};

class bad_constant_term : public error {
public:
    explicit bad_constant_term(const std::string& what) : error(what) {}
};

class not_monic : public error {
public:
    not_monic() : error("series is not of the form q + O(q^2)") {}
};

class mirror_identity_violation : public error {
public:
    explicit mirror_identity_violation(int order)
        : error("P_{0,3} differs from 1 at q-order " + std::to_string(order)), failing_order(order) {}
    int failing_order;
};

class unstable : public error {
public:
    unstable(int g, int n)
        : error("unstable type (g=" + std::to_string(g) + ", n=" + std::to_string(n) + ")") {}
};

class missing_vertex_data : public error {
public:
    missing_vertex_data(int g, int m)
        : error("vertex table lacks P_{" + std::to_string(g) + "," + std::to_string(m) + "}"),
          genus(g), insertions(m) {}
    int genus;
    int insertions;
};

class not_polynomial : public error {
public:
    explicit not_polynomial(int order)
        : error("series is not a polynomial in X: mismatch at q-order " + std::to_string(order)),
          failing_order(order) {}
    int failing_order;
};

class insufficient_initial_data : public error {
public:
    insufficient_initial_data(int g, int d)
        : error("missing initial datum N_{" + std::to_string(g) + "," + std::to_string(d) + "}"),
          genus(g), degree(d) {}
    int genus;
    int degree;
};

class kernel_detected : public error {
public:
    kernel_detected(int rank, int unknowns)
        : error("fit is not unique: rank " + std::to_string(rank) + " < " + std::to_string(unknowns) +
                " unknowns (raise the order)") {}
};

class no_fit : public error {
public:
    explicit no_fit(int order)
        : error("series is not in the span of the monomials: mismatch at q-order " +
                std::to_string(order)),
          failing_order(order) {}
    int failing_order;
};

class truncation_overflow : public error {
public:
    explicit truncation_overflow(const std::string& what) : error(what) {}
};

class invalid_gauge : public error {
public:
    explicit invalid_gauge(const std::string& what) : error(what) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace qgw
