#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "energeia/rational.hpp"

namespace energeia {

// Monomial: variable ids, sorted ascending, one entry per power (x0^2 x2 = [0,0,2]).
using Monomial = std::vector<uint32_t>;

// Ascending total degree, ties lexicographic. Multiplicative (comparison depends
// only on the multiset difference, which merging a common factor preserves), and a
// well-order — exact division below terminates.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Process-wide variable registry; ids are dense and stable.
uint32_t poly_intern_var(const std::string& name);
std::string poly_var_name(uint32_t id);

struct PolyTerm {
    Monomial mono;
    Rat coeff;
    friend bool operator==(const PolyTerm& a, const PolyTerm& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

// Commutative multivariate polynomial over Q. Terms sorted by MonoLess, no zeros.
class Poly {
public:
    std::vector<PolyTerm> terms;

    Poly() = default;
    static Poly constant(const Rat& c);
    static Poly variable(uint32_t id);
    static Poly variable(const std::string& name);

    bool is_zero() const { return terms.empty(); }
    bool is_one() const;
    // Total degree; -1 for the zero polynomial.
    int degree() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }

    // Exact division: throws SingularOperator on zero divisor or inexact quotient.
    static Poly div_exact(const Poly& num, const Poly& den);

    // Total substitution of every variable occurring in the polynomial.
    Rat substitute(const std::map<uint32_t, Rat>& values) const;

    // Canonical rendering, terms ascending: "x + y + 9 z", "x^2 + 2 x z", "-1/2 x".
    std::string str() const;
};

} // namespace energeia
