#pragma once

#include "energeia/matrix.hpp"
#include "energeia/rational.hpp"

#include <vector>

namespace energeia {

// Dense univariate polynomial over the rationals; c[k] is the t^k coefficient.
struct UniPoly {
    std::vector<Rat> c;

    void trim();
    bool is_zero() const { return c.empty(); }
    size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
    Rat eval(const Rat& t) const;
};

UniPoly upoly_add(const UniPoly& a, const UniPoly& b);
UniPoly upoly_sub(const UniPoly& a, const UniPoly& b);
UniPoly upoly_mul(const UniPoly& a, const UniPoly& b);
UniPoly upoly_derivative(const UniPoly& p);
// Remainder of a by b (b nonzero), over the rationals.
UniPoly upoly_rem(const UniPoly& a, const UniPoly& b);
// Exact quotient; throws SingularOperator when the division is not exact.
UniPoly upoly_div_exact(const UniPoly& a, const UniPoly& b);
// Monic gcd over the rationals.
UniPoly upoly_gcd(UniPoly a, UniPoly b);

// Characteristic polynomial det(tI - m) of a rational matrix, exact
// (Faddeev-LeVerrier recursion; the integer divisions are exact over Q).
UniPoly charpoly_rational(const SquareMatrix& m);

// True iff c_k = (-1)^n c_{n-k} for all k: the characteristic polynomial of a
// matrix with determinant 1 whose spectrum is closed under x -> 1/x.
bool is_reciprocal_charpoly(const UniPoly& p);

struct RootCounts {
    long positive = 0;
    long negative = 0;
    long zero = 0;
};

// Sign-change count of the coefficient sequence: for a polynomial with all
// roots real this equals the number of positive roots with multiplicity.
RootCounts descartes_root_counts(const UniPoly& p);

// Root counts with multiplicity via Sturm chains on successive
// gcd(p, p') layers; exact for any rational polynomial.
RootCounts sturm_root_counts(const UniPoly& p);

// Inertia (n_+, n_-, n_0) of a symmetric rational matrix by congruence
// reduction; exact by Sylvester's law.
RootCounts inertia_congruence(const SquareMatrix& m);

// Row rank of a rational matrix (rectangular allowed).
size_t rank_rational(const std::vector<std::vector<Rat>>& rows);

} // namespace energeia
