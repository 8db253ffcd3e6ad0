#pragma once

#include <utility>
#include <vector>

#include "energeia/energy.hpp"
#include "energeia/ring_value.hpp"

namespace energeia {

// Dense square matrix over one ring; index carries the canonical simplex order
// when the matrix derives from a geometry.
struct SquareMatrix {
    RingId ring{RingId::Rational};
    size_t n = 0;
    std::vector<RingValue> a; // row-major, n*n
    std::vector<Simplex> index;

    RingValue& at(size_t i, size_t j) { return a[i * n + j]; }
    const RingValue& at(size_t i, size_t j) const { return a[i * n + j]; }
};

SquareMatrix mat_zero(RingId ring, size_t n);
SquareMatrix mat_identity(RingId ring, size_t n);
SquareMatrix mat_add(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_sub(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_transpose(const SquareMatrix& m);
SquareMatrix mat_conj_transpose(const SquareMatrix& m);
RingValue mat_trace(const SquareMatrix& m);
bool mat_eq(const SquareMatrix& a, const SquareMatrix& b);

// L(u,v) = chi(W-(u) /\ W-(v)): sum of h over common sub-simplices.
SquareMatrix build_L(const EnergizedComplex& e);
// g(u,v) = omega(u) omega(v) chi(W+(u) /\ W+(v)).
SquareMatrix build_g(const EnergizedComplex& e);
// Rank-one S(x,y) = omega(x) omega(y); S^2 = nS, unit diagonal.
SquareMatrix checkerboard(const EnergizedComplex& e);
// diag(omega); the involution entering the super-trace identities
// str(m) = tr(Pm), omega(G) = tr(P g* P g), omega_3(G) = tr(P g* P g P g).
SquareMatrix parity_matrix(const EnergizedComplex& e);

// g* L; needs the simplicial-complex axiom. Upper triangular in canonical
// order with |h(x)|^2 on the diagonal; the identity matrix for unit h.
SquareMatrix green_star_product(const EnergizedComplex& e);

// Hilbert-space-valued variant: h(x) is a rational vector, products are dot
// products. Returns the rational matrix g* L; identity when all <h,h> = 1.
SquareMatrix green_star_product_vector(const Geometry& g,
                                       const std::vector<std::vector<Rat>>& h);

struct DeterminantValue {
    RingId ring{RingId::Rational};
    bool is_dieudonne = false;
    RingValue value;   // commutative case
    double real_value = 0.0; // Dieudonne case (nonnegative)
};

// Fraction-free (Bareiss) elimination with full pivoting over the exact
// commutative rings (rational, Gaussian rational, polynomial).
DeterminantValue det_exact(const SquareMatrix& m);

// Dieudonne determinant via the complex 2n x 2n embedding (Study determinant),
// returning sqrt|det|; also |det| for the complex/gaussian/rational tags.
DeterminantValue det_dieudonne(const SquareMatrix& m);

// Exact real determinant of the 2n x 2n Gaussian-rational embedding of a
// rational-quaternion matrix; equals prod N(h(x)) for L and g.
Rat study_det_exact(const SquareMatrix& m);

DeterminantValue minor_det(const SquareMatrix& m, const std::vector<size_t>& rows,
                           const std::vector<size_t>& cols);

// lhs = det(1 + F^T G); rhs = sum over equal-size row/column subsets of
// det(F_{A,B}) det(G_{A,B}). Exact commutative rings only.
std::pair<RingValue, RingValue> cauchy_binet_check(const SquareMatrix& F,
                                                   const SquareMatrix& G);

// det(1 + g* g): exact for commutative exact rings, embedded for quaternions,
// LU for complex doubles.
DeterminantValue fredholm_energy(const EnergizedComplex& e);

} // namespace energeia
