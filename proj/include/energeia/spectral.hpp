#pragma once

#include "energeia/energy.hpp"
#include "energeia/matrix.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace energeia {

// Pinned numeric tolerances for the double-precision spectral layer.
inline constexpr double kSelfAdjointTol = 1e-9;
inline constexpr double kZeroEigenTol = 1e-9;
inline constexpr double kSingularTol = 1e-12;

struct SpectralReport {
    std::vector<double> eigenvalues; // ascending
    long positive_count = 0;
    long negative_count = 0;
    long zero_count = 0;
    std::vector<std::pair<std::complex<double>, std::complex<double>>> zeta_samples;
};

// Eigenvalues of a self-adjoint matrix over a real/complex-viewable ring
// (rational, gaussian rational, complex double).
SpectralReport eigen_self_adjoint(const SquareMatrix& m);

// (#positive, #negative) of h; asserted (exactly, by congruence inertia) to
// equal the eigenvalue sign counts of both L and g.
std::pair<long, long> signature_counts(const EnergizedComplex& e);

// zeta(s) = sum_j lambda_j^s over the spectrum of H = L*L, with the
// principal real logarithm of each positive eigenvalue; zeta(0) = n.
SpectralReport zeta(const EnergizedComplex& e, const std::vector<std::complex<double>>& s_values);

// u(t) = (g*g)^{it} u0; unitary, so the norm of u is preserved.
std::vector<std::complex<double>> schrodinger_flow(const EnergizedComplex& e, double t,
                                                   const std::vector<std::complex<double>>& u0);

// tr((g*g)^{it}).
std::complex<double> schrodinger_trace(const EnergizedComplex& e, double t);

// H^s as a dense complex matrix, H = L*L.
std::vector<std::complex<double>> matrix_power_LstarL(const EnergizedComplex& e,
                                                      std::complex<double> s);

// Iterates u(k+1) = L_k* L_k u(k) where L_k is built from u(k) taken as the
// energy assignment on the fixed geometry; returns the full trajectory
// u(0..steps). Complex-double ring only.
std::vector<EnergyAssignment> nonlinear_flow(const EnergizedComplex& e0, size_t steps);

} // namespace energeia
