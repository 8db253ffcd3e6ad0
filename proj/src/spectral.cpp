#include "energeia/spectral.hpp"

#include "energeia/errors.hpp"
#include "energeia/exact_linalg.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace energeia {

namespace {

Eigen::MatrixXcd to_eigen(const SquareMatrix& m) {
    Eigen::MatrixXcd a(m.n, m.n);
    for (size_t i = 0; i < m.n; ++i)
        for (size_t j = 0; j < m.n; ++j) a(static_cast<long>(i), static_cast<long>(j)) = rv_to_complex(m.at(i, j));
    return a;
}

// Hermitian eigen-solve with the symmetrization guard (m + m*)/2.
void hermitian_eigs(const Eigen::MatrixXcd& a, Eigen::VectorXd& evals, Eigen::MatrixXcd& evecs) {
    Eigen::MatrixXcd sym = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) throw Error("eigen-solver failed to converge");
    evals = solver.eigenvalues();
    evecs = solver.eigenvectors();
}

Eigen::MatrixXcd lstar_l(const EnergizedComplex& e) {
    SquareMatrix L = build_L(e);
    Eigen::MatrixXcd a = to_eigen(L);
    return a.adjoint() * a;
}

Eigen::MatrixXcd gstar_g(const EnergizedComplex& e) {
    SquareMatrix g = build_g(e);
    Eigen::MatrixXcd a = to_eigen(g);
    return a.adjoint() * a;
}

// Positive spectrum guard: H must be positive definite (L nonsingular).
void require_positive(const Eigen::VectorXd& evals) {
    double top = evals.size() == 0 ? 0.0 : std::max(1.0, evals(evals.size() - 1));
    for (long i = 0; i < evals.size(); ++i)
        if (evals(i) <= kSingularTol * top)
            throw SingularOperator("operator has a numerically zero eigenvalue");
}

} // namespace

SpectralReport eigen_self_adjoint(const SquareMatrix& m) {
    switch (m.ring) {
        case RingId::Rational:
        case RingId::Gaussian:
        case RingId::Complex64:
            break;
        default:
            throw UnsupportedRing("eigen-solve needs a real/complex-viewable ring");
    }
    Eigen::MatrixXcd a = to_eigen(m);
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if (((a - a.adjoint()).cwiseAbs().maxCoeff()) > kSelfAdjointTol * scale)
        throw NotSelfAdjoint("matrix is not self-adjoint");
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
    hermitian_eigs(a, evals, evecs);
    SpectralReport rep;
    rep.eigenvalues.assign(evals.data(), evals.data() + evals.size());
    double top = 1.0;
    for (double v : rep.eigenvalues) top = std::max(top, std::abs(v));
    for (double v : rep.eigenvalues) {
        if (std::abs(v) <= kZeroEigenTol * top)
            ++rep.zero_count;
        else if (v > 0)
            ++rep.positive_count;
        else
            ++rep.negative_count;
    }
    return rep;
}

std::pair<long, long> signature_counts(const EnergizedComplex& e) {
    if (e.h.ring != RingId::Rational)
        throw UnsupportedRing("signature counts need the rational ring");
    long pos = 0, neg = 0;
    for (const auto& v : e.h.values) {
        const Rat& r = std::get<Rat>(v.v);
        if (r == 0) throw ZeroEnergy("signature needs h(x) != 0 everywhere");
        (r > 0 ? pos : neg)++;
    }
    // Exact Sylvester cross-check: L and g are congruent to diag(h).
    RootCounts il = inertia_congruence(build_L(e));
    RootCounts ig = inertia_congruence(build_g(e));
    if (il.positive != pos || il.negative != neg || il.zero != 0 ||
        ig.positive != pos || ig.negative != neg || ig.zero != 0)
        throw Error("eigenvalue sign counts disagree with the energy signs");
    return {pos, neg};
}

SpectralReport zeta(const EnergizedComplex& e, const std::vector<std::complex<double>>& s_values) {
    switch (e.h.ring) {
        case RingId::Rational:
        case RingId::Gaussian:
        case RingId::Complex64:
            break;
        default:
            throw UnsupportedRing("zeta needs a real/complex-viewable ring");
    }
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
    hermitian_eigs(lstar_l(e), evals, evecs);
    require_positive(evals);
    SpectralReport rep;
    rep.eigenvalues.assign(evals.data(), evals.data() + evals.size());
    rep.positive_count = static_cast<long>(rep.eigenvalues.size());
    for (const auto& s : s_values) {
        std::complex<double> z = 0.0;
        for (double lam : rep.eigenvalues) z += std::exp(s * std::log(lam));
        rep.zeta_samples.emplace_back(s, z);
    }
    return rep;
}

std::vector<std::complex<double>> matrix_power_LstarL(const EnergizedComplex& e,
                                                      std::complex<double> s) {
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
    hermitian_eigs(lstar_l(e), evals, evecs);
    require_positive(evals);
    Eigen::VectorXcd powered(evals.size());
    for (long i = 0; i < evals.size(); ++i) powered(i) = std::exp(s * std::log(evals(i)));
    Eigen::MatrixXcd out = evecs * powered.asDiagonal() * evecs.adjoint();
    std::vector<std::complex<double>> flat(out.size());
    for (long i = 0; i < out.rows(); ++i)
        for (long j = 0; j < out.cols(); ++j) flat[static_cast<size_t>(i * out.cols() + j)] = out(i, j);
    return flat;
}

namespace {

Eigen::MatrixXcd unitary_flow(const EnergizedComplex& e, double t) {
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
    hermitian_eigs(gstar_g(e), evals, evecs);
    require_positive(evals);
    Eigen::VectorXcd powered(evals.size());
    const std::complex<double> it(0.0, t);
    for (long i = 0; i < evals.size(); ++i) powered(i) = std::exp(it * std::log(evals(i)));
    return evecs * powered.asDiagonal() * evecs.adjoint();
}

} // namespace

std::vector<std::complex<double>> schrodinger_flow(const EnergizedComplex& e, double t,
                                                   const std::vector<std::complex<double>>& u0) {
    if (u0.size() != e.size()) throw ShapeError("flow state length must equal the simplex count");
    Eigen::MatrixXcd U = unitary_flow(e, t);
    Eigen::VectorXcd v(u0.size());
    for (size_t i = 0; i < u0.size(); ++i) v(static_cast<long>(i)) = u0[i];
    Eigen::VectorXcd w = U * v;
    return {w.data(), w.data() + w.size()};
}

std::complex<double> schrodinger_trace(const EnergizedComplex& e, double t) {
    return unitary_flow(e, t).trace();
}

std::vector<EnergyAssignment> nonlinear_flow(const EnergizedComplex& e0, size_t steps) {
    if (e0.h.ring != RingId::Complex64)
        throw UnsupportedRing("nonlinear flow runs over complex doubles");
    std::vector<EnergyAssignment> traj;
    traj.push_back(e0.h);
    EnergizedComplex cur = e0;
    for (size_t k = 0; k < steps; ++k) {
        Eigen::MatrixXcd H = lstar_l(cur);
        Eigen::VectorXcd u(cur.size());
        for (size_t i = 0; i < cur.size(); ++i)
            u(static_cast<long>(i)) = std::get<std::complex<double>>(cur.h.values[i].v);
        Eigen::VectorXcd next = H * u;
        for (size_t i = 0; i < cur.size(); ++i) {
            RingValue v;
            v.id = RingId::Complex64;
            v.v = next(static_cast<long>(i));
            cur.h.values[i] = v;
        }
        traj.push_back(cur.h);
    }
    return traj;
}

} // namespace energeia
