#include "energeia/hodge.hpp"

#include "energeia/errors.hpp"
#include "energeia/exact_linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace energeia {

namespace {

RatMatrix rat_matmul_t_left(const RatMatrix& a, const RatMatrix& b) {
    // a^T * b where a is r x c: result is c x cols(b).
    size_t r = a.size(), c = r == 0 ? 0 : a[0].size();
    size_t bc = b.empty() ? 0 : b[0].size();
    RatMatrix out(c, std::vector<Rat>(bc, Rat(0)));
    for (size_t k = 0; k < r; ++k)
        for (size_t i = 0; i < c; ++i) {
            if (a[k][i] == 0) continue;
            for (size_t j = 0; j < bc; ++j) out[i][j] += a[k][i] * b[k][j];
        }
    return out;
}

RatMatrix rat_matmul_t_right(const RatMatrix& a, const RatMatrix& b) {
    // a * b^T where a is r x c, b is s x c: result r x s.
    size_t r = a.size(), c = r == 0 ? 0 : a[0].size();
    size_t s = b.size();
    RatMatrix out(r, std::vector<Rat>(s, Rat(0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < s; ++j) {
            Rat acc(0);
            for (size_t k = 0; k < c; ++k) acc += a[i][k] * b[j][k];
            out[i][j] = acc;
        }
    return out;
}

RatMatrix rat_add(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

} // namespace

HodgeReport hodge_betti(const Geometry& g) {
    if (!g.is_complex) throw NotAComplex("Hodge data needs a simplicial complex");
    HodgeReport rep;
    int maxdim = -1;
    for (const auto& s : g.simplices) maxdim = std::max(maxdim, static_cast<int>(s.v.size()) - 1);
    std::vector<std::vector<size_t>> by_dim(static_cast<size_t>(maxdim + 1));
    std::vector<size_t> pos_in_dim(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        size_t d = g.simplices[i].v.size() - 1;
        pos_in_dim[i] = by_dim[d].size();
        by_dim[d].push_back(i);
    }
    size_t levels = by_dim.size();
    rep.boundaries.resize(levels);
    rep.boundaries[0] = RatMatrix{}; // 0-chains have no boundary
    for (size_t k = 1; k < levels; ++k) {
        RatMatrix d(by_dim[k - 1].size(), std::vector<Rat>(by_dim[k].size(), Rat(0)));
        for (size_t col = 0; col < by_dim[k].size(); ++col) {
            const Simplex& s = g.simplices[by_dim[k][col]];
            for (size_t drop = 0; drop < s.v.size(); ++drop) {
                Simplex face;
                face.v = s.v;
                face.v.erase(face.v.begin() + static_cast<long>(drop));
                d[pos_in_dim[g.index_of(face)]][col] = (drop % 2 == 0) ? 1 : -1;
            }
        }
        rep.boundaries[k] = std::move(d);
    }
    rep.laplacians.resize(levels);
    for (size_t k = 0; k < levels; ++k) {
        size_t nk = by_dim[k].size();
        RatMatrix H(nk, std::vector<Rat>(nk, Rat(0)));
        if (k >= 1) H = rat_add(H, rat_matmul_t_left(rep.boundaries[k], rep.boundaries[k]));
        if (k + 1 < levels)
            H = rat_add(H, rat_matmul_t_right(rep.boundaries[k + 1], rep.boundaries[k + 1]));
        rep.laplacians[k] = std::move(H);
    }
    rep.betti.resize(levels, 0);
    for (size_t k = 0; k < levels; ++k)
        rep.betti[k] = static_cast<long>(by_dim[k].size() - rank_rational(rep.laplacians[k]));
    rep.poincare = rep.betti;
    for (size_t k = 0; k < levels; ++k) {
        long nk = static_cast<long>(by_dim[k].size());
        rep.chi_top += (k % 2 == 0) ? nk : -nk;
    }
    return rep;
}

std::pair<double, long> mckean_singer_check(const Geometry& g, double t) {
    HodgeReport rep = hodge_betti(g);
    double str = 0.0;
    for (size_t k = 0; k < rep.laplacians.size(); ++k) {
        const RatMatrix& H = rep.laplacians[k];
        size_t n = H.size();
        if (n == 0) continue;
        Eigen::MatrixXd a(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                a(static_cast<long>(i), static_cast<long>(j)) = rat_to_double(H[i][j]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
        if (solver.info() != Eigen::Success) throw Error("eigen-solver failed to converge");
        double block = 0.0;
        for (long i = 0; i < solver.eigenvalues().size(); ++i)
            block += std::exp(-solver.eigenvalues()(i) * t);
        str += (k % 2 == 0) ? block : -block;
    }
    return {str, rep.chi_top};
}

} // namespace energeia
