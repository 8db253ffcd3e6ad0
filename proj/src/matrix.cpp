#include "energeia/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace energeia {

SquareMatrix mat_zero(RingId ring, size_t n) {
    SquareMatrix m;
    m.ring = ring;
    m.n = n;
    m.a.assign(n * n, rv_zero(ring));
    return m;
}

SquareMatrix mat_identity(RingId ring, size_t n) {
    SquareMatrix m = mat_zero(ring, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = rv_one(ring);
    return m;
}

namespace {

void check_shapes(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.ring != b.ring) throw RingMismatch("matrix ring tags differ");
    if (a.n != b.n) throw ShapeError("matrix sizes differ");
}

} // namespace

SquareMatrix mat_add(const SquareMatrix& a, const SquareMatrix& b) {
    check_shapes(a, b);
    SquareMatrix out = a;
    for (size_t i = 0; i < a.a.size(); ++i) out.a[i] = rv_add(a.a[i], b.a[i]);
    return out;
}

SquareMatrix mat_sub(const SquareMatrix& a, const SquareMatrix& b) {
    check_shapes(a, b);
    SquareMatrix out = a;
    for (size_t i = 0; i < a.a.size(); ++i) out.a[i] = rv_sub(a.a[i], b.a[i]);
    return out;
}

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
    check_shapes(a, b);
    SquareMatrix out = mat_zero(a.ring, a.n);
    out.index = a.index;
    for (size_t i = 0; i < a.n; ++i)
        for (size_t k = 0; k < a.n; ++k) {
            if (rv_is_zero(a.at(i, k))) continue;
            for (size_t j = 0; j < a.n; ++j)
                out.at(i, j) = rv_add(out.at(i, j), rv_mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

SquareMatrix mat_transpose(const SquareMatrix& m) {
    SquareMatrix out = m;
    for (size_t i = 0; i < m.n; ++i)
        for (size_t j = 0; j < m.n; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

SquareMatrix mat_conj_transpose(const SquareMatrix& m) {
    SquareMatrix out = m;
    for (size_t i = 0; i < m.n; ++i)
        for (size_t j = 0; j < m.n; ++j) out.at(j, i) = rv_conj(m.at(i, j));
    return out;
}

RingValue mat_trace(const SquareMatrix& m) {
    RingValue s = rv_zero(m.ring);
    for (size_t i = 0; i < m.n; ++i) s = rv_add(s, m.at(i, i));
    return s;
}

bool mat_eq(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.ring != b.ring || a.n != b.n) return false;
    for (size_t i = 0; i < a.a.size(); ++i)
        if (!rv_eq(a.a[i], b.a[i])) return false;
    return true;
}

SquareMatrix build_L(const EnergizedComplex& e) {
    size_t n = e.size();
    SquareMatrix m = mat_zero(e.h.ring, n);
    m.index = e.geom.simplices;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            RingValue s = rv_zero(e.h.ring);
            for (size_t k = 0; k < n; ++k) {
                const Simplex& z = e.geom.simplices[k];
                if (simplex_subset(z, e.geom.simplices[i]) &&
                    simplex_subset(z, e.geom.simplices[j]))
                    s = rv_add(s, e.h.values[k]);
            }
            m.at(i, j) = s;
            if (j != i) m.at(j, i) = std::move(s); // same index set both ways
        }
    }
    return m;
}

SquareMatrix build_g(const EnergizedComplex& e) {
    size_t n = e.size();
    SquareMatrix m = mat_zero(e.h.ring, n);
    m.index = e.geom.simplices;
    for (size_t i = 0; i < n; ++i) {
        int wi = omega_sign(e.geom.simplices[i]);
        for (size_t j = i; j < n; ++j) {
            int w = wi * omega_sign(e.geom.simplices[j]);
            RingValue s = rv_zero(e.h.ring);
            for (size_t k = 0; k < n; ++k) {
                const Simplex& z = e.geom.simplices[k];
                if (simplex_subset(e.geom.simplices[i], z) &&
                    simplex_subset(e.geom.simplices[j], z))
                    s = rv_add(s, e.h.values[k]);
            }
            if (w < 0) s = rv_neg(s);
            m.at(i, j) = s;
            if (j != i) m.at(j, i) = std::move(s);
        }
    }
    return m;
}

SquareMatrix checkerboard(const EnergizedComplex& e) {
    size_t n = e.size();
    SquareMatrix m = mat_zero(e.h.ring, n);
    m.index = e.geom.simplices;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = rv_from_int(
                e.h.ring, omega_sign(e.geom.simplices[i]) * omega_sign(e.geom.simplices[j]));
    return m;
}

SquareMatrix parity_matrix(const EnergizedComplex& e) {
    size_t n = e.size();
    SquareMatrix m = mat_zero(e.h.ring, n);
    m.index = e.geom.simplices;
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = rv_from_int(e.h.ring, omega_sign(e.geom.simplices[i]));
    return m;
}

SquareMatrix green_star_product(const EnergizedComplex& e) {
    if (!e.geom.is_complex)
        throw NotAComplex("green-star product needs a simplicial complex");
    return mat_mul(mat_conj_transpose(build_g(e)), build_L(e));
}

SquareMatrix green_star_product_vector(const Geometry& g,
                                       const std::vector<std::vector<Rat>>& h) {
    size_t n = g.size();
    if (h.size() != n) throw ShapeError("one vector per simplex required");
    size_t d = n == 0 ? 0 : h[0].size();
    for (const auto& v : h)
        if (v.size() != d) throw ShapeError("vector values must share one dimension");

    auto dot = [d](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        Rat s(0);
        for (size_t i = 0; i < d; ++i) s += a[i] * b[i];
        return s;
    };
    // Vector-valued entries of L and g.
    std::vector<std::vector<std::vector<Rat>>> Lv(n), gv(n);
    std::vector<Rat> zero(d, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        Lv[i].assign(n, zero);
        gv[i].assign(n, zero);
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                const Simplex& z = g.simplices[k];
                if (simplex_subset(z, g.simplices[i]) && simplex_subset(z, g.simplices[j]))
                    for (size_t c = 0; c < d; ++c) Lv[i][j][c] += h[k][c];
                if (simplex_subset(g.simplices[i], z) && simplex_subset(g.simplices[j], z)) {
                    int w = omega_sign(g.simplices[i]) * omega_sign(g.simplices[j]);
                    for (size_t c = 0; c < d; ++c)
                        gv[i][j][c] += w < 0 ? -h[k][c] : h[k][c];
                }
            }
        }
    }
    SquareMatrix out = mat_zero(RingId::Rational, n);
    out.index = g.simplices;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat s(0);
            for (size_t z = 0; z < n; ++z) s += dot(gv[z][i], Lv[z][j]);
            out.at(i, j) = rv_from_rat(RingId::Rational, s);
        }
    return out;
}

DeterminantValue det_exact(const SquareMatrix& m) {
    if (!ring_has_exact_division(m.ring) || !ring_is_commutative(m.ring) ||
        !ring_is_exact(m.ring))
        throw UnsupportedRing("exact determinant needs rational, gaussian or poly");
    DeterminantValue out;
    out.ring = m.ring;
    size_t n = m.n;
    if (n == 0) {
        out.value = rv_one(m.ring);
        return out;
    }
    std::vector<RingValue> b = m.a;
    auto at = [&b, n](size_t i, size_t j) -> RingValue& { return b[i * n + j]; };
    int sign = 1;
    RingValue prev = rv_one(m.ring);
    for (size_t k = 0; k + 1 < n; ++k) {
        // Full pivoting keeps the Sylvester-identity divisions exact: the swaps
        // only re-order the trailing rows/columns of the original matrix.
        size_t pi = k, pj = k;
        bool found = false;
        for (size_t i = k; i < n && !found; ++i)
            for (size_t j = k; j < n && !found; ++j)
                if (!rv_is_zero(at(i, j))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) {
            out.value = rv_zero(m.ring);
            return out;
        }
        if (pi != k) {
            for (size_t j = 0; j < n; ++j) std::swap(at(pi, j), at(k, j));
            sign = -sign;
        }
        if (pj != k) {
            for (size_t i = 0; i < n; ++i) std::swap(at(i, pj), at(i, k));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                RingValue num =
                    rv_sub(rv_mul(at(i, j), at(k, k)), rv_mul(at(i, k), at(k, j)));
                at(i, j) = rv_div_exact(num, prev);
            }
        prev = at(k, k);
    }
    out.value = at(n - 1, n - 1);
    if (sign < 0) out.value = rv_neg(out.value);
    return out;
}

namespace {

// Quaternion w + xi + yj + zk as [[w + xi, y + zi], [-(y - zi), w - xi]].
SquareMatrix embed_quat_rat(const SquareMatrix& m) {
    SquareMatrix out = mat_zero(RingId::Gaussian, 2 * m.n);
    for (size_t i = 0; i < m.n; ++i)
        for (size_t j = 0; j < m.n; ++j) {
            const auto& q = std::get<Quaternion<Rat>>(m.at(i, j).v);
            auto set = [&out](size_t r, size_t c, Rat re, Rat im) {
                RingValue v;
                v.id = RingId::Gaussian;
                v.v = Gaussian{std::move(re), std::move(im)};
                out.at(r, c) = std::move(v);
            };
            set(2 * i, 2 * j, q.w, q.x);
            set(2 * i, 2 * j + 1, q.y, q.z);
            set(2 * i + 1, 2 * j, -q.y, q.z);
            set(2 * i + 1, 2 * j + 1, q.w, -q.x);
        }
    return out;
}

std::vector<std::complex<double>> embed_to_complex(const SquareMatrix& m, size_t* dim) {
    size_t n = m.n;
    std::vector<std::complex<double>> a;
    if (m.ring == RingId::Quaternion64 || m.ring == RingId::QuaternionRat) {
        *dim = 2 * n;
        a.assign(4 * n * n, {0, 0});
        auto at = [&a, n](size_t i, size_t j) -> std::complex<double>& {
            return a[i * 2 * n + j];
        };
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                double w, x, y, z;
                if (m.ring == RingId::Quaternion64) {
                    const auto& q = std::get<Quaternion<double>>(m.at(i, j).v);
                    w = q.w, x = q.x, y = q.y, z = q.z;
                } else {
                    const auto& q = std::get<Quaternion<Rat>>(m.at(i, j).v);
                    w = q.w.get_d(), x = q.x.get_d(), y = q.y.get_d(), z = q.z.get_d();
                }
                at(2 * i, 2 * j) = {w, x};
                at(2 * i, 2 * j + 1) = {y, z};
                at(2 * i + 1, 2 * j) = {-y, z};
                at(2 * i + 1, 2 * j + 1) = {w, -x};
            }
    } else {
        *dim = n;
        a.resize(n * n);
        for (size_t i = 0; i < n * n; ++i) a[i] = rv_to_complex(m.a[i]);
    }
    return a;
}

// Plain LU with partial pivoting.
std::complex<double> det_complex_lu(std::vector<std::complex<double>> a, size_t n) {
    if (n == 0) return 1.0;
    auto at = [&a, n](size_t i, size_t j) -> std::complex<double>& { return a[i * n + j]; };
    std::complex<double> det = 1.0;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        for (size_t i = k + 1; i < n; ++i)
            if (std::abs(at(i, k)) > std::abs(at(p, k))) p = i;
        if (std::abs(at(p, k)) == 0.0) return 0.0;
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
            det = -det;
        }
        det *= at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            std::complex<double> f = at(i, k) / at(k, k);
            for (size_t j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return det;
}

} // namespace

Rat study_det_exact(const SquareMatrix& m) {
    if (m.ring != RingId::QuaternionRat)
        throw UnsupportedRing("exact Study determinant needs rational quaternions");
    DeterminantValue d = det_exact(embed_quat_rat(m));
    const auto& g = std::get<Gaussian>(d.value.v);
    if (g.im != 0) throw Error("Study embedding determinant is not real");
    return g.re;
}

DeterminantValue det_dieudonne(const SquareMatrix& m) {
    DeterminantValue out;
    out.ring = m.ring;
    out.is_dieudonne = true;
    out.value = rv_zero(m.ring);
    switch (m.ring) {
        case RingId::QuaternionRat: {
            Rat d = study_det_exact(m);
            if (d < 0) throw Error("negative Study determinant");
            out.real_value = std::sqrt(d.get_d());
            return out;
        }
        case RingId::Quaternion64: {
            size_t dim = 0;
            auto a = embed_to_complex(m, &dim);
            std::complex<double> d = det_complex_lu(std::move(a), dim);
            out.real_value = std::sqrt(std::abs(d));
            return out;
        }
        case RingId::Complex64: {
            size_t dim = 0;
            auto a = embed_to_complex(m, &dim);
            out.real_value = std::abs(det_complex_lu(std::move(a), dim));
            return out;
        }
        case RingId::Rational:
        case RingId::Gaussian: {
            DeterminantValue d = det_exact(m);
            out.real_value = m.ring == RingId::Rational
                                 ? std::abs(std::get<Rat>(d.value.v).get_d())
                                 : std::sqrt(std::get<Gaussian>(d.value.v).norm().get_d());
            return out;
        }
        default:
            throw UnsupportedRing("no Dieudonne determinant for " + ring_name(m.ring));
    }
}

DeterminantValue minor_det(const SquareMatrix& m, const std::vector<size_t>& rows,
                           const std::vector<size_t>& cols) {
    if (rows.size() != cols.size()) throw ShapeError("minor needs |rows| = |cols|");
    for (size_t r : rows)
        if (r >= m.n) throw ShapeError("row index out of range");
    for (size_t c : cols)
        if (c >= m.n) throw ShapeError("column index out of range");
    SquareMatrix sub = mat_zero(m.ring, rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
    return det_exact(sub);
}

namespace {

void subsets_of_size(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
    std::vector<size_t> cur;
    cur.reserve(k);
    auto rec = [&](auto&& self, size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

std::pair<RingValue, RingValue> cauchy_binet_check(const SquareMatrix& F,
                                                   const SquareMatrix& G) {
    check_shapes(F, G);
    SquareMatrix prod = mat_mul(mat_transpose(F), G);
    RingValue lhs = det_exact(mat_add(mat_identity(F.ring, F.n), prod)).value;
    RingValue rhs = rv_zero(F.ring);
    for (size_t k = 0; k <= F.n; ++k) {
        std::vector<std::vector<size_t>> subs;
        subsets_of_size(F.n, k, subs);
        for (const auto& A : subs)
            for (const auto& B : subs)
                rhs = rv_add(rhs, rv_mul(minor_det(F, A, B).value,
                                         minor_det(G, A, B).value));
    }
    return {lhs, rhs};
}

DeterminantValue fredholm_energy(const EnergizedComplex& e) {
    SquareMatrix g = build_g(e);
    switch (g.ring) {
        case RingId::Rational:
        case RingId::Gaussian:
        case RingId::Poly: {
            SquareMatrix gs = mat_conj_transpose(g);
            return det_exact(mat_add(mat_identity(g.ring, g.n), mat_mul(gs, g)));
        }
        case RingId::Complex64: {
            SquareMatrix gs = mat_conj_transpose(g);
            SquareMatrix M = mat_add(mat_identity(g.ring, g.n), mat_mul(gs, g));
            DeterminantValue out;
            out.ring = g.ring;
            out.is_dieudonne = true;
            out.value = rv_zero(g.ring);
            size_t dim = 0;
            auto a = embed_to_complex(M, &dim);
            out.real_value = std::abs(det_complex_lu(std::move(a), dim));
            return out;
        }
        case RingId::QuaternionRat:
        case RingId::Quaternion64: {
            SquareMatrix gs = mat_conj_transpose(g);
            SquareMatrix M = mat_add(mat_identity(g.ring, g.n), mat_mul(gs, g));
            return det_dieudonne(M);
        }
        default:
            throw UnsupportedRing("Fredholm energy undefined for " + ring_name(g.ring));
    }
}

} // namespace energeia
