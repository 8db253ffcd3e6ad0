#include "energeia/verify.hpp"

#include "energeia/errors.hpp"
#include "energeia/exact_linalg.hpp"
#include "energeia/hodge.hpp"
#include "energeia/matrix.hpp"
#include "energeia/spectral.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <sstream>

namespace energeia {

namespace {

const std::array<std::pair<TheoremId, const char*>, 12> kNames = {{
    {TheoremId::T1, "T1"},
    {TheoremId::T2, "T2"},
    {TheoremId::T3, "T3"},
    {TheoremId::T4, "T4"},
    {TheoremId::C_gaussbonnet, "C_gaussbonnet"},
    {TheoremId::C_quadtrace, "C_quadtrace"},
    {TheoremId::C_cubic, "C_cubic"},
    {TheoremId::C_signature, "C_signature"},
    {TheoremId::C_zeta_fe, "C_zeta_fe"},
    {TheoremId::C_isospectral, "C_isospectral"},
    {TheoremId::C_cauchybinet, "C_cauchybinet"},
    {TheoremId::C_mckeansinger, "C_mckeansinger"},
}};

bool ring_is_double(RingId r) {
    return r == RingId::Complex64 || r == RingId::Quaternion64 || r == RingId::Octonion;
}

std::string simplex_str(const Simplex& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.v[i]);
    }
    return out + "}";
}

std::vector<double> rv_components(const RingValue& v) {
    switch (v.id) {
        case RingId::Complex64: {
            auto c = std::get<std::complex<double>>(v.v);
            return {c.real(), c.imag()};
        }
        case RingId::Quaternion64: {
            const auto& q = std::get<Quaternion<double>>(v.v);
            return {q.w, q.x, q.y, q.z};
        }
        case RingId::Octonion: {
            auto c = std::get<Octonion>(v.v).components();
            return {c.begin(), c.end()};
        }
        default:
            throw UnsupportedRing("no double components for " + ring_name(v.id));
    }
}

// Exact equality on exact rings, relative closeness on double rings.
bool values_agree(const RingValue& a, const RingValue& b, double tol) {
    if (!ring_is_double(a.id)) return rv_eq(a, b);
    auto ca = rv_components(a), cb = rv_components(b);
    double scale = 1.0;
    for (double x : ca) scale = std::max(scale, std::abs(x));
    for (double x : cb) scale = std::max(scale, std::abs(x));
    for (size_t i = 0; i < ca.size(); ++i)
        if (std::abs(ca[i] - cb[i]) > tol * scale) return false;
    return true;
}

bool doubles_agree(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string two_sided(const std::string& lhs_name, const RingValue& lhs,
                      const std::string& rhs_name, const RingValue& rhs) {
    return lhs_name + " = " + rv_str(lhs) + "; " + rhs_name + " = " + rv_str(rhs);
}

RingValue sum_entries(const SquareMatrix& m) {
    RingValue s = rv_zero(m.ring);
    for (const auto& v : m.a) s = rv_add(s, v);
    return s;
}

RingValue product_of_h(const EnergizedComplex& e) {
    RingValue p = rv_one(e.h.ring);
    for (const auto& v : e.h.values) p = rv_mul(p, v);
    return p;
}

VerificationOutcome pass(TheoremId id) { return {id, VerifyStatus::Pass, "", ""}; }
VerificationOutcome fail(TheoremId id, std::string witness) {
    return {id, VerifyStatus::Fail, std::move(witness), ""};
}
VerificationOutcome inapplicable(TheoremId id, std::string reason) {
    return {id, VerifyStatus::Inapplicable, "", std::move(reason)};
}

VerificationOutcome check_t1(const EnergizedComplex& e) {
    RingValue lhs = chi(e);
    RingValue rhs = sum_entries(build_g(e));
    if (values_agree(lhs, rhs, kVerifyRelTol)) return pass(TheoremId::T1);
    return fail(TheoremId::T1, two_sided("chi(G)", lhs, "sum g(x,y)", rhs));
}

VerificationOutcome check_t2(const EnergizedComplex& e) {
    RingValue lhs = omega_quadratic(e);
    SquareMatrix g = build_g(e);
    RingValue rhs = rv_zero(e.h.ring);
    for (size_t i = 0; i < g.n; ++i)
        for (size_t j = 0; j < g.n; ++j) {
            RingValue nrm = rv_norm(g.at(i, j));
            int w = omega_sign(e.geom.simplices[i]) * omega_sign(e.geom.simplices[j]);
            rhs = rv_add(rhs, w < 0 ? rv_neg(nrm) : nrm);
        }
    if (values_agree(lhs, rhs, kVerifyRelTol)) return pass(TheoremId::T2);
    return fail(TheoremId::T2, two_sided("omega(G)", lhs, "sum w(x)w(y)|g(x,y)|^2", rhs));
}

VerificationOutcome check_t3(const EnergizedComplex& e) {
    RingId r = e.h.ring;
    SquareMatrix L = build_L(e);
    SquareMatrix g = build_g(e);
    if (r == RingId::Rational || r == RingId::Gaussian || r == RingId::Poly) {
        RingValue dl = det_exact(L).value;
        RingValue dg = det_exact(g).value;
        RingValue prod = product_of_h(e);
        if (rv_eq(dl, dg) && rv_eq(dl, prod)) return pass(TheoremId::T3);
        return fail(TheoremId::T3, "det L = " + rv_str(dl) + "; det g = " + rv_str(dg) +
                                       "; prod h = " + rv_str(prod));
    }
    if (r == RingId::QuaternionRat) {
        Rat sl = study_det_exact(L);
        Rat sg = study_det_exact(g);
        Rat prod(1);
        for (const auto& v : e.h.values) prod *= rv_norm_rat(v);
        if (sl == sg && sl == prod) return pass(TheoremId::T3);
        return fail(TheoremId::T3, "study det L = " + rat_to_string(sl) + "; study det g = " +
                                       rat_to_string(sg) + "; prod N(h) = " + rat_to_string(prod));
    }
    if (r == RingId::Quaternion64 || r == RingId::Complex64) {
        double dl = det_dieudonne(L).real_value;
        double dg = det_dieudonne(g).real_value;
        double prod = 1.0;
        for (const auto& v : e.h.values) prod *= std::sqrt(rv_norm_double(v));
        if (doubles_agree(dl, dg, kVerifyRelTol) && doubles_agree(dl, prod, kVerifyRelTol))
            return pass(TheoremId::T3);
        std::ostringstream os;
        os << "|det L| = " << dl << "; |det g| = " << dg << "; prod |h| = " << prod;
        return fail(TheoremId::T3, os.str());
    }
    return inapplicable(TheoremId::T3, "no determinant over " + ring_name(r));
}

VerificationOutcome check_t4(const EnergizedComplex& e) {
    if (!e.geom.is_complex)
        return inapplicable(TheoremId::T4, "input is not a simplicial complex");
    SquareMatrix p = green_star_product(e);
    bool unit = is_unit_assignment(e.h);
    RingValue one = rv_one(p.ring);
    RingValue zero = rv_zero(p.ring);
    for (size_t i = 0; i < p.n; ++i) {
        for (size_t j = 0; j < p.n; ++j) {
            const RingValue& v = p.at(i, j);
            if (i > j && !values_agree(v, zero, kUnitProductTol))
                return fail(TheoremId::T4, "nonzero below the diagonal at (" +
                                               simplex_str(p.index[i]) + ", " +
                                               simplex_str(p.index[j]) + "): " + rv_str(v));
            if (i == j) {
                RingValue want = rv_norm(e.h.values[i]);
                if (!values_agree(v, want, kUnitProductTol))
                    return fail(TheoremId::T4,
                                "diagonal of g*L at " + simplex_str(p.index[i]) + " is " +
                                    rv_str(v) + ", expected |h|^2 = " + rv_str(want));
            }
            if (unit && i != j && !values_agree(v, zero, kUnitProductTol))
                return fail(TheoremId::T4, "unit assignment but g*L(" + simplex_str(p.index[i]) +
                                               ", " + simplex_str(p.index[j]) +
                                               ") = " + rv_str(v));
            if (unit && i == j && !values_agree(v, one, kUnitProductTol))
                return fail(TheoremId::T4, "unit assignment but g*L diagonal at " +
                                               simplex_str(p.index[i]) + " = " + rv_str(v));
        }
    }
    return pass(TheoremId::T4);
}

VerificationOutcome check_gaussbonnet(const EnergizedComplex& e) {
    if (!e.geom.is_complex)
        return inapplicable(TheoremId::C_gaussbonnet, "input is not a simplicial complex");
    RingValue lhs = chi(e);
    RingValue rhs = rv_zero(e.h.ring);
    for (const auto& s : e.geom.simplices) rhs = rv_add(rhs, curvature(e, s));
    if (values_agree(lhs, rhs, kVerifyRelTol)) return pass(TheoremId::C_gaussbonnet);
    return fail(TheoremId::C_gaussbonnet, two_sided("chi(G)", lhs, "sum K(x)", rhs));
}

VerificationOutcome check_quadtrace(const EnergizedComplex& e) {
    if (!e.geom.is_complex)
        return inapplicable(TheoremId::C_quadtrace, "input is not a simplicial complex");
    SquareMatrix g = build_g(e);
    SquareMatrix P = parity_matrix(e);
    SquareMatrix m = mat_mul(mat_mul(P, mat_conj_transpose(g)), mat_mul(P, g));
    RingValue lhs = omega_quadratic(e);
    RingValue rhs = mat_trace(m);
    if (values_agree(lhs, rhs, kVerifyRelTol)) return pass(TheoremId::C_quadtrace);
    return fail(TheoremId::C_quadtrace, two_sided("omega(G)", lhs, "tr(Sg*Sg)", rhs));
}

VerificationOutcome check_cubic(const EnergizedComplex& e) {
    if (!e.geom.is_complex)
        return inapplicable(TheoremId::C_cubic, "input is not a simplicial complex");
    if (!ring_is_associative(e.h.ring))
        return inapplicable(TheoremId::C_cubic, "triple products need an associative ring");
    SquareMatrix g = build_g(e);
    SquareMatrix P = parity_matrix(e);
    SquareMatrix Pg = mat_mul(P, g);
    SquareMatrix m = mat_mul(mat_mul(mat_mul(P, mat_conj_transpose(g)), Pg), Pg);
    RingValue lhs = omega_cubic(e);
    RingValue rhs = mat_trace(m);
    if (values_agree(lhs, rhs, kVerifyRelTol)) return pass(TheoremId::C_cubic);
    return fail(TheoremId::C_cubic, two_sided("omega3(G)", lhs, "tr((Sg)^3)", rhs));
}

VerificationOutcome check_signature(const EnergizedComplex& e) {
    if (e.h.ring != RingId::Rational)
        return inapplicable(TheoremId::C_signature, "signature needs real (rational) energies");
    for (const auto& v : e.h.values)
        if (rv_is_zero(v))
            return inapplicable(TheoremId::C_signature, "h vanishes on some simplex");
    long pos = 0, neg = 0;
    for (const auto& v : e.h.values) (std::get<Rat>(v.v) > 0 ? pos : neg)++;
    RootCounts il = inertia_congruence(build_L(e));
    RootCounts ig = inertia_congruence(build_g(e));
    auto bad = [&](const char* name, const RootCounts& rc) {
        std::ostringstream os;
        os << "h signs give (" << pos << ", " << neg << ") but " << name << " has ("
           << rc.positive << ", " << rc.negative << ", " << rc.zero << " zero)";
        return fail(TheoremId::C_signature, os.str());
    };
    if (il.positive != pos || il.negative != neg || il.zero != 0) return bad("L", il);
    if (ig.positive != pos || ig.negative != neg || ig.zero != 0) return bad("g", ig);
    if (e.size() <= 12) {
        UniPoly pl = charpoly_rational(build_L(e));
        RootCounts dc = descartes_root_counts(pl);
        RootCounts st = sturm_root_counts(pl);
        if (dc.positive != pos || dc.negative != neg || dc.zero != 0) return bad("charpoly(L)", dc);
        if (st.positive != pos || st.negative != neg || st.zero != 0)
            return bad("Sturm charpoly(L)", st);
    }
    return pass(TheoremId::C_signature);
}

bool all_ones(const EnergizedComplex& e) {
    for (const auto& v : e.h.values)
        if (!rv_is_one(v)) return false;
    return true;
}

VerificationOutcome check_zeta_fe(const EnergizedComplex& e) {
    if (!e.geom.is_complex)
        return inapplicable(TheoremId::C_zeta_fe, "input is not a simplicial complex");
    if (e.h.ring != RingId::Rational || !all_ones(e))
        return inapplicable(TheoremId::C_zeta_fe, "stated for the constant assignment h = 1");
    if (e.size() == 0) return pass(TheoremId::C_zeta_fe);
    // 5x5 grid of s = a+ib, generic offsets (no axis points).
    std::vector<std::complex<double>> grid;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) grid.emplace_back(0.25 + 0.25 * i, 0.25 + 0.25 * j);
    std::vector<std::complex<double>> mirrored, negated, conjugated;
    for (auto s : grid) {
        mirrored.emplace_back(-s.real(), s.imag());
        negated.push_back(-s);
        conjugated.push_back(std::conj(s));
    }
    SpectralReport za = zeta(e, grid);
    SpectralReport zm = zeta(e, mirrored);
    SpectralReport zn = zeta(e, negated);
    SpectralReport zc = zeta(e, conjugated);
    for (size_t k = 0; k < grid.size(); ++k) {
        std::complex<double> lhs = za.zeta_samples[k].second;
        std::complex<double> rhs = zm.zeta_samples[k].second;
        if (std::abs(lhs - rhs) > kVerifyRelTol * std::max(1.0, std::abs(lhs))) {
            // The reflection identities that do hold, for the witness.
            double refl = std::abs(zn.zeta_samples[k].second - lhs);
            double conj_res = std::abs(std::conj(zc.zeta_samples[k].second) - lhs);
            std::ostringstream os;
            os << "zeta(" << grid[k].real() << "+" << grid[k].imag() << "i) = " << lhs
               << " but zeta(" << mirrored[k].real() << "+" << mirrored[k].imag()
               << "i) = " << rhs << " (|diff| = " << std::abs(lhs - rhs)
               << "); note zeta(-s) = zeta(s) holds (residual " << refl
               << ") and zeta(conj s) = conj zeta(s) holds (residual " << conj_res << ")";
            return fail(TheoremId::C_zeta_fe, os.str());
        }
    }
    return pass(TheoremId::C_zeta_fe);
}

VerificationOutcome check_isospectral(const EnergizedComplex& e) {
    if (!e.geom.is_complex)
        return inapplicable(TheoremId::C_isospectral, "input is not a simplicial complex");
    if (e.h.ring != RingId::Rational || !all_ones(e))
        return inapplicable(TheoremId::C_isospectral, "stated for the constant assignment h = 1");
    SquareMatrix L = build_L(e);
    SquareMatrix g = build_g(e);
    UniPoly pl = charpoly_rational(L);
    UniPoly pg = charpoly_rational(g);
    if (pl.c != pg.c)
        return fail(TheoremId::C_isospectral, "charpoly(L) differs from charpoly(g)");
    if (!is_reciprocal_charpoly(pl)) {
        std::string cs;
        for (const auto& c : pl.c) cs += rat_to_string(c) + " ";
        return fail(TheoremId::C_isospectral,
                    "characteristic polynomial is not self-reciprocal: " + cs);
    }
    return pass(TheoremId::C_isospectral);
}

VerificationOutcome check_cauchybinet(const EnergizedComplex& e) {
    RingId r = e.h.ring;
    if (r != RingId::Rational && r != RingId::Gaussian && r != RingId::Poly)
        return inapplicable(TheoremId::C_cauchybinet, "needs an exact commutative ring");
    if (e.size() > 6)
        return inapplicable(TheoremId::C_cauchybinet,
                            "full minor enumeration is capped at 6 simplices");
    SquareMatrix L = build_L(e);
    SquareMatrix g = build_g(e);
    auto [lhs, rhs] = cauchy_binet_check(L, g);
    if (!rv_eq(lhs, rhs))
        return fail(TheoremId::C_cauchybinet, two_sided("det(1+L^T g)", lhs, "minor sum", rhs));
    // Fredholm instance: det(1+g*g) = sum over equal-size minors of |det g_AB|^2.
    RingValue fred = fredholm_energy(e).value;
    RingValue msum = rv_zero(r);
    size_t n = g.n;
    std::vector<std::vector<size_t>> subsets{{}};
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
        std::vector<size_t> idx;
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t{1} << b)) idx.push_back(b);
        subsets.push_back(std::move(idx));
    }
    for (const auto& A : subsets)
        for (const auto& B : subsets) {
            if (A.size() != B.size()) continue;
            msum = rv_add(msum, rv_norm(minor_det(g, A, B).value));
        }
    if (!rv_eq(fred, msum))
        return fail(TheoremId::C_cauchybinet,
                    two_sided("det(1+g*g)", fred, "sum |det g_AB|^2", msum));
    return pass(TheoremId::C_cauchybinet);
}

VerificationOutcome check_mckeansinger(const EnergizedComplex& e) {
    if (!e.geom.is_complex)
        return inapplicable(TheoremId::C_mckeansinger, "input is not a simplicial complex");
    HodgeReport rep = hodge_betti(e.geom);
    long alt = 0;
    for (size_t k = 0; k < rep.betti.size(); ++k)
        alt += (k % 2 == 0) ? rep.betti[k] : -rep.betti[k];
    if (alt != rep.chi_top) {
        std::ostringstream os;
        os << "alternating Betti sum " << alt << " != chi_top " << rep.chi_top;
        return fail(TheoremId::C_mckeansinger, os.str());
    }
    // d_{k} after d_{k+1} must vanish.
    for (size_t k = 1; k + 1 < rep.boundaries.size(); ++k) {
        const auto& a = rep.boundaries[k];
        const auto& b = rep.boundaries[k + 1];
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j) {
                Rat s(0);
                for (size_t t = 0; t < b.size(); ++t) s += a[i][t] * b[t][j];
                if (s != 0)
                    return fail(TheoremId::C_mckeansinger, "boundary of boundary is nonzero");
            }
    }
    for (double t : {0.5, 2.0}) {
        auto [str_val, chi_top] = mckean_singer_check(e.geom, t);
        if (!doubles_agree(str_val, static_cast<double>(chi_top), kHeatTraceTol)) {
            std::ostringstream os;
            os << "str(e^{-Ht}) at t = " << t << " is " << str_val << ", chi_top = " << chi_top;
            return fail(TheoremId::C_mckeansinger, os.str());
        }
    }
    return pass(TheoremId::C_mckeansinger);
}

} // namespace

std::string theorem_name(TheoremId id) {
    for (const auto& [tid, name] : kNames)
        if (tid == id) return name;
    throw Error("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
    for (const auto& [tid, tname] : kNames)
        if (name == tname) return tid;
    throw IoError("unknown theorem id '" + name + "'");
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> out;
    for (const auto& [tid, name] : kNames) out.push_back(tid);
    return out;
}

VerificationOutcome verify_one(const EnergizedComplex& e, TheoremId id) {
    switch (id) {
        case TheoremId::T1: return check_t1(e);
        case TheoremId::T2: return check_t2(e);
        case TheoremId::T3: return check_t3(e);
        case TheoremId::T4: return check_t4(e);
        case TheoremId::C_gaussbonnet: return check_gaussbonnet(e);
        case TheoremId::C_quadtrace: return check_quadtrace(e);
        case TheoremId::C_cubic: return check_cubic(e);
        case TheoremId::C_signature: return check_signature(e);
        case TheoremId::C_zeta_fe: return check_zeta_fe(e);
        case TheoremId::C_isospectral: return check_isospectral(e);
        case TheoremId::C_cauchybinet: return check_cauchybinet(e);
        case TheoremId::C_mckeansinger: return check_mckeansinger(e);
    }
    throw Error("unknown theorem id");
}

std::vector<VerificationOutcome> verify_suite(const EnergizedComplex& e,
                                              const std::vector<TheoremId>& suite) {
    std::vector<VerificationOutcome> out;
    out.reserve(suite.size());
    for (TheoremId id : suite) out.push_back(verify_one(e, id));
    return out;
}

} // namespace energeia
