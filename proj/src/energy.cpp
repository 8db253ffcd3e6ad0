#include "energeia/energy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "energeia/matrix.hpp"

namespace energeia {

EnergizedComplex energize(Geometry g, EnergyAssignment h) {
    if (h.values.size() != g.simplices.size())
        throw ShapeError("assignment size " + std::to_string(h.values.size()) +
                         " vs geometry size " + std::to_string(g.simplices.size()));
    for (const auto& v : h.values)
        if (v.id != h.ring) throw RingMismatch("assignment mixes ring tags");
    return EnergizedComplex{std::move(g), std::move(h)};
}

bool is_unit_assignment(const EnergyAssignment& h) {
    for (const auto& v : h.values)
        if (!rv_is_unit(v)) return false;
    return true;
}

RingValue chi(const EnergizedComplex& e) {
    RingValue s = rv_zero(e.h.ring);
    for (const auto& v : e.h.values) s = rv_add(s, v);
    return s;
}

RingValue chi(const EnergizedComplex& e, const std::vector<Simplex>& subset) {
    std::vector<long> idx;
    idx.reserve(subset.size());
    for (const auto& x : subset) {
        long i = e.geom.index_of(x);
        if (i < 0) throw NotAMember("chi over a non-member");
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    RingValue s = rv_zero(e.h.ring);
    for (long i : idx) s = rv_add(s, e.h.values[static_cast<size_t>(i)]);
    return s;
}

namespace {

RingValue omega_pairs(const EnergizedComplex& e, const std::vector<size_t>& idx) {
    RingValue s = rv_zero(e.h.ring);
    for (size_t i : idx) {
        RingValue ci = rv_conj(e.h.values[i]);
        for (size_t j : idx)
            if (simplex_intersects(e.geom.simplices[i], e.geom.simplices[j]))
                s = rv_add(s, rv_mul(ci, e.h.values[j]));
    }
    return s;
}

} // namespace

RingValue omega_quadratic(const EnergizedComplex& e) {
    std::vector<size_t> all(e.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return omega_pairs(e, all);
}

RingValue omega_quadratic(const EnergizedComplex& e, const std::vector<Simplex>& subset) {
    std::vector<size_t> idx;
    for (const auto& x : subset) {
        long i = e.geom.index_of(x);
        if (i < 0) throw NotAMember("omega over a non-member");
        idx.push_back(static_cast<size_t>(i));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return omega_pairs(e, idx);
}

RingValue omega_cubic(const EnergizedComplex& e) {
    if (!ring_is_associative(e.h.ring))
        throw UnsupportedRing("cubic energy needs an associative ring");
    size_t n = e.size();
    std::vector<std::vector<bool>> meets(n, std::vector<bool>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            meets[i][j] = simplex_intersects(e.geom.simplices[i], e.geom.simplices[j]);
    RingValue s = rv_zero(e.h.ring);
    for (size_t i = 0; i < n; ++i) {
        RingValue ci = rv_conj(e.h.values[i]);
        for (size_t j = 0; j < n; ++j) {
            if (!meets[i][j]) continue;
            RingValue cij = rv_mul(ci, e.h.values[j]);
            for (size_t k = 0; k < n; ++k)
                if (meets[j][k] && meets[i][k])
                    s = rv_add(s, rv_mul(cij, e.h.values[k]));
        }
    }
    return s;
}

RingValue curvature(const EnergizedComplex& e, const Simplex& x) {
    long i = e.geom.index_of(x);
    if (i < 0) throw NotAMember("curvature of a non-member");
    // g(x,x) = chi(W+(x)); the omega(x)^2 prefactor is 1.
    RingValue s = rv_zero(e.h.ring);
    for (size_t j = 0; j < e.size(); ++j)
        if (simplex_subset(x, e.geom.simplices[j])) s = rv_add(s, e.h.values[j]);
    if (omega_sign(x) < 0) s = rv_neg(s);
    return s;
}

RingValue super_trace(const SquareMatrix& m, const EnergizedComplex& e) {
    if (m.n != e.size()) throw ShapeError("matrix size vs geometry size");
    RingValue s = rv_zero(m.ring);
    for (size_t i = 0; i < m.n; ++i) {
        const RingValue& d = m.at(i, i);
        s = rv_add(s, omega_sign(e.geom.simplices[i]) < 0 ? rv_neg(d) : d);
    }
    return s;
}

EnergyAssignment symbolic_generators(const Geometry& g, RingId ring) {
    std::vector<std::string> names;
    names.reserve(g.size());
    for (size_t i = 0; i < g.size(); ++i) names.push_back("x" + std::to_string(i + 1));
    return symbolic_generators(g, ring, names);
}

EnergyAssignment symbolic_generators(const Geometry& g, RingId ring,
                                     const std::vector<std::string>& names) {
    if (names.size() != g.size()) throw ShapeError("one name per simplex required");
    EnergyAssignment h;
    h.ring = ring;
    for (const auto& name : names) {
        RingValue v;
        v.id = ring;
        if (ring == RingId::Poly) {
            v.v = Poly::variable(name);
        } else if (ring == RingId::Free) {
            v.v = FreeElt::generator(name);
        } else {
            throw UnsupportedRing("symbolic generators live in poly or free");
        }
        h.values.push_back(std::move(v));
    }
    return h;
}

EnergyAssignment topological_assignment(const Geometry& g) {
    EnergyAssignment h;
    h.ring = RingId::Rational;
    for (const auto& s : g.simplices)
        h.values.push_back(rv_from_int(RingId::Rational, omega_sign(s)));
    return h;
}

EnergyAssignment constant_assignment(const Geometry& g, const RingValue& v) {
    EnergyAssignment h;
    h.ring = v.id;
    h.values.assign(g.size(), v);
    return h;
}

namespace {

double u01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

long rand_range(std::mt19937_64& rng, long lo, long hi) { // inclusive
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

long rand_nonzero(std::mt19937_64& rng, long lo, long hi) {
    long v = 0;
    while (v == 0) v = rand_range(rng, lo, hi);
    return v;
}

} // namespace

EnergyAssignment sample_units(const Geometry& g, UnitFamily family, uint64_t seed) {
    std::mt19937_64 rng(seed);
    EnergyAssignment h;
    switch (family) {
        case UnitFamily::PM1: {
            h.ring = RingId::Rational;
            for (size_t i = 0; i < g.size(); ++i)
                h.values.push_back(rv_from_int(RingId::Rational, rng() & 1 ? 1 : -1));
            break;
        }
        case UnitFamily::U1: {
            h.ring = RingId::Complex64;
            for (size_t i = 0; i < g.size(); ++i) {
                double t = 2.0 * M_PI * u01(rng);
                RingValue v;
                v.id = RingId::Complex64;
                v.v = std::complex<double>(std::cos(t), std::sin(t));
                h.values.push_back(std::move(v));
            }
            break;
        }
        case UnitFamily::U1Exact: {
            h.ring = RingId::Gaussian;
            for (size_t i = 0; i < g.size(); ++i) {
                Rat p(rand_range(rng, -6, 6)), q(rand_nonzero(rng, -6, 6));
                Rat n = p * p + q * q;
                RingValue v;
                v.id = RingId::Gaussian;
                v.v = Gaussian{(p * p - q * q) / n, 2 * p * q / n};
                h.values.push_back(std::move(v));
            }
            break;
        }
        case UnitFamily::UnitQuaternion: {
            h.ring = RingId::Quaternion64;
            for (size_t i = 0; i < g.size(); ++i) {
                QuatD q;
                double n = 0;
                do {
                    q = QuatD{2 * u01(rng) - 1, 2 * u01(rng) - 1, 2 * u01(rng) - 1,
                              2 * u01(rng) - 1};
                    n = q.norm();
                } while (n < 0.04 || n > 1.0);
                double s = 1.0 / std::sqrt(n);
                RingValue v;
                v.id = RingId::Quaternion64;
                v.v = QuatD{q.w * s, q.x * s, q.y * s, q.z * s};
                h.values.push_back(std::move(v));
            }
            break;
        }
        case UnitFamily::UnitQuaternionExact: {
            h.ring = RingId::QuaternionRat;
            for (size_t i = 0; i < g.size(); ++i) {
                QuatR q{Rat(rand_nonzero(rng, -4, 4)), Rat(rand_range(rng, -4, 4)),
                        Rat(rand_range(rng, -4, 4)), Rat(rand_range(rng, -4, 4))};
                Rat n = q.norm();
                QuatR u = q * q; // N(q^2 / N(q)) = N(q)^2 / N(q)^2 = 1 exactly
                RingValue v;
                v.id = RingId::QuaternionRat;
                v.v = QuatR{u.w / n, u.x / n, u.y / n, u.z / n};
                h.values.push_back(std::move(v));
            }
            break;
        }
    }
    return h;
}

EnergyAssignment sample_named(const Geometry& g, const std::string& name, uint64_t seed) {
    if (name == "pm1") return sample_units(g, UnitFamily::PM1, seed);
    if (name == "u1") return sample_units(g, UnitFamily::U1, seed);
    if (name == "u1_exact") return sample_units(g, UnitFamily::U1Exact, seed);
    if (name == "unit_quaternion") return sample_units(g, UnitFamily::UnitQuaternion, seed);
    if (name == "unit_quaternion_exact")
        return sample_units(g, UnitFamily::UnitQuaternionExact, seed);
    if (name == "omega") return topological_assignment(g);
    if (name == "one") return constant_assignment(g, rv_one(RingId::Rational));
    if (name == "rational_nonzero") {
        std::mt19937_64 rng(seed);
        EnergyAssignment h;
        h.ring = RingId::Rational;
        for (size_t i = 0; i < g.size(); ++i) {
            Rat v(rand_nonzero(rng, -4, 4), rand_range(rng, 1, 3));
            v.canonicalize();
            h.values.push_back(rv_from_rat(RingId::Rational, v));
        }
        return h;
    }
    if (name == "symbolic_poly") return symbolic_generators(g, RingId::Poly);
    if (name == "symbolic_free") return symbolic_generators(g, RingId::Free);
    throw UnsupportedRing("unknown sampler '" + name + "'");
}

std::vector<std::string> sampler_names() {
    return {"pm1", "u1", "u1_exact", "unit_quaternion", "unit_quaternion_exact",
            "omega", "one", "rational_nonzero", "symbolic_poly", "symbolic_free"};
}

} // namespace energeia
