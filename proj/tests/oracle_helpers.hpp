#pragma once

// Shared test utilities: an independent cofactor determinant, random geometry
// pools, and random ring values. The cofactor expansion is deliberately naive
// (factorial cost, usable to ~8x8) so it shares no code path with the
// fraction-free elimination it cross-checks.

#include "energeia/energy.hpp"
#include "energeia/geometry.hpp"
#include "energeia/matrix.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace testkit {

inline energeia::RingValue naive_det(const energeia::SquareMatrix& m) {
    using energeia::RingValue;
    const size_t n = m.n;
    if (n == 0) return energeia::rv_one(m.ring);
    if (n == 1) return m.at(0, 0);
    RingValue acc = energeia::rv_zero(m.ring);
    for (size_t j = 0; j < n; ++j) {
        energeia::SquareMatrix minor = energeia::mat_zero(m.ring, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        RingValue term = energeia::rv_mul(m.at(0, j), naive_det(minor));
        acc = (j % 2 == 0) ? energeia::rv_add(acc, term) : energeia::rv_sub(acc, term);
    }
    return acc;
}

inline energeia::Geometry random_complex(std::mt19937_64& rng, int max_vertices = 6,
                                         size_t max_simplices = 40) {
    std::uniform_int_distribution<int> verts(1, max_vertices);
    std::uniform_real_distribution<double> dens(0.15, 0.9);
    for (;;) {
        energeia::Geometry g = energeia::generate_random(verts(rng), dens(rng), rng());
        if (g.size() >= 1 && g.size() <= max_simplices) return g;
    }
}

// Arbitrary distinct nonempty subsets of {1..max_vertices}; rarely closed.
inline energeia::Geometry random_sets(std::mt19937_64& rng, int max_vertices = 6,
                                      size_t max_sets = 12) {
    std::uniform_int_distribution<int> count(1, static_cast<int>(max_sets));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::set<std::vector<int>> chosen;
    const int want = count(rng);
    while (static_cast<int>(chosen.size()) < want) {
        std::vector<int> s;
        for (int v = 1; v <= max_vertices; ++v)
            if (coin(rng) < 0.4) s.push_back(v);
        if (!s.empty()) chosen.insert(s);
    }
    return energeia::parse_geometry({chosen.begin(), chosen.end()});
}

inline energeia::Rat random_small_rat(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    long p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    energeia::Rat r(p, den(rng));
    r.canonicalize();
    return r;
}

inline energeia::RingValue random_value(std::mt19937_64& rng, energeia::RingId ring,
                                        bool nonzero = false) {
    using energeia::RingId;
    using energeia::RingValue;
    std::uniform_real_distribution<double> unif(-1.5, 1.5);
    switch (ring) {
    case RingId::Rational:
        return RingValue{ring, random_small_rat(rng, nonzero)};
    case RingId::Gaussian: {
        energeia::Gaussian z{random_small_rat(rng), random_small_rat(rng)};
        while (nonzero && z.re == 0 && z.im == 0) z.re = random_small_rat(rng, true);
        return RingValue{ring, z};
    }
    case RingId::Complex64: {
        std::complex<double> z{unif(rng), unif(rng)};
        if (nonzero && std::abs(z) < 0.1) z += 1.0;
        return RingValue{ring, z};
    }
    case RingId::QuaternionRat: {
        energeia::Quaternion<energeia::Rat> q{random_small_rat(rng), random_small_rat(rng),
                                              random_small_rat(rng), random_small_rat(rng)};
        while (nonzero && q.w == 0 && q.x == 0 && q.y == 0 && q.z == 0)
            q.w = random_small_rat(rng, true);
        return RingValue{ring, q};
    }
    case RingId::Quaternion64: {
        energeia::Quaternion<double> q{unif(rng), unif(rng), unif(rng), unif(rng)};
        if (nonzero && std::abs(q.w) + std::abs(q.x) + std::abs(q.y) + std::abs(q.z) < 0.1)
            q.w += 1.0;
        return RingValue{ring, q};
    }
    case RingId::Octonion: {
        std::array<double, 8> c{};
        for (double& x : c) x = unif(rng);
        if (nonzero) c[0] += 2.0;
        return RingValue{ring, energeia::Octonion::from_components(c)};
    }
    default:
        throw energeia::UnsupportedRing("random_value: use the library samplers instead");
    }
}

inline energeia::EnergyAssignment random_assignment(std::mt19937_64& rng,
                                                    const energeia::Geometry& g,
                                                    energeia::RingId ring,
                                                    bool nonzero = false) {
    energeia::EnergyAssignment h;
    h.ring = ring;
    for (size_t i = 0; i < g.size(); ++i) h.values.push_back(random_value(rng, ring, nonzero));
    return h;
}

} // namespace testkit
