#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "energeia/errors.hpp"

namespace energeia {

// Nonempty set of positive vertex labels, sorted ascending.
struct Simplex {
    std::vector<int> v;
    int dim() const { return static_cast<int>(v.size()) - 1; }
    friend bool operator==(const Simplex& a, const Simplex& b) { return a.v == b.v; }
};

// Validates labels, sorts, drops duplicate labels.
Simplex make_simplex(std::vector<int> labels);

// Canonical order: ascending cardinality, ties lexicographic.
bool simplex_less(const Simplex& a, const Simplex& b);
bool simplex_subset(const Simplex& a, const Simplex& b); // a subset-of b (non-strict)
bool simplex_intersects(const Simplex& a, const Simplex& b);
Simplex simplex_union(const Simplex& a, const Simplex& b);

int omega_sign(const Simplex& x); // (-1)^dim

// Finite set of sets in canonical order; is_complex marks downward closure.
struct Geometry {
    std::vector<Simplex> simplices;
    std::vector<int> vertex_support;
    bool is_complex = false;

    size_t size() const { return simplices.size(); }
    // Index in canonical order, or -1.
    long index_of(const Simplex& x) const;
    bool contains(const Simplex& x) const { return index_of(x) >= 0; }
    friend bool operator==(const Geometry& a, const Geometry& b) {
        return a.simplices == b.simplices;
    }
};

// Geometry that may additionally hold the void (dimension -1, omega = -1),
// plus an explicit ambient vertex set so dualization is involutive.
struct ExtendedGeometry {
    std::vector<Simplex> simplices; // void excluded from this list
    bool has_void = false;
    std::vector<int> ambient;
};

Geometry parse_geometry(const std::vector<std::vector<int>>& sets);
Geometry geometry_from_simplices(std::vector<Simplex> simplices);

Geometry downward_closure(const Geometry& g);

std::vector<Simplex> star(const Geometry& g, const Simplex& x); // W+(x), non-strict
std::vector<Simplex> core(const Geometry& g, const Simplex& x); // W-(x), non-strict

struct FVector {
    int min_dim = 0;            // -1 when the void is present
    std::vector<long> counts;   // counts per dimension starting at min_dim
};
FVector f_vector(const ExtendedGeometry& g);
FVector f_vector(const Geometry& g);

ExtendedGeometry complement_dual(const Geometry& g);
ExtendedGeometry complement_dual(const ExtendedGeometry& g);
ExtendedGeometry extend(const Geometry& g);

// Even/odd-dimensional counts of z with y <= z <= x in the complete complex on x.
std::pair<long, long> parity_count(const Simplex& x, const Simplex& y);

Geometry generate_complete(int n);
Geometry generate_whitney(const std::vector<std::pair<int, int>>& edges);
Geometry generate_random(int n_vertices, double density, uint64_t seed);

} // namespace energeia
