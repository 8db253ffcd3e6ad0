#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "energeia/geometry.hpp"
#include "energeia/ring_value.hpp"

namespace energeia {

struct SquareMatrix;

// Total assignment h: values[i] belongs to the i-th canonical simplex.
struct EnergyAssignment {
    RingId ring{RingId::Rational};
    std::vector<RingValue> values;
};

struct EnergizedComplex {
    Geometry geom;
    EnergyAssignment h;

    size_t size() const { return geom.size(); }
    const RingValue& value_at(size_t i) const { return h.values[i]; }
};

// Validates totality and uniform ring tag.
EnergizedComplex energize(Geometry g, EnergyAssignment h);

// True iff h(x)* h(x) = 1 for all x (exact rings exactly, double rings 1e-12).
bool is_unit_assignment(const EnergyAssignment& h);

// chi(A) = sum of h over A; default A = all members. Unknown member -> NotAMember.
RingValue chi(const EnergizedComplex& e);
RingValue chi(const EnergizedComplex& e, const std::vector<Simplex>& subset);

// omega(G) = sum over ordered pairs with nonempty intersection of h(x)* h(y).
RingValue omega_quadratic(const EnergizedComplex& e);
// Raw subset variant (no closure, no theorem attached).
RingValue omega_quadratic(const EnergizedComplex& e, const std::vector<Simplex>& subset);

// omega_3(G) = sum over ordered pairwise-intersecting triples of h(x)* h(y) h(z).
// Octonions are rejected (product of three needs associativity).
RingValue omega_cubic(const EnergizedComplex& e);

// K(x) = omega(x) g(x,x); these add up to chi(G) on complexes.
RingValue curvature(const EnergizedComplex& e, const Simplex& x);

// str(m) = sum omega(x) m(x,x).
RingValue super_trace(const SquareMatrix& m, const EnergizedComplex& e);

// h(x_i) = i-th commutative variable or free generator, named x1..xn by default.
EnergyAssignment symbolic_generators(const Geometry& g, RingId ring);
EnergyAssignment symbolic_generators(const Geometry& g, RingId ring,
                                     const std::vector<std::string>& names);

// h(x) = omega(x) in the rationals.
EnergyAssignment topological_assignment(const Geometry& g);
EnergyAssignment constant_assignment(const Geometry& g, const RingValue& v);

enum class UnitFamily {
    PM1,                  // {-1, +1} rationals
    U1,                   // unit-circle complex doubles
    U1Exact,              // exact Gaussian rationals (p^2-q^2+2pq i)/(p^2+q^2)
    UnitQuaternion,       // normalized double quaternions
    UnitQuaternionExact,  // exact rational quaternions q^2/N(q)
};

EnergyAssignment sample_units(const Geometry& g, UnitFamily family, uint64_t seed);

// Named samplers for the command-line front end; includes the unit families plus
// "omega", "one", "rational_nonzero", "symbolic_poly", "symbolic_free".
EnergyAssignment sample_named(const Geometry& g, const std::string& name, uint64_t seed);
std::vector<std::string> sampler_names();

} // namespace energeia
