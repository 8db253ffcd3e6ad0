#pragma once

#include <complex>
#include <string>
#include <variant>

#include "energeia/free_algebra.hpp"
#include "energeia/gaussian.hpp"
#include "energeia/octonion.hpp"
#include "energeia/polynomial.hpp"
#include "energeia/quaternion.hpp"

namespace energeia {

enum class RingId {
    Rational,
    Gaussian,
    Complex64,
    QuaternionRat,
    Quaternion64,
    Octonion,
    Poly,
    Free,
};

// Internal name (CLI --ring accepts these; JSON uses ring_json_tag).
std::string ring_name(RingId id);
RingId ring_from_name(const std::string& name);
// JSON tag: both quaternion payloads serialize under "quaternion".
std::string ring_json_tag(RingId id);

bool ring_is_exact(RingId id);
bool ring_is_commutative(RingId id);
bool ring_is_associative(RingId id);
// Rings whose norm N(a) = a* a is an exact rational scalar.
bool ring_has_exact_norm(RingId id);
// Rings with exact division (fields and the polynomial domain) usable by
// fraction-free elimination.
bool ring_has_exact_division(RingId id);

struct RingValue {
    RingId id{RingId::Rational};
    std::variant<Rat, Gaussian, std::complex<double>, Quaternion<Rat>,
                 Quaternion<double>, Octonion, Poly, FreeElt>
        v{Rat(0)};
};

RingValue rv_zero(RingId id);
RingValue rv_one(RingId id);
RingValue rv_from_int(RingId id, long n);
RingValue rv_from_rat(RingId id, const Rat& r); // Free requires an integer

RingValue rv_add(const RingValue& a, const RingValue& b);
RingValue rv_sub(const RingValue& a, const RingValue& b);
RingValue rv_mul(const RingValue& a, const RingValue& b);
RingValue rv_neg(const RingValue& a);
RingValue rv_conj(const RingValue& a);
// N(a) = a* a in the same ring.
RingValue rv_norm(const RingValue& a);
// Exact division; UnsupportedRing unless ring_has_exact_division.
RingValue rv_div_exact(const RingValue& a, const RingValue& b);

bool rv_is_zero(const RingValue& a);
bool rv_is_one(const RingValue& a);
// Structural equality (bitwise for the double-based rings).
bool rv_eq(const RingValue& a, const RingValue& b);

// Norm as exact rational (rings with ring_has_exact_norm only).
Rat rv_norm_rat(const RingValue& a);
// Norm as double (any division-algebra-like payload; UnsupportedRing for Poly/Free).
double rv_norm_double(const RingValue& a);
// True when N(a) = 1 exactly (exact rings) or within 1e-12 (double rings).
bool rv_is_unit(const RingValue& a);

// Conversion for the numeric linear algebra (Rational, Gaussian, Complex64).
std::complex<double> rv_to_complex(const RingValue& a);

std::string rv_str(const RingValue& a);

} // namespace energeia
