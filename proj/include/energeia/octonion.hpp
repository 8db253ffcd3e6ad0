#pragma once

#include <array>
#include <cmath>

#include "energeia/quaternion.hpp"

namespace energeia {

// Octonion as a Cayley-Dickson pair (a, b) of double quaternions:
//   (a,b)(c,d) = (ac - d* b, da + b c*).
// Nonassociative; determinant-style operations must reject this type.
struct Octonion {
    QuatD a{};
    QuatD b{};

    Octonion() = default;
    Octonion(QuatD a_, QuatD b_) : a(a_), b(b_) {}

    static Octonion from_components(const std::array<double, 8>& c) {
        return {QuatD{c[0], c[1], c[2], c[3]}, QuatD{c[4], c[5], c[6], c[7]}};
    }
    std::array<double, 8> components() const {
        return {a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z};
    }

    friend Octonion operator+(const Octonion& p, const Octonion& q) {
        return {p.a + q.a, p.b + q.b};
    }
    friend Octonion operator-(const Octonion& p, const Octonion& q) {
        return {p.a - q.a, p.b - q.b};
    }
    Octonion operator-() const { return {-a, -b}; }

    friend Octonion operator*(const Octonion& p, const Octonion& q) {
        return {p.a * q.a - q.b.conj() * p.b, q.b * p.a + p.b * q.a.conj()};
    }

    Octonion conj() const { return {a.conj(), -b}; }
    double norm() const { return a.norm() + b.norm(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

} // namespace energeia
