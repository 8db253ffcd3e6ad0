#pragma once

#include <cmath>
#include <string>

#include "energeia/rational.hpp"

namespace energeia {

// Hamilton quaternion w + x i + y j + z k over T (exact rationals or doubles).
template <class T>
struct Quaternion {
    T w{0}, x{0}, y{0}, z{0};

    Quaternion() = default;
    Quaternion(T w_, T x_, T y_, T z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    T norm() const { return w * w + x * x + y * y + z * z; }
    bool is_zero() const { return w == T(0) && x == T(0) && y == T(0) && z == T(0); }
};

using QuatR = Quaternion<Rat>;
using QuatD = Quaternion<double>;

} // namespace energeia
