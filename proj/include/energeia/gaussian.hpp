#pragma once

#include <complex>
#include <string>

#include "energeia/rational.hpp"

namespace energeia {

// Gaussian rational a + b i with exact components.
struct Gaussian {
    Rat re{0};
    Rat im{0};

    Gaussian() = default;
    Gaussian(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Gaussian operator-() const { return {-re, -im}; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }

    Gaussian conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    // Exact division (Gaussian rationals form a field).
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        Rat n = b.norm();
        if (n == 0) throw SingularOperator("division by zero Gaussian rational");
        Gaussian t = a * b.conj();
        return {t.re / n, t.im / n};
    }

    std::complex<double> to_complex() const {
        return {re.get_d(), im.get_d()};
    }

    std::string str() const {
        if (im == 0) return rat_to_string(re);
        std::string s = rat_to_string(re);
        s += (sgn(im) < 0 ? " - " : " + ");
        Rat a = abs(im);
        if (a != 1) s += rat_to_string(a) + " ";
        s += "i";
        return s;
    }
};

} // namespace energeia
