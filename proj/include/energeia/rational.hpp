#pragma once

#include <gmpxx.h>
#include <string>

#include "energeia/errors.hpp"

namespace energeia {

using Rat = mpq_class;

// Accepts "p", "-p", "p/q" with arbitrary-precision parts. Denominator 0 is rejected.
inline Rat parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw IoError("bad rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw IoError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline int rat_sign(const Rat& r) {
    return sgn(r);
}

inline double rat_to_double(const Rat& r) {
    return r.get_d();
}

} // namespace energeia
