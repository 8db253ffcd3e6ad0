#include "energeia/ring_value.hpp"

#include <cmath>
#include <sstream>

#include "energeia/errors.hpp"

namespace energeia {

namespace {

void check_same(const RingValue& a, const RingValue& b) {
    if (a.id != b.id)
        throw RingMismatch(ring_name(a.id) + " vs " + ring_name(b.id));
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

std::string ring_name(RingId id) {
    switch (id) {
        case RingId::Rational: return "rational";
        case RingId::Gaussian: return "gaussian";
        case RingId::Complex64: return "complex64";
        case RingId::QuaternionRat: return "quaternion";
        case RingId::Quaternion64: return "quaternion64";
        case RingId::Octonion: return "octonion";
        case RingId::Poly: return "poly";
        case RingId::Free: return "free";
    }
    throw Error("bad ring id");
}

RingId ring_from_name(const std::string& name) {
    if (name == "rational") return RingId::Rational;
    if (name == "gaussian") return RingId::Gaussian;
    if (name == "complex64") return RingId::Complex64;
    if (name == "quaternion") return RingId::QuaternionRat;
    if (name == "quaternion64") return RingId::Quaternion64;
    if (name == "octonion") return RingId::Octonion;
    if (name == "poly") return RingId::Poly;
    if (name == "free") return RingId::Free;
    throw UnsupportedRing("unknown ring '" + name + "'");
}

std::string ring_json_tag(RingId id) {
    if (id == RingId::Quaternion64) return "quaternion";
    return ring_name(id);
}

bool ring_is_exact(RingId id) {
    switch (id) {
        case RingId::Rational:
        case RingId::Gaussian:
        case RingId::QuaternionRat:
        case RingId::Poly:
        case RingId::Free: return true;
        default: return false;
    }
}

bool ring_is_commutative(RingId id) {
    switch (id) {
        case RingId::Rational:
        case RingId::Gaussian:
        case RingId::Complex64:
        case RingId::Poly: return true;
        default: return false;
    }
}

bool ring_is_associative(RingId id) {
    return id != RingId::Octonion;
}

bool ring_has_exact_norm(RingId id) {
    switch (id) {
        case RingId::Rational:
        case RingId::Gaussian:
        case RingId::QuaternionRat: return true;
        default: return false;
    }
}

bool ring_has_exact_division(RingId id) {
    switch (id) {
        case RingId::Rational:
        case RingId::Gaussian:
        case RingId::Poly: return true;
        default: return false;
    }
}

RingValue rv_zero(RingId id) {
    return rv_from_int(id, 0);
}

RingValue rv_one(RingId id) {
    return rv_from_int(id, 1);
}

RingValue rv_from_int(RingId id, long n) {
    RingValue r;
    r.id = id;
    switch (id) {
        case RingId::Rational: r.v = Rat(n); break;
        case RingId::Gaussian: r.v = Gaussian{Rat(n), Rat(0)}; break;
        case RingId::Complex64: r.v = std::complex<double>(static_cast<double>(n), 0.0); break;
        case RingId::QuaternionRat: r.v = Quaternion<Rat>{Rat(n), Rat(0), Rat(0), Rat(0)}; break;
        case RingId::Quaternion64:
            r.v = Quaternion<double>{static_cast<double>(n), 0.0, 0.0, 0.0};
            break;
        case RingId::Octonion: {
            Octonion o;
            o.a = QuatD{static_cast<double>(n), 0, 0, 0};
            r.v = o;
            break;
        }
        case RingId::Poly: r.v = Poly::constant(Rat(n)); break;
        case RingId::Free: r.v = FreeElt::constant(n); break;
    }
    return r;
}

RingValue rv_from_rat(RingId id, const Rat& q) {
    RingValue r;
    r.id = id;
    switch (id) {
        case RingId::Rational: r.v = q; break;
        case RingId::Gaussian: r.v = Gaussian{q, Rat(0)}; break;
        case RingId::Complex64: r.v = std::complex<double>(q.get_d(), 0.0); break;
        case RingId::QuaternionRat: r.v = Quaternion<Rat>{q, Rat(0), Rat(0), Rat(0)}; break;
        case RingId::Quaternion64: r.v = Quaternion<double>{q.get_d(), 0.0, 0.0, 0.0}; break;
        case RingId::Octonion: {
            Octonion o;
            o.a = QuatD{q.get_d(), 0, 0, 0};
            r.v = o;
            break;
        }
        case RingId::Poly: r.v = Poly::constant(q); break;
        case RingId::Free:
            if (q.get_den() != 1)
                throw UnsupportedRing("free algebra coefficients are integers");
            if (!q.get_num().fits_slong_p())
                throw UnsupportedRing("free algebra coefficient overflow");
            r.v = FreeElt::constant(q.get_num().get_si());
            break;
    }
    return r;
}

#define RV_BINOP(NAME, EXPR)                                                  \
    RingValue NAME(const RingValue& a, const RingValue& b) {                  \
        check_same(a, b);                                                     \
        RingValue r;                                                          \
        r.id = a.id;                                                          \
        switch (a.id) {                                                       \
            case RingId::Rational: {                                          \
                const auto &x = std::get<Rat>(a.v), &y = std::get<Rat>(b.v);  \
                r.v = Rat(EXPR);                                              \
                break;                                                        \
            }                                                                 \
            case RingId::Gaussian: {                                          \
                const auto &x = std::get<Gaussian>(a.v), &y = std::get<Gaussian>(b.v); \
                r.v = EXPR;                                                   \
                break;                                                        \
            }                                                                 \
            case RingId::Complex64: {                                         \
                const auto &x = std::get<std::complex<double>>(a.v),          \
                           &y = std::get<std::complex<double>>(b.v);          \
                r.v = EXPR;                                                   \
                break;                                                        \
            }                                                                 \
            case RingId::QuaternionRat: {                                     \
                const auto &x = std::get<Quaternion<Rat>>(a.v),               \
                           &y = std::get<Quaternion<Rat>>(b.v);               \
                r.v = EXPR;                                                   \
                break;                                                        \
            }                                                                 \
            case RingId::Quaternion64: {                                      \
                const auto &x = std::get<Quaternion<double>>(a.v),            \
                           &y = std::get<Quaternion<double>>(b.v);            \
                r.v = EXPR;                                                   \
                break;                                                        \
            }                                                                 \
            case RingId::Octonion: {                                          \
                const auto &x = std::get<Octonion>(a.v), &y = std::get<Octonion>(b.v); \
                r.v = EXPR;                                                   \
                break;                                                        \
            }                                                                 \
            case RingId::Poly: {                                              \
                const auto &x = std::get<Poly>(a.v), &y = std::get<Poly>(b.v); \
                r.v = EXPR;                                                   \
                break;                                                        \
            }                                                                 \
            case RingId::Free: {                                              \
                const auto &x = std::get<FreeElt>(a.v), &y = std::get<FreeElt>(b.v); \
                r.v = EXPR;                                                   \
                break;                                                        \
            }                                                                 \
        }                                                                     \
        return r;                                                             \
    }

RV_BINOP(rv_add, x + y)
RV_BINOP(rv_sub, x - y)
RV_BINOP(rv_mul, x* y)

#undef RV_BINOP

RingValue rv_neg(const RingValue& a) {
    return rv_sub(rv_zero(a.id), a);
}

RingValue rv_conj(const RingValue& a) {
    RingValue r;
    r.id = a.id;
    switch (a.id) {
        case RingId::Rational: r.v = std::get<Rat>(a.v); break;
        case RingId::Gaussian: r.v = std::get<Gaussian>(a.v).conj(); break;
        case RingId::Complex64: r.v = std::conj(std::get<std::complex<double>>(a.v)); break;
        case RingId::QuaternionRat: r.v = std::get<Quaternion<Rat>>(a.v).conj(); break;
        case RingId::Quaternion64: r.v = std::get<Quaternion<double>>(a.v).conj(); break;
        case RingId::Octonion: r.v = std::get<Octonion>(a.v).conj(); break;
        case RingId::Poly: r.v = std::get<Poly>(a.v); break;
        case RingId::Free: r.v = std::get<FreeElt>(a.v).conj(); break;
    }
    return r;
}

RingValue rv_norm(const RingValue& a) {
    return rv_mul(rv_conj(a), a);
}

RingValue rv_div_exact(const RingValue& a, const RingValue& b) {
    check_same(a, b);
    if (rv_is_zero(b)) throw SingularOperator("division by zero");
    RingValue r;
    r.id = a.id;
    switch (a.id) {
        case RingId::Rational:
            r.v = Rat(std::get<Rat>(a.v) / std::get<Rat>(b.v));
            break;
        case RingId::Gaussian:
            r.v = std::get<Gaussian>(a.v) / std::get<Gaussian>(b.v);
            break;
        case RingId::Poly:
            r.v = Poly::div_exact(std::get<Poly>(a.v), std::get<Poly>(b.v));
            break;
        default:
            throw UnsupportedRing("exact division undefined for " + ring_name(a.id));
    }
    return r;
}

bool rv_is_zero(const RingValue& a) {
    switch (a.id) {
        case RingId::Rational: return std::get<Rat>(a.v) == 0;
        case RingId::Gaussian: return std::get<Gaussian>(a.v).is_zero();
        case RingId::Complex64: return std::get<std::complex<double>>(a.v) == 0.0;
        case RingId::QuaternionRat: return std::get<Quaternion<Rat>>(a.v).is_zero();
        case RingId::Quaternion64: return std::get<Quaternion<double>>(a.v).is_zero();
        case RingId::Octonion: return std::get<Octonion>(a.v).is_zero();
        case RingId::Poly: return std::get<Poly>(a.v).is_zero();
        case RingId::Free: return std::get<FreeElt>(a.v).is_zero();
    }
    throw Error("bad ring id");
}

bool rv_is_one(const RingValue& a) {
    return rv_eq(a, rv_one(a.id));
}

bool rv_eq(const RingValue& a, const RingValue& b) {
    check_same(a, b);
    switch (a.id) {
        case RingId::Rational: return std::get<Rat>(a.v) == std::get<Rat>(b.v);
        case RingId::Gaussian: return std::get<Gaussian>(a.v) == std::get<Gaussian>(b.v);
        case RingId::Complex64:
            return std::get<std::complex<double>>(a.v) == std::get<std::complex<double>>(b.v);
        case RingId::QuaternionRat:
            return std::get<Quaternion<Rat>>(a.v) == std::get<Quaternion<Rat>>(b.v);
        case RingId::Quaternion64:
            return std::get<Quaternion<double>>(a.v) == std::get<Quaternion<double>>(b.v);
        case RingId::Octonion: {
            const auto &x = std::get<Octonion>(a.v), &y = std::get<Octonion>(b.v);
            return x.a == y.a && x.b == y.b;
        }
        case RingId::Poly: return std::get<Poly>(a.v) == std::get<Poly>(b.v);
        case RingId::Free: return std::get<FreeElt>(a.v) == std::get<FreeElt>(b.v);
    }
    throw Error("bad ring id");
}

Rat rv_norm_rat(const RingValue& a) {
    switch (a.id) {
        case RingId::Rational: {
            const auto& x = std::get<Rat>(a.v);
            return x * x;
        }
        case RingId::Gaussian: return std::get<Gaussian>(a.v).norm();
        case RingId::QuaternionRat: return std::get<Quaternion<Rat>>(a.v).norm();
        default:
            throw UnsupportedRing("no exact rational norm for " + ring_name(a.id));
    }
}

double rv_norm_double(const RingValue& a) {
    switch (a.id) {
        case RingId::Rational:
        case RingId::Gaussian:
        case RingId::QuaternionRat: return rv_norm_rat(a).get_d();
        case RingId::Complex64: return std::norm(std::get<std::complex<double>>(a.v));
        case RingId::Quaternion64: return std::get<Quaternion<double>>(a.v).norm();
        case RingId::Octonion: return std::get<Octonion>(a.v).norm();
        default:
            throw UnsupportedRing("no scalar norm for " + ring_name(a.id));
    }
}

bool rv_is_unit(const RingValue& a) {
    if (ring_has_exact_norm(a.id)) return rv_norm_rat(a) == 1;
    switch (a.id) {
        case RingId::Complex64:
        case RingId::Quaternion64:
        case RingId::Octonion: return std::abs(rv_norm_double(a) - 1.0) <= 1e-12;
        case RingId::Poly: return std::get<Poly>(a.v).is_one() ||
                                  rv_is_one(rv_neg(a));
        case RingId::Free: {
            RingValue n = rv_norm(a);
            return rv_is_one(n);
        }
        default: throw Error("bad ring id");
    }
}

std::complex<double> rv_to_complex(const RingValue& a) {
    switch (a.id) {
        case RingId::Rational: return {std::get<Rat>(a.v).get_d(), 0.0};
        case RingId::Gaussian: return std::get<Gaussian>(a.v).to_complex();
        case RingId::Complex64: return std::get<std::complex<double>>(a.v);
        default:
            throw UnsupportedRing("cannot view " + ring_name(a.id) + " as complex");
    }
}

std::string rv_str(const RingValue& a) {
    switch (a.id) {
        case RingId::Rational: return rat_to_string(std::get<Rat>(a.v));
        case RingId::Gaussian: return std::get<Gaussian>(a.v).str();
        case RingId::Complex64: {
            const auto& z = std::get<std::complex<double>>(a.v);
            return fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
                   fmt_double(std::abs(z.imag())) + " i";
        }
        case RingId::QuaternionRat: {
            const auto& q = std::get<Quaternion<Rat>>(a.v);
            return "(" + rat_to_string(q.w) + ", " + rat_to_string(q.x) + ", " +
                   rat_to_string(q.y) + ", " + rat_to_string(q.z) + ")";
        }
        case RingId::Quaternion64: {
            const auto& q = std::get<Quaternion<double>>(a.v);
            return "(" + fmt_double(q.w) + ", " + fmt_double(q.x) + ", " +
                   fmt_double(q.y) + ", " + fmt_double(q.z) + ")";
        }
        case RingId::Octonion: {
            auto c = std::get<Octonion>(a.v).components();
            std::string s = "(";
            for (size_t i = 0; i < 8; ++i) {
                if (i) s += ", ";
                s += fmt_double(c[i]);
            }
            return s + ")";
        }
        case RingId::Poly: return std::get<Poly>(a.v).str();
        case RingId::Free: return std::get<FreeElt>(a.v).str();
    }
    throw Error("bad ring id");
}

} // namespace energeia
