#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "energeia/ring_value.hpp"

#include <random>

using namespace energeia;

namespace {

RingValue rv(RingId id, long n) { return rv_from_int(id, n); }

} // namespace

TEST_CASE("rational arithmetic is exact") {
    RingValue a{RingId::Rational, Rat(3, 4)};
    RingValue b{RingId::Rational, Rat(2, 3)};
    CHECK(rv_eq(rv_mul(a, b), RingValue{RingId::Rational, Rat(1, 2)}));
    RingValue c{RingId::Rational, Rat(1, 3)};
    RingValue d{RingId::Rational, Rat(1, 6)};
    CHECK(rv_eq(rv_add(c, d), RingValue{RingId::Rational, Rat(1, 2)}));
    CHECK(rv_eq(rv_div_exact(rv_one(RingId::Rational), b),
                RingValue{RingId::Rational, Rat(3, 2)}));
    CHECK(rv_is_zero(rv_sub(a, a)));
    CHECK(rv_is_one(rv_div_exact(a, a)));
    CHECK(rv_eq(rv_conj(a), a));
    CHECK(rv_str(RingValue{RingId::Rational, parse_rational("-5/10")}) == "-1/2");
}

TEST_CASE("gaussian rationals multiply and conjugate") {
    RingValue a{RingId::Gaussian, Gaussian{Rat(1), Rat(2)}};
    RingValue b{RingId::Gaussian, Gaussian{Rat(3), Rat(-1)}};
    CHECK(rv_eq(rv_mul(a, b), RingValue{RingId::Gaussian, Gaussian{Rat(5), Rat(5)}}));
    RingValue z{RingId::Gaussian, Gaussian{Rat(2), Rat(1)}};
    CHECK(rv_eq(rv_norm(z), RingValue{RingId::Gaussian, Gaussian{Rat(5), Rat(0)}}));
    CHECK(rv_eq(rv_conj(z), RingValue{RingId::Gaussian, Gaussian{Rat(2), Rat(-1)}}));
    CHECK(rv_eq(rv_div_exact(rv_mul(a, b), b), a));
}

TEST_CASE("rational quaternions: Hamilton relations and norm") {
    using QR = Quaternion<Rat>;
    RingValue i{RingId::QuaternionRat, QR{Rat(0), Rat(1), Rat(0), Rat(0)}};
    RingValue j{RingId::QuaternionRat, QR{Rat(0), Rat(0), Rat(1), Rat(0)}};
    RingValue k{RingId::QuaternionRat, QR{Rat(0), Rat(0), Rat(0), Rat(1)}};
    CHECK(rv_eq(rv_mul(i, j), k));
    CHECK(rv_eq(rv_mul(j, i), rv_neg(k)));
    CHECK(rv_eq(rv_mul(i, i), rv_from_int(RingId::QuaternionRat, -1)));
    RingValue q{RingId::QuaternionRat, QR{Rat(1), Rat(2), Rat(3), Rat(4)}};
    CHECK(rv_eq(rv_norm(q), rv(RingId::QuaternionRat, 30)));
    CHECK(rv_eq(rv_mul(rv_conj(q), q), rv(RingId::QuaternionRat, 30)));
    CHECK(!ring_is_commutative(RingId::QuaternionRat));
    CHECK(ring_is_associative(RingId::QuaternionRat));
}

TEST_CASE("octonions: Cayley-Dickson table, nonassociativity, norm product rule") {
    auto unit = [](int idx) {
        std::array<double, 8> c{};
        c[static_cast<size_t>(idx)] = 1.0;
        return RingValue{RingId::Octonion, Octonion::from_components(c)};
    };
    // (i,0)(0,1) = (0,i) in pair form.
    CHECK(rv_eq(rv_mul(unit(1), unit(4)), unit(5)));
    CHECK(rv_eq(rv_mul(unit(1), unit(1)), rv_from_int(RingId::Octonion, -1)));
    // Associator does not vanish: (e1 e2) e4 vs e1 (e2 e4).
    RingValue lhs = rv_mul(rv_mul(unit(1), unit(2)), unit(4));
    RingValue rhs = rv_mul(unit(1), rv_mul(unit(2), unit(4)));
    CHECK(!rv_eq(lhs, rhs));
    CHECK(!ring_is_associative(RingId::Octonion));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<double, 8> pa{}, pb{};
        for (double& x : pa) x = unif(rng);
        for (double& x : pb) x = unif(rng);
        Octonion p = Octonion::from_components(pa), q = Octonion::from_components(pb);
        RingValue P{RingId::Octonion, p}, Q{RingId::Octonion, q};
        double np = std::get<Octonion>(rv_norm(P).v).components()[0];
        double nq = std::get<Octonion>(rv_norm(Q).v).components()[0];
        double npq = std::get<Octonion>(rv_norm(rv_mul(P, Q)).v).components()[0];
        CHECK(npq == doctest::Approx(np * nq).epsilon(1e-10));
        // Alternative law: x(xy) = (xx)y.
        RingValue alt_l = rv_mul(P, rv_mul(P, Q));
        RingValue alt_r = rv_mul(rv_mul(P, P), Q);
        auto dl = std::get<Octonion>(alt_l.v).components();
        auto dr = std::get<Octonion>(alt_r.v).components();
        for (size_t m = 0; m < 8; ++m) CHECK(dl[m] == doctest::Approx(dr[m]).epsilon(1e-10));
    }
}

TEST_CASE("polynomials: expansion, exact division, substitution, canonical print") {
    RingValue x{RingId::Poly, Poly::variable("x")};
    RingValue y{RingId::Poly, Poly::variable("y")};
    RingValue sum = rv_add(x, y);
    RingValue sq = rv_mul(sum, sum);
    RingValue expanded = rv_add(rv_add(rv_mul(x, x), rv_mul(y, y)),
                                rv_mul(rv_from_int(RingId::Poly, 2), rv_mul(x, y)));
    CHECK(rv_eq(sq, expanded));
    CHECK(rv_str(sq) == "x^2 + 2 x y + y^2");
    RingValue diff = rv_sub(rv_mul(x, x), rv_mul(y, y));
    CHECK(rv_eq(rv_div_exact(diff, rv_sub(x, y)), sum));
    Poly p = std::get<Poly>(sq.v);
    std::map<uint32_t, Rat> at{{poly_intern_var("x"), Rat(2)}, {poly_intern_var("y"), Rat(3)}};
    CHECK(p.substitute(at) == Rat(25));
    CHECK(ring_is_commutative(RingId::Poly));
    CHECK(rv_eq(rv_conj(sq), sq));
}

TEST_CASE("free algebra: noncommutative words with star involution") {
    RingValue x{RingId::Free, FreeElt::generator("x")};
    RingValue y{RingId::Free, FreeElt::generator("y")};
    CHECK(!rv_eq(rv_mul(x, y), rv_mul(y, x)));
    // (x y)* = y* x*.
    RingValue prod_conj = rv_conj(rv_mul(x, y));
    RingValue rev = rv_mul(rv_conj(y), rv_conj(x));
    CHECK(rv_eq(prod_conj, rev));
    CHECK(rv_eq(rv_conj(rv_conj(x)), x));
    RingValue two_xy = rv_add(rv_mul(x, y), rv_mul(x, y));
    CHECK(rv_str(two_xy) == "2 x y");
    CHECK(!ring_is_commutative(RingId::Free));
    CHECK(ring_is_exact(RingId::Free));
}

TEST_CASE("ring registry and guard rails") {
    for (RingId id : {RingId::Rational, RingId::Gaussian, RingId::Complex64,
                      RingId::QuaternionRat, RingId::Quaternion64, RingId::Octonion,
                      RingId::Poly, RingId::Free}) {
        CHECK(ring_from_name(ring_name(id)) == id);
        CHECK(rv_is_one(rv_one(id)));
        CHECK(rv_is_zero(rv_zero(id)));
        CHECK(rv_eq(rv_mul(rv_one(id), rv_from_int(id, 3)), rv_from_int(id, 3)));
    }
    CHECK(ring_has_exact_division(RingId::Rational));
    CHECK(ring_has_exact_division(RingId::Poly));
    CHECK(!ring_has_exact_division(RingId::Octonion));
    CHECK(ring_has_exact_norm(RingId::QuaternionRat));
    CHECK_THROWS_AS(rv_add(rv_one(RingId::Rational), rv_one(RingId::Poly)), RingMismatch);
    CHECK_THROWS_AS(ring_from_name("sedenion"), UnsupportedRing);
}
