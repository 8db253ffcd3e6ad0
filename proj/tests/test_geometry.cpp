#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "energeia/geometry.hpp"

#include <random>

using namespace energeia;

namespace {

std::vector<std::vector<int>> raw(const Geometry& g) {
    std::vector<std::vector<int>> out;
    for (const auto& s : g.simplices) out.push_back(s.v);
    return out;
}

} // namespace

TEST_CASE("parsing sorts labels, orders canonically, flags closure") {
    Geometry g = parse_geometry({{2, 1}, {2}, {1}});
    CHECK(raw(g) == std::vector<std::vector<int>>{{1}, {2}, {1, 2}});
    CHECK(g.is_complex);
    Geometry open = parse_geometry({{1}, {2}, {1, 2, 3}});
    CHECK(!open.is_complex);
    CHECK(open.size() == 3);
    CHECK_THROWS_AS(parse_geometry({{0, 1}}), InvalidLabel);
    CHECK_THROWS_AS(parse_geometry({{}}), InvalidSimplex);
    CHECK(make_simplex({3, 1, 3}).v == std::vector<int>{1, 3});
}

TEST_CASE("canonical order: cardinality first, then lexicographic") {
    Geometry g = generate_complete(3);
    CHECK(raw(g) == std::vector<std::vector<int>>{
                        {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
    for (size_t i = 0; i < g.size(); ++i)
        CHECK(g.index_of(g.simplices[i]) == static_cast<long>(i));
    CHECK(g.index_of(make_simplex({4})) == -1);
}

TEST_CASE("downward closure completes a bare top cell") {
    Geometry g = downward_closure(parse_geometry({{1, 2, 3}}));
    CHECK(g.size() == 7);
    CHECK(g.is_complex);
    CHECK(g == generate_complete(3));
    // Closure is idempotent and fixes complexes.
    CHECK(downward_closure(g) == g);
}

TEST_CASE("star and core are the non-strict over/under sets") {
    Geometry k2 = parse_geometry({{1}, {2}, {1, 2}});
    auto st = star(k2, make_simplex({1}));
    REQUIRE(st.size() == 2);
    CHECK(st[0].v == std::vector<int>{1});
    CHECK(st[1].v == std::vector<int>{1, 2});
    auto co = core(k2, make_simplex({1, 2}));
    CHECK(co.size() == 3);
    CHECK(core(k2, make_simplex({1})).size() == 1);
}

TEST_CASE("omega is the dimension parity") {
    CHECK(omega_sign(make_simplex({4})) == 1);
    CHECK(omega_sign(make_simplex({1, 5})) == -1);
    CHECK(omega_sign(make_simplex({1, 2, 3})) == 1);
}

TEST_CASE("f-vector with and without the void element") {
    FVector f = f_vector(generate_complete(3));
    CHECK(f.min_dim == 0);
    CHECK(f.counts == std::vector<long>{3, 3, 1});
    ExtendedGeometry ext = extend(generate_complete(3));
    ext.has_void = true;
    FVector fe = f_vector(ext);
    CHECK(fe.min_dim == -1);
    CHECK(fe.counts == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("complement dual is involutive and swaps f-vector ends") {
    Geometry g = parse_geometry({{1}, {2}, {1, 2}});
    ExtendedGeometry d = complement_dual(g);
    // Complements of {1},{2},{1,2} in {1,2} are {2},{1},void.
    CHECK(d.has_void);
    REQUIRE(d.simplices.size() == 2);
    CHECK(d.simplices[0].v == std::vector<int>{1});
    CHECK(d.simplices[1].v == std::vector<int>{2});
    ExtendedGeometry dd = complement_dual(d);
    CHECK(!dd.has_void);
    REQUIRE(dd.simplices.size() == 3);
    CHECK(dd.simplices[2].v == std::vector<int>{1, 2});

    FVector f = f_vector(extend(generate_complete(4)));
    FVector fd = f_vector(complement_dual(generate_complete(4)));
    std::vector<long> rev(fd.counts.rbegin(), fd.counts.rend());
    CHECK(rev == f.counts);
}

TEST_CASE("parity count splits the interval by dimension parity") {
    auto [evens, odds] = parity_count(make_simplex({1, 2, 3, 4}), make_simplex({1}));
    CHECK(evens == 4);
    CHECK(odds == 4);
    // y = x leaves the single simplex x itself.
    auto [e2, o2] = parity_count(make_simplex({1, 2}), make_simplex({1, 2}));
    CHECK(e2 + o2 == 1);
    CHECK_THROWS_AS(parity_count(make_simplex({1, 2}), make_simplex({3})), NotASubset);
}

TEST_CASE("whitney complex of a path has no filled triangle") {
    Geometry g = generate_whitney({{1, 2}, {2, 3}});
    CHECK(raw(g) == std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {2, 3}});
    Geometry tri = generate_whitney({{1, 2}, {2, 3}, {1, 3}});
    CHECK(tri.size() == 7); // the 3-clique fills in
    CHECK(tri == generate_complete(3));
}

TEST_CASE("random generator is deterministic in the seed and downward closed") {
    Geometry a = generate_random(5, 0.5, 42);
    Geometry b = generate_random(5, 0.5, 42);
    CHECK(a == b);
    CHECK(a.is_complex);
    Geometry c = generate_random(5, 0.5, 43);
    CHECK(a.size() >= 1);
    // A different seed changes the draw essentially always; tolerate equality
    // only through the equality operator (no crash either way).
    (void)c;
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_real_distribution<double> dens(0.1, 0.9);
        Geometry r = generate_random(1 + static_cast<int>(rng() % 6), dens(rng), rng());
        CHECK(downward_closure(r) == r);
    }
}
