#include "energeia/geometry.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace energeia {

Simplex make_simplex(std::vector<int> labels) {
    if (labels.empty()) throw InvalidSimplex("empty vertex list");
    for (int l : labels)
        if (l <= 0) throw InvalidLabel("vertex label " + std::to_string(l));
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return Simplex{std::move(labels)};
}

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.v.size() != b.v.size()) return a.v.size() < b.v.size();
    return a.v < b.v;
}

bool simplex_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.v.begin(), b.v.end(), a.v.begin(), a.v.end());
}

bool simplex_intersects(const Simplex& a, const Simplex& b) {
    auto i = a.v.begin();
    auto j = b.v.begin();
    while (i != a.v.end() && j != b.v.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
    std::vector<int> u;
    u.reserve(a.v.size() + b.v.size());
    std::set_union(a.v.begin(), a.v.end(), b.v.begin(), b.v.end(), std::back_inserter(u));
    return Simplex{std::move(u)};
}

int omega_sign(const Simplex& x) {
    return x.dim() % 2 == 0 ? 1 : -1;
}

long Geometry::index_of(const Simplex& x) const {
    auto it = std::lower_bound(simplices.begin(), simplices.end(), x, simplex_less);
    if (it != simplices.end() && *it == x)
        return static_cast<long>(it - simplices.begin());
    return -1;
}

namespace {

std::vector<int> support_of(const std::vector<Simplex>& ss) {
    std::set<int> sup;
    for (const auto& s : ss) sup.insert(s.v.begin(), s.v.end());
    return {sup.begin(), sup.end()};
}

// Every nonempty subset of every member must be a member.
bool closed_downward(const std::vector<Simplex>& ss) {
    std::set<std::vector<int>> members;
    for (const auto& s : ss) members.insert(s.v);
    for (const auto& s : ss) {
        size_t k = s.v.size();
        for (size_t mask = 1; mask + 1 < (size_t(1) << k); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t(1) << i)) sub.push_back(s.v[i]);
            if (!members.count(sub)) return false;
        }
    }
    return true;
}

} // namespace

Geometry geometry_from_simplices(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end(), simplex_less);
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    Geometry g;
    g.vertex_support = support_of(simplices);
    g.is_complex = closed_downward(simplices);
    g.simplices = std::move(simplices);
    return g;
}

Geometry parse_geometry(const std::vector<std::vector<int>>& sets) {
    std::vector<Simplex> ss;
    ss.reserve(sets.size());
    for (const auto& s : sets) ss.push_back(make_simplex(s));
    return geometry_from_simplices(std::move(ss));
}

Geometry downward_closure(const Geometry& g) {
    std::set<std::vector<int>> members;
    for (const auto& s : g.simplices) {
        size_t k = s.v.size();
        for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t(1) << i)) sub.push_back(s.v[i]);
            members.insert(std::move(sub));
        }
    }
    std::vector<Simplex> ss;
    ss.reserve(members.size());
    for (const auto& m : members) ss.push_back(Simplex{m});
    return geometry_from_simplices(std::move(ss));
}

std::vector<Simplex> star(const Geometry& g, const Simplex& x) {
    if (!g.contains(x)) throw NotAMember("star of a non-member");
    std::vector<Simplex> out;
    for (const auto& z : g.simplices)
        if (simplex_subset(x, z)) out.push_back(z);
    return out;
}

std::vector<Simplex> core(const Geometry& g, const Simplex& x) {
    if (!g.contains(x)) throw NotAMember("core of a non-member");
    std::vector<Simplex> out;
    for (const auto& z : g.simplices)
        if (simplex_subset(z, x)) out.push_back(z);
    return out;
}

FVector f_vector(const ExtendedGeometry& g) {
    FVector f;
    if (g.simplices.empty() && !g.has_void) return f;
    int max_dim = -1;
    for (const auto& s : g.simplices) max_dim = std::max(max_dim, s.dim());
    f.min_dim = g.has_void ? -1 : 0;
    f.counts.assign(static_cast<size_t>(max_dim - f.min_dim + 1), 0);
    if (g.has_void) f.counts[0] = 1;
    for (const auto& s : g.simplices)
        f.counts[static_cast<size_t>(s.dim() - f.min_dim)] += 1;
    return f;
}

FVector f_vector(const Geometry& g) {
    return f_vector(extend(g));
}

ExtendedGeometry extend(const Geometry& g) {
    ExtendedGeometry e;
    e.simplices = g.simplices;
    e.has_void = false;
    e.ambient = g.vertex_support;
    return e;
}

namespace {

ExtendedGeometry dual_impl(const std::vector<Simplex>& simplices, bool has_void,
                           const std::vector<int>& ambient) {
    ExtendedGeometry d;
    d.ambient = ambient;
    std::set<std::vector<int>> members;
    bool void_out = false;
    auto complement = [&ambient](const std::vector<int>& x) {
        std::vector<int> c;
        std::set_difference(ambient.begin(), ambient.end(), x.begin(), x.end(),
                            std::back_inserter(c));
        return c;
    };
    for (const auto& s : simplices) {
        std::vector<int> c = complement(s.v);
        if (c.empty()) void_out = true;
        else members.insert(std::move(c));
    }
    if (has_void) {
        if (ambient.empty()) void_out = true;
        else members.insert(ambient);
    }
    std::vector<Simplex> ss;
    for (const auto& m : members) ss.push_back(Simplex{m});
    std::sort(ss.begin(), ss.end(), simplex_less);
    d.simplices = std::move(ss);
    d.has_void = void_out;
    return d;
}

} // namespace

ExtendedGeometry complement_dual(const Geometry& g) {
    return dual_impl(g.simplices, false, g.vertex_support);
}

ExtendedGeometry complement_dual(const ExtendedGeometry& g) {
    return dual_impl(g.simplices, g.has_void, g.ambient);
}

std::pair<long, long> parity_count(const Simplex& x, const Simplex& y) {
    if (!simplex_subset(y, x)) throw NotASubset("second simplex not inside first");
    std::vector<int> rest;
    std::set_difference(x.v.begin(), x.v.end(), y.v.begin(), y.v.end(),
                        std::back_inserter(rest));
    size_t d = rest.size();
    long evens = 0, odds = 0;
    for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
        int size = static_cast<int>(y.v.size()) + __builtin_popcountll(mask);
        int dim = size - 1;
        (dim % 2 == 0 ? evens : odds) += 1;
    }
    return {evens, odds};
}

Geometry generate_complete(int n) {
    std::vector<Simplex> ss;
    if (n > 0) {
        if (n > 20) throw Error("complete generator supports up to 20 vertices");
        for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) s.push_back(i + 1);
            ss.push_back(Simplex{std::move(s)});
        }
    }
    return geometry_from_simplices(std::move(ss));
}

Geometry generate_whitney(const std::vector<std::pair<int, int>>& edges) {
    std::set<int> verts;
    std::set<std::pair<int, int>> adj;
    for (auto [a, b] : edges) {
        if (a <= 0 || b <= 0) throw InvalidLabel("edge endpoint must be positive");
        if (a == b) throw InvalidSimplex("loop edge");
        verts.insert(a);
        verts.insert(b);
        adj.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<int> vs(verts.begin(), verts.end());
    if (vs.size() > 20) throw Error("whitney generator supports up to 20 vertices");
    std::vector<Simplex> ss;
    for (size_t mask = 1; mask < (size_t(1) << vs.size()); ++mask) {
        std::vector<int> s;
        for (size_t i = 0; i < vs.size(); ++i)
            if (mask & (size_t(1) << i)) s.push_back(vs[i]);
        bool clique = true;
        for (size_t i = 0; i < s.size() && clique; ++i)
            for (size_t j = i + 1; j < s.size() && clique; ++j)
                if (!adj.count({s[i], s[j]})) clique = false;
        if (clique) ss.push_back(Simplex{std::move(s)});
    }
    return geometry_from_simplices(std::move(ss));
}

Geometry generate_random(int n_vertices, double density, uint64_t seed) {
    if (n_vertices < 0) throw InvalidLabel("negative vertex count");
    if (density < 0.0 || density > 1.0) throw Error("density outside [0,1]");
    if (n_vertices == 0) return parse_geometry({});
    std::mt19937_64 rng(seed);
    auto u01 = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    int pool = 1 + static_cast<int>(density * 2.0 * n_vertices);
    std::vector<Simplex> faces;
    for (int k = 0; k < pool; ++k) {
        std::vector<int> f;
        for (int v = 1; v <= n_vertices; ++v)
            if (u01() < density) f.push_back(v);
        if (!f.empty()) faces.push_back(Simplex{std::move(f)});
    }
    return downward_closure(geometry_from_simplices(std::move(faces)));
}

} // namespace energeia
