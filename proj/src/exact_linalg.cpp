#include "energeia/exact_linalg.hpp"

#include "energeia/errors.hpp"

#include <algorithm>

namespace energeia {

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat UniPoly::eval(const Rat& t) const {
    Rat v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
    return v;
}

UniPoly upoly_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

UniPoly upoly_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

UniPoly upoly_mul(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

UniPoly upoly_derivative(const UniPoly& p) {
    UniPoly r;
    for (size_t i = 1; i < p.c.size(); ++i) r.c.push_back(p.c[i] * Rat(static_cast<long>(i)));
    r.trim();
    return r;
}

namespace {

// Division with remainder; returns quotient, leaves remainder in a.
UniPoly divmod(UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw SingularOperator("polynomial division by zero");
    UniPoly q;
    if (a.c.size() >= b.c.size()) q.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
    while (!a.is_zero() && a.c.size() >= b.c.size()) {
        size_t shift = a.c.size() - b.c.size();
        Rat f = a.c.back() / b.c.back();
        q.c[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= f * b.c[i];
        a.trim();
    }
    q.trim();
    return q;
}

int sgn(const Rat& r) { return sgn(r.get_num()); }

long variations(const std::vector<int>& signs) {
    long v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Sturm chain; returns the number of distinct real roots in (0, inf) and
// (-inf, 0). p must be nonconstant and squarefree-ish (repeated roots only
// shrink the chain, counts stay distinct-root counts).
std::pair<long, long> sturm_distinct(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(upoly_derivative(p));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly a = chain[chain.size() - 2];
        divmod(a, chain.back());
        for (auto& x : a.c) x = -x;
        a.trim();
        if (a.is_zero()) break;
        chain.push_back(std::move(a));
    }
    std::vector<int> at_zero, at_pinf, at_minf;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        at_zero.push_back(q.c.front() == 0 ? 0 : sgn(q.c.front()));
        int lead = sgn(q.c.back());
        at_pinf.push_back(lead);
        at_minf.push_back(q.degree() % 2 == 0 ? lead : -lead);
    }
    // Roots in (a, b] = V(a) - V(b); (0, inf) misses nothing since roots are
    // finite, and a root at 0 is excluded from both intervals by the caller.
    long pos = variations(at_zero) - variations(at_pinf);
    long neg = variations(at_minf) - variations(at_zero);
    return {pos, neg};
}

} // namespace

UniPoly upoly_rem(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    divmod(r, b);
    return r;
}

UniPoly upoly_div_exact(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    UniPoly q = divmod(r, b);
    if (!r.is_zero()) throw SingularOperator("inexact polynomial division");
    return q;
}

UniPoly upoly_gcd(UniPoly a, UniPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        UniPoly r = upoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) {
            Rat lead = b.c.back();
            for (auto& x : b.c) x /= lead;
        }
    }
    if (!a.is_zero()) {
        Rat lead = a.c.back();
        for (auto& x : a.c) x /= lead;
    }
    return a;
}

UniPoly charpoly_rational(const SquareMatrix& m) {
    if (m.ring != RingId::Rational)
        throw UnsupportedRing("characteristic polynomial needs the rational ring");
    size_t n = m.n;
    std::vector<Rat> a(n * n), work(n * n), next(n * n);
    for (size_t i = 0; i < n * n; ++i) a[i] = std::get<Rat>(m.a[i].v);
    UniPoly p;
    p.c.assign(n + 1, Rat(0));
    p.c[n] = 1;
    if (n == 0) return p;
    // work holds A*M_k; M_1 = I so start with A itself.
    work = a;
    Rat tr(0);
    for (size_t i = 0; i < n; ++i) tr += work[i * n + i];
    p.c[n - 1] = -tr;
    for (size_t k = 2; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} I; then A*M_k and its trace.
        std::vector<Rat> mk = work;
        for (size_t i = 0; i < n; ++i) mk[i * n + i] += p.c[n - k + 1];
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rat s(0);
                for (size_t t = 0; t < n; ++t) s += a[i * n + t] * mk[t * n + j];
                next[i * n + j] = s;
            }
        std::swap(work, next);
        tr = 0;
        for (size_t i = 0; i < n; ++i) tr += work[i * n + i];
        p.c[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return p;
}

bool is_reciprocal_charpoly(const UniPoly& p) {
    if (p.is_zero()) return false;
    size_t n = p.degree();
    for (size_t k = 0; k <= n; ++k) {
        Rat mirror = p.c[n - k];
        if (n % 2 == 1) mirror = -mirror;
        if (p.c[k] != mirror) return false;
    }
    return true;
}

RootCounts descartes_root_counts(const UniPoly& p) {
    RootCounts rc;
    if (p.is_zero()) return rc;
    size_t low = 0;
    while (low < p.c.size() && p.c[low] == 0) ++low;
    rc.zero = static_cast<long>(low);
    std::vector<int> pos_signs, neg_signs;
    for (size_t i = low; i < p.c.size(); ++i) {
        int s = p.c[i] == 0 ? 0 : sgn(p.c[i]);
        pos_signs.push_back(s);
        neg_signs.push_back((i - low) % 2 == 0 ? s : -s);
    }
    rc.positive = variations(pos_signs);
    rc.negative = variations(neg_signs);
    return rc;
}

RootCounts sturm_root_counts(const UniPoly& p) {
    RootCounts rc;
    if (p.is_zero()) return rc;
    UniPoly q = p;
    size_t low = 0;
    while (low < q.c.size() && q.c[low] == 0) ++low;
    rc.zero = static_cast<long>(low);
    q.c.erase(q.c.begin(), q.c.begin() + static_cast<long>(low));
    // Each gcd(q, q') layer drops every multiplicity by one, so summing the
    // distinct-root counts of the layers counts roots with multiplicity.
    while (!q.is_zero() && q.degree() > 0) {
        auto [pos, neg] = sturm_distinct(q);
        rc.positive += pos;
        rc.negative += neg;
        q = upoly_gcd(q, upoly_derivative(q));
    }
    return rc;
}

RootCounts inertia_congruence(const SquareMatrix& m) {
    if (m.ring != RingId::Rational)
        throw UnsupportedRing("congruence inertia needs the rational ring");
    size_t n = m.n;
    std::vector<Rat> a(n * n);
    for (size_t i = 0; i < n * n; ++i) a[i] = std::get<Rat>(m.a[i].v);
    auto at = [&a, n](size_t i, size_t j) -> Rat& { return a[i * n + j]; };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (at(i, j) != at(j, i)) throw NotSelfAdjoint("matrix is not symmetric");
    RootCounts rc;
    std::vector<size_t> active(n);
    for (size_t i = 0; i < n; ++i) active[i] = i;
    while (!active.empty()) {
        size_t pivot = active.size();
        for (size_t idx = 0; idx < active.size(); ++idx)
            if (at(active[idx], active[idx]) != 0) {
                pivot = idx;
                break;
            }
        if (pivot == active.size()) {
            size_t pi = active.size(), pj = active.size();
            for (size_t x = 0; x < active.size() && pi == active.size(); ++x)
                for (size_t y = x + 1; y < active.size(); ++y)
                    if (at(active[x], active[y]) != 0) {
                        pi = x;
                        pj = y;
                        break;
                    }
            if (pi == active.size()) {
                rc.zero += static_cast<long>(active.size());
                break;
            }
            // Zero diagonal: the congruence row_i += row_j / col_i += col_j
            // puts 2*a_ij (nonzero) on the diagonal without changing inertia.
            size_t i = active[pi], j = active[pj];
            for (size_t c = 0; c < n; ++c) at(i, c) += at(j, c);
            for (size_t r = 0; r < n; ++r) at(r, i) += at(r, j);
            pivot = pi;
        }
        size_t k = active[pivot];
        Rat d = at(k, k);
        if (d > 0)
            ++rc.positive;
        else
            ++rc.negative;
        active.erase(active.begin() + static_cast<long>(pivot));
        for (size_t x : active) {
            if (at(x, k) == 0) continue;
            Rat f = at(x, k) / d;
            for (size_t y : active) at(x, y) -= f * at(k, y);
            at(x, k) = 0;
        }
        for (size_t y : active) at(k, y) = 0;
    }
    return rc;
}

size_t rank_rational(const std::vector<std::vector<Rat>>& rows) {
    std::vector<std::vector<Rat>> a = rows;
    size_t nr = a.size();
    size_t nc = nr == 0 ? 0 : a[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < nc && rank < nr; ++col) {
        size_t p = rank;
        while (p < nr && a[p][col] == 0) ++p;
        if (p == nr) continue;
        std::swap(a[p], a[rank]);
        for (size_t i = rank + 1; i < nr; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (size_t j = col; j < nc; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace energeia
