#include "energeia/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "energeia/errors.hpp"

namespace energeia {

namespace {

std::mutex var_mutex;
std::vector<std::string> var_names;
std::unordered_map<std::string, uint32_t> var_ids;

// Merge two sorted id lists (monomial product).
Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Multiset divisibility; quotient is written to *q when divisible.
bool mono_divides(const Monomial& den, const Monomial& num, Monomial* q) {
    q->clear();
    size_t i = 0;
    for (uint32_t v : num) {
        if (i < den.size() && den[i] == v) {
            ++i;
        } else if (i < den.size() && den[i] < v) {
            return false;
        } else {
            q->push_back(v);
        }
    }
    return i == den.size();
}

void sort_combine(std::vector<PolyTerm>& ts) {
    std::sort(ts.begin(), ts.end(), [](const PolyTerm& x, const PolyTerm& y) {
        return MonoLess{}(x.mono, y.mono);
    });
    std::vector<PolyTerm> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    ts = std::move(out);
}

} // namespace

uint32_t poly_intern_var(const std::string& name) {
    std::lock_guard<std::mutex> lk(var_mutex);
    auto it = var_ids.find(name);
    if (it != var_ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(var_names.size());
    var_names.push_back(name);
    var_ids.emplace(name, id);
    return id;
}

std::string poly_var_name(uint32_t id) {
    std::lock_guard<std::mutex> lk(var_mutex);
    if (id >= var_names.size()) throw Error("unknown variable id");
    return var_names[id];
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (c != 0) p.terms.push_back({{}, c});
    return p;
}

Poly Poly::variable(uint32_t id) {
    Poly p;
    p.terms.push_back({{id}, Rat(1)});
    return p;
}

Poly Poly::variable(const std::string& name) {
    return variable(poly_intern_var(name));
}

bool Poly::is_one() const {
    return terms.size() == 1 && terms[0].mono.empty() && terms[0].coeff == 1;
}

int Poly::degree() const {
    if (terms.empty()) return -1;
    return static_cast<int>(terms.back().mono.size());
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    MonoLess less;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (less(a.terms[i].mono, b.terms[j].mono)) {
            out.terms.push_back(a.terms[i++]);
        } else if (less(b.terms[j].mono, a.terms[i].mono)) {
            out.terms.push_back(b.terms[j++]);
        } else {
            Rat c = a.terms[i].coeff + b.terms[j].coeff;
            if (c != 0) out.terms.push_back({a.terms[i].mono, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms) t.coeff = -t.coeff;
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<PolyTerm> prod;
    prod.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            prod.push_back({mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
    sort_combine(prod);
    Poly out;
    out.terms = std::move(prod);
    return out;
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw SingularOperator("polynomial division by zero");
    Poly rem = num;
    std::vector<PolyTerm> quot; // produced with strictly decreasing leading terms
    const PolyTerm& dlt = den.terms.back();
    while (!rem.is_zero()) {
        const PolyTerm& rlt = rem.terms.back();
        Monomial q;
        if (!mono_divides(dlt.mono, rlt.mono, &q))
            throw SingularOperator("inexact polynomial division");
        Poly t;
        t.terms.push_back({std::move(q), rlt.coeff / dlt.coeff});
        quot.push_back(t.terms[0]);
        rem = rem - t * den;
    }
    std::reverse(quot.begin(), quot.end());
    Poly out;
    out.terms = std::move(quot);
    return out;
}

Rat Poly::substitute(const std::map<uint32_t, Rat>& values) const {
    Rat total(0);
    for (const auto& t : terms) {
        Rat v = t.coeff;
        for (uint32_t id : t.mono) {
            auto it = values.find(id);
            if (it == values.end()) throw Error("substitute: missing variable value");
            v *= it->second;
        }
        total += v;
    }
    return total;
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms) {
        Rat a = abs(t.coeff);
        bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        bool coeff_shown = t.mono.empty() || a != 1;
        if (coeff_shown) s += rat_to_string(a);
        size_t i = 0;
        while (i < t.mono.size()) {
            size_t j = i;
            while (j < t.mono.size() && t.mono[j] == t.mono[i]) ++j;
            if (coeff_shown || i > 0) s += " ";
            coeff_shown = true; // separators needed from now on
            s += poly_var_name(t.mono[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
    }
    return s;
}

} // namespace energeia
