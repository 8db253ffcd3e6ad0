#include "energeia/free_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "energeia/errors.hpp"

namespace energeia {

namespace {

std::mutex gen_mutex;
std::vector<std::string> gen_names;
std::unordered_map<std::string, int32_t> gen_ids;

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void sort_combine(std::vector<FreeTerm>& ts) {
    std::sort(ts.begin(), ts.end(), [](const FreeTerm& x, const FreeTerm& y) {
        return word_less(x.word, y.word);
    });
    std::vector<FreeTerm> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && out.back().word == t.word) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    ts = std::move(out);
}

} // namespace

int32_t free_intern_gen(const std::string& name) {
    std::lock_guard<std::mutex> lk(gen_mutex);
    auto it = gen_ids.find(name);
    if (it != gen_ids.end()) return it->second;
    int32_t id = static_cast<int32_t>(gen_names.size()) + 1;
    gen_names.push_back(name);
    gen_ids.emplace(name, id);
    return id;
}

std::string free_gen_name(int32_t id) {
    std::lock_guard<std::mutex> lk(gen_mutex);
    if (id <= 0 || static_cast<size_t>(id) > gen_names.size())
        throw Error("unknown generator id");
    return gen_names[static_cast<size_t>(id) - 1];
}

FreeElt FreeElt::constant(long long c) {
    FreeElt e;
    if (c != 0) e.terms.push_back({{}, c});
    return e;
}

FreeElt FreeElt::generator(int32_t id) {
    if (id <= 0) throw Error("generator id must be positive");
    FreeElt e;
    e.terms.push_back({{id}, 1});
    return e;
}

FreeElt FreeElt::generator(const std::string& name) {
    return generator(free_intern_gen(name));
}

bool FreeElt::is_one() const {
    return terms.size() == 1 && terms[0].word.empty() && terms[0].coeff == 1;
}

FreeElt operator+(const FreeElt& a, const FreeElt& b) {
    std::vector<FreeTerm> ts = a.terms;
    ts.insert(ts.end(), b.terms.begin(), b.terms.end());
    sort_combine(ts);
    FreeElt out;
    out.terms = std::move(ts);
    return out;
}

FreeElt FreeElt::operator-() const {
    FreeElt out = *this;
    for (auto& t : out.terms) t.coeff = -t.coeff;
    return out;
}

FreeElt operator-(const FreeElt& a, const FreeElt& b) {
    return a + (-b);
}

FreeElt operator*(const FreeElt& a, const FreeElt& b) {
    std::vector<FreeTerm> prod;
    prod.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            Word w = ta.word;
            w.insert(w.end(), tb.word.begin(), tb.word.end());
            prod.push_back({std::move(w), ta.coeff * tb.coeff});
        }
    }
    sort_combine(prod);
    FreeElt out;
    out.terms = std::move(prod);
    return out;
}

FreeElt FreeElt::conj() const {
    std::vector<FreeTerm> ts = terms;
    for (auto& t : ts) {
        std::reverse(t.word.begin(), t.word.end());
        for (auto& g : t.word) g = -g;
    }
    sort_combine(ts);
    FreeElt out;
    out.terms = std::move(ts);
    return out;
}

std::string FreeElt::str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms) {
        long long a = t.coeff < 0 ? -t.coeff : t.coeff;
        bool neg = t.coeff < 0;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        bool shown = t.word.empty() || a != 1;
        if (shown) s += std::to_string(a);
        for (size_t i = 0; i < t.word.size(); ++i) {
            if (shown || i > 0) s += " ";
            shown = true;
            int32_t g = t.word[i];
            s += free_gen_name(g > 0 ? g : -g);
            if (g < 0) s += "*";
        }
    }
    return s;
}

} // namespace energeia
