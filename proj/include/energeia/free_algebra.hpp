#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace energeia {

// Word over generators and their stars: entry +k is generator k, -k its star.
// Generator ids start at 1.
using Word = std::vector<int32_t>;

int32_t free_intern_gen(const std::string& name);
std::string free_gen_name(int32_t id);

struct FreeTerm {
    Word word;
    long long coeff;
    friend bool operator==(const FreeTerm& a, const FreeTerm& b) {
        return a.word == b.word && a.coeff == b.coeff;
    }
};

// Integer-coefficient element of the free *-algebra. Normal form: terms sorted
// by (word length, lex), no zero coefficients — equality is decidable by lists.
class FreeElt {
public:
    std::vector<FreeTerm> terms;

    FreeElt() = default;
    static FreeElt constant(long long c);
    static FreeElt generator(int32_t id);       // id > 0
    static FreeElt generator(const std::string& name);

    bool is_zero() const { return terms.empty(); }
    bool is_one() const;

    friend FreeElt operator+(const FreeElt& a, const FreeElt& b);
    friend FreeElt operator-(const FreeElt& a, const FreeElt& b);
    friend FreeElt operator*(const FreeElt& a, const FreeElt& b); // no commuting
    FreeElt operator-() const;
    friend bool operator==(const FreeElt& a, const FreeElt& b) { return a.terms == b.terms; }

    // Antihomomorphic involution: (ab)* = b* a*, generator <-> starred generator.
    FreeElt conj() const;

    std::string str() const;
};

} // namespace energeia
