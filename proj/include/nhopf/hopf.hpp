#pragma once

// The graded connected Hopf algebra spanned by reduced words over an operad
// instance.  Basis elements are reduced words; the product concatenates, the
// coproduct of a word is the componentwise tensor product of the letters'
// coproducts, and each letter's coproduct is a sum over its factorizations
// (y, w) of  reduced(y) (x) reduced(w).  The antipode comes from the usual
// recursion in a graded connected bialgebra.
//
// Coefficients are exact integers (GMP).  No operation here divides, so no
// rational type is ever needed; the antipode recursion only adds, negates
// and multiplies previously computed integer combinations.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "nhopf/operad.hpp"

namespace nhopf {

using Coeff = mpz_class;

enum class Basis { E, F, H };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        size_t n = std::min(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            std::string x = a[i].str(), y = b[i].str();
            if (x != y) return x < y;
        }
        return a.size() < b.size();
    }
};

class HopfElement {
public:
    HopfElement() = default;
    explicit HopfElement(Basis b) : basis_(b) {}

    Basis basis() const { return basis_; }
    void set_basis(Basis b) { basis_ = b; }
    const std::map<Word, Coeff, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Word& w, const Coeff& c);
    Coeff coeff(const Word& w) const;

    HopfElement& operator+=(const HopfElement& o);
    HopfElement& operator-=(const HopfElement& o);
    HopfElement& operator*=(const Coeff& c);
    friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
    friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
    friend HopfElement operator*(const Coeff& c, HopfElement a) { return a *= c; }
    bool operator==(const HopfElement& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }
    bool operator!=(const HopfElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    Basis basis_ = Basis::E;
    std::map<Word, Coeff, WordLess> terms_;
};

struct WordPairLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        WordLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

class TensorElement {
public:
    const std::map<std::pair<Word, Word>, Coeff, WordPairLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Word& left, const Word& right, const Coeff& c);
    Coeff coeff(const Word& left, const Word& right) const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<std::pair<Word, Word>, Coeff, WordPairLess> terms_;
};

class NaturalHopf {
public:
    explicit NaturalHopf(Operad op) : op_(std::move(op)) {}
    const Operad& operad() const { return op_; }

    HopfElement e(const Word& w) const;  // basis element; the word must be reduced
    HopfElement one() const;             // E of the empty word

    long word_degree(const Word& w) const { return op_.word_degree(w); }
    std::map<long, HopfElement> degree_components(const HopfElement& x) const;

    HopfElement product(const HopfElement& x, const HopfElement& y) const;
    TensorElement coproduct(const HopfElement& x) const;
    TensorElement coproduct_word(const Word& w) const;
    Coeff counit(const HopfElement& x) const;
    HopfElement antipode(const HopfElement& x) const;

private:
    Operad op_;
};

}  // namespace nhopf
