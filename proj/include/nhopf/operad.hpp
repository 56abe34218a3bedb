#pragma once

// Graded operad instances with exhaustive factorization enumeration.
//
// Three instances share one element type:
//   free:  terms over a signature; composition is grafting.
//   assoc: one element alpha_n per arity n >= 1; alpha_1 is the unit and
//          composition adds arities:  alpha_n(alpha_m1..alpha_mn) = alpha_{sum}.
//   multi: finite multisets of generators modulo nothing but their counts;
//          arity = sum of generator arities - size + 1, composition is
//          multiset union.  This is the quotient of the free instance by the
//          exchange congruence (see congruence.hpp).
//
// factorizations(x) lists every pair (y, w) with x = y(w_1..w_ar(y)); the
// coproduct downstream is a plain sum over this list.

#include <string>
#include <variant>
#include <vector>

#include "nhopf/forest.hpp"
#include "nhopf/signature.hpp"

namespace nhopf {

enum class OperadKind { Free, Assoc, Multi };

class OperadElement {
public:
    OperadElement() : kind_(OperadKind::Assoc), n_(1) {}  // default: assoc unit

    static OperadElement free_term(Term t) {
        OperadElement e;
        e.kind_ = OperadKind::Free;
        e.term_ = std::move(t);
        return e;
    }
    static OperadElement assoc(long n);
    // counts holds the multiset sorted by generator name, positive counts only
    static OperadElement multi(std::vector<std::pair<std::string, int>> counts);

    OperadKind kind() const { return kind_; }
    const Term& term() const { return term_; }
    long assoc_n() const { return n_; }
    const std::vector<std::pair<std::string, int>>& counts() const { return counts_; }
    int multi_size() const;

    std::string str() const;
    bool operator==(const OperadElement& o) const;
    bool operator<(const OperadElement& o) const;

private:
    OperadKind kind_;
    Term term_;                                          // Free
    long n_ = 1;                                         // Assoc
    std::vector<std::pair<std::string, int>> counts_;    // Multi
};

using Word = std::vector<OperadElement>;

struct Factorization {
    OperadElement outer;
    std::vector<OperadElement> inner;  // one entry per input slot of outer
};

class Operad {
public:
    static Operad free_operad(Signature sig) { return Operad(OperadKind::Free, std::move(sig)); }
    static Operad assoc_operad() { return Operad(OperadKind::Assoc, Signature{}); }
    static Operad multi_operad(Signature sig) { return Operad(OperadKind::Multi, std::move(sig)); }

    OperadKind kind() const { return kind_; }
    const Signature& signature() const { return sig_; }

    OperadElement unit() const;
    bool is_unit(const OperadElement& x) const;
    long arity(const OperadElement& x) const;
    long degree(const OperadElement& x) const;

    OperadElement compose(const OperadElement& x, const std::vector<OperadElement>& args) const;

    // Every factorization of x, including the trivial two.  For the multi
    // instance this needs a positive signature (else the slot distributions
    // are not well-founded) and refuses otherwise.
    std::vector<Factorization> factorizations(const OperadElement& x) const;

    // Elements of a fixed degree, canonical order.  Positive signatures only
    // for free and multi.
    std::vector<OperadElement> enumerate(int degree) const;

    OperadElement parse(const std::string& text) const;
    Word parse_word(const std::string& text) const;  // whitespace-separated elements

    long word_degree(const Word& w) const;
    Word reduce_word(const Word& w) const;  // drop unit letters
    bool reduced(const Word& w) const;

private:
    Operad(OperadKind k, Signature sig);
    void check_kind(const OperadElement& x) const;

    OperadKind kind_;
    Signature sig_;
};

std::string word_str(const Word& w);  // "" for the empty word
Forest word_to_forest(const Word& w);
Word forest_to_word(const Forest& f);

}  // namespace nhopf
