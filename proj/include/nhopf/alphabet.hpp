#pragma once

// Polynomial realization: forests expand into sums of words over a related
// alphabet (letters with a root subset, per-generator decoration sets and
// one edge relation per child slot).  A letter word w is compatible with a
// reduced forest f when |w| = dg(f), letters sit in the decoration sets of
// the preorder nodes, root nodes get root letters, and each tree edge in
// slot j links its letters by the j-th relation.  realize(E_f) is the sum
// of all compatible words.
//
// The disjoint sum of two alphabets adds every cross edge a -> b with
// a from the left part and b a root of the right part; splitting each
// monomial of a realization over the sum by letter membership computes the
// coproduct (the doubling identity), which the tests exercise.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nhopf/hopf.hpp"

namespace nhopf {

struct RelatedAlphabet {
    std::vector<std::string> letters;
    std::set<std::string> roots;
    std::map<std::string, std::set<std::string>> decorations;  // generator -> allowed letters
    std::map<int, std::set<std::pair<std::string, std::string>>> edges;  // slot j -> pairs

    bool has_letter(const std::string& a) const;
    bool is_root(const std::string& a) const { return roots.count(a) != 0; }
    bool allows(const std::string& gen, const std::string& a) const;
    bool has_edge(int j, const std::string& a, const std::string& b) const;
    void validate() const;  // letters unique; roots/decorations/edges use known letters
};

using LetterWord = std::vector<std::string>;

class NCPolynomial {
public:
    const std::map<LetterWord, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const LetterWord& w, const Coeff& c);
    Coeff coeff(const LetterWord& w) const;

    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    NCPolynomial& operator*=(const Coeff& c);
    NCPolynomial operator*(const NCPolynomial& o) const;  // concatenation product
    bool operator==(const NCPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPolynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<LetterWord, Coeff> terms_;
};

bool compatible(const Signature& sig, const LetterWord& w, const Forest& f, const RelatedAlphabet& A);
NCPolynomial realize_forest(const Signature& sig, const Forest& f, const RelatedAlphabet& A);
// x must be in the E basis over the free instance
NCPolynomial realize(const Signature& sig, const HopfElement& x, const RelatedAlphabet& A);

// Disjoint sum.  When letter sets collide, every left letter gets suffix ~1
// and every right letter ~2; the returned left/right alphabets reflect that.
// Cross edges are added for the slots 1..max_slot.
struct DisjointSum {
    RelatedAlphabet sum, left, right;
};
DisjointSum disjoint_sum(const RelatedAlphabet& a, const RelatedAlphabet& b, int max_slot);

// Split every monomial over a disjoint sum into its left and right subwords.
using TensorPoly = std::map<std::pair<LetterWord, LetterWord>, Coeff>;
TensorPoly theta_split(const NCPolynomial& p, const std::set<std::string>& left_letters,
                       const std::set<std::string>& right_letters);

// The address alphabet: letters (g, u) with u a word of slot indices padded
// by zeros, serialized "g" for the empty address and "g:0.1.0" otherwise.
// Truncation keeps |u| <= M with entries <= max(L, largest arity); roots are
// the all-zero addresses, and (g, u) -> (g', u.j.0^l) in slot j.
std::string address_letter(const std::string& gen, const std::vector<int>& addr);
RelatedAlphabet canonical_alphabet(const Signature& sig, int L, int M);

// Totally ordered level alphabet: letters "g:0".."g:bound-1" for each
// generator, decoration sets by generator, all letters roots, and every
// slot relation i < i'.
RelatedAlphabet level_alphabet(const Signature& sig, int bound);

}  // namespace nhopf
