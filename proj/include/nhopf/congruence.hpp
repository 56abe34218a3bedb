#pragma once

// Operad congruences on terms, given by local rewriting moves that preserve
// degree, and the Hopf subalgebra spanned by congruence class sums.
//
// The exchange congruence swaps a node with one of its children: the local
// pattern g with g' in slot i becomes g' with g in slot i', and the n+m-1
// remaining subtrees re-hang left to right onto the remaining slots left to
// right.  Its classes are exactly the terms with a fixed multiset of
// decorations, and the quotient operad is the multiset instance of
// operad.hpp.

#include <functional>

#include "nhopf/hopf.hpp"

namespace nhopf {

class Congruence {
public:
    virtual ~Congruence() = default;
    virtual const Signature& signature() const = 0;
    // one-step rewrites of t (its congruence neighbours)
    virtual std::vector<Term> moves(const Term& t) const = 0;
    // a cheap class invariant; equal keys is necessary for equivalence and
    // for the exchange congruence it is exact
    virtual std::string class_key(const Term& t) const = 0;
};

class ExchangeCongruence : public Congruence {
public:
    explicit ExchangeCongruence(Signature sig) : sig_(std::move(sig)) {}
    const Signature& signature() const override { return sig_; }
    std::vector<Term> moves(const Term& t) const override;
    std::string class_key(const Term& t) const override;  // sorted decoration multiset

private:
    Signature sig_;
};

inline constexpr size_t kDefaultClassCap = 100000;

// Breadth-first closure under moves; throws when it exceeds cap.
std::vector<Term> class_elements(const Congruence& cong, const Term& t, size_t cap = kDefaultClassCap);
std::vector<Forest> forest_class(const Congruence& cong, const Forest& f, size_t cap = kDefaultClassCap);
Term canonical_rep(const Congruence& cong, const Term& t, size_t cap = kDefaultClassCap);
Forest canonical_rep(const Congruence& cong, const Forest& f, size_t cap = kDefaultClassCap);

// Sum of E_{f'} over the class of f.
HopfElement e_class(const Congruence& cong, const Forest& f, size_t cap = kDefaultClassCap);

// The multiset-instance word matching the class of f (one multiset per term).
Word multi_word_of(const Forest& f);

// A representative term with the given decoration multiset (a left chain),
// the class of forests matching a whole multiset word, and its E sum.
Term multiset_rep_term(const Signature& sig, const OperadElement& m);
std::vector<Forest> multiset_class(const Congruence& cong, const Word& multi_word,
                                   size_t cap = kDefaultClassCap);
HopfElement multiset_class_sum(const Congruence& cong, const Word& multi_word,
                               size_t cap = kDefaultClassCap);

struct SubalgebraReport {
    bool ok = true;
    std::string detail;                    // first failure, empty when ok
    // induced coproduct structure constants on class sums, by canonical reps
    std::map<std::string, std::map<std::pair<std::string, std::string>, Coeff>> coproduct_constants;
};

// Checks, for every class representative up to max_degree, that products and
// coproducts of class sums are integer combinations of class sums, and
// records the induced constants.
SubalgebraReport subalgebra_check(const Congruence& cong, int max_degree, size_t cap = kDefaultClassCap);

}  // namespace nhopf
