#pragma once

// The two-parameter family built on signatures with s generators, all of
// arity r+1.  The exchange quotient there has multiset classes, and the
// class sums realize over the level alphabet (letters a_{g,i}, all roots,
// strict index increase on every slot).  For s = 1 the quotient's structure
// constants match the associative instance through the arity map
// {g^k} -> alpha_{kr+1}.

#include <string>
#include <vector>

#include "nhopf/alphabet.hpp"
#include "nhopf/congruence.hpp"
#include "nhopf/operad.hpp"

namespace nhopf {

struct FdB {
    int r = 0;
    int s = 0;
    Signature sig;
    Operad free_op;
    Operad multi_op;
    ExchangeCongruence cong;
};

FdB fdb_construct(int r, int s);

// class sum of E over every reduced forest whose per-term decoration
// multisets match the word
HopfElement fdb_class_sum(const FdB& fdb, const Word& multi_word);

// representative term for one multiset (left comb over the sorted
// generators) and the forest for a whole word
Term fdb_class_rep_term(const FdB& fdb, const OperadElement& m);
Forest fdb_class_rep(const FdB& fdb, const Word& multi_word);

struct FdbGroup {
    Forest representative;  // smallest member in canonical order
    std::vector<Forest> members;
    NCPolynomial poly;  // shared realization of one member
};
struct FdbExpansion {
    std::vector<FdbGroup> groups;  // sorted by representative
    NCPolynomial total;
};

// realize the class sum over the level alphabet and regroup the class
// members by equal polynomial
FdbExpansion fdb_expand(const FdB& fdb, const Word& multi_word, int bound);

// the word over the associative instance matching a multiset word when
// s = 1: a multiset of k generators maps to the element of arity kr+1
Word fdb_assoc_word(const FdB& fdb, const Word& multi_word);

}  // namespace nhopf
