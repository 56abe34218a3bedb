#pragma once

// Packed words and the M-basis view of word quasi-symmetric functions.
// A reduced forest expands as the sum of the packed words compatible with
// its edges (strict increase along every edge); each packed word realizes
// over a totally ordered alphabet as the sum of words packing to it.

#include <map>
#include <string>
#include <vector>

#include "nhopf/alphabet.hpp"

namespace nhopf {

using PackedWord = std::vector<int>;

PackedWord pack(const std::vector<int>& w);
bool is_packed(const std::vector<int>& w);
std::vector<PackedWord> packed_words(int n);

// digit string when every letter is <= 9, else comma-separated
std::string packed_word_str(const PackedWord& u);
PackedWord parse_packed_word(const std::string& text);

bool wqsym_compatible(const PackedWord& u, const Forest& f);
std::map<PackedWord, Coeff> wqsym_expansion(const Signature& sig, const Forest& f);

// sum of all words over the letters (given in increasing order) whose
// packing is u
NCPolynomial wqsym_realize_m(const PackedWord& u, const std::vector<std::string>& ordered_letters);

// alphabet with every letter a root, every decoration set full, and each
// slot relation the strict order given by the letter sequence
RelatedAlphabet total_order_alphabet(const Signature& sig, const std::vector<std::string>& ordered_letters);

}  // namespace nhopf
