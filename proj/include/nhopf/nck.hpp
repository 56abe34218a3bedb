#pragma once

// Decorated forests (words of nonempty planar rooted trees, every node a
// vertex carrying a label) and their coproduct by admissible cuts.  A
// decorated forest is stored as a Forest whose terms carry plain labels and
// have no leaves; it corresponds to the reduced forest over the signature
// with one generator "d#n" of arity n per label d and child count n.  The
// cut coproduct is computed directly by recursion on the trees and serves
// as an oracle for the factorization coproduct transported through that
// correspondence.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nhopf/alphabet.hpp"

namespace nhopf {

// forest of leafless trees with plain labels; rejects "*"
Forest parse_decorated_forest(const std::string& text);
void validate_decorated(const Forest& f);

std::vector<std::string> decorated_labels(const Forest& f);
long max_child_count(const Forest& f);

// all decorated forests with exactly the given vertex count, canonical order
std::vector<Forest> decorated_forests(const std::vector<std::string>& labels, int vertices);

// generators "d#n" of arity n for every label and every n <= max_children
Signature nck_signature(const std::vector<std::string>& labels, int max_children);
std::string nck_base(const std::string& gen_name);        // "d#n" -> "d"
int nck_child_count(const std::string& gen_name);         // "d#n" -> n

Forest nck_bijection(const Forest& decorated);             // labels -> "d#n" terms
Forest nck_inverse(const Forest& f);                       // leafless "d#n" terms -> labels
// drop leaves, relabel each node by its base; inverse of nck_bijection on
// leafless forests, collapse otherwise
Forest strip_to_decorated(const Forest& f);

using DecTensor = std::map<std::pair<Forest, Forest>, Coeff>;
std::string dec_tensor_str(const DecTensor& t);

// admissible cuts: trunk keeps the root side, crown collects the cut
// subtrees in planar order; extended to forests by componentwise
// concatenation
DecTensor nck_coproduct(const Forest& decorated);

// the factorization coproduct of the corresponding reduced forest, with
// both legs stripped back to decorated forests
DecTensor nck_coproduct_via_factorizations(const Forest& decorated);

// letters "d:0".."d:bound-1" per label; all roots; decoration sets ignore
// the child count; every slot relation is strict index increase
RelatedAlphabet decorated_alphabet(const Signature& nck_sig, int bound);

}  // namespace nhopf
