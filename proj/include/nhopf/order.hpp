#pragma once

// A partial order on reduced forests with a fixed preorder decoration word.
//
// The covering move detaches a subterm that has an immediate left brother
// and grafts it onto that brother's rightmost leaf.  Two cases:
//   (a) the subterm sits in slot j >= 2 of its parent; the left brother is
//       the (j-1)-st child subtree, which may be a bare leaf (then grafting
//       onto its rightmost leaf just fills the slot);
//   (b) the subterm is a whole term other than the first; the left brother
//       is the previous term of the forest.
// Moves preserve degree and the decoration word, so each word class is a
// finite poset; the interval between the all-single-nodes forest and the
// fully left-nested term is a lattice.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nhopf/forest.hpp"
#include "nhopf/hopf.hpp"

namespace nhopf {

// All covers of f (forests g with f -> g in one move), canonical order.
// Requires a positive signature and a reduced forest.
std::vector<Forest> covers(const Signature& sig, const Forest& f);

// The whole word class of w as a poset under iterated covering moves.
class WordClassPoset {
public:
    WordClassPoset(const Signature& sig, const std::vector<std::string>& word);

    const Signature& signature() const { return sig_; }
    const std::vector<std::string>& word() const { return word_; }
    const std::vector<Forest>& elements() const { return elements_; }
    const std::vector<std::vector<int>>& cover_up() const { return cover_up_; }

    int find(const Forest& f) const;  // -1 when f is not in the class
    int index_of(const Forest& f) const;  // throws when absent
    bool leq(int i, int j) const { return leq_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    Coeff moebius(int i, int j);  // 0 unless leq(i, j)

    std::vector<int> up_set(int i) const;
    std::vector<int> down_set(int i) const;

private:
    Signature sig_;
    std::vector<std::string> word_;
    std::vector<Forest> elements_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> cover_up_;
    std::vector<std::vector<bool>> leq_;
    std::map<std::pair<int, int>, Coeff> mu_;
};

bool less_equal(const Signature& sig, const Forest& f, const Forest& g);

// f_min as a forest of single-node terms, f_max as the left-nested term.
Forest minimal_forest(const Signature& sig, const std::vector<std::string>& word);
Forest maximal_forest(const Signature& sig, const std::vector<std::string>& word);

// The interval [f_min, f_max] inside the word class.  element indices refer
// to the shared poset; word_class_size records the size of the whole class
// so a mismatch with elements().size() would be visible.
class Interval {
public:
    Interval(const Signature& sig, const std::vector<std::string>& word);

    WordClassPoset& poset() { return *poset_; }
    const WordClassPoset& poset() const { return *poset_; }
    const std::vector<std::string>& word() const { return word_; }
    const std::vector<int>& element_ids() const { return ids_; }
    std::vector<Forest> elements() const;
    const Forest& bottom() const;
    const Forest& top() const;
    size_t size() const { return ids_.size(); }
    size_t word_class_size() const { return poset_->elements().size(); }
    bool contains(const Forest& f) const;
    const std::vector<std::pair<int, int>>& cover_pairs() const { return cover_pairs_; }

    Forest meet(const Forest& a, const Forest& b) const;
    Forest join(const Forest& a, const Forest& b) const;

private:
    int require_member(const Forest& f) const;
    Forest bound(const Forest& a, const Forest& b, bool upper) const;

    std::vector<std::string> word_;
    std::shared_ptr<WordClassPoset> poset_;
    std::vector<int> ids_;  // poset indices, canonical order
    std::vector<bool> member_;
    int min_id_, max_id_;
    std::vector<std::pair<int, int>> cover_pairs_;
};

Coeff moebius(const Signature& sig, const Forest& f, const Forest& g);

}  // namespace nhopf
