#pragma once

// Planar rooted trees over a signature and words of them.
//
// A term is either the leaf (unit) or a generator node with one subterm per
// input slot.  Arity = number of leaves, degree = number of internal nodes.
// The canonical text form is  name[child,...,child]  with * for the leaf;
// forests are whitespace-separated terms.  That string doubles as the sort
// and hash key everywhere, so enumeration order is its lexicographic order.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nhopf/signature.hpp"

namespace nhopf {

class Term {
public:
    Term() = default;  // leaf
    static Term leaf() { return Term(); }
    static Term node(std::string decoration, std::vector<Term> children);

    bool is_leaf() const { return dec_.empty(); }
    const std::string& decoration() const { return dec_; }
    const std::vector<Term>& children() const { return children_; }

    int arity() const;       // leaf count; the leaf itself has arity 1
    int degree() const;      // internal node count
    std::string str() const;

    bool operator==(const Term& o) const { return dec_ == o.dec_ && children_ == o.children_; }
    bool operator!=(const Term& o) const { return !(*this == o); }
    bool operator<(const Term& o) const { return str() < o.str(); }

private:
    std::string dec_;  // empty marks the leaf
    std::vector<Term> children_;
};

struct Forest {
    std::vector<Term> terms;

    Forest() = default;
    explicit Forest(std::vector<Term> ts) : terms(std::move(ts)) {}

    size_t length() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
    int arity() const;
    int degree() const;
    bool reduced() const;  // no bare-leaf terms
    std::string str() const;

    bool operator==(const Forest& o) const { return terms == o.terms; }
    bool operator!=(const Forest& o) const { return !(*this == o); }
    bool operator<(const Forest& o) const { return str() < o.str(); }
};

// Parsing.  parse_term consumes the whole string; parse_forest splits on
// whitespace at the top level.  Both validate arities against sig when one
// is supplied.
Term parse_term(const std::string& text, const Signature* sig = nullptr);
Forest parse_forest(const std::string& text, const Signature* sig = nullptr);
void validate_arities(const Term& t, const Signature& sig);
void validate_arities(const Forest& f, const Signature& sig);

// Composition.  full_compose substitutes one term per leaf (args.size() ==
// t.arity()); partial_compose grafts s onto the i-th leaf, 1-based
// left-to-right.
Term full_compose(const Term& t, const std::vector<Term>& args);
Term partial_compose(const Term& t, int i, const Term& s);

// Graft s onto the last leaf in preorder (the rightmost leaf).
Term graft_rightmost(const Term& t, const Term& s);

/// rd: drop bare-leaf terms.
Forest reduce(const Forest& f);

// Internal nodes of a forest in preorder across terms, 1-based NodeId.
// parent == 0 for the root of a term; slot is the 1-based child index under
// the parent, term is the 0-based index of the containing term.
struct NodeEntry {
    std::string decoration;
    int parent = 0;
    int slot = 0;
    int term = 0;
    std::vector<int> path;  // 0-based child slots from the term's root
};

std::vector<NodeEntry> nodes(const Forest& f);
std::vector<std::string> preorder_decorations(const Forest& f);

// Edges (i, j, i') with node i' hanging in slot j of node i, NodeIds as above.
struct Edge {
    int parent, slot, child;
    bool operator==(const Edge& o) const { return parent == o.parent && slot == o.slot && child == o.child; }
    bool operator<(const Edge& o) const {
        if (parent != o.parent) return parent < o.parent;
        if (slot != o.slot) return slot < o.slot;
        return child < o.child;
    }
};
std::vector<Edge> edges(const Forest& f);

// Subterm surgery by node id (1-based, preorder across the forest).
Term subtree_at_node(const Forest& f, int node_id);
Forest replace_subtree(const Forest& f, int node_id, const Term& replacement);

// Exhaustive enumeration at fixed degree, canonical (lexicographic) order.
// Requires a positive signature: with arity-0 generators present the
// grading assumptions behind the callers break, so we refuse.
std::vector<Term> enumerate_terms(const Signature& sig, int degree);
std::vector<Forest> enumerate_reduced_forests(const Signature& sig, int degree);
std::vector<Forest> enumerate_reduced_forests_upto(const Signature& sig, int max_degree);

// All reduced forests / terms whose preorder decoration word is exactly w.
std::vector<Term> terms_with_word(const Signature& sig, const std::vector<std::string>& w);
std::vector<Forest> forests_with_word(const Signature& sig, const std::vector<std::string>& w);

}  // namespace nhopf
