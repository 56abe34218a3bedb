#include "nhopf/order.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace nhopf {

std::vector<Forest> covers(const Signature& sig, const Forest& f) {
    if (!sig.positive()) throw DomainError("covers: signature must be positive");
    if (!f.reduced()) throw DomainError("covers: forest must be reduced");
    for (const auto& t : f.terms) validate_arities(t, sig);

    std::set<Forest> out;
    auto ns = nodes(f);
    for (size_t id1 = 1; id1 <= ns.size(); ++id1) {
        const NodeEntry& n = ns[id1 - 1];
        if (n.parent != 0 && n.slot >= 2) {
            // (a) move the subtree onto the rightmost leaf of the child to its left
            int id = static_cast<int>(id1);
            Term moved = subtree_at_node(f, id);
            Forest cut = replace_subtree(f, id, Term::leaf());
            // locate the left brother inside the cut forest: same parent path
            // with the last step decremented
            std::vector<int> left_path = n.path;
            left_path.back() -= 1;
            const Term& host_term = cut.terms[static_cast<size_t>(n.term)];
            const Term* brother = &host_term;
            for (int c : left_path) brother = &brother->children()[static_cast<size_t>(c)];
            Term grown = graft_rightmost(*brother, moved);
            // rebuild the term with the brother replaced
            std::function<Term(const Term&, size_t)> rebuild = [&](const Term& t, size_t depth) -> Term {
                if (depth == left_path.size()) return grown;
                std::vector<Term> kids = t.children();
                size_t c = static_cast<size_t>(left_path[depth]);
                kids[c] = rebuild(kids[c], depth + 1);
                return Term::node(t.decoration(), std::move(kids));
            };
            Forest g = cut;
            g.terms[static_cast<size_t>(n.term)] = rebuild(host_term, 0);
            out.insert(std::move(g));
        } else if (n.parent == 0 && n.term >= 1) {
            // (b) merge the whole term into the previous one
            Forest g;
            g.terms.reserve(f.terms.size() - 1);
            for (size_t k = 0; k < f.terms.size(); ++k) {
                if (static_cast<int>(k) == n.term - 1)
                    g.terms.push_back(graft_rightmost(f.terms[k], f.terms[k + 1]));
                else if (static_cast<int>(k) != n.term)
                    g.terms.push_back(f.terms[k]);
            }
            out.insert(std::move(g));
        }
    }
    return std::vector<Forest>(out.begin(), out.end());
}

WordClassPoset::WordClassPoset(const Signature& sig, const std::vector<std::string>& word)
    : sig_(sig), word_(word) {
    if (!sig.positive()) throw DomainError("word class poset: signature must be positive");
    elements_ = forests_with_word(sig, word);
    for (size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].str()] = static_cast<int>(i);
    size_t n = elements_.size();
    cover_up_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        for (const auto& g : covers(sig, elements_[i])) {
            auto it = index_.find(g.str());
            if (it == index_.end()) throw DomainError("cover left the word class (bug)");
            cover_up_[i].push_back(it->second);
        }
    }
    // transitive closure by depth-first search from each element
    leq_.assign(n, std::vector<bool>(n, false));
    std::vector<char> done(n, 0);
    std::function<void(size_t)> close = [&](size_t i) {
        if (done[i]) return;
        done[i] = 1;
        leq_[i][i] = true;
        for (int j : cover_up_[i]) {
            close(static_cast<size_t>(j));
            for (size_t k = 0; k < n; ++k)
                if (leq_[static_cast<size_t>(j)][k]) leq_[i][k] = true;
        }
    };
    for (size_t i = 0; i < n; ++i) close(i);
}

int WordClassPoset::find(const Forest& f) const {
    auto it = index_.find(f.str());
    return it == index_.end() ? -1 : it->second;
}

int WordClassPoset::index_of(const Forest& f) const {
    int i = find(f);
    if (i < 0) throw DomainError("forest " + f.str() + " is not in this word class");
    return i;
}

Coeff WordClassPoset::moebius(int i, int j) {
    if (!leq(i, j)) return 0;
    if (i == j) return 1;
    auto key = std::make_pair(i, j);
    auto it = mu_.find(key);
    if (it != mu_.end()) return it->second;
    Coeff acc = 0;
    for (size_t h = 0; h < elements_.size(); ++h) {
        int hi = static_cast<int>(h);
        if (hi != j && leq(i, hi) && leq(hi, j)) acc += moebius(i, hi);
    }
    Coeff mu = -acc;
    mu_.emplace(key, mu);
    return mu;
}

std::vector<int> WordClassPoset::up_set(int i) const {
    std::vector<int> out;
    for (size_t j = 0; j < elements_.size(); ++j)
        if (leq(i, static_cast<int>(j))) out.push_back(static_cast<int>(j));
    return out;
}

std::vector<int> WordClassPoset::down_set(int i) const {
    std::vector<int> out;
    for (size_t j = 0; j < elements_.size(); ++j)
        if (leq(static_cast<int>(j), i)) out.push_back(static_cast<int>(j));
    return out;
}

bool less_equal(const Signature& sig, const Forest& f, const Forest& g) {
    if (f == g) return true;
    if (preorder_decorations(f) != preorder_decorations(g)) return false;
    WordClassPoset p(sig, preorder_decorations(f));
    return p.leq(p.index_of(f), p.index_of(g));
}

Forest minimal_forest(const Signature& sig, const std::vector<std::string>& word) {
    Forest f;
    for (const auto& g : word)
        f.terms.push_back(Term::node(g, std::vector<Term>(static_cast<size_t>(sig.arity(g)), Term::leaf())));
    return f;
}

Forest maximal_forest(const Signature& sig, const std::vector<std::string>& word) {
    if (word.empty()) return Forest{};
    Term t = Term::node(word.back(), std::vector<Term>(static_cast<size_t>(sig.arity(word.back())), Term::leaf()));
    for (size_t i = word.size() - 1; i-- > 0;) {
        Term outer = Term::node(word[i], std::vector<Term>(static_cast<size_t>(sig.arity(word[i])), Term::leaf()));
        t = partial_compose(outer, 1, t);
    }
    return Forest({t});
}

Interval::Interval(const Signature& sig, const std::vector<std::string>& word) : word_(word) {
    if (word.empty()) throw DomainError("interval: empty word");
    poset_ = std::make_shared<WordClassPoset>(sig, word);
    min_id_ = poset_->index_of(minimal_forest(sig, word));
    max_id_ = poset_->index_of(maximal_forest(sig, word));
    size_t n = poset_->elements().size();
    member_.assign(n, false);
    for (size_t i = 0; i < n; ++i) {
        int ii = static_cast<int>(i);
        if (poset_->leq(min_id_, ii) && poset_->leq(ii, max_id_)) {
            member_[i] = true;
            ids_.push_back(ii);
        }
    }
    for (int i : ids_)
        for (int j : poset_->cover_up()[static_cast<size_t>(i)])
            if (member_[static_cast<size_t>(j)]) cover_pairs_.push_back({i, j});
}

std::vector<Forest> Interval::elements() const {
    std::vector<Forest> out;
    out.reserve(ids_.size());
    for (int i : ids_) out.push_back(poset_->elements()[static_cast<size_t>(i)]);
    return out;
}

const Forest& Interval::bottom() const { return poset_->elements()[static_cast<size_t>(min_id_)]; }
const Forest& Interval::top() const { return poset_->elements()[static_cast<size_t>(max_id_)]; }

bool Interval::contains(const Forest& f) const {
    int i = poset_->find(f);
    return i >= 0 && member_[static_cast<size_t>(i)];
}

int Interval::require_member(const Forest& f) const {
    int i = poset_->find(f);
    if (i < 0 || !member_[static_cast<size_t>(i)])
        throw DomainError("forest " + f.str() + " is not in the interval");
    return i;
}

Forest Interval::bound(const Forest& a, const Forest& b, bool upper) const {
    int ia = require_member(a), ib = require_member(b);
    std::vector<int> common;
    for (int i : ids_) {
        bool ok = upper ? (poset_->leq(ia, i) && poset_->leq(ib, i))
                        : (poset_->leq(i, ia) && poset_->leq(i, ib));
        if (ok) common.push_back(i);
    }
    if (common.empty()) throw DomainError(upper ? "no common upper bound" : "no common lower bound");
    // keep the extremal ones; the lattice property promises exactly one
    std::vector<int> extremal;
    for (int i : common) {
        bool beaten = false;
        for (int j : common)
            if (j != i && (upper ? poset_->leq(j, i) : poset_->leq(i, j))) beaten = true;
        if (!beaten) extremal.push_back(i);
    }
    if (extremal.size() != 1)
        throw DomainError(std::string(upper ? "join" : "meet") + " is not unique (not a lattice here)");
    return poset_->elements()[static_cast<size_t>(extremal[0])];
}

Forest Interval::meet(const Forest& a, const Forest& b) const { return bound(a, b, false); }
Forest Interval::join(const Forest& a, const Forest& b) const { return bound(a, b, true); }

Coeff moebius(const Signature& sig, const Forest& f, const Forest& g) {
    if (preorder_decorations(f) != preorder_decorations(g)) return 0;
    WordClassPoset p(sig, preorder_decorations(f));
    return p.moebius(p.index_of(f), p.index_of(g));
}

}  // namespace nhopf
