#include "nhopf/forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace nhopf {

Term Term::node(std::string decoration, std::vector<Term> children) {
    if (decoration.empty()) throw DomainError("node decoration may not be empty");
    Term t;
    t.dec_ = std::move(decoration);
    t.children_ = std::move(children);
    return t;
}

int Term::arity() const {
    if (is_leaf()) return 1;
    int a = 0;
    for (const auto& c : children_) a += c.arity();
    return a;
}

int Term::degree() const {
    if (is_leaf()) return 0;
    int d = 1;
    for (const auto& c : children_) d += c.degree();
    return d;
}

std::string Term::str() const {
    if (is_leaf()) return "*";
    std::string out = dec_;
    out += '[';
    for (size_t i = 0; i < children_.size(); ++i) {
        if (i) out += ',';
        out += children_[i].str();
    }
    out += ']';
    return out;
}

int Forest::arity() const {
    int a = 0;
    for (const auto& t : terms) a += t.arity();
    return a;
}

int Forest::degree() const {
    int d = 0;
    for (const auto& t : terms) d += t.degree();
    return d;
}

bool Forest::reduced() const {
    return std::none_of(terms.begin(), terms.end(), [](const Term& t) { return t.is_leaf(); });
}

std::string Forest::str() const {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ' ';
        out += terms[i].str();
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool name_char(char c) const {
        return !(c == '*' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' || c == ':' ||
                 std::isspace(static_cast<unsigned char>(c)));
    }

    Term term() {
        if (i >= s.size()) throw ParseError(i, "expected term");
        if (s[i] == '*') {
            ++i;
            return Term::leaf();
        }
        size_t start = i;
        while (i < s.size() && name_char(s[i])) ++i;
        if (i == start) throw ParseError(i, std::string("expected term, found '") + s[i] + "'");
        std::string name = s.substr(start, i - start);
        std::vector<Term> kids;
        if (i < s.size() && s[i] == '[') {
            ++i;
            if (i < s.size() && s[i] == ']') {
                ++i;  // arity-0 node
            } else {
                for (;;) {
                    kids.push_back(term());
                    if (i >= s.size()) throw ParseError(i, "unterminated child list");
                    if (s[i] == ',') {
                        ++i;
                        continue;
                    }
                    if (s[i] == ']') {
                        ++i;
                        break;
                    }
                    throw ParseError(i, std::string("expected ',' or ']', found '") + s[i] + "'");
                }
            }
        }
        return Term::node(std::move(name), std::move(kids));
    }
};

}  // namespace

void validate_arities(const Term& t, const Signature& sig) {
    if (t.is_leaf()) return;
    int want = sig.arity(t.decoration());
    if (static_cast<int>(t.children().size()) != want)
        throw DomainError("generator " + t.decoration() + " has arity " + std::to_string(want) +
                          " but appears with " + std::to_string(t.children().size()) + " children");
    for (const auto& c : t.children()) validate_arities(c, sig);
}

void validate_arities(const Forest& f, const Signature& sig) {
    for (const auto& t : f.terms) validate_arities(t, sig);
}

Term parse_term(const std::string& text, const Signature* sig) {
    Parser p{text};
    p.skip_ws();
    Term t = p.term();
    p.skip_ws();
    if (p.i != text.size()) throw ParseError(p.i, "trailing input after term");
    if (sig) validate_arities(t, *sig);
    return t;
}

Forest parse_forest(const std::string& text, const Signature* sig) {
    Parser p{text};
    std::vector<Term> terms;
    p.skip_ws();
    while (p.i < text.size()) {
        terms.push_back(p.term());
        size_t before = p.i;
        p.skip_ws();
        if (p.i < text.size() && p.i == before)
            throw ParseError(p.i, std::string("expected whitespace between terms, found '") + text[p.i] + "'");
    }
    Forest f(std::move(terms));
    if (sig)
        for (const auto& t : f.terms) validate_arities(t, *sig);
    return f;
}

namespace {

// Substitute leaves i..i+? of t from args, consuming one arg per leaf.
Term substitute(const Term& t, const std::vector<Term>& args, size_t& next) {
    if (t.is_leaf()) return args[next++];
    std::vector<Term> kids;
    kids.reserve(t.children().size());
    for (const auto& c : t.children()) kids.push_back(substitute(c, args, next));
    return Term::node(t.decoration(), std::move(kids));
}

}  // namespace

Term full_compose(const Term& t, const std::vector<Term>& args) {
    if (static_cast<int>(args.size()) != t.arity())
        throw DomainError("full_compose: got " + std::to_string(args.size()) + " arguments for arity " +
                          std::to_string(t.arity()));
    size_t next = 0;
    return substitute(t, args, next);
}

Term partial_compose(const Term& t, int i, const Term& s) {
    int ar = t.arity();
    if (i < 1 || i > ar) throw DomainError("partial_compose: leaf index " + std::to_string(i) + " out of range");
    std::vector<Term> args(static_cast<size_t>(ar), Term::leaf());
    args[static_cast<size_t>(i - 1)] = s;
    size_t next = 0;
    return substitute(t, args, next);
}

Term graft_rightmost(const Term& t, const Term& s) {
    if (t.is_leaf()) return s;
    std::vector<Term> kids = t.children();
    kids.back() = graft_rightmost(kids.back(), s);
    return Term::node(t.decoration(), std::move(kids));
}

Forest reduce(const Forest& f) {
    std::vector<Term> out;
    for (const auto& t : f.terms)
        if (!t.is_leaf()) out.push_back(t);
    return Forest(std::move(out));
}

namespace {

void walk_nodes(const Term& t, int term_index, int parent, int slot, std::vector<int>& path,
                std::vector<NodeEntry>& out) {
    if (t.is_leaf()) return;
    out.push_back({t.decoration(), parent, slot, term_index, path});
    int my_id = static_cast<int>(out.size());
    for (size_t c = 0; c < t.children().size(); ++c) {
        path.push_back(static_cast<int>(c));
        walk_nodes(t.children()[c], term_index, my_id, static_cast<int>(c) + 1, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<NodeEntry> nodes(const Forest& f) {
    std::vector<NodeEntry> out;
    std::vector<int> path;
    for (size_t k = 0; k < f.terms.size(); ++k)
        walk_nodes(f.terms[k], static_cast<int>(k), 0, 0, path, out);
    return out;
}

std::vector<std::string> preorder_decorations(const Forest& f) {
    std::vector<std::string> w;
    for (const auto& n : nodes(f)) w.push_back(n.decoration);
    return w;
}

std::vector<Edge> edges(const Forest& f) {
    std::vector<Edge> out;
    auto ns = nodes(f);
    for (size_t i = 0; i < ns.size(); ++i)
        if (ns[i].parent != 0) out.push_back({ns[i].parent, ns[i].slot, static_cast<int>(i) + 1});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

const Term* descend(const Term& t, const std::vector<int>& path) {
    const Term* cur = &t;
    for (int c : path) cur = &cur->children()[static_cast<size_t>(c)];
    return cur;
}

Term rebuild(const Term& t, const std::vector<int>& path, size_t depth, const Term& replacement) {
    if (depth == path.size()) return replacement;
    std::vector<Term> kids = t.children();
    size_t c = static_cast<size_t>(path[depth]);
    kids[c] = rebuild(kids[c], path, depth + 1, replacement);
    return Term::node(t.decoration(), std::move(kids));
}

}  // namespace

Term subtree_at_node(const Forest& f, int node_id) {
    auto ns = nodes(f);
    if (node_id < 1 || node_id > static_cast<int>(ns.size())) throw DomainError("node id out of range");
    const NodeEntry& n = ns[static_cast<size_t>(node_id - 1)];
    return *descend(f.terms[static_cast<size_t>(n.term)], n.path);
}

Forest replace_subtree(const Forest& f, int node_id, const Term& replacement) {
    auto ns = nodes(f);
    if (node_id < 1 || node_id > static_cast<int>(ns.size())) throw DomainError("node id out of range");
    const NodeEntry& n = ns[static_cast<size_t>(node_id - 1)];
    Forest out = f;
    out.terms[static_cast<size_t>(n.term)] = rebuild(f.terms[static_cast<size_t>(n.term)], n.path, 0, replacement);
    return out;
}

namespace {

void require_positive(const Signature& sig, const char* what) {
    if (sig.empty()) throw DomainError(std::string(what) + ": empty signature");
    if (!sig.positive())
        throw DomainError(std::string(what) + ": signature has arity-0 generators, enumeration unsupported");
}

// Ordered lists of parts summing to total, each part >= lo.
std::vector<std::vector<int>> compositions(int total, int parts, int lo) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(parts));
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int remaining_min = lo * (parts - pos - 1);
        for (int v = lo; v <= left - remaining_min; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(0, total);
    return out;
}

template <typename T>
void cartesian(const std::vector<std::vector<T>>& pools, std::vector<T>& cur,
               const std::function<void(const std::vector<T>&)>& emit) {
    if (cur.size() == pools.size()) {
        emit(cur);
        return;
    }
    for (const auto& x : pools[cur.size()]) {
        cur.push_back(x);
        cartesian(pools, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Term> enumerate_terms(const Signature& sig, int degree) {
    require_positive(sig, "enumerate_terms");
    if (degree < 0) throw DomainError("enumerate_terms: negative degree");
    std::vector<std::vector<Term>> memo(static_cast<size_t>(degree) + 1);
    memo[0] = {Term::leaf()};
    for (int d = 1; d <= degree; ++d) {
        std::vector<Term> out;
        for (const auto& g : sig.generators()) {
            for (const auto& split : compositions(d - 1, g.arity, 0)) {
                std::vector<std::vector<Term>> pools;
                pools.reserve(split.size());
                for (int part : split) pools.push_back(memo[static_cast<size_t>(part)]);
                std::vector<Term> cur;
                cartesian<Term>(pools, cur, [&](const std::vector<Term>& kids) {
                    out.push_back(Term::node(g.name, kids));
                });
            }
        }
        std::sort(out.begin(), out.end());
        memo[static_cast<size_t>(d)] = std::move(out);
    }
    return memo[static_cast<size_t>(degree)];
}

std::vector<Forest> enumerate_reduced_forests(const Signature& sig, int degree) {
    require_positive(sig, "enumerate_reduced_forests");
    if (degree < 0) throw DomainError("enumerate_reduced_forests: negative degree");
    if (degree == 0) return {Forest{}};
    std::vector<std::vector<Term>> terms_by_degree(static_cast<size_t>(degree) + 1);
    for (int d = 1; d <= degree; ++d) terms_by_degree[static_cast<size_t>(d)] = enumerate_terms(sig, d);
    std::vector<Forest> out;
    for (int len = 1; len <= degree; ++len) {
        for (const auto& split : compositions(degree, len, 1)) {
            std::vector<std::vector<Term>> pools;
            pools.reserve(split.size());
            for (int part : split) pools.push_back(terms_by_degree[static_cast<size_t>(part)]);
            std::vector<Term> cur;
            cartesian<Term>(pools, cur, [&](const std::vector<Term>& ts) { out.push_back(Forest(ts)); });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Forest> enumerate_reduced_forests_upto(const Signature& sig, int max_degree) {
    std::vector<Forest> out;
    for (int d = 0; d <= max_degree; ++d) {
        auto fs = enumerate_reduced_forests(sig, d);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

namespace {

using WordSpan = std::pair<size_t, size_t>;  // [begin, end)

struct WordClassEnum {
    const Signature& sig;
    const std::vector<std::string>& w;
    std::map<WordSpan, std::vector<Term>> term_memo;

    const std::vector<Term>& terms(size_t b, size_t e) {
        auto key = WordSpan{b, e};
        auto it = term_memo.find(key);
        if (it != term_memo.end()) return it->second;
        std::vector<Term> out;
        int ar = sig.arity(w[b]);
        // Children consume contiguous blocks of w[b+1, e), empty block = leaf.
        std::vector<std::vector<Term>> pools(static_cast<size_t>(ar));
        std::function<void(size_t, int, std::vector<Term>&)> rec = [&](size_t pos, int child, std::vector<Term>& kids) {
            if (child == ar) {
                if (pos == e) out.push_back(Term::node(w[b], kids));
                return;
            }
            // empty block
            kids.push_back(Term::leaf());
            rec(pos, child + 1, kids);
            kids.pop_back();
            // nonempty blocks
            for (size_t stop = pos + 1; stop <= e; ++stop) {
                for (const auto& t : terms(pos, stop)) {
                    kids.push_back(t);
                    rec(stop, child + 1, kids);
                    kids.pop_back();
                }
            }
        };
        std::vector<Term> kids;
        rec(b + 1, 0, kids);
        return term_memo.emplace(key, std::move(out)).first->second;
    }

    std::vector<Forest> forests(size_t b) {
        if (b == w.size()) return {Forest{}};
        std::vector<Forest> out;
        for (size_t stop = b + 1; stop <= w.size(); ++stop) {
            const auto& firsts = terms(b, stop);
            if (firsts.empty()) continue;
            auto rests = forests(stop);
            for (const auto& t : firsts)
                for (const auto& r : rests) {
                    Forest f;
                    f.terms.reserve(1 + r.terms.size());
                    f.terms.push_back(t);
                    f.terms.insert(f.terms.end(), r.terms.begin(), r.terms.end());
                    out.push_back(std::move(f));
                }
        }
        return out;
    }
};

}  // namespace

std::vector<Term> terms_with_word(const Signature& sig, const std::vector<std::string>& w) {
    if (w.empty()) throw DomainError("terms_with_word: empty word");
    for (const auto& g : w) (void)sig.arity(g);
    WordClassEnum e{sig, w, {}};
    auto out = e.terms(0, w.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Forest> forests_with_word(const Signature& sig, const std::vector<std::string>& w) {
    for (const auto& g : w) (void)sig.arity(g);
    WordClassEnum e{sig, w, {}};
    auto out = e.forests(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nhopf
