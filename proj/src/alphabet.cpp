#include "nhopf/alphabet.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nhopf/signature.hpp"
#include "nhopf/forest.hpp"
#include "nhopf/operad.hpp"

namespace nhopf {

bool RelatedAlphabet::has_letter(const std::string& a) const {
    return std::find(letters.begin(), letters.end(), a) != letters.end();
}

bool RelatedAlphabet::allows(const std::string& gen, const std::string& a) const {
    auto it = decorations.find(gen);
    return it != decorations.end() && it->second.count(a) != 0;
}

bool RelatedAlphabet::has_edge(int j, const std::string& a, const std::string& b) const {
    auto it = edges.find(j);
    return it != edges.end() && it->second.count({a, b}) != 0;
}

void RelatedAlphabet::validate() const {
    std::set<std::string> seen;
    for (const auto& a : letters) {
        if (a.empty()) throw DomainError("alphabet letter must be nonempty");
        if (!seen.insert(a).second) throw DomainError("duplicate alphabet letter: " + a);
    }
    for (const auto& a : roots)
        if (!seen.count(a)) throw DomainError("root uses unknown letter: " + a);
    for (const auto& [gen, set] : decorations)
        for (const auto& a : set)
            if (!seen.count(a)) throw DomainError("decoration set of " + gen + " uses unknown letter: " + a);
    for (const auto& [j, rel] : edges) {
        if (j < 1) throw DomainError("edge relation index must be >= 1");
        for (const auto& [a, b] : rel)
            if (!seen.count(a) || !seen.count(b))
                throw DomainError("edge relation uses unknown letter");
    }
}

void NCPolynomial::add(const LetterWord& w, const Coeff& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Coeff NCPolynomial::coeff(const LetterWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Coeff& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
    NCPolynomial out;
    for (const auto& [w, c] : terms_)
        for (const auto& [v, d] : o.terms_) {
            LetterWord wv = w;
            wv.insert(wv.end(), v.begin(), v.end());
            out.add(wv, c * d);
        }
    return out;
}

std::string NCPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << "*";
        if (w.empty()) {
            os << "1";
        } else {
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) os << " ";
                os << w[i];
            }
        }
    }
    return os.str();
}

bool compatible(const Signature& sig, const LetterWord& w, const Forest& f, const RelatedAlphabet& A) {
    validate_arities(f, sig);
    if (!f.reduced()) throw DomainError("compatibility is defined on reduced forests");
    auto ns = nodes(f);
    if (w.size() != ns.size()) return false;
    for (size_t i = 0; i < ns.size(); ++i) {
        if (!A.allows(ns[i].decoration, w[i])) return false;
        if (ns[i].parent == 0) {
            if (!A.is_root(w[i])) return false;
        } else {
            if (!A.has_edge(ns[i].slot, w[ns[i].parent - 1], w[i])) return false;
        }
    }
    return true;
}

NCPolynomial realize_forest(const Signature& sig, const Forest& f, const RelatedAlphabet& A) {
    validate_arities(f, sig);
    if (!f.reduced()) throw DomainError("realization is defined on reduced forests");
    auto ns = nodes(f);
    NCPolynomial out;
    LetterWord w(ns.size());
    // nodes are listed parent-first, so w[parent-1] is set before any child
    std::function<void(size_t)> fill = [&](size_t i) {
        if (i == ns.size()) {
            out.add(w, 1);
            return;
        }
        auto dit = A.decorations.find(ns[i].decoration);
        if (dit == A.decorations.end()) return;
        for (const auto& a : dit->second) {
            if (ns[i].parent == 0) {
                if (!A.is_root(a)) continue;
            } else if (!A.has_edge(ns[i].slot, w[ns[i].parent - 1], a)) {
                continue;
            }
            w[i] = a;
            fill(i + 1);
        }
    };
    fill(0);
    return out;
}

NCPolynomial realize(const Signature& sig, const HopfElement& x, const RelatedAlphabet& A) {
    if (x.basis() != Basis::E) throw DomainError("realization expects the E basis");
    NCPolynomial out;
    for (const auto& [word, c] : x.terms()) {
        NCPolynomial p = realize_forest(sig, word_to_forest(word), A);
        p *= c;
        out += p;
    }
    return out;
}

namespace {

RelatedAlphabet rename_letters(const RelatedAlphabet& A, const std::string& suffix) {
    auto rn = [&](const std::string& a) { return a + suffix; };
    RelatedAlphabet out;
    for (const auto& a : A.letters) out.letters.push_back(rn(a));
    for (const auto& a : A.roots) out.roots.insert(rn(a));
    for (const auto& [gen, set] : A.decorations)
        for (const auto& a : set) out.decorations[gen].insert(rn(a));
    for (const auto& [j, rel] : A.edges)
        for (const auto& [a, b] : rel) out.edges[j].insert({rn(a), rn(b)});
    return out;
}

}  // namespace

DisjointSum disjoint_sum(const RelatedAlphabet& a, const RelatedAlphabet& b, int max_slot) {
    if (max_slot < 1) throw DomainError("disjoint sum needs max_slot >= 1");
    a.validate();
    b.validate();
    DisjointSum ds;
    ds.left = a;
    ds.right = b;
    bool clash = false;
    std::set<std::string> la(a.letters.begin(), a.letters.end());
    for (const auto& x : b.letters)
        if (la.count(x)) clash = true;
    if (clash) {
        ds.left = rename_letters(a, "~1");
        ds.right = rename_letters(b, "~2");
    }
    RelatedAlphabet& s = ds.sum;
    s.letters = ds.left.letters;
    s.letters.insert(s.letters.end(), ds.right.letters.begin(), ds.right.letters.end());
    s.roots = ds.left.roots;
    s.roots.insert(ds.right.roots.begin(), ds.right.roots.end());
    s.decorations = ds.left.decorations;
    for (const auto& [gen, set] : ds.right.decorations)
        s.decorations[gen].insert(set.begin(), set.end());
    s.edges = ds.left.edges;
    for (const auto& [j, rel] : ds.right.edges) s.edges[j].insert(rel.begin(), rel.end());
    // every left letter points to every right root, in every slot
    for (int j = 1; j <= max_slot; ++j)
        for (const auto& x : ds.left.letters)
            for (const auto& r : ds.right.roots) s.edges[j].insert({x, r});
    s.validate();
    return ds;
}

TensorPoly theta_split(const NCPolynomial& p, const std::set<std::string>& left_letters,
                       const std::set<std::string>& right_letters) {
    TensorPoly out;
    for (const auto& [w, c] : p.terms()) {
        LetterWord l, r;
        for (const auto& x : w) {
            if (left_letters.count(x)) {
                l.push_back(x);
            } else if (right_letters.count(x)) {
                r.push_back(x);
            } else {
                throw DomainError("letter belongs to neither part: " + x);
            }
        }
        auto key = std::make_pair(l, r);
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

std::string address_letter(const std::string& gen, const std::vector<int>& addr) {
    if (addr.empty()) return gen;
    std::ostringstream os;
    os << gen << ":";
    for (size_t i = 0; i < addr.size(); ++i) {
        if (i) os << ".";
        os << addr[i];
    }
    return os.str();
}

RelatedAlphabet canonical_alphabet(const Signature& sig, int L, int M) {
    if (L < 0 || M < 0) throw DomainError("canonical alphabet needs L, M >= 0");
    if (sig.empty()) throw DomainError("canonical alphabet needs a nonempty signature");
    int top = std::max<int>(L, sig.max_arity());
    std::vector<std::vector<int>> addrs{{}};
    for (size_t i = 0; i < addrs.size(); ++i) {
        if ((int)addrs[i].size() >= M) continue;
        for (int e = 0; e <= top; ++e) {
            auto ext = addrs[i];
            ext.push_back(e);
            addrs.push_back(std::move(ext));
        }
    }
    std::sort(addrs.begin(), addrs.end());
    RelatedAlphabet A;
    for (const auto& g : sig.generators())
        for (const auto& u : addrs) {
            std::string a = address_letter(g.name, u);
            A.letters.push_back(a);
            A.decorations[g.name].insert(a);
            if (std::all_of(u.begin(), u.end(), [](int e) { return e == 0; })) A.roots.insert(a);
        }
    std::sort(A.letters.begin(), A.letters.end());
    // u -> u.j.0^l, between all generator pairs
    for (const auto& u : addrs)
        for (int j = 1; j <= top; ++j)
            for (int l = 0; (int)u.size() + 1 + l <= M; ++l) {
                auto v = u;
                v.push_back(j);
                v.insert(v.end(), l, 0);
                for (const auto& g : sig.generators())
                    for (const auto& gp : sig.generators())
                        A.edges[j].insert({address_letter(g.name, u), address_letter(gp.name, v)});
            }
    A.validate();
    return A;
}

RelatedAlphabet level_alphabet(const Signature& sig, int bound) {
    if (bound < 1) throw DomainError("level alphabet needs bound >= 1");
    if (sig.empty()) throw DomainError("level alphabet needs a nonempty signature");
    RelatedAlphabet A;
    for (int i = 0; i < bound; ++i)
        for (const auto& g : sig.generators()) {
            std::string a = g.name + ":" + std::to_string(i);
            A.letters.push_back(a);
            A.roots.insert(a);
            A.decorations[g.name].insert(a);
        }
    std::sort(A.letters.begin(), A.letters.end());
    int slots = std::max<int>(1, sig.max_arity());
    for (int j = 1; j <= slots; ++j)
        for (int i = 0; i < bound; ++i)
            for (int ip = i + 1; ip < bound; ++ip)
                for (const auto& g : sig.generators())
                    for (const auto& gp : sig.generators())
                        A.edges[j].insert({g.name + ":" + std::to_string(i),
                                           gp.name + ":" + std::to_string(ip)});
    A.validate();
    return A;
}

}  // namespace nhopf
