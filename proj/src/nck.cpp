#include "nhopf/nck.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "nhopf/signature.hpp"
#include "nhopf/forest.hpp"
#include "nhopf/operad.hpp"
#include "nhopf/hopf.hpp"

namespace nhopf {

namespace {

void check_decorated_term(const Term& t) {
    if (t.is_leaf()) throw DomainError("decorated forests have no leaves");
    if (t.decoration().find('#') != std::string::npos)
        throw DomainError("decoration label may not contain '#': " + t.decoration());
    for (const auto& c : t.children()) check_decorated_term(c);
}

}  // namespace

Forest parse_decorated_forest(const std::string& text) {
    Forest f = parse_forest(text, nullptr);
    validate_decorated(f);
    return f;
}

void validate_decorated(const Forest& f) {
    for (const auto& t : f.terms) check_decorated_term(t);
}

std::vector<std::string> decorated_labels(const Forest& f) {
    std::set<std::string> seen;
    for (const auto& n : nodes(f)) seen.insert(n.decoration);
    return {seen.begin(), seen.end()};
}

long max_child_count(const Forest& f) {
    long best = 0;
    std::function<void(const Term&)> walk = [&](const Term& t) {
        if (t.is_leaf()) return;
        best = std::max<long>(best, (long)t.children().size());
        for (const auto& c : t.children()) walk(c);
    };
    for (const auto& t : f.terms) walk(t);
    return best;
}

std::vector<Forest> decorated_forests(const std::vector<std::string>& labels, int vertices) {
    if (vertices < 0) throw DomainError("vertex count must be >= 0");
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& d : sorted)
        if (d.find('#') != std::string::npos)
            throw DomainError("decoration label may not contain '#': " + d);
    std::map<int, std::vector<Term>> tree_memo;
    std::function<const std::vector<Term>&(int)> trees = [&](int k) -> const std::vector<Term>& {
        auto it = tree_memo.find(k);
        if (it != tree_memo.end()) return it->second;
        std::vector<Term> out;
        // children get a composition of k-1 into positive parts
        std::vector<std::vector<Term>> kid_lists{{}};
        if (k > 1) {
            kid_lists.clear();
            std::vector<int> parts;
            std::function<void(int)> split = [&](int rest) {
                if (rest == 0) {
                    std::vector<std::vector<Term>> combos{{}};
                    for (int p : parts) {
                        std::vector<std::vector<Term>> next;
                        for (const auto& acc : combos)
                            for (const auto& sub : trees(p)) {
                                auto ext = acc;
                                ext.push_back(sub);
                                next.push_back(std::move(ext));
                            }
                        combos = std::move(next);
                    }
                    for (auto& c : combos) kid_lists.push_back(std::move(c));
                    return;
                }
                for (int p = 1; p <= rest; ++p) {
                    parts.push_back(p);
                    split(rest - p);
                    parts.pop_back();
                }
            };
            split(k - 1);
        }
        for (const auto& d : sorted)
            for (const auto& kids : kid_lists) out.push_back(Term::node(d, kids));
        std::sort(out.begin(), out.end());
        return tree_memo.emplace(k, std::move(out)).first->second;
    };
    std::vector<Forest> out;
    std::vector<Term> acc;
    std::function<void(int)> split = [&](int rest) {
        if (rest == 0) {
            out.push_back(Forest{acc});
            return;
        }
        for (int p = 1; p <= rest; ++p)
            for (const auto& t : trees(p)) {
                acc.push_back(t);
                split(rest - p);
                acc.pop_back();
            }
    };
    split(vertices);
    std::sort(out.begin(), out.end());
    return out;
}

Signature nck_signature(const std::vector<std::string>& labels, int max_children) {
    if (max_children < 0) throw DomainError("child bound must be >= 0");
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Generator> gens;
    for (const auto& d : sorted) {
        if (d.find('#') != std::string::npos)
            throw DomainError("decoration label may not contain '#': " + d);
        for (int n = 0; n <= max_children; ++n)
            gens.push_back({d + "#" + std::to_string(n), n});
    }
    return Signature(gens);
}

std::string nck_base(const std::string& gen_name) {
    auto pos = gen_name.rfind('#');
    if (pos == std::string::npos || pos == 0 || pos + 1 == gen_name.size())
        throw DomainError("not a label#count generator name: " + gen_name);
    return gen_name.substr(0, pos);
}

int nck_child_count(const std::string& gen_name) {
    auto pos = gen_name.rfind('#');
    if (pos == std::string::npos || pos + 1 == gen_name.size())
        throw DomainError("not a label#count generator name: " + gen_name);
    std::string tail = gen_name.substr(pos + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("not a label#count generator name: " + gen_name);
    return std::stoi(tail);
}

namespace {

Term bij_term(const Term& t) {
    std::vector<Term> kids;
    for (const auto& c : t.children()) kids.push_back(bij_term(c));
    return Term::node(t.decoration() + "#" + std::to_string(kids.size()), kids);
}

Term inv_term(const Term& t) {
    if (t.is_leaf()) throw DomainError("leafless forest expected");
    std::string base = nck_base(t.decoration());
    int n = nck_child_count(t.decoration());
    if ((int)t.children().size() != n)
        throw DomainError("child count disagrees with decoration: " + t.decoration());
    std::vector<Term> kids;
    for (const auto& c : t.children()) kids.push_back(inv_term(c));
    return Term::node(base, kids);
}

Term strip_term(const Term& t) {
    std::vector<Term> kids;
    for (const auto& c : t.children())
        if (!c.is_leaf()) kids.push_back(strip_term(c));
    return Term::node(nck_base(t.decoration()), kids);
}

}  // namespace

Forest nck_bijection(const Forest& decorated) {
    validate_decorated(decorated);
    Forest out;
    for (const auto& t : decorated.terms) out.terms.push_back(bij_term(t));
    return out;
}

Forest nck_inverse(const Forest& f) {
    Forest out;
    for (const auto& t : f.terms) out.terms.push_back(inv_term(t));
    validate_decorated(out);
    return out;
}

Forest strip_to_decorated(const Forest& f) {
    Forest out;
    for (const auto& t : f.terms) {
        if (t.is_leaf()) throw DomainError("reduced forest expected");
        out.terms.push_back(strip_term(t));
    }
    validate_decorated(out);
    return out;
}

std::string dec_tensor_str(const DecTensor& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [legs, c] : t) {
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "(" << legs.first.str() << ") (x) (" << legs.second.str() << ")";
    }
    return os.str();
}

namespace {

// all (trunk, crown) pairs for one tree; trunk holds zero or one tree
using Cut = std::pair<std::vector<Term>, std::vector<Term>>;

std::vector<Cut> tree_cuts(const Term& t) {
    std::vector<Cut> out;
    out.push_back({{}, {t}});
    std::vector<Cut> partial{{{}, {}}};
    for (const auto& c : t.children()) {
        std::vector<Cut> next;
        for (const auto& choice : tree_cuts(c))
            for (const auto& acc : partial) {
                Cut merged = acc;
                merged.first.insert(merged.first.end(), choice.first.begin(), choice.first.end());
                merged.second.insert(merged.second.end(), choice.second.begin(), choice.second.end());
                next.push_back(std::move(merged));
            }
        partial = std::move(next);
    }
    for (const auto& acc : partial)
        out.push_back({{Term::node(t.decoration(), acc.first)}, acc.second});
    return out;
}

}  // namespace

DecTensor nck_coproduct(const Forest& decorated) {
    validate_decorated(decorated);
    DecTensor out;
    std::vector<Cut> acc{{{}, {}}};
    for (const auto& t : decorated.terms) {
        std::vector<Cut> next;
        for (const auto& left : acc)
            for (const auto& choice : tree_cuts(t)) {
                Cut merged = left;
                merged.first.insert(merged.first.end(), choice.first.begin(), choice.first.end());
                merged.second.insert(merged.second.end(), choice.second.begin(), choice.second.end());
                next.push_back(std::move(merged));
            }
        acc = std::move(next);
    }
    for (const auto& cut : acc) {
        auto key = std::make_pair(Forest{cut.first}, Forest{cut.second});
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(key, 1);
        } else {
            it->second += 1;
        }
    }
    return out;
}

DecTensor nck_coproduct_via_factorizations(const Forest& decorated) {
    validate_decorated(decorated);
    Signature sig = nck_signature(decorated_labels(decorated), (int)max_child_count(decorated));
    Operad op = Operad::free_operad(sig);
    NaturalHopf hopf(op);
    TensorElement delta = hopf.coproduct(hopf.e(forest_to_word(nck_bijection(decorated))));
    DecTensor out;
    for (const auto& [legs, c] : delta.terms()) {
        auto key = std::make_pair(strip_to_decorated(word_to_forest(legs.first)),
                                  strip_to_decorated(word_to_forest(legs.second)));
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(key, c);
        } else {
            it->second += c;
        }
    }
    return out;
}

RelatedAlphabet decorated_alphabet(const Signature& nck_sig, int bound) {
    if (bound < 1) throw DomainError("decorated alphabet needs bound >= 1");
    if (nck_sig.empty()) throw DomainError("decorated alphabet needs a nonempty signature");
    std::set<std::string> bases;
    for (const auto& g : nck_sig.generators()) bases.insert(nck_base(g.name));
    RelatedAlphabet A;
    for (const auto& d : bases)
        for (int i = 0; i < bound; ++i) {
            std::string a = d + ":" + std::to_string(i);
            A.letters.push_back(a);
            A.roots.insert(a);
        }
    std::sort(A.letters.begin(), A.letters.end());
    for (const auto& g : nck_sig.generators())
        for (int i = 0; i < bound; ++i)
            A.decorations[g.name].insert(nck_base(g.name) + ":" + std::to_string(i));
    int slots = std::max<int>(1, nck_sig.max_arity());
    for (int j = 1; j <= slots; ++j)
        for (const auto& d : bases)
            for (const auto& dp : bases)
                for (int i = 0; i < bound; ++i)
                    for (int ip = i + 1; ip < bound; ++ip)
                        A.edges[j].insert({d + ":" + std::to_string(i), dp + ":" + std::to_string(ip)});
    A.validate();
    return A;
}

}  // namespace nhopf
