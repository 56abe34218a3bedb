#include "nhopf/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nhopf {

namespace {

// Exchange the node with its child in slot i (0-based), placing the node in
// slot ip (0-based) of the child, re-hanging the other subtrees in order.
Term exchange(const Term& t, size_t i, size_t ip) {
    const Term& child = t.children()[i];
    std::vector<Term> pool;
    for (size_t k = 0; k < i; ++k) pool.push_back(t.children()[k]);
    for (const auto& c : child.children()) pool.push_back(c);
    for (size_t k = i + 1; k < t.children().size(); ++k) pool.push_back(t.children()[k]);
    size_t n = t.children().size();
    std::vector<Term> lower(pool.begin() + static_cast<long>(ip), pool.begin() + static_cast<long>(ip + n));
    std::vector<Term> upper;
    for (size_t k = 0; k < ip; ++k) upper.push_back(pool[k]);
    upper.push_back(Term::node(t.decoration(), std::move(lower)));
    for (size_t k = ip + n; k < pool.size(); ++k) upper.push_back(pool[k]);
    return Term::node(child.decoration(), std::move(upper));
}

void collect_moves(const Term& t, const std::function<Term(const Term&)>& wrap, std::vector<Term>& out) {
    if (t.is_leaf()) return;
    for (size_t i = 0; i < t.children().size(); ++i) {
        const Term& child = t.children()[i];
        if (!child.is_leaf()) {
            for (size_t ip = 0; ip < child.children().size(); ++ip) out.push_back(wrap(exchange(t, i, ip)));
        }
        auto wrap_child = [&, i](const Term& s) {
            std::vector<Term> kids = t.children();
            kids[i] = s;
            return wrap(Term::node(t.decoration(), std::move(kids)));
        };
        collect_moves(child, wrap_child, out);
    }
}

}  // namespace

std::vector<Term> ExchangeCongruence::moves(const Term& t) const {
    std::vector<Term> out;
    collect_moves(t, [](const Term& s) { return s; }, out);
    return out;
}

std::string ExchangeCongruence::class_key(const Term& t) const {
    std::vector<std::string> decs;
    std::function<void(const Term&)> walk = [&](const Term& s) {
        if (s.is_leaf()) return;
        decs.push_back(s.decoration());
        for (const auto& c : s.children()) walk(c);
    };
    walk(t);
    std::sort(decs.begin(), decs.end());
    std::string key = "{";
    for (size_t i = 0; i < decs.size(); ++i) {
        if (i) key += ',';
        key += decs[i];
    }
    return key + "}";
}

std::vector<Term> class_elements(const Congruence& cong, const Term& t, size_t cap) {
    std::set<Term> seen{t};
    std::deque<Term> queue{t};
    while (!queue.empty()) {
        Term cur = queue.front();
        queue.pop_front();
        for (const auto& next : cong.moves(cur)) {
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw DomainError("congruence class exceeds cap of " + std::to_string(cap) + " elements");
                queue.push_back(next);
            }
        }
    }
    return std::vector<Term>(seen.begin(), seen.end());
}

std::vector<Forest> forest_class(const Congruence& cong, const Forest& f, size_t cap) {
    std::vector<std::vector<Term>> per_term;
    size_t total = 1;
    for (const auto& t : f.terms) {
        per_term.push_back(class_elements(cong, t, cap));
        total *= per_term.back().size();
        if (total > cap) throw DomainError("forest class exceeds cap of " + std::to_string(cap) + " elements");
    }
    std::vector<Forest> out{Forest{}};
    for (const auto& choices : per_term) {
        std::vector<Forest> next;
        next.reserve(out.size() * choices.size());
        for (const auto& partial : out)
            for (const auto& t : choices) {
                Forest g = partial;
                g.terms.push_back(t);
                next.push_back(std::move(g));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Term canonical_rep(const Congruence& cong, const Term& t, size_t cap) {
    return class_elements(cong, t, cap).front();
}

Forest canonical_rep(const Congruence& cong, const Forest& f, size_t cap) {
    Forest out;
    for (const auto& t : f.terms) out.terms.push_back(canonical_rep(cong, t, cap));
    return out;
}

HopfElement e_class(const Congruence& cong, const Forest& f, size_t cap) {
    HopfElement x(Basis::E);
    for (const auto& g : forest_class(cong, f, cap)) x.add(forest_to_word(g), 1);
    return x;
}

Word multi_word_of(const Forest& f) {
    Word w;
    for (const auto& t : f.terms) {
        std::vector<std::pair<std::string, int>> counts;
        std::function<void(const Term&)> walk = [&](const Term& s) {
            if (s.is_leaf()) return;
            counts.push_back({s.decoration(), 1});
            for (const auto& c : s.children()) walk(c);
        };
        walk(t);
        w.push_back(OperadElement::multi(std::move(counts)));
    }
    return w;
}

Term multiset_rep_term(const Signature& sig, const OperadElement& m) {
    if (m.kind() != OperadKind::Multi) throw DomainError("multiset element expected");
    std::vector<std::string> names;
    for (const auto& [name, count] : m.counts())
        for (int i = 0; i < count; ++i) names.push_back(name);
    if (names.empty()) throw DomainError("the empty multiset spans no forest class");
    auto single = [&](const std::string& name) {
        return Term::node(name, std::vector<Term>(sig.arity(name)));
    };
    Term t = single(names.back());
    for (size_t i = names.size() - 1; i-- > 0;) t = partial_compose(single(names[i]), 1, t);
    return t;
}

std::vector<Forest> multiset_class(const Congruence& cong, const Word& multi_word, size_t cap) {
    Forest rep;
    for (const auto& m : multi_word) rep.terms.push_back(multiset_rep_term(cong.signature(), m));
    return forest_class(cong, rep, cap);
}

HopfElement multiset_class_sum(const Congruence& cong, const Word& multi_word, size_t cap) {
    HopfElement x(Basis::E);
    for (const auto& g : multiset_class(cong, multi_word, cap)) x.add(forest_to_word(g), 1);
    return x;
}

namespace {

std::string forest_key(const Congruence& cong, const Forest& f) {
    std::string key;
    for (const auto& t : f.terms) {
        if (!key.empty()) key += ' ';
        key += cong.class_key(t);
    }
    return key;
}

std::string word_key(const Congruence& cong, const Word& w) { return forest_key(cong, word_to_forest(w)); }

}  // namespace

SubalgebraReport subalgebra_check(const Congruence& cong, int max_degree, size_t cap) {
    SubalgebraReport report;
    const Signature& sig = cong.signature();
    NaturalHopf hopf(Operad::free_operad(sig));

    // class representatives by degree, plus class sizes per term key
    std::map<std::string, std::vector<Forest>> classes;  // forest key -> all members
    std::vector<Forest> reps;
    for (const auto& f : enumerate_reduced_forests_upto(sig, max_degree)) {
        std::string key = forest_key(cong, f);
        auto [it, fresh] = classes.try_emplace(key);
        if (fresh) reps.push_back(f);
        it->second.push_back(f);
    }

    auto fail = [&](const std::string& msg) {
        report.ok = false;
        if (report.detail.empty()) report.detail = msg;
    };

    // closure-vs-invariant sanity: the enumerated class must equal the move closure
    for (const auto& rep : reps) {
        auto closure = forest_class(cong, rep, cap);
        const auto& members = classes[forest_key(cong, rep)];
        if (closure != members) {
            fail("class of " + rep.str() + ": move closure (" + std::to_string(closure.size()) +
                 ") differs from invariant class (" + std::to_string(members.size()) + ")");
        }
    }

    std::map<std::string, HopfElement> class_sums;
    for (const auto& rep : reps) {
        HopfElement sum(Basis::E);
        for (const auto& member : classes[forest_key(cong, rep)]) sum.add(forest_to_word(member), 1);
        class_sums[forest_key(cong, rep)] = std::move(sum);
    }

    // products of class sums must be class sums (degree-bounded pairs)
    for (const auto& f : reps)
        for (const auto& g : reps) {
            if (f.degree() + g.degree() > max_degree) continue;
            HopfElement prod = hopf.product(class_sums[forest_key(cong, f)], class_sums[forest_key(cong, g)]);
            std::map<std::string, Coeff> coeff_by_class;
            std::map<std::string, size_t> count_by_class;
            for (const auto& [w, c] : prod.terms()) {
                std::string key = word_key(cong, w);
                auto it = coeff_by_class.find(key);
                if (it == coeff_by_class.end())
                    coeff_by_class[key] = c;
                else if (it->second != c)
                    fail("product " + f.str() + " * " + g.str() + ": uneven coefficients in class " + key);
                count_by_class[key]++;
            }
            for (const auto& [key, cnt] : count_by_class) {
                auto it = classes.find(key);
                if (it == classes.end() || it->second.size() != cnt)
                    fail("product " + f.str() + " * " + g.str() + ": class " + key + " only partially covered");
            }
        }

    // coproducts of class sums must be sums of class-sum tensors
    for (const auto& f : reps) {
        TensorElement cop = hopf.coproduct(class_sums[forest_key(cong, f)]);
        std::map<std::pair<std::string, std::string>, Coeff> coeff_by_pair;
        std::map<std::pair<std::string, std::string>, size_t> count_by_pair;
        for (const auto& [k, c] : cop.terms()) {
            auto key = std::make_pair(word_key(cong, k.first), word_key(cong, k.second));
            auto it = coeff_by_pair.find(key);
            if (it == coeff_by_pair.end())
                coeff_by_pair[key] = c;
            else if (it->second != c)
                fail("coproduct of class " + f.str() + ": uneven coefficients on pair (" + key.first + ", " +
                     key.second + ")");
            count_by_pair[key]++;
        }
        for (const auto& [key, cnt] : count_by_pair) {
            // expected size = product of the two word-class sizes; word classes
            // factor termwise, so compute from per-term class sizes
            auto side_size = [&](const std::string& side_key) -> size_t {
                auto it = classes.find(side_key);
                return it == classes.end() ? 0 : it->second.size();
            };
            size_t want = side_size(key.first) * side_size(key.second);
            if (want == 0 || cnt != want)
                fail("coproduct of class " + f.str() + ": pair (" + key.first + ", " + key.second +
                     ") covered " + std::to_string(cnt) + "/" + std::to_string(want));
        }
        auto& consts = report.coproduct_constants[forest_key(cong, f)];
        for (const auto& [key, c] : coeff_by_pair) consts[key] = c;
    }

    return report;
}

}  // namespace nhopf
