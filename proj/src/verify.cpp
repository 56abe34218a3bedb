#include "nhopf/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "nhopf/bases.hpp"
#include "nhopf/congruence.hpp"
#include "nhopf/fdb.hpp"
#include "nhopf/forest.hpp"
#include "nhopf/hopf.hpp"
#include "nhopf/nck.hpp"
#include "nhopf/operad.hpp"
#include "nhopf/order.hpp"
#include "nhopf/signature.hpp"
#include "nhopf/wqsym.hpp"

namespace nhopf {

namespace {

Signature desk_sig() { return Signature::parse_inline("a:1,b:2,c:3"); }

template <typename F>
void check(std::vector<CheckResult>& out, const std::string& suite, const std::string& name, F body) {
    CheckResult r{suite, name, false, ""};
    try {
        std::string detail;
        r.pass = body(detail);
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
}

std::string counted(long n) { return "checked " + std::to_string(n) + " cases"; }

std::vector<Forest> forests_upto(const Signature& sig, int d) {
    return enumerate_reduced_forests_upto(sig, d);
}

// all reduced words of total degree <= max_degree over one instance
std::vector<Word> reduced_words_upto(const Operad& op, int max_degree) {
    std::map<int, std::vector<OperadElement>> by_degree;
    for (int d = 1; d <= max_degree; ++d) by_degree[d] = op.enumerate(d);
    std::vector<Word> out{Word{}};
    std::function<void(Word&, int)> grow = [&](Word& w, int rest) {
        for (int d = 1; d <= rest; ++d)
            for (const auto& x : by_degree[d]) {
                w.push_back(x);
                out.push_back(w);
                grow(w, rest - d);
                w.pop_back();
            }
    };
    Word w;
    grow(w, max_degree);
    return out;
}

// ---- hopf identities -------------------------------------------------

using TripleKey = std::array<Word, 3>;

struct TripleLess {
    bool operator()(const TripleKey& a, const TripleKey& b) const {
        WordLess less;
        for (int i = 0; i < 3; ++i) {
            if (less(a[i], b[i])) return true;
            if (less(b[i], a[i])) return false;
        }
        return false;
    }
};

using TripleTensor = std::map<TripleKey, Coeff, TripleLess>;

void triple_add(TripleTensor& t, const Word& a, const Word& b, const Word& c, const Coeff& v) {
    if (v == 0) return;
    TripleKey key{a, b, c};
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(std::move(key), v);
        return;
    }
    it->second += v;
    if (it->second == 0) t.erase(it);
}

bool coassociative(const NaturalHopf& hopf, const Word& w) {
    TensorElement outer = hopf.coproduct_word(w);
    TripleTensor left, right;
    for (const auto& [legs, c] : outer.terms()) {
        TensorElement dl = hopf.coproduct_word(legs.first);
        for (const auto& [inner, c2] : dl.terms())
            triple_add(left, inner.first, inner.second, legs.second, c * c2);
        TensorElement dr = hopf.coproduct_word(legs.second);
        for (const auto& [inner, c2] : dr.terms())
            triple_add(right, legs.first, inner.first, inner.second, c * c2);
    }
    return left == right;
}

bool counit_laws(const NaturalHopf& hopf, const Word& w) {
    HopfElement left(Basis::E), right(Basis::E);
    TensorElement dw = hopf.coproduct_word(w);
    for (const auto& [legs, c] : dw.terms()) {
        if (legs.first.empty()) left.add(legs.second, c);
        if (legs.second.empty()) right.add(legs.first, c);
    }
    return left == hopf.e(w) && right == hopf.e(w);
}

bool antipode_law(const NaturalHopf& hopf, const Word& w) {
    HopfElement acc(Basis::E);
    TensorElement dw = hopf.coproduct_word(w);
    for (const auto& [legs, c] : dw.terms()) {
        HopfElement piece = hopf.product(hopf.antipode(hopf.e(legs.first)), hopf.e(legs.second));
        piece *= c;
        acc += piece;
    }
    HopfElement want = hopf.one();
    want *= hopf.counit(hopf.e(w));
    return acc == want;
}

bool bialgebra_pair(const NaturalHopf& hopf, const Word& u, const Word& v) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    TensorElement lhs = hopf.coproduct_word(uv);
    TensorElement rhs;
    TensorElement du = hopf.coproduct_word(u);
    TensorElement dv = hopf.coproduct_word(v);
    for (const auto& [a, ca] : du.terms())
        for (const auto& [b, cb] : dv.terms()) {
            Word l = a.first, r = a.second;
            l.insert(l.end(), b.first.begin(), b.first.end());
            r.insert(r.end(), b.second.begin(), b.second.end());
            rhs.add(l, r, ca * cb);
        }
    return lhs == rhs;
}

bool degree_split(const NaturalHopf& hopf, const Word& w) {
    long total = hopf.word_degree(w);
    TensorElement dw = hopf.coproduct_word(w);
    for (const auto& [legs, c] : dw.terms())
        if (hopf.word_degree(legs.first) + hopf.word_degree(legs.second) != total) return false;
    return true;
}

// ---- random alphabets -------------------------------------------------

RelatedAlphabet random_alphabet(std::mt19937& rng, const Signature& sig, const std::string& suffix) {
    static const std::array<const char*, 4> pool{"p", "q", "x", "y"};
    int k = 2 + (int)(rng() % 3);
    RelatedAlphabet A;
    for (int i = 0; i < k; ++i) A.letters.push_back(pool[(size_t)i] + suffix);
    for (const auto& a : A.letters)
        if (rng() % 10 < 7) A.roots.insert(a);
    for (const auto& g : sig.generators())
        for (const auto& a : A.letters)
            if (rng() % 10 < 7) A.decorations[g.name].insert(a);
    for (int j = 1; j <= sig.max_arity(); ++j)
        for (const auto& a : A.letters)
            for (const auto& b : A.letters)
                if (rng() % 2) A.edges[j].insert({a, b});
    A.validate();
    return A;
}

TensorPoly tensor_realize(const Signature& sig, const NaturalHopf& hopf, const Word& w,
                          const RelatedAlphabet& left, const RelatedAlphabet& right) {
    TensorPoly out;
    TensorElement dw = hopf.coproduct_word(w);
    for (const auto& [legs, c] : dw.terms()) {
        NCPolynomial pl = realize_forest(sig, word_to_forest(legs.first), left);
        NCPolynomial pr = realize_forest(sig, word_to_forest(legs.second), right);
        for (const auto& [lw, cl] : pl.terms())
            for (const auto& [rw, cr] : pr.terms()) {
                auto key = std::make_pair(lw, rw);
                auto it = out.find(key);
                Coeff v = c * cl * cr;
                if (it == out.end()) {
                    out.emplace(key, v);
                } else {
                    it->second += v;
                    if (it->second == 0) out.erase(it);
                }
            }
    }
    return out;
}

// ---- suites ------------------------------------------------------------

void suite_core(std::vector<CheckResult>& out, int d) {
    const std::string S = "core";
    Signature sig = desk_sig();

    check(out, S, "composition grading and arity laws", [&](std::string& detail) {
        std::vector<Term> pool{Term()};
        for (const auto& t : enumerate_terms(sig, 1)) pool.push_back(t);
        long n = 0;
        for (int dt = 1; dt <= std::min(d, 2); ++dt)
            for (const auto& t : enumerate_terms(sig, dt)) {
                std::vector<Term> args((size_t)t.arity());
                std::function<bool(size_t)> fill = [&](size_t i) -> bool {
                    if (i == args.size()) {
                        Term c = full_compose(t, args);
                        long dsum = t.degree(), asum = 0;
                        for (const auto& a : args) {
                            dsum += a.degree();
                            asum += a.arity();
                        }
                        ++n;
                        return c.degree() == dsum && c.arity() == asum;
                    }
                    for (const auto& choice : pool) {
                        args[i] = choice;
                        if (!fill(i + 1)) return false;
                    }
                    return true;
                };
                if (!fill(0)) {
                    detail = "law broken at " + t.str();
                    return false;
                }
            }
        detail = counted(n);
        return true;
    });

    check(out, S, "parse of print is the identity", [&](std::string& detail) {
        long n = 0;
        for (const auto& f : forests_upto(sig, d)) {
            if (!(parse_forest(f.str(), &sig) == f)) {
                detail = "round trip broke " + f.str();
                return false;
            }
            ++n;
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "reduce is idempotent and degree preserving", [&](std::string& detail) {
        long n = 0;
        for (const auto& f : forests_upto(sig, std::min(d, 2))) {
            Forest padded;
            padded.terms.push_back(Term());
            for (const auto& t : f.terms) {
                padded.terms.push_back(t);
                padded.terms.push_back(Term());
            }
            Forest r = reduce(padded);
            if (!(r == f) || !(reduce(r) == r) || r.degree() != padded.degree()) {
                detail = "reduce misbehaved on padding of " + f.str();
                return false;
            }
            ++n;
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "node ids follow path order", [&](std::string& detail) {
        long n = 0;
        for (const auto& f : forests_upto(sig, d)) {
            auto ns = nodes(f);
            for (size_t i = 1; i < ns.size(); ++i) {
                auto key = [&](const NodeEntry& e) { return std::make_pair(e.term, e.path); };
                if (!(key(ns[i - 1]) < key(ns[i]))) {
                    detail = "node order broke in " + f.str();
                    return false;
                }
            }
            ++n;
        }
        detail = counted(n);
        return true;
    });
}

void suite_operad(std::vector<CheckResult>& out, int d) {
    const std::string S = "operad";
    Signature sig = desk_sig();
    std::vector<std::pair<std::string, Operad>> instances{
        {"free", Operad::free_operad(sig)},
        {"assoc", Operad::assoc_operad()},
        {"multi", Operad::multi_operad(sig)},
    };

    check(out, S, "factorizations recompose and grade", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, op] : instances)
            for (int k = 1; k <= std::min(d, 3); ++k)
                for (const auto& x : op.enumerate(k))
                    for (const auto& fac : op.factorizations(x)) {
                        long dsum = op.degree(fac.outer);
                        for (const auto& y : fac.inner) dsum += op.degree(y);
                        if (!(op.compose(fac.outer, fac.inner) == x) || dsum != k) {
                            detail = name + " factorization broke at " + x.str();
                            return false;
                        }
                        ++n;
                    }
        detail = counted(n);
        return true;
    });

    check(out, S, "factorizations are complete (brute force)", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, op] : instances)
            for (int k = 1; k <= std::min(d, 3); ++k)
                for (const auto& x : op.enumerate(k)) {
                    std::set<std::pair<std::string, std::string>> listed;
                    for (const auto& fac : op.factorizations(x))
                        listed.insert({fac.outer.str(), word_str(fac.inner)});
                    std::set<std::pair<std::string, std::string>> brute;
                    for (int dy = 0; dy <= k; ++dy) {
                        std::vector<OperadElement> outers =
                            dy == 0 ? std::vector<OperadElement>{op.unit()} : op.enumerate(dy);
                        for (const auto& y : outers) {
                            long slots = op.arity(y);
                            std::vector<OperadElement> w((size_t)slots);
                            std::function<void(size_t, int)> fill = [&](size_t i, int rest) {
                                if (i == w.size()) {
                                    if (rest == 0 && op.compose(y, w) == x)
                                        brute.insert({y.str(), word_str(w)});
                                    return;
                                }
                                for (int e = 0; e <= rest; ++e) {
                                    std::vector<OperadElement> choices =
                                        e == 0 ? std::vector<OperadElement>{op.unit()} : op.enumerate(e);
                                    for (const auto& z : choices) {
                                        w[i] = z;
                                        fill(i + 1, rest - e);
                                    }
                                }
                            };
                            fill(0, k - dy);
                        }
                    }
                    if (listed != brute) {
                        detail = name + ": factorization set differs at " + x.str();
                        return false;
                    }
                    ++n;
                }
        detail = counted(n);
        return true;
    });

    check(out, S, "multiset arity formula", [&](std::string& detail) {
        Operad op = Operad::multi_operad(sig);
        long n = 0;
        for (int k = 1; k <= d; ++k)
            for (const auto& x : op.enumerate(k)) {
                long sum = 0, count = 0;
                for (const auto& [name, c] : x.counts()) {
                    sum += (long)sig.arity(name) * c;
                    count += c;
                }
                if (op.arity(x) != sum - count + 1) {
                    detail = "arity formula broke at " + x.str();
                    return false;
                }
                ++n;
            }
        detail = counted(n);
        return true;
    });
}

void suite_hopf(std::vector<CheckResult>& out, int d) {
    const std::string S = "hopf";
    Signature sig = desk_sig();
    std::vector<std::pair<std::string, Operad>> instances{
        {"free", Operad::free_operad(sig)},
        {"assoc", Operad::assoc_operad()},
        {"multi", Operad::multi_operad(sig)},
    };
    auto words_for = [&](const Operad& op, int bound) {
        // the associative instance gets a slightly higher single-letter range
        if (op.kind() == OperadKind::Assoc) {
            std::vector<Word> ws{Word{}};
            for (const auto& w : reduced_words_upto(op, bound + 1))
                if (!w.empty()) ws.push_back(w);
            return ws;
        }
        return reduced_words_upto(op, bound);
    };

    check(out, S, "coassociativity", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, op] : instances) {
            NaturalHopf hopf(op);
            for (const auto& w : words_for(op, std::min(d, 3))) {
                if (!coassociative(hopf, w)) {
                    detail = name + ": coassociativity broke at E(" + word_str(w) + ")";
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "counit laws", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, op] : instances) {
            NaturalHopf hopf(op);
            for (const auto& w : words_for(op, std::min(d, 3))) {
                if (!counit_laws(hopf, w)) {
                    detail = name + ": counit law broke at E(" + word_str(w) + ")";
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "bialgebra compatibility", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, op] : instances) {
            NaturalHopf hopf(op);
            auto ws = words_for(op, std::min(d, 2));
            for (const auto& u : ws)
                for (const auto& v : ws) {
                    if (!bialgebra_pair(hopf, u, v)) {
                        detail = name + ": coproduct of product broke at E(" + word_str(u) + "), E(" +
                                 word_str(v) + ")";
                        return false;
                    }
                    ++n;
                }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "antipode law", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, op] : instances) {
            NaturalHopf hopf(op);
            for (const auto& w : words_for(op, std::min(d, 3))) {
                if (!antipode_law(hopf, w)) {
                    detail = name + ": antipode law broke at E(" + word_str(w) + ")";
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "coproduct splits degree", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, op] : instances) {
            NaturalHopf hopf(op);
            for (const auto& w : words_for(op, std::min(d, 3))) {
                if (!degree_split(hopf, w)) {
                    detail = name + ": degree split broke at E(" + word_str(w) + ")";
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });
}

void suite_lattice(std::vector<CheckResult>& out, int d) {
    const std::string S = "lattice";
    Signature sig = desk_sig();
    std::vector<std::vector<std::string>> words;
    {
        std::vector<std::string> letters{"a", "b", "c"};
        std::vector<std::vector<std::string>> frontier{{}};
        for (int len = 1; len <= std::min(d, 3); ++len) {
            std::vector<std::vector<std::string>> next;
            for (const auto& w : frontier)
                for (const auto& g : letters) {
                    auto ext = w;
                    ext.push_back(g);
                    words.push_back(ext);
                    next.push_back(std::move(ext));
                }
            frontier = std::move(next);
        }
    }

    check(out, S, "order is reflexive, antisymmetric, transitive", [&](std::string& detail) {
        long n = 0;
        for (const auto& w : words) {
            WordClassPoset poset(sig, w);
            size_t m = poset.elements().size();
            for (size_t i = 0; i < m; ++i) {
                if (!poset.leq((int)i, (int)i)) {
                    detail = "reflexivity broke in class of " + poset.elements()[i].str();
                    return false;
                }
                for (size_t j = 0; j < m; ++j) {
                    if (i != j && poset.leq((int)i, (int)j) && poset.leq((int)j, (int)i)) {
                        detail = "antisymmetry broke at " + poset.elements()[i].str();
                        return false;
                    }
                    for (size_t k = 0; k < m; ++k)
                        if (poset.leq((int)i, (int)j) && poset.leq((int)j, (int)k) &&
                            !poset.leq((int)i, (int)k)) {
                            detail = "transitivity broke at " + poset.elements()[i].str();
                            return false;
                        }
                }
            }
            n += (long)m;
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "covers preserve degree and word", [&](std::string& detail) {
        long n = 0;
        for (const auto& f : forests_upto(sig, d)) {
            if (f.empty()) continue;
            for (const auto& g : covers(sig, f)) {
                if (g.degree() != f.degree() || preorder_decorations(g) != preorder_decorations(f) ||
                    !g.reduced()) {
                    detail = "cover move broke at " + f.str() + " -> " + g.str();
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "intervals have unique meets and joins", [&](std::string& detail) {
        long n = 0;
        for (const auto& w : words) {
            Interval iv(sig, w);
            auto els = iv.elements();
            for (const auto& x : els)
                for (const auto& y : els) {
                    Forest lo = iv.meet(x, y);
                    Forest hi = iv.join(x, y);
                    if (!less_equal(sig, lo, x) || !less_equal(sig, lo, y) || !less_equal(sig, x, hi) ||
                        !less_equal(sig, y, hi)) {
                        detail = "meet/join bounds broke at " + x.str() + " , " + y.str();
                        return false;
                    }
                    ++n;
                }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "moebius sums vanish on proper intervals", [&](std::string& detail) {
        long n = 0;
        for (const auto& w : words) {
            Interval iv(sig, w);
            auto& poset = iv.poset();
            for (int i : iv.element_ids())
                for (int j : iv.element_ids()) {
                    if (i == j || !poset.leq(i, j)) continue;
                    Coeff sum = 0;
                    for (int h = 0; h < (int)poset.elements().size(); ++h)
                        if (poset.leq(i, h) && poset.leq(h, j)) sum += poset.moebius(i, h);
                    if (sum != 0) {
                        detail = "moebius sum nonzero between " + poset.elements()[(size_t)i].str() +
                                 " and " + poset.elements()[(size_t)j].str();
                        return false;
                    }
                    ++n;
                }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "covers are the transitive reduction", [&](std::string& detail) {
        long n = 0;
        for (const auto& w : words) {
            WordClassPoset poset(sig, w);
            int m = (int)poset.elements().size();
            for (int i = 0; i < m; ++i) {
                std::set<int> listed(poset.cover_up()[(size_t)i].begin(),
                                     poset.cover_up()[(size_t)i].end());
                std::set<int> reduced_set;
                for (int j = 0; j < m; ++j) {
                    if (i == j || !poset.leq(i, j)) continue;
                    bool direct = true;
                    for (int k = 0; k < m && direct; ++k)
                        if (k != i && k != j && poset.leq(i, k) && poset.leq(k, j)) direct = false;
                    if (direct) reduced_set.insert(j);
                }
                if (listed != reduced_set) {
                    detail = "cover set is not the reduction at " + poset.elements()[(size_t)i].str();
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });
}

void suite_bases(std::vector<CheckResult>& out, int d) {
    const std::string S = "bases";
    Signature sig = desk_sig();
    Operad op = Operad::free_operad(sig);
    NaturalHopf hopf(op);
    auto fs = forests_upto(sig, std::min(d, 2));

    check(out, S, "basis products agree with conjugated concatenation", [&](std::string& detail) {
        long n = 0;
        for (Basis basis : {Basis::F, Basis::H})
            for (const auto& f : fs)
                for (const auto& g : fs) {
                    HopfElement x(basis), y(basis);
                    x.add(forest_to_word(f), 1);
                    y.add(forest_to_word(g), 1);
                    HopfElement direct = product_in_basis(sig, x, y);
                    HopfElement via_e = convert_basis(
                        sig, hopf.product(convert_basis(sig, x, Basis::E), convert_basis(sig, y, Basis::E)),
                        basis);
                    if (!(direct == via_e)) {
                        detail = basis_name(basis) + " product broke at " + f.str() + " , " + g.str();
                        return false;
                    }
                    ++n;
                }
        detail = counted(n);
        return true;
    });

    check(out, S, "concatenation lies below the graft product", [&](std::string& detail) {
        long n = 0;
        for (const auto& f : fs)
            for (const auto& g : fs) {
                if (f.empty() || g.empty()) continue;
                if (!less_equal(sig, over(f, g), under(f, g))) {
                    detail = "ordering broke at " + f.str() + " , " + g.str();
                    return false;
                }
                ++n;
            }
        detail = counted(n);
        return true;
    });

    check(out, S, "conversion matrices are unitriangular", [&](std::string& detail) {
        long n = 0;
        for (const auto& f : forests_upto(sig, std::min(d, 3))) {
            if (f.empty()) continue;
            for (const auto& x : {f_to_e(sig, f), e_to_f(sig, f)}) {
                if (x.coeff(forest_to_word(f)) != 1) {
                    detail = "diagonal coefficient is not 1 at " + f.str();
                    return false;
                }
                for (const auto& [w, c] : x.terms())
                    if (!less_equal(sig, f, word_to_forest(w))) {
                        detail = "support escapes the up set at " + f.str();
                        return false;
                    }
            }
            ++n;
        }
        detail = counted(n);
        return true;
    });
}

void suite_quotient(std::vector<CheckResult>& out, int d) {
    const std::string S = "quotient";
    std::vector<std::pair<std::string, Signature>> sigs{
        {"a:2", Signature::parse_inline("a:2")},
        {"a:2,b:2", Signature::parse_inline("a:2,b:2")},
        {"a:1,b:2", Signature::parse_inline("a:1,b:2")},
    };

    check(out, S, "move closure equals the multiset class", [&](std::string& detail) {
        for (const auto& [name, sig] : sigs) {
            ExchangeCongruence cong(sig);
            SubalgebraReport report = subalgebra_check(cong, std::min(d, 3));
            if (!report.ok) {
                detail = name + ": " + report.detail;
                return false;
            }
        }
        detail = "closed under product and coproduct";
        return true;
    });

    check(out, S, "class sums are degree homogeneous", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, sig] : sigs) {
            ExchangeCongruence cong(sig);
            Operad multi = Operad::multi_operad(sig);
            NaturalHopf hopf(Operad::free_operad(sig));
            for (const auto& w : reduced_words_upto(multi, std::min(d, 3))) {
                if (w.empty()) continue;
                auto comps = hopf.degree_components(multiset_class_sum(cong, w));
                if (comps.size() != 1) {
                    detail = name + ": class sum of " + word_str(w) + " is not homogeneous";
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "quotient structure constants match the multiset instance", [&](std::string& detail) {
        long n = 0;
        for (const auto& [name, sig] : sigs) {
            ExchangeCongruence cong(sig);
            Operad multi = Operad::multi_operad(sig);
            NaturalHopf free_hopf(Operad::free_operad(sig));
            NaturalHopf multi_hopf(multi);
            for (const auto& w : reduced_words_upto(multi, std::min(d, 3))) {
                TensorElement lhs = free_hopf.coproduct(multiset_class_sum(cong, w));
                TensorElement rhs;
                TensorElement dw = multi_hopf.coproduct_word(w);
                for (const auto& [legs, c] : dw.terms()) {
                    HopfElement su = multiset_class_sum(cong, legs.first);
                    HopfElement sv = multiset_class_sum(cong, legs.second);
                    for (const auto& [wu, cu] : su.terms())
                        for (const auto& [wv, cv] : sv.terms()) rhs.add(wu, wv, c * cu * cv);
                }
                if (!(lhs == rhs)) {
                    detail = name + ": constants differ at " + word_str(w);
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });
}

void suite_realization(std::vector<CheckResult>& out, int d) {
    const std::string S = "realization";
    Signature sig = desk_sig();
    Operad op = Operad::free_operad(sig);
    NaturalHopf hopf(op);

    check(out, S, "realized monomials have the forest degree", [&](std::string& detail) {
        std::mt19937 rng(91101);
        long n = 0;
        for (int trial = 0; trial < 5; ++trial) {
            RelatedAlphabet A = random_alphabet(rng, sig, "");
            for (const auto& f : forests_upto(sig, std::min(d, 3))) {
                NCPolynomial p = realize_forest(sig, f, A);
                for (const auto& [w, c] : p.terms()) {
                    if ((long)w.size() != f.degree()) {
                        detail = "length broke at " + f.str();
                        return false;
                    }
                    ++n;
                }
            }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "realization is an algebra morphism", [&](std::string& detail) {
        std::mt19937 rng(91102);
        long n = 0;
        auto fs = forests_upto(sig, std::min(d, 2));
        for (int trial = 0; trial < 3; ++trial) {
            RelatedAlphabet A = random_alphabet(rng, sig, "");
            for (const auto& f : fs)
                for (const auto& g : fs) {
                    HopfElement ef = hopf.e(forest_to_word(f));
                    HopfElement eg = hopf.e(forest_to_word(g));
                    NCPolynomial lhs = realize(sig, hopf.product(ef, eg), A);
                    NCPolynomial rhs = realize(sig, ef, A) * realize(sig, eg, A);
                    if (!(lhs == rhs)) {
                        detail = "morphism broke at " + f.str() + " , " + g.str();
                        return false;
                    }
                    ++n;
                }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "splitting a disjoint sum computes the coproduct", [&](std::string& detail) {
        std::mt19937 rng(91103);
        long n = 0;
        auto fs = forests_upto(sig, std::min(d, 3));
        for (int trial = 0; trial < 20; ++trial) {
            RelatedAlphabet A = random_alphabet(rng, sig, "1");
            RelatedAlphabet B = random_alphabet(rng, sig, "2");
            DisjointSum ds = disjoint_sum(A, B, sig.max_arity());
            std::set<std::string> left(ds.left.letters.begin(), ds.left.letters.end());
            std::set<std::string> right(ds.right.letters.begin(), ds.right.letters.end());
            for (const auto& f : fs) {
                Word w = forest_to_word(f);
                TensorPoly lhs = theta_split(realize_forest(sig, f, ds.sum), left, right);
                TensorPoly rhs = tensor_realize(sig, hopf, w, ds.left, ds.right);
                if (lhs != rhs) {
                    detail = "splitting identity broke at " + f.str() + " on trial " +
                             std::to_string(trial);
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "address truncation separates small forests", [&](std::string& detail) {
        int bound = std::min(d, 3);
        RelatedAlphabet A = canonical_alphabet(sig, sig.max_arity(), bound);
        std::map<std::string, Forest> seen;
        long n = 0;
        for (const auto& f : forests_upto(sig, bound)) {
            std::string key = realize_forest(sig, f, A).str();
            auto [it, fresh] = seen.emplace(key, f);
            if (!fresh) {
                detail = "collision between " + it->second.str() + " and " + f.str();
                return false;
            }
            ++n;
        }
        detail = counted(n);
        return true;
    });
}

void suite_special(std::vector<CheckResult>& out, int d) {
    const std::string S = "special";
    Signature sig = desk_sig();
    Operad op = Operad::free_operad(sig);
    NaturalHopf hopf(op);
    const std::vector<std::string> letter_pool{"w", "x", "y", "z"};

    check(out, S, "packed-word expansion matches realization", [&](std::string& detail) {
        long n = 0;
        for (size_t k = 2; k <= letter_pool.size(); ++k) {
            std::vector<std::string> letters(letter_pool.begin(), letter_pool.begin() + (long)k);
            RelatedAlphabet A = total_order_alphabet(sig, letters);
            for (const auto& f : forests_upto(sig, std::min(d, 3))) {
                NCPolynomial lhs = realize_forest(sig, f, A);
                NCPolynomial rhs;
                for (const auto& [u, c] : wqsym_expansion(sig, f)) {
                    NCPolynomial p = wqsym_realize_m(u, letters);
                    p *= c;
                    rhs += p;
                }
                if (!(lhs == rhs)) {
                    detail = "expansion broke at " + f.str() + " over " + std::to_string(k) + " letters";
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "packed-word expansion is multiplicative", [&](std::string& detail) {
        long n = 0;
        std::vector<std::string> letters(letter_pool.begin(), letter_pool.begin() + 3);
        auto realize_expansion = [&](const Forest& f) {
            NCPolynomial p;
            for (const auto& [u, c] : wqsym_expansion(sig, f)) {
                NCPolynomial q = wqsym_realize_m(u, letters);
                q *= c;
                p += q;
            }
            return p;
        };
        auto fs = forests_upto(sig, std::min(d, 2));
        for (const auto& f : fs)
            for (const auto& g : fs) {
                if (!(realize_expansion(over(f, g)) == realize_expansion(f) * realize_expansion(g))) {
                    detail = "product expansion broke at " + f.str() + " , " + g.str();
                    return false;
                }
                ++n;
            }
        detail = counted(n);
        return true;
    });

    check(out, S, "cut coproduct matches the factorization coproduct", [&](std::string& detail) {
        long n = 0;
        for (int v = 0; v <= std::min(d, 3); ++v)
            for (const auto& f : decorated_forests({"1", "2"}, v)) {
                if (!(nck_coproduct(f) == nck_coproduct_via_factorizations(f))) {
                    detail = "coproducts differ at " + f.str();
                    return false;
                }
                ++n;
            }
        detail = counted(n);
        return true;
    });

    check(out, S, "arity-one class counts match the composition formula", [&](std::string& detail) {
        FdB fdb = fdb_construct(0, 2);
        std::ostringstream counts_text;
        for (int k = 1; k <= std::min(d, 4); ++k) {
            std::set<std::string> classes;
            for (const auto& f : enumerate_reduced_forests(fdb.sig, k))
                classes.insert(word_str(multi_word_of(f)));
            // compositions of k, each part drawing a multiset from s generators
            long s = fdb.s;
            std::vector<long> ways((size_t)k + 1, 0);
            ways[0] = 1;
            for (int total = 1; total <= k; ++total)
                for (int part = 1; part <= total; ++part) {
                    long choose = 1;
                    for (int i = 1; i <= part; ++i) choose = choose * (s + i - 1) / i;
                    ways[(size_t)total] += ways[(size_t)(total - part)] * choose;
                }
            if ((long)classes.size() != ways[(size_t)k]) {
                detail = "class count differs at degree " + std::to_string(k);
                return false;
            }
            counts_text << (k > 1 ? ", " : "") << "degree " << k << ": " << classes.size();
        }
        detail = counts_text.str();
        return true;
    });

    // The letterwise arity map transports the coproduct only for the binary
    // generator: at r >= 2 the lone letter is primitive while its image is not.
    check(out, S, "single-generator constants match the associative instance", [&](std::string& detail) {
        long n = 0;
        FdB fdb = fdb_construct(1, 1);
        NaturalHopf multi_hopf(fdb.multi_op);
        NaturalHopf assoc_hopf(Operad::assoc_operad());
        for (const auto& w : reduced_words_upto(fdb.multi_op, std::min(d, 3))) {
            TensorElement lhs;
            TensorElement dw = multi_hopf.coproduct_word(w);
            for (const auto& [legs, c] : dw.terms())
                lhs.add(fdb_assoc_word(fdb, legs.first), fdb_assoc_word(fdb, legs.second), c);
            TensorElement rhs = assoc_hopf.coproduct_word(fdb_assoc_word(fdb, w));
            if (!(lhs == rhs)) {
                detail = "constants differ at " + word_str(w);
                return false;
            }
            ++n;
        }
        detail = counted(n);
        return true;
    });

    check(out, S, "class sums realize distinctly at low degree", [&](std::string& detail) {
        long n = 0;
        for (int s : {1, 2}) {
            FdB fdb = fdb_construct(1, s);
            std::map<std::string, std::string> seen;
            for (const auto& w : reduced_words_upto(fdb.multi_op, std::min(d, 2))) {
                if (w.empty()) continue;
                std::string key = fdb_expand(fdb, w, 3).total.str();
                auto [it, fresh] = seen.emplace(key, word_str(w));
                if (!fresh) {
                    detail = "collision between " + it->second + " and " + word_str(w);
                    return false;
                }
                ++n;
            }
        }
        detail = counted(n);
        return true;
    });
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"core",  "operad",   "hopf",        "lattice",
                                                "bases", "quotient", "realization", "special"};
    return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, int max_degree) {
    if (max_degree < 0) throw DomainError("max degree must be >= 0");
    std::vector<CheckResult> out;
    bool all = suite == "all";
    bool known = all;
    for (const auto& name : verify_suites())
        if (name == suite) known = true;
    if (!known) throw DomainError("unknown suite: " + suite);
    auto want = [&](const char* name) { return all || suite == name; };
    if (want("core")) suite_core(out, max_degree);
    if (want("operad")) suite_operad(out, max_degree);
    if (want("hopf")) suite_hopf(out, max_degree);
    if (want("lattice")) suite_lattice(out, max_degree);
    if (want("bases")) suite_bases(out, max_degree);
    if (want("quotient")) suite_quotient(out, max_degree);
    if (want("realization")) suite_realization(out, max_degree);
    if (want("special")) suite_special(out, max_degree);
    return out;
}

}  // namespace nhopf
