// Acceptance battery: one line per criterion, nonzero exit iff any fails.

#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "nhopf/alphabet.hpp"
#include "nhopf/bases.hpp"
#include "nhopf/congruence.hpp"
#include "nhopf/fdb.hpp"
#include "nhopf/hopf.hpp"
#include "nhopf/nck.hpp"
#include "nhopf/operad.hpp"
#include "nhopf/order.hpp"
#include "nhopf/verify.hpp"
#include "nhopf/wqsym.hpp"

using namespace nhopf;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "criterion " << n << " [pass]: " << label << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "criterion " << n << " [FAIL]: " << label << " (" << e.what() << ")\n";
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

const Signature& desk() {
    static Signature s = Signature::parse_inline("a:1,b:2,c:3");
    return s;
}

Forest pf(const char* text) { return parse_forest(text, &desk()); }
Word wd(const char* text) { return forest_to_word(pf(text)); }

void require_all_pass(const std::string& suite, int max_degree) {
    auto results = run_verify(suite, max_degree);
    require(!results.empty(), suite + " suite is empty");
    for (const auto& r : results)
        require(r.pass, suite + " check failed: " + r.name +
                            (r.detail.empty() ? "" : " (" + r.detail + ")"));
}

}  // namespace

int main() {
    criterion(1, "associative coproduct of the arity-four element", [] {
        NaturalHopf h(Operad::assoc_operad());
        auto al = [](long n) { return OperadElement::assoc(n); };
        TensorElement got = h.coproduct(h.e({al(4)}));
        TensorElement want;
        want.add({}, {al(4)}, 1);
        want.add({al(2)}, {al(2), al(2)}, 1);
        want.add({al(2)}, {al(3)}, 2);
        want.add({al(3)}, {al(2)}, 3);
        want.add({al(4)}, {}, 1);
        require(got == want, "tensor mismatch: " + got.str());
    });

    criterion(2, "alternating F expansion and telescoping H expansion", [] {
        Forest t2 = pf("c[*,a[*],*] b[*,*]");
        HopfElement e = f_to_e(desk(), t2);
        require(e.size() == 4, "F expansion has " + std::to_string(e.size()) + " terms");
        require(e.coeff(wd("c[*,a[*],*] b[*,*]")) == 1, "coefficient on the forest itself");
        require(e.coeff(wd("c[*,a[*],b[*,*]]")) == -1, "coefficient on the one-step graft");
        require(e.coeff(wd("c[a[*],*,*] b[*,*]")) == -1, "coefficient on the slot shift");
        require(e.coeff(wd("c[a[*],*,b[*,*]]")) == 1, "coefficient on the double move");
        HopfElement f = h_to_f(desk(), t2);
        require(f.size() == 3, "H expansion has " + std::to_string(f.size()) + " terms");
        require(f.coeff(wd("c[*,*,*] a[*] b[*,*]")) == 1, "coefficient on the bottom");
        require(f.coeff(wd("c[*,*,a[*]] b[*,*]")) == 1, "coefficient on the middle");
        require(f.coeff(wd("c[*,a[*],*] b[*,*]")) == 1, "coefficient on the forest itself");
    });

    criterion(3, "the three-letter word class interval is an 11-element lattice", [] {
        Interval iv(desk(), {"c", "a", "b"});
        require(iv.size() == 11, "interval size " + std::to_string(iv.size()));
        require(iv.word_class_size() == 11, "class size " + std::to_string(iv.word_class_size()));
        require(iv.cover_pairs().size() == 14,
                "cover pairs " + std::to_string(iv.cover_pairs().size()));
        require(iv.bottom().str() == "c[*,*,*] a[*] b[*,*]", "bottom " + iv.bottom().str());
        require(iv.top().str() == "c[a[b[*,*]],*,*]", "top " + iv.top().str());
        Forest u = pf("c[*,*,*] a[b[*,*]]");
        Forest t2 = pf("c[*,a[*],*] b[*,*]");
        require(iv.join(u, t2) == pf("c[*,a[b[*,*]],*]"), "join " + iv.join(u, t2).str());
        require(iv.meet(u, t2) == iv.bottom(), "meet " + iv.meet(u, t2).str());
    });

    criterion(4, "two distinct forests share one packed-word expansion", [] {
        auto m1 = wqsym_expansion(desk(), pf("b[a[*],b[*,*]]"));
        auto m2 = wqsym_expansion(desk(), pf("c[*,b[*,*],b[*,*]]"));
        require(m1 == m2, "expansions differ");
        require(m1.size() == 3, "expansion has " + std::to_string(m1.size()) + " words");
        require(m1.count(parse_packed_word("122")) == 1, "missing 122");
        require(m1.count(parse_packed_word("123")) == 1, "missing 123");
        require(m1.count(parse_packed_word("132")) == 1, "missing 132");
    });

    criterion(5, "the two-term decorated realization matches direct enumeration", [] {
        Forest f = parse_decorated_forest("3[2,3[2,3,1]] 1[2]");
        Signature sig = nck_signature({"1", "2", "3"}, 3);
        NCPolynomial p = realize_forest(sig, nck_bijection(f), decorated_alphabet(sig, 8));
        auto at = [](const char* base, int i) { return std::string(base) + ":" + std::to_string(i); };
        NCPolynomial want;
        for (int l1 = 0; l1 < 8; ++l1)
            for (int l2 = l1 + 1; l2 < 8; ++l2)
                for (int l3 = l1 + 1; l3 < 8; ++l3)
                    for (int l4 = l3 + 1; l4 < 8; ++l4)
                        for (int l5 = l3 + 1; l5 < 8; ++l5)
                            for (int l6 = l3 + 1; l6 < 8; ++l6)
                                for (int l7 = 0; l7 < 8; ++l7)
                                    for (int l8 = l7 + 1; l8 < 8; ++l8)
                                        want.add({at("3", l1), at("2", l2), at("3", l3),
                                                  at("2", l4), at("3", l5), at("1", l6),
                                                  at("1", l7), at("2", l8)},
                                                 1);
        require(p == want, "polynomials differ");
        require(!p.is_zero(), "empty realization");
    });

    criterion(6, "the mixed multiset class splits into six polynomial groups", [] {
        FdB f = fdb_construct(1, 2);
        Word w = f.multi_op.parse_word("{a,a,b} {a}");
        require(multiset_class(f.cong, f.multi_op.parse_word("{a,a,b}")).size() == 15,
                "triple multiset class size");
        require(multiset_class(f.cong, f.multi_op.parse_word("{a}")).size() == 1,
                "single multiset class size");
        FdbExpansion ex = fdb_expand(f, w, 4);
        std::multiset<size_t> sizes;
        size_t total = 0;
        for (const auto& g : ex.groups) {
            sizes.insert(g.members.size());
            total += g.members.size();
        }
        require(total == 15, "member total " + std::to_string(total));
        require(sizes == std::multiset<size_t>({1, 1, 1, 4, 4, 4}), "group sizes differ");
    });

    criterion(7, "hopf verification suite", [] { require_all_pass("hopf", 3); });

    criterion(8, "lattice verification suite", [] { require_all_pass("lattice", 3); });

    criterion(9, "bases verification suite and the interval product", [] {
        require_all_pass("bases", 2);
        HopfElement x(Basis::F), y(Basis::F);
        x.add(wd("c[*,*,*] b[*,b[*,*]]"), 1);
        y.add(wd("c[*,a[*],*] a[*] b[*,*]"), 1);
        HopfElement got = product_in_basis(desk(), x, y);
        HopfElement want(Basis::F);
        want.add(wd("c[*,*,*] b[*,b[*,*]] c[*,a[*],*] a[*] b[*,*]"), 1);
        want.add(wd("c[*,*,*] b[*,b[*,c[*,a[*],*]]] a[*] b[*,*]"), 1);
        want.add(wd("c[*,*,*] b[*,b[c[*,a[*],*],*]] a[*] b[*,*]"), 1);
        want.add(wd("c[*,*,*] b[*,b[c[*,a[*],*],a[*]]] b[*,*]"), 1);
        require(got == want, "interval product mismatch: " + got.str());
    });

    criterion(10, "realization verification suite", [] { require_all_pass("realization", 3); });

    criterion(11, "quotient verification suite and the arity map", [] {
        require_all_pass("quotient", 3);
        FdB f = fdb_construct(1, 1);
        Operad assoc = Operad::assoc_operad();
        require(fdb_assoc_word(f, f.multi_op.parse_word("{a}")) == assoc.parse_word("alpha_2"),
                "single generator");
        require(fdb_assoc_word(f, f.multi_op.parse_word("{a,a}")) == assoc.parse_word("alpha_3"),
                "double generator");
        require(fdb_assoc_word(f, f.multi_op.parse_word("{a,a,a}")) == assoc.parse_word("alpha_4"),
                "triple generator");
    });

    criterion(12, "admissible cuts agree with the factorization coproduct", [] {
        for (int v = 1; v <= 3; ++v)
            for (const auto& f : decorated_forests({"1", "2"}, v))
                require(nck_coproduct(f) == nck_coproduct_via_factorizations(f),
                        "mismatch on " + f.str());
    });

    criterion(13, "level realizations separate low-degree multiset words", [] {
        for (int s = 1; s <= 2; ++s) {
            FdB f = fdb_construct(1, s);
            std::vector<Word> words;
            for (const auto& m : f.multi_op.enumerate(1)) words.push_back({m});
            for (const auto& m : f.multi_op.enumerate(2)) words.push_back({m});
            for (const auto& m1 : f.multi_op.enumerate(1))
                for (const auto& m2 : f.multi_op.enumerate(1)) words.push_back({m1, m2});
            std::set<std::string> seen;
            for (const auto& w : words)
                require(seen.insert(fdb_expand(f, w, 3).total.str()).second,
                        "collision at " + word_str(w));
        }
    });

    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 13 criteria passed\n";
    return 0;
}
