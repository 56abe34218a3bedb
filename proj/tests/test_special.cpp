#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "nhopf/fdb.hpp"
#include "nhopf/nck.hpp"
#include "nhopf/wqsym.hpp"

using namespace nhopf;

namespace {

const Signature& desk() {
    static Signature s = Signature::parse_inline("a:1,b:2,c:3");
    return s;
}

Forest pf(const char* text) { return parse_forest(text, &desk()); }
Forest df(const char* text) { return parse_decorated_forest(text); }
PackedWord pw(const char* text) { return parse_packed_word(text); }

}  // namespace

TEST_CASE("packing relabels by rank and fixes packed words") {
    CHECK(packed_word_str(pack(pw("4234473"))) == "3123342");
    CHECK(is_packed(pw("1525346")));
    CHECK_FALSE(is_packed({2, 3}));
    CHECK(pack(pw("11")) == pw("11"));
    CHECK(is_packed({}));
    CHECK(packed_word_str({}) == "");
}

TEST_CASE("packed words enumerate in lexicographic order") {
    std::vector<PackedWord> two = packed_words(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == pw("11"));
    CHECK(two[1] == pw("12"));
    CHECK(two[2] == pw("21"));
    CHECK(packed_words(3).size() == 13);
    CHECK(packed_words(0).size() == 1);
    CHECK(packed_words(0)[0].empty());
}

TEST_CASE("packed word parsing takes digits or comma lists") {
    CHECK(pw("10,2,1") == PackedWord{10, 2, 1});
    CHECK(packed_word_str({10, 2, 1}) == "10,2,1");
    CHECK_THROWS_AS(parse_packed_word("102"), ParseError);   // 0 is not a digit letter
    CHECK_THROWS_AS(parse_packed_word("1,0"), ParseError);   // letters start at 1
    CHECK_THROWS_AS(parse_packed_word("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_packed_word("12a"), ParseError);
}

TEST_CASE("compatibility demands strict increase along tree edges") {
    Forest f = pf("c[a[*],*,b[a[*],*]] b[*,a[b[*,*]]]");
    CHECK(wqsym_compatible(pw("1223123"), f));
    CHECK(wqsym_compatible(pw("1525346"), f));
    CHECK_FALSE(wqsym_compatible(pw("1111111"), f));
    CHECK_FALSE(wqsym_compatible(pw("11"), f));  // wrong length
    CHECK_THROWS_AS(wqsym_compatible({2, 3}, f), DomainError);
    CHECK_THROWS_AS(wqsym_compatible(pw("1"), parse_forest("*")), DomainError);
}

TEST_CASE("different forests can share one quasi-symmetric expansion") {
    auto m1 = wqsym_expansion(desk(), pf("b[a[*],b[*,*]]"));
    auto m2 = wqsym_expansion(desk(), pf("c[*,b[*,*],b[*,*]]"));
    CHECK(m1 == m2);
    REQUIRE(m1.size() == 3);
    CHECK(m1.at(pw("122")) == 1);
    CHECK(m1.at(pw("123")) == 1);
    CHECK(m1.at(pw("132")) == 1);
}

TEST_CASE("the M basis realizes by choosing value sets in order") {
    NCPolynomial p = wqsym_realize_m(pw("2113"), {"a", "b", "c", "d"});
    REQUIRE(p.size() == 4);
    CHECK(p.coeff({"b", "a", "a", "c"}) == 1);
    CHECK(p.coeff({"b", "a", "a", "d"}) == 1);
    CHECK(p.coeff({"c", "a", "a", "d"}) == 1);
    CHECK(p.coeff({"c", "b", "b", "d"}) == 1);
    // too few letters leaves nothing
    CHECK(wqsym_realize_m(pw("123"), {"x", "y"}).is_zero());
}

TEST_CASE("total order realization factors through the expansion") {
    std::vector<std::string> letters{"x", "y", "z"};
    NaturalHopf h(Operad::free_operad(desk()));
    Forest f = pf("b[a[*],b[*,*]]");
    NCPolynomial p = realize(desk(), h.e(forest_to_word(f)), total_order_alphabet(desk(), letters));
    NCPolynomial want;
    for (const auto& [u, c] : wqsym_expansion(desk(), f)) {
        NCPolynomial q = wqsym_realize_m(u, letters);
        q *= c;
        want += q;
    }
    CHECK(p == want);
    REQUIRE(p.size() == 5);
    CHECK(p.coeff({"x", "y", "y"}) == 1);
    CHECK(p.coeff({"x", "z", "z"}) == 1);
    CHECK(p.coeff({"y", "z", "z"}) == 1);
    CHECK(p.coeff({"x", "y", "z"}) == 1);
    CHECK(p.coeff({"x", "z", "y"}) == 1);
    CHECK_THROWS_AS(total_order_alphabet(Signature(), letters), DomainError);
}

TEST_CASE("decorated forests parse with bare or bracketed vertices") {
    Forest f = df("3[2,3[2,3,1]] 1[2]");
    CHECK(f.str() == "3[2[],3[2[],3[],1[]]] 1[2[]]");
    CHECK(df("2") == df("2[]"));
    CHECK_THROWS_AS(parse_decorated_forest("*"), DomainError);
    CHECK_THROWS_AS(parse_decorated_forest("2[*]"), DomainError);
    CHECK(decorated_labels(f) == std::vector<std::string>{"1", "2", "3"});
    CHECK(max_child_count(f) == 3);
}

TEST_CASE("decorated forests enumerate by vertex count") {
    auto one = decorated_forests({"1", "2"}, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == df("1"));
    CHECK(one[1] == df("2"));
    CHECK(decorated_forests({"1", "2"}, 2).size() == 8);
    CHECK(decorated_forests({"1", "2"}, 0).size() == 1);
    CHECK_THROWS_AS(decorated_forests({"a#b"}, 1), DomainError);
}

TEST_CASE("label generator names pair each label with a child count") {
    Signature sig = nck_signature({"1", "2", "3"}, 3);
    CHECK(sig.size() == 12);
    CHECK(sig.arity("2#0") == 0);
    CHECK(sig.arity("3#3") == 3);
    CHECK(nck_base("3#12") == "3");
    CHECK(nck_child_count("3#12") == 12);
    CHECK_THROWS_AS(nck_base("abc"), DomainError);
    CHECK_THROWS_AS(nck_base("#3"), DomainError);
    CHECK_THROWS_AS(nck_child_count("d#"), DomainError);
    CHECK_THROWS_AS(nck_child_count("d#x"), DomainError);
}

TEST_CASE("the leafless correspondence round-trips") {
    Forest f = df("3[2,3[2,3,1]] 1[2]");
    Forest b = nck_bijection(f);
    CHECK(b.str() == "3#2[2#0[],3#3[2#0[],3#0[],1#0[]]] 1#1[2#0[]]");
    CHECK(nck_inverse(b) == f);
    CHECK(strip_to_decorated(b) == f);
    Signature sig = nck_signature(decorated_labels(f), (int)max_child_count(f));
    validate_arities(b, sig);
    CHECK(b.degree() == 8);
    // strip also collapses genuine leaves
    Forest g = parse_forest("2#1[*]");
    CHECK(strip_to_decorated(g) == df("2"));
    CHECK_THROWS_AS(nck_inverse(parse_forest("2#1[*]")), DomainError);
}

TEST_CASE("the cut coproduct keeps the trunk on the left") {
    Forest t = df("2[1]");
    DecTensor d = nck_coproduct(t);
    REQUIRE(d.size() == 3);
    CHECK(d.at({Forest{}, t}) == 1);
    CHECK(d.at({df("2"), df("1")}) == 1);
    CHECK(d.at({t, Forest{}}) == 1);
    CHECK(dec_tensor_str(d) == "() (x) (2[1[]]) + (2[1[]]) (x) () + (2[]) (x) (1[])");
    // multiplicities appear for repeated terms
    Forest ff = df("1 1");
    DecTensor dd = nck_coproduct(ff);
    REQUIRE(dd.size() == 3);
    CHECK(dd.at({df("1"), df("1")}) == 2);
    CHECK(dec_tensor_str(DecTensor{}) == "0");
}

TEST_CASE("cuts agree with the factorization coproduct on small forests") {
    for (int v = 1; v <= 3; ++v)
        for (const auto& f : decorated_forests({"1", "2"}, v))
            CHECK(nck_coproduct(f) == nck_coproduct_via_factorizations(f));
}

TEST_CASE("the label alphabet relates levels across all bases") {
    Signature sig = nck_signature({"1", "2", "3"}, 3);
    RelatedAlphabet A = decorated_alphabet(sig, 8);
    CHECK(A.letters.size() == 24);
    CHECK(A.is_root("2:7"));
    CHECK(A.allows("2#0", "2:5"));
    CHECK(A.allows("2#3", "2:5"));
    CHECK_FALSE(A.allows("2#0", "3:5"));
    CHECK(A.has_edge(1, "1:0", "3:4"));
    CHECK(A.has_edge(3, "3:2", "3:6"));
    CHECK_FALSE(A.has_edge(2, "3:2", "1:2"));
    CHECK_THROWS_AS(decorated_alphabet(sig, 0), DomainError);
}

TEST_CASE("a two-term realization matches direct constraint enumeration") {
    Forest f = df("3[2,3[2,3,1]] 1[2]");
    Signature sig = nck_signature({"1", "2", "3"}, 3);
    RelatedAlphabet A = decorated_alphabet(sig, 8);
    NCPolynomial p = realize_forest(sig, nck_bijection(f), A);
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
                                    want.add({at("3", l1), at("2", l2), at("3", l3), at("2", l4),
                                              at("3", l5), at("1", l6), at("1", l7), at("2", l8)},
                                             1);
    CHECK(p == want);
}

TEST_CASE("the two-parameter family names its generators uniformly") {
    FdB f = fdb_construct(1, 2);
    CHECK(f.sig.str() == "a:2,b:2");
    CHECK(f.r == 1);
    CHECK(f.s == 2);
    CHECK(fdb_construct(2, 1).sig.str() == "a:3");
    CHECK_THROWS_AS(fdb_construct(-1, 1), DomainError);
}

TEST_CASE("class representatives carry the requested multisets") {
    FdB f = fdb_construct(1, 2);
    Word w = f.multi_op.parse_word("{a,a,b} {a}");
    Forest rep = fdb_class_rep(f, w);
    CHECK(rep.length() == 2);
    CHECK(multi_word_of(rep) == w);
    validate_arities(rep, f.sig);
    HopfElement sum = fdb_class_sum(f, w);
    CHECK(sum.size() == 15);
    for (const auto& [word, c] : sum.terms()) {
        CHECK(c == 1);
        CHECK(multi_word_of(word_to_forest(word)) == w);
    }
}

TEST_CASE("expansion groups class members by equal polynomials") {
    FdB f = fdb_construct(1, 2);
    Word w = f.multi_op.parse_word("{a,a,b} {a}");
    FdbExpansion ex = fdb_expand(f, w, 4);
    RelatedAlphabet A = level_alphabet(f.sig, 4);
    std::vector<size_t> sizes;
    size_t total_members = 0;
    NCPolynomial rebuilt;
    for (const auto& g : ex.groups) {
        sizes.push_back(g.members.size());
        total_members += g.members.size();
        CHECK(g.representative == g.members.front());
        CHECK(std::is_sorted(g.members.begin(), g.members.end()));
        for (const auto& m : g.members) {
            CHECK(realize_forest(f.sig, m, A) == g.poly);
            rebuilt += g.poly;
        }
    }
    CHECK(total_members == 15);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 1, 4, 4, 4});
    CHECK(std::is_sorted(ex.groups.begin(), ex.groups.end(),
                         [](const FdbGroup& a, const FdbGroup& b) { return a.representative < b.representative; }));
    CHECK(rebuilt == ex.total);
}

TEST_CASE("single-generator multisets map onto the associative instance") {
    FdB f = fdb_construct(1, 1);
    Word w = f.multi_op.parse_word("{a} {a,a}");
    Word got = fdb_assoc_word(f, w);
    Operad assoc = Operad::assoc_operad();
    CHECK(got == assoc.parse_word("alpha_2 alpha_3"));
    CHECK_THROWS_AS(fdb_assoc_word(fdb_construct(1, 2), {}), DomainError);
    CHECK_THROWS_AS(fdb_assoc_word(fdb_construct(0, 1), {}), DomainError);
}
