#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nhopf/forest.hpp"
#include "nhopf/signature.hpp"

using namespace nhopf;

namespace {

const Signature& desk() {
    static Signature s = Signature::parse_inline("a:1,b:2,c:3");
    return s;
}

Forest pf(const std::string& text) { return parse_forest(text, &desk()); }

}  // namespace

TEST_CASE("terms parse and print back to the same text") {
    for (const char* text : {"*", "a[*]", "b[*,a[*]]", "c[a[b[*,*]],*,*]", "b[*,b[*,*]]"}) {
        CHECK(parse_term(text).str() == text);
    }
    CHECK(parse_forest("c[*,a[*],*] b[*,*]").str() == "c[*,a[*],*] b[*,*]");
    CHECK(parse_forest("").str() == "");
    CHECK(parse_forest("  b[*,*]   a[*] ").str() == "b[*,*] a[*]");
}

TEST_CASE("zero-child nodes accept the bare form and print with brackets") {
    CHECK(parse_term("2#0").str() == "2#0[]");
    CHECK(parse_term("2#0[]").str() == "2#0[]");
    CHECK(parse_term("3[2,1]").str() == "3[2[],1[]]");
}

TEST_CASE("arity counts leaves and degree counts internal nodes") {
    CHECK(Term::leaf().arity() == 1);
    CHECK(Term::leaf().degree() == 0);
    Term t = parse_term("c[*,a[*],*]", &desk());
    CHECK(t.arity() == 3);
    CHECK(t.degree() == 2);
    Forest f = pf("c[*,a[*],*] b[*,*]");
    CHECK(f.arity() == 5);
    CHECK(f.degree() == 3);
    CHECK(Forest{}.arity() == 0);
    CHECK(Forest{}.degree() == 0);
}

TEST_CASE("reduce drops bare-leaf terms and keeps the rest in order") {
    Forest f = parse_forest("* a[*] * b[*,*]");
    CHECK_FALSE(f.reduced());
    Forest r = reduce(f);
    CHECK(r.reduced());
    CHECK(r.str() == "a[*] b[*,*]");
    CHECK(reduce(Forest{}).empty());
}

TEST_CASE("arity validation rejects wrong child counts") {
    CHECK_THROWS_AS(parse_term("a[*,*]", &desk()), DomainError);
    CHECK_THROWS_AS(parse_term("c[*,*]", &desk()), DomainError);
    CHECK_NOTHROW(parse_term("a[*,*]"));  // unchecked without a signature
}

TEST_CASE("parse errors carry the offending offset") {
    try {
        parse_term("c[*,*,*,]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 8);
        CHECK(std::string(e.what()).find("offset 8") != std::string::npos);
    }
    try {
        parse_term("c[*,*");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 5);
    }
    CHECK_THROWS_AS(parse_term("b[* *]"), ParseError);
    CHECK_THROWS_AS(parse_term("a[*] junk"), ParseError);
}

TEST_CASE("preorder nodes record parent, slot and term") {
    Forest f = pf("c[a[*],*,b[a[*],*]] b[*,a[b[*,*]]]");
    auto ns = nodes(f);
    REQUIRE(ns.size() == 7);
    CHECK(preorder_decorations(f) == std::vector<std::string>{"c", "a", "b", "a", "b", "a", "b"});
    CHECK(ns[0].parent == 0);
    CHECK(ns[0].term == 0);
    CHECK(ns[4].parent == 0);
    CHECK(ns[4].term == 1);
    // node ids strictly increase along each edge
    for (const auto& e : edges(f)) CHECK(e.parent < e.child);
}

TEST_CASE("edges list parent, slot and child preorder ids") {
    Forest f = pf("c[a[*],*,b[a[*],*]] b[*,a[b[*,*]]]");
    std::vector<Edge> want{{1, 1, 2}, {1, 3, 3}, {3, 1, 4}, {5, 2, 6}, {6, 1, 7}};
    CHECK(edges(f) == want);
    CHECK(edges(pf("a[*] b[*,*]")).empty());
}

TEST_CASE("composition grafts arguments onto leaves in order") {
    Term c3 = parse_term("c[*,*,*]", &desk());
    Term got = full_compose(c3, {parse_term("a[*]"), Term::leaf(), parse_term("b[*,*]")});
    CHECK(got.str() == "c[a[*],*,b[*,*]]");
    CHECK(partial_compose(parse_term("b[*,*]"), 2, parse_term("a[*]")).str() == "b[*,a[*]]");
    CHECK(graft_rightmost(parse_term("b[*,a[*]]"), parse_term("c[*,*,*]")).str() ==
          "b[*,a[c[*,*,*]]]");
    CHECK_THROWS_AS(full_compose(c3, {Term::leaf()}), DomainError);
    CHECK_THROWS_AS(partial_compose(c3, 4, Term::leaf()), DomainError);
}

TEST_CASE("subtree surgery addresses nodes by preorder id") {
    Forest f = pf("c[a[*],*,b[a[*],*]] b[*,a[b[*,*]]]");
    CHECK(subtree_at_node(f, 3).str() == "b[a[*],*]");
    CHECK(subtree_at_node(f, 5).str() == "b[*,a[b[*,*]]]");
    Forest g = replace_subtree(pf("b[*,a[*]]"), 2, parse_term("b[*,*]"));
    CHECK(g.str() == "b[*,b[*,*]]");
}

TEST_CASE("term enumeration matches the slot-count recursion") {
    CHECK(enumerate_terms(desk(), 0).size() == 1);  // the leaf
    CHECK(enumerate_terms(desk(), 1).size() == 3);
    // one internal child below one of the 1+2+3 slots, three choices for it
    CHECK(enumerate_terms(desk(), 2).size() == 18);
    auto deg2 = enumerate_terms(desk(), 2);
    for (const auto& t : deg2) CHECK(t.degree() == 2);
}

TEST_CASE("forest enumeration splits degree across terms") {
    CHECK(enumerate_reduced_forests(desk(), 0).size() == 1);  // empty forest
    CHECK(enumerate_reduced_forests(desk(), 1).size() == 3);
    // 18 single trees plus 3*3 ordered pairs of single nodes
    CHECK(enumerate_reduced_forests(desk(), 2).size() == 27);
    CHECK(enumerate_reduced_forests_upto(desk(), 2).size() == 31);
    auto all = enumerate_reduced_forests_upto(desk(), 2);
    for (size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].degree() <= all[i].degree());
}

TEST_CASE("enumeration refuses arity-zero generators") {
    Signature z = Signature::parse_inline("z:0,a:1");
    CHECK_FALSE(z.positive());
    CHECK_THROWS_AS(enumerate_terms(z, 2), DomainError);
    CHECK_THROWS_AS(enumerate_reduced_forests(z, 2), DomainError);
}

TEST_CASE("word-constrained enumeration finds every shape") {
    CHECK(terms_with_word(desk(), {"c", "a", "b"}).size() == 6);
    CHECK(forests_with_word(desk(), {"c", "a", "b"}).size() == 11);
    CHECK(forests_with_word(desk(), {"a"}).size() == 1);
    for (const auto& f : forests_with_word(desk(), {"c", "a", "b"}))
        CHECK(preorder_decorations(f) == std::vector<std::string>{"c", "a", "b"});
}

TEST_CASE("forests order by their canonical text") {
    CHECK(pf("b[*,*] a[*]") < pf("b[*,a[*]]"));
    CHECK(pf("b[*,a[*]]") < pf("b[a[*],*]"));
    CHECK_FALSE(pf("a[*]") < pf("a[*]"));
}
