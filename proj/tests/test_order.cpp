#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nhopf/order.hpp"

using namespace nhopf;

namespace {

const Signature& desk() {
    static Signature s = Signature::parse_inline("a:1,b:2,c:3");
    return s;
}

Forest pf(const std::string& text) { return parse_forest(text, &desk()); }

std::vector<Forest> sorted_covers(const std::string& text) {
    auto v = covers(desk(), pf(text));
    std::sort(v.begin(), v.end());
    return v;
}

const std::vector<std::string> kCab{"c", "a", "b"};

}  // namespace

TEST_CASE("covering moves regraft onto the left brother") {
    // a whole term moves onto the previous term's rightmost leaf, and a
    // subterm in slot j moves onto the slot j-1 subtree
    CHECK(sorted_covers("c[*,*,*] a[*] b[*,*]") ==
          std::vector<Forest>{pf("c[*,*,*] a[b[*,*]]"), pf("c[*,*,a[*]] b[*,*]")});
    CHECK(sorted_covers("b[*,a[*]]") == std::vector<Forest>{pf("b[a[*],*]")});
    CHECK(sorted_covers("b[a[*],*]").empty());
    CHECK(sorted_covers("c[a[b[*,*]],*,*]").empty());
    CHECK(sorted_covers("c[*,*,a[*]] b[*,*]") ==
          std::vector<Forest>{pf("c[*,*,a[b[*,*]]]"), pf("c[*,a[*],*] b[*,*]")});
}

TEST_CASE("covering moves preserve degree and decoration word") {
    for (const char* text : {"c[*,*,*] a[*] b[*,*]", "c[*,a[*],b[*,*]]", "b[*,*] b[*,*] a[*]"}) {
        Forest f = pf(text);
        for (const auto& g : covers(desk(), f)) {
            CHECK(g.degree() == f.degree());
            CHECK(preorder_decorations(g) == preorder_decorations(f));
            CHECK(g.reduced());
        }
    }
}

TEST_CASE("the three-letter word class is an eleven-element poset") {
    WordClassPoset p(desk(), kCab);
    CHECK(p.elements().size() == 11);
    int bottom = p.index_of(pf("c[*,*,*] a[*] b[*,*]"));
    int top = p.index_of(pf("c[a[b[*,*]],*,*]"));
    for (size_t i = 0; i < p.elements().size(); ++i) {
        CHECK(p.leq(bottom, static_cast<int>(i)));
        CHECK(p.leq(static_cast<int>(i), top));
    }
    CHECK(p.find(pf("b[*,*]")) == -1);
    CHECK(p.up_set(p.index_of(pf("c[*,a[*],*] b[*,*]"))).size() == 7);
    CHECK(p.down_set(p.index_of(pf("c[*,a[*],*] b[*,*]"))).size() == 3);
}

TEST_CASE("moebius values on the three-letter class") {
    WordClassPoset p(desk(), kCab);
    int t2 = p.index_of(pf("c[*,a[*],*] b[*,*]"));
    CHECK(p.moebius(t2, t2) == 1);
    CHECK(p.moebius(t2, p.index_of(pf("c[a[*],*,*] b[*,*]"))) == -1);
    CHECK(p.moebius(t2, p.index_of(pf("c[*,a[*],b[*,*]]"))) == -1);
    CHECK(p.moebius(t2, p.index_of(pf("c[a[*],*,b[*,*]]"))) == 1);
    CHECK(p.moebius(t2, p.index_of(pf("c[a[*],b[*,*],*]"))) == 0);
    CHECK(p.moebius(t2, p.index_of(pf("c[*,a[b[*,*]],*]"))) == 0);
    int m = p.index_of(pf("c[*,*,*] a[*] b[*,*]"));
    CHECK(p.moebius(m, p.index_of(pf("c[*,*,*] a[b[*,*]]"))) == -1);
    CHECK(p.moebius(m, p.index_of(pf("c[*,*,a[b[*,*]]]"))) == 1);
    CHECK(p.moebius(m, p.index_of(pf("c[a[b[*,*]],*,*]"))) == 0);
    // incomparable pairs get zero
    int u = p.index_of(pf("c[*,*,*] a[b[*,*]]"));
    int t1 = p.index_of(pf("c[a[*],*,*] b[*,*]"));
    CHECK_FALSE(p.leq(u, t1));
    CHECK(p.moebius(u, t1) == 0);
    // summing over an interval from a non-maximal element vanishes
    Coeff total = 0;
    for (int j : p.up_set(m)) total += p.moebius(m, j);
    CHECK(total == 0);
}

TEST_CASE("pointwise comparisons agree with the poset") {
    CHECK(less_equal(desk(), pf("c[*,*,*] a[*] b[*,*]"), pf("c[a[b[*,*]],*,*]")));
    CHECK_FALSE(less_equal(desk(), pf("c[a[*],*,*] b[*,*]"), pf("c[*,*,*] a[b[*,*]]")));
    CHECK_FALSE(less_equal(desk(), pf("c[*,*,*] a[b[*,*]]"), pf("c[a[*],*,*] b[*,*]")));
    CHECK(less_equal(desk(), pf("b[*,a[*]]"), pf("b[a[*],*]")));
}

TEST_CASE("extreme forests of a word") {
    CHECK(minimal_forest(desk(), kCab) == pf("c[*,*,*] a[*] b[*,*]"));
    CHECK(maximal_forest(desk(), kCab) == pf("c[a[b[*,*]],*,*]"));
    CHECK(minimal_forest(desk(), {"b", "a"}) == pf("b[*,*] a[*]"));
    CHECK(maximal_forest(desk(), {"b", "a"}) == pf("b[a[*],*]"));
    CHECK_THROWS_AS(minimal_forest(desk(), {"q"}), DomainError);
}

TEST_CASE("the three-letter interval is the whole class with fourteen covers") {
    Interval iv(desk(), kCab);
    CHECK(iv.size() == 11);
    CHECK(iv.word_class_size() == 11);
    CHECK(iv.cover_pairs().size() == 14);
    CHECK(iv.bottom() == pf("c[*,*,*] a[*] b[*,*]"));
    CHECK(iv.top() == pf("c[a[b[*,*]],*,*]"));
    for (const auto& f : iv.elements()) CHECK(iv.contains(f));
    CHECK_FALSE(iv.contains(pf("b[*,*]")));
}

TEST_CASE("meets and joins inside the three-letter interval") {
    Interval iv(desk(), kCab);
    Forest u = pf("c[*,*,*] a[b[*,*]]");
    Forest t2 = pf("c[*,a[*],*] b[*,*]");
    CHECK(iv.join(u, t2) == pf("c[*,a[b[*,*]],*]"));
    CHECK(iv.meet(u, t2) == pf("c[*,*,*] a[*] b[*,*]"));
    CHECK(iv.join(pf("c[a[*],*,*] b[*,*]"), pf("c[*,a[*],b[*,*]]")) == pf("c[a[*],*,b[*,*]]"));
    CHECK(iv.meet(pf("c[a[*],*,b[*,*]]"), pf("c[*,a[b[*,*]],*]")) == pf("c[*,a[*],b[*,*]]"));
    CHECK(iv.join(iv.bottom(), iv.top()) == iv.top());
    CHECK(iv.meet(iv.bottom(), iv.top()) == iv.bottom());
    CHECK_THROWS_AS(iv.meet(pf("b[*,*]"), u), DomainError);
}

TEST_CASE("two-letter intervals are chains") {
    Interval ba(desk(), {"b", "a"});
    CHECK(ba.size() == 3);
    CHECK(ba.cover_pairs().size() == 2);
    Interval aa(desk(), {"a", "a"});
    CHECK(aa.size() == 2);
    CHECK(aa.cover_pairs().size() == 1);
    CHECK(moebius(desk(), pf("a[*] a[*]"), pf("a[a[*]]")) == -1);
    CHECK(moebius(desk(), pf("b[*,*] a[*]"), pf("b[*,a[*]]")) == -1);
    CHECK(moebius(desk(), pf("b[*,*] a[*]"), pf("b[a[*],*]")) == 0);
}

TEST_CASE("one-letter classes are single points") {
    Interval iv(desk(), {"b"});
    CHECK(iv.size() == 1);
    CHECK(iv.cover_pairs().empty());
    CHECK(iv.bottom() == iv.top());
    CHECK(iv.bottom() == pf("b[*,*]"));
}
