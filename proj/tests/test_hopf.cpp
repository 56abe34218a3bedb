#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nhopf/hopf.hpp"

using namespace nhopf;

namespace {

NaturalHopf assoc_hopf() { return NaturalHopf(Operad::assoc_operad()); }

NaturalHopf desk_hopf() {
    return NaturalHopf(Operad::free_operad(Signature::parse_inline("a:1,b:2,c:3")));
}

}  // namespace

TEST_CASE("basis elements require reduced words") {
    NaturalHopf h = desk_hopf();
    const Operad& op = h.operad();
    CHECK(h.one().str() == "E()");
    CHECK(h.e(op.parse_word("a[*] b[*,*]")).str() == "E(a[*] b[*,*])");
    CHECK_THROWS_AS(h.e(op.parse_word("a[*] *")), DomainError);
}

TEST_CASE("element arithmetic cancels exactly") {
    NaturalHopf h = assoc_hopf();
    const Operad& op = h.operad();
    HopfElement x = h.e(op.parse_word("alpha_2"));
    HopfElement y = x;
    y *= Coeff(-1);
    CHECK((x + y).is_zero());
    CHECK((x + y).str() == "0");
    HopfElement z = Coeff(3) * x - x;
    CHECK(z.coeff(op.parse_word("alpha_2")) == 2);
    CHECK(z.str() == "2*E(alpha_2)");
}

TEST_CASE("the product concatenates words in the E basis only") {
    NaturalHopf h = assoc_hopf();
    const Operad& op = h.operad();
    HopfElement p = h.product(h.e(op.parse_word("alpha_2")), h.e(op.parse_word("alpha_3")));
    CHECK(p.str() == "E(alpha_2 alpha_3)");
    CHECK(h.product(h.one(), p) == p);
    HopfElement f(Basis::F);
    f.add(op.parse_word("alpha_2"), 1);
    CHECK_THROWS_AS(h.product(f, f), DomainError);
}

TEST_CASE("coproduct of a single associative letter lists its splittings") {
    NaturalHopf h = assoc_hopf();
    const Operad& op = h.operad();
    TensorElement got = h.coproduct(h.e(op.parse_word("alpha_4")));
    TensorElement want;
    want.add({}, op.parse_word("alpha_4"), 1);
    want.add(op.parse_word("alpha_2"), op.parse_word("alpha_3"), 2);
    want.add(op.parse_word("alpha_2"), op.parse_word("alpha_2 alpha_2"), 1);
    want.add(op.parse_word("alpha_3"), op.parse_word("alpha_2"), 3);
    want.add(op.parse_word("alpha_4"), {}, 1);
    CHECK(got == want);
    CHECK(got.str() ==
          "E() (x) E(alpha_4) + E(alpha_2) (x) E(alpha_2 alpha_2) + 2*E(alpha_2) (x) E(alpha_3)"
          " + 3*E(alpha_3) (x) E(alpha_2) + E(alpha_4) (x) E()");
}

TEST_CASE("coproduct of a free tree cuts it at an upper part") {
    NaturalHopf h = desk_hopf();
    const Operad& op = h.operad();
    TensorElement got = h.coproduct(h.e(op.parse_word("b[a[*],*]")));
    TensorElement want;
    want.add({}, op.parse_word("b[a[*],*]"), 1);
    want.add(op.parse_word("b[*,*]"), op.parse_word("a[*]"), 1);
    want.add(op.parse_word("b[a[*],*]"), {}, 1);
    CHECK(got == want);
}

TEST_CASE("coproduct of a multiset letter weights the slot placements") {
    NaturalHopf h(Operad::multi_operad(Signature::parse_inline("a:2,b:2")));
    const Operad& op = h.operad();
    TensorElement got = h.coproduct(h.e(op.parse_word("{a,b}")));
    TensorElement want;
    want.add({}, op.parse_word("{a,b}"), 1);
    want.add(op.parse_word("{a}"), op.parse_word("{b}"), 2);
    want.add(op.parse_word("{b}"), op.parse_word("{a}"), 2);
    want.add(op.parse_word("{a,b}"), {}, 1);
    CHECK(got == want);
}

TEST_CASE("the coproduct of the unit is unit tensor unit") {
    NaturalHopf h = assoc_hopf();
    TensorElement got = h.coproduct(h.one());
    TensorElement want;
    want.add({}, {}, 1);
    CHECK(got == want);
}

TEST_CASE("the counit keeps only the empty word") {
    NaturalHopf h = assoc_hopf();
    const Operad& op = h.operad();
    CHECK(h.counit(h.one()) == 1);
    CHECK(h.counit(Coeff(5) * h.one()) == 5);
    CHECK(h.counit(h.e(op.parse_word("alpha_2"))) == 0);
}

TEST_CASE("antipode of a degree-two associative letter") {
    NaturalHopf h = assoc_hopf();
    const Operad& op = h.operad();
    HopfElement got = h.antipode(h.e(op.parse_word("alpha_3")));
    HopfElement want(Basis::E);
    want.add(op.parse_word("alpha_3"), -1);
    want.add(op.parse_word("alpha_2 alpha_2"), 2);
    CHECK(got == want);
    CHECK(got.str() == "2*E(alpha_2 alpha_2) - E(alpha_3)");
    CHECK(h.antipode(h.one()) == h.one());
    CHECK(h.antipode(h.e(op.parse_word("alpha_2"))) ==
          Coeff(-1) * h.e(op.parse_word("alpha_2")));
}

TEST_CASE("a primitive free letter negates under the antipode") {
    NaturalHopf h = desk_hopf();
    const Operad& op = h.operad();
    CHECK(h.antipode(h.e(op.parse_word("a[*]"))) == Coeff(-1) * h.e(op.parse_word("a[*]")));
}

TEST_CASE("the antipode inverts the identity under convolution") {
    NaturalHopf h = assoc_hopf();
    const Operad& op = h.operad();
    for (const char* text : {"alpha_4", "alpha_2 alpha_3", "alpha_2 alpha_2 alpha_2"}) {
        HopfElement x = h.e(op.parse_word(text));
        HopfElement acc(Basis::E);
        TensorElement dx = h.coproduct(x);
        for (const auto& [legs, c] : dx.terms())
            acc += c * h.product(h.antipode(h.e(legs.first)), h.e(legs.second));
        CHECK(acc.is_zero());  // counit vanishes in positive degree
    }
}

TEST_CASE("degree components split an inhomogeneous element") {
    NaturalHopf h = desk_hopf();
    const Operad& op = h.operad();
    HopfElement x = h.e(op.parse_word("a[*]")) + Coeff(2) * h.e(op.parse_word("c[*,*,*] b[*,*]"));
    auto parts = h.degree_components(x);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1) == h.e(op.parse_word("a[*]")));
    CHECK(parts.at(2) == Coeff(2) * h.e(op.parse_word("c[*,*,*] b[*,*]")));
}
