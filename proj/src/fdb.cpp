#include "nhopf/fdb.hpp"

#include <algorithm>
#include <map>

#include "nhopf/forest.hpp"
#include "nhopf/hopf.hpp"
#include "nhopf/signature.hpp"

namespace nhopf {

FdB fdb_construct(int r, int s) {
    if (r < 0 || s < 0) throw DomainError("parameters must be >= 0");
    std::vector<Generator> gens;
    for (int i = 0; i < s; ++i) {
        std::string name = s <= 26 ? std::string(1, (char)('a' + i)) : "g" + std::to_string(i + 1);
        gens.push_back({name, r + 1});
    }
    Signature sig(gens);
    return FdB{r, s, sig, Operad::free_operad(sig), Operad::multi_operad(sig), ExchangeCongruence(sig)};
}

Term fdb_class_rep_term(const FdB& fdb, const OperadElement& m) {
    return multiset_rep_term(fdb.sig, m);
}

Forest fdb_class_rep(const FdB& fdb, const Word& multi_word) {
    Forest f;
    for (const auto& m : multi_word) f.terms.push_back(multiset_rep_term(fdb.sig, m));
    return f;
}

HopfElement fdb_class_sum(const FdB& fdb, const Word& multi_word) {
    return multiset_class_sum(fdb.cong, multi_word);
}

FdbExpansion fdb_expand(const FdB& fdb, const Word& multi_word, int bound) {
    RelatedAlphabet A = level_alphabet(fdb.sig, bound);
    std::map<std::string, FdbGroup> by_poly;
    FdbExpansion out;
    for (const auto& f : multiset_class(fdb.cong, multi_word)) {
        NCPolynomial p = realize_forest(fdb.sig, f, A);
        out.total += p;
        auto key = p.str();
        auto it = by_poly.find(key);
        if (it == by_poly.end()) {
            by_poly.emplace(key, FdbGroup{f, {f}, std::move(p)});
        } else {
            it->second.members.push_back(f);
        }
    }
    for (auto& [key, group] : by_poly) out.groups.push_back(std::move(group));
    std::sort(out.groups.begin(), out.groups.end(),
              [](const FdbGroup& a, const FdbGroup& b) { return a.representative < b.representative; });
    return out;
}

Word fdb_assoc_word(const FdB& fdb, const Word& multi_word) {
    if (fdb.r < 1 || fdb.s != 1)
        throw DomainError("the arity map needs r >= 1 and a single generator");
    Word out;
    for (const auto& m : multi_word) {
        if (m.kind() != OperadKind::Multi) throw DomainError("multiset element expected");
        long k = m.multi_size();
        out.push_back(OperadElement::assoc(k * fdb.r + 1));
    }
    return out;
}

}  // namespace nhopf
