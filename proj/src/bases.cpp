#include "nhopf/bases.hpp"

#include <functional>

namespace nhopf {

std::vector<int> extremal_leaves(const Term& t) {
    // record the preorder sequence of events: true = leaf, false = node
    std::vector<bool> events;
    std::function<void(const Term&)> walk = [&](const Term& s) {
        if (s.is_leaf()) {
            events.push_back(true);
            return;
        }
        events.push_back(false);
        for (const auto& c : s.children()) walk(c);
    };
    walk(t);
    int last_node = -1;
    for (size_t i = 0; i < events.size(); ++i)
        if (!events[i]) last_node = static_cast<int>(i);
    std::vector<int> out;
    int leaf_no = 0;
    for (size_t i = 0; i < events.size(); ++i)
        if (events[i]) {
            ++leaf_no;
            if (static_cast<int>(i) > last_node) out.push_back(leaf_no);
        }
    return out;
}

Forest over(const Forest& a, const Forest& b) {
    Forest f = a;
    f.terms.insert(f.terms.end(), b.terms.begin(), b.terms.end());
    return f;
}

Forest under(const Forest& a, const Forest& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const Term& last = a.terms.back();
    std::vector<int> ext = extremal_leaves(last);
    size_t m = std::min(ext.size(), b.terms.size());
    std::vector<Term> args(static_cast<size_t>(last.arity()), Term::leaf());
    for (size_t k = 0; k < m; ++k) args[static_cast<size_t>(ext[k] - 1)] = b.terms[k];
    Forest f;
    f.terms.assign(a.terms.begin(), a.terms.end() - 1);
    f.terms.push_back(full_compose(last, args));
    f.terms.insert(f.terms.end(), b.terms.begin() + static_cast<long>(m), b.terms.end());
    return f;
}

namespace {

HopfElement convert_word(const Signature& sig, const Forest& f, Basis from, Basis to);

// All four elementary one-step conversions go through the word class poset.
HopfElement one_step(const Signature& sig, const Forest& f, Basis from, Basis to) {
    HopfElement out(to);
    if (f.empty()) {
        out.add({}, 1);
        return out;
    }
    WordClassPoset p(sig, preorder_decorations(f));
    int i = p.index_of(f);
    if (from == Basis::F && to == Basis::E) {
        for (int j : p.up_set(i)) out.add(forest_to_word(p.elements()[static_cast<size_t>(j)]), p.moebius(i, j));
    } else if (from == Basis::E && to == Basis::F) {
        for (int j : p.up_set(i)) out.add(forest_to_word(p.elements()[static_cast<size_t>(j)]), 1);
    } else if (from == Basis::H && to == Basis::F) {
        for (int j : p.down_set(i)) out.add(forest_to_word(p.elements()[static_cast<size_t>(j)]), 1);
    } else if (from == Basis::F && to == Basis::H) {
        for (int j : p.down_set(i)) out.add(forest_to_word(p.elements()[static_cast<size_t>(j)]), p.moebius(j, i));
    } else {
        throw DomainError("unsupported one-step conversion");
    }
    return out;
}

HopfElement convert_word(const Signature& sig, const Forest& f, Basis from, Basis to) {
    if (from == to) {
        HopfElement out(to);
        out.add(forest_to_word(f), 1);
        return out;
    }
    if ((from == Basis::F && to == Basis::E) || (from == Basis::E && to == Basis::F) ||
        (from == Basis::H && to == Basis::F) || (from == Basis::F && to == Basis::H))
        return one_step(sig, f, from, to);
    // two-step paths go through F
    HopfElement mid = one_step(sig, f, from, Basis::F);
    HopfElement out(to);
    for (const auto& [w, c] : mid.terms()) {
        HopfElement part = one_step(sig, word_to_forest(w), Basis::F, to);
        part *= c;
        out += part;
    }
    return out;
}

}  // namespace

HopfElement f_to_e(const Signature& sig, const Forest& f) { return convert_word(sig, f, Basis::F, Basis::E); }
HopfElement e_to_f(const Signature& sig, const Forest& f) { return convert_word(sig, f, Basis::E, Basis::F); }
HopfElement h_to_f(const Signature& sig, const Forest& f) { return convert_word(sig, f, Basis::H, Basis::F); }
HopfElement f_to_h(const Signature& sig, const Forest& f) { return convert_word(sig, f, Basis::F, Basis::H); }

HopfElement convert_basis(const Signature& sig, const HopfElement& x, Basis to) {
    if (x.basis() == to) return x;
    HopfElement out(to);
    for (const auto& [w, c] : x.terms()) {
        HopfElement part = convert_word(sig, word_to_forest(w), x.basis(), to);
        part *= c;
        out += part;
    }
    return out;
}

HopfElement product_in_basis(const Signature& sig, const HopfElement& x, const HopfElement& y) {
    if (x.basis() != y.basis()) throw DomainError("product_in_basis: factors are in different bases");
    Basis b = x.basis();
    HopfElement out(b);
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Forest fx = word_to_forest(wx), fy = word_to_forest(wy);
            Coeff c = cx * cy;
            switch (b) {
                case Basis::E:
                    out.add(forest_to_word(over(fx, fy)), c);
                    break;
                case Basis::H:
                    out.add(forest_to_word(under(fx, fy)), c);
                    break;
                case Basis::F: {
                    Forest lo = over(fx, fy), hi = under(fx, fy);
                    if (lo.empty()) {
                        out.add({}, c);
                        break;
                    }
                    WordClassPoset p(sig, preorder_decorations(lo));
                    int ilo = p.index_of(lo), ihi = p.index_of(hi);
                    for (size_t h = 0; h < p.elements().size(); ++h) {
                        int hh = static_cast<int>(h);
                        if (p.leq(ilo, hh) && p.leq(hh, ihi)) out.add(forest_to_word(p.elements()[h]), c);
                    }
                    break;
                }
            }
        }
    return out;
}

}  // namespace nhopf
