#include "nhopf/hopf.hpp"

#include <functional>

namespace nhopf {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::E: return "E";
        case Basis::F: return "F";
        case Basis::H: return "H";
    }
    return "?";
}

Basis parse_basis(const std::string& s) {
    if (s == "E") return Basis::E;
    if (s == "F") return Basis::F;
    if (s == "H") return Basis::H;
    throw DomainError("unknown basis: " + s);
}

void HopfElement::add(const Word& w, const Coeff& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Coeff HopfElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
    if (basis_ != o.basis_ && !o.terms_.empty() && !terms_.empty())
        throw DomainError("adding elements in different bases");
    if (terms_.empty()) basis_ = o.basis_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
    if (basis_ != o.basis_ && !o.terms_.empty() && !terms_.empty())
        throw DomainError("subtracting elements in different bases");
    if (terms_.empty()) basis_ = o.basis_;
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

HopfElement& HopfElement::operator*=(const Coeff& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

namespace {

void append_signed(std::string& out, const Coeff& c, const std::string& body) {
    bool neg = c < 0;
    Coeff a = neg ? Coeff(-c) : c;
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (a != 1) out += a.get_str() + "*";
    out += body;
}

}  // namespace

std::string HopfElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    std::string b = basis_name(basis_);
    for (const auto& [w, c] : terms_) append_signed(out, c, b + "(" + word_str(w) + ")");
    return out;
}

void TensorElement::add(const Word& left, const Word& right, const Coeff& c) {
    if (c == 0) return;
    auto key = std::make_pair(left, right);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Coeff TensorElement::coeff(const Word& left, const Word& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Coeff(0) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_)
        append_signed(out, c, "E(" + word_str(k.first) + ") (x) E(" + word_str(k.second) + ")");
    return out;
}

HopfElement NaturalHopf::e(const Word& w) const {
    if (!op_.reduced(w)) throw DomainError("basis words must be reduced (no unit letters)");
    HopfElement x(Basis::E);
    x.add(w, 1);
    return x;
}

HopfElement NaturalHopf::one() const { return e(Word{}); }

std::map<long, HopfElement> NaturalHopf::degree_components(const HopfElement& x) const {
    std::map<long, HopfElement> out;
    for (const auto& [w, c] : x.terms()) {
        auto [it, fresh] = out.try_emplace(word_degree(w), HopfElement(x.basis()));
        it->second.add(w, c);
    }
    return out;
}

HopfElement NaturalHopf::product(const HopfElement& x, const HopfElement& y) const {
    if (x.basis() != Basis::E || y.basis() != Basis::E)
        throw DomainError("the concatenation product lives in the E basis; convert first");
    HopfElement out(Basis::E);
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            out.add(w, cx * cy);
        }
    return out;
}

TensorElement NaturalHopf::coproduct_word(const Word& w) const {
    TensorElement acc;
    acc.add({}, {}, 1);
    for (const auto& letter : w) {
        // tensor factor of this letter: sum over factorizations
        TensorElement next;
        for (const auto& f : op_.factorizations(letter)) {
            Word left, right;
            if (!op_.is_unit(f.outer)) left.push_back(f.outer);
            for (const auto& z : f.inner)
                if (!op_.is_unit(z)) right.push_back(z);
            for (const auto& [k, c] : acc.terms()) {
                Word l = k.first;
                l.insert(l.end(), left.begin(), left.end());
                Word r = k.second;
                r.insert(r.end(), right.begin(), right.end());
                next.add(l, r, c);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

TensorElement NaturalHopf::coproduct(const HopfElement& x) const {
    if (x.basis() != Basis::E) throw DomainError("coproduct lives in the E basis; convert first");
    TensorElement out;
    for (const auto& [w, c] : x.terms()) {
        TensorElement dw = coproduct_word(w);
        for (const auto& [k, cc] : dw.terms()) out.add(k.first, k.second, c * cc);
    }
    return out;
}

Coeff NaturalHopf::counit(const HopfElement& x) const { return x.coeff(Word{}); }

HopfElement NaturalHopf::antipode(const HopfElement& x) const {
    if (x.basis() != Basis::E) throw DomainError("antipode lives in the E basis; convert first");
    std::map<Word, HopfElement, WordLess> memo;
    std::function<const HopfElement&(const Word&)> s_word = [&](const Word& w) -> const HopfElement& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        HopfElement out(Basis::E);
        if (w.empty()) {
            out.add({}, 1);
        } else {
            // S(w) = - sum over coproduct terms (w', w'') except (w, empty)
            // of S(w') * w''; every such w' has strictly smaller degree.
            TensorElement dw = coproduct_word(w);
            for (const auto& [k, c] : dw.terms()) {
                if (k.second.empty()) continue;  // the (w, empty) term, coefficient 1
                const HopfElement& sl = s_word(k.first);
                for (const auto& [lw, lc] : sl.terms()) {
                    Word full = lw;
                    full.insert(full.end(), k.second.begin(), k.second.end());
                    out.add(full, -c * lc);
                }
            }
        }
        return memo.emplace(w, std::move(out)).first->second;
    };
    HopfElement out(Basis::E);
    for (const auto& [w, c] : x.terms()) {
        const HopfElement& sw = s_word(w);
        for (const auto& [v, cv] : sw.terms()) out.add(v, c * cv);
    }
    return out;
}

}  // namespace nhopf
