#include "nhopf/operad.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace nhopf {

OperadElement OperadElement::assoc(long n) {
    if (n < 1) throw DomainError("assoc element needs arity >= 1");
    OperadElement e;
    e.kind_ = OperadKind::Assoc;
    e.n_ = n;
    return e;
}

OperadElement OperadElement::multi(std::vector<std::pair<std::string, int>> counts) {
    std::map<std::string, int> merged;
    for (auto& [name, c] : counts) {
        if (c < 0) throw DomainError("negative multiplicity in multiset");
        if (c > 0) merged[name] += c;
    }
    OperadElement e;
    e.kind_ = OperadKind::Multi;
    e.counts_.assign(merged.begin(), merged.end());
    return e;
}

int OperadElement::multi_size() const {
    int s = 0;
    for (const auto& [name, c] : counts_) s += c;
    return s;
}

std::string OperadElement::str() const {
    switch (kind_) {
        case OperadKind::Free:
            return term_.str();
        case OperadKind::Assoc:
            return "alpha_" + std::to_string(n_);
        case OperadKind::Multi: {
            std::string out = "{";
            bool first = true;
            for (const auto& [name, c] : counts_)
                for (int i = 0; i < c; ++i) {
                    if (!first) out += ',';
                    out += name;
                    first = false;
                }
            return out + "}";
        }
    }
    return {};
}

bool OperadElement::operator==(const OperadElement& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case OperadKind::Free: return term_ == o.term_;
        case OperadKind::Assoc: return n_ == o.n_;
        case OperadKind::Multi: return counts_ == o.counts_;
    }
    return false;
}

bool OperadElement::operator<(const OperadElement& o) const { return str() < o.str(); }

Operad::Operad(OperadKind k, Signature sig) : kind_(k), sig_(std::move(sig)) {}

void Operad::check_kind(const OperadElement& x) const {
    if (x.kind() != kind_) throw DomainError("operad element belongs to a different instance");
}

OperadElement Operad::unit() const {
    switch (kind_) {
        case OperadKind::Free: return OperadElement::free_term(Term::leaf());
        case OperadKind::Assoc: return OperadElement::assoc(1);
        case OperadKind::Multi: return OperadElement::multi({});
    }
    return {};
}

bool Operad::is_unit(const OperadElement& x) const {
    check_kind(x);
    switch (kind_) {
        case OperadKind::Free: return x.term().is_leaf();
        case OperadKind::Assoc: return x.assoc_n() == 1;
        case OperadKind::Multi: return x.counts().empty();
    }
    return false;
}

long Operad::arity(const OperadElement& x) const {
    check_kind(x);
    switch (kind_) {
        case OperadKind::Free: return x.term().arity();
        case OperadKind::Assoc: return x.assoc_n();
        case OperadKind::Multi: {
            long a = 1 - x.multi_size();
            for (const auto& [name, c] : x.counts()) a += static_cast<long>(sig_.arity(name)) * c;
            if (a < 0) throw DomainError("multiset " + x.str() + " is not constructible (arity < 0)");
            return a;
        }
    }
    return 0;
}

long Operad::degree(const OperadElement& x) const {
    check_kind(x);
    switch (kind_) {
        case OperadKind::Free: return x.term().degree();
        case OperadKind::Assoc: return x.assoc_n() - 1;
        case OperadKind::Multi: return x.multi_size();
    }
    return 0;
}

OperadElement Operad::compose(const OperadElement& x, const std::vector<OperadElement>& args) const {
    check_kind(x);
    for (const auto& a : args) check_kind(a);
    if (static_cast<long>(args.size()) != arity(x))
        throw DomainError("compose: " + std::to_string(args.size()) + " arguments for arity " +
                          std::to_string(arity(x)));
    switch (kind_) {
        case OperadKind::Free: {
            std::vector<Term> ts;
            ts.reserve(args.size());
            for (const auto& a : args) ts.push_back(a.term());
            return OperadElement::free_term(full_compose(x.term(), ts));
        }
        case OperadKind::Assoc: {
            long n = 0;
            for (const auto& a : args) n += a.assoc_n();
            return OperadElement::assoc(n);
        }
        case OperadKind::Multi: {
            std::vector<std::pair<std::string, int>> merged = x.counts();
            for (const auto& a : args)
                merged.insert(merged.end(), a.counts().begin(), a.counts().end());
            return OperadElement::multi(std::move(merged));
        }
    }
    return {};
}

namespace {

// Parent-closed prefixes of a term: every pair (y, hang) with one hanging
// subtree per leaf of y, so that grafting hang onto y rebuilds the term.
using Prefix = std::pair<Term, std::vector<Term>>;

const std::vector<Prefix>& prefixes(const Term& t, std::map<std::string, std::vector<Prefix>>& memo) {
    std::string key = t.str();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Prefix> out;
    if (t.is_leaf()) {
        out.push_back({Term::leaf(), {Term::leaf()}});
    } else {
        out.push_back({Term::leaf(), {t}});  // root not kept
        // root kept: combine children independently
        std::vector<const std::vector<Prefix>*> pools;
        pools.reserve(t.children().size());
        for (const auto& c : t.children()) pools.push_back(&prefixes(c, memo));
        std::vector<size_t> pick(t.children().size(), 0);
        std::function<void(size_t, std::vector<Term>&, std::vector<Term>&)> rec =
            [&](size_t idx, std::vector<Term>& ys, std::vector<Term>& hang) {
                if (idx == pools.size()) {
                    out.push_back({Term::node(t.decoration(), ys), hang});
                    return;
                }
                for (const auto& [cy, chang] : *pools[idx]) {
                    ys.push_back(cy);
                    size_t mark = hang.size();
                    hang.insert(hang.end(), chang.begin(), chang.end());
                    rec(idx + 1, ys, hang);
                    hang.resize(mark);
                    ys.pop_back();
                }
            };
        std::vector<Term> ys, hang;
        rec(0, ys, hang);
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

std::vector<std::vector<int>> compositions_nonneg(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(parts));
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
    return out;
}

}  // namespace

std::vector<Factorization> Operad::factorizations(const OperadElement& x) const {
    check_kind(x);
    std::vector<Factorization> out;
    switch (kind_) {
        case OperadKind::Free: {
            std::map<std::string, std::vector<Prefix>> memo;
            for (const auto& [y, hang] : prefixes(x.term(), memo)) {
                Factorization f;
                f.outer = OperadElement::free_term(y);
                for (const auto& h : hang) f.inner.push_back(OperadElement::free_term(h));
                out.push_back(std::move(f));
            }
            break;
        }
        case OperadKind::Assoc: {
            long n = x.assoc_n();
            for (long k = 1; k <= n; ++k) {
                // ordered lists of k positive parts summing to n
                std::vector<long> cur(static_cast<size_t>(k));
                std::function<void(long, long)> rec = [&](long pos, long left) {
                    if (pos == k - 1) {
                        if (left >= 1) {
                            cur[static_cast<size_t>(pos)] = left;
                            Factorization f;
                            f.outer = OperadElement::assoc(k);
                            for (long m : cur) f.inner.push_back(OperadElement::assoc(m));
                            out.push_back(std::move(f));
                        }
                        return;
                    }
                    for (long v = 1; v + (k - pos - 1) <= left; ++v) {
                        cur[static_cast<size_t>(pos)] = v;
                        rec(pos + 1, left - v);
                    }
                };
                rec(0, n);
            }
            break;
        }
        case OperadKind::Multi: {
            if (!sig_.positive())
                throw DomainError("multiset factorizations need a positive signature");
            const auto& cnt = x.counts();
            // choose the kept sub-multiset generator by generator
            std::vector<int> keep(cnt.size(), 0);
            std::function<void(size_t)> choose = [&](size_t gi) {
                if (gi == cnt.size()) {
                    std::vector<std::pair<std::string, int>> ycounts;
                    for (size_t i = 0; i < cnt.size(); ++i)
                        if (keep[i] > 0) ycounts.push_back({cnt[i].first, keep[i]});
                    OperadElement y = OperadElement::multi(ycounts);
                    long slots = arity(y);
                    if (slots < 0) return;
                    // distribute the remainder into `slots` ordered sub-multisets
                    std::vector<std::vector<std::pair<std::string, int>>> slot_counts(
                        static_cast<size_t>(slots));
                    std::function<void(size_t)> spread = [&](size_t gj) {
                        if (gj == cnt.size()) {
                            Factorization f;
                            f.outer = y;
                            for (const auto& sc : slot_counts) f.inner.push_back(OperadElement::multi(sc));
                            out.push_back(std::move(f));
                            return;
                        }
                        int rest = cnt[gj].second - keep[gj];
                        for (const auto& comp : compositions_nonneg(rest, static_cast<int>(slots))) {
                            for (size_t s = 0; s < comp.size(); ++s)
                                if (comp[s]) slot_counts[s].push_back({cnt[gj].first, comp[s]});
                            spread(gj + 1);
                            for (size_t s = 0; s < comp.size(); ++s)
                                if (comp[s]) slot_counts[s].pop_back();
                        }
                    };
                    spread(0);
                    return;
                }
                for (int k = 0; k <= cnt[gi].second; ++k) {
                    keep[gi] = k;
                    choose(gi + 1);
                }
                keep[gi] = 0;
            };
            choose(0);
            break;
        }
    }
    return out;
}

std::vector<OperadElement> Operad::enumerate(int degree) const {
    if (degree < 0) throw DomainError("enumerate: negative degree");
    std::vector<OperadElement> out;
    switch (kind_) {
        case OperadKind::Free:
            for (const auto& t : enumerate_terms(sig_, degree)) out.push_back(OperadElement::free_term(t));
            break;
        case OperadKind::Assoc:
            out.push_back(OperadElement::assoc(degree + 1));
            break;
        case OperadKind::Multi: {
            if (!sig_.positive()) throw DomainError("multiset enumeration needs a positive signature");
            const auto& gens = sig_.generators();
            std::vector<std::pair<std::string, int>> counts;
            std::function<void(size_t, int)> rec = [&](size_t gi, int left) {
                if (gi == gens.size()) {
                    if (left == 0) out.push_back(OperadElement::multi(counts));
                    return;
                }
                for (int c = 0; c <= left; ++c) {
                    if (c) counts.push_back({gens[gi].name, c});
                    rec(gi + 1, left - c);
                    if (c) counts.pop_back();
                }
            };
            rec(0, degree);
            std::sort(out.begin(), out.end());
            break;
        }
    }
    return out;
}

OperadElement Operad::parse(const std::string& text) const {
    switch (kind_) {
        case OperadKind::Free:
            return OperadElement::free_term(parse_term(text, &sig_));
        case OperadKind::Assoc: {
            const std::string pre = "alpha_";
            if (text.rfind(pre, 0) != 0) throw ParseError(0, "expected alpha_<n>");
            std::string num = text.substr(pre.size());
            if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError(pre.size(), "expected arity number after alpha_");
            return OperadElement::assoc(std::stol(num));
        }
        case OperadKind::Multi: {
            if (text.size() < 2 || text.front() != '{' || text.back() != '}')
                throw ParseError(0, "expected {name,name,...}");
            std::string body = text.substr(1, text.size() - 2);
            std::vector<std::pair<std::string, int>> counts;
            size_t i = 0;
            while (i < body.size()) {
                size_t comma = body.find(',', i);
                std::string name = body.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
                if (name.empty()) throw ParseError(i + 1, "empty name in multiset");
                (void)sig_.arity(name);  // validates
                counts.push_back({name, 1});
                if (comma == std::string::npos) break;
                i = comma + 1;
                if (i == body.size()) throw ParseError(i, "trailing comma in multiset");
            }
            auto e = OperadElement::multi(std::move(counts));
            (void)arity(e);  // constructibility
            return e;
        }
    }
    throw DomainError("unreachable");
}

Word Operad::parse_word(const std::string& text) const {
    Word w;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == text.size()) break;
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        try {
            w.push_back(parse(text.substr(start, i - start)));
        } catch (ParseError& e) {
            throw ParseError(start + e.pos, e.msg);
        }
    }
    return w;
}

long Operad::word_degree(const Word& w) const {
    long d = 0;
    for (const auto& x : w) d += degree(x);
    return d;
}

Word Operad::reduce_word(const Word& w) const {
    Word out;
    for (const auto& x : w)
        if (!is_unit(x)) out.push_back(x);
    return out;
}

bool Operad::reduced(const Word& w) const {
    return std::none_of(w.begin(), w.end(), [&](const OperadElement& x) { return is_unit(x); });
}

std::string word_str(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].str();
    }
    return out;
}

Forest word_to_forest(const Word& w) {
    std::vector<Term> ts;
    ts.reserve(w.size());
    for (const auto& x : w) {
        if (x.kind() != OperadKind::Free) throw DomainError("word_to_forest: not a free-instance word");
        ts.push_back(x.term());
    }
    return Forest(std::move(ts));
}

Word forest_to_word(const Forest& f) {
    Word w;
    w.reserve(f.terms.size());
    for (const auto& t : f.terms) w.push_back(OperadElement::free_term(t));
    return w;
}

}  // namespace nhopf
