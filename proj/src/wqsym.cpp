#include "nhopf/wqsym.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "nhopf/signature.hpp"
#include "nhopf/forest.hpp"

namespace nhopf {

PackedWord pack(const std::vector<int>& w) {
    std::set<int> distinct(w.begin(), w.end());
    std::map<int, int> rank;
    int r = 0;
    for (int v : distinct) rank[v] = ++r;
    PackedWord out;
    out.reserve(w.size());
    for (int v : w) out.push_back(rank[v]);
    return out;
}

bool is_packed(const std::vector<int>& w) {
    return pack(w) == w;
}

std::vector<PackedWord> packed_words(int n) {
    if (n < 0) throw DomainError("packed words need length >= 0");
    std::vector<PackedWord> out;
    PackedWord u;
    std::vector<int> count(static_cast<size_t>(n) + 1, 0);
    int high = 0;
    int missing = 0;  // values in 1..high not yet used
    std::function<void()> grow = [&]() {
        if ((int)u.size() == n) {
            out.push_back(u);
            return;
        }
        int room = n - (int)u.size() - 1;
        for (int v = 1; v <= n; ++v) {
            int save_high = high, save_missing = missing;
            if (v <= high) {
                if (count[v] == 0) --missing;
            } else {
                missing += v - high - 1;
                high = v;
            }
            ++count[v];
            if (missing <= room) {
                u.push_back(v);
                grow();
                u.pop_back();
            }
            --count[v];
            high = save_high;
            missing = save_missing;
        }
    };
    grow();
    std::sort(out.begin(), out.end());
    return out;
}

std::string packed_word_str(const PackedWord& u) {
    std::ostringstream os;
    bool digits = std::all_of(u.begin(), u.end(), [](int v) { return v <= 9; });
    for (size_t i = 0; i < u.size(); ++i) {
        if (i && !digits) os << ",";
        os << u[i];
    }
    return os.str();
}

PackedWord parse_packed_word(const std::string& text) {
    PackedWord u;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos < text.size()) {
            size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            std::string piece = text.substr(pos, next - pos);
            if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError(pos, "expected a positive integer");
            u.push_back(std::stoi(piece));
            pos = next + 1;
        }
        if (!text.empty() && text.back() == ',') throw ParseError(text.size(), "trailing comma");
    } else {
        for (size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '1' || text[i] > '9') throw ParseError(i, "expected a digit 1-9");
            u.push_back(text[i] - '0');
        }
    }
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] < 1) throw ParseError(i, "letters must be positive");
    return u;
}

bool wqsym_compatible(const PackedWord& u, const Forest& f) {
    if (!is_packed(u)) throw DomainError("compatibility is defined on packed words");
    if (!f.reduced()) throw DomainError("compatibility is defined on reduced forests");
    if ((long)u.size() != f.degree()) return false;
    for (const auto& e : edges(f))
        if (!(u[e.parent - 1] < u[e.child - 1])) return false;
    return true;
}

std::map<PackedWord, Coeff> wqsym_expansion(const Signature& sig, const Forest& f) {
    validate_arities(f, sig);
    std::map<PackedWord, Coeff> out;
    for (const auto& u : packed_words((int)f.degree()))
        if (wqsym_compatible(u, f)) out.emplace(u, 1);
    return out;
}

NCPolynomial wqsym_realize_m(const PackedWord& u, const std::vector<std::string>& ordered_letters) {
    if (!is_packed(u)) throw DomainError("realization is defined on packed words");
    int k = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
    NCPolynomial out;
    int n = (int)ordered_letters.size();
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
        if ((int)pick.size() == k) {
            LetterWord w;
            w.reserve(u.size());
            for (int v : u) w.push_back(ordered_letters[pick[v - 1]]);
            out.add(w, 1);
            return;
        }
        for (int i = from; i < n; ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return out;
}

RelatedAlphabet total_order_alphabet(const Signature& sig, const std::vector<std::string>& ordered_letters) {
    if (sig.empty()) throw DomainError("alphabet needs a nonempty signature");
    RelatedAlphabet A;
    A.letters = ordered_letters;
    for (const auto& a : ordered_letters) {
        A.roots.insert(a);
        for (const auto& g : sig.generators()) A.decorations[g.name].insert(a);
    }
    int slots = std::max<int>(1, sig.max_arity());
    for (int j = 1; j <= slots; ++j)
        for (size_t i = 0; i < ordered_letters.size(); ++i)
            for (size_t ip = i + 1; ip < ordered_letters.size(); ++ip)
                A.edges[j].insert({ordered_letters[i], ordered_letters[ip]});
    A.validate();
    return A;
}

}  // namespace nhopf
