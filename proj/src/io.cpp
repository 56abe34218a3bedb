#include "nhopf/io.hpp"

#include <fstream>
#include <sstream>

#include "nhopf/signature.hpp"

namespace nhopf {

using nlohmann::json;

std::string instance_name(OperadKind k) {
    switch (k) {
        case OperadKind::Free: return "free";
        case OperadKind::Assoc: return "assoc";
        case OperadKind::Multi: return "multi";
    }
    throw DomainError("unknown instance");
}

namespace {

json word_json(const Word& w) {
    json out = json::array();
    for (const auto& x : w) out.push_back(x.str());
    return out;
}

}  // namespace

json element_json(OperadKind kind, const HopfElement& x) {
    json terms = json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back({{"word", word_json(w)}, {"coeff", c.get_str()}});
    return {{"format_version", kFormatVersion},
            {"type", "element"},
            {"instance", instance_name(kind)},
            {"basis", basis_name(x.basis())},
            {"terms", terms}};
}

json tensor_json(OperadKind kind, Basis basis, const TensorElement& t) {
    json terms = json::array();
    for (const auto& [legs, c] : t.terms())
        terms.push_back({{"left", word_json(legs.first)},
                         {"right", word_json(legs.second)},
                         {"coeff", c.get_str()}});
    return {{"format_version", kFormatVersion},
            {"type", "tensor"},
            {"instance", instance_name(kind)},
            {"basis", basis_name(basis)},
            {"terms", terms}};
}

json interval_json(const Interval& iv) {
    const auto& poset = iv.poset();
    json nodes = json::array();
    for (int id : iv.element_ids()) nodes.push_back(poset.elements()[(size_t)id].str());
    json edges = json::array();
    for (const auto& [lo, hi] : iv.cover_pairs())
        edges.push_back({poset.elements()[(size_t)lo].str(), poset.elements()[(size_t)hi].str()});
    json word = json::array();
    for (const auto& g : iv.word()) word.push_back(g);
    return {{"format_version", kFormatVersion},
            {"type", "interval"},
            {"word", word},
            {"word_class_size", iv.word_class_size()},
            {"bottom", iv.bottom().str()},
            {"top", iv.top().str()},
            {"nodes", nodes},
            {"edges", edges}};
}

std::string interval_dot(const Interval& iv) {
    const auto& poset = iv.poset();
    std::ostringstream os;
    os << "digraph interval {\n";
    os << "  rankdir=BT;\n";
    for (int id : iv.element_ids())
        os << "  \"" << poset.elements()[(size_t)id].str() << "\";\n";
    for (const auto& [lo, hi] : iv.cover_pairs())
        os << "  \"" << poset.elements()[(size_t)lo].str() << "\" -> \""
           << poset.elements()[(size_t)hi].str() << "\";\n";
    os << "}\n";
    return os.str();
}

json poly_json(const NCPolynomial& p) {
    json monomials = json::array();
    for (const auto& [w, c] : p.terms()) {
        json word = json::array();
        for (const auto& a : w) word.push_back(a);
        monomials.push_back({{"word", word}, {"coeff", c.get_str()}});
    }
    return {{"format_version", kFormatVersion}, {"type", "polynomial"}, {"monomials", monomials}};
}

json alphabet_json(const RelatedAlphabet& A) {
    json decorations = json::object();
    for (const auto& [gen, set] : A.decorations) decorations[gen] = json(set);
    json edges = json::object();
    for (const auto& [j, rel] : A.edges) {
        json pairs = json::array();
        for (const auto& [a, b] : rel) pairs.push_back({a, b});
        edges[std::to_string(j)] = pairs;
    }
    return {{"format_version", kFormatVersion},
            {"type", "alphabet"},
            {"letters", json(A.letters)},
            {"roots", json(A.roots)},
            {"decorations", decorations},
            {"edges", edges}};
}

RelatedAlphabet alphabet_from_json(const json& j) {
    RelatedAlphabet A;
    try {
        for (const auto& a : j.at("letters")) A.letters.push_back(a.get<std::string>());
        for (const auto& a : j.at("roots")) A.roots.insert(a.get<std::string>());
        if (j.contains("decorations"))
            for (const auto& [gen, set] : j.at("decorations").items())
                for (const auto& a : set) A.decorations[gen].insert(a.get<std::string>());
        if (j.contains("edges"))
            for (const auto& [slot, pairs] : j.at("edges").items()) {
                int s = std::stoi(slot);
                for (const auto& pr : pairs) {
                    if (!pr.is_array() || pr.size() != 2)
                        throw DomainError("edge entries must be [from, to] pairs");
                    A.edges[s].insert({pr[0].get<std::string>(), pr[1].get<std::string>()});
                }
            }
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad alphabet document: ") + e.what());
    }
    A.validate();
    return A;
}

RelatedAlphabet load_alphabet(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open alphabet file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad alphabet JSON: ") + e.what());
    }
    return alphabet_from_json(j);
}

}  // namespace nhopf
