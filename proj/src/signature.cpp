#include "nhopf/signature.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nhopf {

bool valid_generator_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (c == '*' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' || c == ':' ||
            std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

Signature::Signature(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (!valid_generator_name(g.name)) throw DomainError("bad generator name: '" + g.name + "'");
        if (g.arity < 0) throw DomainError("negative arity for generator " + g.name);
        if (!index_.emplace(g.name, static_cast<int>(i)).second)
            throw DomainError("duplicate generator name: " + g.name);
    }
}

Signature Signature::parse_inline(const std::string& text) {
    std::vector<Generator> gens;
    size_t i = 0;
    while (i < text.size()) {
        size_t comma = text.find(',', i);
        std::string item = text.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
        size_t colon = item.find(':');
        if (colon == std::string::npos) throw ParseError(i, "expected name:arity in signature");
        std::string name = item.substr(0, colon);
        std::string num = item.substr(colon + 1);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError(i + colon + 1, "expected arity number");
        gens.push_back({name, std::stoi(num)});
        if (comma == std::string::npos) break;
        i = comma + 1;
        if (i == text.size()) throw ParseError(i, "trailing comma in signature");
    }
    if (gens.empty()) throw ParseError(0, "empty signature spec");
    return Signature(std::move(gens));
}

Signature Signature::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open signature file: " + path);
    std::vector<Generator> gens;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;  // blank line
        if (name[0] == '#') continue;
        long long ar;
        if (!(ls >> ar)) throw ParseError(lineno, "missing arity on line " + std::to_string(lineno));
        gens.push_back({name, static_cast<int>(ar)});
    }
    if (gens.empty()) throw DomainError("signature file has no generators: " + path);
    return Signature(std::move(gens));
}

int Signature::arity(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw DomainError("unknown generator: " + name);
    return gens_[it->second].arity;
}

bool Signature::positive() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.arity >= 1; });
}

int Signature::max_arity() const {
    int m = 0;
    for (const auto& g : gens_) m = std::max(m, g.arity);
    return m;
}

std::string Signature::str() const {
    std::string out;
    for (const auto& g : gens_) {
        if (!out.empty()) out += ',';
        out += g.name + ":" + std::to_string(g.arity);
    }
    return out;
}

}  // namespace nhopf
