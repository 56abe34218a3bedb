#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nhopf {

// Thrown on malformed textual input; pos is a byte offset into the input.
// msg keeps the bare text so rethrow sites can rebase pos without nesting
// the prefix.
struct ParseError : std::runtime_error {
    size_t pos;
    std::string msg;
    ParseError(size_t p, const std::string& m)
        : std::runtime_error("parse error at offset " + std::to_string(p) + ": " + m),
          pos(p), msg(m) {}
};

// Thrown on structurally valid input that violates a precondition
// (arity mismatch, unknown generator, unsupported signature, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Generator {
    std::string name;
    int arity = 0;
};

// A graded set of generators with arities.  Order of declaration is kept;
// lookups go through an index.  Names may not contain the characters
// reserved by the term syntax: * [ ] { } , : whitespace.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Generator> gens);

    static Signature parse_inline(const std::string& text);  // "a:1,b:2,c:3"
    static Signature parse_file(const std::string& path);    // lines "name arity"

    const std::vector<Generator>& generators() const { return gens_; }
    bool has(const std::string& name) const { return index_.count(name) != 0; }
    int arity(const std::string& name) const;
    bool positive() const;   // every arity >= 1
    int max_arity() const;
    size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }

    std::string str() const;  // inline form, declaration order

private:
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
};

bool valid_generator_name(const std::string& name);

}  // namespace nhopf
