// Command-line front end: parse inputs, run the library, print text/JSON/DOT.
// Exit codes: 0 success, 1 domain error, 2 usage or input-parse error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nhopf/bases.hpp"
#include "nhopf/fdb.hpp"
#include "nhopf/hopf.hpp"
#include "nhopf/io.hpp"
#include "nhopf/operad.hpp"
#include "nhopf/order.hpp"
#include "nhopf/verify.hpp"
#include "nhopf/wqsym.hpp"

using namespace nhopf;

namespace {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

struct Options {
    std::string sig_text;
    bool use_as = false;
    bool use_mas = false;
    std::string basis_text = "E";
    int max_degree = 3;
    std::string format = "text";
    std::string alphabet_spec;
};

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("expected an integer for " + what + ", got '" + s + "'");
    }
}

Signature load_signature(const Options& opt) {
    if (opt.sig_text.empty()) throw UsageError("this command needs --sig <inline spec or file>");
    if (std::filesystem::exists(opt.sig_text)) return Signature::parse_file(opt.sig_text);
    return Signature::parse_inline(opt.sig_text);
}

Operad make_operad(const Options& opt) {
    if (opt.use_as) return Operad::assoc_operad();
    Signature sig = load_signature(opt);
    return opt.use_mas ? Operad::multi_operad(std::move(sig)) : Operad::free_operad(std::move(sig));
}

void require_free(const Options& opt, const std::string& what) {
    if (opt.use_as || opt.use_mas) throw DomainError(what + " lives on the free instance; drop --as/--mas");
}

RelatedAlphabet make_alphabet(const Options& opt, const Signature& sig) {
    const std::string& spec = opt.alphabet_spec;
    if (spec.empty()) throw UsageError("this command needs --alphabet <file>|canonical:L,M|levels:bound");
    if (spec.rfind("canonical:", 0) == 0) {
        std::string body = spec.substr(10);
        size_t comma = body.find(',');
        if (comma == std::string::npos) throw UsageError("expected canonical:L,M");
        return canonical_alphabet(sig, parse_int(body.substr(0, comma), "canonical L"),
                                  parse_int(body.substr(comma + 1), "canonical M"));
    }
    if (spec.rfind("levels:", 0) == 0) return level_alphabet(sig, parse_int(spec.substr(7), "level bound"));
    return load_alphabet(spec);
}

// a word of generator names: space/comma separated, or one run of
// single-character names like "cab"
std::vector<std::string> parse_letter_word(const Signature& sig, const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (tokens.empty()) return {};
    bool all_names = true;
    for (const auto& t : tokens)
        if (!sig.has(t)) all_names = false;
    if (all_names) return tokens;
    if (tokens.size() == 1) {
        std::vector<std::string> letters;
        for (char c : tokens[0]) {
            std::string name(1, c);
            if (!sig.has(name)) throw DomainError("unknown letter '" + name + "' in word");
            letters.push_back(std::move(name));
        }
        return letters;
    }
    throw DomainError("word letters must be generator names");
}

void emit(std::ostream& os, const nlohmann::json& j) { os << j.dump(2) << "\n"; }

int run_product(const Options& opt, const std::string& lhs, const std::string& rhs) {
    Basis basis = parse_basis(opt.basis_text);
    HopfElement out(basis);
    OperadKind kind = OperadKind::Free;
    if (basis == Basis::E) {
        Operad op = make_operad(opt);
        kind = op.kind();
        NaturalHopf hopf(op);
        out = hopf.product(hopf.e(op.reduce_word(op.parse_word(lhs))),
                           hopf.e(op.reduce_word(op.parse_word(rhs))));
    } else {
        require_free(opt, "the " + basis_name(basis) + " basis");
        Signature sig = load_signature(opt);
        Operad op = Operad::free_operad(sig);
        HopfElement x(basis), y(basis);
        x.add(op.reduce_word(op.parse_word(lhs)), 1);
        y.add(op.reduce_word(op.parse_word(rhs)), 1);
        out = product_in_basis(sig, x, y);
    }
    if (opt.format == "json")
        emit(std::cout, element_json(kind, out));
    else
        std::cout << out.str() << "\n";
    return 0;
}

int run_coproduct(const Options& opt, const std::string& input) {
    Basis basis = parse_basis(opt.basis_text);
    Operad op = make_operad(opt);
    NaturalHopf hopf(op);
    Word w = op.reduce_word(op.parse_word(input));
    HopfElement x(Basis::E);
    if (basis == Basis::E) {
        x = hopf.e(w);
    } else {
        require_free(opt, "the " + basis_name(basis) + " basis");
        HopfElement in_basis(basis);
        in_basis.add(w, 1);
        x = convert_basis(load_signature(opt), in_basis, Basis::E);
    }
    TensorElement t = hopf.coproduct(x);
    if (opt.format == "json")
        emit(std::cout, tensor_json(op.kind(), Basis::E, t));
    else
        std::cout << t.str() << "\n";
    return 0;
}

int run_convert(const Options& opt, const std::string& input, const std::string& to_text) {
    require_free(opt, "basis conversion");
    Signature sig = load_signature(opt);
    Operad op = Operad::free_operad(sig);
    HopfElement x(parse_basis(opt.basis_text));
    x.add(op.reduce_word(op.parse_word(input)), 1);
    HopfElement out = convert_basis(sig, x, parse_basis(to_text));
    if (opt.format == "json")
        emit(std::cout, element_json(OperadKind::Free, out));
    else
        std::cout << out.str() << "\n";
    return 0;
}

int run_lattice(const Options& opt, const std::string& word_text) {
    require_free(opt, "the regraft order");
    Signature sig = load_signature(opt);
    Interval iv(sig, parse_letter_word(sig, word_text));
    if (opt.format == "dot") {
        std::cout << interval_dot(iv);
        return 0;
    }
    if (opt.format == "json") {
        emit(std::cout, interval_json(iv));
        return 0;
    }
    const auto& poset = iv.poset();
    std::cout << "elements: " << iv.size() << "\n";
    std::cout << "cover pairs: " << iv.cover_pairs().size() << "\n";
    std::cout << "bottom: " << iv.bottom().str() << "\n";
    std::cout << "top: " << iv.top().str() << "\n";
    for (const auto& f : iv.elements()) std::cout << "  " << f.str() << "\n";
    for (const auto& [lo, hi] : iv.cover_pairs())
        std::cout << "  " << poset.elements()[(size_t)lo].str() << " < "
                  << poset.elements()[(size_t)hi].str() << "\n";
    return 0;
}

int run_realize(const Options& opt, const std::string& input) {
    require_free(opt, "the polynomial realization");
    Signature sig = load_signature(opt);
    Operad op = Operad::free_operad(sig);
    Basis basis = parse_basis(opt.basis_text);
    HopfElement x(basis);
    x.add(op.reduce_word(op.parse_word(input)), 1);
    if (basis != Basis::E) x = convert_basis(sig, x, Basis::E);
    NCPolynomial p = realize(sig, x, make_alphabet(opt, sig));
    if (opt.format == "json")
        emit(std::cout, poly_json(p));
    else
        std::cout << p.str() << "\n";
    return 0;
}

int run_expand_wqsym(const Options& opt, const std::string& input) {
    require_free(opt, "the packed-word expansion");
    Signature sig = load_signature(opt);
    Forest f = reduce(parse_forest(input, &sig));
    auto expansion = wqsym_expansion(sig, f);
    if (opt.format == "json") {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [u, c] : expansion)
            terms.push_back({{"word", packed_word_str(u)}, {"coeff", c.get_str()}});
        emit(std::cout, nlohmann::json{{"format_version", kFormatVersion},
                                       {"type", "wqsym-expansion"},
                                       {"forest", f.str()},
                                       {"terms", terms}});
        return 0;
    }
    if (expansion.empty()) {
        std::cout << "0\n";
        return 0;
    }
    std::string out;
    for (const auto& [u, c] : expansion) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += c.get_str() + "*";
        out += "M(" + packed_word_str(u) + ")";
    }
    std::cout << out << "\n";
    return 0;
}

int run_fdb(const Options& opt, int r, int s, const std::string& action, const std::string& input,
            int bound) {
    if (action != "expand") throw UsageError("unknown fdb action '" + action + "'; expected expand");
    FdB fdb = fdb_construct(r, s);
    Word w = fdb.multi_op.reduce_word(fdb.multi_op.parse_word(input));
    FdbExpansion ex = fdb_expand(fdb, w, bound);
    size_t class_size = 0;
    for (const auto& g : ex.groups) class_size += g.members.size();
    if (opt.format == "json") {
        nlohmann::json groups = nlohmann::json::array();
        for (const auto& g : ex.groups)
            groups.push_back({{"coefficient", g.members.size()},
                              {"representative", g.representative.str()},
                              {"monomials", g.poly.terms().size()}});
        emit(std::cout, nlohmann::json{{"format_version", kFormatVersion},
                                       {"type", "fdb-expansion"},
                                       {"r", r},
                                       {"s", s},
                                       {"bound", bound},
                                       {"word", word_str(w)},
                                       {"class_size", class_size},
                                       {"groups", groups},
                                       {"total_monomials", ex.total.terms().size()}});
        return 0;
    }
    std::cout << "class size: " << class_size << "\n";
    std::cout << "groups: " << ex.groups.size() << "\n";
    for (const auto& g : ex.groups)
        std::cout << "  " << g.members.size() << " x [" << g.representative.str() << "] ("
                  << g.poly.terms().size() << " monomials)\n";
    std::cout << "total monomials: " << ex.total.terms().size() << "\n";
    return 0;
}

int run_verify_cmd(const Options& opt, const std::string& suite) {
    auto results = run_verify(suite, opt.max_degree);
    size_t passed = 0;
    for (const auto& r : results)
        if (r.pass) ++passed;
    if (opt.format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : results)
            checks.push_back(
                {{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        emit(std::cout, nlohmann::json{{"format_version", kFormatVersion},
                                       {"type", "verify"},
                                       {"max_degree", opt.max_degree},
                                       {"checks", checks},
                                       {"passed", passed},
                                       {"total", results.size()}});
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.suite << ": " << r.name;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        }
        std::cout << "passed " << passed << "/" << results.size() << " checks at max degree "
                  << opt.max_degree << "\n";
    }
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"natural Hopf algebras of nonsymmetric operads"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--sig", opt.sig_text, "generator signature: inline 'a:1,b:2,c:3' or a file of 'name arity' lines");
    auto* as_flag = app.add_flag("--as", opt.use_as, "use the associative instance (alpha_n elements)");
    auto* mas_flag = app.add_flag("--mas", opt.use_mas, "use the multiset quotient instance ({a,a,b} elements)");
    as_flag->excludes(mas_flag);
    app.add_option("--basis", opt.basis_text, "basis of the inputs: E, F or H")
        ->check(CLI::IsMember({"E", "F", "H"}));
    app.add_option("--max-degree", opt.max_degree, "degree bound for verify");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--alphabet", opt.alphabet_spec,
                   "alphabet for realize: a JSON file, canonical:L,M or levels:bound");

    std::string lhs, rhs, input, to_text = "E", word_text, suite = "all", fdb_action, fdb_input;
    int fdb_r = 0, fdb_s = 0, fdb_bound = 4;

    auto* product = app.add_subcommand("product", "multiply two basis elements");
    product->add_option("lhs", lhs, "left factor")->required();
    product->add_option("rhs", rhs, "right factor")->required();

    auto* coproduct = app.add_subcommand("coproduct", "coproduct of a basis element");
    coproduct->add_option("input", input, "basis element")->required();

    auto* convert = app.add_subcommand("convert", "rewrite a basis element in another basis");
    convert->add_option("input", input, "basis element (basis taken from --basis)")->required();
    convert->add_option("--to", to_text, "target basis")->check(CLI::IsMember({"E", "F", "H"}));

    auto* lattice = app.add_subcommand("lattice", "word-class interval of the regraft order");
    lattice->add_option("--word", word_text, "word of generator names, e.g. cab")->required();

    auto* realize_cmd = app.add_subcommand("realize", "polynomial realization over a related alphabet");
    realize_cmd->add_option("input", input, "basis element")->required();

    auto* wqsym = app.add_subcommand("expand-wqsym", "packed-word expansion of a forest");
    wqsym->add_option("input", input, "reduced forest")->required();

    auto* fdb = app.add_subcommand("fdb", "family with s generators of arity r+1");
    fdb->add_option("-r", fdb_r, "arity parameter (generators have arity r+1)")->required();
    fdb->add_option("-s", fdb_s, "number of generators")->required();
    fdb->add_option("action", fdb_action, "expand")->required();
    fdb->add_option("input", fdb_input, "multiset word, e.g. \"{a,a,b} {a}\"")->required();
    fdb->add_option("--bound", fdb_bound, "level alphabet bound");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    {
        std::vector<std::string> names = verify_suites();
        names.push_back("all");
        verify->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(names));
    }

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (product->parsed()) return run_product(opt, lhs, rhs);
        if (coproduct->parsed()) return run_coproduct(opt, input);
        if (convert->parsed()) return run_convert(opt, input, to_text);
        if (lattice->parsed()) return run_lattice(opt, word_text);
        if (realize_cmd->parsed()) return run_realize(opt, input);
        if (wqsym->parsed()) return run_expand_wqsym(opt, input);
        if (fdb->parsed()) return run_fdb(opt, fdb_r, fdb_s, fdb_action, fdb_input, fdb_bound);
        if (verify->parsed()) return run_verify_cmd(opt, suite);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
