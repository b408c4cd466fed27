// Command-line front end: enumeration, universal conversion, products,
// factorization, term views, Narayana statistics, the verification suite and
// the finite product-table lab. Exit codes: 0 success, 1 verification
// failure, 2 usage or input errors.

#include "catmagma/catmagma.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace catmagma;
using nlohmann::json;

namespace {

enum class Format { text, json };

struct Options {
    Format format = Format::text;
};

const FamilyDescriptor& lookup(const std::string& token) {
    const FamilyDescriptor* f = find_family(token);
    if (!f) throw contract_error("unknown family '" + token + "' (try the `families` subcommand)");
    return *f;
}

void print_element(const Options& opt, const FamilyDescriptor& f, const Element& e) {
    if (opt.format == Format::json) {
        json rec{{"family", std::string(f.code)}, {"norm", f.norm(e)}, {"repr", f.render(e)}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << f.render(e) << "\n";
    }
}

/// Elements come from the final positional argument or, in batch mode, one
/// per line on stdin.
std::vector<std::string> element_inputs(const std::optional<std::string>& positional) {
    std::vector<std::string> lines;
    if (positional) {
        lines.push_back(*positional);
        return lines;
    }
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

int run_verify(const Options& opt, const std::string& family_token, long long max_norm) {
    std::vector<CheckResult> results;
    if (family_token == "all") {
        results = verify_all(max_norm);
    } else {
        const FamilyDescriptor& f = lookup(family_token);
        results = verify_family(f, max_norm);
        if (f.id != FamilyId::cartesian) {
            auto r = verify_pair(f, family(FamilyId::cartesian), std::min<long long>(max_norm, 5));
            results.insert(results.end(), r.begin(), r.end());
        }
    }
    bool all_pass = true;
    for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        if (opt.format == Format::json) {
            json rec{{"check", r.name}, {"pass", r.pass}};
            if (!r.detail.empty()) rec["detail"] = r.detail;
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.pass && !r.detail.empty()) std::cout << " [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

int run_magma_lab(const Options& opt, const std::string& variant, int size,
                  const std::string& file, long long bound) {
    FiniteMagmaTable table;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw contract_error("cannot open table file " + file);
        table = table_from_stream(in);
    } else {
        table = diagonal_table(variant.at(0), size);
    }
    Classification c = classify(table, bound);
    auto uf = check_unique_factorization(table);
    auto fd = check_finite_decomposition(table, bound);
    if (opt.format == Format::json) {
        json rec{{"unique_factorization", c.unique_factorization},
                 {"finite_decomposition", to_string(c.finite_decomposition)},
                 {"irreducibles", c.irreducibles},
                 {"bound", bound}};
        if (!uf.unique)
            rec["duplicate"] = {{"value", uf.duplicate_value},
                                {"cells", {{uf.cell_a.first, uf.cell_a.second},
                                           {uf.cell_b.first, uf.cell_b.second}}}};
        if (fd.verdict == Verdict::no) rec["cycle"] = fd.cycle;
        std::cout << rec.dump() << "\n";
        return 0;
    }
    for (int i = 1; i <= table.size; ++i) {
        for (int j = 1; j <= table.size; ++j) std::cout << (j > 1 ? " " : "") << table.at(i, j);
        std::cout << "\n";
    }
    std::cout << "unique-factorization: " << (c.unique_factorization ? "yes" : "no");
    if (!uf.unique)
        std::cout << " (value " << uf.duplicate_value << " at (" << uf.cell_a.first << ","
                  << uf.cell_a.second << ") and (" << uf.cell_b.first << "," << uf.cell_b.second
                  << "))";
    std::cout << "\n";
    std::cout << "finite-decomposition: " << to_string(c.finite_decomposition);
    if (fd.verdict == Verdict::no) {
        std::cout << " (cycle:";
        for (long long v : fd.cycle) std::cout << " " << v;
        std::cout << ")";
    }
    std::cout << "\n";
    std::cout << "irreducibles<=" << bound << ":";
    for (long long v : c.irreducibles) std::cout << " " << v;
    std::cout << "\n";
    if (c.finite_decomposition == Verdict::yes) {
        auto derived = derive_norm(table, bound);
        std::cout << "norms (" << (derived.additive ? "additive" : "super-additive") << "):";
        for (auto [v, n] : derived.norm) std::cout << " " << v << "->" << n;
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Catalan families as free magmas: enumeration, universal bijection, statistics"};
    app.require_subcommand(1);
    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "Output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_families = app.add_subcommand("families", "List the fourteen families");

    std::string en_family;
    long long en_norm = 1, en_cap = kDefaultNormCap;
    bool en_count_only = false;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "All elements of one norm");
    cmd_enumerate->add_option("--family", en_family, "Family id or alias")->required();
    cmd_enumerate->add_option("--norm", en_norm, "Norm to enumerate")->required();
    cmd_enumerate->add_flag("--count-only", en_count_only, "Print only the count");
    cmd_enumerate->add_option("--cap", en_cap, "Enumeration norm cap");

    std::string cv_from, cv_to;
    std::optional<std::string> cv_elem;
    auto* cmd_convert = app.add_subcommand("convert", "Universal bijection between families");
    cmd_convert->add_option("--from", cv_from, "Source family")->required();
    cmd_convert->add_option("--to", cv_to, "Target family")->required();
    cmd_convert->add_option("element", cv_elem, "Element text (stdin lines when omitted)");

    std::string pr_family, pr_left, pr_right;
    auto* cmd_product = app.add_subcommand("product", "Multiply two elements");
    cmd_product->add_option("--family", pr_family, "Family id or alias")->required();
    cmd_product->add_option("left", pr_left, "Left factor")->required();
    cmd_product->add_option("right", pr_right, "Right factor")->required();

    std::string fa_family;
    std::optional<std::string> fa_elem;
    auto* cmd_factor = app.add_subcommand("factor", "Factorize an element");
    cmd_factor->add_option("--family", fa_family, "Family id or alias")->required();
    cmd_factor->add_option("element", fa_elem, "Element text (stdin lines when omitted)");

    std::string tm_family, tm_notation = "infix";
    std::optional<std::string> tm_elem;
    auto* cmd_term = app.add_subcommand("term", "Canonical term of an element");
    cmd_term->add_option("--family", tm_family, "Family id or alias")->required();
    cmd_term->add_option("--notation", tm_notation, "prefix|infix|postfix")
        ->check(CLI::IsMember({"prefix", "infix", "postfix"}));
    cmd_term->add_option("element", tm_elem, "Element text (stdin lines when omitted)");

    std::string na_family;
    long long na_norm = 2;
    auto* cmd_narayana = app.add_subcommand("narayana", "Right-multiplication histogram");
    cmd_narayana->add_option("--family", na_family, "Family id or alias")->required();
    cmd_narayana->add_option("--norm", na_norm, "Norm")->required();

    std::string vf_family = "all";
    long long vf_max_norm = 5;
    auto* cmd_verify = app.add_subcommand("verify", "Run the property suite");
    cmd_verify->add_option("--family", vf_family, "Family id, alias or 'all'");
    cmd_verify->add_option("--max-norm", vf_max_norm, "Exhaustive norm bound");

    std::string ml_variant = "a", ml_file;
    int ml_size = 6;
    long long ml_bound = 27;
    auto* cmd_lab = app.add_subcommand("magma-lab", "Classify a finite product table");
    cmd_lab->add_option("--variant", ml_variant, "Diagonal table variant (a|b|c)")
        ->check(CLI::IsMember({"a", "b", "c"}));
    cmd_lab->add_option("--size", ml_size, "Materialized table size");
    cmd_lab->add_option("--file", ml_file, "Read the table from a file instead");
    cmd_lab->add_option("--bound", ml_bound, "Classification bound");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.format = (format == "json") ? Format::json : Format::text;

    try {
        if (*cmd_families) {
            for (const FamilyDescriptor& f : family_registry()) {
                if (opt.format == Format::json) {
                    json rec{{"family", std::string(f.code)},
                             {"alias", std::string(f.alias)},
                             {"name", std::string(f.name)},
                             {"generator", f.render(f.generator(GeneratorId{1}))}};
                    std::cout << rec.dump() << "\n";
                } else {
                    std::cout << f.code << "\t" << f.alias << "\t" << f.name << "\t(generator "
                              << f.render(f.generator(GeneratorId{1})) << ")\n";
                }
            }
        } else if (*cmd_enumerate) {
            const FamilyDescriptor& f = lookup(en_family);
            auto es = enumerate_elements(f, en_norm, en_cap);
            if (en_count_only) {
                std::cout << es.size() << "\n";
            } else {
                for (const Element& e : es) print_element(opt, f, e);
            }
        } else if (*cmd_convert) {
            const FamilyDescriptor& src = lookup(cv_from);
            const FamilyDescriptor& dst = lookup(cv_to);
            for (const std::string& line : element_inputs(cv_elem))
                print_element(opt, dst, universal_convert(src, dst, src.parse(line)));
        } else if (*cmd_product) {
            const FamilyDescriptor& f = lookup(pr_family);
            print_element(opt, f, f.product(f.parse(pr_left), f.parse(pr_right)));
        } else if (*cmd_factor) {
            const FamilyDescriptor& f = lookup(fa_family);
            for (const std::string& line : element_inputs(fa_elem)) {
                auto parts = f.factorize(f.parse(line));
                if (opt.format == Format::json) {
                    json rec{{"family", std::string(f.code)}};
                    if (parts) {
                        rec["left"] = f.render(parts->first);
                        rec["right"] = f.render(parts->second);
                    } else {
                        rec["irreducible"] = true;
                    }
                    std::cout << rec.dump() << "\n";
                } else if (parts) {
                    std::cout << f.render(parts->first) << "\t" << f.render(parts->second) << "\n";
                } else {
                    std::cout << "IRREDUCIBLE\n";
                }
            }
        } else if (*cmd_term) {
            const FamilyDescriptor& f = lookup(tm_family);
            Notation no = tm_notation == "prefix"  ? Notation::Prefix
                          : tm_notation == "infix" ? Notation::Infix
                                                   : Notation::Postfix;
            for (const std::string& line : element_inputs(tm_elem)) {
                const std::string text = term_render(decompose(f, f.parse(line)), no);
                if (opt.format == Format::json) {
                    json rec{{"family", std::string(f.code)}, {"notation", tm_notation}, {"term", text}};
                    std::cout << rec.dump() << "\n";
                } else {
                    std::cout << text << "\n";
                }
            }
        } else if (*cmd_narayana) {
            const FamilyDescriptor& f = lookup(na_family);
            NarayanaHistogram h = narayana_histogram(f, na_norm);
            for (auto [k, c] : h.counts) {
                if (opt.format == Format::json) {
                    json rec{{"family", std::string(f.code)}, {"norm", h.norm}, {"k", k}, {"count", c}};
                    std::cout << rec.dump() << "\n";
                } else {
                    std::cout << k << " " << c << "\n";
                }
            }
        } else if (*cmd_verify) {
            return run_verify(opt, vf_family, vf_max_norm);
        } else if (*cmd_lab) {
            return run_magma_lab(opt, ml_variant, ml_size, ml_file, ml_bound);
        }
    } catch (const parse_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const contract_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
