// Command-line front-end for the lexical-tableau toolkit. Every subcommand
// is a thin wrapper over the library; output for a fixed command line is
// byte-identical across runs and parallelism settings.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "lextab/compositions.hpp"
#include "lextab/errors.hpp"
#include "lextab/hopf.hpp"
#include "lextab/identities.hpp"
#include "lextab/io.hpp"
#include "lextab/tableaux.hpp"

namespace {

using namespace lextab;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

TableauKind parse_kind(const std::string& name) {
    if (name == "lexical") return TableauKind::Lexical;
    if (name == "immaculate") return TableauKind::Immaculate;
    throw std::domain_error("unknown tableau kind '" + name + "'");
}

// "BASIS:COMPOSITION", e.g. "H:2" or "Lex:2.1"
FormalSeries parse_basis_element(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::domain_error("expected BASIS:COMPOSITION, got '" + text + "'");
    return FormalSeries(parse_basis(text.substr(0, colon)),
                        parse_composition(text.substr(colon + 1)));
}

Composition content_from_flags(const Composition& shape, const std::string& content_text,
                               bool standard) {
    if (standard != content_text.empty())  // exactly one of the two must be given
        throw std::domain_error("give exactly one of --content and --standard");
    if (standard)
        return Composition(std::vector<int>(static_cast<std::size_t>(shape.size()), 1));
    return parse_composition(content_text);
}

int run(int argc, char** argv) {
    CLI::App app{"lexical tableaux and the lexical bases of NSym/QSym"};
    app.require_subcommand(1);

    int max_degree = -1;
    bool allow_large = false;
    int threads = 1;
    app.add_option("--max-degree", max_degree, "override the degree cap (default 12)");
    app.add_flag("--allow-large", allow_large, "acknowledge a cap above the default");
    app.add_option("--parallel", threads, "worker threads for enumeration (0 = hardware)");

    std::string kind_text, shape_text, content_text, format = "text";
    bool standard = false;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list tableaux of a shape and content");
    enumerate->add_option("--kind", kind_text, "lexical|immaculate")->required();
    enumerate->add_option("--shape", shape_text)->required();
    enumerate->add_option("--content", content_text);
    enumerate->add_flag("--standard", standard, "content (1,...,1)");
    enumerate->add_option("--format", format, "text|json");

    CLI::App* count = app.add_subcommand("count", "count tableaux of a shape and content");
    count->add_option("--kind", kind_text, "lexical|immaculate")->required();
    count->add_option("--shape", shape_text)->required();
    count->add_option("--content", content_text);
    count->add_flag("--standard", standard, "content (1,...,1)");
    count->add_option("--format", format, "text|json");

    std::string matrix_kind_text;
    int matrix_n = 0;
    CLI::App* matrix = app.add_subcommand("matrix", "transition matrix between two bases");
    matrix->add_option("--kind", matrix_kind_text, "e.g. LexDual_to_M")->required();
    matrix->add_option("--n", matrix_n, "degree")->required();
    matrix->add_option("--format", format, "text|csv|json");

    std::string from_text, to_text, alpha_text;
    CLI::App* expand = app.add_subcommand("expand", "expand a basis element in another basis");
    expand->add_option("--from", from_text, "source basis")->required();
    expand->add_option("--alpha", alpha_text, "indexing composition")->required();
    expand->add_option("--to", to_text, "target basis")->required();
    expand->add_option("--format", format, "text|json");

    std::string left_text, right_text, product_to;
    CLI::App* product = app.add_subcommand("product", "NSym product of two basis elements");
    product->add_option("--left", left_text, "BASIS:COMPOSITION")->required();
    product->add_option("--right", right_text, "BASIS:COMPOSITION")->required();
    product->add_option("--to", product_to, "result basis (default: left basis)");
    product->add_option("--format", format, "text|json");

    std::string method = "auto";
    CLI::App* antipode = app.add_subcommand("antipode", "antipode of a lexical basis element");
    antipode->add_option("--alpha", alpha_text, "indexing composition")->required();
    antipode->add_option("--method", method, "formula|generic");
    antipode->add_option("--format", format, "text|json");

    std::string identity = "all";
    int max_n = 0;
    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->add_option("--identity", identity, "stirling|kj|conclusion|relationT|all");
    verify->add_option("--max-n", max_n, "upper bound (0 = per-identity default)");
    verify->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (max_degree >= 0) {
        if (max_degree > 12 && !allow_large)
            throw std::domain_error("--max-degree above 12 needs --allow-large");
        set_degree_cap(max_degree);
    }
    if (threads < 0) throw std::domain_error("--parallel must be nonnegative");
    set_parallelism(threads);

    if (*enumerate) {
        const Composition shape = parse_composition(shape_text);
        const Composition content = content_from_flags(shape, content_text, standard);
        const auto tableaux = enumerate_tableaux(parse_kind(kind_text), shape, content);
        if (format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const Tableau& t : tableaux) j.push_back(tableau_to_json(t));
            std::cout << j.dump(2) << '\n';
        } else {
            for (std::size_t i = 0; i < tableaux.size(); ++i) {
                if (i) std::cout << '\n';
                std::cout << tableau_to_text(tableaux[i]);
            }
            std::cout << tableaux.size() << " tableaux\n";
        }
        return 0;
    }
    if (*count) {
        const Composition shape = parse_composition(shape_text);
        const Composition content = content_from_flags(shape, content_text, standard);
        const Integer n = count_K(parse_kind(kind_text), shape, content);
        if (format == "json")
            std::cout << nlohmann::json{{"count", n.get_str()}}.dump() << '\n';
        else
            std::cout << n.get_str() << '\n';
        return 0;
    }
    if (*matrix) {
        const auto m = transition_matrix(parse_matrix_kind(matrix_kind_text), matrix_n);
        if (format == "csv")
            std::cout << matrix_to_csv(*m);
        else if (format == "json")
            std::cout << matrix_to_json(*m).dump(2) << '\n';
        else
            std::cout << matrix_to_text(*m);
        return 0;
    }
    if (*expand) {
        const FormalSeries s(parse_basis(from_text), parse_composition(alpha_text));
        const FormalSeries out = convert(s, parse_basis(to_text));
        if (format == "json")
            std::cout << series_to_json(out).dump(2) << '\n';
        else
            std::cout << series_to_text(out) << '\n';
        return 0;
    }
    if (*product) {
        const FormalSeries left = parse_basis_element(left_text);
        const FormalSeries right = parse_basis_element(right_text);
        FormalSeries out = multiply_nsym(left, right);
        if (!product_to.empty()) out = convert(out, parse_basis(product_to));
        if (format == "json")
            std::cout << series_to_json(out).dump(2) << '\n';
        else
            std::cout << series_to_text(out) << '\n';
        return 0;
    }
    if (*antipode) {
        const Composition alpha = parse_composition(alpha_text);
        FormalSeries out(Basis::E);
        const bool two_row = alpha.length() == 2;
        if (method == "formula" || (method == "auto" && two_row)) {
            if (!two_row)
                throw std::domain_error("--method formula needs a two-part composition");
            out = antipode_lexical_two_row(alpha.part(0), alpha.part(1));
        } else if (method == "generic" || method == "auto") {
            out = antipode_nsym(convert(FormalSeries(Basis::Lex, alpha), Basis::H));
        } else {
            throw std::domain_error("unknown antipode method '" + method + "'");
        }
        if (format == "json")
            std::cout << series_to_json(out).dump(2) << '\n';
        else
            std::cout << series_to_text(out) << '\n';
        return 0;
    }
    if (*verify) {
        std::vector<IdentityReport> reports;
        if (identity == "stirling" || identity == "all")
            reports.push_back(verify_stirling_sums(max_n > 0 ? max_n : 10));
        if (identity == "kj" || identity == "all")
            reports.push_back(verify_k_equals_sum_j(max_n > 0 ? max_n : 7));
        if (identity == "conclusion" || identity == "all")
            reports.push_back(verify_conclusion_sums(max_n > 0 ? max_n : 8));
        if (identity == "relationT" || identity == "all")
            reports.push_back(verify_relation_T(max_n > 0 ? max_n : 10));
        if (reports.empty()) throw std::domain_error("unknown identity '" + identity + "'");
        bool all_pass = true;
        if (format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const IdentityReport& r : reports) {
                j.push_back(r.to_json());
                all_pass = all_pass && r.pass;
            }
            std::cout << j.dump(2) << '\n';
        } else {
            for (const IdentityReport& r : reports) {
                std::cout << r.summary() << '\n';
                all_pass = all_pass && r.pass;
            }
        }
        return all_pass ? 0 : kExitVerifyFailed;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lextab::size_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
