#include "lextab/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "lextab/compositions.hpp"
#include "lextab/errors.hpp"
#include "lextab/tableaux.hpp"

namespace lextab {

namespace {

void require_range(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("Stirling indices need 0 <= k <= n");
}

IdentityCase make_case(nlohmann::json params, Integer lhs, Integer rhs) {
    IdentityCase c;
    c.params = std::move(params);
    c.ok = lhs == rhs;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

void finalize(IdentityReport& report) {
    report.pass = true;
    for (const IdentityCase& c : report.cases)
        if (!c.ok) report.pass = false;
}

} // namespace

namespace {

using Triangle = std::vector<std::vector<Integer>>;

Triangle stirling_triangle(int n, bool second_kind) {
    Triangle s(static_cast<std::size_t>(n) + 1,
               std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(0)));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            const Integer factor = second_kind ? Integer(j) : Integer(i - 1);
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                factor * s[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)] +
                s[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
        }
    return s;
}

} // namespace

Integer stirling2(int n, int k) {
    require_range(n, k);
    return stirling_triangle(n, true)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling1_unsigned(int n, int k) {
    require_range(n, k);
    return stirling_triangle(n, false)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer bell(int n) {
    if (n < 0) throw std::domain_error("Bell number of a negative integer");
    Integer total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    j["range"] = range;
    j["cases"] = nlohmann::json::array();
    for (const IdentityCase& c : cases) {
        j["cases"].push_back({{"params", c.params},
                              {"lhs", c.lhs.get_str()},
                              {"rhs", c.rhs.get_str()},
                              {"ok", c.ok}});
    }
    j["pass"] = pass;
    return j;
}

std::string IdentityReport::summary() const {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const IdentityCase& c : cases)
        if (!c.ok) ++failed;
    out << (pass ? "pass" : "FAIL") << "  " << identity << "  [" << range << "]  "
        << cases.size() << " cases";
    if (failed) out << ", " << failed << " failed";
    return out.str();
}

IdentityReport verify_stirling_sums(int max_n) {
    if (max_n < 1) throw std::domain_error("verify_stirling_sums needs max_n >= 1");
    check_degree_cap(max_n, "verify_stirling_sums");
    IdentityReport report;
    report.identity = "stirling-sums";
    report.range = "1 <= k <= n <= " + std::to_string(max_n);
    const int brute_limit = std::min(max_n, 8);
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            Integer imm_hook = 0, lex_hook = 0, imm_brute = 0, lex_brute = 0;
            const Composition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
            for (const Composition& alpha : compositions_of(n, k)) {
                imm_hook += standard_count(TableauKind::Immaculate, alpha);
                lex_hook += standard_count(TableauKind::Lexical, alpha);
                if (n <= brute_limit) {
                    imm_brute += count_K_by_enumeration(TableauKind::Immaculate, alpha, ones);
                    lex_brute += count_K_by_enumeration(TableauKind::Lexical, alpha, ones);
                }
            }
            report.cases.push_back(make_case({{"n", n}, {"k", k}, {"kind", "immaculate"}, {"path", "hook"}},
                                             imm_hook, stirling2(n, k)));
            report.cases.push_back(make_case({{"n", n}, {"k", k}, {"kind", "lexical"}, {"path", "hook"}},
                                             lex_hook, stirling1_unsigned(n, k)));
            if (n <= brute_limit) {
                report.cases.push_back(
                    make_case({{"n", n}, {"k", k}, {"kind", "immaculate"}, {"path", "enumeration"}},
                              imm_brute, stirling2(n, k)));
                report.cases.push_back(
                    make_case({{"n", n}, {"k", k}, {"kind", "lexical"}, {"path", "enumeration"}},
                              lex_brute, stirling1_unsigned(n, k)));
            }
        }
    }
    finalize(report);
    return report;
}

IdentityReport verify_conclusion_sums(int max_n) {
    if (max_n < 2) throw std::domain_error("verify_conclusion_sums needs max_n >= 2");
    if (max_n > 9) throw size_limit_error("verify_conclusion_sums supports max_n <= 9");
    IdentityReport report;
    report.identity = "conclusion-sums";
    report.range = "2 <= n <= " + std::to_string(max_n);
    for (int n = 2; n <= max_n; ++n) {
        Integer lhs_i = 0, lhs_ii = 0, lhs_iii = 0;
        for (const Composition& alpha : compositions_of(n)) {
            const Integer g = standard_count(TableauKind::Immaculate, alpha);
            Integer signs = 0, weighted = 0;
            for (int p : alpha.parts()) {
                signs += (p & 1) ? -1 : 1;
                weighted += (p & 1) ? p : -p;  // p * (-1)^(p+1)
            }
            lhs_i += g * signs;
            lhs_ii += g * weighted;
            lhs_iii += g * Integer(alpha.length()) * weighted;
        }
        // alternating binomial transform of the Bell numbers, shifted by the
        // forced Bell term (a set partition may have no marked block)
        Integer rhs_i = 0;
        for (int k = 0; k <= n; ++k) {
            const Integer term = binomial(n, k) * bell(k);
            rhs_i += ((n - k) & 1) ? -term : term;
        }
        rhs_i -= bell(n);
        Integer rhs_ii = (n & 1) ? Integer(1) : Integer(-1);
        for (int j = 1; j <= n - 1; ++j) {
            const Integer term = bell(n - j - 1);
            rhs_ii += (j & 1) ? term : -term;
        }
        rhs_ii *= n;
        const Integer rhs_iii = Integer(n) * bell(n - 1);
        report.cases.push_back(make_case({{"part", "i"}, {"n", n}}, lhs_i, rhs_i));
        report.cases.push_back(make_case({{"part", "ii"}, {"n", n}}, lhs_ii, rhs_ii));
        report.cases.push_back(make_case({{"part", "iii"}, {"n", n}}, lhs_iii, rhs_iii));
    }
    finalize(report);
    return report;
}

IdentityReport verify_k_equals_sum_j(int max_n) {
    if (max_n < 1) throw std::domain_error("verify_k_equals_sum_j needs max_n >= 1");
    check_degree_cap(max_n, "verify_k_equals_sum_j");
    IdentityReport report;
    report.identity = "k-equals-sum-j";
    report.range = "alpha, gamma of size n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Composition> comps = compositions_of(n);
        for (const Composition& alpha : comps) {
            const auto j_row = all_J_for_shape(alpha);
            for (const Composition& gamma : comps) {
                const Integer lhs = count_K_by_enumeration(TableauKind::Lexical, alpha, gamma);
                Integer rhs = 0;
                for (const Composition& beta : coarsenings(gamma)) {
                    auto it = j_row.find(beta);
                    if (it != j_row.end()) rhs += it->second;
                }
                report.cases.push_back(make_case(
                    {{"n", n}, {"alpha", alpha.str()}, {"gamma", gamma.str()}}, lhs, rhs));
            }
        }
    }
    finalize(report);
    return report;
}

IdentityReport verify_relation_T(int max_n) {
    if (max_n < 2) throw std::domain_error("verify_relation_T needs max_n >= 2");
    check_degree_cap(max_n, "verify_relation_T");
    IdentityReport report;
    report.identity = "relation-T";
    report.range = "a, b >= 1, a + b <= " + std::to_string(max_n);
    for (int a = 1; a + 1 <= max_n; ++a) {
        for (int b = 1; a + b <= max_n; ++b) {
            for (int i = 1; i <= b; ++i) {
                for (int j = 0; j < i; ++j) {
                    const Integer lhs = count_K_by_enumeration(
                        TableauKind::Lexical, Composition{a + i, b - i}, Composition{a + j, b - j});
                    const Integer rhs = binary_necklace_T(a + i, i - j);
                    report.cases.push_back(make_case(
                        {{"a", a}, {"b", b}, {"i", i}, {"j", j}}, lhs, rhs));
                }
            }
        }
    }
    finalize(report);
    return report;
}

} // namespace lextab
