#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lextab/numbers.hpp"

namespace lextab {

Integer stirling2(int n, int k);
Integer stirling1_unsigned(int n, int k);
Integer bell(int n);

struct IdentityCase {
    nlohmann::json params;
    Integer lhs;
    Integer rhs;
    bool ok = false;
};

/// Outcome of one batch verification; passes only on exact equality of
/// every left/right pair, which always come from independent code paths.
struct IdentityReport {
    std::string identity;
    std::string range;
    std::vector<IdentityCase> cases;
    bool pass = false;

    nlohmann::json to_json() const;
    std::string summary() const;  // one human-readable line
};

/// Tableau counts against Stirling numbers:
/// sum of immaculate standard counts over length-k shapes = {n k}, and of
/// lexical standard counts = [n k], for 1 <= k <= n <= max_n. Counts come
/// from the hook formulas, cross-checked by brute enumeration for n <= 8.
IdentityReport verify_stirling_sums(int max_n);

/// The three Bell-number summations over g^alpha, for 2 <= n <= max_n
/// (max_n <= 9).
IdentityReport verify_conclusion_sums(int max_n);

/// K_{alpha,gamma} = sum over beta coarsening gamma of J_{alpha,beta},
/// for all alpha, gamma of size n <= max_n; K by enumeration, J via
/// standardization grouping.
IdentityReport verify_k_equals_sum_j(int max_n);

/// K_{(a+i,b-i),(a+j,b-j)} = T(a+i, i-j) for 0 <= j < i <= b, a,b >= 1,
/// a+b <= max_n; K by enumeration, T by the totient formula.
IdentityReport verify_relation_T(int max_n);

} // namespace lextab
