#pragma once

#include <map>
#include <set>
#include <vector>

#include "lextab/compositions.hpp"
#include "lextab/numbers.hpp"
#include "lextab/words.hpp"

namespace lextab {

enum class TableauKind { Immaculate, Lexical };

/// A composition-shaped filling. rows[0] is row 1, the bottom row in the
/// French convention; rows[i] has shape.part(i) entries, all >= 1.
struct Tableau {
    Composition shape;
    std::vector<Word> rows;

    bool operator==(const Tableau&) const = default;
};

/// Order used for deterministic enumeration output and map keys:
/// shapes first, then row words compared lexicographically with the top
/// row most significant.
struct TableauLess {
    bool operator()(const Tableau& a, const Tableau& b) const;
};

bool is_well_formed(const Tableau& t);

/// Strictly increasing first column and weakly increasing rows.
bool is_immaculate(const Tableau& t);
/// Strictly increasing first column and every row word a necklace.
bool is_lexical(const Tableau& t);
/// Content (1,...,1): every label 1..n used exactly once.
bool is_standard(const Tableau& t);

/// Multiplicity counts (beta_i = number of entries equal to i), trailing
/// zeros trimmed. Inner zeros appear when the entry set has gaps.
std::vector<int> content_of(const Tableau& t);

/// All fillings of the shape with the given (strong) content satisfying the
/// kind's constraints, in TableauLess order. Throws std::domain_error when
/// |shape| != |content|.
std::vector<Tableau> enumerate_tableaux(TableauKind kind, const Composition& shape,
                                        const Composition& content);

/// Number of tableaux of the given kind, shape and content. For the lexical
/// kind this is evaluated through the per-row necklace-count product over
/// immaculate tableaux; count_K_by_enumeration walks the fillings instead,
/// and the two must agree.
Integer count_K(TableauKind kind, const Composition& shape, const Composition& content);
Integer count_K_by_enumeration(TableauKind kind, const Composition& shape,
                               const Composition& content);
Integer count_lexical_by_row_products(const Composition& shape, const Composition& content);

/// Hook length of the 1-based cell (row, col): the full column-1 hook
/// sums row lengths from the cell's row upward, other cells count the
/// cells weakly to their right.
int hook(const Composition& shape, int row, int col);

/// Standard tableau counts by the hook formulas:
/// immaculate n!/prod hooks, lexical n! * prod (alpha_i - 1)! / prod hooks.
Integer standard_count(TableauKind kind, const Composition& shape);

/// Reading order among equal entries during standardization: column index
/// ascending, then row index ascending (bottom row first) by default; the
/// row-descending alternative is available for experimentation.
enum class TieOrder { ColumnThenRowAsc, ColumnThenRowDesc };
TieOrder standardize_tie_order();
void set_standardize_tie_order(TieOrder order);

/// Relabel a lexical tableau by 1..n in value order, ties broken by the
/// configured reading order. Throws std::domain_error on non-lexical input.
Tableau standardize(const Tableau& t);

/// Relabel entries by the order-preserving bijection onto {1..m};
/// idempotent.
Tableau pack(const Tableau& t);

/// Max_refinement(S): the refinement-maximal contents gamma for which some
/// lexical tableau of S's shape and type gamma standardizes to S.
/// Throws std::domain_error unless S is a standard lexical tableau.
std::set<Composition> max_types(const Tableau& standard);

/// The standard-tableau coefficient J_{shape,beta} in the ribbon-to-lexical
/// and dual-lexical-to-fundamental expansions. Each standard lexical S
/// admits a down-closed set of standardizable types; J is the refinement
/// Moebius transform of the per-type fiber counts, so that
/// count_K(lexical, shape, gamma) = sum of J over the coarsenings of gamma.
/// Throws std::domain_error when |shape| != |beta|.
Integer count_J(const Composition& shape, const Composition& beta);

/// J_{shape,beta} for every beta at once (memoized per shape).
std::map<Composition, Integer> all_J_for_shape(const Composition& shape);

/// Disjoint nonempty blocks covering {1..n}; blocks sorted internally and
/// ordered by their minima in normalized form.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    bool operator==(const SetPartition&) const = default;
    std::string str() const;  // "{1,4}/{2,3}"
};

/// Row i of a standard immaculate tableau becomes the block of its entries;
/// mutually inverse with from_set_partition.
SetPartition to_set_partition(const Tableau& t);
Tableau from_set_partition(const SetPartition& pi);

/// Disjoint cycles covering {1..n}; normalized form writes each cycle from
/// its minimum and orders cycles by minima.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;

    bool operator==(const CycleDecomposition&) const = default;
    std::string str() const;  // "(1 4 3)(2)"
};

/// Row i of a standard lexical tableau becomes the i-th cycle, in row order;
/// mutually inverse with from_permutation on normalized decompositions.
CycleDecomposition to_permutation(const Tableau& t);
Tableau from_permutation(const CycleDecomposition& sigma);

/// Number of row-equivalence classes of standard lexical tableaux of the
/// shape; equals standard_count(Immaculate, shape).
Integer row_class_count(const Composition& shape);

} // namespace lextab
