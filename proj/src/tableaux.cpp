#include "lextab/tableaux.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lextab {

namespace {

std::atomic<TieOrder> g_tie_order{TieOrder::ColumnThenRowAsc};

void require_same_size(int a, int b, const char* what) {
    if (a != b) throw std::domain_error(std::string(what) + ": size mismatch");
}

bool first_column_strict(const Tableau& t) {
    for (std::size_t r = 1; r < t.rows.size(); ++r)
        if (t.rows[r][0] <= t.rows[r - 1][0]) return false;
    return true;
}

// Visits every filling of the shape with the given content counts, bottom
// row first. Rows of an immaculate tableau are forced once their multiset
// is chosen; lexical rows run over the necklace arrangements. The strict
// first column prunes against the row below.
struct Walker {
    TableauKind kind;
    const Composition& shape;
    std::vector<int> remaining;  // per letter 1..L
    std::vector<Word> rows;
    const std::function<void(const std::vector<Word>&)>& emit;

    void run() { fill_row(0); }

    void fill_row(std::size_t r) {
        if (r == static_cast<std::size_t>(shape.length())) {
            emit(rows);
            return;
        }
        std::vector<int> take(remaining.size(), 0);
        choose_multiset(r, 0, shape.part(static_cast<int>(r)), take);
    }

    void choose_multiset(std::size_t r, std::size_t letter, int need, std::vector<int>& take) {
        if (need == 0) {
            place_row(r, take);
            return;
        }
        if (letter == remaining.size()) return;
        const int cap = std::min(remaining[letter], need);
        for (int c = 0; c <= cap; ++c) {
            take[letter] = c;
            remaining[letter] -= c;
            choose_multiset(r, letter + 1, need - c, take);
            remaining[letter] += c;
        }
        take[letter] = 0;
    }

    void place_row(std::size_t r, const std::vector<int>& take) {
        Word word;
        word.reserve(static_cast<std::size_t>(shape.part(static_cast<int>(r))));
        for (std::size_t v = 0; v < take.size(); ++v)
            word.insert(word.end(), static_cast<std::size_t>(take[v]), static_cast<int>(v) + 1);
        // every admissible row word opens with the multiset minimum, so the
        // strict first column prunes whole multisets
        if (r > 0 && word.front() <= rows[r - 1][0]) return;
        if (kind == TableauKind::Immaculate) {
            rows.push_back(word);
            fill_row(r + 1);
            rows.pop_back();
            return;
        }
        // lexical: all distinct arrangements that are necklace words
        Word perm = word;
        do {
            if (!is_necklace(perm)) continue;
            rows.push_back(perm);
            fill_row(r + 1);
            rows.pop_back();
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

void walk_tableaux(TableauKind kind, const Composition& shape, const Composition& content,
                   const std::function<void(const std::vector<Word>&)>& emit) {
    require_same_size(shape.size(), content.size(), "tableau enumeration");
    Walker w{kind, shape, content.parts(), {}, emit};
    w.rows.reserve(static_cast<std::size_t>(shape.length()));
    w.run();
}

MultisetSpec row_multiplicities(const Word& sorted_row) {
    MultisetSpec spec;
    for (std::size_t i = 0; i < sorted_row.size(); ++i) {
        if (i == 0 || sorted_row[i] != sorted_row[i - 1])
            spec.push_back(1);
        else
            ++spec.back();
    }
    return spec;
}

} // namespace

bool TableauLess::operator()(const Tableau& a, const Tableau& b) const {
    if (a.shape.parts() != b.shape.parts()) return a.shape < b.shape;
    // top row most significant
    for (std::size_t i = a.rows.size(); i-- > 0;) {
        if (a.rows[i] != b.rows[i]) return a.rows[i] < b.rows[i];
    }
    return false;
}

bool is_well_formed(const Tableau& t) {
    if (static_cast<int>(t.rows.size()) != t.shape.length()) return false;
    for (int r = 0; r < t.shape.length(); ++r) {
        if (static_cast<int>(t.rows[static_cast<std::size_t>(r)].size()) != t.shape.part(r))
            return false;
        for (int v : t.rows[static_cast<std::size_t>(r)])
            if (v < 1) return false;
    }
    return true;
}

bool is_immaculate(const Tableau& t) {
    if (!is_well_formed(t) || !first_column_strict(t)) return false;
    for (const Word& row : t.rows)
        if (!std::is_sorted(row.begin(), row.end())) return false;
    return true;
}

bool is_lexical(const Tableau& t) {
    if (!is_well_formed(t) || !first_column_strict(t)) return false;
    for (const Word& row : t.rows)
        if (!is_necklace(row)) return false;
    return true;
}

bool is_standard(const Tableau& t) {
    if (!is_well_formed(t)) return false;
    const std::vector<int> content = content_of(t);
    if (static_cast<int>(content.size()) != t.shape.size()) return false;
    return std::all_of(content.begin(), content.end(), [](int c) { return c == 1; });
}

std::vector<int> content_of(const Tableau& t) {
    int max_letter = 0;
    for (const Word& row : t.rows)
        for (int v : row) max_letter = std::max(max_letter, v);
    std::vector<int> counts(static_cast<std::size_t>(max_letter), 0);
    for (const Word& row : t.rows)
        for (int v : row) ++counts[static_cast<std::size_t>(v) - 1];
    return counts;
}

std::vector<Tableau> enumerate_tableaux(TableauKind kind, const Composition& shape,
                                        const Composition& content) {
    std::vector<Tableau> out;
    walk_tableaux(kind, shape, content,
                  [&](const std::vector<Word>& rows) { out.push_back(Tableau{shape, rows}); });
    std::sort(out.begin(), out.end(), TableauLess{});
    return out;
}

Integer count_K_by_enumeration(TableauKind kind, const Composition& shape,
                               const Composition& content) {
    Integer count = 0;
    walk_tableaux(kind, shape, content, [&](const std::vector<Word>&) { ++count; });
    return count;
}

Integer count_lexical_by_row_products(const Composition& shape, const Composition& content) {
    Integer total = 0;
    walk_tableaux(TableauKind::Immaculate, shape, content, [&](const std::vector<Word>& rows) {
        Integer prod = 1;
        for (const Word& row : rows) prod *= necklace_count_multiset(row_multiplicities(row));
        total += prod;
    });
    return total;
}

namespace {

std::mutex g_k_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> g_k_cache;

Integer k_lex_cached(const Composition& shape, const Composition& content) {
    const auto key = std::make_pair(shape.parts(), content.parts());
    {
        std::lock_guard<std::mutex> lock(g_k_mutex);
        auto it = g_k_cache.find(key);
        if (it != g_k_cache.end()) return it->second;
    }
    Integer value = count_lexical_by_row_products(shape, content);
    std::lock_guard<std::mutex> lock(g_k_mutex);
    return g_k_cache.emplace(key, std::move(value)).first->second;
}

} // namespace

Integer count_K(TableauKind kind, const Composition& shape, const Composition& content) {
    require_same_size(shape.size(), content.size(), "count_K");
    if (kind == TableauKind::Lexical) return k_lex_cached(shape, content);
    return count_K_by_enumeration(kind, shape, content);
}

int hook(const Composition& shape, int row, int col) {
    if (row < 1 || row > shape.length() || col < 1 || col > shape.part(row - 1))
        throw std::domain_error("hook: cell outside the diagram");
    if (col == 1) {
        int sum = 0;
        for (int i = row - 1; i < shape.length(); ++i) sum += shape.part(i);
        return sum;
    }
    return shape.part(row - 1) - col + 1;
}

Integer standard_count(TableauKind kind, const Composition& shape) {
    Integer numerator = factorial(shape.size());
    if (kind == TableauKind::Lexical)
        for (int i = 0; i < shape.length(); ++i) numerator *= factorial(shape.part(i) - 1);
    Integer hooks = 1;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.part(r - 1); ++c) hooks *= hook(shape, r, c);
    return exact_div(numerator, hooks);
}

TieOrder standardize_tie_order() { return g_tie_order.load(); }
void set_standardize_tie_order(TieOrder order) { g_tie_order.store(order); }

Tableau standardize(const Tableau& t) {
    if (!is_lexical(t)) throw std::domain_error("standardize: input is not a lexical tableau");
    struct Cell {
        int value;
        int col;
        int row;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c)
            cells.push_back({t.rows[r][c], static_cast<int>(c), static_cast<int>(r)});
    const bool row_asc = standardize_tie_order() == TieOrder::ColumnThenRowAsc;
    std::stable_sort(cells.begin(), cells.end(), [row_asc](const Cell& a, const Cell& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.col != b.col) return a.col < b.col;
        return row_asc ? a.row < b.row : a.row > b.row;
    });
    Tableau out = t;
    int label = 1;
    for (const Cell& cell : cells)
        out.rows[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col)] = label++;
    return out;
}

Tableau pack(const Tableau& t) {
    std::set<int> values;
    for (const Word& row : t.rows) values.insert(row.begin(), row.end());
    std::map<int, int> relabel;
    int next = 1;
    for (int v : values) relabel[v] = next++;
    Tableau out = t;
    for (Word& row : out.rows)
        for (int& v : row) v = relabel[v];
    return out;
}

namespace {

// The unique tableau of the given type standardizing to S, if any: letter v
// occupies the cells whose labels in S form the v-th consecutive block.
Tableau refill(const Tableau& standard, const Composition& gamma) {
    const int n = standard.shape.size();
    std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(n) + 1);  // label -> (row,col)
    for (std::size_t r = 0; r < standard.rows.size(); ++r)
        for (std::size_t c = 0; c < standard.rows[r].size(); ++c)
            pos[static_cast<std::size_t>(standard.rows[r][c])] = {static_cast<int>(r),
                                                                  static_cast<int>(c)};
    Tableau out = standard;
    int label = 1;
    for (int v = 0; v < gamma.length(); ++v)
        for (int k = 0; k < gamma.part(v); ++k, ++label) {
            auto [r, c] = pos[static_cast<std::size_t>(label)];
            out.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v + 1;
        }
    return out;
}

} // namespace

std::set<Composition> max_types(const Tableau& standard) {
    if (!is_lexical(standard) || !is_standard(standard))
        throw std::domain_error("max_types: input is not a standard lexical tableau");
    const int n = standard.shape.size();
    std::set<Composition> types;
    for (const Composition& gamma : compositions_of(n)) {
        Tableau cand = refill(standard, gamma);
        if (is_lexical(cand) && standardize(cand) == standard) types.insert(gamma);
    }
    std::set<Composition> maximal;
    for (const Composition& gamma : types) {
        bool is_max = true;
        for (const Composition& coarser : coarsenings(gamma)) {
            if (coarser == gamma) continue;
            if (types.count(coarser)) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.insert(gamma);
    }
    return maximal;
}

namespace {

std::mutex g_j_mutex;
std::map<std::pair<std::vector<int>, int>, std::map<Composition, Integer>> g_j_cache;

} // namespace

std::map<Composition, Integer> all_J_for_shape(const Composition& shape) {
    const auto key = std::make_pair(shape.parts(),
                                    static_cast<int>(standardize_tie_order()));
    {
        std::lock_guard<std::mutex> lock(g_j_mutex);
        auto it = g_j_cache.find(key);
        if (it != g_j_cache.end()) return it->second;
    }
    // fibers[delta] = number of standard lexical S of the shape to which some
    // (necessarily unique) lexical tableau of type delta standardizes
    std::map<Composition, Integer> fibers;
    const Composition ones(std::vector<int>(static_cast<std::size_t>(shape.size()), 1));
    const std::vector<Composition> contents = compositions_of(shape.size());
    walk_tableaux(TableauKind::Lexical, shape, ones, [&](const std::vector<Word>& rows) {
        const Tableau standard{shape, rows};
        for (const Composition& delta : contents) {
            Tableau cand = refill(standard, delta);
            if (is_lexical(cand) && standardize(cand) == standard) fibers[delta] += 1;
        }
    });
    // The per-tableau type sets are down-closed under refinement, so the
    // expansion coefficients are the refinement-lattice Moebius transform of
    // the fiber counts.
    std::map<Composition, Integer> j;
    for (const Composition& beta : contents) {
        Integer acc = 0;
        for (const Composition& delta : coarsenings(beta)) {
            auto it = fibers.find(delta);
            if (it == fibers.end()) continue;
            acc += ((beta.length() - delta.length()) & 1) ? -it->second : it->second;
        }
        if (acc != 0) j[beta] = acc;
    }
    std::lock_guard<std::mutex> lock(g_j_mutex);
    return g_j_cache.emplace(key, std::move(j)).first->second;
}

Integer count_J(const Composition& shape, const Composition& beta) {
    require_same_size(shape.size(), beta.size(), "count_J");
    const auto j = all_J_for_shape(shape);
    auto it = j.find(beta);
    return it == j.end() ? Integer(0) : it->second;
}

std::string SetPartition::str() const {
    std::ostringstream out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out << '/';
        out << '{';
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) out << ',';
            out << blocks[b][i];
        }
        out << '}';
    }
    return out.str();
}

SetPartition to_set_partition(const Tableau& t) {
    if (!is_immaculate(t) || !is_standard(t))
        throw std::domain_error("to_set_partition: input is not a standard immaculate tableau");
    SetPartition pi;
    pi.blocks = t.rows;  // rows are sorted and their minima increase up the column
    return pi;
}

namespace {

void require_covers(const std::vector<std::vector<int>>& groups, const char* what) {
    int n = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw std::domain_error(std::string(what) + ": empty block");
        n += static_cast<int>(g.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& g : groups)
        for (int v : g) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::domain_error(std::string(what) + ": not a partition of {1..n}");
            seen[static_cast<std::size_t>(v)] = true;
        }
}

} // namespace

Tableau from_set_partition(const SetPartition& pi) {
    require_covers(pi.blocks, "from_set_partition");
    std::vector<std::vector<int>> blocks = pi.blocks;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    return Tableau{Composition(sizes), blocks};
}

std::string CycleDecomposition::str() const {
    std::ostringstream out;
    for (const auto& cycle : cycles) {
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out << ' ';
            out << cycle[i];
        }
        out << ')';
    }
    return out.str();
}

CycleDecomposition to_permutation(const Tableau& t) {
    if (!is_lexical(t) || !is_standard(t))
        throw std::domain_error("to_permutation: input is not a standard lexical tableau");
    CycleDecomposition sigma;
    sigma.cycles = t.rows;  // necklace rows with distinct letters start at their minima
    return sigma;
}

Tableau from_permutation(const CycleDecomposition& sigma) {
    require_covers(sigma.cycles, "from_permutation");
    std::vector<std::vector<int>> cycles = sigma.cycles;
    for (auto& cycle : cycles) {
        auto min_it = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), min_it, cycle.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<int> sizes;
    sizes.reserve(cycles.size());
    for (const auto& c : cycles) sizes.push_back(static_cast<int>(c.size()));
    return Tableau{Composition(sizes), cycles};
}

Integer row_class_count(const Composition& shape) {
    std::set<std::vector<Word>> signatures;
    const Composition ones(std::vector<int>(static_cast<std::size_t>(shape.size()), 1));
    walk_tableaux(TableauKind::Lexical, shape, ones, [&](const std::vector<Word>& rows) {
        std::vector<Word> sig = rows;
        for (Word& row : sig) std::sort(row.begin(), row.end());
        signatures.insert(std::move(sig));
    });
    return Integer(static_cast<unsigned long>(signatures.size()));
}

} // namespace lextab
