#include "lextab/hopf.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "lextab/errors.hpp"
#include "lextab/tableaux.hpp"
#include "lextab/words.hpp"

namespace lextab {

bool in_qsym(Basis b) { return b == Basis::M || b == Basis::F || b == Basis::LexDual; }
bool in_nsym(Basis b) { return !in_qsym(b); }

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::H: return "H";
        case Basis::E: return "E";
        case Basis::R: return "R";
        case Basis::Lex: return "Lex";
        case Basis::LexDual: return "Lstar";
    }
    throw std::logic_error("unknown basis tag");
}

Basis parse_basis(std::string_view name) {
    if (name == "M") return Basis::M;
    if (name == "F") return Basis::F;
    if (name == "H") return Basis::H;
    if (name == "E") return Basis::E;
    if (name == "R") return Basis::R;
    if (name == "Lex" || name == "L") return Basis::Lex;
    if (name == "Lstar" || name == "L*") return Basis::LexDual;
    throw std::domain_error("unknown basis '" + std::string(name) + "'");
}

FormalSeries::FormalSeries(Basis basis, const Composition& alpha, const Rational& c)
    : basis_(basis) {
    set_coeff(alpha, c);
}

FormalSeries FormalSeries::unit(Basis basis) { return FormalSeries(basis, Composition{}, 1); }

Rational FormalSeries::coeff(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

// mpq arithmetic requires canonical operands; coefficients built directly
// from a numerator/denominator pair may not be
Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

} // namespace

void FormalSeries::set_coeff(const Composition& alpha, const Rational& c) {
    const Rational q = canonical(c);
    if (q == 0)
        terms_.erase(alpha);
    else
        terms_[alpha] = q;
}

void FormalSeries::add_coeff(const Composition& alpha, const Rational& c) {
    const Rational q = canonical(c);
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (q != 0) terms_.emplace(alpha, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
    if (o.basis_ != basis_) throw std::domain_error("series sum across different bases");
    for (const auto& [alpha, c] : o.terms_) add_coeff(alpha, c);
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
    if (o.basis_ != basis_) throw std::domain_error("series difference across different bases");
    for (const auto& [alpha, c] : o.terms_) add_coeff(alpha, -c);
    return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& c) {
    const Rational q = canonical(c);
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, v] : terms_) v *= q;
    return *this;
}

namespace {

Integer sign_pow(int exponent) { return (exponent & 1) ? Integer(-1) : Integer(1); }

// Entry of the expansion X_a = sum_b entry(a, b) Y_b for each direct kind.
Integer entry_lexdual_to_m(const Composition& a, const Composition& b) {
    return count_K(TableauKind::Lexical, a, b);
}
Integer entry_h_to_lex(const Composition& a, const Composition& b) {
    return count_K(TableauKind::Lexical, b, a);
}
Integer entry_lexdual_to_f(const Composition& a, const Composition& b) {
    return count_J(a, b);
}
Integer entry_r_to_lex(const Composition& a, const Composition& b) {
    return count_J(b, a);
}
Integer entry_f_to_m(const Composition& a, const Composition& b) {
    return is_coarsening(a, b) ? Integer(1) : Integer(0);
}
Integer entry_r_to_h(const Composition& a, const Composition& b) {
    return is_coarsening(b, a) ? sign_pow(a.length() - b.length()) : Integer(0);
}
Integer entry_h_to_r(const Composition& a, const Composition& b) {
    return is_coarsening(b, a) ? Integer(1) : Integer(0);
}
Integer entry_e_to_h(const Composition& a, const Composition& b) {
    return is_coarsening(a, b) ? sign_pow(a.size() - b.length()) : Integer(0);
}

using EntryFn = Integer (*)(const Composition&, const Composition&);

struct DirectKind {
    EntryFn entry;
    // true when nonzero entries satisfy index(source) <= index(target) in
    // canonical order (lower-triangular transposed system), false for the
    // opposite orientation
    bool source_le;
};

DirectKind direct_kind(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::LexDual_to_M: return {entry_lexdual_to_m, true};
        case MatrixKind::LexDual_to_F: return {entry_lexdual_to_f, true};
        case MatrixKind::H_to_Lex: return {entry_h_to_lex, false};
        case MatrixKind::R_to_Lex: return {entry_r_to_lex, false};
        case MatrixKind::F_to_M: return {entry_f_to_m, true};
        case MatrixKind::R_to_H: return {entry_r_to_h, false};
        case MatrixKind::H_to_R: return {entry_h_to_r, false};
        case MatrixKind::E_to_H: return {entry_e_to_h, true};
        default: throw std::logic_error("not a direct matrix kind");
    }
}

bool is_inverse_kind(MatrixKind kind) {
    return kind == MatrixKind::M_to_LexDual || kind == MatrixKind::F_to_LexDual ||
           kind == MatrixKind::Lex_to_H || kind == MatrixKind::M_to_F ||
           kind == MatrixKind::H_to_E;
}

MatrixKind direct_of_inverse(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::M_to_LexDual: return MatrixKind::LexDual_to_M;
        case MatrixKind::F_to_LexDual: return MatrixKind::LexDual_to_F;
        case MatrixKind::Lex_to_H: return MatrixKind::H_to_Lex;
        case MatrixKind::M_to_F: return MatrixKind::F_to_M;
        case MatrixKind::H_to_E: return MatrixKind::E_to_H;
        default: throw std::logic_error("not an inverse matrix kind");
    }
}

// Sparse coefficient vector over canonical indices of one degree.
using SparseVec = std::map<int, Rational>;

SparseVec series_degree_slice(const FormalSeries& s, int n) {
    SparseVec v;
    for (const auto& [alpha, c] : s.terms())
        if (alpha.size() == n) v[canonical_index(alpha)] = c;
    return v;
}

// d_target = sum_source entry(source, target) * c_source
SparseVec apply_expansion(const DirectKind& kind, int n, const SparseVec& c) {
    SparseVec d;
    if (c.empty()) return d;
    const std::vector<Composition> comps = compositions_of(n);
    std::vector<std::pair<Composition, Rational>> sources;
    sources.reserve(c.size());
    for (const auto& [idx, coeff] : c) sources.emplace_back(comps[static_cast<std::size_t>(idx)], coeff);
    for (int t = 0; t < static_cast<int>(comps.size()); ++t) {
        Rational acc = 0;
        for (const auto& [source, coeff] : sources) {
            const Integer e = kind.entry(source, comps[static_cast<std::size_t>(t)]);
            if (e != 0) acc += Rational(e) * coeff;
        }
        if (acc != 0) d[t] = acc;
    }
    return d;
}

// Solve for c in d_t = sum_s entry(s, t) c_s by triangular substitution;
// diagonal entries are +-1 for every kind used here. The sparse pass keeps
// this linear in the support, so high-degree conversions stay cheap.
SparseVec solve_expansion(const DirectKind& kind, int n, const SparseVec& d) {
    SparseVec c;
    if (d.empty()) return c;
    const std::vector<Composition> comps = compositions_of(n);
    const int m = static_cast<int>(comps.size());
    auto step = [&](int t) {
        const Composition& target = comps[static_cast<std::size_t>(t)];
        Rational acc = 0;
        auto it = d.find(t);
        if (it != d.end()) acc = it->second;
        for (const auto& [s, coeff] : c) {
            if (s == t) continue;
            const Integer e = kind.entry(comps[static_cast<std::size_t>(s)], target);
            if (e != 0) acc -= Rational(e) * coeff;
        }
        if (acc != 0) {
            const Integer diag = kind.entry(target, target);
            c[t] = acc / Rational(diag);
        }
    };
    if (kind.source_le) {
        for (int t = 0; t < m; ++t) step(t);
    } else {
        for (int t = m - 1; t >= 0; --t) step(t);
    }
    return c;
}

void merge_slice(FormalSeries& out, int n, const SparseVec& v) {
    for (const auto& [idx, coeff] : v) out.add_coeff(composition_at(n, idx), coeff);
}

std::vector<int> degrees_of(const FormalSeries& s) {
    std::vector<int> degrees;
    for (const auto& [alpha, c] : s.terms())
        if (degrees.empty() || degrees.back() != alpha.size()) degrees.push_back(alpha.size());
    return degrees;
}

FormalSeries apply_kind(const FormalSeries& s, MatrixKind kind, Basis target_basis) {
    FormalSeries out(target_basis);
    const DirectKind dk = direct_kind(kind);
    for (int n : degrees_of(s)) merge_slice(out, n, apply_expansion(dk, n, series_degree_slice(s, n)));
    return out;
}

FormalSeries solve_kind(const FormalSeries& s, MatrixKind kind, Basis target_basis) {
    FormalSeries out(target_basis);
    const DirectKind dk = direct_kind(kind);
    for (int n : degrees_of(s)) merge_slice(out, n, solve_expansion(dk, n, series_degree_slice(s, n)));
    return out;
}

// Pivot bases: H for NSym, M for QSym.
FormalSeries to_pivot(const FormalSeries& s) {
    switch (s.basis()) {
        case Basis::H:
        case Basis::M: return s;
        case Basis::E: return apply_kind(s, MatrixKind::E_to_H, Basis::H);
        case Basis::R: return apply_kind(s, MatrixKind::R_to_H, Basis::H);
        case Basis::Lex: return solve_kind(s, MatrixKind::H_to_Lex, Basis::H);
        case Basis::F: return apply_kind(s, MatrixKind::F_to_M, Basis::M);
        case Basis::LexDual: return apply_kind(s, MatrixKind::LexDual_to_M, Basis::M);
    }
    throw std::logic_error("unknown basis tag");
}

FormalSeries from_pivot(const FormalSeries& pivot, Basis target) {
    switch (target) {
        case Basis::H:
        case Basis::M: return pivot;
        case Basis::E: return solve_kind(pivot, MatrixKind::E_to_H, Basis::E);
        case Basis::R: return apply_kind(pivot, MatrixKind::H_to_R, Basis::R);
        case Basis::Lex: return apply_kind(pivot, MatrixKind::H_to_Lex, Basis::Lex);
        case Basis::F: return solve_kind(pivot, MatrixKind::F_to_M, Basis::F);
        case Basis::LexDual: return solve_kind(pivot, MatrixKind::LexDual_to_M, Basis::LexDual);
    }
    throw std::logic_error("unknown basis tag");
}

} // namespace

FormalSeries convert(const FormalSeries& s, Basis target) {
    if (in_qsym(s.basis()) != in_qsym(target))
        throw std::domain_error("cross-algebra conversion between QSym and NSym");
    if (s.basis() == target) return s;
    return from_pivot(to_pivot(s), target);
}

std::string matrix_kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::LexDual_to_M: return "LexDual_to_M";
        case MatrixKind::M_to_LexDual: return "M_to_LexDual";
        case MatrixKind::LexDual_to_F: return "LexDual_to_F";
        case MatrixKind::F_to_LexDual: return "F_to_LexDual";
        case MatrixKind::H_to_Lex: return "H_to_Lex";
        case MatrixKind::Lex_to_H: return "Lex_to_H";
        case MatrixKind::R_to_Lex: return "R_to_Lex";
        case MatrixKind::F_to_M: return "F_to_M";
        case MatrixKind::M_to_F: return "M_to_F";
        case MatrixKind::R_to_H: return "R_to_H";
        case MatrixKind::H_to_R: return "H_to_R";
        case MatrixKind::E_to_H: return "E_to_H";
        case MatrixKind::H_to_E: return "H_to_E";
    }
    throw std::logic_error("unknown matrix kind");
}

MatrixKind parse_matrix_kind(std::string_view name) {
    for (MatrixKind kind :
         {MatrixKind::LexDual_to_M, MatrixKind::M_to_LexDual, MatrixKind::LexDual_to_F,
          MatrixKind::F_to_LexDual, MatrixKind::H_to_Lex, MatrixKind::Lex_to_H,
          MatrixKind::R_to_Lex, MatrixKind::F_to_M, MatrixKind::M_to_F, MatrixKind::R_to_H,
          MatrixKind::H_to_R, MatrixKind::E_to_H, MatrixKind::H_to_E}) {
        if (matrix_kind_name(kind) == name) return kind;
    }
    throw std::domain_error("unknown matrix kind '" + std::string(name) + "'");
}

namespace {

std::mutex g_matrix_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const TransitionMatrix>> g_matrix_cache;

void run_parallel(int count, const std::function<void(int)>& task) {
    const int workers = std::min(parallelism(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
        });
    for (std::thread& t : pool) t.join();
}

std::shared_ptr<const TransitionMatrix> build_matrix(MatrixKind kind, int n) {
    auto m = std::make_shared<TransitionMatrix>();
    m->kind = kind;
    m->n = n;
    m->index = compositions_of(n);
    const int side = static_cast<int>(m->index.size());
    m->entries.assign(static_cast<std::size_t>(side),
                      std::vector<Integer>(static_cast<std::size_t>(side), Integer(0)));
    if (!is_inverse_kind(kind)) {
        const DirectKind dk = direct_kind(kind);
        run_parallel(side, [&](int i) {
            for (int j = 0; j < side; ++j)
                m->entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    dk.entry(m->index[static_cast<std::size_t>(i)],
                             m->index[static_cast<std::size_t>(j)]);
        });
        return m;
    }
    // inverse kinds: solve the direct system against each unit vector
    const DirectKind dk = direct_kind(direct_of_inverse(kind));
    run_parallel(side, [&](int i) {
        SparseVec unit;
        unit[i] = 1;
        // row i of the inverse: coefficients of the direct sources expressing
        // the i-th target element
        SparseVec row = solve_expansion(dk, n, unit);
        for (const auto& [j, coeff] : row) {
            if (!is_integral(coeff))
                throw std::logic_error("integer matrix inverse produced a non-integer");
            m->entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Integer(coeff.get_num());
        }
    });
    return m;
}

} // namespace

std::shared_ptr<const TransitionMatrix> transition_matrix(MatrixKind kind, int n) {
    if (n < 0) throw std::domain_error("transition matrix of negative degree");
    check_degree_cap(n, "transition_matrix");
    const auto key = std::make_pair(static_cast<int>(kind), n);
    {
        std::lock_guard<std::mutex> lock(g_matrix_mutex);
        auto it = g_matrix_cache.find(key);
        if (it != g_matrix_cache.end()) return it->second;
    }
    auto built = build_matrix(kind, n);
    std::lock_guard<std::mutex> lock(g_matrix_mutex);
    return g_matrix_cache.emplace(key, std::move(built)).first->second;
}

FormalSeries multiply_nsym(const FormalSeries& s, const FormalSeries& t) {
    if (!in_nsym(s.basis()) || !in_nsym(t.basis()))
        throw std::domain_error("multiply_nsym needs two NSym operands");
    const FormalSeries hs = convert(s, Basis::H);
    const FormalSeries ht = convert(t, Basis::H);
    FormalSeries product(Basis::H);
    for (const auto& [alpha, c] : hs.terms())
        for (const auto& [beta, e] : ht.terms()) product.add_coeff(alpha.concat(beta), c * e);
    return convert(product, s.basis());
}

Rational pairing(const FormalSeries& f, const FormalSeries& g) {
    if (!in_nsym(f.basis())) throw std::domain_error("pairing: left operand must be in NSym");
    if (!in_qsym(g.basis())) throw std::domain_error("pairing: right operand must be in QSym");
    const FormalSeries fh = convert(f, Basis::H);
    const FormalSeries gm = convert(g, Basis::M);
    Rational acc = 0;
    for (const auto& [alpha, c] : fh.terms()) {
        const Rational d = gm.coeff(alpha);
        if (d != 0) acc += c * d;
    }
    return acc;
}

FormalSeries antipode_nsym(const FormalSeries& s) {
    if (!in_nsym(s.basis())) throw std::domain_error("antipode_nsym needs an NSym operand");
    const FormalSeries h = convert(s, Basis::H);
    FormalSeries out(Basis::E);
    for (const auto& [alpha, c] : h.terms())
        out.add_coeff(alpha.reversed(), c * Rational(sign_pow(alpha.size())));
    return out;
}

FormalSeries lexical_two_row_in_H(int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("lexical_two_row_in_H needs a, b >= 1");
    check_degree_cap(a + b, "lexical_two_row_in_H");
    const Composition content{a, b};
    std::vector<Integer> c(static_cast<std::size_t>(b) + 1);  // c[0] unused
    for (int i = 1; i <= b; ++i) {
        Integer acc = count_K(TableauKind::Lexical, Composition{a + i, b - i}, content);
        for (int j = 1; j < i; ++j)
            acc += c[static_cast<std::size_t>(j)] *
                   count_K(TableauKind::Lexical, Composition{a + i, b - i}, Composition{a + j, b - j});
        c[static_cast<std::size_t>(i)] = -acc;
    }
    FormalSeries out(Basis::H, Composition{a, b});
    for (int i = 1; i <= b; ++i)
        out.add_coeff(Composition{a + i, b - i}, Rational(c[static_cast<std::size_t>(i)]));
    return out;
}

FormalSeries antipode_lexical_two_row(int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("antipode_lexical_two_row needs a, b >= 1");
    std::vector<Integer> coef(static_cast<std::size_t>(b) + 1);
    for (int i = 1; i <= b; ++i) {
        Integer acc = binary_necklace_T(a + i, i);
        for (int j = 1; j < i; ++j)
            acc += coef[static_cast<std::size_t>(j)] * binary_necklace_T(a + i, i - j);
        coef[static_cast<std::size_t>(i)] = -acc;
    }
    const Rational sign(sign_pow(a + b));
    FormalSeries out(Basis::E, Composition{b, a}, sign);
    for (int i = 1; i <= b; ++i)
        out.add_coeff(Composition{b - i, a + i}, sign * Rational(coef[static_cast<std::size_t>(i)]));
    return out;
}

} // namespace lextab
