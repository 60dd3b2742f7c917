#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lextab/compositions.hpp"
#include "lextab/numbers.hpp"

namespace lextab {

/// Bases of the dual pair: M, F, Lstar live in QSym; H, E, R, Lex in NSym.
enum class Basis { M, F, H, E, R, Lex, LexDual };

bool in_qsym(Basis b);
bool in_nsym(Basis b);
std::string basis_name(Basis b);  // "M","F","H","E","R","Lex","Lstar"
Basis parse_basis(std::string_view name);

/// An element of QSym or NSym: a basis tag plus a sparse map from
/// compositions to exact rational coefficients. Mixed degrees are allowed;
/// conversions act degree by degree. Zero coefficients are never stored.
class FormalSeries {
public:
    explicit FormalSeries(Basis basis) : basis_(basis) {}
    /// Single term c * B_alpha.
    FormalSeries(Basis basis, const Composition& alpha, const Rational& c = 1);
    /// The multiplicative unit: the empty-composition term.
    static FormalSeries unit(Basis basis);

    Basis basis() const { return basis_; }
    const std::map<Composition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Composition& alpha) const;
    void set_coeff(const Composition& alpha, const Rational& c);
    void add_coeff(const Composition& alpha, const Rational& c);

    FormalSeries& operator+=(const FormalSeries& o);  // same basis required
    FormalSeries& operator-=(const FormalSeries& o);
    FormalSeries& operator*=(const Rational& c);

    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
    friend FormalSeries operator*(const Rational& c, FormalSeries s) { return s *= c; }

    bool operator==(const FormalSeries&) const = default;

private:
    Basis basis_;
    std::map<Composition, Rational> terms_;
};

enum class MatrixKind {
    LexDual_to_M,
    M_to_LexDual,
    LexDual_to_F,
    F_to_LexDual,
    H_to_Lex,
    Lex_to_H,
    R_to_Lex,
    F_to_M,
    M_to_F,
    R_to_H,
    H_to_R,
    E_to_H,
    H_to_E,
};

std::string matrix_kind_name(MatrixKind kind);
MatrixKind parse_matrix_kind(std::string_view name);

/// Square integer matrix of side 2^(n-1) indexed by compositions_of(n) in
/// canonical order. entries[i][j] is the coefficient of the j-th target
/// basis element in the expansion of the i-th source element.
struct TransitionMatrix {
    MatrixKind kind;
    int n = 0;
    std::vector<Composition> index;
    std::vector<std::vector<Integer>> entries;
};

/// Memoized per (kind, n); recomputation is bit-identical.
/// Throws size_limit_error beyond the degree cap.
std::shared_ptr<const TransitionMatrix> transition_matrix(MatrixKind kind, int n);

/// Re-express s in the target basis of the same algebra; exact, invertible.
/// Throws std::domain_error on a cross-algebra request.
FormalSeries convert(const FormalSeries& s, Basis target);

/// Bilinear extension of H_alpha * H_beta = H_{alpha.beta}; the result is
/// returned in the basis of the left operand. Throws std::domain_error on
/// a QSym operand.
FormalSeries multiply_nsym(const FormalSeries& s, const FormalSeries& t);

/// Bilinear extension of <H_alpha, M_beta> = delta_{alpha,beta}.
/// Throws std::domain_error unless f is in NSym and g in QSym.
Rational pairing(const FormalSeries& f, const FormalSeries& g);

/// Antipode on NSym: S(H_alpha) = (-1)^{|alpha|} E_{reverse(alpha)},
/// extended linearly; result in the E basis.
FormalSeries antipode_nsym(const FormalSeries& s);

/// Two-row lexical function in the H basis:
/// L_{(a,b)} = H_{(a,b)} + sum_i c_i H_{(a+i,b-i)} with
/// c_1 = -K_{(a+1,b-1),(a,b)} and
/// c_i = -(K_{(a+i,b-i),(a,b)} + sum_{j<i} c_j K_{(a+i,b-i),(a+j,b-j)}).
FormalSeries lexical_two_row_in_H(int a, int b);

/// Cancellation-free two-row antipode in the E basis:
/// S(L_{(a,b)}) = (-1)^{a+b} (E_{(b,a)} + sum_i C_i E_{(b-i,a+i)}) with
/// C_1 = -1 and C_i = -(T(a+i,i) + sum_{j<i} C_j T(a+i,i-j)).
FormalSeries antipode_lexical_two_row(int a, int b);

} // namespace lextab
