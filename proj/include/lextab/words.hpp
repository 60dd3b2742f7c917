#pragma once

#include <vector>

#include "lextab/numbers.hpp"

namespace lextab {

/// A word over the positive integers.
using Word = std::vector<int>;

/// w^(1), ..., w^(l): the i-th entry moves the first i letters to the end,
/// so the last entry equals w. Throws std::domain_error on the empty word.
std::vector<Word> cyclic_shifts(const Word& w);

/// Lexicographically smallest cyclic shift, found in linear time.
Word least_rotation(const Word& w);

/// True iff w is weakly minimal among its cyclic shifts (w == least_rotation(w));
/// periodic words such as 1,2,1,2 qualify.
bool is_necklace(const Word& w);

/// Multiplicities of a multiset, one per distinct letter in increasing
/// letter order; every multiplicity >= 1.
using MultisetSpec = std::vector<int>;

/// Number of necklace arrangements of the multiset:
/// (1/|B|) * sum over d | gcd(n_1..n_k) of multinomial(|B|/d; n_i/d) * phi(d).
Integer necklace_count_multiset(const MultisetSpec& spec);

/// Binary necklaces with k black and n-k white beads:
/// (1/n) * sum over d | gcd(n,k) of phi(d) * C(n/d, k/d), with gcd(n,0) = n.
Integer binary_necklace_T(int n, int k);

} // namespace lextab
