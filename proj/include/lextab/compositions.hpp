#pragma once

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lextab {

/// An integer composition: an ordered tuple of positive parts. Zero parts
/// are dropped at construction, identifying alpha.(0) with alpha; the empty
/// composition (n = 0) is the unit. Immutable after construction.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(const std::vector<int>& parts);

    int size() const { return n_; }  // |alpha|
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }  // 0-based
    bool empty() const { return parts_.empty(); }

    Composition concat(const Composition& other) const;
    Composition reversed() const;

    /// Dot-joined parts ("2.1.1"); the empty composition prints as "-".
    std::string str() const;

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Weakly decreasing composition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates weak decrease

    const std::vector<int>& parts() const { return parts_; }
    std::string str() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Lexicographic comparison of two compositions of the same size
/// (first differing part decides). Throws std::domain_error on |a| != |b|.
std::strong_ordering lex_compare(const Composition& a, const Composition& b);

/// All compositions of n in canonical order: decreasing lexicographic,
/// (n) first, (1,...,1) last. compositions_of(0) = { () }.
/// Throws size_limit_error beyond the degree cap.
std::vector<Composition> compositions_of(int n);
/// Same list filtered to length k, order preserved.
std::vector<Composition> compositions_of(int n, int k);

/// Position of alpha within compositions_of(|alpha|); O(length).
int canonical_index(const Composition& alpha);
/// Inverse of canonical_index for compositions of n.
Composition composition_at(int n, int index);

/// All alpha obtained by adding together consecutive parts of beta
/// (including beta itself); 2^(length-1) elements.
std::set<Composition> coarsenings(const Composition& beta);

/// Refinement order: true iff a can be obtained by merging consecutive
/// parts of b (a is coarser, a >= b in the refinement order).
bool is_coarsening(const Composition& a, const Composition& b);

Partition sort_to_partition(const Composition& alpha);

/// Parse dot- or comma-separated parts; "-" or "" is the empty composition.
Composition parse_composition(std::string_view text);

/// Strict weak order used by every sparse map and serialized output:
/// by size, then canonical (decreasing lexicographic) within a size.
struct CanonicalLess {
    bool operator()(const Composition& a, const Composition& b) const;
};

// std::set<Composition> needs an order; use the canonical one by default.
bool operator<(const Composition& a, const Composition& b);

} // namespace lextab
