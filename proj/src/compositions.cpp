#include "lextab/compositions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "lextab/errors.hpp"

namespace lextab {

namespace {

std::vector<int> normalize_parts(const std::vector<int>& raw) {
    std::vector<int> parts;
    parts.reserve(raw.size());
    for (int p : raw) {
        if (p < 0) throw std::domain_error("composition parts must be positive");
        if (p == 0) continue;  // alpha.(0) is identified with alpha
        parts.push_back(p);
    }
    return parts;
}

} // namespace

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(const std::vector<int>& parts) : parts_(normalize_parts(parts)) {
    for (int p : parts_) n_ += p;
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Composition(parts);
}

Composition Composition::reversed() const {
    std::vector<int> parts(parts_.rbegin(), parts_.rend());
    return Composition(parts);
}

std::string Composition::str() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << '.';
        out << parts_[i];
    }
    return out.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::domain_error("partition parts must be positive");
        if (i && parts_[i - 1] < parts_[i])
            throw std::domain_error("partition parts must be weakly decreasing");
    }
}

std::string Partition::str() const { return Composition(parts_).str(); }

std::strong_ordering lex_compare(const Composition& a, const Composition& b) {
    if (a.size() != b.size())
        throw std::domain_error("lex_compare requires compositions of the same size");
    return std::lexicographical_compare_three_way(a.parts().begin(), a.parts().end(),
                                                  b.parts().begin(), b.parts().end());
}

Composition composition_at(int n, int index) {
    if (n < 0) throw std::domain_error("compositions of a negative integer");
    if (n == 0) {
        if (index != 0) throw std::domain_error("composition index out of range");
        return Composition{};
    }
    if (index < 0 || index >= (1 << (n - 1)))
        throw std::domain_error("composition index out of range");
    // Break after position p (1 <= p < n) iff bit (n-1-p) of index is set;
    // this makes the index order decreasing lexicographic.
    std::vector<int> parts;
    int run = 0;
    for (int pos = 1; pos <= n; ++pos) {
        ++run;
        if (pos < n && ((index >> (n - 1 - pos)) & 1)) {
            parts.push_back(run);
            run = 0;
        }
    }
    parts.push_back(run);
    return Composition(parts);
}

int canonical_index(const Composition& alpha) {
    const int n = alpha.size();
    if (n == 0) return 0;
    int index = 0;
    int partial = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        partial += alpha.part(i);
        index |= 1 << (n - 1 - partial);
    }
    return index;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::domain_error("compositions of a negative integer");
    check_degree_cap(n, "compositions_of");
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    out.reserve(static_cast<std::size_t>(1) << (n - 1));
    for (int idx = 0; idx < (1 << (n - 1)); ++idx) out.push_back(composition_at(n, idx));
    return out;
}

std::vector<Composition> compositions_of(int n, int k) {
    if (k <= 0) throw std::domain_error("composition length must be positive");
    std::vector<Composition> out;
    for (const Composition& c : compositions_of(n))
        if (c.length() == k) out.push_back(c);
    return out;
}

std::set<Composition> coarsenings(const Composition& beta) {
    std::set<Composition> out;
    const int l = beta.length();
    if (l == 0) {
        out.insert(beta);
        return out;
    }
    for (int mask = 0; mask < (1 << (l - 1)); ++mask) {
        std::vector<int> parts;
        int acc = beta.part(0);
        for (int i = 1; i < l; ++i) {
            if ((mask >> (i - 1)) & 1) {
                acc += beta.part(i);  // merge boundary i-1
            } else {
                parts.push_back(acc);
                acc = beta.part(i);
            }
        }
        parts.push_back(acc);
        out.insert(Composition(parts));
    }
    return out;
}

bool is_coarsening(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return false;
    int bi = 0;
    for (int i = 0; i < a.length(); ++i) {
        int acc = 0;
        while (acc < a.part(i)) {
            if (bi >= b.length()) return false;
            acc += b.part(bi++);
        }
        if (acc != a.part(i)) return false;
    }
    return bi == b.length();
}

Partition sort_to_partition(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

Composition parse_composition(std::string_view text) {
    if (text.empty() || text == "-") return Composition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find_first_of(".,", pos);
        std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
            throw std::domain_error("malformed composition: '" + std::string(text) + "'");
        parts.push_back(value);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return Composition(parts);
}

bool operator<(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // canonical: decreasing lexicographic within a fixed size
    return lex_compare(a, b) == std::strong_ordering::greater;
}

bool CanonicalLess::operator()(const Composition& a, const Composition& b) const {
    return a < b;
}

} // namespace lextab
