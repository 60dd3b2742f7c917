#include "lextab/words.hpp"

#include <numeric>
#include <stdexcept>

namespace lextab {

namespace {

void require_nonempty(const Word& w) {
    if (w.empty()) throw std::domain_error("word operations need a nonempty word");
}

// Booth's least-rotation algorithm; returns the start index of the
// lexicographically smallest rotation.
std::size_t least_rotation_start(const Word& s) {
    const std::size_t n = s.size();
    auto at = [&](std::size_t i) { return s[i % n]; };
    std::vector<std::ptrdiff_t> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const int sj = at(j);
        std::ptrdiff_t i = fail[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
            i = fail[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != at(k)) {
            if (sj < at(k)) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

} // namespace

std::vector<Word> cyclic_shifts(const Word& w) {
    require_nonempty(w);
    const std::size_t n = w.size();
    std::vector<Word> shifts;
    shifts.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Word v;
        v.reserve(n);
        v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i % n), w.end());
        v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i % n));
        shifts.push_back(std::move(v));
    }
    return shifts;
}

Word least_rotation(const Word& w) {
    require_nonempty(w);
    const std::size_t k = least_rotation_start(w);
    Word v;
    v.reserve(w.size());
    v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return v;
}

bool is_necklace(const Word& w) {
    require_nonempty(w);
    return w == least_rotation(w);
}

Integer necklace_count_multiset(const MultisetSpec& spec) {
    int total = 0;
    for (int m : spec) {
        if (m < 1) throw std::domain_error("multiset multiplicities must be >= 1");
        total += m;
    }
    if (total == 0) throw std::domain_error("necklace count of an empty multiset");
    std::uint64_t g = 0;
    for (int m : spec) g = std::gcd(g, static_cast<std::uint64_t>(m));
    Integer acc = 0;
    for (std::uint64_t d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        std::vector<int> reduced;
        reduced.reserve(spec.size());
        for (int m : spec) reduced.push_back(m / static_cast<int>(d));
        acc += multinomial(reduced) * Integer(static_cast<unsigned long>(totient(d)));
    }
    return exact_div(acc, total);
}

Integer binary_necklace_T(int n, int k) {
    if (n < 1) throw std::domain_error("binary_necklace_T needs n >= 1");
    if (k < 0 || k > n) throw std::domain_error("binary_necklace_T needs 0 <= k <= n");
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    Integer acc = 0;
    for (std::uint64_t d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        acc += Integer(static_cast<unsigned long>(totient(d))) *
               binomial(n / static_cast<int>(d), k / static_cast<int>(d));
    }
    return exact_div(acc, n);
}

} // namespace lextab
