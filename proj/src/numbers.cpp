#include "lextab/numbers.hpp"

#include <numeric>
#include <stdexcept>

namespace lextab {

Integer factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("binomial with negative arguments");
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer multinomial(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 0) throw std::domain_error("multinomial with a negative part");
        total += p;
    }
    Integer r = factorial(total);
    for (int p : parts) r = exact_div(r, factorial(p));
    return r;
}

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::domain_error("totient of 0");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_integral(const Rational& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("exact division by zero");
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("exact division left a remainder");
    return q;
}

} // namespace lextab
