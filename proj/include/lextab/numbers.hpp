#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace lextab {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);
Integer binomial(int n, int k);

/// (sum parts)! / prod parts[i]!
Integer multinomial(const std::vector<int>& parts);

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

bool is_integral(const Rational& q);

/// Exact quotient a/b; throws std::domain_error if b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);

} // namespace lextab
