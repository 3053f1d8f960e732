#pragma once

// Exact scalar arithmetic: arbitrary-precision integers, rationals, and the
// binomial-coefficient convention shared by the matrix and closed-form code.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ctab {

using BigInt = boost::multiprecision::cpp_int;

// Canonical rational: reduced, positive denominator (maintained by boost).
using Rat = boost::multiprecision::cpp_rational;

// binom(n, k) for arbitrary integer n and k.
//   k < 0        -> 0
//   k = 0        -> 1 (empty product, any n)
//   0 <= n < k   -> 0
//   n < 0, k > 0 -> (-1)^k * binom(k-n-1, k)   (falling-factorial extension)
// The extension at negative n is what makes the closed-form double sums
// collapse correctly in their degenerate corners; all in-range uses keep
// n >= 0 anyway.
inline BigInt binom(long long n, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < 0) {
        BigInt v = binom(k - n - 1, k);
        return (k % 2 == 0) ? v : -v;
    }
    if (n < k) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is a binomial prefix
    }
    return r;
}

// C_n = binom(2n, n) / (n+1)
inline BigInt catalan_number(long long n) {
    if (n < 0) throw std::domain_error("catalan_number: n must be >= 0");
    return binom(2 * n, n) / (n + 1);
}

// Exact integer quotient; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("exact_div: zero divisor");
    BigInt q = num / den;
    if (q * den != num) throw std::domain_error("exact_div: not divisible");
    return q;
}

// Accepts "p/q" or a bare integer literal.
inline Rat parse_rat(const std::string& text) {
    try {
        Rat r(text);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    }
}

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace ctab
