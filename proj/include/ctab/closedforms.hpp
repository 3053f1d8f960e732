#pragma once

// Closed forms for the rectangle-bounded generating functions: the exact
// double sums for tableaux with a fixed first row and row count (n_prime)
// and for a full rectangle (n_mk), the hook-weight recursion connecting
// them, the partition function z_n with its ballot-number cross-route, and
// the Narayana-number specializations.

#include "ctab/determinants.hpp"
#include "ctab/poly.hpp"

#include <stdexcept>
#include <vector>

namespace ctab {

// Weight generating function for fillings whose shape has first row exactly
// m and exactly k nonzero rows, border a^k b^m included. Requires m, k >= 1.
inline BivarPoly n_prime(int m, int k) {
    if (m < 1 || k < 1)
        throw std::domain_error("n_prime: requires a nonempty first row and row count");
    BivarPoly sum;
    for (int l = 0; l <= k; ++l) {
        for (int j = 0; j <= m; ++j) {
            int dj = (j == m) ? 1 : 0;
            int dl = (l == k) ? 1 : 0;
            BigInt c = binom(m + l - 2 + dj, m - 1) * binom(k + j - 2 + dl, k - 1) -
                       binom(m + l - 2 + dj, m) * binom(k + j - 2 + dl, k);
            if (c != 0) sum += BivarPoly::mono(j, l, c);
        }
    }
    return BivarPoly::mono(k, m) * sum;
}

// Weight generating function over every shape inside a k x m rectangle,
// border a^k b^m included. Degenerate rows collapse to n_mk(m,0) = b^m and
// n_mk(0,k) = a^k.
inline BivarPoly n_mk(int m, int k) {
    if (m < 0 || k < 0) throw std::domain_error("n_mk: negative rectangle");
    BivarPoly sum;
    for (int j = 0; j <= m; ++j) {
        for (int l = 0; l <= k; ++l) {
            BigInt c = binom(k + j - 1, j) * binom(m + l - 1, l) -
                       binom(k + j - 1, j - 1) * binom(m + l - 1, l - 1);
            if (c != 0) sum += BivarPoly::mono(j, l, c);
        }
    }
    return BivarPoly::mono(k, m) * sum;
}

// n_mk assembled from the n_prime slices over first-row lengths and row
// counts; the empty shape contributes the single monomial-free term.
//   n_mk(m,k) = a^k b^m * sum_{m'=0..m} sum_{k'=0..k} n_prime(m',k') / (a^k' b^m')
inline bool relation_check(int m, int k) {
    BivarPoly rhs;
    for (int mp = 0; mp <= m; ++mp) {
        for (int kp = 0; kp <= k; ++kp) {
            if (mp == 0 || kp == 0) {
                if (mp == 0 && kp == 0) rhs += BivarPoly(1);
                continue;  // no shapes with an empty first row or no rows
            }
            rhs += n_prime(mp, kp).shift_divide(kp, mp);
        }
    }
    return n_mk(m, k) == BivarPoly::mono(k, m) * rhs;
}

// Total weight of the legal fillings of the hook (top row of length m plus
// left column of length k) around an inner tableau that leaves k-1-l free
// rows and m-1-j free columns:
//   a^(m-j) sum_{s=0..k-l-1} b^s  +  b^(k-l) sum_{t=0..m-j-1} a^t
//   + sum_{t=1..m-j-1} sum_{s=1..k-l-1} a^t b^s
inline BivarPoly hook_weight(int m, int k, int j, int l) {
    if (m < 1 || k < 1) throw std::out_of_range("hook_weight: m, k must be >= 1");
    if (j < 0 || j > m - 1 || l < 0 || l > k - 1)
        throw std::out_of_range("hook_weight: indices outside the inner rectangle");
    BivarPoly h;
    for (int s = 0; s <= k - l - 1; ++s) h += BivarPoly::mono(m - j, s);
    for (int t = 0; t <= m - j - 1; ++t) h += BivarPoly::mono(t, k - l);
    for (int t = 1; t <= m - j - 1; ++t)
        for (int s = 1; s <= k - l - 1; ++s) h += BivarPoly::mono(t, s);
    return h;
}

// Hook recursion: growing every inner rectangle filling by a hook reproduces
// n_prime. Holds for m, k >= 2.
inline bool hook_recursion_check(int m, int k) {
    if (m < 2 || k < 2) throw std::domain_error("hook_recursion_check: requires m, k >= 2");
    BivarPoly inner = n_mk(m - 1, k - 1);
    BivarPoly rhs;
    for (int j = 0; j <= m - 1; ++j) {
        for (int l = 0; l <= k - 1; ++l) {
            BigInt c = inner.coeff(j + (k - 1), l + (m - 1));  // inner border shifted off
            if (c != 0) rhs += hook_weight(m, k, j, l) * BivarPoly::mono(j, l, c);
        }
    }
    return n_prime(m, k) == BivarPoly::mono(k, m) * rhs;
}

// Partition function: total weight of all fillings with semi-perimeter n.
inline BivarPoly z_n(int n) {
    if (n < 0) throw std::domain_error("z_n: negative size");
    BivarPoly sum;
    for (int k = 0; k <= n; ++k) sum += n_mk(n - k, k);
    return sum;
}

// Ballot-number route (n >= 1):
//   z_n = sum_{p=1..n} [ p/(2n-p) C(2n-p, n) ] sum_{i=0..p} a^(n-i) b^(n-p+i)
// The inner sum is the geometric expansion of
// (a^(-p-1) - b^(-p-1)) / (a^(-1) - b^(-1)) scaled by a^n b^n, so the whole
// expression stays inside the polynomial ring. The ballot-number scalar is an
// exact integer; non-divisibility would be a hard error.
inline BivarPoly z_n_ballot_form(int n) {
    if (n < 1) throw std::domain_error("z_n_ballot_form: requires n >= 1");
    BivarPoly sum;
    for (int p = 1; p <= n; ++p) {
        BigInt c = exact_div(BigInt(p) * binom(2 * n - p, n), BigInt(2 * n - p));
        for (int i = 0; i <= p; ++i) sum += BivarPoly::mono(n - i, n - p + i, c);
    }
    return sum;
}

// (1/(n+1)) C(n+1,k) C(n+1,k+1), exactly.
inline BigInt narayana_number(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("narayana_number: requires 0 <= k <= n");
    return exact_div(binom(n + 1, k) * binom(n + 1, k + 1), BigInt(n + 1));
}

// q-specializations of n_mk(n-k,k) for k = 1..n-1, normalized by the lowest
// power of q (q^n for qq, q^k for q1, q^(n-k) for 1q), matching the tabled
// polynomials.
inline std::vector<UniPoly> q_table(int n, QSubst mode) {
    if (n < 1) throw std::domain_error("q_table: requires n >= 1");
    std::vector<UniPoly> rows;
    rows.reserve(std::max(0, n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        UniPoly u = substitute(n_mk(n - k, k), mode);
        rows.push_back(u.shift_down(u.min_degree()));
    }
    return rows;
}

}  // namespace ctab
