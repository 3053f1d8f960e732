#pragma once

// The path-counting matrix A_lambda, its weighted refinement, and exact
// determinants over the polynomial ring. Both matrices are upper Hessenberg
// with unit subdiagonal, and their leading minors collapse to suffix shapes:
// the m x m bottom-right minor of A_(l1..lk) is A_(l{k-m+1}..lk). That makes
// the border (top-row) expansion a quadratic-cost recursion, which is the
// production determinant path; a general memoized Laplace expansion covers
// arbitrary matrices.

#include "ctab/poly.hpp"
#include "ctab/shapes.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ctab {

class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int dim) : dim_(dim), e_(dim * dim) {
        if (dim < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
    }

    int dim() const { return dim_; }
    const BivarPoly& at(int i, int j) const { return e_.at(i * dim_ + j); }  // 0-based
    BivarPoly& at(int i, int j) { return e_.at(i * dim_ + j); }

    bool operator==(const PolyMatrix&) const = default;

    static PolyMatrix identity(int dim) {
        PolyMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = BivarPoly(1);
        return m;
    }

    // Exact determinant by top-row expansion, memoized on the surviving
    // column set (rows are always consumed from the top).
    BivarPoly det() const {
        if (dim_ == 0) return BivarPoly(1);
        if (dim_ > 63) throw std::domain_error("PolyMatrix::det: dimension too large");
        std::unordered_map<std::uint64_t, BivarPoly> memo;
        std::function<BivarPoly(std::uint64_t)> rec =
            [&](std::uint64_t cols) -> BivarPoly {
            if (cols == 0) return BivarPoly(1);
            auto it = memo.find(cols);
            if (it != memo.end()) return it->second;
            int row = dim_ - __builtin_popcountll(cols);
            BivarPoly acc;
            int sign = 1;
            for (int j = 0; j < dim_; ++j) {
                if (!(cols >> j & 1)) continue;
                const BivarPoly& entry = at(row, j);
                if (!entry.is_zero()) {
                    BivarPoly sub = rec(cols & ~(1ull << j));
                    acc += (sign > 0) ? entry * sub : -(entry * sub);
                }
                sign = -sign;
            }
            memo.emplace(cols, acc);
            return acc;
        };
        std::uint64_t all = dim_ == 64 ? ~0ull : ((1ull << dim_) - 1);
        return rec(all);
    }

private:
    int dim_ = 0;
    std::vector<BivarPoly> e_;
};

// Entry (i,j), 1-based: binom(part_j + 1, j - i + 1). det counts the
// constrained lattice paths on the shape.
inline PolyMatrix narayana_matrix(const Shape& lambda) {
    const int k = lambda.rows();
    if (k < 1) throw std::invalid_argument("narayana_matrix: shape needs at least one row");
    PolyMatrix m(k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m.at(i - 1, j - 1) = BivarPoly(binom(lambda.part(j) + 1, j - i + 1));
    return m;
}

// Weighted refinement: entry (i,j), 1-based, with part(k+1) = 0, equals
//   b^(j-i) a^(l_i - l_{j+1}) [ C(l_{j+1}, j-i) + b C(l_{j+1}, j-i+1) ]
// + b^(j-i) a^(l_i - l_j) sum_{t=0}^{l_j-l_{j+1}-1} a^t
//       [ C(l_j-t-1, j-i-1) + b C(l_j-t-1, j-i) ]
// assembled term by term so that only monomials with a nonzero binomial
// factor are formed (those all have nonnegative exponents).
inline PolyMatrix weighted_matrix(const Shape& lambda) {
    const int k = lambda.rows();
    if (k < 1) throw std::invalid_argument("weighted_matrix: shape needs at least one row");
    PolyMatrix m(k);
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            const int li = lambda.part(i), lj = lambda.part(j), lj1 = lambda.part(j + 1);
            const int d = j - i;
            BivarPoly entry;
            BigInt c1 = binom(lj1, d);
            if (c1 != 0) entry += BivarPoly::mono(li - lj1, d, c1);
            BigInt c2 = binom(lj1, d + 1);
            if (c2 != 0) entry += BivarPoly::mono(li - lj1, d + 1, c2);
            for (int t = 0; t <= lj - lj1 - 1; ++t) {
                BigInt c3 = binom(lj - t - 1, d - 1);
                if (c3 != 0) entry += BivarPoly::mono(li - lj + t, d, c3);
                BigInt c4 = binom(lj - t - 1, d);
                if (c4 != 0) entry += BivarPoly::mono(li - lj + t, d + 1, c4);
            }
            m.at(i - 1, j - 1) = std::move(entry);
        }
    }
    return m;
}

// Determinant via the border expansion: with D_t the determinant of the
// suffix matrix starting at row/column t,
//   D_t = sum_{j=t..k} (-1)^(j-t) M(t,j) D_{j+1},   D_{k+1} = 1.
// Correct whenever leading minors collapse to suffixes (unit subdiagonal,
// zeros below it), which holds for both matrices above.
inline BivarPoly det_border_expansion(const PolyMatrix& m) {
    const int k = m.dim();
    std::vector<BivarPoly> suffix(k + 2);
    suffix[k + 1] = BivarPoly(1);
    for (int t = k; t >= 1; --t) {
        BivarPoly acc;
        int sign = 1;
        for (int j = t; j <= k; ++j) {
            const BivarPoly& entry = m.at(t - 1, j - 1);
            if (!entry.is_zero())
                acc += (sign > 0) ? entry * suffix[j + 1] : -(entry * suffix[j + 1]);
            sign = -sign;
        }
        suffix[t] = std::move(acc);
    }
    return suffix[1];
}

// Number of constrained paths on the shape (exact integer).
inline BigInt narayana_path_count(const Shape& lambda) {
    if (lambda.rows() == 0) return 1;
    return det_border_expansion(narayana_matrix(lambda)).coeff(0, 0);
}

// Weight generating function of the shape's fillings, border included:
// a^k b^m det of the weighted matrix (det of the empty matrix is 1).
inline BivarPoly genfun(const Shape& lambda) {
    BivarPoly border = boundary_weight(lambda);
    if (lambda.rows() == 0) return border;
    return border * det_border_expansion(weighted_matrix(lambda));
}

// Exact quotient; throws if den does not divide num.
inline BivarPoly divide_exact(const BivarPoly& num, const BivarPoly& den) {
    if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    BivarPoly r = num, q;
    const auto& [dm, dc] = *den.terms().begin();
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().begin();
        if (rm.a_deg < dm.a_deg || rm.b_deg < dm.b_deg)
            throw std::domain_error("divide_exact: not divisible");
        BigInt c = rc / dc;
        if (c * dc != rc) throw std::domain_error("divide_exact: not divisible");
        BivarPoly term = BivarPoly::mono(rm.a_deg - dm.a_deg, rm.b_deg - dm.b_deg, c);
        q += term;
        r -= term * den;
    }
    return q;
}

}  // namespace ctab
