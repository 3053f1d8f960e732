#include "ctab/closedforms.hpp"

#include "ctab/tableaux.hpp"
#include "ctab/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <vector>

using namespace ctab;

namespace {

BivarPoly A() { return BivarPoly::var_a(); }
BivarPoly B() { return BivarPoly::var_b(); }

// All shapes with exactly `rows` parts (zeros included), parts <= cols.
std::vector<Shape> shapes_in_rectangle(int rows, int cols) {
    std::vector<Shape> out;
    std::vector<int> parts(rows, 0);
    std::function<void(int, int)> rec = [&](int i, int hi) {
        if (i == rows) {
            out.emplace_back(parts, cols);
            return;
        }
        for (int v = hi; v >= 0; --v) {
            parts[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, cols);
    return out;
}

// Weight sum over legal hook fillings around a fixed inner tableau, by raw
// search over the m+k-1 hook cells of the combined tableau.
BivarPoly hook_fillings_oracle(int m, int k, const CondensedTableau& inner) {
    std::vector<int> parts{m};
    for (int r = 1; r <= k - 1; ++r) parts.push_back(inner.shape().part(r) + 1);
    CondensedTableau combined{Shape(parts, m)};
    for (int r = 1; r <= k - 1; ++r)
        for (int c = 1; c <= inner.shape().part(r); ++c)
            if (inner.at(r, c) != Symbol::none) combined.set(r + 1, c + 1, inner.at(r, c));

    std::vector<std::pair<int, int>> hook_cells;
    for (int c = 1; c <= m; ++c) hook_cells.emplace_back(1, c);
    for (int r = 2; r <= k; ++r) hook_cells.emplace_back(r, 1);

    BivarPoly total;
    const Symbol symbols[3] = {Symbol::none, Symbol::alpha, Symbol::beta};
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int na, int nb) {
        if (i == hook_cells.size()) {
            if (combined.valid()) total += BivarPoly::mono(na, nb);
            return;
        }
        for (Symbol s : symbols) {
            combined.set(hook_cells[i].first, hook_cells[i].second, s);
            rec(i + 1, na + (s == Symbol::alpha), nb + (s == Symbol::beta));
        }
        combined.set(hook_cells[i].first, hook_cells[i].second, Symbol::none);
    };
    rec(0, 0, 0);
    return total;
}

}  // namespace

TEST_CASE("first-row slice closed form, one-row and one-column cases") {
    for (int k = 1; k <= 5; ++k) {
        BivarPoly inner = BivarPoly::mono(0, k);  // b^k
        for (int l = 0; l <= k - 1; ++l) inner += BivarPoly::mono(1, l);
        CHECK(n_prime(1, k) == BivarPoly::mono(k, 1) * inner);
    }
    for (int m = 1; m <= 5; ++m) {
        BivarPoly inner = BivarPoly::mono(m, 0);  // a^m
        for (int i = 0; i <= m - 1; ++i) inner += BivarPoly::mono(i, 1);
        CHECK(n_prime(m, 1) == BivarPoly::mono(1, m) * inner);
    }
    CHECK(n_prime(1, 1) == BivarPoly::mono(1, 1) * (A() + B()));
    CHECK_THROWS_AS(n_prime(0, 1), std::domain_error);
    CHECK_THROWS_AS(n_prime(1, 0), std::domain_error);
}

TEST_CASE("first-row slice equals the determinant sum") {
    for (int m = 1; m <= 4; ++m) {
        for (int k = 1; k <= 4; ++k) {
            // shapes with first part exactly m and k nonzero parts
            BivarPoly det_sum;
            std::vector<int> parts(k, 0);
            parts[0] = m;
            std::function<void(int, int)> rec = [&](int i, int hi) {
                if (i == k) {
                    det_sum += det_border_expansion(weighted_matrix(Shape(parts, m)));
                    return;
                }
                for (int v = hi; v >= 1; --v) {
                    parts[i] = v;
                    rec(i + 1, v);
                }
            };
            rec(1, m);
            CHECK(n_prime(m, k) == BivarPoly::mono(k, m) * det_sum);
        }
    }
}

TEST_CASE("rectangle generating function, degenerate rows") {
    CHECK(n_mk(0, 0) == BivarPoly(1));
    for (int m = 1; m <= 6; ++m) CHECK(n_mk(m, 0) == BivarPoly::mono(0, m));
    for (int k = 1; k <= 6; ++k) CHECK(n_mk(0, k) == BivarPoly::mono(k, 0));
}

TEST_CASE("rectangle generating function equals the shape sums") {
    for (int m = 0; m <= 4; ++m) {
        for (int k = 0; k <= 4; ++k) {
            BivarPoly by_det, by_enum;
            for (const Shape& sh : shapes_in_rectangle(k, m)) {
                by_det += genfun(sh);
                by_enum += tableau_weight_sum(sh);
            }
            CHECK(n_mk(m, k) == by_det);
            CHECK(n_mk(m, k) == by_enum);
        }
    }
}

TEST_CASE("rectangle generating function spot values") {
    UniPoly qq = substitute(n_mk(5, 1), QSubst::qq);
    CHECK(qq.shift_down(6) == unipoly_from_descending({2, 3, 4, 5, 6, 1}));
    UniPoly q1 = substitute(n_mk(4, 4), QSubst::q1);
    CHECK(q1.shift_down(4) == unipoly_from_descending({490, 560, 420, 224, 70}));
}

TEST_CASE("rectangle generating function is a weight generating function") {
    for (int m = 0; m <= 5; ++m)
        for (int k = 0; k <= 5; ++k) {
            BivarPoly p = n_mk(m, k);
            CHECK(!p.has_negative_coeff());
            CHECK(p.min_total_degree() == (p.is_zero() ? -1 : m + k));
            CHECK(p.max_a_degree() <= m + k);
            CHECK(p.max_b_degree() <= m + k);
            CHECK(p.total_degree() <= 2 * (m + k));
            if (m + k > 0) CHECK(!p.shift_divide(k, m).is_zero());
        }
}

TEST_CASE("slice relation") {
    CHECK(relation_check(1, 1));
    CHECK(relation_check(0, 3));
    for (int m = 0; m <= 4; ++m)
        for (int k = 0; k <= 4; ++k) CHECK(relation_check(m, k));
}

TEST_CASE("hook weights") {
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 4; ++k)
            CHECK(hook_weight(m, k, m - 1, k - 1) == A() + B());
    CHECK_THROWS_AS(hook_weight(0, 1, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(hook_weight(2, 2, 2, 0), std::out_of_range);
    CHECK_THROWS_AS(hook_weight(2, 2, 0, -1), std::out_of_range);
    for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= 6; ++k)
            for (int j = 0; j < m; ++j)
                for (int l = 0; l < k; ++l) CHECK(!hook_weight(m, k, j, l).has_negative_coeff());
}

TEST_CASE("hook weights match raw fillings of the hook") {
    for (int m = 2; m <= 4; ++m) {
        for (int k = 2; k <= 4; ++k) {
            for (const Shape& inner_shape : shapes_in_rectangle(k - 1, m - 1)) {
                enumerate_tableaux(inner_shape, [&](const CondensedTableau& inner) {
                    int j = inner.count(Symbol::alpha);
                    int l = inner.count(Symbol::beta);
                    CHECK(hook_fillings_oracle(m, k, inner) == hook_weight(m, k, j, l));
                });
            }
        }
    }
}

TEST_CASE("hook recursion rebuilds the slice generating function") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 2; k <= 4; ++k) CHECK(hook_recursion_check(m, k));
    CHECK_THROWS_AS(hook_recursion_check(1, 2), std::domain_error);
}

TEST_CASE("partition function small values") {
    CHECK(z_n(0) == BivarPoly(1));
    CHECK(z_n(1) == A() + B());
    CHECK(z_n(2) == BivarPoly::parse("a^2*b + a*b^2 + a^2 + a*b + b^2"));
}

TEST_CASE("partition function counts all staircase tableaux") {
    for (int n = 1; n <= 6; ++n) {
        BivarPoly total;
        long count = 0;
        enumerate_staircase(n, [&](const StaircaseTableau& s) {
            total += s.weight();
            ++count;
        });
        CHECK(total == z_n(n));
        CHECK(BigInt(count) == catalan_number(n + 1));
    }
}

TEST_CASE("partition function at unit rates is Catalan") {
    for (int n = 0; n <= 12; ++n) CHECK(z_n(n).eval(1, 1) == Rat(catalan_number(n + 1)));
    CHECK(z_n(12).eval(1, 1) == 742900);
}

TEST_CASE("two routes to the partition function") {
    for (int n = 1; n <= 8; ++n) CHECK(z_n(n) == z_n_ballot_form(n));
    CHECK_THROWS_AS(z_n_ballot_form(0), std::domain_error);
}

TEST_CASE("partition-function coefficients are ballot numbers") {
    for (int n = 1; n <= 6; ++n) {
        BivarPoly z = z_n(n);
        for (int s = 1; s <= n; ++s) {
            BigInt expect = exact_div(BigInt(s) * binom(2 * n - s, n), BigInt(2 * n - s));
            for (int t = 0; t <= s; ++t) CHECK(z.coeff(n - t, n + t - s) == expect);
        }
    }
}

TEST_CASE("narayana numbers") {
    CHECK(narayana_number(6, 1) == 21);
    CHECK(narayana_number(8, 4) == 1764);
    for (int n = 0; n <= 10; ++n) CHECK(narayana_number(n, 0) == 1);
    CHECK_THROWS_AS(narayana_number(3, 4), std::out_of_range);
    CHECK_THROWS_AS(narayana_number(3, -1), std::out_of_range);
}

TEST_CASE("q-table rows") {
    CHECK(q_table(7, QSubst::qq)[2] ==
          unipoly_from_descending({100, 150, 130, 75, 27, 7, 1}));
    CHECK(q_table(8, QSubst::q1)[1] ==
          unipoly_from_descending({28, 48, 60, 64, 60, 48, 28}));
    CHECK(q_table(7, QSubst::qq)[2].format() ==
          "100q^6 + 150q^5 + 130q^4 + 75q^3 + 27q^2 + 7q + 1");
}

TEST_CASE("q-table symmetries") {
    for (int n = 6; n <= 8; ++n) {
        auto qq = q_table(n, QSubst::qq);
        auto q1 = q_table(n, QSubst::q1);
        auto oneq = q_table(n, QSubst::one_q);
        for (int k = 1; k <= n - 1; ++k) {
            CHECK(qq[k - 1] == qq[n - k - 1]);
            CHECK(q1[k - 1] == oneq[n - k - 1]);
        }
    }
}

TEST_CASE("q-table against the reference") {
    for (const auto& row : q_table_reference()) {
        CHECK(q_table(row.n, QSubst::qq)[row.k - 1] == unipoly_from_descending(row.qq_desc));
        CHECK(q_table(row.n, QSubst::q1)[row.k - 1] == unipoly_from_descending(row.q1_desc));
    }
}
