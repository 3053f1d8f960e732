#include "ctab/determinants.hpp"

#include "ctab/paths.hpp"
#include "ctab/tableaux.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ctab;

namespace {

// Fraction-free elimination (one-step Bareiss): an independent determinant
// route. Every division is exact by construction.
BivarPoly bareiss_det(PolyMatrix m) {
    const int n = m.dim();
    if (n == 0) return BivarPoly(1);
    BivarPoly prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return BivarPoly(0);
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = divide_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j),
                                          prev);
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

BivarPoly random_entry(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), deg(0, 2), coeff(-4, 4);
    BivarPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) p += BivarPoly::mono(deg(rng), deg(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("path-count matrix basics") {
    PolyMatrix m1 = narayana_matrix(Shape({4}, 4));
    REQUIRE(m1.dim() == 1);
    CHECK(m1.at(0, 0) == BivarPoly(5));

    // all-zero parts: unit diagonal and unit subdiagonal, determinant 1
    for (int k = 1; k <= 5; ++k) {
        Shape sh(std::vector<int>(k, 0), 0);
        PolyMatrix m = narayana_matrix(sh);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j || i == j + 1)
                    CHECK(m.at(i, j) == BivarPoly(1));
                else
                    CHECK(m.at(i, j) == BivarPoly(0));
            }
        CHECK(m.det() == BivarPoly(1));
        CHECK(narayana_path_count(sh) == 1);
    }
}

TEST_CASE("path count of the four-row example") {
    Shape sh({6, 4, 4, 2}, 6);
    CHECK(narayana_path_count(sh) == 127);
    long paths = 0;
    enumerate_paths(sh, [&](const WeightedPath&) { ++paths; });
    CHECK(paths == 127);
}

TEST_CASE("weighted matrix base cases") {
    for (int l1 = 0; l1 <= 5; ++l1) {
        PolyMatrix m = weighted_matrix(Shape({l1}, l1));
        REQUIRE(m.dim() == 1);
        BivarPoly expect = BivarPoly::mono(l1, 0);
        for (int j = 0; j < l1; ++j) expect += BivarPoly::mono(j, 1);
        CHECK(m.at(0, 0) == expect);
    }
    PolyMatrix unit = weighted_matrix(Shape({1}, 1));
    CHECK(unit.at(0, 0) == BivarPoly::var_a() + BivarPoly::var_b());
}

TEST_CASE("weighted matrix at unit rates matches the integer matrix") {
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        if (!parts.empty()) {
            Shape sh(parts, parts.front());
            CHECK(det_border_expansion(weighted_matrix(sh)).eval(1, 1) ==
                  Rat(narayana_path_count(sh)));
        }
        if (remaining == 0) return;
        int hi = parts.empty() ? 4 : parts.back();
        for (int v = hi; v >= 0; --v) {
            parts.push_back(v);
            rec(remaining - 1);
            parts.pop_back();
        }
    };
    rec(4);
}

TEST_CASE("determinant routes agree") {
    CHECK(PolyMatrix::identity(3).det() == BivarPoly(1));

    // border expansion vs general expansion vs fraction-free elimination
    std::vector<Shape> shapes = {Shape({3, 2, 2}, 4), Shape({4, 3, 1, 1}, 4),
                                 Shape({5, 5, 2, 1}, 5), Shape({2, 2, 2, 2}, 2)};
    for (const Shape& sh : shapes) {
        PolyMatrix w = weighted_matrix(sh);
        BivarPoly d = det_border_expansion(w);
        CHECK(d == w.det());
        CHECK(d == bareiss_det(w));
    }

    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = 1 + (int)(rng() % 5);
        PolyMatrix m(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.at(i, j) = random_entry(rng);
        CHECK(m.det() == bareiss_det(m));
    }
}

TEST_CASE("suffix minors equal suffix-shape matrices") {
    Shape sh({4, 3, 1, 1}, 4);
    PolyMatrix full = weighted_matrix(sh);
    for (int drop = 1; drop <= 3; ++drop) {
        std::vector<int> tail(sh.parts().begin() + drop, sh.parts().end());
        PolyMatrix suffix = weighted_matrix(Shape(tail, tail.front()));
        for (int i = 0; i < suffix.dim(); ++i)
            for (int j = 0; j < suffix.dim(); ++j)
                CHECK(suffix.at(i, j) == full.at(i + drop, j + drop));
    }
}

TEST_CASE("top-row expansion identity") {
    std::vector<Shape> shapes = {Shape({3, 2, 2}, 3), Shape({4, 4, 2, 1}, 4),
                                 Shape({2, 1}, 2)};
    for (const Shape& sh : shapes) {
        const int k = sh.rows();
        PolyMatrix m = weighted_matrix(sh);
        BivarPoly sum;
        int sign = 1;
        for (int j = 1; j <= k; ++j) {
            std::vector<int> tail(sh.parts().begin() + j, sh.parts().end());
            BivarPoly suffix_det =
                tail.empty() ? BivarPoly(1)
                             : det_border_expansion(weighted_matrix(Shape(tail, tail.front())));
            BivarPoly term = m.at(0, j - 1) * suffix_det;
            sum += (sign > 0) ? term : -term;
            sign = -sign;
        }
        CHECK(sum == det_border_expansion(m));
    }
}

TEST_CASE("generating function") {
    CHECK(genfun(Shape({1}, 1)) == BivarPoly::mono(2, 1) + BivarPoly::mono(1, 2));
    CHECK(genfun(Shape({}, 3)) == BivarPoly::mono(0, 3));
    CHECK(genfun(Shape({0, 0, 0, 0}, 0)) == BivarPoly::mono(4, 0));
}

TEST_CASE("generating function equals the enumeration up to semi-perimeter 7") {
    for (int n = 0; n <= 7; ++n)
        for (const Shape& sh : shapes_with_semi_perimeter(n))
            CHECK(genfun(sh) == tableau_weight_sum(sh));
}

TEST_CASE("exact polynomial division") {
    BivarPoly a = BivarPoly::parse("a^2 + 2*a*b + b^2");
    BivarPoly s = BivarPoly::parse("a + b");
    CHECK(divide_exact(a, s) == s);
    CHECK_THROWS_AS(divide_exact(s, a), std::domain_error);
    CHECK_THROWS_AS(divide_exact(a, BivarPoly(0)), std::domain_error);
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        BivarPoly p = random_entry(rng), q = random_entry(rng);
        if (q.is_zero()) continue;
        CHECK(divide_exact(p * q, q) == p);
    }
}
