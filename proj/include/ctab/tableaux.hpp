#pragma once

// Staircase and condensed Catalan tableaux: the filling rules, weights, the
// condensing map, and brute-force enumeration (the ground-truth oracle for
// every generating-function identity in this library).
//
// Filling rules (cells hold alpha, beta or nothing):
//   (ii)  every cell west of a beta in its row is empty
//   (iii) every cell north of an alpha in its column is empty
//   (iv)  a cell with no alpha below it and no beta to its right is non-empty
// A staircase tableau of size n additionally fills every diagonal cell (i).

#include "ctab/shapes.hpp"

#include "json.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctab {

enum class Symbol : unsigned char { none = 0, alpha = 1, beta = 2 };

inline char symbol_char(Symbol s) {
    return s == Symbol::alpha ? 'a' : (s == Symbol::beta ? 'b' : '.');
}

struct RuleViolation {
    int row = 0;
    int col = 0;
    int rule = 0;  // 1..4 as in the filling rules
    std::string describe() const {
        const char* name = rule == 1 ? "i" : rule == 2 ? "ii" : rule == 3 ? "iii" : "iv";
        return "rule (" + std::string(name) + ") violated at cell (" + std::to_string(row) +
               "," + std::to_string(col) + ")";
    }
};

class CondensedTableau {
public:
    CondensedTableau() = default;
    explicit CondensedTableau(Shape shape) : shape_(std::move(shape)) {
        rows_.resize(shape_.rows());
        for (int r = 1; r <= shape_.rows(); ++r)
            rows_[r - 1].assign(shape_.part(r), Symbol::none);
    }

    const Shape& shape() const { return shape_; }

    Symbol at(int r, int c) const {
        if (!shape_.cell_in_shape(r, c))
            throw std::out_of_range("CondensedTableau::at: cell outside shape");
        return rows_[r - 1][c - 1];
    }
    void set(int r, int c, Symbol s) {
        if (!shape_.cell_in_shape(r, c))
            throw std::out_of_range("CondensedTableau::set: cell outside shape");
        rows_[r - 1][c - 1] = s;
    }

    int count(Symbol s) const {
        int total = 0;
        for (const auto& row : rows_)
            for (Symbol x : row) total += (x == s);
        return total;
    }

    bool operator==(const CondensedTableau&) const = default;

    // First rule violation in row-major order, or nullopt if valid.
    std::optional<RuleViolation> first_violation() const {
        for (int r = 1; r <= shape_.rows(); ++r) {
            for (int c = 1; c <= shape_.part(r); ++c) {
                Symbol s = at(r, c);
                if (s == Symbol::beta) {
                    for (int w = 1; w < c; ++w)
                        if (at(r, w) != Symbol::none) return RuleViolation{r, w, 2};
                } else if (s == Symbol::alpha) {
                    for (int rn = 1; rn < r; ++rn)
                        if (shape_.cell_in_shape(rn, c) && at(rn, c) != Symbol::none)
                            return RuleViolation{rn, c, 3};
                } else {
                    bool alpha_below = false;
                    for (int d = r + 1; shape_.cell_in_shape(d, c) && !alpha_below; ++d)
                        if (at(d, c) == Symbol::alpha) alpha_below = true;
                    bool beta_right = false;
                    for (int e = c + 1; e <= shape_.part(r) && !beta_right; ++e)
                        if (at(r, e) == Symbol::beta) beta_right = true;
                    if (!alpha_below && !beta_right) return RuleViolation{r, c, 4};
                }
            }
        }
        return std::nullopt;
    }
    bool valid() const { return !first_violation().has_value(); }

    // alpha^(k+j) beta^(cols+l): border weight times the filling symbols.
    BivarPoly weight() const {
        return BivarPoly::mono(shape_.rows() + count(Symbol::alpha),
                               shape_.cols() + count(Symbol::beta));
    }
    BivarPoly filling_weight() const {
        return BivarPoly::mono(count(Symbol::alpha), count(Symbol::beta));
    }

    TasepState type() const { return shape_to_state(shape_); }

    nlohmann::json to_json() const {
        nlohmann::json cells = nlohmann::json::array();
        for (int r = 1; r <= shape_.rows(); ++r)
            for (int c = 1; c <= shape_.part(r); ++c)
                if (at(r, c) != Symbol::none)
                    cells.push_back(
                        {{"r", r}, {"c", c}, {"s", std::string(1, symbol_char(at(r, c)))}});
        return nlohmann::json{{"shape", shape_.str()}, {"cells", cells}};
    }
    static CondensedTableau from_json(const nlohmann::json& j) {
        CondensedTableau t(Shape::parse(j.at("shape").get<std::string>()));
        for (const auto& cell : j.at("cells")) {
            std::string s = cell.at("s").get<std::string>();
            t.set(cell.at("r").get<int>(), cell.at("c").get<int>(),
                  s == "a" ? Symbol::alpha : Symbol::beta);
        }
        return t;
    }

private:
    Shape shape_;
    std::vector<std::vector<Symbol>> rows_;
};

namespace detail {

// Shared search core for the brute-force enumerators. Cells are assigned in
// column-major order with symbols tried empty < alpha < beta, so the visit
// order is lexicographic in that encoding. Rules (ii)/(iii) prune at
// placement; rule (iv) is decided per cell as soon as its column is complete
// (alpha-below is then known) and discharged either by an alpha below, a
// later beta in the row, or a dead branch.
template <typename Tableau>
class FillingSearch {
public:
    FillingSearch(Tableau& t, int rows, std::function<int(int)> row_len,
                  std::function<int(int)> col_len, bool diagonal_forced,
                  const std::function<void(const Tableau&)>& visit)
        : t_(t),
          rows_(rows),
          row_len_(std::move(row_len)),
          col_len_(std::move(col_len)),
          diagonal_forced_(diagonal_forced),
          visit_(visit) {
        int max_col = 0;
        for (int r = 1; r <= rows_; ++r) max_col = std::max(max_col, row_len_(r));
        for (int c = 1; c <= max_col; ++c)
            for (int r = 1; r <= col_len_(c); ++r) cells_.emplace_back(r, c);
        beta_col_.assign(rows_ + 1, 0);
        beta_owed_.assign(rows_ + 1, 0);
        alpha_row_.assign(max_col + 1, 0);
    }

    void run() { rec(0); }

private:
    void rec(std::size_t idx) {
        if (idx == cells_.size()) {
            visit_(t_);
            return;
        }
        auto [r, c] = cells_[idx];
        if (!(diagonal_forced_ && row_len_(r) == c))  // diagonal cells must be filled
            try_assign(idx, r, c, Symbol::none);
        try_assign(idx, r, c, Symbol::alpha);
        try_assign(idx, r, c, Symbol::beta);
    }

    void try_assign(std::size_t idx, int r, int c, Symbol s) {
        if (s == Symbol::alpha) {
            for (int rn = 1; rn < r; ++rn)
                if (t_.at(rn, c) != Symbol::none) return;  // rule (iii)
        } else if (s == Symbol::beta) {
            for (int w = 1; w < c; ++w)
                if (t_.at(r, w) != Symbol::none) return;  // rule (ii)
        }

        int saved_owed = beta_owed_[r];
        if (s == Symbol::beta) {
            beta_col_[r] = c;
            beta_owed_[r] = 0;  // the new beta sits east of every owed cell
        }
        if (s == Symbol::alpha) alpha_row_[c] = r;
        t_.set(r, c, s);

        bool dead = false;
        std::vector<std::pair<int, int>> owed_changes;
        if (col_len_(c) == r) {
            // column complete: every still-empty cell without an alpha below
            // must eventually see a beta to its right
            for (int rr = r; rr >= 1 && !dead; --rr) {
                if (t_.at(rr, c) != Symbol::none) continue;
                if (alpha_row_[c] > rr) continue;
                if (beta_col_[rr] != 0 || row_len_(rr) == c)
                    dead = true;  // beta already west, or no room east
                else {
                    owed_changes.emplace_back(rr, beta_owed_[rr]);
                    beta_owed_[rr] = c;
                }
            }
        }
        if (!dead && row_len_(r) == c && beta_owed_[r] != 0 && beta_col_[r] == 0)
            dead = true;  // row closed while still owing a beta

        if (!dead) rec(idx + 1);

        for (auto it = owed_changes.rbegin(); it != owed_changes.rend(); ++it)
            beta_owed_[it->first] = it->second;
        t_.set(r, c, Symbol::none);
        if (s == Symbol::beta) beta_col_[r] = 0;
        if (s == Symbol::alpha) alpha_row_[c] = 0;
        beta_owed_[r] = saved_owed;
    }

    Tableau& t_;
    int rows_;
    std::function<int(int)> row_len_, col_len_;
    bool diagonal_forced_;
    const std::function<void(const Tableau&)>& visit_;
    std::vector<std::pair<int, int>> cells_;
    std::vector<int> beta_col_;   // column of the row's beta, 0 if none
    std::vector<int> beta_owed_;  // rightmost column owed a beta east of it
    std::vector<int> alpha_row_;  // row of the column's alpha, 0 if none
};

}  // namespace detail

// Every valid filling of the shape exactly once, canonical order (column-major
// cells, symbol order empty < alpha < beta).
inline void enumerate_tableaux(const Shape& lambda,
                               const std::function<void(const CondensedTableau&)>& visit) {
    CondensedTableau t(lambda);
    detail::FillingSearch<CondensedTableau> search(
        t, lambda.rows(), [&](int r) { return lambda.part(r); },
        [&](int c) { return lambda.conj(c); }, false, visit);
    search.run();
}

inline std::vector<CondensedTableau> enumerate_tableaux(const Shape& lambda) {
    std::vector<CondensedTableau> out;
    enumerate_tableaux(lambda, [&](const CondensedTableau& t) { out.push_back(t); });
    return out;
}

// Sum of weights over all valid fillings of the shape (the slow route).
inline BivarPoly tableau_weight_sum(const Shape& lambda) {
    BivarPoly acc;
    enumerate_tableaux(lambda, [&](const CondensedTableau& t) { acc += t.weight(); });
    return acc;
}

// ---------------------------------------------------------------------------
// Staircase tableaux

class StaircaseTableau {
public:
    StaircaseTableau() = default;
    explicit StaircaseTableau(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("StaircaseTableau: negative size");
        rows_.resize(n);
        for (int r = 1; r <= n; ++r) rows_[r - 1].assign(n + 1 - r, Symbol::none);
    }

    int size() const { return n_; }
    int row_length(int r) const { return n_ + 1 - r; }
    bool cell_in_shape(int r, int c) const {
        return r >= 1 && r <= n_ && c >= 1 && c <= row_length(r);
    }
    bool is_diagonal(int r, int c) const { return c == row_length(r); }

    Symbol at(int r, int c) const {
        if (!cell_in_shape(r, c))
            throw std::out_of_range("StaircaseTableau::at: cell outside shape");
        return rows_[r - 1][c - 1];
    }
    void set(int r, int c, Symbol s) {
        if (!cell_in_shape(r, c))
            throw std::out_of_range("StaircaseTableau::set: cell outside shape");
        rows_[r - 1][c - 1] = s;
    }

    int count(Symbol s) const {
        int total = 0;
        for (const auto& row : rows_)
            for (Symbol x : row) total += (x == s);
        return total;
    }

    bool operator==(const StaircaseTableau&) const = default;

    std::optional<RuleViolation> first_violation() const {
        for (int r = 1; r <= n_; ++r) {
            for (int c = 1; c <= row_length(r); ++c) {
                Symbol s = at(r, c);
                if (is_diagonal(r, c) && s == Symbol::none) return RuleViolation{r, c, 1};
                if (s == Symbol::beta) {
                    for (int w = 1; w < c; ++w)
                        if (at(r, w) != Symbol::none) return RuleViolation{r, w, 2};
                } else if (s == Symbol::alpha) {
                    for (int rn = 1; rn < r; ++rn)
                        if (cell_in_shape(rn, c) && at(rn, c) != Symbol::none)
                            return RuleViolation{rn, c, 3};
                } else if (s == Symbol::none) {
                    bool alpha_below = false;
                    for (int d = r + 1; cell_in_shape(d, c) && !alpha_below; ++d)
                        if (at(d, c) == Symbol::alpha) alpha_below = true;
                    bool beta_right = false;
                    for (int e = c + 1; e <= row_length(r) && !beta_right; ++e)
                        if (at(r, e) == Symbol::beta) beta_right = true;
                    if (!alpha_below && !beta_right) return RuleViolation{r, c, 4};
                }
            }
        }
        return std::nullopt;
    }
    bool valid() const { return !first_violation().has_value(); }

    // Product of the symbols in the filling.
    BivarPoly weight() const {
        return BivarPoly::mono(count(Symbol::alpha), count(Symbol::beta));
    }

    // Diagonal read top to bottom: alpha -> particle, beta -> hole.
    TasepState type() const {
        std::vector<Site> w;
        w.reserve(n_);
        for (int r = 1; r <= n_; ++r)
            w.push_back(at(r, row_length(r)) == Symbol::alpha ? Site::particle : Site::hole);
        return TasepState(std::move(w));
    }

private:
    int n_ = 0;
    std::vector<std::vector<Symbol>> rows_;
};

// Condensing: delete every row whose diagonal holds a beta and every column
// whose diagonal holds an alpha, then pack the surviving cells northwest.
// The removed diagonal contributes exactly the border weight of the result,
// so type and total weight survive.
inline CondensedTableau staircase_to_condensed(const StaircaseTableau& s) {
    if (auto v = s.first_violation())
        throw std::invalid_argument("staircase_to_condensed: invalid input, " + v->describe());
    const int n = s.size();
    std::vector<int> row_rank(n + 1, 0), col_rank(n + 1, 0);
    int k = 0, m = 0;
    for (int r = 1; r <= n; ++r)
        if (s.at(r, s.row_length(r)) == Symbol::alpha) row_rank[r] = ++k;
    for (int c = 1; c <= n; ++c)
        if (s.at(n + 1 - c, c) == Symbol::beta) col_rank[c] = ++m;
    CondensedTableau t(state_to_shape(s.type()));
    for (int r = 1; r <= n; ++r) {
        if (!row_rank[r]) continue;
        for (int c = 1; c < s.row_length(r); ++c) {
            if (!col_rank[c]) continue;
            Symbol sym = s.at(r, c);
            if (sym != Symbol::none) t.set(row_rank[r], col_rank[c], sym);
        }
    }
    return t;
}

inline constexpr int kStaircaseOracleBound = 8;

// All valid staircase tableaux of size n, canonical column-major order.
inline void enumerate_staircase(int n,
                                const std::function<void(const StaircaseTableau&)>& visit,
                                int bound = kStaircaseOracleBound) {
    if (n < 0) throw std::invalid_argument("enumerate_staircase: negative size");
    if (n > bound)
        throw std::domain_error("enumerate_staircase: size exceeds oracle bound " +
                                std::to_string(bound));
    StaircaseTableau t(n);
    detail::FillingSearch<StaircaseTableau> search(
        t, n, [n](int r) { return n + 1 - r; }, [n](int c) { return n + 1 - c; }, true, visit);
    search.run();
}

inline std::vector<StaircaseTableau> enumerate_staircase(int n,
                                                         int bound = kStaircaseOracleBound) {
    std::vector<StaircaseTableau> out;
    enumerate_staircase(n, [&](const StaircaseTableau& t) { out.push_back(t); }, bound);
    return out;
}

// All shapes with the given semi-perimeter (every rows/cols split, every
// partition in the rectangle), deterministic order.
inline std::vector<Shape> shapes_with_semi_perimeter(int n) {
    std::vector<Shape> out;
    for (int k = 0; k <= n; ++k) {
        int m = n - k;
        std::vector<int> parts(k, 0);
        std::function<void(int, int)> rec = [&](int i, int max_part) {
            if (i == k) {
                out.emplace_back(parts, m);
                return;
            }
            for (int v = max_part; v >= 0; --v) {
                parts[i] = v;
                rec(i + 1, v);
            }
        };
        rec(0, m);
    }
    return out;
}

}  // namespace ctab
