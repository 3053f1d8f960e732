#pragma once

// Weighted Catalan paths on a shape and the weight-preserving bijection with
// condensed tableaux, routed through the modified tableau normal form.
//
// A path runs from the northeast corner of the bounding rectangle to the
// southwest corner, taking south/west steps and never crossing the border L
// of the shape. It is determined by its south-step columns x_1 >= ... >= x_k
// (one per row, x_i <= part_i). Edge labels are forced by position:
//   south step at column offset  > 0      -> b
//   south step on the west boundary       -> 1
//   west step strictly above L            -> a
//   west step on L                        -> 1
// The path weight equals the filling weight of the matching tableau; the
// border weight a^k b^m accounts for the rest.

#include "ctab/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctab {

enum class PathLabel : unsigned char { one = 0, alpha = 1, beta = 2 };

// Rule for a valid south-step set: one step per row, x_i <= part_i, and no
// step west of the step in the row below it (x_i >= x_{i+1}).
inline bool rule1_valid(const Shape& lambda, const std::vector<int>& offsets) {
    if ((int)offsets.size() != lambda.rows()) return false;
    for (int i = 0; i < (int)offsets.size(); ++i) {
        if (offsets[i] < 0 || offsets[i] > lambda.part(i + 1)) return false;
        if (i > 0 && offsets[i] > offsets[i - 1]) return false;
    }
    return true;
}

class WeightedPath {
public:
    WeightedPath() = default;

    WeightedPath(Shape shape, std::vector<int> south_offsets)
        : shape_(std::move(shape)), offsets_(std::move(south_offsets)) {
        if (!rule1_valid(shape_, offsets_))
            throw std::invalid_argument("WeightedPath: south steps do not form a valid path");
        derive_steps_and_labels();
    }

    // Construction from explicit steps and labels double-checks that the
    // labels match the positional rules; the labeling is unique given the path.
    WeightedPath(const Shape& shape, const std::vector<Step>& steps,
                 const std::vector<PathLabel>& labels)
        : WeightedPath(shape, offsets_from_steps(shape, steps)) {
        if (labels != labels_)
            throw std::invalid_argument("WeightedPath: labels contradict the positional rules");
    }

    const Shape& shape() const { return shape_; }
    const std::vector<int>& south_offsets() const { return offsets_; }
    const std::vector<Step>& steps() const { return steps_; }
    const std::vector<PathLabel>& labels() const { return labels_; }

    bool operator==(const WeightedPath& o) const {
        return shape_ == o.shape_ && offsets_ == o.offsets_;
    }

    // Product of the edge labels, as a monomial.
    BivarPoly weight() const {
        int na = 0, nb = 0;
        for (PathLabel l : labels_) {
            na += (l == PathLabel::alpha);
            nb += (l == PathLabel::beta);
        }
        return BivarPoly::mono(na, nb);
    }

    // "SWWS...@parts/cols"
    std::string str() const {
        std::string s;
        for (Step st : steps_) s.push_back(st == Step::south ? 'S' : 'W');
        return s + "@" + shape_.str();
    }

    static WeightedPath parse(const std::string& text) {
        auto at = text.find('@');
        if (at == std::string::npos)
            throw std::invalid_argument("WeightedPath::parse: missing '@'");
        Shape shape = Shape::parse(text.substr(at + 1));
        std::vector<Step> steps;
        for (std::size_t i = 0; i < at; ++i) {
            if (text[i] == 'S')
                steps.push_back(Step::south);
            else if (text[i] == 'W')
                steps.push_back(Step::west);
            else
                throw std::invalid_argument("WeightedPath::parse: expected 'S'/'W'");
        }
        std::vector<int> offsets = offsets_from_steps(shape, steps);
        return WeightedPath(std::move(shape), std::move(offsets));
    }

private:
    static std::vector<int> offsets_from_steps(const Shape& shape,
                                               const std::vector<Step>& steps) {
        if ((int)steps.size() != shape.semi_perimeter())
            throw std::invalid_argument("WeightedPath: wrong number of steps");
        std::vector<int> offsets;
        int c = shape.cols();
        for (Step st : steps) {
            if (st == Step::south)
                offsets.push_back(c);
            else
                --c;
        }
        if (c != 0) throw std::invalid_argument("WeightedPath: path does not reach the corner");
        return offsets;
    }

    void derive_steps_and_labels() {
        const int k = shape_.rows();
        const int m = shape_.cols();
        steps_.clear();
        labels_.clear();
        steps_.reserve(k + m);
        labels_.reserve(k + m);
        auto part = [&](int i) { return i == 0 ? m : shape_.part(i); };  // part(0) = m
        int c = m;
        for (int level = 0; level <= k; ++level) {
            int stop = (level == k) ? 0 : offsets_[level];
            for (; c > stop; --c) {
                steps_.push_back(Step::west);
                bool on_border = shape_.part(level + 1) <= c - 1 && c <= part(level);
                labels_.push_back(on_border ? PathLabel::one : PathLabel::alpha);
            }
            if (level < k) {
                steps_.push_back(Step::south);
                labels_.push_back(offsets_[level] > 0 ? PathLabel::beta : PathLabel::one);
            }
        }
    }

    Shape shape_;
    std::vector<int> offsets_;
    std::vector<Step> steps_;
    std::vector<PathLabel> labels_;
};

inline BivarPoly path_weight(const WeightedPath& p) { return p.weight(); }

// Normal form between tableaux and paths: alphas sit at the bottoms of their
// columns, betas occupy the top rows with weakly decreasing columns going
// down. Property check names follow the defining list:
//   (i) at most one beta per row, (ii) betas fill consecutive top rows,
//   (iii) no beta southeast of another, (iv) no alpha west of a beta in its
//   row, (v) bottom-of-column cells hold an alpha whenever (iv) permits one.
struct ModifiedTableau {
    CondensedTableau grid;

    std::optional<std::string> first_property_violation() const {
        const Shape& sh = grid.shape();
        std::vector<int> beta_col(sh.rows() + 1, 0);
        int betas = 0, deepest = 0;
        for (int r = 1; r <= sh.rows(); ++r) {
            int count = 0;
            for (int c = 1; c <= sh.part(r); ++c)
                if (grid.at(r, c) == Symbol::beta) {
                    ++count;
                    beta_col[r] = c;
                }
            if (count > 1) return "(i): two betas in row " + std::to_string(r);
            if (count == 1) {
                betas += 1;
                deepest = r;
            }
        }
        if (deepest != betas) return std::string("(ii): betas not in consecutive top rows");
        for (int r = 1; r < deepest; ++r)
            if (beta_col[r + 1] > beta_col[r])
                return "(iii): beta in row " + std::to_string(r + 1) +
                       " lies southeast of the one above";
        for (int r = 1; r <= sh.rows(); ++r) {
            if (beta_col[r] == 0) continue;
            for (int c = 1; c < beta_col[r]; ++c)
                if (grid.at(r, c) == Symbol::alpha)
                    return "(iv): alpha west of the beta in row " + std::to_string(r);
        }
        for (int c = 1; c <= sh.cols(); ++c) {
            int bottom = sh.conj(c);
            if (bottom == 0) continue;
            if (grid.at(bottom, c) != Symbol::none) continue;
            bool beta_right = false;
            for (int e = c + 1; e <= sh.part(bottom); ++e)
                if (grid.at(bottom, e) == Symbol::beta) beta_right = true;
            if (!beta_right)
                return "(v): empty bottom cell of column " + std::to_string(c) +
                       " though an alpha is permitted";
        }
        return std::nullopt;
    }
    bool properties_hold() const { return !first_property_violation().has_value(); }
};

// Alphas drop to the bottoms of their columns; betas, read column right to
// left (top to bottom within a column), move to rows 1, 2, ... in order.
inline ModifiedTableau to_modified(const CondensedTableau& t) {
    if (auto v = t.first_violation())
        throw std::invalid_argument("to_modified: invalid tableau, " + v->describe());
    const Shape& sh = t.shape();
    ModifiedTableau mod{CondensedTableau(sh)};
    std::vector<std::pair<int, int>> betas;  // (col, row)
    for (int r = 1; r <= sh.rows(); ++r)
        for (int c = 1; c <= sh.part(r); ++c) {
            Symbol s = t.at(r, c);
            if (s == Symbol::alpha) mod.grid.set(sh.conj(c), c, Symbol::alpha);
            if (s == Symbol::beta) betas.emplace_back(c, r);
        }
    std::sort(betas.begin(), betas.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    for (std::size_t i = 0; i < betas.size(); ++i)
        mod.grid.set((int)i + 1, betas[i].first, Symbol::beta);
    return mod;
}

// Columns read right to left: south steps to the right of the column's
// betas, then one west step per column (labelled by its alpha, if any).
inline WeightedPath tableau_to_path(const CondensedTableau& t) {
    ModifiedTableau mod = to_modified(t);
    const Shape& sh = t.shape();
    std::vector<int> offsets(sh.rows(), 0);
    for (int r = 1; r <= sh.rows(); ++r)
        for (int c = 1; c <= sh.part(r); ++c)
            if (mod.grid.at(r, c) == Symbol::beta) offsets[r - 1] = c;
    return WeightedPath(sh, std::move(offsets));
}

// Inverse: walk the columns right to left keeping the set of free rows
// (rows with no beta so far). A column with s south steps puts betas in its
// bottom s free rows; if free rows remain, an alpha is forced in the lowest
// of them, which is exactly the west-step label of that column.
inline CondensedTableau path_to_tableau(const WeightedPath& p) {
    const Shape& sh = p.shape();
    CondensedTableau t(sh);
    const auto& x = p.south_offsets();
    std::vector<int> free_rows;  // stays ascending: rows enter in increasing order
    for (int c = sh.part(1); c >= 1; --c) {
        for (int r = sh.conj(c + 1) + 1; r <= sh.conj(c); ++r) free_rows.push_back(r);
        int betas = 0;
        for (int v : x) betas += (v == c);
        for (int i = 0; i < betas; ++i) {
            t.set(free_rows.back(), c, Symbol::beta);
            free_rows.pop_back();
        }
        if (!free_rows.empty()) t.set(free_rows.back(), c, Symbol::alpha);
    }
    return t;
}

// All constrained paths, lexicographic in the step word with south < west.
inline void enumerate_paths(const Shape& lambda,
                            const std::function<void(const WeightedPath&)>& visit) {
    const int k = lambda.rows();
    std::vector<int> offsets(k, 0);
    std::function<void(int, int)> rec = [&](int row, int c) {
        if (row == k && c == 0) {
            visit(WeightedPath(lambda, offsets));
            return;
        }
        if (row < k && c <= lambda.part(row + 1)) {
            offsets[row] = c;
            rec(row + 1, c);
        }
        if (c > 0) rec(row, c - 1);
    };
    rec(0, lambda.cols());
}

inline std::vector<WeightedPath> enumerate_paths(const Shape& lambda) {
    std::vector<WeightedPath> out;
    enumerate_paths(lambda, [&](const WeightedPath& p) { out.push_back(p); });
    return out;
}

// Sum of path weights over all constrained paths (the slow route).
inline BivarPoly path_weight_sum(const Shape& lambda) {
    BivarPoly acc;
    enumerate_paths(lambda, [&](const WeightedPath& p) { acc += p.weight(); });
    return acc;
}

}  // namespace ctab
