#pragma once

// Partitions in a bounding rectangle, occupation words of the exclusion
// process, and the dictionary between them. A word of length n with k
// particles maps to a partition with k parts (trailing zeros kept) inside a
// k x (n-k) rectangle: part i counts the holes to the right of particle i.

#include "ctab/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctab {

enum class Site : unsigned char { hole = 0, particle = 1 };

// Occupation word; serialized as '1' (particle) / '0' (hole).
class TasepState {
public:
    TasepState() = default;
    explicit TasepState(std::vector<Site> word) : word_(std::move(word)) {}

    static TasepState parse(const std::string& text) {
        std::vector<Site> w;
        w.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1')
                w.push_back(Site::particle);
            else if (text[i] == '0')
                w.push_back(Site::hole);
            else
                throw std::invalid_argument("TasepState::parse: expected '0'/'1' at position " +
                                            std::to_string(i));
        }
        return TasepState(std::move(w));
    }

    static TasepState from_bits(unsigned long long bits, int n) {
        // bit (n-1-i) holds site i+1, so the word reads like the binary string
        std::vector<Site> w(n);
        for (int i = 0; i < n; ++i)
            w[i] = ((bits >> (n - 1 - i)) & 1ull) ? Site::particle : Site::hole;
        return TasepState(std::move(w));
    }

    unsigned long long to_bits() const {
        unsigned long long bits = 0;
        for (Site s : word_) bits = (bits << 1) | (s == Site::particle ? 1ull : 0ull);
        return bits;
    }

    int size() const { return (int)word_.size(); }
    Site at(int i) const { return word_.at(i - 1); }  // sites are 1-based
    const std::vector<Site>& word() const { return word_; }

    int particles() const {
        return (int)std::count(word_.begin(), word_.end(), Site::particle);
    }
    int holes() const { return size() - particles(); }

    std::string str() const {
        std::string s;
        s.reserve(word_.size());
        for (Site x : word_) s.push_back(x == Site::particle ? '1' : '0');
        return s;
    }

    bool operator==(const TasepState&) const = default;

private:
    std::vector<Site> word_;
};

// Partition parts[0] >= ... >= parts[k-1] >= 0 with an explicit column count
// (rectangle width). Trailing zero parts are significant: the rectangle
// carries weight.
class Shape {
public:
    Shape() = default;
    Shape(std::vector<int> parts, int cols) : parts_(std::move(parts)), cols_(cols) {
        if (cols_ < 0) throw std::invalid_argument("Shape: negative column count");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Shape: negative part");
            if (parts_[i] > cols_) throw std::invalid_argument("Shape: part exceeds columns");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Shape: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return (int)parts_.size(); }  // k, zero parts included
    int cols() const { return cols_; }               // n - k
    int semi_perimeter() const { return rows() + cols_; }

    int part(int i) const {  // 1-based, 0 beyond the last row
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }

    // Number of rows of length >= c (conjugate partition), 1-based column.
    int conj(int c) const {
        int count = 0;
        for (int p : parts_)
            if (p >= c) ++count;
        return count;
    }

    int cells() const {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }

    bool cell_in_shape(int r, int c) const {
        return r >= 1 && r <= rows() && c >= 1 && c <= part(r);
    }

    bool operator==(const Shape&) const = default;

    // "3,2,2,0,0/4"; empty parts serialize as "/4".
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(parts_[i]);
        }
        s.push_back('/');
        s += std::to_string(cols_);
        return s;
    }

    static Shape parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("Shape::parse: missing '/': " + text);
        std::vector<int> parts;
        std::size_t i = 0;
        while (i < slash) {
            std::size_t j = text.find(',', i);
            if (j == std::string::npos || j > slash) j = slash;
            parts.push_back(std::stoi(text.substr(i, j - i)));
            i = j + (j < slash ? 1 : 0);
        }
        int cols = std::stoi(text.substr(slash + 1));
        return Shape(std::move(parts), cols);
    }

private:
    std::vector<int> parts_;
    int cols_ = 0;
};

enum class Step : unsigned char { south, west };

// Staircase border of a shape, read from the northeast corner of the
// rectangle to the southwest corner. South steps line up with particles.
struct BoundaryPath {
    std::vector<Step> steps;

    std::string str() const {
        std::string s;
        s.reserve(steps.size());
        for (Step st : steps) s.push_back(st == Step::south ? 'S' : 'W');
        return s;
    }
    bool operator==(const BoundaryPath&) const = default;
};

inline Shape state_to_shape(const TasepState& tau) {
    int k = tau.particles();
    int m = tau.holes();
    std::vector<int> parts;
    parts.reserve(k);
    int holes_seen = 0;
    for (int i = 1; i <= tau.size(); ++i)
        if (tau.at(i) == Site::hole) ++holes_seen;
    int behind = 0;
    for (int i = 1; i <= tau.size(); ++i) {
        if (tau.at(i) == Site::particle)
            parts.push_back(holes_seen - behind);
        else
            ++behind;
    }
    return Shape(std::move(parts), m);
}

inline TasepState shape_to_state(const Shape& lambda) {
    std::vector<Site> w;
    w.reserve(lambda.semi_perimeter());
    int prev = lambda.cols();
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int h = 0; h < prev - lambda.part(i); ++h) w.push_back(Site::hole);
        w.push_back(Site::particle);
        prev = lambda.part(i);
    }
    for (int h = 0; h < prev; ++h) w.push_back(Site::hole);
    return TasepState(std::move(w));
}

inline BoundaryPath boundary_path(const Shape& lambda) {
    TasepState tau = shape_to_state(lambda);
    BoundaryPath p;
    p.steps.reserve(lambda.semi_perimeter());
    for (Site s : tau.word())
        p.steps.push_back(s == Site::particle ? Step::south : Step::west);
    return p;
}

// Weight of the border path: a per south step, b per west step.
inline BivarPoly boundary_weight(const Shape& lambda) {
    return BivarPoly::mono(lambda.rows(), lambda.cols());
}

}  // namespace ctab
