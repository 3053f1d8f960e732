#pragma once

// Exact bivariate polynomials in the boundary rates a (alpha) and b (beta)
// over arbitrary-precision integers. This is the value type for tableau
// weights and generating functions; rationals enter only at evaluation time.
//
// Canonical text form (grammar, whitespace insignificant):
//   poly  := term (('+'|'-') term)*
//   term  := [sign] [int] ['*'] ['a' ['^' int]] ['*'] ['b' ['^' int]]
// Terms are emitted in graded-lexicographic order: total degree descending,
// then a-degree descending.

#include "ctab/numeric.hpp"

#include "json.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctab {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
};

// Exponent pair of a monomial a^a_deg * b^b_deg.
struct Monomial {
    int a_deg = 0;
    int b_deg = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    int total() const { return a_deg + b_deg; }
};

// Orders monomials so that map iteration yields the canonical emission order.
struct GradedLexDesc {
    bool operator()(const Monomial& x, const Monomial& y) const {
        if (x.total() != y.total()) return x.total() > y.total();
        return x.a_deg > y.a_deg;
    }
};

class BivarPoly {
public:
    using TermMap = std::map<Monomial, BigInt, GradedLexDesc>;

    BivarPoly() = default;
    explicit BivarPoly(BigInt constant) {
        if (constant != 0) terms_.emplace(Monomial{0, 0}, std::move(constant));
    }
    BivarPoly(long long constant) : BivarPoly(BigInt(constant)) {}

    // a^j * b^l with the given coefficient.
    static BivarPoly mono(int j, int l, BigInt coeff = 1) {
        if (j < 0 || l < 0) throw std::invalid_argument("BivarPoly::mono: negative exponent");
        BivarPoly p;
        if (coeff != 0) p.terms_.emplace(Monomial{j, l}, std::move(coeff));
        return p;
    }
    static BivarPoly var_a() { return mono(1, 0); }
    static BivarPoly var_b() { return mono(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

    BivarPoly& operator+=(const BivarPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BivarPoly& operator-=(const BivarPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend BivarPoly operator+(BivarPoly x, const BivarPoly& y) { return x += y; }
    friend BivarPoly operator-(BivarPoly x, const BivarPoly& y) { return x -= y; }
    BivarPoly operator-() const {
        BivarPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend BivarPoly operator*(const BivarPoly& x, const BivarPoly& y) {
        BivarPoly r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_)
                r.add_term(Monomial{mx.a_deg + my.a_deg, mx.b_deg + my.b_deg}, cx * cy);
        return r;
    }
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }

    BivarPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("BivarPoly::pow: negative exponent");
        BivarPoly r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // Coefficient of a^j b^l, zero if absent.
    BigInt coeff(int j, int l) const {
        auto it = terms_.find(Monomial{j, l});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Exact value at a = av, b = bv.
    Rat eval(const Rat& av, const Rat& bv) const {
        // powers indexed by exponent; degrees stay small here
        std::vector<Rat> pa{1}, pb{1};
        auto power = [](std::vector<Rat>& cache, const Rat& base, int e) -> const Rat& {
            while ((int)cache.size() <= e) cache.push_back(cache.back() * base);
            return cache[e];
        };
        Rat acc = 0;
        for (const auto& [m, c] : terms_)
            acc += Rat(c) * power(pa, av, m.a_deg) * power(pb, bv, m.b_deg);
        return acc;
    }

    // Exact quotient by the monomial a^j b^l; every term must be divisible.
    BivarPoly shift_divide(int j, int l) const {
        BivarPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.a_deg < j || m.b_deg < l)
                throw std::domain_error("BivarPoly::shift_divide: monomial does not divide");
            r.terms_.emplace(Monomial{m.a_deg - j, m.b_deg - l}, c);
        }
        return r;
    }

    int total_degree() const {  // -1 for the zero polynomial
        return terms_.empty() ? -1 : terms_.begin()->first.total();
    }
    int max_a_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.a_deg);
        return d;
    }
    int max_b_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.b_deg);
        return d;
    }
    int min_total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_)
            if (d < 0 || m.total() < d) d = m.total();
        return d;
    }
    bool has_negative_coeff() const {
        for (const auto& [m, c] : terms_)
            if (c < 0) return true;
        return false;
    }

    std::string format() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool has_vars = m.a_deg > 0 || m.b_deg > 0;
            bool wrote = false;
            if (!has_vars || mag != 1) {
                os << mag.str();
                wrote = true;
            }
            if (m.a_deg > 0) {
                if (wrote) os << "*";
                os << "a";
                if (m.a_deg > 1) os << "^" << m.a_deg;
                wrote = true;
            }
            if (m.b_deg > 0) {
                if (wrote) os << "*";
                os << "b";
                if (m.b_deg > 1) os << "^" << m.b_deg;
            }
        }
        return os.str();
    }

    static BivarPoly parse(const std::string& text);

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [m, c] : terms_)
            arr.push_back({{"a", m.a_deg}, {"b", m.b_deg}, {"c", c.str()}});
        return nlohmann::json{{"terms", arr}};
    }
    static BivarPoly from_json(const nlohmann::json& j) {
        BivarPoly p;
        for (const auto& t : j.at("terms"))
            p.add_term(Monomial{t.at("a").get<int>(), t.at("b").get<int>()},
                       BigInt(t.at("c").get<std::string>()));
        return p;
    }

private:
    void add_term(const Monomial& m, BigInt c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;  // no zero coefficients stored
};

// Univariate polynomial in q with big-integer coefficients; used for the
// q-specializations. Coefficients ascending by degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

    static UniPoly from_descending(std::vector<BigInt> desc) {
        std::vector<BigInt> asc(desc.rbegin(), desc.rend());
        return UniPoly(std::move(asc));
    }

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero

    BigInt coeff(int d) const {
        return (d >= 0 && d < (int)c_.size()) ? c_[d] : BigInt(0);
    }

    int min_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return (int)i;
        return -1;
    }

    // Quotient by q^s; all lower coefficients must vanish.
    UniPoly shift_down(int s) const {
        if (s == 0) return *this;
        if (min_degree() < s) throw std::domain_error("UniPoly::shift_down: not divisible");
        return UniPoly(std::vector<BigInt>(c_.begin() + s, c_.end()));
    }

    void add_to(int d, const BigInt& v) {
        if ((int)c_.size() <= d) c_.resize(d + 1, BigInt(0));
        c_[d] += v;
        trim();
    }

    Rat eval(const Rat& q) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Rat(*it);
        return acc;
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Table-style text: descending powers, e.g. "2q^5 + 3q^4 + 6q + 1".
    std::string format() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = (int)c_.size() - 1; d >= 0; --d) {
            if (c_[d] == 0) continue;
            BigInt mag = c_[d] < 0 ? BigInt(-c_[d]) : c_[d];
            if (first) {
                if (c_[d] < 0) os << "-";
                first = false;
            } else {
                os << (c_[d] < 0 ? " - " : " + ");
            }
            if (d == 0 || mag != 1) os << mag.str();
            if (d >= 1) {
                os << "q";
                if (d > 1) os << "^" << d;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

enum class QSubst { qq, q1, one_q };

inline QSubst qsubst_from_string(const std::string& s) {
    if (s == "qq") return QSubst::qq;
    if (s == "q1") return QSubst::q1;
    if (s == "1q") return QSubst::one_q;
    throw std::invalid_argument("qsubst_from_string: expected qq, q1 or 1q");
}

// Image of p under a=q,b=q / a=q,b=1 / a=1,b=q.
inline UniPoly substitute(const BivarPoly& p, QSubst mode) {
    UniPoly u;
    for (const auto& [m, c] : p.terms()) {
        int d = 0;
        switch (mode) {
            case QSubst::qq: d = m.a_deg + m.b_deg; break;
            case QSubst::q1: d = m.a_deg; break;
            case QSubst::one_q: d = m.b_deg; break;
        }
        u.add_to(d, c);
    }
    return u;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    BivarPoly run() {
        BivarPoly acc;
        skip_ws();
        if (eof()) throw ParseError("empty polynomial", 0);
        bool negative = eat_sign();
        acc += term(negative);
        skip_ws();
        while (!eof()) {
            std::size_t at = pos_;
            char c = s_[pos_];
            bool neg;
            if (c == '+') {
                neg = false;
                ++pos_;
            } else if (c == '-') {
                neg = true;
                ++pos_;
            } else if (is_minus_sign_utf8()) {
                neg = true;
                pos_ += 3;
            } else {
                throw ParseError("expected '+' or '-' between terms", at);
            }
            acc += term(neg);
            skip_ws();
        }
        return acc;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!eof() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool is_minus_sign_utf8() const {  // U+2212
        return pos_ + 2 < s_.size() && (unsigned char)s_[pos_] == 0xE2 &&
               (unsigned char)s_[pos_ + 1] == 0x88 && (unsigned char)s_[pos_ + 2] == 0x92;
    }
    bool eat_sign() {
        skip_ws();
        if (eof()) return false;
        if (s_[pos_] == '+') {
            ++pos_;
            return false;
        }
        if (s_[pos_] == '-') {
            ++pos_;
            return true;
        }
        if (is_minus_sign_utf8()) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    BigInt integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", start);
        return BigInt(s_.substr(start, pos_ - start));
    }

    int exponent() {
        skip_ws();
        if (!eof() && s_[pos_] == '^') {
            ++pos_;
            BigInt e = integer();
            if (e > 1000000) throw ParseError("exponent too large", pos_);
            return (int)e.convert_to<long long>();
        }
        return 1;
    }

    void eat_optional_star() {
        skip_ws();
        if (!eof() && s_[pos_] == '*') ++pos_;
    }

    BivarPoly term(bool negative) {
        skip_ws();
        std::size_t start = pos_;
        BigInt coeff = 1;
        bool any = false;
        if (!eof() && std::isdigit((unsigned char)s_[pos_])) {
            coeff = integer();
            any = true;
            eat_optional_star();
        }
        int ja = 0, lb = 0;
        skip_ws();
        if (!eof() && s_[pos_] == 'a') {
            ++pos_;
            ja = exponent();
            any = true;
            eat_optional_star();
        }
        skip_ws();
        if (!eof() && s_[pos_] == 'b') {
            ++pos_;
            lb = exponent();
            any = true;
        }
        if (!any) throw ParseError("expected term", start);
        if (negative) coeff = -coeff;
        return BivarPoly::mono(ja, lb, coeff);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline BivarPoly BivarPoly::parse(const std::string& text) {
    return detail::PolyParser(text).run();
}

}  // namespace ctab
