#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace algsub {

/// Point of Z^2, used both as an exponent pair X^x Y^y and as a lattice
/// vector. Ordered lexicographically (x, then y).
struct ExpVec {
    long long x = 0;
    long long y = 0;

    friend auto operator<=>(const ExpVec&, const ExpVec&) = default;

    ExpVec operator+(const ExpVec& o) const { return {x + o.x, y + o.y}; }
    ExpVec operator-(const ExpVec& o) const { return {x - o.x, y - o.y}; }
    ExpVec operator-() const { return {-x, -y}; }
};

inline std::string to_string(const ExpVec& e) {
    return "(" + std::to_string(e.x) + "," + std::to_string(e.y) + ")";
}

/// 2x2 integer matrix acting on exponent vectors.
struct Mat2 {
    long long a = 1, b = 0;
    long long c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    ExpVec apply(const ExpVec& e) const { return {a * e.x + b * e.y, c * e.x + d * e.y}; }
    Mat2 inverse_unimodular() const {
        const long long s = det();
        if (s != 1 && s != -1) throw std::invalid_argument("Mat2: not unimodular");
        return {s * d, s * -b, s * -c, s * a};
    }
};

/// Single term c * X^e.x * Y^e.y, coefficient nonzero.
struct Monomial {
    ExpVec exponents;
    Int coeff;
};

/// Sparse Laurent polynomial in two variables over a RingSpec coefficient
/// domain. Terms are kept in canonical form: coefficients canonical in the
/// ring, no explicit zeros, exponent pairs ordered lexicographically. The
/// zero polynomial has an empty term map.
class LaurentPoly {
  public:
    explicit LaurentPoly(RingSpec ring) : ring_(ring) {}

    static LaurentPoly zero(RingSpec ring) { return LaurentPoly(ring); }

    static LaurentPoly constant(RingSpec ring, Int v) {
        LaurentPoly f(ring);
        f.add_term({0, 0}, std::move(v));
        return f;
    }

    static LaurentPoly one(RingSpec ring) { return constant(ring, 1); }

    static LaurentPoly monomial(RingSpec ring, Int coeff, ExpVec e) {
        LaurentPoly f(ring);
        f.add_term(e, std::move(coeff));
        return f;
    }

    const RingSpec& ring() const noexcept { return ring_; }
    const std::map<ExpVec, Int>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// All exponents have y == 0 (zero counts as univariate).
    bool is_univariate_x() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.y == 0; });
    }
    bool is_univariate_y() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.x == 0; });
    }

    Int coeff(const ExpVec& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const ExpVec& e, Int c) {
        c = ring_.canonical(std::move(c));
        if (c == 0) return;
        const auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second = ring_.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::vector<ExpVec> support() const {
        std::vector<ExpVec> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    /// Inclusive exponent ranges; require a nonzero polynomial.
    long long min_x() const { return exponent_extreme(true, true); }
    long long max_x() const { return exponent_extreme(true, false); }
    long long min_y() const { return exponent_extreme(false, true); }
    long long max_y() const { return exponent_extreme(false, false); }

    LaurentPoly operator-() const {
        LaurentPoly r(ring_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& g) {
        require_same_ring(ring_, g.ring_, "poly_add");
        for (const auto& [e, c] : g.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& g) {
        require_same_ring(ring_, g.ring_, "poly_sub");
        for (const auto& [e, c] : g.terms_) add_term(e, ring_.neg(c));
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) {
        f += g;
        return f;
    }

    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) {
        f -= g;
        return f;
    }

    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
        require_same_ring(f.ring_, g.ring_, "poly_mul");
        LaurentPoly r(f.ring_);
        for (const auto& [ef, cf] : f.terms_)
            for (const auto& [eg, cg] : g.terms_) r.add_term(ef + eg, cf * cg);
        return r;
    }

    /// Multiply by a single term in place.
    LaurentPoly& scale(const Int& c, const ExpVec& shift = {0, 0}) {
        std::map<ExpVec, Int> out;
        for (const auto& [e, v] : terms_) {
            Int w = ring_.mul(v, c);
            if (w != 0) out.emplace(e + shift, std::move(w));
        }
        terms_ = std::move(out);
        return *this;
    }

    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
        return f.ring_ == g.ring_ && f.terms_ == g.terms_;
    }

  private:
    long long exponent_extreme(bool use_x, bool want_min) const {
        if (terms_.empty()) throw std::domain_error("exponent range of the zero polynomial");
        bool first = true;
        long long best = 0;
        for (const auto& [e, c] : terms_) {
            const long long v = use_x ? e.x : e.y;
            if (first || (want_min ? v < best : v > best)) best = v;
            first = false;
        }
        return best;
    }

    RingSpec ring_;
    std::map<ExpVec, Int> terms_;
};

inline LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
inline LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

struct MonomialNormalForm {
    LaurentPoly proper;  // min X-exponent = min Y-exponent = 0
    Monomial unit;       // coefficient 1; original = unit * proper
};

/// Factor f = X^a Y^b * f' with f' proper (no negative exponents and minimal
/// exponents zero in both variables).
inline MonomialNormalForm monomial_normal_form(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("monomial_normal_form: zero polynomial");
    const ExpVec shift{f.min_x(), f.min_y()};
    LaurentPoly proper(f.ring());
    for (const auto& [e, c] : f.terms()) proper.add_term(e - shift, c);
    return {std::move(proper), Monomial{shift, Int(1)}};
}

/// Replace X by r(Y) in g. g must have no negative X-exponents and r no X
/// terms; the result is the remainder of g modulo the ideal (X - r).
inline LaurentPoly substitute_x(const LaurentPoly& g, const LaurentPoly& r) {
    require_same_ring(g.ring(), r.ring(), "substitute_x");
    if (!r.is_univariate_y()) throw std::invalid_argument("substitute_x: replacement contains X");
    if (!g.is_zero() && g.min_x() < 0)
        throw std::invalid_argument("substitute_x: negative X-exponent; normalize first");

    // powers[i] = r^i, built on demand
    std::vector<LaurentPoly> powers{LaurentPoly::one(g.ring())};
    LaurentPoly out(g.ring());
    for (const auto& [e, c] : g.terms()) {
        while (static_cast<long long>(powers.size()) <= e.x) powers.push_back(powers.back() * r);
        LaurentPoly piece = powers[static_cast<std::size_t>(e.x)];
        piece.scale(c, {0, e.y});
        out += piece;
    }
    return out;
}

/// Reduce an integer polynomial coefficientwise into F_p.
inline LaurentPoly reduce_mod_p(const LaurentPoly& f, std::uint32_t p) {
    if (f.ring().is_field()) throw std::invalid_argument("reduce_mod_p: input must be over the integers");
    LaurentPoly out(RingSpec::prime_field(p));
    for (const auto& [e, c] : f.terms()) out.add_term(e, c);
    return out;
}

/// Apply a GL_2(Z) change of variables to the exponents: X^e -> X^(M e).
/// A ring isomorphism, so factorizations are preserved.
inline LaurentPoly unimodular_change(const LaurentPoly& f, const Mat2& m) {
    const long long s = m.det();
    if (s != 1 && s != -1) throw std::invalid_argument("unimodular_change: |det| != 1");
    LaurentPoly out(f.ring());
    for (const auto& [e, c] : f.terms()) out.add_term(m.apply(e), c);
    return out;
}

// ---------------------------------------------------------------------------
// Text grammar: terms separated by '+'/'-'; a term is [coef][*][X[^e]][*][Y[^e]]
// with integer exponents possibly negative; whitespace ignored.
// ---------------------------------------------------------------------------

inline std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        std::string vars;
        if (e.x != 0) {
            vars += "X";
            if (e.x != 1) vars += "^" + std::to_string(e.x);
        }
        if (e.y != 0) {
            if (!vars.empty()) vars += "*";
            vars += "Y";
            if (e.y != 1) vars += "^" + std::to_string(e.y);
        }
        std::string term;
        if (vars.empty())
            term = mag.str();
        else if (mag == 1)
            term = vars;
        else
            term = mag.str() + "*" + vars;
        if (first)
            out += (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

namespace detail {

class PolyParser {
  public:
    PolyParser(std::string_view text, RingSpec ring) : text_(text), ring_(ring) {}

    LaurentPoly parse() {
        LaurentPoly out(ring_);
        skip_ws();
        if (at_end()) throw std::invalid_argument("polynomial parse: empty input");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            bool saw_sign = false;
            while (!at_end() && (peek() == '+' || peek() == '-')) {
                if (get() == '-') sign = -sign;
                saw_sign = true;
                skip_ws();
            }
            if (!first && !saw_sign)
                throw std::invalid_argument("polynomial parse: expected '+' or '-' before term");
            auto [e, c] = parse_term();
            out.add_term(e, sign < 0 ? Int(-c) : c);
            skip_ws();
            first = false;
        }
        return out;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Int parse_unsigned_int() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        if (digits.empty()) throw std::invalid_argument("polynomial parse: expected digits");
        return Int(digits);
    }

    long long parse_signed_ll() {
        skip_ws();
        long long sign = 1;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (get() == '-') sign = -1;
        }
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        if (digits.empty()) throw std::invalid_argument("polynomial parse: expected exponent");
        return sign * std::stoll(digits);
    }

    std::pair<ExpVec, Int> parse_term() {
        Int coeff(1);
        ExpVec e{0, 0};
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coeff *= parse_unsigned_int();
                saw_factor = true;
            } else if (ch == 'X' || ch == 'Y') {
                get();
                long long exp = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    get();
                    exp = parse_signed_ll();
                }
                (ch == 'X' ? e.x : e.y) += exp;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                continue;
            }
            // juxtaposition such as "2X" is accepted; a bare second number is not
            if (!at_end() && (peek() == 'X' || peek() == 'Y')) continue;
            break;
        }
        if (!saw_factor) throw std::invalid_argument("polynomial parse: expected a term");
        return {e, coeff};
    }

    std::string_view text_;
    RingSpec ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly parse_poly(std::string_view text, RingSpec ring) {
    return detail::PolyParser(text, ring).parse();
}

}  // namespace algsub
