#pragma once

// Exact sparse Laurent polynomials over Q in the indexed variable
// families x1,x2,..., y1,y2,..., z1,z2,...  Coefficients are
// arbitrary-precision rationals, exponents are signed integers.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "escalier/errors.hpp"

namespace escalier {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline char family_letter(Family f) {
    switch (f) {
        case Family::X: return 'x';
        case Family::Y: return 'y';
        default: return 'z';
    }
}

struct Variable {
    Family family{Family::X};
    int index{1}; // >= 1

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable x(int i) { return {Family::X, i}; }
inline Variable y(int i) { return {Family::Y, i}; }
inline Variable z(int i) { return {Family::Z, i}; }

inline std::string to_string(Variable v) {
    return family_letter(v.family) + std::to_string(v.index);
}

// Exponent map with no zero entries.
class Monomial {
public:
    Monomial() = default;

    static Monomial of(Variable v, int e = 1) {
        Monomial m;
        m.multiply_by(v, e);
        return m;
    }

    int exponent(Variable v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }

    void multiply_by(Variable v, int e) {
        if (e == 0) return;
        auto [it, inserted] = exps_.emplace(v, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) exps_.erase(it);
        }
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exps_) r.multiply_by(v, e);
        return r;
    }

    Monomial inverse() const {
        Monomial r;
        for (auto& [v, e] : exps_) r.exps_.emplace(v, -e);
        return r;
    }

    Monomial pow(int k) const {
        Monomial r;
        if (k == 0) return r;
        for (auto& [v, e] : exps_) r.exps_.emplace(v, e * k);
        return r;
    }

    bool is_unit() const { return exps_.empty(); }

    int total_degree() const {
        int d = 0;
        for (auto& [v, e] : exps_) d += e;
        return d;
    }

    const std::map<Variable, int>& exponents() const { return exps_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exps_ < b.exps_;
    }

private:
    std::map<Variable, int> exps_;
};

// Graded-lex, used for deterministic rendering: higher total degree
// first, ties broken lexicographically on the exponent vector.
inline bool graded_lex_greater(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    auto ia = a.exponents().begin(), ea = a.exponents().end();
    auto ib = b.exponents().begin(), eb = b.exponents().end();
    while (ia != ea || ib != eb) {
        if (ia == ea) return false;         // a ran out: b has a variable left
        if (ib == eb) return true;
        if (ia->first != ib->first) {
            // the earlier variable is present in one monomial only; a positive
            // exponent there sorts it in front
            if (ia->first < ib->first) return ia->second > 0;
            return ib->second < 0;
        }
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia, ++ib;
    }
    return false;
}

enum class Format { Text, Latex };

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) {
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(Variable v) { terms_.emplace(Monomial::of(v), Rational(1)); }

    static LaurentPoly term(const Monomial& m, const Rational& c) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(int k) const {
        if (k < 0) {
            if (terms_.size() != 1)
                throw DivisionByZero("negative power of a non-monomial polynomial");
            auto& [m, c] = *terms_.begin();
            if (c == 0) throw DivisionByZero("negative power of zero");
            Rational cp(1);
            for (int i = 0; i < -k; ++i) cp *= c;
            return term(m.pow(k), Rational(1) / cp);
        }
        LaurentPoly r(1);
        LaurentPoly base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // max / min exponent of a single variable over all terms
    int max_exponent(Variable v) const {
        int m = 0;
        for (auto& [mon, c] : terms_) m = std::max(m, mon.exponent(v));
        return m;
    }
    int min_exponent(Variable v) const {
        int m = 0;
        for (auto& [mon, c] : terms_) m = std::min(m, mon.exponent(v));
        return m;
    }

    std::vector<Variable> support() const {
        std::vector<Variable> vs;
        for (auto& [mon, c] : terms_)
            for (auto& [v, e] : mon.exponents()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

private:
    std::map<Monomial, Rational> terms_;
};

// ---------------------------------------------------------------------------
// substitution

inline LaurentPoly substitute(const LaurentPoly& p,
                              const std::map<Variable, LaurentPoly>& assignment) {
    LaurentPoly result;
    for (auto& [mon, coeff] : p.terms()) {
        LaurentPoly factor(coeff);
        Monomial untouched;
        for (auto& [v, e] : mon.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                untouched.multiply_by(v, e);
                continue;
            }
            const LaurentPoly& value = it->second;
            if (e < 0 && value.is_zero())
                throw DivisionByZero("variable " + to_string(v) +
                                     " raised to a negative power is assigned 0");
            factor *= value.pow(e);
        }
        result += factor * LaurentPoly::term(untouched, Rational(1));
    }
    return result;
}

inline LaurentPoly substitute_one(const LaurentPoly& p, Variable v,
                                  const LaurentPoly& value) {
    return substitute(p, {{v, value}});
}

// image of p under the exchange of two variables
inline LaurentPoly swap_vars(const LaurentPoly& p, Variable a, Variable b) {
    LaurentPoly r;
    for (auto& [mon, c] : p.terms()) {
        Monomial m;
        for (auto& [v, e] : mon.exponents()) {
            Variable w = v == a ? b : (v == b ? a : v);
            m.multiply_by(w, e);
        }
        r.add_term(m, c);
    }
    return r;
}

inline LaurentPoly swap_x(const LaurentPoly& p, int i) {
    return swap_vars(p, x(i), x(i + 1));
}

// ---------------------------------------------------------------------------
// exact division by a difference of two variables

// Quotient of p by (a - b); throws NotDivisible on a nonzero remainder.
inline LaurentPoly exact_div_by_difference(const LaurentPoly& p, Variable a,
                                           Variable b) {
    if (p.is_zero()) return {};
    // clear negative powers of a and b so the elimination below runs in the
    // plain polynomial ring of these two variables
    int na = -std::min(0, p.min_exponent(a));
    int nb = -std::min(0, p.min_exponent(b));
    Monomial clear;
    clear.multiply_by(a, na);
    clear.multiply_by(b, nb);
    LaurentPoly rem = LaurentPoly::term(clear, Rational(1)) * p;
    LaurentPoly quot;
    while (!rem.is_zero()) {
        // term with the highest power of a
        const Monomial* lead = nullptr;
        const Rational* lead_c = nullptr;
        int best = 0;
        for (auto& [m, c] : rem.terms()) {
            int e = m.exponent(a);
            if (lead == nullptr || e > best) {
                best = e;
                lead = &m;
                lead_c = &c;
            }
        }
        if (best <= 0) throw NotDivisible("polynomial is not a multiple of the difference");
        Monomial qm = *lead;
        qm.multiply_by(a, -1);
        Rational qc = *lead_c;
        quot.add_term(qm, qc);
        // rem -= q * (a - b)
        Monomial qa = qm, qb = qm;
        qa.multiply_by(a, 1);
        qb.multiply_by(b, 1);
        rem.add_term(qa, -qc);
        rem.add_term(qb, qc);
    }
    return LaurentPoly::term(clear.inverse(), Rational(1)) * quot;
}

inline LaurentPoly exact_div_linear(const LaurentPoly& p, int i) {
    return exact_div_by_difference(p, x(i), x(i + 1));
}

// invariance under every adjacent transposition of vars
inline bool is_symmetric_in(const LaurentPoly& p, const std::vector<Variable>& vars) {
    for (std::size_t i = 0; i + 1 < vars.size(); ++i)
        if (swap_vars(p, vars[i], vars[i + 1]) != p) return false;
    return true;
}

// ---------------------------------------------------------------------------
// rendering and parsing

namespace detail {

inline std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline void render_monomial(std::ostream& os, const Monomial& m, Format f) {
    bool first = true;
    for (auto& [v, e] : m.exponents()) {
        if (!first) os << (f == Format::Text ? "*" : " ");
        first = false;
        if (f == Format::Text) {
            os << to_string(v);
            if (e != 1) os << '^' << e;
        } else {
            os << family_letter(v.family) << "_{" << v.index << '}';
            if (e != 1) os << "^{" << e << '}';
        }
    }
}

} // namespace detail

inline std::string render(const LaurentPoly& p, Format f = Format::Text) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    for (auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
        return graded_lex_greater(a->first, b->first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : terms) {
        const Monomial& m = t->first;
        Rational c = t->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        if (m.is_unit()) {
            os << detail::rational_string(a);
        } else {
            if (a != 1) os << detail::rational_string(a) << (f == Format::Text ? "*" : " ");
            detail::render_monomial(os, m, f);
        }
    }
    return os.str();
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    LaurentPoly parse() {
        LaurentPoly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    LaurentPoly parse_sum() {
        bool neg = false;
        if (eat('-')) neg = true;
        else (void)eat('+');
        LaurentPoly p = parse_product();
        if (neg) p = -p;
        while (true) {
            if (eat('+')) p += parse_product();
            else if (eat('-')) p -= parse_product();
            else break;
        }
        return p;
    }

    LaurentPoly parse_product() {
        LaurentPoly p = parse_factor();
        while (eat('*')) p *= parse_factor();
        return p;
    }

    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    int parse_small_int() {
        bool neg = eat('-');
        Integer n = parse_integer();
        int v = static_cast<int>(n);
        return neg ? -v : v;
    }

    LaurentPoly parse_factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly p = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            Family fam = c == 'x' ? Family::X : (c == 'y' ? Family::Y : Family::Z);
            Integer idx = parse_integer();
            Variable v{fam, static_cast<int>(idx)};
            if (v.index < 1) fail("variable index must be positive");
            int e = 1;
            if (eat('^')) e = parse_small_int();
            return LaurentPoly::term(Monomial::of(v, e), Rational(1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            if (eat('/')) {
                Integer den = parse_integer();
                if (den == 0) fail("zero denominator");
                return LaurentPoly(Rational(num, den));
            }
            return LaurentPoly(Rational(num));
        }
        fail("expected a factor");
    }
};

} // namespace detail

inline LaurentPoly parse_poly(std::string_view s) {
    return detail::PolyParser(s).parse();
}

} // namespace escalier
