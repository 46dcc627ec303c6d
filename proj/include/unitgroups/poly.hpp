#pragma once

// Polynomial utilities: dense univariate polynomials over a coefficient
// ring (lowest degree first, no trailing zeros), cyclotomic polynomials
// Phi_{p^k}, and content/primitive-part splitting over Z.

#include "unitgroups/gaussian.hpp"
#include "unitgroups/ints.hpp"

#include <numeric>
#include <vector>

namespace unitgroups {

template <typename T>
struct Poly {
    std::vector<T> c;  // c[j] is the coefficient of x^j

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == T{}) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const T& leading() const { return c.back(); }

    T coeff(int j) const { return j >= 0 && j < static_cast<int>(c.size()) ? c[j] : T{}; }

    Poly operator+(const Poly& o) const {
        std::vector<T> out(std::max(c.size(), o.c.size()), T{});
        for (size_t j = 0; j < c.size(); ++j) out[j] = out[j] + c[j];
        for (size_t j = 0; j < o.c.size(); ++j) out[j] = out[j] + o.c[j];
        return Poly(std::move(out));
    }

    Poly operator-() const {
        std::vector<T> out = c;
        for (auto& v : out) v = T{} - v;
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> out(c.size() + o.c.size() - 1, T{});
        for (size_t a = 0; a < c.size(); ++a) {
            if (c[a] == T{}) continue;
            for (size_t b = 0; b < o.c.size(); ++b)
                out[a + b] = add_mul_strict(out[a + b], c[a], o.c[b]);
        }
        return Poly(std::move(out));
    }

    Poly scaled(const T& s) const {
        std::vector<T> out = c;
        for (auto& v : out) v = mul_strict(v, s);
        return Poly(std::move(out));
    }

    Poly shifted(int k) const {  // multiply by x^k
        if (is_zero()) return Poly();
        std::vector<T> out(c.size() + k, T{});
        for (size_t j = 0; j < c.size(); ++j) out[j + k] = c[j];
        return Poly(std::move(out));
    }

    T eval(const T& x) const {
        T acc{};
        for (size_t j = c.size(); j-- > 0;) acc = add_mul_strict(c[j], acc, x);
        return acc;
    }

    bool operator==(const Poly& o) const = default;
};

using IntPolynomial = Poly<i64>;

// Remainder of f modulo a monic divisor m (leading coefficient must be 1).
template <typename T>
Poly<T> poly_mod_monic(Poly<T> f, const Poly<T>& m) {
    if (m.is_zero() || !(m.leading() == T{1}))
        throw std::invalid_argument("poly_mod_monic: modulus must be monic");
    while (f.degree() >= m.degree()) {
        T lead = f.leading();
        int shift = f.degree() - m.degree();
        f = f - m.shifted(shift).scaled(lead);
        if (f.degree() >= m.degree() + shift)
            throw std::logic_error("poly_mod_monic: reduction failed to lower the degree");
    }
    return f;
}

// Phi_{p^k}(x) = sum_{j<p} x^(j p^(k-1)), the p^k-th cyclotomic polynomial.
inline IntPolynomial cyclotomic(i64 p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("cyclotomic: p must be prime");
    if (k < 1) throw std::invalid_argument("cyclotomic: k must be >= 1");
    i64 step = checked_pow(p, k - 1);
    i64 deg = checked_mul(step, p - 1);
    std::vector<i64> c(static_cast<size_t>(deg) + 1, 0);
    for (i64 j = 0; j < p; ++j) c[static_cast<size_t>(j * step)] = 1;
    return IntPolynomial(std::move(c));
}

// f = content * primitive with content > 0 and primitive of content 1.
inline std::pair<i64, IntPolynomial> content_primitive(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("content_primitive: zero polynomial");
    i64 g = 0;
    for (i64 v : f.c) g = std::gcd(g, v < 0 ? -v : v);
    std::vector<i64> out = f.c;
    for (auto& v : out) v /= g;
    return {g, IntPolynomial(std::move(out))};
}

// ---------------------------------------------------------------------------
// Bivariate polynomials over Z[i] in the variables x, y, used to state
// quotient-ring presentations.  Terms are kept sparse as (deg_x, deg_y)
// -> coefficient.

struct BiPoly {
    std::map<std::pair<int, int>, GaussianInt> terms;

    static BiPoly constant(const GaussianInt& c) {
        BiPoly p;
        if (!c.is_zero()) p.terms[{0, 0}] = c;
        return p;
    }
    static BiPoly var_x() {
        BiPoly p;
        p.terms[{1, 0}] = GaussianInt{1};
        return p;
    }
    static BiPoly var_y() {
        BiPoly p;
        p.terms[{0, 1}] = GaussianInt{1};
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(int dx, int dy, const GaussianInt& c) {
        auto it = terms.find({dx, dy});
        GaussianInt v = (it == terms.end() ? GaussianInt{} : it->second) + c;
        if (v.is_zero()) {
            if (it != terms.end()) terms.erase(it);
        } else {
            terms[{dx, dy}] = v;
        }
    }

    BiPoly operator+(const BiPoly& o) const {
        BiPoly out = *this;
        for (auto& [d, c] : o.terms) out.add_term(d.first, d.second, c);
        return out;
    }
    BiPoly operator-(const BiPoly& o) const {
        BiPoly out = *this;
        for (auto& [d, c] : o.terms) out.add_term(d.first, d.second, -c);
        return out;
    }
    BiPoly operator*(const BiPoly& o) const {
        BiPoly out;
        for (auto& [d1, c1] : terms)
            for (auto& [d2, c2] : o.terms)
                out.add_term(d1.first + d2.first, d1.second + d2.second, c1 * c2);
        return out;
    }

    int degree_y() const {
        int d = -1;
        for (auto& [deg, c] : terms) d = std::max(d, deg.second);
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (auto& [deg, c] : terms) d = std::max(d, deg.first);
        return d;
    }

    bool uses_y() const { return degree_y() > 0; }

    // Substitute y := s(x); the result must be univariate in x.
    BiPoly substitute_y(const BiPoly& s) const {
        BiPoly out;
        for (auto& [deg, c] : terms) {
            BiPoly term = BiPoly::constant(c);
            for (int j = 0; j < deg.first; ++j) term = term * BiPoly::var_x();
            for (int j = 0; j < deg.second; ++j) term = term * s;
            out = out + term;
        }
        return out;
    }

    // View as univariate in x (requires degree_y <= 0).
    Poly<GaussianInt> univariate_x() const {
        if (uses_y()) throw std::invalid_argument("polynomial still involves y");
        std::vector<GaussianInt> c(static_cast<size_t>(std::max(degree_x(), -1) + 1));
        for (auto& [deg, coeff] : terms) c[static_cast<size_t>(deg.first)] = coeff;
        return Poly<GaussianInt>(std::move(c));
    }

    // Swap the roles of x and y.
    BiPoly swapped_vars() const {
        BiPoly out;
        for (auto& [deg, c] : terms) out.terms[{deg.second, deg.first}] = c;
        return out;
    }
};

// Parser for presentation expressions: integers, 'i', 'x', 'y', + - * ^
// and parentheses; juxtaposition multiplies ("(1+i)y").
class PolyExprParser {
public:
    static BiPoly parse(const std::string& text) {
        PolyExprParser p(text);
        BiPoly out = p.parse_sum();
        p.skip_ws();
        if (p.pos_ != p.s_.size()) throw std::invalid_argument("trailing input in expression: " + text);
        return out;
    }

private:
    explicit PolyExprParser(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    BiPoly parse_sum() {
        BiPoly acc = BiPoly::constant(GaussianInt{0});
        bool first = true;
        int sign = 1;
        for (;;) {
            skip_ws();
            if (first) {
                if (eat('-')) sign = -1;
                else eat('+');
                first = false;
            }
            BiPoly t = parse_product();
            acc = sign < 0 ? acc - t : acc + t;
            skip_ws();
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
        }
        return acc;
    }

    BiPoly parse_product() {
        BiPoly acc = parse_power();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc = acc * parse_power();
                continue;
            }
            // implicit multiplication before '(', 'i', 'x', 'y' or a digit
            if (pos_ < s_.size()) {
                char c = s_[pos_];
                if (c == '(' || c == 'i' || c == 'x' || c == 'y' ||
                    std::isdigit(static_cast<unsigned char>(c))) {
                    acc = acc * parse_power();
                    continue;
                }
            }
            break;
        }
        return acc;
    }

    BiPoly parse_power() {
        BiPoly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw std::invalid_argument("exponent must be a non-negative integer");
            int e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                e = e * 10 + (s_[pos_++] - '0');
            BiPoly out = BiPoly::constant(GaussianInt{1});
            for (int j = 0; j < e; ++j) out = out * base;
            return out;
        }
        return base;
    }

    BiPoly parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw std::invalid_argument("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly inner = parse_sum();
            if (!eat(')')) throw std::invalid_argument("missing ')'");
            return inner;
        }
        if (c == '-') { ++pos_; return BiPoly::constant(GaussianInt{0}) - parse_power(); }
        if (c == 'i') { ++pos_; return BiPoly::constant(GaussianInt{0, 1}); }
        if (c == 'x') { ++pos_; return BiPoly::var_x(); }
        if (c == 'y') { ++pos_; return BiPoly::var_y(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            i64 v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = checked_add(checked_mul(v, 10), s_[pos_++] - '0');
            return BiPoly::constant(GaussianInt{v});
        }
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in expression");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace unitgroups
