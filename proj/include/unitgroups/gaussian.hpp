#pragma once

// Exact arithmetic and factorization in Z[i].  Division rounds each
// coordinate of a/b to the nearest integer, so norm(r) <= norm(b)/2.
// Canonical associate: re > 0 and re >= |im|, ties broken by im >= 0;
// this makes 1+i the canonical prime over 2 and factorizations unique.
//
// Serialized form: "a+bi" / "a-bi" with omitted parts allowed ("i", "3",
// "-2i").

#include "unitgroups/abelian.hpp"
#include "unitgroups/ints.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace unitgroups {

struct GaussianInt {
    i64 re = 0;
    i64 im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(i64 r) : re(r), im(0) {}
    constexpr GaussianInt(i64 r, i64 i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    i64 norm() const {
        return checked_narrow(i128(re) * re + i128(im) * im, "Gaussian norm");
    }

    GaussianInt conj() const { return {re, -im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt mul_i() const { return {-im, re}; }

    GaussianInt operator+(const GaussianInt& w) const {
        return {checked_add(re, w.re), checked_add(im, w.im)};
    }
    GaussianInt operator-(const GaussianInt& w) const {
        return {checked_add(re, -w.re), checked_add(im, -w.im)};
    }
    GaussianInt operator*(const GaussianInt& w) const {
        return {checked_narrow(i128(re) * w.re - i128(im) * w.im, "Gaussian product"),
                checked_narrow(i128(re) * w.im + i128(im) * w.re, "Gaussian product")};
    }

    bool operator==(const GaussianInt& w) const = default;
    auto operator<=>(const GaussianInt& w) const = default;
};

// Nearest-integer rounding of num/den, den != 0; any tie direction keeps
// |num/den - q| <= 1/2.
inline i64 round_div(i64 num, i64 den) {
    i64 q = num / den, r = num % den;
    if (r == 0) return q;
    i64 ad = std::abs(den);
    if (2 * std::abs(r) > ad) q += (num > 0) == (den > 0) ? 1 : -1;
    return q;
}

inline std::pair<GaussianInt, GaussianInt> divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::invalid_argument("Gaussian division by zero");
    i64 n = b.norm();
    i128 xr = i128(a.re) * b.re + i128(a.im) * b.im;
    i128 xi = i128(a.im) * b.re - i128(a.re) * b.im;
    GaussianInt q{round_div(checked_narrow(xr, "divmod"), n),
                  round_div(checked_narrow(xi, "divmod"), n)};
    GaussianInt r = a - q * b;
    return {q, r};
}

inline bool divides(const GaussianInt& d, const GaussianInt& a) {
    return divmod(a, d).second.is_zero();
}

inline GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// Returns (associate, unit) with z = unit * associate and associate in
// the canonical class.
inline std::pair<GaussianInt, GaussianInt> canonical_associate(const GaussianInt& z) {
    if (z.is_zero()) return {z, GaussianInt{1}};
    GaussianInt cand = z, unit{1};
    for (int j = 0; j < 4; ++j) {
        bool ok = cand.re > 0 && cand.re > std::abs(cand.im);
        bool tie = cand.re > 0 && cand.re == std::abs(cand.im) && cand.im >= 0;
        if (ok || tie) return {cand, unit};
        // i * cand means z = (unit * -i) * (i * cand)
        cand = cand.mul_i();
        unit = unit * GaussianInt{0, -1};
    }
    throw std::logic_error("canonical_associate: no associate matched");
}

struct GaussianFactorization {
    GaussianInt unit;  // one of 1, -1, i, -i
    std::vector<std::pair<GaussianInt, int>> factors;  // canonical primes, pairwise non-associate

    GaussianInt value() const {
        GaussianInt v = unit;
        for (auto& [p, e] : factors)
            for (int j = 0; j < e; ++j) v = v * p;
        return v;
    }
};

// Canonical factorization of z != 0.  Rational primes p = 1 (mod 4) are
// split by searching x^2 + y^2 = p; p = 3 (mod 4) are inert; 2 = -i(1+i)^2.
inline GaussianFactorization factor(GaussianInt z) {
    if (z.is_zero()) throw std::invalid_argument("cannot factor zero");
    GaussianFactorization out;
    for (auto& [p, v] : factorize(z.norm())) {
        if (p == 2) {
            GaussianInt pi{1, 1};
            int e = 0;
            while (divides(pi, z)) { z = divmod(z, pi).first; ++e; }
            if (e) out.factors.push_back({pi, e});
        } else if (p % 4 == 3) {
            GaussianInt pi{p, 0};
            int e = 0;
            while (divides(pi, z)) { z = divmod(z, pi).first; ++e; }
            if (e) out.factors.push_back({pi, e});
        } else {
            if (p > i64(4) << 40)
                throw bound_error("split-prime search: prime too large for x^2+y^2 scan");
            i64 x = 1, y = -1;
            for (; x * x * 2 <= p; ++x) {
                i64 y2 = p - x * x;
                i64 r = static_cast<i64>(std::sqrt(static_cast<double>(y2)));
                while (r * r < y2) ++r;
                while (r * r > y2) --r;
                if (r * r == y2) { y = r; break; }
            }
            if (y < 0) throw std::logic_error("no two-square representation found for p = 1 mod 4");
            for (GaussianInt pi : {canonical_associate(GaussianInt{x, y}).first,
                                   canonical_associate(GaussianInt{x, -y}).first}) {
                int e = 0;
                while (divides(pi, z)) { z = divmod(z, pi).first; ++e; }
                if (e) out.factors.push_back({pi, e});
            }
        }
    }
    if (!z.is_unit()) throw std::logic_error("factor: residual is not a unit");
    out.unit = z;
    std::sort(out.factors.begin(), out.factors.end(), [](auto& a, auto& b) {
        return std::tuple(a.first.norm(), a.first.re, a.first.im) <
               std::tuple(b.first.norm(), b.first.re, b.first.im);
    });
    return out;
}

// Additive group of Z[i]/(z) for z neither zero nor a unit, assembled
// prime power by prime power:
//   pi over p = 1 (mod 4), exponent h : Z/p^h
//   inert p = 3 (mod 4),   exponent h : Z/p^h x Z/p^h
//   (1+i)^h                           : (Z/2^k)^2 if h = 2k,
//                                       Z/2^(k+1) x Z/2^k if h = 2k+1
inline AbelianGroup quotient_additive_structure(const GaussianInt& z) {
    if (z.is_zero()) throw std::invalid_argument("quotient by zero");
    if (z.is_unit()) throw std::invalid_argument("quotient by a unit is trivial");
    std::vector<i64> orders;
    for (auto& [pi, h] : factor(z).factors) {
        i64 n = pi.norm();
        if (n == 2) {
            int k = h / 2;
            if (h % 2 == 0) {
                orders.push_back(checked_pow(2, k));
                orders.push_back(checked_pow(2, k));
            } else {
                orders.push_back(checked_pow(2, k + 1));
                orders.push_back(checked_pow(2, k));
            }
        } else if (is_prime(n)) {
            orders.push_back(checked_pow(n, h));  // split prime
        } else {
            orders.push_back(checked_pow(pi.re, h));  // inert: pi = p
            orders.push_back(checked_pow(pi.re, h));
        }
    }
    return AbelianGroup::from_orders(orders);
}

inline std::string gaussian_str(const GaussianInt& z) {
    if (z.is_zero()) return "0";
    std::string s;
    if (z.re != 0) s += std::to_string(z.re);
    if (z.im != 0) {
        if (z.im > 0 && z.re != 0) s += "+";
        if (z.im == -1) s += "-";
        else if (z.im != 1) s += std::to_string(z.im);
        s += "i";
    }
    return s;
}

inline GaussianInt parse_gaussian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty Gaussian integer");
    GaussianInt z;
    size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        i64 sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= s.size()) throw std::invalid_argument("dangling sign in Gaussian integer");
        i64 mag = 1;
        bool digits = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            mag = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                mag = checked_add(checked_mul(mag, 10), s[pos] - '0');
                ++pos;
            }
            digits = true;
        }
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
            ++pos;
            z.im = checked_add(z.im, sign * mag);
        } else if (digits) {
            z.re = checked_add(z.re, sign * mag);
        } else {
            throw std::invalid_argument("malformed Gaussian integer: " + text);
        }
        any = true;
    }
    if (!any) throw std::invalid_argument("malformed Gaussian integer: " + text);
    return z;
}

} // namespace unitgroups
