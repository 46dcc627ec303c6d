#pragma once

// Exact 64-bit integer utilities: overflow-checked arithmetic, primality,
// factorization, prime powers.  Everything here is deterministic.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitgroups {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Raised when a configured resource limit (enumeration size, scan range,
// module rank) would be exceeded.  The CLI maps this to exit code 2.
struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

inline i64 checked_narrow(i128 v, const char* ctx = "integer") {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string("64-bit overflow: ") + ctx);
    return static_cast<i64>(v);
}

inline i64 checked_mul(i64 a, i64 b) { return checked_narrow(i128(a) * b, "product"); }
inline i64 checked_add(i64 a, i64 b) { return checked_narrow(i128(a) + b, "sum"); }

// Overflow-strict ring helpers shared by the generic linear algebra:
// exact types (GaussianInt) already check internally, plain i64 must not
// wrap silently.
template <typename T>
inline T mul_strict(const T& a, const T& b) {
    return a * b;
}
template <>
inline i64 mul_strict<i64>(const i64& a, const i64& b) {
    return checked_mul(a, b);
}

template <typename T>
inline T sub_mul_strict(const T& x, const T& q, const T& y) {
    return x - q * y;
}
template <>
inline i64 sub_mul_strict<i64>(const i64& x, const i64& q, const i64& y) {
    return checked_narrow(i128(x) - i128(q) * y, "matrix update");
}

template <typename T>
inline T add_mul_strict(const T& x, const T& q, const T& y) {
    return x + q * y;
}
template <>
inline i64 add_mul_strict<i64>(const i64& x, const i64& q, const i64& y) {
    return checked_narrow(i128(x) + i128(q) * y, "matrix update");
}

// 128-bit accumulators with explicit overflow detection, for dot
// products whose terms may individually exceed 64 bits.
inline i128 i128_add_checked(i128 a, i128 b) {
    i128 out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("128-bit accumulator");
    return out;
}

inline i128 i128_mul_checked(i128 a, i64 b) {
    i128 out;
    if (__builtin_mul_overflow(a, i128(b), &out)) throw std::overflow_error("128-bit accumulator");
    return out;
}

inline i64 checked_pow(i64 base, int e) {
    i64 r = 1;
    for (int j = 0; j < e; ++j) r = checked_mul(r, base);
    return r;
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = m > 1 ? 1 % m : 0;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = static_cast<u64>(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, static_cast<u64>(n));
        if (x == 1 || x == static_cast<u64>(n) - 1) continue;
        bool witness = true;
        for (int j = 1; j < s; ++j) {
            x = mulmod_u64(x, x, static_cast<u64>(n));
            if (x == static_cast<u64>(n) - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

inline i64 pollard_rho(i64 n) {
    if (n % 2 == 0) return 2;
    u64 un = static_cast<u64>(n);
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, un) + c) % un;
            y = (mulmod_u64(y, y, un) + c) % un;
            y = (mulmod_u64(y, y, un) + c) % un;
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, un);
        }
        if (d != un) return static_cast<i64>(d);
    }
}

inline void factor_into(i64 n, std::map<i64, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out[n] += 1; return; }
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        if (n % p == 0) {
            while (n % p == 0) { out[p] += 1; n /= p; }
            factor_into(n, out);
            return;
        }
    }
    i64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

// Prime factorization of n >= 1 as prime -> exponent.
inline std::map<i64, int> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::map<i64, int> out;
    detail::factor_into(n, out);
    return out;
}

// If n = p^k with p prime and k >= 1, reports (p, k).
inline bool is_prime_power(i64 n, i64* p_out = nullptr, int* k_out = nullptr) {
    if (n < 2) return false;
    auto f = factorize(n);
    if (f.size() != 1) return false;
    if (p_out) *p_out = f.begin()->first;
    if (k_out) *k_out = f.begin()->second;
    return true;
}

inline int valuation(i64 n, i64 p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// All descending partitions of k (k >= 0).  partitions(0) = { [] }.
inline std::vector<std::vector<int>> partitions(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) { out.push_back(cur); return; }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

} // namespace unitgroups
