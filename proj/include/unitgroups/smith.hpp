#pragma once

// Dense matrices and Smith normal form over a Euclidean domain (Z or
// Z[i]).  The elimination always pivots on the entry of minimal nonzero
// Euclidean size, which guarantees termination.  Results satisfy
// M = U * D * V with U, V invertible over the domain, and the diagonal
// of D is a divisibility chain of canonical associates.

#include "unitgroups/gaussian.hpp"
#include "unitgroups/ints.hpp"

#include <optional>
#include <vector>

namespace unitgroups {

template <typename T>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T{}) {}

    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T{1};
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix out(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const T& v = at(i, k);
                if (v == T{}) continue;
                for (int j = 0; j < o.cols; ++j)
                    out.at(i, j) = add_mul_strict(out.at(i, j), v, o.at(k, j));
            }
        return out;
    }

    bool operator==(const Matrix& o) const = default;
};

// integer matrices accumulate dot products in 128 bits: transform
// entries can be large even when the product is small
template <>
inline Matrix<i64> Matrix<i64>::operator*(const Matrix<i64>& o) const {
    Matrix<i64> out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < o.cols; ++j) {
            i128 acc = 0;
            for (int k = 0; k < cols; ++k) {
                if (at(i, k) == 0 || o.at(k, j) == 0) continue;
                acc = i128_add_checked(acc, i128(at(i, k)) * o.at(k, j));
            }
            out.at(i, j) = checked_narrow(acc, "matrix product");
        }
    return out;
}

template <typename T>
struct euclidean_traits;

template <>
struct euclidean_traits<i64> {
    static bool is_zero(i64 v) { return v == 0; }
    static u64 esize(i64 v) { return v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v); }
    static std::pair<i64, i64> divmod(i64 a, i64 b) {
        i64 q = round_div(a, b);
        return {q, a - checked_mul(q, b)};
    }
    // v = unit * canonical with canonical >= 0
    static std::pair<i64, i64> canonical(i64 v) {
        return v < 0 ? std::pair<i64, i64>{-v, -1} : std::pair<i64, i64>{v, 1};
    }
    static i64 unit_inverse(i64 u) { return u; }  // +-1 are self-inverse
};

template <>
struct euclidean_traits<GaussianInt> {
    static bool is_zero(const GaussianInt& v) { return v.is_zero(); }
    static u64 esize(const GaussianInt& v) { return static_cast<u64>(v.norm()); }
    static std::pair<GaussianInt, GaussianInt> divmod(const GaussianInt& a, const GaussianInt& b) {
        return unitgroups::divmod(a, b);
    }
    static std::pair<GaussianInt, GaussianInt> canonical(const GaussianInt& v) {
        auto [assoc, unit] = canonical_associate(v);
        return {assoc, unit};
    }
    static GaussianInt unit_inverse(const GaussianInt& u) {
        return u.im == 0 ? u : -u;  // i and -i swap, +-1 fixed
    }
};

template <typename T>
struct SmithResult {
    Matrix<T> d, u, v, u_inv, v_inv;

    std::vector<T> diagonal() const {
        std::vector<T> out;
        for (int i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d.at(i, i));
        return out;
    }
};

template <typename T>
SmithResult<T> smith_normal_form(const Matrix<T>& m) {
    using tr = euclidean_traits<T>;
    SmithResult<T> res;
    res.d = m;
    res.u = Matrix<T>::identity(m.rows);
    res.u_inv = Matrix<T>::identity(m.rows);
    res.v = Matrix<T>::identity(m.cols);
    res.v_inv = Matrix<T>::identity(m.cols);
    Matrix<T>& d = res.d;

    // Row op d_i -= q d_j propagates as u col_j += q col_i, u_inv row_i -= q row_j.
    auto row_sub = [&](int i, int j, const T& q) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = sub_mul_strict(d.at(i, c), q, d.at(j, c));
        for (int c = 0; c < d.rows; ++c)
            res.u_inv.at(i, c) = sub_mul_strict(res.u_inv.at(i, c), q, res.u_inv.at(j, c));
        for (int r = 0; r < d.rows; ++r)
            res.u.at(r, j) = add_mul_strict(res.u.at(r, j), q, res.u.at(r, i));
    };
    auto col_sub = [&](int i, int j, const T& q) {
        for (int r = 0; r < d.rows; ++r) d.at(r, i) = sub_mul_strict(d.at(r, i), q, d.at(r, j));
        for (int r = 0; r < d.cols; ++r)
            res.v_inv.at(r, i) = sub_mul_strict(res.v_inv.at(r, i), q, res.v_inv.at(r, j));
        for (int c = 0; c < d.cols; ++c)
            res.v.at(j, c) = add_mul_strict(res.v.at(j, c), q, res.v.at(i, c));
    };
    auto row_swap = [&](int i, int j) {
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < d.rows; ++c) std::swap(res.u_inv.at(i, c), res.u_inv.at(j, c));
        for (int r = 0; r < d.rows; ++r) std::swap(res.u.at(r, i), res.u.at(r, j));
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < d.cols; ++r) std::swap(res.v_inv.at(r, i), res.v_inv.at(r, j));
        for (int c = 0; c < d.cols; ++c) std::swap(res.v.at(i, c), res.v.at(j, c));
    };
    // d row_i *= w (w a unit): u col_i *= w^-1, u_inv row_i *= w.
    auto row_scale = [&](int i, const T& w) {
        T winv = tr::unit_inverse(w);
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = mul_strict(w, d.at(i, c));
        for (int c = 0; c < d.rows; ++c) res.u_inv.at(i, c) = mul_strict(w, res.u_inv.at(i, c));
        for (int r = 0; r < d.rows; ++r) res.u.at(r, i) = mul_strict(winv, res.u.at(r, i));
    };

    int nmin = std::min(d.rows, d.cols);
    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            // Minimal nonzero entry of the trailing submatrix.
            int pi = -1, pj = -1;
            u64 best = 0;
            for (int i = s; i < d.rows; ++i)
                for (int j = s; j < d.cols; ++j)
                    if (!tr::is_zero(d.at(i, j))) {
                        u64 sz = tr::esize(d.at(i, j));
                        if (pi < 0 || sz < best) { pi = i; pj = j; best = sz; }
                    }
            if (pi < 0) { s = nmin; break; }  // submatrix is zero
            if (pi != s) row_swap(s, pi);
            if (pj != s) col_swap(s, pj);

            bool clean = true;
            for (int i = s + 1; i < d.rows; ++i) {
                if (tr::is_zero(d.at(i, s))) continue;
                auto [q, r] = tr::divmod(d.at(i, s), d.at(s, s));
                row_sub(i, s, q);
                if (!tr::is_zero(r)) clean = false;
            }
            for (int j = s + 1; j < d.cols; ++j) {
                if (tr::is_zero(d.at(s, j))) continue;
                auto [q, r] = tr::divmod(d.at(s, j), d.at(s, s));
                col_sub(j, s, q);
                if (!tr::is_zero(r)) clean = false;
            }
            if (!clean) continue;  // smaller remainders appeared, re-pivot

            // Pivot must divide the rest of the submatrix for the chain.
            int bi = -1;
            for (int i = s + 1; i < d.rows && bi < 0; ++i)
                for (int j = s + 1; j < d.cols; ++j)
                    if (!tr::is_zero(tr::divmod(d.at(i, j), d.at(s, s)).second)) { bi = i; break; }
            if (bi >= 0) {
                T minus_one = T{} - T{1};
                row_sub(s, bi, minus_one);  // adds row bi to row s
                continue;
            }
            auto [assoc, unit] = tr::canonical(d.at(s, s));
            if (!(unit == T{1})) row_scale(s, tr::unit_inverse(unit));
            break;
        }
        if (s >= nmin) break;
    }
    return res;
}

} // namespace unitgroups
