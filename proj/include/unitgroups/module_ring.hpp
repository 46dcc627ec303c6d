#pragma once

// ModuleRing: a commutative ring presented as a finitely generated
// Z-module with structure constants and an additive relation lattice.
// This is the working representation behind every oracle computation.
//
// Elements are integer coordinate vectors; two vectors represent the
// same ring element iff their difference lies in the relation lattice.
// The lattice is diagonalized once (Smith normal form), which yields a
// canonical representative for every coset and a mixed-radix index for
// enumerating finite rings.
//
// Construction validates: identity, commutativity, stability of the
// relation lattice under multiplication, and associativity (exhaustive
// for rank <= 64, 10^5 deterministic samples above).

#include "unitgroups/presentation.hpp"
#include "unitgroups/smith.hpp"

#include <random>
#include <unordered_map>

namespace unitgroups {

constexpr int kMaxModuleRank = 160;

struct ModuleRing {
    int rank = 0;
    std::vector<i64> mult_table;  // structure constants, (i*rank + j)*rank + l
    Matrix<i64> relations;        // rows span the additive relation lattice
    std::vector<i64> one;
    std::vector<std::vector<i64>> nil_ideal_gens;      // ideal generators of the nilradical
    std::vector<std::vector<i64>> quotient_unit_lifts; // lifts of (A/N)^*, char-0 families

    // provenance (display + oracle dispatch)
    BaseRing base = BaseRing::Z;
    i64 base_modulus = 0;
    Family family = Family::NilpotentExtension;
    int an_index = 0;
    int base_rank = 0;  // rank over the base ring (= rank for Z bases)
    std::string label;

    // derived lattice data
    std::vector<i64> diag;  // per U-coordinate: 0 marks a free coordinate
    Matrix<i64> lat_u, lat_u_inv;
    bool additive_finite = false;
    i64 additive_order = 0;

    const i64* structure_row(int i, int j) const {
        return &mult_table[(static_cast<size_t>(i) * rank + j) * rank];
    }

    void mult_into(const std::vector<i64>& a, const std::vector<i64>& b,
                   std::vector<i64>& out) const {
        static thread_local std::vector<i128> acc;
        acc.assign(static_cast<size_t>(rank), 0);
        for (int i = 0; i < rank; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < rank; ++j) {
                if (b[static_cast<size_t>(j)] == 0) continue;
                i128 coef = i128(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)];
                const i64* row = structure_row(i, j);
                for (int l = 0; l < rank; ++l)
                    if (row[l])
                        acc[static_cast<size_t>(l)] =
                            i128_add_checked(acc[static_cast<size_t>(l)], i128_mul_checked(coef, row[l]));
            }
        }
        out.resize(static_cast<size_t>(rank));
        for (int l = 0; l < rank; ++l)
            out[static_cast<size_t>(l)] = checked_narrow(acc[static_cast<size_t>(l)], "ring product");
    }

    std::vector<i64> mult(const std::vector<i64>& a, const std::vector<i64>& b) const {
        std::vector<i64> out;
        mult_into(a, b, out);
        return canonical(out);
    }

    // Coordinates in the diagonalizing basis, reduced modulo the lattice;
    // equal cosets have equal reduced coordinates.
    std::vector<i64> reduced_coords(const std::vector<i64>& v) const {
        std::vector<i64> y(static_cast<size_t>(rank));
        for (int l = 0; l < rank; ++l) {
            i128 acc = 0;
            for (int c = 0; c < rank; ++c)
                acc = i128_add_checked(acc, i128(lat_u_inv.at(l, c)) * v[static_cast<size_t>(c)]);
            i64 val = checked_narrow(acc, "coset coordinates");
            i64 d = diag[static_cast<size_t>(l)];
            if (d > 0) val = ((val % d) + d) % d;
            y[static_cast<size_t>(l)] = val;
        }
        return y;
    }

    std::vector<i64> from_reduced(const std::vector<i64>& y) const {
        std::vector<i64> v(static_cast<size_t>(rank));
        for (int l = 0; l < rank; ++l) {
            i128 acc = 0;
            for (int c = 0; c < rank; ++c)
                acc = i128_add_checked(acc, i128(lat_u.at(l, c)) * y[static_cast<size_t>(c)]);
            v[static_cast<size_t>(l)] = checked_narrow(acc, "coset representative");
        }
        return v;
    }

    std::vector<i64> canonical(const std::vector<i64>& v) const { return from_reduced(reduced_coords(v)); }

    bool is_zero_element(const std::vector<i64>& v) const {
        for (i64 x : reduced_coords(v))
            if (x != 0) return false;
        return true;
    }

    bool same_element(const std::vector<i64>& a, const std::vector<i64>& b) const {
        return reduced_coords(a) == reduced_coords(b);
    }

    std::vector<i64> basis_element(int i) const {
        std::vector<i64> v(static_cast<size_t>(rank), 0);
        v[static_cast<size_t>(i)] = 1;
        return v;
    }

    std::vector<i64> zero() const { return std::vector<i64>(static_cast<size_t>(rank), 0); }

    static std::vector<i64> zero_raw(int k) { return std::vector<i64>(static_cast<size_t>(k), 0); }

    std::vector<i64> add(const std::vector<i64>& a, const std::vector<i64>& b) const {
        std::vector<i64> out(static_cast<size_t>(rank));
        for (int l = 0; l < rank; ++l)
            out[static_cast<size_t>(l)] = checked_add(a[static_cast<size_t>(l)], b[static_cast<size_t>(l)]);
        return canonical(out);
    }

    void finalize() {
        if (rank < 1 || rank > kMaxModuleRank)
            throw bound_error("module rank " + std::to_string(rank) + " outside supported range");
        // lattice columns = relation vectors
        Matrix<i64> cols(rank, relations.rows);
        for (int r = 0; r < relations.rows; ++r)
            for (int c = 0; c < rank; ++c) cols.at(c, r) = relations.at(r, c);
        auto snf = smith_normal_form(cols);
        lat_u = snf.u;
        lat_u_inv = snf.u_inv;
        diag.assign(static_cast<size_t>(rank), 0);
        auto dg = snf.diagonal();
        for (size_t j = 0; j < dg.size(); ++j) diag[j] = dg[j];
        additive_finite = true;
        additive_order = 1;
        for (i64 d : diag) {
            if (d == 0) { additive_finite = false; break; }
            additive_order = checked_mul(additive_order, d);
        }
        validate();
    }

    // Finite additive enumeration support: strides over non-trivial
    // diagonal coordinates give a bijection index <-> coset.
    std::vector<i64> element_at(i64 index) const {
        std::vector<i64> y(static_cast<size_t>(rank), 0);
        for (int l = 0; l < rank; ++l) {
            i64 d = diag[static_cast<size_t>(l)];
            if (d > 1) {
                y[static_cast<size_t>(l)] = index % d;
                index /= d;
            }
        }
        return from_reduced(y);
    }

    i64 index_of(const std::vector<i64>& v) const {
        std::vector<i64> y = reduced_coords(v);
        i64 idx = 0, stride = 1;
        for (int l = 0; l < rank; ++l) {
            i64 d = diag[static_cast<size_t>(l)];
            if (d > 1) {
                idx += y[static_cast<size_t>(l)] * stride;
                stride *= d;
            }
        }
        return idx;
    }

private:
    void validate() const {
        std::vector<i64> scratch;
        // identity
        for (int j = 0; j < rank; ++j) {
            mult_into(one, basis_element(j), scratch);
            if (!same_element(scratch, basis_element(j)))
                throw std::invalid_argument("module ring: designated one is not an identity");
        }
        // commutativity on basis pairs
        std::vector<i64> scratch2;
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) {
                const i64* ij = structure_row(i, j);
                const i64* ji = structure_row(j, i);
                bool raw_equal = std::equal(ij, ij + rank, ji);
                if (!raw_equal) {
                    std::vector<i64> a(ij, ij + rank), b(ji, ji + rank);
                    if (!same_element(a, b))
                        throw std::invalid_argument("module ring: multiplication not commutative");
                }
            }
        // relation lattice must be an ideal
        for (int r = 0; r < relations.rows; ++r) {
            std::vector<i64> row(static_cast<size_t>(rank));
            for (int c = 0; c < rank; ++c) row[static_cast<size_t>(c)] = relations.at(r, c);
            for (int j = 0; j < rank; ++j) {
                mult_into(row, basis_element(j), scratch);
                if (!is_zero_element(scratch))
                    throw std::invalid_argument("module ring: relations not stable under multiplication");
            }
        }
        // associativity
        auto check_triple = [&](int i, int j, int l) {
            std::vector<i64> left, right;
            std::vector<i64> ij(structure_row(i, j), structure_row(i, j) + rank);
            mult_into(ij, basis_element(l), left);
            std::vector<i64> jl(structure_row(j, l), structure_row(j, l) + rank);
            mult_into(basis_element(i), jl, right);
            if (left != right && !same_element(left, right))
                throw std::invalid_argument("module ring: multiplication not associative");
        };
        if (rank <= 64) {
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j)
                    for (int l = 0; l < rank; ++l) check_triple(i, j, l);
        } else {
            std::mt19937_64 rng(0x5eedULL);
            std::uniform_int_distribution<int> pick(0, rank - 1);
            for (int t = 0; t < 100000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
        }
    }
};

namespace detail {

inline void set_structure(std::vector<i64>& table, int rank, int i, int j, int l, i64 v) {
    table[(static_cast<size_t>(i) * rank + j) * static_cast<size_t>(rank) + l] += v;
}

inline ModuleRing build_nilpotent_extension(const RingPresentation& p) {
    ModuleRing ring;
    ring.base = p.base;
    ring.base_modulus = p.modulus;
    ring.family = Family::NilpotentExtension;
    ring.label = p.describe();
    int n = static_cast<int>(p.moduli.size());
    if (p.base == BaseRing::Zi) {
        int k = 2 * (n + 1);
        ring.rank = k;
        ring.base_rank = n + 1;
        ring.mult_table.assign(static_cast<size_t>(k) * k * k, 0);
        auto idx = [](int slot, int c) { return 2 * slot + c; };
        // (0,c1) * (t,c2) = i^(c1+c2) x_t ; x_a x_b = 0 for a,b >= 1
        for (int c1 = 0; c1 < 2; ++c1)
            for (int t = 0; t <= n; ++t)
                for (int c2 = 0; c2 < 2; ++c2) {
                    int cc = c1 + c2;
                    i64 sign = cc >= 2 ? -1 : 1;
                    int comp = cc % 2;
                    detail::set_structure(ring.mult_table, k, idx(0, c1), idx(t, c2), idx(t, comp), sign);
                    if (t > 0)
                        detail::set_structure(ring.mult_table, k, idx(t, c2), idx(0, c1), idx(t, comp), sign);
                }
        ring.relations = Matrix<i64>(2 * n, k);
        for (int t = 1; t <= n; ++t) {
            const GaussianInt& a = p.moduli[static_cast<size_t>(t - 1)];
            ring.relations.at(2 * (t - 1), idx(t, 0)) = a.re;
            ring.relations.at(2 * (t - 1), idx(t, 1)) = a.im;
            ring.relations.at(2 * (t - 1) + 1, idx(t, 0)) = -a.im;
            ring.relations.at(2 * (t - 1) + 1, idx(t, 1)) = a.re;
        }
        ring.one = ring.zero_raw(k);
        ring.one[static_cast<size_t>(idx(0, 0))] = 1;
        for (int t = 1; t <= n; ++t) {
            auto g = ring.zero_raw(k);
            g[static_cast<size_t>(idx(t, 0))] = 1;
            ring.nil_ideal_gens.push_back(g);
        }
        for (auto [re, im] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            auto g = ring.zero_raw(k);
            g[static_cast<size_t>(idx(0, 0))] = re;
            g[static_cast<size_t>(idx(0, 1))] = im;
            ring.quotient_unit_lifts.push_back(g);
        }
    } else {
        int k = n + 1;
        ring.rank = k;
        ring.base_rank = k;
        ring.mult_table.assign(static_cast<size_t>(k) * k * k, 0);
        for (int j = 0; j < k; ++j) {
            detail::set_structure(ring.mult_table, k, 0, j, j, 1);
            if (j > 0) detail::set_structure(ring.mult_table, k, j, 0, j, 1);
        }
        int extra = p.base == BaseRing::Zmod ? k : 0;
        ring.relations = Matrix<i64>(n + extra, k);
        for (int t = 1; t <= n; ++t) {
            const GaussianInt& a = p.moduli[static_cast<size_t>(t - 1)];
            if (a.im != 0)
                throw std::invalid_argument("nilpotent extension over Z needs integer moduli");
            ring.relations.at(t - 1, t) = a.re;
        }
        if (p.base == BaseRing::Zmod)
            for (int j = 0; j < k; ++j) ring.relations.at(n + j, j) = p.modulus;
        ring.one = ring.zero_raw(k);
        ring.one[0] = 1;
        for (int t = 1; t <= n; ++t) {
            auto g = ring.zero_raw(k);
            g[static_cast<size_t>(t)] = 1;
            ring.nil_ideal_gens.push_back(g);
        }
        if (p.base == BaseRing::Z) {
            for (i64 s : {1, -1}) {
                auto g = ring.zero_raw(k);
                g[0] = s;
                ring.quotient_unit_lifts.push_back(g);
            }
        }
    }
    ring.finalize();
    return ring;
}

inline ModuleRing build_an_ring(const RingPresentation& p) {
    int n = p.an_index;
    if (n < 0 || (1 << (n + 1)) > kMaxModuleRank)
        throw bound_error("A_n index " + std::to_string(n) + " exceeds the supported module rank");
    ModuleRing ring;
    ring.base = BaseRing::Z;
    ring.family = Family::AnRing;
    ring.an_index = n;
    ring.label = p.describe();
    int k = 1 << (n + 1);
    ring.rank = k;
    ring.base_rank = k;
    ring.mult_table.assign(static_cast<size_t>(k) * k * k, 0);
    auto idx = [](int a, int s) { return (s << 1) | a; };
    int nsub = 1 << n;
    for (int s = 0; s < nsub; ++s)
        for (int a = 0; a < 2; ++a)
            for (int t = 0; t < nsub; ++t)
                for (int b = 0; b < 2; ++b) {
                    int c = s & t, sym = s ^ t;
                    int csize = __builtin_popcount(static_cast<unsigned>(c));
                    i64 ysign = csize % 2 == 0 ? 1 : -1;
                    // x^(a+b) expands to 1, x, or -1 - x
                    std::vector<std::pair<i64, int>> xterms;
                    if (a + b <= 1) xterms.push_back({1, a + b});
                    else xterms = {{-1, 0}, {-1, 1}};
                    // enumerate subsets e of c
                    for (int e = c;; e = (e - 1) & c) {
                        for (auto [cx, xa] : xterms)
                            detail::set_structure(ring.mult_table, k, idx(a, s), idx(b, t),
                                                  idx(xa, e | sym), cx * ysign);
                        if (e == 0) break;
                    }
                }
    ring.relations = Matrix<i64>(0, k);
    ring.one = ring.zero_raw(k);
    ring.one[0] = 1;
    ring.finalize();
    return ring;
}

inline ModuleRing build_eliminated_quotient(const RingPresentation& p) {
    if (p.relations.empty())
        throw std::invalid_argument("eliminated quotient needs at least one relation");
    std::vector<BiPoly> rels;
    for (auto& r : p.relations) rels.push_back(PolyExprParser::parse(r));
    std::vector<BiPoly> nils;
    for (auto& g : p.nilradical) nils.push_back(PolyExprParser::parse(g));
    std::vector<BiPoly> lifts;
    for (auto& u : p.quotient_units) lifts.push_back(PolyExprParser::parse(u));

    bool uses_y = p.generators.size() > 1;
    for (auto& r : rels) uses_y = uses_y || r.uses_y();

    if (uses_y) {
        // find a relation of the form c*y + t(x) with c a unit, solve for y
        int chosen = -1;
        BiPoly subst;
        for (int attempt = 0; attempt < 2 && chosen < 0; ++attempt) {
            for (size_t ri = 0; ri < rels.size(); ++ri) {
                const BiPoly& r = rels[ri];
                if (r.degree_y() != 1) continue;
                GaussianInt c{};
                bool linear = true;
                for (auto& [deg, coeff] : r.terms)
                    if (deg.second == 1) {
                        if (deg.first != 0) { linear = false; break; }
                        c = coeff;
                    }
                if (!linear || !c.is_unit()) continue;
                // y = -c^{-1} * (r - c y)
                BiPoly rest = r;
                rest.terms.erase({0, 1});
                subst = rest.substitute_y(BiPoly::constant(GaussianInt{0}));  // rest has no y
                subst = BiPoly::constant(-c.conj()) * subst;                  // unit inverse = conj
                chosen = static_cast<int>(ri);
                break;
            }
            if (chosen < 0) {
                // try the symmetric elimination with x and y swapped
                for (auto& r : rels) r = r.swapped_vars();
                for (auto& g : nils) g = g.swapped_vars();
                for (auto& u : lifts) u = u.swapped_vars();
            }
        }
        if (chosen < 0)
            throw std::invalid_argument(
                "elimination failure: no relation is linear in a generator with unit coefficient");
        std::vector<BiPoly> kept;
        for (size_t ri = 0; ri < rels.size(); ++ri)
            if (static_cast<int>(ri) != chosen) kept.push_back(rels[ri].substitute_y(subst));
        rels = std::move(kept);
        for (auto& g : nils) g = g.substitute_y(subst);
        for (auto& u : lifts) u = u.substitute_y(subst);
    }

    std::vector<Poly<GaussianInt>> urels;
    for (auto& r : rels) {
        auto u = r.univariate_x();
        if (!u.is_zero()) urels.push_back(u);
    }
    if (urels.empty()) throw std::invalid_argument("quotient has no surviving relations");

    // pick the minimal-degree relation with unit leading coefficient
    int monic_at = -1;
    for (size_t j = 0; j < urels.size(); ++j) {
        if (!urels[j].leading().is_unit()) continue;
        if (monic_at < 0 || urels[j].degree() < urels[static_cast<size_t>(monic_at)].degree())
            monic_at = static_cast<int>(j);
    }
    if (monic_at < 0)
        throw std::invalid_argument(
            "quotient is not module-finite over its base: no relation has unit leading coefficient");
    Poly<GaussianInt> monic = urels[static_cast<size_t>(monic_at)].scaled(
        urels[static_cast<size_t>(monic_at)].leading().conj());
    int kb = monic.degree();
    if (kb < 1) throw std::invalid_argument("quotient ring is trivial");

    i64 n = p.modulus;
    auto modreduce = [&](Poly<GaussianInt> f) {
        if (p.base != BaseRing::Zmod) return f;
        for (auto& c : f.c) {
            if (c.im != 0) throw std::invalid_argument("Zmod presentations need integer coefficients");
            c.re = ((c.re % n) + n) % n;
        }
        f.trim();
        return f;
    };

    std::vector<Poly<GaussianInt>> lattice_rows;
    for (size_t j = 0; j < urels.size(); ++j) {
        if (static_cast<int>(j) == monic_at) continue;
        for (int sh = 0; sh < kb; ++sh) {
            auto red = modreduce(poly_mod_monic(urels[j].shifted(sh), monic));
            if (!red.is_zero()) lattice_rows.push_back(red);
        }
    }

    ModuleRing ring;
    ring.base = p.base;
    ring.base_modulus = p.modulus;
    ring.family = Family::EliminatedQuotient;
    ring.label = p.describe();
    ring.base_rank = kb;

    bool gaussian = p.base == BaseRing::Zi;
    if (!gaussian) {
        for (auto& row : lattice_rows)
            for (auto& c : row.c)
                if (c.im != 0)
                    throw std::invalid_argument("presentation over Z has non-real coefficients");
    }
    int k = gaussian ? 2 * kb : kb;
    if (k > kMaxModuleRank) throw bound_error("eliminated quotient rank exceeds supported range");
    ring.rank = k;
    ring.mult_table.assign(static_cast<size_t>(k) * k * k, 0);

    // powers of x reduced modulo the monic relation
    std::vector<Poly<GaussianInt>> xp(static_cast<size_t>(2 * kb - 1));
    {
        Poly<GaussianInt> cur(std::vector<GaussianInt>{GaussianInt{1}});
        for (int t = 0; t < 2 * kb - 1; ++t) {
            xp[static_cast<size_t>(t)] = cur;
            cur = modreduce(poly_mod_monic(cur.shifted(1), monic));
        }
    }
    auto emit = [&](int i, int j, const Poly<GaussianInt>& val, const GaussianInt& scale) {
        for (int t = 0; t <= val.degree(); ++t) {
            GaussianInt c = val.coeff(t) * scale;
            if (gaussian) {
                detail::set_structure(ring.mult_table, k, i, j, 2 * t, c.re);
                detail::set_structure(ring.mult_table, k, i, j, 2 * t + 1, c.im);
            } else {
                detail::set_structure(ring.mult_table, k, i, j, t, c.re);
            }
        }
    };
    if (gaussian) {
        for (int t1 = 0; t1 < kb; ++t1)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int t2 = 0; t2 < kb; ++t2)
                    for (int c2 = 0; c2 < 2; ++c2) {
                        GaussianInt scale = c1 + c2 == 0 ? GaussianInt{1}
                                          : c1 + c2 == 1 ? GaussianInt{0, 1}
                                                         : GaussianInt{-1};
                        emit(2 * t1 + c1, 2 * t2 + c2, xp[static_cast<size_t>(t1 + t2)], scale);
                    }
    } else {
        for (int t1 = 0; t1 < kb; ++t1)
            for (int t2 = 0; t2 < kb; ++t2)
                emit(t1, t2, xp[static_cast<size_t>(t1 + t2)], GaussianInt{1});
    }

    auto flatten = [&](const Poly<GaussianInt>& f) {
        std::vector<i64> v(static_cast<size_t>(k), 0);
        for (int t = 0; t <= f.degree(); ++t) {
            if (gaussian) {
                v[static_cast<size_t>(2 * t)] = f.coeff(t).re;
                v[static_cast<size_t>(2 * t + 1)] = f.coeff(t).im;
            } else {
                v[static_cast<size_t>(t)] = f.coeff(t).re;
            }
        }
        return v;
    };

    int nrows = static_cast<int>(lattice_rows.size()) * (gaussian ? 2 : 1) +
                (p.base == BaseRing::Zmod ? k : 0);
    ring.relations = Matrix<i64>(nrows, k);
    int r = 0;
    for (auto& row : lattice_rows) {
        auto v = flatten(row);
        for (int c = 0; c < k; ++c) ring.relations.at(r, c) = v[static_cast<size_t>(c)];
        ++r;
        if (gaussian) {
            auto iv = flatten(row.scaled(GaussianInt{0, 1}));
            for (int c = 0; c < k; ++c) ring.relations.at(r, c) = iv[static_cast<size_t>(c)];
            ++r;
        }
    }
    if (p.base == BaseRing::Zmod)
        for (int j = 0; j < k; ++j, ++r) ring.relations.at(r, j) = p.modulus;

    ring.one = ring.zero_raw(k);
    ring.one[0] = 1;
    for (auto& g : nils) {
        auto red = modreduce(poly_mod_monic(g.univariate_x(), monic));
        ring.nil_ideal_gens.push_back(flatten(red));
    }
    for (auto& u : lifts) {
        auto red = modreduce(poly_mod_monic(u.univariate_x(), monic));
        ring.quotient_unit_lifts.push_back(flatten(red));
    }
    ring.finalize();
    return ring;
}

inline ModuleRing build_direct_product(const RingPresentation& p,
                                       ModuleRing (*builder)(const RingPresentation&)) {
    std::vector<ModuleRing> comps;
    int total = 0;
    for (auto& c : p.components) {
        comps.push_back(builder(c));
        total += comps.back().rank;
    }
    if (comps.empty()) throw std::invalid_argument("direct product needs at least one component");
    ModuleRing ring;
    ring.base = comps.front().base;
    ring.family = Family::DirectProduct;
    ring.label = p.describe();
    ring.rank = total;
    ring.base_rank = total;
    if (total > kMaxModuleRank) throw bound_error("direct product rank exceeds supported range");
    ring.mult_table.assign(static_cast<size_t>(total) * total * total, 0);
    ring.one = ring.zero_raw(total);
    int rrows = 0;
    for (auto& c : comps) rrows += c.relations.rows;
    ring.relations = Matrix<i64>(rrows, total);
    int off = 0, roff = 0;
    for (auto& c : comps) {
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j) {
                const i64* row = c.structure_row(i, j);
                for (int l = 0; l < c.rank; ++l)
                    if (row[l])
                        detail::set_structure(ring.mult_table, total, off + i, off + j, off + l, row[l]);
            }
        for (int r = 0; r < c.relations.rows; ++r)
            for (int cix = 0; cix < c.rank; ++cix)
                ring.relations.at(roff + r, off + cix) = c.relations.at(r, cix);
        for (int l = 0; l < c.rank; ++l)
            ring.one[static_cast<size_t>(off + l)] = c.one[static_cast<size_t>(l)];
        for (auto& g : c.nil_ideal_gens) {
            auto v = ring.zero_raw(total);
            for (int l = 0; l < c.rank; ++l) v[static_cast<size_t>(off + l)] = g[static_cast<size_t>(l)];
            ring.nil_ideal_gens.push_back(v);
        }
        off += c.rank;
        roff += c.relations.rows;
    }
    ring.finalize();
    return ring;
}

} // namespace detail

inline ModuleRing build_module_ring(const RingPresentation& p) {
    switch (p.family) {
        case Family::NilpotentExtension: return detail::build_nilpotent_extension(p);
        case Family::AnRing: return detail::build_an_ring(p);
        case Family::EliminatedQuotient: return detail::build_eliminated_quotient(p);
        case Family::DirectProduct: return detail::build_direct_product(p, &build_module_ring);
    }
    throw std::logic_error("unknown presentation family");
}

} // namespace unitgroups
