#pragma once

// Ground-truth unit-group computations.
//
//  * unit_group_finite: exhaustive inversion search in a finite ring;
//    an element is a unit iff some candidate multiplies it to 1.
//  * unit_group_char0_witness: for the characteristic-zero witness
//    families.  The candidate set {rho * (1+n)} (rho a lift of a unit of
//    A/N, n in the nilradical) is checked to be closed and to consist of
//    invertible elements; completeness is certified by the cardinality
//    identity |A^*| = |1+N| * |(A/N)^*| of the exact sequence
//    1 -> 1+N -> A^* -> (A/N)^* -> 1, with |(A/N)^*| supplied by the
//    family.  This identity is checked, not assumed.
//  * an_verify: computes the unit group of A_n = Z[x,y_1..y_n]/
//    (x^2+x+1, y_i^2+y_i+1) by F_3 linear algebra: an upper bound from
//    the affine solution count in the image of A_n inside
//    (Z[w]/3)^(2^n), a matching lower bound from the 3^(n+1) distinct
//    monomial units, and a coordinate-agreement argument for the 2-part.
//
// Group structures are recognized from element-order statistics, which
// determine a finite abelian group up to isomorphism.

#include "unitgroups/abelian.hpp"
#include "unitgroups/config.hpp"
#include "unitgroups/module_ring.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace unitgroups {

struct UnitGroupReport {
    i64 unit_count = 0;
    AbelianGroup structure;
    i64 nilradical_size = 1;
    i64 quotient_unit_count = 0;
    bool exact_sequence_ok = false;

    json to_json() const {
        json j;
        j["unit_count"] = unit_count;
        j["structure"] = structure.str();
        j["nilradical_size"] = nilradical_size;
        j["quotient_unit_count"] = quotient_unit_count;
        j["exact_sequence_ok"] = exact_sequence_ok;
        return j;
    }
};

namespace detail {

struct VecKeyHash {
    size_t operator()(const std::vector<i64>& v) const {
        size_t h = v.size();
        for (i64 x : v) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Membership tester for the row lattice of a relation matrix.
struct LatticeView {
    int dim = 0;
    std::vector<i64> diag;
    Matrix<i64> uinv;

    static LatticeView of(const Matrix<i64>& rows, int dim) {
        Matrix<i64> cols(dim, rows.rows);
        for (int r = 0; r < rows.rows; ++r)
            for (int c = 0; c < dim; ++c) cols.at(c, r) = rows.at(r, c);
        auto snf = smith_normal_form(cols);
        LatticeView view;
        view.dim = dim;
        view.uinv = snf.u_inv;
        view.diag.assign(static_cast<size_t>(dim), 0);
        auto dg = snf.diagonal();
        for (size_t j = 0; j < dg.size(); ++j) view.diag[j] = dg[j];
        return view;
    }

    bool contains(const std::vector<i64>& v) const {
        for (int l = 0; l < dim; ++l) {
            i128 acc = 0;
            for (int c = 0; c < dim; ++c)
                acc = i128_add_checked(acc, i128(uinv.at(l, c)) * v[static_cast<size_t>(c)]);
            i64 y = checked_narrow(acc, "lattice membership");
            i64 d = diag[static_cast<size_t>(l)];
            if (d == 0 ? y != 0 : y % d != 0) return false;
        }
        return true;
    }
};

} // namespace detail

// Explicit coset representatives of the (finite) additive group.
inline std::vector<std::vector<i64>> additive_elements(const ModuleRing& ring, i64 bound) {
    if (!ring.additive_finite)
        throw std::invalid_argument("additive group is infinite; enumerate the nilradical instead");
    if (ring.additive_order > bound)
        throw bound_error("additive enumeration of " + std::to_string(ring.additive_order) +
                          " elements exceeds the bound " + std::to_string(bound));
    std::vector<std::vector<i64>> out;
    out.reserve(static_cast<size_t>(ring.additive_order));
    for (i64 idx = 0; idx < ring.additive_order; ++idx) out.push_back(ring.element_at(idx));
    return out;
}

// Elements of the (finite) additive span of the nilradical ideal:
// closure of {g * e_j, g} under addition, starting from 0.
inline std::vector<std::vector<i64>> nilradical_elements(const ModuleRing& ring, i64 bound) {
    std::vector<std::vector<i64>> gens;
    std::vector<i64> scratch;
    for (auto& g : ring.nil_ideal_gens) {
        gens.push_back(ring.canonical(g));
        for (int j = 0; j < ring.rank; ++j) {
            ring.mult_into(g, ring.basis_element(j), scratch);
            gens.push_back(ring.canonical(scratch));
        }
    }
    std::unordered_set<std::vector<i64>, detail::VecKeyHash> seen;
    std::vector<std::vector<i64>> out;
    std::vector<std::vector<i64>> queue{ring.zero()};
    seen.insert(ring.reduced_coords(ring.zero()));
    while (!queue.empty()) {
        std::vector<i64> cur = std::move(queue.back());
        queue.pop_back();
        out.push_back(cur);
        if (static_cast<i64>(out.size()) + static_cast<i64>(queue.size()) > bound)
            throw bound_error("nilradical enumeration exceeds the bound " + std::to_string(bound));
        for (auto& g : gens) {
            auto next = ring.add(cur, g);
            auto key = ring.reduced_coords(next);
            if (seen.insert(key).second) queue.push_back(next);
        }
    }
    return out;
}

// Exhaustive unit-group computation for a finite ring.
inline UnitGroupReport unit_group_finite(const ModuleRing& ring, const Bounds& bounds) {
    if (!ring.additive_finite)
        throw std::invalid_argument("unit_group_finite requires a finite ring");
    i64 n = ring.additive_order;
    if (n > bounds.oracle_size)
        throw bound_error("ring of size " + std::to_string(n) + " exceeds oracle bound " +
                          std::to_string(bounds.oracle_size));
    int k = ring.rank;
    if (checked_mul(n, k) > (i64(1) << 23))
        throw bound_error("element table too large for exhaustive unit search");

    std::vector<i64> elems(static_cast<size_t>(n) * k);
    for (i64 idx = 0; idx < n; ++idx) {
        auto v = ring.element_at(idx);
        std::copy(v.begin(), v.end(), elems.begin() + static_cast<size_t>(idx) * k);
    }
    auto elem = [&](i64 idx) {
        return std::vector<i64>(elems.begin() + static_cast<size_t>(idx) * k,
                                elems.begin() + static_cast<size_t>(idx + 1) * k);
    };
    i64 one_idx = ring.index_of(ring.one);

    // allocation-free product-to-index for the quadratic scan; rank-1
    // rings with an identity lattice basis take a plain modular path
    const bool line = k == 1 && ring.lat_u.at(0, 0) == 1 && ring.lat_u_inv.at(0, 0) == 1 &&
                      ring.diag[0] == n && ring.mult_table[0] >= 0;
    const i64 line_c = line ? ring.mult_table[0] % n : 0;
    std::vector<i128> acc(static_cast<size_t>(k));
    std::vector<i64> strides(static_cast<size_t>(k), 0);
    {
        i64 stride = 1;
        for (int l = 0; l < k; ++l)
            if (ring.diag[static_cast<size_t>(l)] > 1) {
                strides[static_cast<size_t>(l)] = stride;
                stride *= ring.diag[static_cast<size_t>(l)];
            }
    }
    auto prod_index = [&](i64 ua, i64 ub) -> i64 {
        if (line) return elems[static_cast<size_t>(ua)] * elems[static_cast<size_t>(ub)] % n *
                         line_c % n;
        const i64* pa = &elems[static_cast<size_t>(ua) * k];
        const i64* pb = &elems[static_cast<size_t>(ub) * k];
        std::fill(acc.begin(), acc.end(), i128{0});
        for (int i = 0; i < k; ++i) {
            if (!pa[i]) continue;
            const i64* rows = ring.structure_row(i, 0);
            for (int j = 0; j < k; ++j) {
                if (!pb[j]) continue;
                i128 coef = i128(pa[i]) * pb[j];
                const i64* row = rows + static_cast<size_t>(j) * k;
                for (int l = 0; l < k; ++l)
                    if (row[l])
                        acc[static_cast<size_t>(l)] =
                            i128_add_checked(acc[static_cast<size_t>(l)], i128_mul_checked(coef, row[l]));
            }
        }
        i64 idx = 0;
        for (int l = 0; l < k; ++l) {
            i64 d = ring.diag[static_cast<size_t>(l)];
            if (d <= 1) continue;
            i128 y = 0;
            for (int c = 0; c < k; ++c)
                y = i128_add_checked(y, i128_mul_checked(acc[static_cast<size_t>(c)],
                                                         ring.lat_u_inv.at(l, c)));
            i64 yr = static_cast<i64>(((y % d) + d) % d);
            idx += yr * strides[static_cast<size_t>(l)];
        }
        return idx;
    };

    std::vector<char> unit(static_cast<size_t>(n), 0);
    for (i64 u = 0; u < n; ++u) {
        if (unit[static_cast<size_t>(u)]) continue;
        for (i64 v = u; v < n; ++v) {  // inverses come in pairs
            if (prod_index(u, v) == one_idx) {
                unit[static_cast<size_t>(u)] = 1;
                unit[static_cast<size_t>(v)] = 1;
                break;
            }
        }
    }
    i64 unit_count = 0;
    for (char c : unit) unit_count += c;

    std::map<i64, i64> order_counts;
    for (i64 u = 0; u < n; ++u) {
        if (!unit[static_cast<size_t>(u)]) continue;
        i64 ord = 1, cur = u;
        while (cur != one_idx) {
            cur = prod_index(cur, u);
            ++ord;
            if (ord > n) throw std::logic_error("unit order exceeds ring size");
        }
        order_counts[ord] += 1;
    }
    AbelianGroup structure = AbelianGroup::from_order_statistics(order_counts, unit_count);

    // nilpotency by repeated squaring: the index of nilpotency is at most
    // |R|, and the zero element sits at index 0
    int squarings = 1;
    while ((i64(1) << squarings) < n) ++squarings;
    std::vector<std::vector<i64>> nilpotents;
    for (i64 u = 0; u < n; ++u) {
        i64 zi = u;
        for (int s = 0; s <= squarings && zi != 0; ++s) zi = prod_index(zi, zi);
        if (zi == 0) nilpotents.push_back(elem(u));
    }
    i64 nil_count = static_cast<i64>(nilpotents.size());

    i64 quotient_units;
    if (nil_count == 1) {
        quotient_units = unit_count;  // reduced ring: A = A/N
    } else {
        // quotient by the nilradical: add a small generating set of N
        Matrix<i64> rows = ring.relations;
        std::vector<std::vector<i64>> picked;
        auto view = detail::LatticeView::of(rows, k);
        for (auto& v : nilpotents) {
            if (view.contains(v)) continue;
            picked.push_back(v);
            Matrix<i64> next(rows.rows + static_cast<int>(picked.size()), k);
            for (int r = 0; r < rows.rows; ++r)
                for (int c = 0; c < k; ++c) next.at(r, c) = rows.at(r, c);
            for (size_t pj = 0; pj < picked.size(); ++pj)
                for (int c = 0; c < k; ++c)
                    next.at(rows.rows + static_cast<int>(pj), c) = picked[pj][static_cast<size_t>(c)];
            view = detail::LatticeView::of(next, k);
        }
        ModuleRing quo = ring;
        Matrix<i64> next(rows.rows + static_cast<int>(picked.size()), k);
        for (int r = 0; r < rows.rows; ++r)
            for (int c = 0; c < k; ++c) next.at(r, c) = rows.at(r, c);
        for (size_t pj = 0; pj < picked.size(); ++pj)
            for (int c = 0; c < k; ++c)
                next.at(rows.rows + static_cast<int>(pj), c) = picked[pj][static_cast<size_t>(c)];
        quo.relations = next;
        quo.nil_ideal_gens.clear();
        quo.quotient_unit_lifts.clear();
        quo.label = ring.label + " / nilradical";
        quo.finalize();
        quotient_units = unit_group_finite(quo, bounds).unit_count;
    }

    UnitGroupReport rep;
    rep.unit_count = unit_count;
    rep.structure = structure;
    rep.nilradical_size = nil_count;
    rep.quotient_unit_count = quotient_units;
    rep.exact_sequence_ok = unit_count == checked_mul(nil_count, quotient_units);
    return rep;
}

// Unit group of a characteristic-zero witness ring with finite nilradical.
inline UnitGroupReport unit_group_char0_witness(const ModuleRing& ring, const Bounds& bounds) {
    if (ring.quotient_unit_lifts.empty())
        throw std::invalid_argument(
            "characteristic-zero unit enumeration needs the family's quotient-unit lifts");
    auto nil = nilradical_elements(ring, bounds.oracle_size);
    i64 nil_count = static_cast<i64>(nil.size());
    std::vector<std::vector<i64>> nil_gens;
    {
        std::vector<i64> scratch0;
        for (auto& g : ring.nil_ideal_gens) {
            nil_gens.push_back(ring.canonical(g));
            for (int j = 0; j < ring.rank; ++j) {
                ring.mult_into(g, ring.basis_element(j), scratch0);
                nil_gens.push_back(ring.canonical(scratch0));
            }
        }
    }
    std::vector<std::vector<i64>> rho;
    for (auto& r : ring.quotient_unit_lifts) rho.push_back(ring.canonical(r));
    i64 rho_count = static_cast<i64>(rho.size());
    if (checked_mul(nil_count, rho_count) > bounds.oracle_size)
        throw bound_error("candidate unit set exceeds oracle bound");

    std::unordered_map<std::vector<i64>, i64, detail::VecKeyHash> index;
    std::vector<std::vector<i64>> cands;
    std::vector<i64> scratch;
    for (auto& r : rho)
        for (auto& nels : nil) {
            ring.mult_into(r, ring.add(ring.one, nels), scratch);
            auto c = ring.canonical(scratch);
            auto key = ring.reduced_coords(c);
            if (index.emplace(key, static_cast<i64>(cands.size())).second) cands.push_back(c);
        }
    if (static_cast<i64>(cands.size()) != checked_mul(nil_count, rho_count))
        throw std::invalid_argument("candidate units collide; presentation data is inconsistent");

    // closure: rho * rho stays in the candidate set, and the nilradical
    // is closed under n*m = n + m + nm; the latter reduces to products of
    // additive generators, since the enumerated set is a subgroup and
    // multiplication is bilinear.
    for (auto& r1 : rho)
        for (auto& r2 : rho) {
            ring.mult_into(r1, r2, scratch);
            if (!index.count(ring.reduced_coords(ring.canonical(scratch))))
                throw std::invalid_argument("quotient-unit lifts are not closed in the candidate set");
        }
    std::unordered_set<std::vector<i64>, detail::VecKeyHash> nilkeys;
    for (auto& nels : nil) nilkeys.insert(ring.reduced_coords(nels));
    for (auto& g1 : nil_gens)
        for (auto& g2 : nil_gens) {
            ring.mult_into(g1, g2, scratch);
            if (!nilkeys.count(ring.reduced_coords(ring.canonical(scratch))))
                throw std::invalid_argument("nilradical is not multiplicatively closed");
        }

    // every candidate is invertible: its power orbit returns to 1
    i64 one_at = -1;
    {
        auto it = index.find(ring.reduced_coords(ring.canonical(ring.one)));
        if (it == index.end()) throw std::logic_error("1 is not among the unit candidates");
        one_at = it->second;
    }
    std::map<i64, i64> order_counts;
    i64 total = static_cast<i64>(cands.size());
    for (i64 u = 0; u < total; ++u) {
        i64 ord = 1, cur = u;
        while (cur != one_at) {
            ring.mult_into(cands[static_cast<size_t>(cur)], cands[static_cast<size_t>(u)], scratch);
            auto it = index.find(ring.reduced_coords(ring.canonical(scratch)));
            if (it == index.end())
                throw std::invalid_argument("candidate set is not closed under multiplication");
            cur = it->second;
            ++ord;
            if (ord > total)
                throw std::invalid_argument("candidate is not invertible within the unit set");
        }
        order_counts[ord] += 1;
    }

    UnitGroupReport rep;
    rep.unit_count = total;
    rep.structure = AbelianGroup::from_order_statistics(order_counts, total);
    rep.nilradical_size = nil_count;
    rep.quotient_unit_count = rho_count;
    rep.exact_sequence_ok = total == checked_mul(nil_count, rho_count);
    return rep;
}

// F_3 linear-algebra verification of A_n^* = Z/2 x (Z/3)^(n+1).
inline UnitGroupReport an_verify(int n, const Bounds& bounds) {
    if (n < 0) throw std::invalid_argument("A_n index must be >= 0");
    if (n > bounds.an_index)
        throw bound_error("A_n index " + std::to_string(n) + " exceeds bound " +
                          std::to_string(bounds.an_index));
    int nsub = 1 << n;          // components of B = Z[w]^(2^n)
    int dim = 1 << (n + 1);     // F_3-dimension of B/3B and basis size of A_n
    auto col = [&](int t, int c) { return 2 * t + c; };

    // psi_T(x^a y_S) = w^(a + |S\T| + 2|S n T|); w^e in basis {1, w-1}:
    // w^0 -> (1,0), w^1 -> (1,1), w^2 -> (1,2) mod 3
    std::vector<std::vector<int>> rows;
    for (int s = 0; s < nsub; ++s)
        for (int a = 0; a < 2; ++a) {
            std::vector<int> row(static_cast<size_t>(dim), 0);
            for (int t = 0; t < nsub; ++t) {
                int e = (a + __builtin_popcount(static_cast<unsigned>(s & ~t)) +
                         2 * __builtin_popcount(static_cast<unsigned>(s & t))) % 3;
                row[static_cast<size_t>(col(t, 0))] = 1;
                row[static_cast<size_t>(col(t, 1))] = e;
            }
            rows.push_back(std::move(row));
        }

    // reduced row echelon basis of V, keyed by leading column
    std::map<int, std::vector<int>> echelon;
    for (auto row : rows) {
        for (;;) {
            int lead = -1;
            for (int c = 0; c < dim; ++c)
                if (row[static_cast<size_t>(c)]) { lead = c; break; }
            if (lead < 0) break;
            auto it = echelon.find(lead);
            if (it == echelon.end()) {
                int inv = row[static_cast<size_t>(lead)] == 1 ? 1 : 2;
                for (auto& v : row) v = v * inv % 3;
                for (auto& [l2, b2] : echelon) {
                    int v = b2[static_cast<size_t>(lead)];
                    if (v)
                        for (int c = 0; c < dim; ++c)
                            b2[static_cast<size_t>(c)] =
                                ((b2[static_cast<size_t>(c)] - v * row[static_cast<size_t>(c)]) % 3 + 3) % 3;
                }
                echelon[lead] = std::move(row);
                break;
            }
            int v = row[static_cast<size_t>(lead)];
            for (int c = 0; c < dim; ++c)
                row[static_cast<size_t>(c)] =
                    ((row[static_cast<size_t>(c)] - v * it->second[static_cast<size_t>(c)]) % 3 + 3) % 3;
        }
    }
    std::vector<std::vector<int>> basis;
    for (auto& [lead, row] : echelon) basis.push_back(row);
    int dimv = static_cast<int>(basis.size());

    // affine count of V intersected with {b0 coordinates all 1}
    // unknowns: coefficients over the V-basis; one equation per component
    std::vector<std::vector<int>> sys;  // augmented rows of length dimv+1
    for (int t = 0; t < nsub; ++t) {
        std::vector<int> eq(static_cast<size_t>(dimv) + 1, 0);
        for (int j = 0; j < dimv; ++j) eq[static_cast<size_t>(j)] = basis[static_cast<size_t>(j)][static_cast<size_t>(col(t, 0))];
        eq[static_cast<size_t>(dimv)] = 1;
        sys.push_back(std::move(eq));
    }
    int rank = 0;
    bool consistent = true;
    for (int c = 0; c < dimv && rank < static_cast<int>(sys.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(sys.size()); ++r)
            if (sys[static_cast<size_t>(r)][static_cast<size_t>(c)]) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(sys[static_cast<size_t>(rank)], sys[static_cast<size_t>(pivot)]);
        int inv = sys[static_cast<size_t>(rank)][static_cast<size_t>(c)] == 1 ? 1 : 2;
        for (auto& v : sys[static_cast<size_t>(rank)]) v = v * inv % 3;
        for (int r = 0; r < static_cast<int>(sys.size()); ++r) {
            if (r == rank) continue;
            int v = sys[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (v)
                for (int cc = 0; cc <= dimv; ++cc)
                    sys[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                        ((sys[static_cast<size_t>(r)][static_cast<size_t>(cc)] -
                          v * sys[static_cast<size_t>(rank)][static_cast<size_t>(cc)]) % 3 + 3) % 3;
        }
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(sys.size()); ++r)
        if (sys[static_cast<size_t>(r)][static_cast<size_t>(dimv)]) consistent = false;
    i64 upper = consistent ? checked_pow(3, dimv - rank) : 0;

    // lower bound: the 3^(n+1) monomials x^(e0) y_1^(e1) ... y_n^(en)
    // expand to pairwise distinct canonical forms
    i64 expected = checked_pow(3, n + 1);
    std::set<std::vector<i64>> monomials;
    std::vector<int> eps(static_cast<size_t>(n) + 1, 0);
    for (i64 counter = 0; counter < expected; ++counter) {
        i64 rest = counter;
        for (int j = 0; j <= n; ++j) { eps[static_cast<size_t>(j)] = static_cast<int>(rest % 3); rest /= 3; }
        // expansion over the basis (a, S); factors: x^e then each y_i^e
        std::map<std::pair<int, int>, i64> acc{{{0, 0}, 1}};
        auto mul_factor = [&](int var, int e) {
            // var = 0 is x, var >= 1 is y_var; e in {0,1,2}
            if (e == 0) return;
            std::map<std::pair<int, int>, i64> next;
            for (auto& [key, coef] : acc) {
                auto [a, s] = key;
                if (var == 0) {
                    // multiply by x or x^2 = -1 - x
                    std::vector<std::pair<i64, int>> terms =
                        e == 1 ? std::vector<std::pair<i64, int>>{{1, a + 1}}
                               : std::vector<std::pair<i64, int>>{{-1, a}, {-1, a + 1}};
                    for (auto [c2, apow] : terms) {
                        if (apow <= 1) next[{apow, s}] += coef * c2;
                        else {  // x^2 = -1 - x
                            next[{0, s}] += -coef * c2;
                            next[{1, s}] += -coef * c2;
                        }
                    }
                } else {
                    int bit = 1 << (var - 1);
                    if (e == 1) {
                        if (s & bit) {  // y^2 = -1 - y
                            next[{a, s & ~bit}] += -coef;
                            next[{a, s}] += -coef;
                        } else {
                            next[{a, s | bit}] += coef;
                        }
                    } else {  // e == 2: multiply by -1 - y
                        next[{a, s}] += -coef;
                        if (s & bit) {
                            next[{a, s & ~bit}] += coef;
                            next[{a, s}] += coef;
                        } else {
                            next[{a, s | bit}] += -coef;
                        }
                    }
                }
            }
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            acc = std::move(next);
        };
        mul_factor(0, eps[0]);
        for (int j = 1; j <= n; ++j) mul_factor(j, eps[static_cast<size_t>(j)]);
        std::vector<i64> flat(static_cast<size_t>(dim), 0);
        for (auto& [key, coef] : acc) flat[static_cast<size_t>((key.second << 1) | key.first)] = coef;
        monomials.insert(std::move(flat));
    }
    i64 lower = static_cast<i64>(monomials.size());
    if (lower != expected)
        throw std::logic_error("monomial units of A_n are not pairwise distinct");
    if (upper != lower)
        throw std::logic_error("A_n 3-part bounds disagree: upper " + std::to_string(upper) +
                               ", lower " + std::to_string(lower));

    // 2-part: the defining relations vanish under x,y -> 1 mod 3 while 2
    // does not, so coordinates of a 2-torsion unit must all agree: the
    // 2-part is exactly {1, -1}.
    if (cyclotomic(3, 1).eval(1) % 3 != 0 || 2 % 3 == 0)
        throw std::logic_error("coordinate-agreement premises failed");

    UnitGroupReport rep;
    rep.unit_count = checked_mul(2, expected);
    AbelianGroup::PartsMap parts;
    parts[2] = {1};
    parts[3] = std::vector<int>(static_cast<size_t>(n) + 1, 1);
    rep.structure = AbelianGroup::from_parts(std::move(parts));
    rep.nilradical_size = 1;
    rep.quotient_unit_count = rep.unit_count;
    rep.exact_sequence_ok = true;
    return rep;
}

// |A^*| = |1+N| * |(A/N)^*| as computable cardinalities.
inline bool exact_sequence_check(const ModuleRing& ring, const Bounds& bounds) {
    if (ring.additive_finite) return unit_group_finite(ring, bounds).exact_sequence_ok;
    return unit_group_char0_witness(ring, bounds).exact_sequence_ok;
}

inline UnitGroupReport combine_reports(const std::vector<UnitGroupReport>& parts) {
    UnitGroupReport rep;
    rep.unit_count = 1;
    rep.nilradical_size = 1;
    rep.quotient_unit_count = 1;
    rep.exact_sequence_ok = true;
    for (auto& p : parts) {
        rep.unit_count = checked_mul(rep.unit_count, p.unit_count);
        rep.nilradical_size = checked_mul(rep.nilradical_size, p.nilradical_size);
        rep.quotient_unit_count = checked_mul(rep.quotient_unit_count, p.quotient_unit_count);
        rep.structure = rep.structure.direct_product(p.structure);
        rep.exact_sequence_ok = rep.exact_sequence_ok && p.exact_sequence_ok;
    }
    return rep;
}

// Route a presentation to the applicable oracle.
inline UnitGroupReport evaluate_presentation(const RingPresentation& pres, const Bounds& bounds) {
    switch (pres.family) {
        case Family::DirectProduct: {
            std::vector<UnitGroupReport> parts;
            for (auto& c : pres.components) parts.push_back(evaluate_presentation(c, bounds));
            return combine_reports(parts);
        }
        case Family::AnRing:
            return an_verify(pres.an_index, bounds);
        case Family::NilpotentExtension:
        case Family::EliminatedQuotient: {
            ModuleRing ring = build_module_ring(pres);
            if (ring.additive_finite) return unit_group_finite(ring, bounds);
            return unit_group_char0_witness(ring, bounds);
        }
    }
    throw std::logic_error("unknown presentation family");
}

} // namespace unitgroups
