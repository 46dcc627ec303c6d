#pragma once

// Empirical densities of realizable unit-group cardinalities up to N.
//
//   all      : every even number plus the odd set below
//   odd      : products of numbers 2^k - 1 (k >= 2), including the empty
//              product 1
//   reduced  : multiplicative closure of {q - 1 : q a prime power} --
//              the torsion-free block orders 2^a 4^b 3^c are already
//              products of 2 = 3-1, 3 = 4-1, 4 = 5-1
//
// Counts are exact integers; densities are emitted as 10-digit decimal
// strings so downstream comparisons never touch floating point.

#include "unitgroups/config.hpp"
#include "unitgroups/ints.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace unitgroups {

// Odd realizable cardinalities up to n, with the factorization that
// witnesses each member.
inline std::map<i64, std::vector<i64>> enumerate_odd_realizable_certs(i64 n) {
    if (n < 1) throw std::invalid_argument("enumeration limit must be positive");
    std::vector<i64> mers;
    for (int k = 2; (i64(1) << k) - 1 <= n; ++k) mers.push_back((i64(1) << k) - 1);
    std::map<i64, std::vector<i64>> out;
    out[1] = {};
    std::vector<i64> stack;
    auto rec = [&](auto&& self, i64 value, size_t minidx) -> void {
        for (size_t j = minidx; j < mers.size(); ++j) {
            if (value > n / mers[j]) break;  // mers ascending
            i64 next = value * mers[j];
            stack.push_back(mers[j]);
            if (!out.count(next)) out[next] = stack;
            self(self, next, j);
            stack.pop_back();
        }
    };
    rec(rec, 1, 0);
    return out;
}

inline std::vector<i64> enumerate_odd_realizable(i64 n) {
    std::vector<i64> out;
    for (auto& [v, fs] : enumerate_odd_realizable_certs(n)) out.push_back(v);
    return out;  // map iteration is already sorted
}

// Prime powers q with 2 <= q - 1 <= n.
inline std::vector<i64> field_unit_orders(i64 n) {
    std::vector<bool> sieve(static_cast<size_t>(n) + 2, true);
    std::vector<i64> orders;
    for (i64 p = 2; p <= n + 1; ++p) {
        if (!sieve[static_cast<size_t>(p)]) continue;
        for (i64 q = p * p; q <= n + 1; q += p) sieve[static_cast<size_t>(q)] = false;
        for (i64 q = p; q <= n + 1; q = q > (n + 1) / p ? n + 2 : q * p)
            if (q - 1 >= 2) orders.push_back(q - 1);
    }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
}

// Reduced-ring cardinalities up to n: multiplicative closure of the
// field unit orders (with 1 for the empty product).
inline std::vector<bool> reduced_reachable(i64 n) {
    auto factors = field_unit_orders(n);
    std::vector<bool> reach(static_cast<size_t>(n) + 1, false);
    reach[1] = true;
    for (i64 v = 1; v <= n; ++v) {
        if (!reach[static_cast<size_t>(v)]) continue;
        for (i64 f : factors) {
            if (f > n / v) break;
            reach[static_cast<size_t>(v * f)] = true;
        }
    }
    return reach;
}

inline std::vector<i64> enumerate_reduced_cardinalities(i64 n) {
    auto reach = reduced_reachable(n);
    std::vector<i64> out;
    for (i64 v = 1; v <= n; ++v)
        if (reach[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

struct DensityRow {
    i64 n = 0;
    i64 count_all = -1;
    i64 count_odd = -1;
    i64 count_reduced = -1;  // -1 marks a set that was not requested
    std::string density_all, density_odd, density_reduced;
};

struct DensityReport {
    i64 limit = 0;
    std::vector<DensityRow> rows;

    json to_json() const {
        json j;
        j["N"] = limit;
        j["checkpoints"] = json::array();
        for (auto& r : rows) {
            json row;
            row["n"] = r.n;
            if (r.count_all >= 0) {
                row["count_all"] = r.count_all;
                row["density_all"] = r.density_all;
            }
            if (r.count_odd >= 0) {
                row["count_odd"] = r.count_odd;
                row["density_odd"] = r.density_odd;
            }
            if (r.count_reduced >= 0) {
                row["count_reduced"] = r.count_reduced;
                row["density_reduced"] = r.density_reduced;
            }
            j["checkpoints"].push_back(row);
        }
        return j;
    }

    std::string to_csv() const {
        std::string out = "n,count_all,count_odd,count_reduced,density_all,density_odd,"
                          "density_reduced\n";
        auto cell = [](i64 c) { return c >= 0 ? std::to_string(c) : std::string{}; };
        for (auto& r : rows) {
            out += std::to_string(r.n) + "," + cell(r.count_all) + "," + cell(r.count_odd) +
                   "," + cell(r.count_reduced) + "," + r.density_all + "," + r.density_odd +
                   "," + r.density_reduced + "\n";
        }
        return out;
    }
};

// count/n as a decimal string with 10 fractional digits, rounded half up.
inline std::string exact_density(i64 count, i64 n) {
    i128 scaled = i128(count) * 10000000000LL;
    i128 q = scaled / n, r = scaled % n;
    if (2 * r >= n) ++q;
    i64 whole = static_cast<i64>(q / 10000000000LL);
    i64 frac = static_cast<i64>(q % 10000000000LL);
    std::string fs = std::to_string(frac);
    return std::to_string(whole) + "." + std::string(10 - fs.size(), '0') + fs;
}

enum class DensitySet { All, Odd, Reduced };

inline DensityReport density_scan(i64 n, std::vector<i64> checkpoints,
                                  const std::set<DensitySet>& sets, const Bounds& bounds) {
    if (n < 1) throw std::invalid_argument("scan limit must be positive");
    if (n > bounds.density_limit)
        throw bound_error("density scan limit " + std::to_string(n) +
                          " exceeds the configured bound " +
                          std::to_string(bounds.density_limit));
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    for (i64 c : checkpoints)
        if (c < 1 || c > n) throw std::invalid_argument("checkpoint outside [1, N]");

    bool want_all = sets.count(DensitySet::All), want_odd = sets.count(DensitySet::Odd);
    bool want_reduced = sets.count(DensitySet::Reduced);
    std::vector<i64> odd;
    if (want_all || want_odd) odd = enumerate_odd_realizable(n);
    std::vector<bool> reduced;
    if (want_reduced) reduced = reduced_reachable(n);

    DensityReport report;
    report.limit = n;
    i64 reduced_count = 0, reduced_at = 0;
    for (i64 c : checkpoints) {
        DensityRow row;
        row.n = c;
        if (want_all || want_odd) {
            i64 odd_upto = static_cast<i64>(
                std::upper_bound(odd.begin(), odd.end(), c) - odd.begin());
            if (want_odd) {
                row.count_odd = odd_upto;
                row.density_odd = exact_density(odd_upto, c);
            }
            if (want_all) {
                row.count_all = c / 2 + odd_upto;
                row.density_all = exact_density(c / 2 + odd_upto, c);
            }
        }
        if (want_reduced) {
            while (reduced_at < c)
                reduced_count += reduced[static_cast<size_t>(++reduced_at)] ? 1 : 0;
            row.count_reduced = reduced_count;
            row.density_reduced = exact_density(reduced_count, c);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace unitgroups
