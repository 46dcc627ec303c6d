#pragma once

// Finite abelian groups in canonical primary decomposition: a group is a
// map prime -> multiset of exponents (sorted descending), meaning the
// direct sum of Z/p^e Z over all listed (p, e).  Values are immutable
// after construction and safe to share across threads.
//
// Text grammar (CLI and fixtures): terms separated by "x", each term
// "C<d>" or "C<d>^<e>" for e copies of Z/dZ; whitespace ignored;
// non-canonical input such as "C12" is accepted and canonicalized.

#include "unitgroups/ints.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace unitgroups {

class AbelianGroup {
public:
    using PartsMap = std::map<i64, std::vector<int>>;

    AbelianGroup() : order_(1) {}

    // Canonicalize Z/a_1 x ... x Z/a_n.  Order-1 entries are identity
    // factors and are dropped; order <= 0 is an error.
    static AbelianGroup from_orders(const std::vector<i64>& orders) {
        PartsMap parts;
        for (i64 a : orders) {
            if (a <= 0) throw std::invalid_argument("cyclic factor order must be positive");
            if (a == 1) continue;
            for (auto& [p, e] : factorize(a)) parts[p].push_back(e);
        }
        return from_parts(std::move(parts));
    }

    static AbelianGroup from_parts(PartsMap parts) {
        AbelianGroup g;
        i64 n = 1;
        for (auto it = parts.begin(); it != parts.end();) {
            auto& exps = it->second;
            if (exps.empty()) { it = parts.erase(it); continue; }
            std::sort(exps.begin(), exps.end(), std::greater<>());
            for (int e : exps) {
                if (e <= 0) throw std::invalid_argument("exponent must be positive");
                n = checked_mul(n, checked_pow(it->first, e));
            }
            ++it;
        }
        g.parts_ = std::move(parts);
        g.order_ = n;
        return g;
    }

    static AbelianGroup cyclic(i64 n) { return from_orders({n}); }

    const PartsMap& parts() const { return parts_; }
    i64 order() const { return order_; }
    bool trivial() const { return parts_.empty(); }

    bool is_cyclic() const {
        for (auto& [p, exps] : parts_)
            if (exps.size() != 1) return false;
        return true;
    }

    // True iff G is K x K for some K, i.e. every exponent occurs an even
    // number of times within each prime part.
    bool is_square() const {
        for (auto& [p, exps] : parts_) {
            std::map<int, int> mult;
            for (int e : exps) mult[e] += 1;
            for (auto& [e, m] : mult)
                if (m % 2 != 0) return false;
        }
        return true;
    }

    // 0 if the 2-Sylow is trivial, otherwise the minimum exponent among
    // the cyclic factors of the 2-part.
    int min_two_exponent() const {
        auto it = parts_.find(2);
        if (it == parts_.end()) return 0;
        return it->second.back();  // exponents sorted descending
    }

    AbelianGroup sylow(i64 p) const {
        if (!is_prime(p)) throw std::invalid_argument("sylow: p must be prime");
        PartsMap parts;
        auto it = parts_.find(p);
        if (it != parts_.end()) parts[p] = it->second;
        return from_parts(std::move(parts));
    }

    AbelianGroup direct_product(const AbelianGroup& other) const {
        PartsMap parts = parts_;
        for (auto& [p, exps] : other.parts_) {
            auto& dst = parts[p];
            dst.insert(dst.end(), exps.begin(), exps.end());
        }
        return from_parts(std::move(parts));
    }

    // Invariant factors d_1 | d_2 | ... reported largest first.
    std::vector<i64> invariant_factors() const {
        size_t rows = 0;
        for (auto& [p, exps] : parts_) rows = std::max(rows, exps.size());
        std::vector<i64> out(rows, 1);
        for (auto& [p, exps] : parts_)
            for (size_t j = 0; j < exps.size(); ++j)
                out[j] = checked_mul(out[j], checked_pow(p, exps[j]));
        return out;
    }

    i64 exponent() const {
        i64 e = 1;
        for (auto& [p, exps] : parts_) e = checked_mul(e, checked_pow(p, exps.front()));
        return e;
    }

    // Number of elements of each multiplicative order, computed from the
    // decomposition: #{x : ord(x) | d} = prod_(p,e) p^min(e, v_p(d)).
    std::map<i64, i64> element_order_counts() const {
        std::vector<i64> divs = divisors_of(exponent());
        std::sort(divs.begin(), divs.end());
        std::map<i64, i64> upto;  // d -> #elements of order dividing d
        for (i64 d : divs) {
            i64 c = 1;
            for (auto& [p, exps] : parts_) {
                int vp = valuation(d, p);
                for (int e : exps) c = checked_mul(c, checked_pow(p, std::min(e, vp)));
            }
            upto[d] = c;
        }
        std::map<i64, i64> exact;
        for (i64 d : divs) {
            i64 c = upto[d];
            for (i64 d2 : divs) {
                if (d2 >= d) break;
                if (d % d2 == 0) c -= exact[d2];
            }
            if (c != 0) exact[d] = c;
        }
        return exact;
    }

    // Every abelian group of order n (one per isomorphism class).
    static std::vector<AbelianGroup> all_of_order(i64 n) {
        if (n < 1) throw std::invalid_argument("group order must be positive");
        std::vector<AbelianGroup> out{AbelianGroup()};
        for (auto& [p, k] : factorize(n)) {
            std::vector<AbelianGroup> next;
            for (auto& part : partitions(k)) {
                for (auto& g : out) {
                    PartsMap parts = g.parts_;
                    parts[p] = part;
                    next.push_back(from_parts(std::move(parts)));
                }
            }
            out = std::move(next);
        }
        return out;
    }

    // Recovers the unique abelian group of order n whose element-order
    // statistics match `counts` by scanning all candidates of order n.
    // Throws if nothing matches (non-abelian or inconsistent input).
    static AbelianGroup from_order_statistics(const std::map<i64, i64>& counts, i64 n) {
        i64 total = 0;
        for (auto& [d, c] : counts) total = checked_add(total, c);
        if (total != n)
            throw std::invalid_argument("order statistics do not sum to the group order");
        for (auto& cand : all_of_order(n))
            if (cand.element_order_counts() == counts) return cand;
        throw std::invalid_argument("no abelian group matches the given order statistics");
    }

    std::string str() const {
        if (parts_.empty()) return "C1";
        std::ostringstream os;
        bool first = true;
        for (auto& [p, exps] : parts_) {
            size_t j = 0;
            while (j < exps.size()) {
                size_t rep = 1;
                while (j + rep < exps.size() && exps[j + rep] == exps[j]) ++rep;
                if (!first) os << " x ";
                first = false;
                os << "C" << checked_pow(p, exps[j]);
                if (rep > 1) os << "^" << rep;
                j += rep;
            }
        }
        return os.str();
    }

    static AbelianGroup parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty()) throw std::invalid_argument("empty group expression");
        std::vector<i64> orders;
        size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != 'C' && s[pos] != 'c')
                throw std::invalid_argument("expected 'C<d>' term in group expression");
            ++pos;
            i64 d = parse_uint(s, pos);
            i64 rep = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                rep = parse_uint(s, pos);
                if (rep < 1) throw std::invalid_argument("repetition count must be >= 1");
            }
            for (i64 j = 0; j < rep; ++j) orders.push_back(d);
            if (pos < s.size()) {
                if (s[pos] != 'x' && s[pos] != 'X' && s[pos] != '*')
                    throw std::invalid_argument("expected 'x' between group terms");
                ++pos;
            }
        }
        return from_orders(orders);
    }

    bool operator==(const AbelianGroup& o) const { return parts_ == o.parts_; }
    auto operator<=>(const AbelianGroup& o) const { return parts_ <=> o.parts_; }

private:
    static std::vector<i64> divisors_of(i64 n) {
        std::vector<i64> divs{1};
        for (auto& [p, k] : factorize(n)) {
            size_t base = divs.size();
            i64 pe = 1;
            for (int e = 1; e <= k; ++e) {
                pe = checked_mul(pe, p);
                for (size_t j = 0; j < base; ++j) divs.push_back(checked_mul(divs[j], pe));
            }
        }
        return divs;
    }

    static i64 parse_uint(const std::string& s, size_t& pos) {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("expected integer in group expression");
        i64 v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = checked_add(checked_mul(v, 10), s[pos] - '0');
            ++pos;
        }
        return v;
    }

    PartsMap parts_;
    i64 order_;
};

} // namespace unitgroups
