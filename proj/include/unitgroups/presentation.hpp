#pragma once

// Ring presentations: the serializable descriptions of witness rings.
//
//   DirectProduct       components R_1 x ... x R_m
//   NilpotentExtension  R[x_1..x_n] / (a_i x_i, x_i x_j) over base R
//   AnRing              Z[x, y_1..y_n] / (x^2+x+1, y_i^2+y_i+1)
//   EliminatedQuotient  base[x(,y)] / (relations), at most two generators;
//                       a relation linear in one generator eliminates it
//
// JSON schema: {"base": "Z"|"Zi"|"Zmod:<n>", "family": ..., "params": ...}.
// This is the certificate format consumed by `verify`.

#include "unitgroups/gaussian.hpp"
#include "unitgroups/poly.hpp"
#include "unitgroups/smith.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace unitgroups {

using json = nlohmann::json;

enum class BaseRing { Z, Zi, Zmod };
enum class Family { DirectProduct, NilpotentExtension, AnRing, EliminatedQuotient };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::DirectProduct: return "DirectProduct";
        case Family::NilpotentExtension: return "NilpotentExtension";
        case Family::AnRing: return "AnRing";
        case Family::EliminatedQuotient: return "EliminatedQuotient";
    }
    throw std::logic_error("unknown family");
}

struct RingPresentation {
    BaseRing base = BaseRing::Z;
    i64 modulus = 0;  // for Zmod
    Family family = Family::NilpotentExtension;

    std::vector<RingPresentation> components;  // DirectProduct
    std::vector<GaussianInt> moduli;           // NilpotentExtension (im = 0 over Z)
    int an_index = 0;                          // AnRing

    // EliminatedQuotient (expressions in x and optionally y)
    std::vector<std::string> generators;       // {"x"} or {"x","y"}
    std::vector<std::string> relations;
    std::vector<std::string> nilradical;       // ideal generators of the nilradical
    std::vector<std::string> quotient_units;   // unit lifts of the reduced quotient

    static RingPresentation integers() {
        RingPresentation p;
        p.base = BaseRing::Z;
        p.family = Family::NilpotentExtension;
        return p;
    }

    static RingPresentation gaussian_integers() {
        RingPresentation p;
        p.base = BaseRing::Zi;
        p.family = Family::NilpotentExtension;
        return p;
    }

    static RingPresentation zmod(i64 n) {
        if (n < 2) throw std::invalid_argument("Zmod base needs modulus >= 2");
        RingPresentation p;
        p.base = BaseRing::Zmod;
        p.modulus = n;
        p.family = Family::NilpotentExtension;
        return p;
    }

    static RingPresentation nilpotent_extension(BaseRing base, std::vector<GaussianInt> moduli,
                                                i64 mod = 0) {
        RingPresentation p;
        p.base = base;
        p.modulus = mod;
        p.family = Family::NilpotentExtension;
        for (auto& a : moduli)
            if (a.is_zero()) throw std::invalid_argument("nilpotent extension moduli must be nonzero");
        p.moduli = std::move(moduli);
        return p;
    }

    static RingPresentation an_ring(int n) {
        if (n < 0) throw std::invalid_argument("A_n index must be >= 0");
        RingPresentation p;
        p.base = BaseRing::Z;
        p.family = Family::AnRing;
        p.an_index = n;
        return p;
    }

    static RingPresentation direct_product(std::vector<RingPresentation> comps) {
        RingPresentation p;
        p.family = Family::DirectProduct;
        p.components = std::move(comps);
        return p;
    }

    // F_{p^k} presented as Z/p[t]/(f) with f irreducible of degree k.
    static RingPresentation finite_field(i64 p, int k);

    std::string base_name() const {
        switch (base) {
            case BaseRing::Z: return "Z";
            case BaseRing::Zi: return "Zi";
            case BaseRing::Zmod: return "Zmod:" + std::to_string(modulus);
        }
        throw std::logic_error("unknown base");
    }

    json to_json() const {
        json j;
        j["base"] = base_name();
        j["family"] = family_name(family);
        json params = json::object();
        switch (family) {
            case Family::DirectProduct: {
                params["components"] = json::array();
                for (auto& c : components) params["components"].push_back(c.to_json());
                break;
            }
            case Family::NilpotentExtension: {
                params["moduli"] = json::array();
                for (auto& a : moduli) params["moduli"].push_back(gaussian_str(a));
                break;
            }
            case Family::AnRing: {
                params["n"] = an_index;
                break;
            }
            case Family::EliminatedQuotient: {
                params["generators"] = generators;
                params["relations"] = relations;
                params["nilradical"] = nilradical;
                params["quotient_units"] = quotient_units;
                break;
            }
        }
        j["params"] = params;
        return j;
    }

    static RingPresentation from_json(const json& j) {
        RingPresentation p;
        std::string base = j.at("base").get<std::string>();
        if (base == "Z") {
            p.base = BaseRing::Z;
        } else if (base == "Zi") {
            p.base = BaseRing::Zi;
        } else if (base.rfind("Zmod:", 0) == 0) {
            p.base = BaseRing::Zmod;
            p.modulus = std::stoll(base.substr(5));
            if (p.modulus < 2) throw std::invalid_argument("Zmod modulus must be >= 2");
        } else {
            throw std::invalid_argument("unknown base ring: " + base);
        }
        std::string fam = j.at("family").get<std::string>();
        const json& params = j.at("params");
        if (fam == "DirectProduct") {
            p.family = Family::DirectProduct;
            for (auto& c : params.at("components")) p.components.push_back(from_json(c));
        } else if (fam == "NilpotentExtension") {
            p.family = Family::NilpotentExtension;
            for (auto& m : params.at("moduli"))
                p.moduli.push_back(parse_gaussian(m.get<std::string>()));
            for (auto& a : p.moduli)
                if (a.is_zero()) throw std::invalid_argument("zero modulus in presentation");
        } else if (fam == "AnRing") {
            p.family = Family::AnRing;
            p.an_index = params.at("n").get<int>();
            if (p.an_index < 0) throw std::invalid_argument("A_n index must be >= 0");
        } else if (fam == "EliminatedQuotient") {
            p.family = Family::EliminatedQuotient;
            p.generators = params.at("generators").get<std::vector<std::string>>();
            p.relations = params.at("relations").get<std::vector<std::string>>();
            if (params.contains("nilradical"))
                p.nilradical = params.at("nilradical").get<std::vector<std::string>>();
            if (params.contains("quotient_units"))
                p.quotient_units = params.at("quotient_units").get<std::vector<std::string>>();
            if (p.generators.size() > 2)
                throw std::invalid_argument("eliminated quotients support at most two generators");
        } else {
            throw std::invalid_argument("unknown presentation family: " + fam);
        }
        return p;
    }

    // One-line human-readable description.
    std::string describe() const {
        switch (family) {
            case Family::DirectProduct: {
                if (components.empty()) return "trivial product";
                std::string s;
                for (size_t j = 0; j < components.size(); ++j) {
                    if (j) s += " x ";
                    s += components[j].describe();
                }
                return s;
            }
            case Family::NilpotentExtension: {
                if (moduli.empty()) return base_display();
                std::string s = base_display() + "[x1..x" + std::to_string(moduli.size()) +
                                "]/(x_i x_j";
                for (size_t j = 0; j < moduli.size(); ++j)
                    s += ", " + gaussian_str(moduli[j]) + "*x" + std::to_string(j + 1);
                return s + ")";
            }
            case Family::AnRing:
                return "Z[x,y1..y" + std::to_string(an_index) + "]/(x^2+x+1, y_i^2+y_i+1)";
            case Family::EliminatedQuotient: {
                std::string s = base_display() + "[";
                for (size_t j = 0; j < generators.size(); ++j) {
                    if (j) s += ",";
                    s += generators[j];
                }
                s += "]/(";
                for (size_t j = 0; j < relations.size(); ++j) {
                    if (j) s += ", ";
                    s += relations[j];
                }
                return s + ")";
            }
        }
        throw std::logic_error("unknown family");
    }

private:
    std::string base_display() const {
        switch (base) {
            case BaseRing::Z: return "Z";
            case BaseRing::Zi: return "Z[i]";
            case BaseRing::Zmod: return "Z/" + std::to_string(modulus);
        }
        return "?";
    }
};

// Gaussian-integer matrices serialize as JSON arrays of rows of "a+bi"
// strings.
template <typename T>
json matrix_to_json(const Matrix<T>& m);

template <>
inline json matrix_to_json(const Matrix<GaussianInt>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(gaussian_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Matrix<GaussianInt> gaussian_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a non-empty array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    Matrix<GaussianInt> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(static_cast<size_t>(i)).size()) != cols)
            throw std::invalid_argument("ragged matrix JSON");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_gaussian(
                j.at(static_cast<size_t>(i)).at(static_cast<size_t>(c)).get<std::string>());
    }
    return m;
}

// Smallest-lexicographic monic irreducible polynomial of degree k over F_p,
// found by exhausting monic divisors of lower degree.
inline std::vector<i64> irreducible_poly_mod_p(i64 p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("finite field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("finite field degree must be >= 1");
    if (k == 1) return {0, 1};  // t
    i64 total = checked_pow(p, k);
    for (i64 code = 0; code < total; ++code) {
        std::vector<i64> f(static_cast<size_t>(k) + 1);
        i64 rest = code;
        for (int j = 0; j < k; ++j) { f[static_cast<size_t>(j)] = rest % p; rest /= p; }
        f[static_cast<size_t>(k)] = 1;
        // trial divide by every monic polynomial of degree 1..k/2
        bool irreducible = true;
        for (int d = 1; irreducible && 2 * d <= k; ++d) {
            i64 dcount = checked_pow(p, d);
            for (i64 gcode = 0; gcode < dcount; ++gcode) {
                std::vector<i64> g(static_cast<size_t>(d) + 1);
                i64 grest = gcode;
                for (int j = 0; j < d; ++j) { g[static_cast<size_t>(j)] = grest % p; grest /= p; }
                g[static_cast<size_t>(d)] = 1;
                // remainder of f mod g
                std::vector<i64> r = f;
                while (static_cast<int>(r.size()) - 1 >= d) {
                    i64 lead = r.back() % p;
                    if (lead) {
                        size_t shift = r.size() - g.size();
                        for (size_t j = 0; j < g.size(); ++j) {
                            r[j + shift] = ((r[j + shift] - lead * g[j]) % p + p) % p;
                        }
                    }
                    r.pop_back();
                }
                bool zero = true;
                for (i64 v : r)
                    if (v % p != 0) { zero = false; break; }
                if (zero) { irreducible = false; break; }
            }
        }
        if (irreducible) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

inline RingPresentation RingPresentation::finite_field(i64 p, int k) {
    RingPresentation pres = RingPresentation::zmod(p);
    pres.family = Family::EliminatedQuotient;
    pres.generators = {"x"};
    auto f = irreducible_poly_mod_p(p, k);
    std::string rel;
    bool first = true;
    for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j) {
        i64 c = f[static_cast<size_t>(j)];
        if (c == 0) continue;
        if (!first) rel += " + ";
        first = false;
        if (j == 0) {
            rel += std::to_string(c);
        } else {
            if (c != 1) rel += std::to_string(c) + "*";
            rel += j == 1 ? "x" : "x^" + std::to_string(j);
        }
    }
    pres.relations = {rel};
    return pres;
}

} // namespace unitgroups
