#pragma once

// Witness certificates: a ring presentation, the unit group it claims,
// and the oracle route that checks the claim.  Constructors cover the
// sufficient rules of the classifier; the registry holds individually
// certified special cases and can be extended from a JSON file without
// code changes.

#include "unitgroups/abelian.hpp"
#include "unitgroups/oracle.hpp"
#include "unitgroups/presentation.hpp"

#include <optional>

namespace unitgroups {

enum class VerificationMethod { FiniteBruteForce, Char0Lift, AnLinearAlgebra };

inline std::string verification_name(VerificationMethod m) {
    switch (m) {
        case VerificationMethod::FiniteBruteForce: return "FiniteBruteForce";
        case VerificationMethod::Char0Lift: return "Char0Lift";
        case VerificationMethod::AnLinearAlgebra: return "AnLinearAlgebra";
    }
    throw std::logic_error("unknown verification method");
}

inline VerificationMethod verification_from_name(const std::string& s) {
    if (s == "FiniteBruteForce") return VerificationMethod::FiniteBruteForce;
    if (s == "Char0Lift") return VerificationMethod::Char0Lift;
    if (s == "AnLinearAlgebra") return VerificationMethod::AnLinearAlgebra;
    throw std::invalid_argument("unknown verification method: " + s);
}

struct WitnessCertificate {
    RingPresentation presentation;
    AbelianGroup claimed_group;
    VerificationMethod verification = VerificationMethod::Char0Lift;
    std::string citation;

    json to_json() const {
        json j;
        j["presentation"] = presentation.to_json();
        j["claimed_group"] = claimed_group.str();
        j["verification"] = verification_name(verification);
        j["citation"] = citation;
        return j;
    }

    static WitnessCertificate from_json(const json& j) {
        WitnessCertificate c;
        c.presentation = RingPresentation::from_json(j.at("presentation"));
        c.claimed_group = AbelianGroup::parse(j.at("claimed_group").get<std::string>());
        c.verification = verification_from_name(j.at("verification").get<std::string>());
        if (j.contains("citation")) c.citation = j.at("citation").get<std::string>();
        return c;
    }
};

struct VerifyResult {
    bool ok = false;
    UnitGroupReport report;
    std::string message;
};

// Replay a certificate through the oracle and compare structures.
inline VerifyResult verify_certificate(const WitnessCertificate& cert, const Bounds& bounds) {
    VerifyResult res;
    res.report = evaluate_presentation(cert.presentation, bounds);
    res.ok = res.report.structure == cert.claimed_group && res.report.exact_sequence_ok;
    if (!res.ok) {
        res.message = "computed " + res.report.structure.str() + ", claimed " +
                      cert.claimed_group.str();
        if (!res.report.exact_sequence_ok) res.message += " (exact-sequence cardinality failed)";
    } else {
        res.message = "verified";
    }
    return res;
}

// Z/2 x H via Z[x_1..x_n]/(a_i x_i, x_i x_j), a_i the invariant factors of H.
inline WitnessCertificate witness_z2_times_h(const AbelianGroup& h) {
    WitnessCertificate cert;
    std::vector<GaussianInt> moduli;
    for (i64 d : h.invariant_factors()) moduli.push_back(GaussianInt{d});
    cert.presentation = RingPresentation::nilpotent_extension(BaseRing::Z, std::move(moduli));
    cert.claimed_group = AbelianGroup::cyclic(2).direct_product(h);
    cert.verification = VerificationMethod::Char0Lift;
    cert.citation = "char0.z2-nilpotent-extension";
    return cert;
}

// Eligibility for the Z/4 x H construction over Z[i]: every p = 3 (mod 4)
// Sylow a square, and the 2-part either P or Z/4 x P where P has evenly
// many factors, exponents >= 2 ascending, and paired exponents differing
// by at most 1.
namespace detail {

inline bool valid_two_pairing(std::vector<int> exps_ascending) {
    if (exps_ascending.size() % 2 != 0) return false;
    for (size_t j = 0; j < exps_ascending.size(); j += 2) {
        if (exps_ascending[j] < 2) return false;
        if (exps_ascending[j + 1] - exps_ascending[j] > 1) return false;
    }
    return true;
}

} // namespace detail

// Decides H2 eligibility and reports whether the 2-part needs the extra
// Z[i] factor (the Z/4 x P case).
inline bool h2_eligible(const AbelianGroup& h, bool* needs_extra_z4 = nullptr) {
    for (auto& [p, exps] : h.parts()) {
        if (p == 2) continue;
        if (p % 4 == 3 && !h.sylow(p).is_square()) return false;
    }
    std::vector<int> exps;
    if (auto it = h.parts().find(2); it != h.parts().end()) exps = it->second;
    std::sort(exps.begin(), exps.end());
    if (detail::valid_two_pairing(exps)) {
        if (needs_extra_z4) *needs_extra_z4 = false;
        return true;
    }
    auto two = std::find(exps.begin(), exps.end(), 2);
    if (two != exps.end()) {
        std::vector<int> rest(exps.begin(), two);
        rest.insert(rest.end(), std::next(two), exps.end());
        if (detail::valid_two_pairing(rest)) {
            if (needs_extra_z4) *needs_extra_z4 = true;
            return true;
        }
    }
    return false;
}

// Canonical split prime over p = 1 (mod 4): the associate with positive
// imaginary part.
inline GaussianInt split_prime_over(i64 p) {
    for (auto& [pi, e] : factor(GaussianInt{p}).factors)
        if (pi.im > 0) return pi;
    throw std::logic_error("no split prime found over " + std::to_string(p));
}

// Z/4 x H via Z[i][x_1..x_n]/(a_i x_i, x_i x_j) with moduli chosen per
// prime from the quotient table: split primes pi^e for p = 1 (mod 4),
// inert p^e for paired p = 3 (mod 4) exponents, (1+i)-powers pairing the
// 2-part exponents; an extra Z[i] direct factor supplies the Z/4 x P case.
inline WitnessCertificate witness_h2(const AbelianGroup& h) {
    bool extra_z4 = false;
    if (!h2_eligible(h, &extra_z4))
        throw std::invalid_argument("group fails the Z/4 x H eligibility conditions");
    std::vector<GaussianInt> moduli;
    for (auto& [p, exps_desc] : h.parts()) {
        std::vector<int> exps = exps_desc;
        std::sort(exps.begin(), exps.end());
        if (p == 2) {
            if (extra_z4) exps.erase(std::find(exps.begin(), exps.end(), 2));
            GaussianInt ramified{1, 1};
            for (size_t j = 0; j < exps.size(); j += 2) {
                int e1 = exps[j], e2 = exps[j + 1];
                int h2 = e1 == e2 ? 2 * e1 : 2 * e1 + 1;
                GaussianInt m{1};
                for (int t = 0; t < h2; ++t) m = m * ramified;
                moduli.push_back(canonical_associate(m).first);
            }
        } else if (p % 4 == 1) {
            GaussianInt pi = split_prime_over(p);
            for (int e : exps) {
                GaussianInt m{1};
                for (int t = 0; t < e; ++t) m = m * pi;
                moduli.push_back(canonical_associate(m).first);
            }
        } else {
            // paired equal exponents; each pair is one inert modulus p^e
            for (size_t j = 0; j < exps.size(); j += 2)
                moduli.push_back(GaussianInt{checked_pow(p, exps[j])});
        }
    }
    WitnessCertificate cert;
    auto ext = RingPresentation::nilpotent_extension(BaseRing::Zi, std::move(moduli));
    cert.presentation =
        extra_z4 ? RingPresentation::direct_product({ext, RingPresentation::gaussian_integers()})
                 : ext;
    cert.claimed_group = AbelianGroup::cyclic(4).direct_product(h);
    cert.verification = VerificationMethod::Char0Lift;
    cert.citation = "char0.z4-gaussian-extension";
    return cert;
}

// (Z/2)^a x (Z/4)^b x (Z/3)^c via Z^(a-1) x Z[i]^b x A_(c-1) (or
// Z^a x Z[i]^b when c = 0).
inline WitnessCertificate witness_torsion_free(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative exponents");
    if (a + b < 1) throw std::invalid_argument("torsion-free units have even order: a+b >= 1");
    if (c >= 1 && a < 1)
        throw std::invalid_argument("3-torsion in torsion-free units requires a >= 1");
    std::vector<RingPresentation> comps;
    int zcopies = c >= 1 ? a - 1 : a;
    for (int j = 0; j < zcopies; ++j) comps.push_back(RingPresentation::integers());
    for (int j = 0; j < b; ++j) comps.push_back(RingPresentation::gaussian_integers());
    if (c >= 1) comps.push_back(RingPresentation::an_ring(c - 1));
    WitnessCertificate cert;
    cert.presentation = comps.size() == 1 ? comps.front()
                                          : RingPresentation::direct_product(std::move(comps));
    AbelianGroup::PartsMap parts;
    if (a + b > 0) {
        auto& twos = parts[2];
        for (int j = 0; j < b; ++j) twos.push_back(2);
        for (int j = 0; j < a; ++j) twos.push_back(1);
    }
    if (c > 0) parts[3] = std::vector<int>(static_cast<size_t>(c), 1);
    cert.claimed_group = AbelianGroup::from_parts(std::move(parts));
    cert.verification = c >= 1 ? VerificationMethod::AnLinearAlgebra
                               : VerificationMethod::Char0Lift;
    cert.citation = "torsion-free.construction";
    return cert;
}

// ---------------------------------------------------------------------------
// Registry of individually certified witnesses.

inline const char* kBuiltinRegistry = R"json({
  "certificates": [
    {
      "claimed_group": "C8 x C4",
      "citation": "char0.registry.z8xz4",
      "verification": "Char0Lift",
      "presentation": {
        "base": "Zi",
        "family": "DirectProduct",
        "params": {
          "components": [
            {"base": "Zi", "family": "NilpotentExtension", "params": {"moduli": []}},
            {"base": "Zmod:3", "family": "EliminatedQuotient",
             "params": {"generators": ["x"], "relations": ["x^2 + 1"],
                         "nilradical": [], "quotient_units": []}}
          ]
        }
      }
    }
  ]
})json";

class WitnessRegistry {
public:
    static const WitnessRegistry& builtin() {
        static WitnessRegistry reg = [] {
            WitnessRegistry r;
            r.load(json::parse(kBuiltinRegistry));
            return r;
        }();
        return reg;
    }

    void load(const json& j) {
        for (auto& entry : j.at("certificates")) {
            auto cert = WitnessCertificate::from_json(
                json{{"presentation", entry.at("presentation")},
                     {"claimed_group", entry.at("claimed_group")},
                     {"verification", entry.at("verification")},
                     {"citation", entry.value("citation", "char0.registry")}});
            entries_[cert.claimed_group] = cert;
        }
    }

    std::optional<WitnessCertificate> lookup(const AbelianGroup& g) const {
        auto it = entries_.find(g);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    size_t size() const { return entries_.size(); }

private:
    std::map<AbelianGroup, WitnessCertificate> entries_;
};

} // namespace unitgroups
