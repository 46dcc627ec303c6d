// unitgroups: classify finite abelian groups as unit groups of
// commutative rings, construct witness rings, verify certificates with
// the brute-force oracle, and scan realizable-cardinality densities.
//
// Exit codes: 0 definitive answer (Realizable or NotRealizable verdicts,
// successful verification, completed reports), 1 verification mismatch,
// 2 resource or parse error, 3 Unknown verdict.

#include "unitgroups/classify.hpp"
#include "unitgroups/density.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace unitgroups;

namespace {

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

i64 parse_count(const std::string& text) {
    // accepts "1000000" and "1e6"
    auto epos = text.find_first_of("eE");
    if (epos == std::string::npos) return std::stoll(text);
    i64 mant = std::stoll(text.substr(0, epos));
    int exp = std::stoi(text.substr(epos + 1));
    for (int j = 0; j < exp; ++j) mant = checked_mul(mant, 10);
    return mant;
}

void print_verdict(const Verdict& v, const AbelianGroup& g, bool pretty) {
    if (!pretty) {
        std::cout << v.to_json(g).dump() << "\n";
        return;
    }
    std::cout << g.str() << ": " << v.status_name() << "\n";
    if (v.witness) {
        std::cout << "  witness: " << v.witness->presentation.describe() << "\n";
        std::cout << "  claimed: " << v.witness->claimed_group.str() << "\n";
        std::cout << "  check via: " << verification_name(v.witness->verification) << "  ["
                  << v.witness->citation << "]\n";
    }
    if (!v.witness_class.empty()) std::cout << "  witness class: " << v.witness_class << "\n";
    for (auto& o : v.obstructions)
        std::cout << "  obstruction " << o.rule << ": " << o.statement << "\n";
    for (auto& t : v.trace)
        std::cout << "  splitting finite=" << t.finite_part << " type2=" << t.type2_part
                  << " -> " << t.violated << "\n";
    if (!v.notes.empty()) std::cout << "  notes: " << v.notes << "\n";
}

int verdict_exit(const Verdict& v) {
    return v.status == Verdict::Status::Unknown ? 3 : 0;
}

struct Options {
    Bounds bounds;
    RuleSet rules;
    WitnessRegistry registry = WitnessRegistry::builtin();
    bool pretty = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "realizability of finite abelian groups as unit groups of commutative rings"};
    app.require_subcommand(1);

    Options opt;
    std::string config_path, registry_path;
    app.add_option("--config", config_path, "key=value config file for bounds");
    app.add_option("--registry", registry_path, "JSON file with extra witness certificates");
    app.add_flag("--pretty", opt.pretty, "human-readable output instead of JSON");
    app.add_option("--oracle-bound", opt.bounds.oracle_size,
                   "max ring elements enumerated (default 2^20)");
    app.add_option("--an-bound", opt.bounds.an_index, "max A_n index (default 6)");
    app.add_option("--density-limit", opt.bounds.density_limit,
                   "max N for density scans (default 1e8)");
    app.add_option("--group-order-limit", opt.bounds.group_order_limit,
                   "max group order in splitting searches (default 2^16)");
    app.add_option("--reduced-bound", opt.bounds.reduced_search_limit,
                   "max group order for the reduced classifier (default 2^16)");

    // classify-group
    auto* cg = app.add_subcommand("classify-group", "classify a finite abelian group");
    cg->fallthrough();
    std::string group_text, ring_class = "any";
    std::vector<std::string> enabled_rules;
    cg->add_option("group", group_text, "group, e.g. \"C4 x C11^2\"")->required();
    cg->add_option("--ring-class", ring_class,
                   "domain | torsion-free | reduced | char0 | any (default any)");
    cg->add_option("--enable-rule", enabled_rules, "enable a gated rule (F2)");

    // classify-cyclic
    auto* cc = app.add_subcommand("classify-cyclic", "classify the cyclic group of order n");
    cc->fallthrough();
    i64 cyclic_n = 0;
    cc->add_option("n", cyclic_n, "cyclic group order")->required();

    // ditor
    auto* dt = app.add_subcommand("ditor", "can n be the number of units of a ring?");
    dt->fallthrough();
    i64 ditor_n = 0;
    dt->add_option("n", ditor_n, "candidate cardinality")->required();

    // witness
    auto* wt = app.add_subcommand("witness", "emit a witness certificate for a group");
    wt->fallthrough();
    std::string witness_group;
    wt->add_option("group", witness_group, "group, e.g. \"C2 x C5\"")->required();

    // verify
    auto* vf = app.add_subcommand("verify", "replay a certificate through the oracle");
    vf->fallthrough();
    std::string cert_path = "-", expect_group;
    vf->add_option("--cert", cert_path, "certificate JSON file, or - for stdin");
    vf->add_option("--expect", expect_group, "expected unit group (overrides the claim)");

    // units
    auto* un = app.add_subcommand("units", "compute the unit group of a presented ring");
    un->fallthrough();
    std::string ring_path;
    i64 zmod_n = 0;
    int an_n = -1;
    un->add_option("--ring", ring_path, "RingPresentation JSON file, or - for stdin");
    un->add_option("--zmod", zmod_n, "shortcut: the ring Z/nZ");
    un->add_option("--an", an_n, "shortcut: the ring A_n");

    // density
    auto* dn = app.add_subcommand("density", "densities of realizable unit counts");
    dn->fallthrough();
    std::string max_text, checkpoints_text, set_text = "all,odd,reduced", out_path;
    dn->add_option("--max", max_text, "scan limit N (accepts 1e6)")->required();
    dn->add_option("--checkpoints", checkpoints_text, "comma-separated checkpoints (default N)");
    dn->add_option("--set", set_text, "all | odd | reduced, comma-separated");
    dn->add_option("--out", out_path, "also write the report as CSV to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) opt.bounds.load_file(config_path);
        if (!registry_path.empty())
            opt.registry.load(json::parse(read_source(registry_path)));
        for (auto& r : enabled_rules)
            if (!opt.rules.enable(r)) throw std::invalid_argument("unknown rule: " + r);

        if (*cg) {
            auto g = AbelianGroup::parse(group_text);
            Verdict v;
            if (ring_class == "domain") v = classify_domain(g);
            else if (ring_class == "torsion-free") v = classify_torsion_free(g);
            else if (ring_class == "reduced") v = classify_reduced(g, opt.bounds);
            else if (ring_class == "char0") v = classify_char0(g, opt.rules, opt.bounds, opt.registry);
            else if (ring_class == "any") v = classify_general(g, opt.rules, opt.bounds, opt.registry);
            else throw std::invalid_argument("unknown ring class: " + ring_class);
            print_verdict(v, g, opt.pretty);
            return verdict_exit(v);
        }
        if (*cc) {
            auto v = classify_cyclic(cyclic_n);
            if (!opt.pretty) {
                json j = v.to_json(AbelianGroup::cyclic(cyclic_n));
                j["order"] = cyclic_n;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "order " << cyclic_n << ":\n";
                print_verdict(v, AbelianGroup::cyclic(cyclic_n), true);
            }
            return verdict_exit(v);
        }
        if (*dt) {
            auto v = ditor_cardinality(ditor_n);
            if (!opt.pretty) {
                json j = v.to_json(AbelianGroup());
                j.erase("group");
                j["cardinality"] = ditor_n;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << ditor_n << ": " << v.status_name() << "\n";
                if (v.witness)
                    std::cout << "  witness: " << v.witness->presentation.describe() << " with "
                              << v.witness->claimed_group.str() << " units\n";
                for (auto& o : v.obstructions)
                    std::cout << "  obstruction " << o.rule << ": " << o.statement << "\n";
            }
            return verdict_exit(v);
        }
        if (*wt) {
            auto g = AbelianGroup::parse(witness_group);
            auto v = classify_general(g, opt.rules, opt.bounds, opt.registry);
            if (v.status == Verdict::Status::Realizable && v.witness) {
                std::cout << (opt.pretty ? v.witness->to_json().dump(2)
                                         : v.witness->to_json().dump())
                          << "\n";
                return 0;
            }
            print_verdict(v, g, opt.pretty);
            return verdict_exit(v);
        }
        if (*vf) {
            json j = json::parse(read_source(cert_path));
            WitnessCertificate cert;
            if (j.contains("presentation")) {
                cert = WitnessCertificate::from_json(j);
            } else {
                if (expect_group.empty())
                    throw std::invalid_argument(
                        "a bare presentation needs --expect <group>");
                cert.presentation = RingPresentation::from_json(j);
                cert.verification = VerificationMethod::FiniteBruteForce;
            }
            if (!expect_group.empty()) cert.claimed_group = AbelianGroup::parse(expect_group);
            auto res = verify_certificate(cert, opt.bounds);
            json out = res.report.to_json();
            out["verified"] = res.ok;
            out["claimed_group"] = cert.claimed_group.str();
            if (!res.ok) out["message"] = res.message;
            std::cout << (opt.pretty ? out.dump(2) : out.dump()) << "\n";
            return res.ok ? 0 : 1;
        }
        if (*un) {
            RingPresentation pres;
            if (zmod_n > 0) pres = RingPresentation::zmod(zmod_n);
            else if (an_n >= 0) pres = RingPresentation::an_ring(an_n);
            else if (!ring_path.empty()) pres = RingPresentation::from_json(json::parse(read_source(ring_path)));
            else throw std::invalid_argument("units needs --ring, --zmod or --an");
            auto rep = evaluate_presentation(pres, opt.bounds);
            std::cout << (opt.pretty ? rep.to_json().dump(2) : rep.to_json().dump()) << "\n";
            return 0;
        }
        if (*dn) {
            i64 n = parse_count(max_text);
            std::vector<i64> checkpoints;
            if (checkpoints_text.empty()) {
                checkpoints.push_back(n);
            } else {
                std::stringstream ss(checkpoints_text);
                std::string tok;
                while (std::getline(ss, tok, ',')) checkpoints.push_back(parse_count(tok));
            }
            std::set<DensitySet> sets;
            std::stringstream ss(set_text);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok == "all") sets.insert(DensitySet::All);
                else if (tok == "odd") sets.insert(DensitySet::Odd);
                else if (tok == "reduced") sets.insert(DensitySet::Reduced);
                else throw std::invalid_argument("unknown density set: " + tok);
            }
            auto report = density_scan(n, checkpoints, sets, opt.bounds);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw std::invalid_argument("cannot write: " + out_path);
                out << report.to_csv();
            }
            if (opt.pretty) std::cout << report.to_csv();
            else std::cout << report.to_json().dump() << "\n";
            return 0;
        }
    } catch (const bound_error& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
