// nle: command-line front end for the nonlocality library.
//
// Exit codes: 0 success, 1 failed reproduction rows, 2 domain error, 3 parse/usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nle/nle.hpp"
#include "nle/reproduce.hpp"

namespace {

using nlohmann::json;
using namespace nle;

struct Source {
    std::string ensemble;
    std::string file;
    std::vector<std::string> params;  // key=value
    std::vector<std::size_t> indices; // 1-based on the command line
};

struct ModeFlags {
    std::string mode = "fixed";
    std::size_t depth = 1;
    std::size_t restarts = 8;
    std::uint64_t seed = 0;
    std::string rotate = "both";
    std::size_t max_evals = 4000;
};

struct Common {
    Source src;
    ModeFlags mf;
    std::string direction = "both";
    std::string first = "any";
    bool as_json = false;
};

void add_source(CLI::App* cmd, Source& s) {
    auto* e = cmd->add_option("--ensemble", s.ensemble, "catalog name");
    auto* f = cmd->add_option("--file", s.file, "ensemble file (JSON)");
    e->excludes(f);
    cmd->add_option("--param", s.params, "catalog parameter key=value (repeatable)");
    cmd->add_option("--indices", s.indices, "keep only these members (1-based)")->delimiter(',');
}

void add_mode(CLI::App* cmd, ModeFlags& m) {
    cmd->add_option("--mode", m.mode, "fixed|ensemble-lu|per-state-lu|assign")
        ->check(CLI::IsMember({"fixed", "ensemble-lu", "per-state-lu", "assign"}));
    cmd->add_option("--depth", m.depth, "layers of local unitaries + CNOT");
    cmd->add_option("--restarts", m.restarts, "optimizer restarts");
    cmd->add_option("--seed", m.seed, "optimizer seed");
    cmd->add_option("--rotate", m.rotate, "both|target: which sides get local unitaries")
        ->check(CLI::IsMember({"both", "target"}));
    cmd->add_option("--max-evals", m.max_evals, "objective evaluations per restart");
}

Mode to_mode(const ModeFlags& f) {
    Mode m;
    m.kind = parse_mode(f.mode);
    m.depth = f.depth;
    m.restarts = f.restarts;
    m.seed = f.seed;
    m.rotate = f.rotate == "target" ? Rotation::target : Rotation::both;
    m.max_evals = f.max_evals;
    m.validate();
    return m;
}

Ensemble load(const Source& s) {
    catalog::Params p;
    for (const std::string& kv : s.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("--param expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(val, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != val.size() || val.empty()) throw ParseError("parameter '" + key + "' is not a number");
        p.values[key] = x;
    }
    for (std::size_t i : s.indices) {
        if (i == 0) throw ParseError("--indices are 1-based");
        p.indices.push_back(i - 1);
    }
    if (!s.file.empty()) {
        if (!p.values.empty()) throw Error("bad-params", "--param applies to catalog entries only");
        Ensemble e = load_ensemble(s.file);
        return p.indices.empty() ? e : e.subset(p.indices);
    }
    if (s.ensemble.empty()) throw ParseError("one of --ensemble or --file is required");
    return catalog::build(s.ensemble, p);
}

std::string f6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::vector<Party> directions(const std::string& d) {
    if (d == "right") return {Party::A};
    if (d == "left") return {Party::B};
    return {Party::A, Party::B};
}

const char* dir_name(Party control) { return control == Party::A ? "right" : "left"; }

// ---------------------------------------------------------------------------

int cmd_delta(const Common& c, bool big) {
    const Ensemble e = load(c.src);
    const Mode mode = to_mode(c.mf);
    const std::vector<Party> dirs = directions(c.direction);
    std::vector<DirectionValue> vals;
    for (Party p : dirs) vals.push_back(big ? big_delta_direction(e, p, mode) : delta_direction(e, p, mode));
    const std::string q = big ? "Delta" : "delta";

    if (c.as_json) {
        json j;
        j["quantity"] = big ? "big-delta" : "delta";
        j["mode"] = mode_name(mode.kind);
        j["depth"] = mode.depth;
        j["restarts"] = mode.restarts;
        j["seed"] = mode.seed;
        j["rotate"] = c.mf.rotate;
        for (const DirectionValue& v : vals) {
            const std::string d = dir_name(v.control);
            j[q + "_" + d] = v.value;
            j["repetitions_" + d] = v.repetitions;
            if (big) {
                j["gap_a_" + d] = v.gap_a;
                j["gap_b_" + d] = v.gap_b;
                j["entangled_after_" + d] = v.entangled_after;
            } else {
                j["contributions_" + d] = v.contributions;
            }
        }
        if (vals.size() == 2) j[q + "_sym"] = 0.5 * (vals[0].value + vals[1].value);
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    std::cout << "mode = " << mode_name(mode.kind);
    if (mode.kind == ModeKind::ensemble_lu || mode.kind == ModeKind::per_state_lu) {
        std::cout << ", depth = " << mode.depth << ", restarts = " << mode.restarts << ", seed = " << mode.seed
                  << ", rotate = " << c.mf.rotate;
    }
    std::cout << '\n';
    for (const DirectionValue& v : vals) {
        const std::string d = dir_name(v.control);
        std::string how = "CNOT^" + std::to_string(v.repetitions);
        if (mode.kind == ModeKind::assign) how = "product relabelling";
        else if (v.repetitions == 0) how = "identity";
        std::cout << q << '_' << d << " = " << f6(v.value) << "   (control " << party_name(v.control) << ", " << how << ")\n";
        if (big) {
            std::cout << "  gap_A = " << f6(v.gap_a) << ", gap_B = " << f6(v.gap_b)
                      << ", entangled members after = " << v.entangled_after << '\n';
        } else {
            for (std::size_t i = 0; i < v.contributions.size(); ++i) {
                std::cout << "  member " << i + 1 << ": E = " << f6(v.contributions[i]) << '\n';
            }
        }
    }
    if (vals.size() == 2) std::cout << q << "_sym = " << f6(0.5 * (vals[0].value + vals[1].value)) << '\n';
    return 0;
}

int cmd_dissect(const Common& c) {
    const ProductSet set = ProductSet::from_ensemble(load(c.src));
    std::optional<Party> first;
    if (c.first == "A") first = Party::A;
    if (c.first == "B") first = Party::B;
    const DissectionTree t = dissect(set, first);
    const Classification cls = classify(set);
    const double weighted = weighted_nonlocal_entropy(set, first);
    if (c.as_json) {
        json j;
        j["first"] = c.first;
        j["classification"] = cls.label();
        j["fully_dissected"] = fully_dissected(t);
        j["alternations"] = alternations(t);
        j["weighted_nonlocal_entropy"] = weighted;
        j["tree"] = render(t);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << render(t);
    std::cout << "classification: " << cls.label() << '\n';
    std::cout << "weighted nonlocal entropy = " << f6(weighted) << '\n';
    return 0;
}

int cmd_bounds(const Common& c) {
    const Ensemble e = load(c.src);
    const Mode mode = to_mode(c.mf);
    const Party control = c.direction == "left" ? Party::B : Party::A;
    const BoundsReport r = cnot_bounds(e, mode, control);
    if (c.as_json) {
        json j;
        j["chi"] = r.chi;
        j["local_holevo"] = r.local_holevo;
        j["control"] = party_name(r.control);
        j["repetitions"] = r.repetitions;
        j["product_input"] = r.product_input;
        j["cnot_lower"] = r.lower_applies ? json(r.cnot_lower) : json(nullptr);
        j["cnot_upper"] = r.upper_applies ? json(r.cnot_upper) : json(nullptr);
        j["entangled_after"] = r.entangled_after;
        j["note"] = r.note;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "chi = " << f6(r.chi) << ", local_holevo = " << f6(r.local_holevo) << '\n';
    std::cout << "transform: CNOT^" << r.repetitions << " controlled by " << party_name(r.control) << '\n';
    std::cout << "cnot_lower = " << (r.lower_applies ? f6(r.cnot_lower) : std::string("n/a")) << '\n';
    std::cout << "cnot_upper = " << (r.upper_applies ? f6(r.cnot_upper) : std::string("n/a")) << '\n';
    std::cout << "note: " << r.note << '\n';
    return 0;
}

int cmd_catalog_list(bool as_json) {
    const auto entries = catalog::list();
    if (as_json) {
        json j = json::array();
        for (const auto& e : entries) {
            j.push_back({{"name", e.name},
                         {"description", e.description},
                         {"parameters", e.parameters},
                         {"dims", {e.default_dims.a, e.default_dims.b}},
                         {"members", e.default_members},
                         {"product", e.product}});
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    for (const auto& e : entries) {
        std::printf("%-18s %zux%zu %2zu %-9s %s\n", e.name.c_str(), e.default_dims.a, e.default_dims.b,
                    e.default_members, e.product ? "product" : "entangled", e.description.c_str());
    }
    return 0;
}

int cmd_show(const Common& c) {
    const Ensemble e = load(c.src);
    if (c.as_json) {
        std::cout << ensemble_to_json(e).dump(2) << '\n';
        return 0;
    }
    std::cout << "dims = " << e.dims().a << "x" << e.dims().b << ", members = " << e.size()
              << (e.is_product() ? ", product" : "") << (e.is_orthogonal() ? ", orthogonal" : "") << '\n';
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::cout << "  " << i + 1 << ": p = " << f6(e[i].probability)
                  << ", E = " << f6(entanglement_entropy(e[i].state)) << ", amplitudes =";
        for (const cplx& z : e[i].state.amplitudes()) std::cout << ' ' << f6(z.real()) << (z.imag() < 0 ? "-" : "+") << f6(std::abs(z.imag())) << 'i';
        std::cout << '\n';
    }
    return 0;
}

int cmd_reproduce(bool as_json) {
    int failed = 0;
    json rows = json::array();
    for (const auto& run : reproduce::criteria()) {
        const reproduce::Criterion c = run();
        failed += c.pass() ? 0 : 1;
        if (!as_json) std::printf("[%s] %02d %s\n", c.pass() ? "PASS" : "FAIL", c.id, c.title.c_str());
        for (const auto& k : c.checks) {
            if (as_json) {
                rows.push_back({{"criterion", c.id}, {"row", k.label}, {"expected", k.expected}, {"got", k.got}, {"pass", k.pass}});
            } else {
                std::printf("    %-44s | expected %-24s | got %-12s | %s\n", k.label.c_str(), k.expected.c_str(),
                            f6(k.got).c_str(), k.pass ? "ok" : "FAIL");
            }
        }
        std::fflush(stdout);
    }
    if (as_json) {
        std::cout << json{{"rows", rows}, {"failed_criteria", failed}}.dump(2) << '\n';
    } else {
        std::printf("%d criteria failed\n", failed);
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlocal entropy and average-state gap of bipartite ensembles"};
    app.require_subcommand(1);
    Common c;

    auto* delta = app.add_subcommand("delta", "nonlocal entropy of a product ensemble");
    auto* big = app.add_subcommand("big-delta", "average-state local entropy gap");
    for (CLI::App* cmd : {delta, big}) {
        add_source(cmd, c.src);
        add_mode(cmd, c.mf);
        cmd->add_option("--direction", c.direction, "right|left|both")->check(CLI::IsMember({"right", "left", "both"}));
        cmd->add_flag("--json", c.as_json, "machine-readable output");
    }

    auto* dis = app.add_subcommand("dissect", "dissection tree and classification");
    add_source(dis, c.src);
    dis->add_option("--first", c.first, "A|B|any")->check(CLI::IsMember({"A", "B", "any"}));
    dis->add_flag("--json", c.as_json, "machine-readable output");

    auto* bnd = app.add_subcommand("bounds", "Holevo quantity, local Holevo bound and CNOT comparators");
    add_source(bnd, c.src);
    add_mode(bnd, c.mf);
    bnd->add_option("--direction", c.direction, "right (A controls) or left (B controls)")
        ->check(CLI::IsMember({"right", "left"}));
    bnd->add_flag("--json", c.as_json, "machine-readable output");

    auto* cat = app.add_subcommand("catalog", "catalog of named ensembles");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list catalog entries");
    cat_list->add_flag("--json", c.as_json, "machine-readable output");

    auto* show = app.add_subcommand("show", "print an ensemble");
    add_source(show, c.src);
    show->add_flag("--json", c.as_json, "machine-readable output");

    auto* rep = app.add_subcommand("reproduce", "regression report of all reference values");
    rep->add_flag("--json", c.as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (*delta) return cmd_delta(c, false);
        if (*big) return cmd_delta(c, true);
        if (*dis) return cmd_dissect(c);
        if (*bnd) return cmd_bounds(c);
        if (*cat_list) return cmd_catalog_list(c.as_json);
        if (*show) return cmd_show(c);
        if (*rep) return cmd_reproduce(c.as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 3;
}
