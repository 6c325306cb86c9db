// Command line front end: generate instances, build dicycle families, verify
// them, and export DOT/JSON views. All real work lives in the library; this
// file is flag parsing, document plumbing, and the exit-code map.
//
// Exit codes (stable, scripts rely on them):
//   0  success
//   2  bad flags, unreadable files, malformed documents
//   3  instance generation failed
//   4  instance rejected (precondition), reason token on stderr
//   5  internal invariant broke (a bug, not an input problem)
//   6  verification found a violation
//   7  --certify-longest instance exceeds the longest-cycle oracle cap

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclecover/bridges.hpp"
#include "cyclecover/cycle_family.hpp"
#include "cyclecover/errors.hpp"
#include "cyclecover/instance_gen.hpp"
#include "cyclecover/json_io.hpp"
#include "cyclecover/partition_digraph.hpp"
#include "cyclecover/verifier.hpp"

namespace {

using cyclecover::Error;
using cyclecover::Instance;
using ordered_json = nlohmann::ordered_json;

// Usage-level problems found after flag parsing (unopenable files, impossible
// flag combinations). Same exit code as a flag error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

struct GenFlags {
    cyclecover::GenParams params;
    int extremal_k = 0;
    bool k23 = false;
    std::string negative_name;
    std::string out = "-";
};

int cmd_gen(const GenFlags& f) {
    Instance inst = [&] {
        if (f.k23) return cyclecover::gen_k23();
        if (f.extremal_k > 0) return cyclecover::gen_extremal(f.extremal_k);
        if (!f.negative_name.empty()) {
            for (cyclecover::NegativeCase& nc : cyclecover::gen_negatives()) {
                if (nc.name == f.negative_name) {
                    std::cerr << "note: " << nc.note << "\n"
                              << "expected rejection: " << nc.expected_rejection
                              << "\n";
                    return std::move(nc.instance);
                }
            }
            throw UsageError("unknown negative case \"" + f.negative_name +
                             "\" (try disconnected-overlap or petersen)");
        }
        return cyclecover::gen_random(f.params);
    }();
    emit(f.out, cyclecover::instance_to_json(inst));
    return 0;
}

struct ConstructFlags {
    std::string in = "-";
    std::string out = "-";
};

int cmd_construct(const ConstructFlags& f) {
    Instance inst = cyclecover::instance_from_json(slurp(f.in));
    cyclecover::CycleFamily fam = cyclecover::construct(inst);
    emit(f.out, cyclecover::family_to_json(fam));
    return 0;
}

struct VerifyFlags {
    std::string instance_path = "-";
    std::string family_path = "-";
    bool certify_longest = false;
    std::string out = "-";
};

int cmd_verify(const VerifyFlags& f) {
    if (f.instance_path == "-" && f.family_path == "-") {
        throw UsageError(
            "instance and family cannot both come from standard input");
    }
    Instance inst = cyclecover::instance_from_json(slurp(f.instance_path));
    cyclecover::CycleFamily fam =
        cyclecover::family_from_json(slurp(f.family_path));

    cyclecover::FeasibilityReport rep = cyclecover::verify_feasible(inst, fam);

    std::vector<int> lambdas;
    long long lambda_sum = 0;
    for (const cyclecover::BridgeTree& b : inst.bridges) {
        int lam = cyclecover::lambda_oracle(
            cyclecover::RawBridge{b.edges, b.attachments},
            cyclecover::oracle_caps().lambda_cap);
        lambdas.push_back(lam);
        lambda_sum += lam;
    }
    int bound = inst.host.size() / 2;
    bool inequality_holds = lambda_sum <= bound;

    std::optional<int> longest;
    bool host_is_longest = false;
    bool voss_ok = false;
    if (f.certify_longest) {
        try {
            longest =
                cyclecover::longest_cycle_len(cyclecover::instance_edges(inst));
        } catch (const cyclecover::TooLarge& e) {
            std::cerr << "error: " << e.what() << "\n"
                      << "reason: oracle-cap-exceeded\n";
            return 7;
        }
        host_is_longest = *longest == inst.host.size();
        if (host_is_longest) {
            voss_ok = cyclecover::verify_voss(inst, fam, true);
        } else {
            rep.violations.push_back(
                "host cycle is not longest: found length " +
                std::to_string(*longest));
        }
    }

    ordered_json doc;
    doc["version"] = 1;
    bool ok = rep.pass() && (!f.certify_longest || (host_is_longest && voss_ok));
    doc["ok"] = ok;
    doc["checks"] = {{"structural", rep.structural_ok},
                     {"c1", rep.c1_ok},
                     {"c2", rep.c2_ok},
                     {"c3", rep.c3_ok},
                     {"c4", rep.c4_ok}};
    doc["violations"] = rep.violations;
    doc["family_size"] = fam.size();
    doc["host_edge_count"] = inst.host.size();
    doc["lambda_per_bridge"] = lambdas;
    doc["lambda_sum"] = lambda_sum;
    doc["lambda_bound"] = bound;
    doc["inequality"] = std::to_string(lambda_sum) +
                        (inequality_holds ? " <= " : " > ") +
                        std::to_string(bound);
    ordered_json cert;
    cert["requested"] = f.certify_longest;
    if (longest) {
        cert["longest_cycle_len"] = *longest;
        cert["host_is_longest"] = host_is_longest;
        cert["voss_ok"] = voss_ok;
    }
    doc["certify_longest"] = std::move(cert);
    emit(f.out, doc.dump(2) + "\n");
    return ok ? 0 : 6;
}

struct ExportFlags {
    bool dot = false;
    std::string deta;
    std::string instance_path;
    std::string family_path;
    std::string out = "-";
};

int cmd_export(const ExportFlags& f) {
    if (!f.deta.empty()) {
        cyclecover::AuxDigraph d =
            cyclecover::build_aux(cyclecover::parse_partition(f.deta));
        emit(f.out, cyclecover::aux_to_dot(d));
        return 0;
    }
    if (f.instance_path.empty()) {
        throw UsageError("export needs --deta or an instance (-i)");
    }
    Instance inst = cyclecover::instance_from_json(slurp(f.instance_path));
    if (!f.family_path.empty()) {
        cyclecover::CycleFamily fam =
            cyclecover::family_from_json(slurp(f.family_path));
        emit(f.out, cyclecover::family_to_dot(inst, fam));
    } else {
        emit(f.out, cyclecover::instance_to_dot(inst));
    }
    return 0;
}

struct DetaFlags {
    std::string partition;
    bool dot = false;
    std::string out = "-";
};

int cmd_deta(const DetaFlags& f) {
    cyclecover::AuxDigraph d =
        cyclecover::build_aux(cyclecover::parse_partition(f.partition));
    emit(f.out, f.dot ? cyclecover::aux_to_dot(d) : cyclecover::aux_to_json(d));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Dicycle families over a host cycle with tree bridges: generation, "
        "construction, verification, export"};
    app.require_subcommand(1);

    GenFlags gen;
    CLI::App* cmd_g = app.add_subcommand(
        "gen", "Generate an instance document on standard output");
    cmd_g->add_option("--seed", gen.params.seed, "random seed");
    cmd_g->add_option("--bridges", gen.params.bridge_count, "bridge count");
    cmd_g->add_option("--host-len", gen.params.host_len, "host cycle length");
    cmd_g->add_option("--max-leaves", gen.params.max_leaves_per_bridge,
                      "attachment count cap per bridge");
    cmd_g->add_option("--max-internal", gen.params.max_internal_per_bridge,
                      "extra internal vertex cap per bridge");
    CLI::Option* o_ext =
        cmd_g->add_option("--extremal", gen.extremal_k,
                          "2k-cycle with k chords meeting the bound exactly");
    CLI::Option* o_k23 =
        cmd_g->add_flag("--k23", gen.k23, "the small bipartite example");
    CLI::Option* o_neg = cmd_g->add_option(
        "--negatives", gen.negative_name,
        "named instance construct must reject (disconnected-overlap, petersen)");
    o_ext->excludes(o_k23)->excludes(o_neg);
    o_k23->excludes(o_neg);
    cmd_g->add_option("-o,--output", gen.out, "output file (default stdout)");

    ConstructFlags con;
    CLI::App* cmd_c = app.add_subcommand(
        "construct", "Build the feasible dicycle family for an instance");
    cmd_c->add_option("-i,--instance", con.in, "instance document (default stdin)");
    cmd_c->add_option("-o,--output", con.out, "output file (default stdout)");

    VerifyFlags ver;
    CLI::App* cmd_v = app.add_subcommand(
        "verify", "Check a family against an instance, report as JSON");
    cmd_v->add_option("-i,--instance", ver.instance_path, "instance document");
    cmd_v->add_option("-f,--family", ver.family_path, "family document");
    cmd_v->add_flag("--certify-longest", ver.certify_longest,
                    "certify the host as longest and check the length bound");
    cmd_v->add_option("-o,--output", ver.out, "report file (default stdout)");

    ExportFlags exp;
    CLI::App* cmd_e = app.add_subcommand("export", "Render DOT text");
    CLI::Option* o_dot = cmd_e->add_flag("--dot", exp.dot, "emit DOT (required)");
    o_dot->required();
    CLI::Option* o_deta = cmd_e->add_option(
        "--deta", exp.deta, "partition as comma separated parts, e.g. 4,3,3");
    CLI::Option* o_in =
        cmd_e->add_option("-i,--instance", exp.instance_path, "instance document");
    CLI::Option* o_fam = cmd_e->add_option(
        "-f,--family", exp.family_path,
        "family document; colored on top of the instance when given");
    o_deta->excludes(o_in)->excludes(o_fam);
    cmd_e->add_option("-o,--output", exp.out, "output file (default stdout)");

    DetaFlags deta;
    CLI::App* cmd_d = app.add_subcommand(
        "deta", "Emit the auxiliary 2-in 2-out digraph of a partition");
    cmd_d->add_option("partition", deta.partition,
                      "comma separated parts, e.g. 4,3,3")
        ->required();
    cmd_d->add_flag("--dot", deta.dot, "emit DOT instead of JSON");
    cmd_d->add_option("-o,--output", deta.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_g->parsed()) return cmd_gen(gen);
        if (cmd_c->parsed()) return cmd_construct(con);
        if (cmd_v->parsed()) return cmd_verify(ver);
        if (cmd_e->parsed()) return cmd_export(exp);
        if (cmd_d->parsed()) return cmd_deta(deta);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cyclecover::MalformedDocument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cyclecover::InvalidPartition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cyclecover::GenerationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cyclecover::PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "reason: " << e.reason << "\n";
        return 4;
    } catch (const cyclecover::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "reason: oracle-cap-exceeded\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
