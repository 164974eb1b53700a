#include "tdfc/cli.hpp"

#include "tdfc/compiler.hpp"
#include "tdfc/distribution.hpp"
#include "tdfc/emulator.hpp"
#include "tdfc/errors.hpp"
#include "tdfc/families.hpp"
#include "tdfc/io.hpp"
#include "tdfc/noise.hpp"
#include "tdfc/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

namespace tdfc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfeasible = 3;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct CommonInputs {
    std::string family_text;
    std::string graph_path;
    std::string pass = "naive";
    int budget = 20000;
    std::uint64_t seed = 0;
};

GraphDocument resolve_graph(const CommonInputs& in) {
    if (!in.family_text.empty() && !in.graph_path.empty()) {
        throw ParseError("give either --family or --graph, not both");
    }
    if (!in.family_text.empty()) {
        const FamilySpec spec = FamilySpec::parse(in.family_text);
        return {build_family(spec), spec};
    }
    if (!in.graph_path.empty()) {
        return load_graph(in.graph_path);
    }
    throw ParseError("an input is required: --family or --graph");
}

Schedule compile_with_pass(const GraphDocument& doc, const CommonInputs& in) {
    if (in.pass == "naive") {
        return compile_naive(doc.graph);
    }
    if (in.pass == "search") {
        return minimize_delay_classes(doc.graph, in.budget, in.seed).schedule;
    }
    if (in.pass == "layer" || in.pass == "lattice") {
        if (!doc.family || doc.family->kind != FamilySpec::Kind::Tcs) {
            throw ParseError("pass '" + in.pass + "' applies to tcs families only");
        }
        const int a = doc.family->branching;
        const int d = doc.family->depth;
        return in.pass == "layer" ? compile_layer_symmetric(a, d)
                                  : compile_lattice_embedded(a, d);
    }
    throw ParseError("unknown pass '" + in.pass + "'");
}

/// Slot-space view of a schedule: excitations on the diagonal, every gate
/// as an edge. This is what the matrix CSV and DOT exports show.
ClusterGraph slot_space_graph(const Schedule& s) {
    std::set<Edge> edges;
    for (const auto& [i, j] : s.all_gates()) edges.insert(make_edge(i, j));
    return ClusterGraph(s.n_slots, s.excitation_set, std::move(edges));
}

DistributionMatrix schedule_matrix(const Schedule& s) {
    return to_distribution(slot_space_graph(s));
}

void write_outputs(const Schedule& schedule, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const auto dir = std::filesystem::path(out_dir);
    write_file_atomic((dir / "schedule.json").string(), schedule_to_json_text(schedule));
    write_file_atomic((dir / "matrix.csv").string(), matrix_csv(schedule_matrix(schedule)));
    write_file_atomic((dir / "graph.dot").string(), graph_dot(slot_space_graph(schedule)));
    // Both counting conventions: delay classes in use vs. TDF hardware
    // (the native delay-1 class costs no feedback line).
    std::cout << "schedule: " << (dir / "schedule.json").string() << '\n'
              << "delay classes: " << schedule.delay_classes_used().size() << '\n'
              << "blocks: " << schedule.tdf_count() << '\n';
}

NoiseParams make_noise_params(double fs, double ft, std::optional<double> gamma,
                              std::optional<double> damping_factor) {
    if (damping_factor) {
        return NoiseParams::with_damping_factor(fs, ft, *damping_factor);
    }
    if (gamma) {
        return NoiseParams::from_gamma(fs, ft, *gamma);
    }
    NoiseParams p{fs, ft, 0.0, 1.0};
    p.validate();
    return p;
}

struct Table2Row {
    std::string state;
    int n = 0;
    int n_tdf = 0;
    double f_c = 0.0;
};

std::vector<Table2Row> table2_rows(const NoiseParams& params) {
    std::vector<Table2Row> rows;
    for (int d = 1; d <= 5; ++d) {
        const int n = (1 << d) - 1;
        const auto tree = build_family(FamilySpec::tcs(2, d));
        const auto tree_matrix = to_distribution(tree);
        const int initial_tdf = (1 << (d - 1)) - 1;
        rows.push_back({"tcs_initial", n, initial_tdf,
                        fidelity_estimate(tree_matrix, initial_tdf, params).f_c});
        const int optimized_tdf = d == 1 ? 0 : 1;
        rows.push_back({"tcs_optimized", n, optimized_tdf,
                        fidelity_estimate(tree_matrix, optimized_tdf, params).f_c});
        const auto ccs_matrix = to_distribution(build_family(FamilySpec::ccs(n)));
        rows.push_back({"ccs", n, n - 1,
                        fidelity_estimate(ccs_matrix, n - 1, params).f_c});
    }
    return rows;
}

int cmd_generate(const CommonInputs& in, const std::string& out_dir) {
    const GraphDocument doc = resolve_graph(in);
    const Schedule schedule = compile_with_pass(doc, in);
    write_outputs(schedule, out_dir);
    return kExitOk;
}

int cmd_optimize(const CommonInputs& in, const std::string& out_dir) {
    const GraphDocument doc = resolve_graph(in);
    const SearchResult result = minimize_delay_classes(doc.graph, in.budget, in.seed);
    write_outputs(result.schedule, out_dir);
    std::cout << "delay classes beyond native: "
              << [&] {
                     auto classes = result.schedule.delay_classes_used();
                     classes.erase(1);
                     return classes.size();
                 }()
              << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& schedule_path, const CommonInputs& in) {
    const Schedule schedule = load_schedule(schedule_path);
    const GraphDocument doc = resolve_graph(in);
    const VerifyReport report = verify_schedule(schedule, doc.graph);
    std::cout << report.to_text();
    return report.ok ? kExitOk : kExitVerifyFailure;
}

int cmd_emulate(const std::string& schedule_path, const std::string& out_dir) {
    const Schedule schedule = load_schedule(schedule_path);
    const auto events = emulate(schedule, default_block_configs(schedule));
    const std::string trace = trace_format(events);
    if (out_dir.empty()) {
        std::cout << trace;
    } else {
        std::filesystem::create_directories(out_dir);
        const auto path = std::filesystem::path(out_dir) / "trace.txt";
        write_file_atomic(path.string(), trace);
        std::cout << "trace: " << path.string() << '\n';
    }
    return kExitOk;
}

void check_format(const std::string& format) {
    if (format != "text" && format != "csv") {
        throw ParseError("unknown format '" + format + "' (text|csv)");
    }
}

int cmd_fidelity(const CommonInputs& in, const NoiseParams& params,
                 const std::string& format) {
    check_format(format);
    const GraphDocument doc = resolve_graph(in);
    const Schedule schedule = compile_with_pass(doc, in);
    const auto matrix = schedule_matrix(schedule);
    const FidelityReport report = fidelity_estimate(matrix, schedule.tdf_count(), params);

    if (format == "csv") {
        std::cout << "state,N,n_tdf,f_c\n";
        const std::string state = doc.family ? doc.family->to_string() : "graph";
        std::cout << state << ',' << report.n_h << ',' << schedule.tdf_count() << ','
                  << format_double(report.f_c) << '\n';
        return kExitOk;
    }
    std::cout << "pass: " << schedule.provenance.pass << '\n'
              << "n_h: " << report.n_h << '\n'
              << "n_cz: " << report.n_cz << '\n'
              << "n_tdf: " << schedule.tdf_count() << '\n'
              << "n_damp_ops: " << report.n_damp_ops << '\n'
              << "f_s: " << format_double(params.f_s) << '\n'
              << "f_t: " << format_double(params.f_t) << '\n'
              << "gamma: " << format_double(params.gamma) << '\n'
              << "per_damping_factor: " << format_double(params.per_damping_factor)
              << '\n'
              << "f_s contribution: " << format_double(std::pow(params.f_s, report.n_h))
              << '\n'
              << "f_t contribution: " << format_double(std::pow(params.f_t, report.n_cz))
              << '\n'
              << "damping contribution: "
              << format_double(std::pow(params.per_damping_factor,
                                        static_cast<double>(report.n_h) *
                                            report.n_damp_ops))
              << '\n'
              << "f_c: " << format_double(report.f_c) << '\n';
    // For small states the exact channel oracle runs alongside the
    // product estimate.
    if (doc.graph.n_slots <= 6 && params.gamma > 0.0) {
        const double exact = damped_fidelity_exact(doc.graph, params.gamma);
        const double product =
            std::pow((1.0 + std::sqrt(1.0 - params.gamma)) / 2.0, doc.graph.n_slots);
        std::cout << "damping oracle (one crossing): exact=" << format_double(exact)
                  << " product=" << format_double(product) << '\n';
    }
    return kExitOk;
}

int cmd_table2(const NoiseParams& params, const std::string& format) {
    check_format(format);
    const auto rows = table2_rows(params);
    if (format == "text") {
        for (const auto& r : rows) {
            std::printf("%-14s N=%-3d n_tdf=%-3d f_c=%s\n", r.state.c_str(), r.n,
                        r.n_tdf, format_double(r.f_c).c_str());
        }
        return kExitOk;
    }
    std::cout << "state,N,n_tdf,f_c\n";
    for (const auto& r : rows) {
        std::cout << r.state << ',' << r.n << ',' << r.n_tdf << ','
                  << format_double(r.f_c) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"cluster-state TDF schedule compiler and verifier"};
    app.require_subcommand(1);

    CommonInputs in;
    std::string out_dir = "out";
    std::string emulate_out;  // empty means stdout
    std::string schedule_path;
    std::string fidelity_format = "text";
    std::string table2_format = "csv";
    double fs = 0.999, ft = 0.996;
    std::optional<double> gamma;
    std::optional<double> fidelity_damping;
    double table2_damping = 0.98;

    auto add_inputs = [&](CLI::App* cmd, bool with_pass) {
        cmd->add_option("--family", in.family_text,
                        "family spec, e.g. tcs:2,4 | linear:5 | ccs:5 | lattice:3x4");
        cmd->add_option("--graph", in.graph_path, "graph spec file (JSON)");
        if (with_pass) {
            cmd->add_option("--pass", in.pass, "naive|layer|lattice|search");
        }
        cmd->add_option("--budget", in.budget, "search evaluation budget");
        cmd->add_option("--seed", in.seed, "search RNG seed");
    };
    auto add_gates = [&](CLI::App* cmd) {
        cmd->add_option("--fs", fs, "single-qubit gate fidelity");
        cmd->add_option("--ft", ft, "two-qubit gate fidelity");
    };

    auto* generate = app.add_subcommand("generate", "compile a schedule");
    add_inputs(generate, true);
    generate->add_option("--out", out_dir, "output directory");

    auto* optimize = app.add_subcommand("optimize", "local-search delay-class minimization");
    add_inputs(optimize, false);
    optimize->add_option("--out", out_dir, "output directory");

    auto* verify = app.add_subcommand("verify", "check a schedule against its target");
    verify->add_option("--schedule", schedule_path, "schedule file")->required();
    add_inputs(verify, false);

    auto* emulate_cmd = app.add_subcommand("emulate", "discrete-event timeline trace");
    emulate_cmd->add_option("--schedule", schedule_path, "schedule file")->required();
    emulate_cmd->add_option("--out", emulate_out, "output directory (default: stdout)");

    auto* fidelity = app.add_subcommand("fidelity", "closed-form fidelity budget");
    add_inputs(fidelity, true);
    add_gates(fidelity);
    fidelity->add_option("--gamma", gamma, "photon loss probability per crossing");
    fidelity->add_option("--damping-factor", fidelity_damping,
                         "per-photon per-crossing fidelity factor");
    fidelity->add_option("--format", fidelity_format, "text|csv");

    auto* table2 = app.add_subcommand("table2", "fidelity table for TCS and CCS families");
    add_gates(table2);
    table2->add_option("--damping-factor", table2_damping,
                       "per-photon per-crossing fidelity factor");
    table2->add_option("--format", table2_format, "text|csv");

    std::vector<char*> argv;
    std::vector<std::string> owned = args;
    std::string prog = "tdfc";
    argv.push_back(prog.data());
    for (auto& a : owned) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (generate->parsed()) return cmd_generate(in, out_dir);
        if (optimize->parsed()) return cmd_optimize(in, out_dir);
        if (verify->parsed()) return cmd_verify(schedule_path, in);
        if (emulate_cmd->parsed()) return cmd_emulate(schedule_path, emulate_out);
        if (fidelity->parsed()) {
            return cmd_fidelity(in, make_noise_params(fs, ft, gamma, fidelity_damping),
                                fidelity_format);
        }
        if (table2->parsed()) {
            return cmd_table2(
                NoiseParams::with_damping_factor(fs, ft, table2_damping),
                table2_format);
        }
    } catch (const EmbeddingInfeasible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace tdfc
