#include "svcfc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "svcfc/coloring.hpp"
#include "svcfc/errors.hpp"
#include "svcfc/generator.hpp"
#include "svcfc/graph.hpp"
#include "svcfc/io.hpp"
#include "svcfc/kernel.hpp"
#include "svcfc/solver.hpp"
#include "svcfc/twins.hpp"

namespace svcfc {

namespace {

using json = nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ParsedInstance load_instance(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "edgelist")
        return parse_instance(text);
    if (format == "graph6") {
        std::vector<Graph> graphs = parse_graph6_file(text);
        if (graphs.size() != 1)
            throw input_error("graph6 input must contain exactly one graph, got " +
                              std::to_string(graphs.size()));
        return ParsedInstance{std::move(graphs.front()), std::nullopt, std::nullopt};
    }
    throw input_error("unknown format '" + format + "'");
}

json bigint_to_json(const BigInt& value) {
    if (value >= 0 && value <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return value.convert_to<std::uint64_t>();
    return value.str(); // too large for a JSON integer; emit decimal string
}

int require_k(const ParsedInstance& instance, int flag_k) {
    if (flag_k > 0)
        return flag_k;
    if (instance.k.has_value())
        return *instance.k;
    throw input_error("no color target: pass --k or add a 'k:' line to the instance");
}

TwinCover resolve_cover(const Graph& g, const std::optional<std::vector<Vertex>>& annotation,
                        bool exact, Budget* budget) {
    if (annotation.has_value())
        return make_twin_cover(g, *annotation);
    return exact ? exact_twin_cover(g, budget) : approx_twin_cover(g);
}

std::vector<int> parse_int_list(const std::string& text, int min_value, const std::string& what) {
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size() || value < min_value)
                throw std::invalid_argument(token);
            values.push_back(value);
        } catch (const std::exception&) {
            throw input_error("bad value '" + token + "' in " + what);
        }
    }
    if (values.empty())
        throw input_error("empty " + what);
    return values;
}

CliqueTypeRequest parse_type_request(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ':'))
        parts.push_back(token);
    if (parts.size() != 3)
        throw input_error("type must be 'S:size:count' (S = comma list or '-'), got '" + text +
                          "'");
    CliqueTypeRequest request;
    if (parts[0] != "-")
        request.s = parse_int_list(parts[0], 0, "type neighborhood");
    try {
        request.size = std::stoi(parts[1]);
        request.count = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw input_error("bad size/count in type '" + text + "'");
    }
    return request;
}

json edges_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(json::array({u, v}));
    return edges;
}

int emit(std::ostream& out, const json& doc, int code = 0) {
    out << doc.dump() << "\n";
    return code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"strong conflict-free vertex-connection toolkit"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "edgelist";
    long long cap = kDefaultPathCap;
    std::uint64_t budget_limit = 0;
    int k_flag = 0;
    bool exact_tc = false;
    std::string coloring_flag;

    auto add_instance_options = [&](CLI::App* cmd, bool with_cap, bool with_budget) {
        cmd->add_option("instance", file, "instance file, or '-' for stdin")->required();
        cmd->add_option("--format", format, "edgelist or graph6")->capture_default_str();
        if (with_cap)
            cmd->add_option("--cap", cap, "per-pair shortest path cap")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
        if (with_budget)
            cmd->add_option("--budget", budget_limit, "search node budget, 0 = unlimited");
    };

    CLI::App* kernelize_cmd = app.add_subcommand(
        "kernelize", "reduce an instance to an equivalent one of bounded size");
    add_instance_options(kernelize_cmd, false, true);
    kernelize_cmd->add_option("--k", k_flag, "color target (overrides the file)");
    kernelize_cmd->add_flag("--exact-tc", exact_tc,
                            "compute a minimum twin cover instead of the greedy one");

    CLI::App* decide_cmd = app.add_subcommand("decide", "decide whether svcfc(G) <= k");
    add_instance_options(decide_cmd, true, true);
    decide_cmd->add_option("--k", k_flag, "color target (overrides the file)");

    CLI::App* svcfc_cmd = app.add_subcommand("svcfc", "compute svcfc(G) exactly");
    add_instance_options(svcfc_cmd, true, true);

    CLI::App* chi_cmd = app.add_subcommand("chi", "compute the chromatic number exactly");
    add_instance_options(chi_cmd, false, true);

    CLI::App* twincover_cmd = app.add_subcommand("twincover", "compute a twin cover");
    add_instance_options(twincover_cmd, false, true);
    twincover_cmd->add_flag("--exact-tc", exact_tc, "exhaustive minimum instead of greedy");

    CLI::App* color_cmd = app.add_subcommand(
        "color", "build a strong CFVC coloring with at most chi(G) + |X| colors");
    add_instance_options(color_cmd, true, true);
    color_cmd->add_flag("--exact-tc", exact_tc,
                        "compute a minimum twin cover when the file has no annotation");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "validate an instance and optionally a coloring");
    add_instance_options(verify_cmd, true, false);
    verify_cmd->add_option("--coloring", coloring_flag, "comma-separated colors, one per vertex");

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance with a planted twin cover");
    int gen_t = 0;
    std::vector<std::string> gen_types;
    std::uint64_t gen_seed = 0;
    double gen_prob = 0.5;
    std::string gen_out;
    gen_cmd->add_option("--t", gen_t, "planted twin cover size")->required();
    gen_cmd->add_option("--type", gen_types,
                        "clique type 'S:size:count', S a comma list of X vertices or '-'");
    gen_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen_cmd->add_option("--core-edge-prob", gen_prob, "edge probability inside X")
        ->capture_default_str();
    gen_cmd->add_option("--k", k_flag, "color target to record in the instance");
    gen_cmd->add_option("--out", gen_out, "also write the instance file to this path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return emit(out, json{{"error", e.what()}, {"kind", "usage"}}, 2);
    }

    std::optional<Budget> budget_storage;
    if (budget_limit > 0)
        budget_storage.emplace(budget_limit);
    Budget* budget = budget_storage.has_value() ? &*budget_storage : nullptr;

    try {
        if (kernelize_cmd->parsed()) {
            ParsedInstance instance = load_instance(file, format);
            int k = require_k(instance, k_flag);
            KernelReport report;
            if (instance.x.has_value()) {
                report = kernelize_annotated(
                    AnnotatedInstance{instance.g, k, make_twin_cover(instance.g, *instance.x)});
            } else {
                report = kernelize(instance.g, k, exact_tc, budget);
            }
            json deletions = json::array();
            for (const CliqueDeletion& d : report.deletions)
                deletions.push_back(json{{"s", d.s}, {"size", d.size}, {"vertices", d.vertices}});
            return emit(out, json{{"bound", bigint_to_json(report.bound)},
                                  {"deletions", deletions},
                                  {"k_out", report.reduced.k},
                                  {"n_after", report.realized},
                                  {"n_before", report.n_before},
                                  {"shortcut", report.no_instance_shortcut},
                                  {"x_out", report.reduced.x.vertices}});
        }

        if (decide_cmd->parsed()) {
            ParsedInstance instance = load_instance(file, format);
            int k = require_k(instance, k_flag);
            DecideResult result = svcfc_decide(instance.g, k, SolverOptions{cap, budget});
            json doc{{"answer", result.satisfiable}, {"k", k}};
            if (result.witness.has_value())
                doc["witness"] = result.witness->colors;
            return emit(out, doc, result.satisfiable ? 0 : 1);
        }

        if (svcfc_cmd->parsed()) {
            ParsedInstance instance = load_instance(file, format);
            SolverOptions options{cap, budget};
            int value = svcfc_exact(instance.g, options);
            DecideResult witness = svcfc_decide(instance.g, value, options);
            return emit(out, json{{"svcfc", value}, {"witness", witness.witness->colors}});
        }

        if (chi_cmd->parsed()) {
            ParsedInstance instance = load_instance(file, format);
            return emit(out, json{{"chi", chromatic_number_exact(instance.g, budget).chi}});
        }

        if (twincover_cmd->parsed()) {
            ParsedInstance instance = load_instance(file, format);
            TwinCover cover =
                exact_tc ? exact_twin_cover(instance.g, budget) : approx_twin_cover(instance.g);
            return emit(out, json{{"exact", exact_tc},
                                  {"size", cover.size()},
                                  {"x", cover.vertices}});
        }

        if (color_cmd->parsed()) {
            ParsedInstance instance = load_instance(file, format);
            TwinCover cover = resolve_cover(instance.g, instance.x, exact_tc, budget);
            Coloring psi = svcfc_upper_coloring(instance.g, cover, cover.vertices, cap, budget);
            CfvcVerdict verdict = is_strong_cfvc_coloring(instance.g, psi, cap);
            return emit(out, json{{"chi", chromatic_number_exact(instance.g, budget).chi},
                                  {"coloring", psi.colors},
                                  {"colors_used", psi.palette_size()},
                                  {"is_strong", verdict.is_strong},
                                  {"y", cover.vertices}});
        }

        if (verify_cmd->parsed()) {
            ParsedInstance instance = load_instance(file, format);
            bool connected = is_connected(instance.g);
            json doc{{"connected", connected},
                     {"m", instance.g.num_edges()},
                     {"n", instance.g.num_vertices()}};
            if (instance.x.has_value()) {
                doc["x"] = *instance.x;
                doc["x_is_twin_cover"] = is_twin_cover(instance.g, *instance.x);
            }
            if (instance.k.has_value())
                doc["k"] = *instance.k;
            if (!coloring_flag.empty()) {
                Coloring coloring{parse_int_list(coloring_flag, 1, "coloring list")};
                doc["proper"] = is_proper(instance.g, coloring);
                if (connected) {
                    CfvcVerdict verdict = is_strong_cfvc_coloring(instance.g, coloring, cap);
                    doc["is_strong"] = verdict.is_strong;
                    doc["paths_overflowed"] = verdict.paths_overflowed;
                    if (verdict.violating_pair.has_value())
                        doc["violating_pair"] = json::array(
                            {verdict.violating_pair->first, verdict.violating_pair->second});
                    else
                        doc["violating_pair"] = nullptr;
                }
            }
            return emit(out, doc);
        }

        if (gen_cmd->parsed()) {
            GeneratorSpec spec;
            spec.t = gen_t;
            spec.seed = gen_seed;
            spec.core_edge_probability = gen_prob;
            for (const std::string& text : gen_types)
                spec.types.push_back(parse_type_request(text));
            GeneratedInstance instance = generate_instance(spec);
            std::optional<int> k;
            if (k_flag > 0)
                k = k_flag;
            if (!gen_out.empty()) {
                std::ofstream file_out(gen_out);
                if (!file_out)
                    throw input_error("cannot write '" + gen_out + "'");
                file_out << serialize_instance(instance.g, instance.x.vertices, k);
            }
            json doc{{"edges", edges_to_json(instance.g)},
                     {"m", instance.g.num_edges()},
                     {"n", instance.g.num_vertices()},
                     {"seed", spec.seed},
                     {"t", spec.t},
                     {"x", instance.x.vertices}};
            if (k.has_value())
                doc["k"] = *k;
            return emit(out, doc);
        }
    } catch (const budget_error& e) {
        return emit(out, json{{"error", e.what()}, {"kind", "budget"}}, 3);
    } catch (const input_error& e) {
        return emit(out, json{{"error", e.what()}, {"kind", "input"}}, 2);
    } catch (const validity_error& e) {
        return emit(out, json{{"error", e.what()}, {"kind", "validity"}}, 2);
    }

    err << "no subcommand dispatched\n";
    return 2;
}

} // namespace svcfc
