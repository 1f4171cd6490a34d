// hodgewalk: command-line front end for the simplicial random-walk toolkit.
//
// Exit codes: 0 success, 1 validation/usage error, 2 computation or I/O error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hodgewalk/encode.hpp"
#include "hodgewalk/io.hpp"
#include "hodgewalk/isotest.hpp"

using namespace hodgewalk;

namespace {

struct InputSpec {
    std::string edge_path;
    std::string json_path;
    std::vector<std::string> gallery;

    void add_options(CLI::App* cmd, bool pair = false) {
        cmd->add_option("--input", edge_path, "edge-list input file");
        cmd->add_option("--input-json", json_path, "complex JSON input file");
        cmd->add_option("--gallery", gallery, "gallery item name(s)")
            ->expected(pair ? 2 : 1);
    }

    int count() const {
        return (edge_path.empty() ? 0 : 1) + (json_path.empty() ? 0 : 1) +
               (gallery.empty() ? 0 : 1);
    }
};

struct LoadedInput {
    OrientedSimplicialComplex complex;
    std::string label;
    std::vector<std::pair<std::string, std::string>> digests;
};

LoadedInput load_input(const InputSpec& in, int max_dim) {
    if (in.count() != 1)
        throw ConfigError("exactly one of --input, --input-json, --gallery is required");
    if (!in.edge_path.empty()) {
        std::string text = read_file(in.edge_path);
        Graph g = parse_edge_list(text);
        return {clique_complex(g, max_dim), in.edge_path, {{in.edge_path, fnv1a64_hex(text)}}};
    }
    if (!in.json_path.empty()) {
        std::string text = read_file(in.json_path);
        return {complex_from_json(text), in.json_path, {{in.json_path, fnv1a64_hex(text)}}};
    }
    return {gallery_complex(in.gallery[0], max_dim), in.gallery[0], {}};
}

void write_with_manifest(const std::string& out_path, const std::string& content,
                         const std::string& command,
                         const std::vector<std::pair<std::string, std::string>>& params,
                         std::uint64_t seed,
                         const std::vector<std::pair<std::string, std::string>>& digests) {
    atomic_write(out_path, content);
    atomic_write(out_path + ".manifest.json",
                 run_manifest_json(command, params, seed, digests));
}

std::string poly_json(int k, const std::vector<mpz_class>& coeffs) {
    nlohmann::json j;
    j["k"] = k;
    j["order"] = "ascending";
    auto& c = j["coefficients"] = nlohmann::json::array();
    for (auto& z : coeffs) c.push_back(z.get_str());
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hodgewalk: Hodge Laplacians, simplicial random walks and "
                 "positional encodings over graph clique complexes"};
    app.require_subcommand(1);

    // ---- build ----
    auto* cmd_build = app.add_subcommand("build", "lift a graph to its clique complex");
    InputSpec build_in;
    build_in.add_options(cmd_build);
    int build_dim = 2;
    std::string build_out;
    cmd_build->add_option("-K,--max-dim", build_dim, "maximum simplex dimension");
    cmd_build->add_option("--out", build_out, "complex JSON output")->required();

    // ---- laplacian ----
    auto* cmd_lap = app.add_subcommand("laplacian", "Hodge k-Laplacian as dense CSV");
    InputSpec lap_in;
    lap_in.add_options(cmd_lap);
    int lap_k = 1, lap_dim = 2;
    std::string lap_variant = "standard", lap_out;
    cmd_lap->add_option("-k", lap_k, "operator order");
    cmd_lap->add_option("-K,--max-dim", lap_dim, "clique lift dimension");
    cmd_lap->add_option("--variant", lap_variant, "standard | normalized")
        ->check(CLI::IsMember({"standard", "normalized"}));
    cmd_lap->add_option("--out", lap_out, "CSV output")->required();

    // ---- spectrum ----
    auto* cmd_spec = app.add_subcommand("spectrum", "eigenpairs (CSV) or exact "
                                                    "characteristic polynomial (JSON)");
    InputSpec spec_in;
    spec_in.add_options(cmd_spec);
    int spec_k = 1, spec_dim = 2;
    bool spec_exact = false;
    std::string spec_variant = "standard", spec_out;
    double spec_zero_tol = -1;
    cmd_spec->add_option("-k", spec_k, "operator order");
    cmd_spec->add_option("-K,--max-dim", spec_dim, "clique lift dimension");
    cmd_spec->add_option("--variant", spec_variant, "standard | normalized")
        ->check(CLI::IsMember({"standard", "normalized"}));
    cmd_spec->add_flag("--exact", spec_exact, "integer characteristic polynomial");
    cmd_spec->add_option("--zero-tol", spec_zero_tol, "zero-eigenvalue threshold");
    cmd_spec->add_option("--out", spec_out, "output file")->required();

    // ---- betti ----
    auto* cmd_betti = app.add_subcommand("betti", "k-th Betti number");
    InputSpec betti_in;
    betti_in.add_options(cmd_betti);
    int betti_k = 1, betti_dim = 2;
    std::string betti_out;
    cmd_betti->add_option("-k", betti_k, "order");
    cmd_betti->add_option("-K,--max-dim", betti_dim, "clique lift dimension");
    cmd_betti->add_option("--out", betti_out, "optional JSON output");

    // ---- walk ----
    auto* cmd_walk = app.add_subcommand("walk", "transition matrix as CSV");
    InputSpec walk_in;
    walk_in.add_options(cmd_walk);
    std::string walk_kind = "node", walk_out;
    int walk_k = 1, walk_K = 2, walk_dim = 2, walk_max_ring = 6;
    cmd_walk->add_option("--kind", walk_kind,
                         "node | lifted_edge | down_directed | down_undirected | up | k "
                         "| inter | cellular")
        ->check(CLI::IsMember({"node", "lifted_edge", "down_directed", "down_undirected",
                               "up", "k", "inter", "cellular"}));
    cmd_walk->add_option("-k", walk_k, "simplex order for up/k kinds");
    cmd_walk->add_option("-M,--inter-order", walk_K, "maximum order for inter kind");
    cmd_walk->add_option("-K,--max-dim", walk_dim, "clique lift dimension");
    cmd_walk->add_option("--max-ring", walk_max_ring, "ring length cap (cellular)");
    cmd_walk->add_option("--out", walk_out, "CSV output")->required();

    // ---- encode ----
    auto* cmd_enc = app.add_subcommand("encode", "feature matrix as CSV + JSON sidecar");
    InputSpec enc_in;
    enc_in.add_options(cmd_enc);
    std::string enc_method, enc_mode = "diag", enc_variant = "full", enc_out;
    int enc_T = 8, enc_k = 1, enc_K = 2, enc_dim = 2, enc_neigen = 4, enc_nproj = 0,
        enc_max_ring = 6;
    std::uint64_t enc_seed = 0;
    bool enc_row_stats = false;
    cmd_enc->add_option("--method", enc_method,
                        "rwse | lap_pe | resistance | spd | edge_rwse | hodge1lap | "
                        "k_rwse | inter_rwse | cellular_rwse")
        ->required()
        ->check(CLI::IsMember({"rwse", "lap_pe", "resistance", "spd", "edge_rwse",
                               "hodge1lap", "k_rwse", "inter_rwse", "cellular_rwse"}));
    cmd_enc->add_option("-T,--steps", enc_T, "number of walk steps");
    cmd_enc->add_option("--mode", enc_mode, "rwse: diag|full; hodge1lap: proj|abs|sim");
    cmd_enc->add_option("--variant", enc_variant, "edge_rwse: full|directed|undirected|up");
    cmd_enc->add_option("-k", enc_k, "simplex order (k_rwse)");
    cmd_enc->add_option("-M,--inter-order", enc_K, "maximum order (inter_rwse)");
    cmd_enc->add_option("-K,--max-dim", enc_dim, "clique lift dimension");
    cmd_enc->add_option("--n-eigen", enc_neigen, "eigenvector count (lap_pe, hodge1lap)");
    cmd_enc->add_option("--n-random-proj", enc_nproj, "random projections (hodge1lap abs)");
    cmd_enc->add_option("--seed", enc_seed, "random projection seed");
    cmd_enc->add_option("--max-ring", enc_max_ring, "ring length cap (cellular_rwse)");
    cmd_enc->add_flag("--with-row-stats", enc_row_stats, "append row-variance channels");
    cmd_enc->add_option("--out", enc_out, "CSV output")->required();

    // ---- simulate ----
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo walk trace as CSV");
    InputSpec sim_in;
    sim_in.add_options(cmd_sim);
    std::string sim_kind = "node", sim_out;
    int sim_k = 1, sim_K = 2, sim_dim = 2, sim_start = 0, sim_steps = 10, sim_max_ring = 6;
    long long sim_trials = 10000;
    std::uint64_t sim_seed = 0;
    cmd_sim->add_option("--kind", sim_kind,
                        "node | lifted_edge | down_directed | down_undirected | up | k "
                        "| inter | cellular")
        ->check(CLI::IsMember({"node", "lifted_edge", "down_directed", "down_undirected",
                               "up", "k", "inter", "cellular"}));
    cmd_sim->add_option("-k", sim_k, "simplex order for up/k kinds");
    cmd_sim->add_option("-M,--inter-order", sim_K, "maximum order for inter kind");
    cmd_sim->add_option("-K,--max-dim", sim_dim, "clique lift dimension");
    cmd_sim->add_option("--max-ring", sim_max_ring, "ring length cap (cellular)");
    cmd_sim->add_option("--start", sim_start, "start state index");
    cmd_sim->add_option("--steps", sim_steps, "number of steps");
    cmd_sim->add_option("--trials", sim_trials, "number of trials");
    cmd_sim->add_option("--seed", sim_seed, "RNG seed");
    cmd_sim->add_option("--out", sim_out, "trace CSV output")->required();

    // ---- distinguish ----
    auto* cmd_dist = app.add_subcommand("distinguish", "expressivity report for a pair");
    InputSpec dist_in;
    dist_in.add_options(cmd_dist, /*pair=*/true);
    std::vector<std::string> dist_inputs, dist_methods{"all"};
    std::string dist_out;
    int dist_T = 20, dist_edge_T = 16;
    cmd_dist->add_option("--inputs", dist_inputs, "two edge-list files")->expected(2);
    cmd_dist->add_option("--methods", dist_methods,
                         "all | wl1 wl1+rwse fwl2 spec_L0 spec_L1 spec_Lk:<k> rwse0 "
                         "edge_rwse_full edge_rwse_up hodge1lap_abs");
    cmd_dist->add_option("-T,--rwse-steps", dist_T, "steps for rwse0 / wl1+rwse");
    cmd_dist->add_option("--edge-rwse-steps", dist_edge_T, "steps for edge RWSE methods");
    cmd_dist->add_option("--out", dist_out, "report JSON output")->required();

    // ---- gallery ----
    auto* cmd_gal = app.add_subcommand("gallery", "export a gallery object");
    std::string gal_name, gal_out;
    bool gal_as_complex = false;
    int gal_dim = 2;
    cmd_gal->add_option("--name", gal_name, "gallery item")->required();
    cmd_gal->add_flag("--complex", gal_as_complex, "emit complex JSON instead of edge list");
    cmd_gal->add_option("-K,--max-dim", gal_dim, "clique lift dimension for --complex");
    cmd_gal->add_option("--out", gal_out, "output file")->required();

    // ---- cycles ----
    auto* cmd_cyc = app.add_subcommand("cycles", "cycle detection labels per edge");
    InputSpec cyc_in;
    cyc_in.add_options(cmd_cyc);
    std::string cyc_out;
    int cyc_dim = 2, cyc_nproj = 8;
    std::uint64_t cyc_seed = 0;
    bool cyc_eigen1 = false;
    cmd_cyc->add_option("-K,--max-dim", cyc_dim, "clique lift dimension");
    cmd_cyc->add_option("--seed", cyc_seed, "random projection seed");
    cmd_cyc->add_option("--n-random-proj", cyc_nproj, "random projection count");
    cmd_cyc->add_flag("--report-eigen1", cyc_eigen1,
                      "also print the experimental eigenvalue-1 substructure report");
    cmd_cyc->add_option("--out", cyc_out, "labels CSV output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        auto params_of = [](std::initializer_list<std::pair<std::string, std::string>> kv) {
            return std::vector<std::pair<std::string, std::string>>(kv);
        };

        if (cmd_build->parsed()) {
            auto in = load_input(build_in, build_dim);
            std::string json = complex_to_json(in.complex);
            write_with_manifest(build_out, json, "build",
                                params_of({{"input", in.label},
                                           {"max_dim", std::to_string(build_dim)}}),
                                0, in.digests);
            std::cout << "build: " << in.label << " -> " << build_out << " (dim "
                      << in.complex.dim() << ")\n";
        } else if (cmd_lap->parsed()) {
            auto in = load_input(lap_in, std::max(lap_dim, lap_k + 1));
            auto variant = lap_variant == "standard" ? LaplacianVariant::standard
                                                     : LaplacianVariant::normalized;
            auto op = hodge_laplacian(in.complex, lap_k, variant);
            std::vector<std::string> labels;
            for (auto& f : in.complex.faces(lap_k)) {
                std::string l = "(";
                for (size_t i = 0; i < f.size(); ++i)
                    l += (i ? "|" : "") + std::to_string(f[i]);
                labels.push_back(l + ")");
            }
            std::ostringstream csv_out;
            csv_out << "face";
            for (auto& s : labels) csv_out << "," << s;
            csv_out << "\n";
            for (int i = 0; i < op.matrix.rows(); ++i) {
                csv_out << labels[i];
                for (int j = 0; j < op.matrix.cols(); ++j)
                    csv_out << "," << format_double(op.matrix(i, j));
                csv_out << "\n";
            }
            std::string csv = csv_out.str();
            write_with_manifest(lap_out, csv, "laplacian",
                                params_of({{"input", in.label},
                                           {"k", std::to_string(lap_k)},
                                           {"variant", lap_variant}}),
                                0, in.digests);
            std::cout << "laplacian: L_" << lap_k << " (" << lap_variant << ") of "
                      << in.label << " -> " << lap_out << "\n";
        } else if (cmd_spec->parsed()) {
            auto in = load_input(spec_in, std::max(spec_dim, spec_k + 1));
            auto variant = spec_variant == "standard" ? LaplacianVariant::standard
                                                      : LaplacianVariant::normalized;
            auto op = hodge_laplacian(in.complex, spec_k, variant);
            std::string content;
            if (spec_exact) {
                if (variant != LaplacianVariant::standard)
                    throw ConfigError("--exact applies to the standard variant only");
                content = poly_json(spec_k, char_poly_exact(op.matrix));
            } else {
                std::optional<double> tol;
                if (spec_zero_tol >= 0) tol = spec_zero_tol;
                content = spectrum_to_csv(spectrum(op, tol));
            }
            write_with_manifest(spec_out, content, "spectrum",
                                params_of({{"input", in.label},
                                           {"k", std::to_string(spec_k)},
                                           {"variant", spec_variant},
                                           {"exact", spec_exact ? "true" : "false"}}),
                                0, in.digests);
            std::cout << "spectrum: L_" << spec_k << " of " << in.label << " -> "
                      << spec_out << "\n";
        } else if (cmd_betti->parsed()) {
            auto in = load_input(betti_in, std::max(betti_dim, betti_k + 1));
            int b = betti(in.complex, betti_k);
            if (!betti_out.empty()) {
                nlohmann::json j{{"k", betti_k}, {"betti", b}};
                write_with_manifest(betti_out, j.dump(2) + "\n", "betti",
                                    params_of({{"input", in.label},
                                               {"k", std::to_string(betti_k)}}),
                                    0, in.digests);
            }
            std::cout << "betti_" << betti_k << "(" << in.label << ") = " << b << "\n";
        } else if (cmd_walk->parsed() || cmd_sim->parsed()) {
            bool sim = cmd_sim->parsed();
            auto& in_spec = sim ? sim_in : walk_in;
            std::string kind = sim ? sim_kind : walk_kind;
            int k = sim ? sim_k : walk_k;
            int K = sim ? sim_K : walk_K;
            int dim = sim ? sim_dim : walk_dim;
            int max_ring = sim ? sim_max_ring : walk_max_ring;
            auto in = load_input(in_spec, std::max(dim, k + 1));
            TransitionMatrix t;
            if (kind == "node")
                t = node_transition(in.complex.skeleton());
            else if (kind == "lifted_edge")
                t = lifted_edge_transition(in.complex);
            else if (kind == "down_directed")
                t = down_transition(in.complex.skeleton(), DownVariant::directed);
            else if (kind == "down_undirected")
                t = down_transition(in.complex.skeleton(), DownVariant::undirected);
            else if (kind == "up")
                t = up_transition(in.complex, k);
            else if (kind == "k")
                t = k_transition(in.complex, k);
            else if (kind == "inter")
                t = inter_transition(in.complex, K);
            else
                t = cellular_transition(in.complex.skeleton(), max_ring);
            if (!sim) {
                write_with_manifest(walk_out, transition_to_csv(t), "walk",
                                    params_of({{"input", in.label},
                                               {"kind", kind},
                                               {"k", std::to_string(k)},
                                               {"inter_order", std::to_string(K)}}),
                                    0, in.digests);
                std::cout << "walk: " << kind << " on " << in.label << " ("
                          << t.size() << " states) -> " << walk_out << "\n";
            } else {
                Matrix freq = simulate(t, sim_start, sim_steps, sim_trials, sim_seed);
                write_with_manifest(sim_out, trace_to_csv(t, freq), "simulate",
                                    params_of({{"input", in.label},
                                               {"kind", kind},
                                               {"start", std::to_string(sim_start)},
                                               {"steps", std::to_string(sim_steps)},
                                               {"trials", std::to_string(sim_trials)}}),
                                    sim_seed, in.digests);
                std::cout << "simulate: " << kind << " on " << in.label << ", "
                          << sim_trials << " trials -> " << sim_out << "\n";
            }
        } else if (cmd_enc->parsed()) {
            auto in = load_input(enc_in, std::max(enc_dim, enc_k + 1));
            Graph g = in.complex.skeleton();
            FeatureMatrix f;
            std::optional<std::uint64_t> used_seed;
            if (enc_method == "rwse")
                f = rwse_node(g, enc_T, enc_mode == "full" ? RwseMode::full : RwseMode::diag);
            else if (enc_method == "lap_pe")
                f = lap_pe_node(g, enc_neigen);
            else if (enc_method == "resistance")
                f = resistance_distance(g);
            else if (enc_method == "spd")
                f = shortest_path_distance(g);
            else if (enc_method == "edge_rwse") {
                EdgeRwseVariant v;
                if (enc_variant == "full") v = EdgeRwseVariant::full;
                else if (enc_variant == "directed") v = EdgeRwseVariant::directed;
                else if (enc_variant == "undirected") v = EdgeRwseVariant::undirected;
                else if (enc_variant == "up") v = EdgeRwseVariant::up;
                else throw ConfigError("unknown edge_rwse variant '" + enc_variant + "'");
                f = edge_rwse(in.complex, v, enc_T, enc_row_stats);
            } else if (enc_method == "hodge1lap") {
                Hodge1LapMode mode;
                if (enc_mode == "proj") mode = Hodge1LapMode::proj;
                else if (enc_mode == "abs") mode = Hodge1LapMode::abs;
                else if (enc_mode == "sim") mode = Hodge1LapMode::sim;
                else throw ConfigError("hodge1lap mode must be proj, abs or sim");
                Hodge1LapParams p;
                p.n_eigen = enc_neigen;
                p.n_random_proj = enc_nproj;
                p.seed = enc_seed;
                used_seed = enc_seed;
                f = hodge1lap(in.complex, mode, p);
            } else if (enc_method == "k_rwse")
                f = k_rwse(in.complex, enc_k, enc_T);
            else if (enc_method == "inter_rwse")
                f = inter_rwse(in.complex, enc_K, enc_T);
            else
                f = cellular_rwse(g, enc_T, enc_max_ring);
            std::vector<std::pair<std::string, std::string>> params{
                {"input", in.label},       {"method", enc_method},
                {"mode", enc_mode},        {"variant", enc_variant},
                {"T", std::to_string(enc_T)}, {"k", std::to_string(enc_k)},
                {"inter_order", std::to_string(enc_K)},
                {"n_eigen", std::to_string(enc_neigen)},
                {"max_ring", std::to_string(enc_max_ring)}};
            write_with_manifest(enc_out, feature_to_csv(f), "encode", params, enc_seed,
                                in.digests);
            atomic_write(enc_out + ".sidecar.json",
                         feature_sidecar_json(enc_method, params, used_seed, 1e-9));
            std::cout << "encode: " << enc_method << " on " << in.label << " ("
                      << f.values.rows() << "x" << f.values.cols() << ") -> " << enc_out
                      << "\n";
        } else if (cmd_dist->parsed()) {
            Graph a, b;
            std::string label_a, label_b;
            std::vector<std::pair<std::string, std::string>> digests;
            if (dist_in.gallery.size() == 2) {
                a = gallery_graph(dist_in.gallery[0]);
                b = gallery_graph(dist_in.gallery[1]);
                label_a = dist_in.gallery[0];
                label_b = dist_in.gallery[1];
            } else if (dist_inputs.size() == 2) {
                std::string ta = read_file(dist_inputs[0]), tb = read_file(dist_inputs[1]);
                a = parse_edge_list(ta);
                b = parse_edge_list(tb);
                label_a = dist_inputs[0];
                label_b = dist_inputs[1];
                digests = {{dist_inputs[0], fnv1a64_hex(ta)},
                           {dist_inputs[1], fnv1a64_hex(tb)}};
            } else {
                throw ConfigError("distinguish needs --gallery A B or --inputs a b");
            }
            DistinguishOptions opt;
            opt.rwse_steps = dist_T;
            opt.edge_rwse_steps = dist_edge_T;
            auto report = distinguish(a, b, dist_methods, opt);
            report.pair_label = label_a + " vs " + label_b;
            write_with_manifest(dist_out, report_to_json(report), "distinguish",
                                {{"pair", report.pair_label},
                                 {"rwse_steps", std::to_string(dist_T)},
                                 {"edge_rwse_steps", std::to_string(dist_edge_T)}},
                                0, digests);
            std::cout << report_to_text(report);
        } else if (cmd_gal->parsed()) {
            std::string content = gal_as_complex
                                      ? complex_to_json(gallery_complex(gal_name, gal_dim))
                                      : emit_edge_list(gallery_graph(gal_name));
            write_with_manifest(gal_out, content, "gallery",
                                {{"name", gal_name},
                                 {"complex", gal_as_complex ? "true" : "false"}},
                                0, {});
            std::cout << "gallery: " << gal_name << " -> " << gal_out << "\n";
        } else if (cmd_cyc->parsed()) {
            auto in = load_input(cyc_in, cyc_dim);
            auto labels = detect_cycles(in.complex, cyc_seed, cyc_nproj);
            std::ostringstream csv;
            csv << "edge_id,u,v,in_cycle,group,shared\n";
            const auto& edges = in.complex.faces(1);
            for (size_t e = 0; e < edges.size(); ++e) {
                int u = std::min(edges[e][0], edges[e][1]);
                int v = std::max(edges[e][0], edges[e][1]);
                csv << e << "," << u << "," << v << "," << (labels.in_cycle[e] ? 1 : 0)
                    << "," << labels.group[e] << "," << (labels.shared[e] ? 1 : 0) << "\n";
            }
            write_with_manifest(cyc_out, csv.str(), "cycles",
                                params_of({{"input", in.label},
                                           {"n_random_proj", std::to_string(cyc_nproj)}}),
                                cyc_seed, in.digests);
            int n_cycles = 0;
            for (int gid : labels.group) n_cycles = std::max(n_cycles, gid + 1);
            std::cout << "cycles: " << in.label << ", " << n_cycles << " group(s) -> "
                      << cyc_out << "\n";
            if (cyc_eigen1) {
                // experimental: edges supported by the eigenvalue-1 subspace of L_1
                Spectrum s = spectrum(hodge_laplacian(in.complex, 1));
                std::cout << "eigenvalue-1 support (experimental):";
                bool any = false;
                for (int i = 0; i < s.eigenvalues.size(); ++i) {
                    if (std::abs(s.eigenvalues[i] - 1.0) > 1e-9) continue;
                    for (int e = 0; e < s.eigenvectors.rows(); ++e)
                        if (std::abs(s.eigenvectors(e, i)) > 1e-9) {
                            std::cout << " " << e;
                            any = true;
                        }
                }
                std::cout << (any ? "\n" : " none\n");
            }
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
