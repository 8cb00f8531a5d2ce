#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "gbcore/bench.hpp"
#include "gbcore/error.hpp"
#include "gbcore/graph.hpp"
#include "gbcore/io.hpp"
#include "gbcore/kernels.hpp"

namespace gbcore::cli {
namespace {

struct Globals {
    std::string semiring = "arith-real";
    std::string variant = "non-negative";
    unsigned universe = 64;
    std::string format;  // empty: by extension
    bool one_based = false;
    std::uint64_t seed = 1;
    std::string output;
};

Semiring global_semiring(const Globals& g) {
    const auto variant = g.variant == "non-positive" ? OrderVariant::non_positive : OrderVariant::non_negative;
    return semiring_by_name(g.semiring, g.universe, variant);
}

bool is_matrix_market(const Globals& g, const std::string& path) {
    if (!g.format.empty()) return g.format == "mm";
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    return ends_with(".mtx") || ends_with(".mm");
}

SparseMatrix load(const Globals& g, const std::string& path, const Semiring& sr) {
    if (is_matrix_market(g, path)) return read_matrix_market(path, sr);
    return read_tsv_matrix(path, sr, g.one_based);
}

IndexVector shift(const Globals& g, const std::vector<Index>& labels, const char* what) {
    IndexVector out;
    out.reserve(labels.size());
    for (Index v : labels) {
        if (g.one_based) {
            if (v == 0) throw ValueError(std::string(what) + ": label 0 with --one-based");
            --v;
        }
        out.push_back(v);
    }
    return out;
}

Index label(const Globals& g, Index v) { return g.one_based ? v + 1 : v; }

// Writes Matrix Market to --output, or to stdout when no path is given.
void emit(const Globals& g, std::ostream& out, const SparseMatrix& m) {
    if (g.output.empty()) {
        write_matrix_market(out, m);
    } else {
        write_matrix_market(g.output, m);
    }
}

std::ostream& summary_stream(const Globals& g, std::ostream& out, std::ostream& err) {
    return g.output.empty() ? err : out;
}

SparseMatrix as_min_plus(const SparseMatrix& weights) {
    const Semiring mp = semiring_by_name("min-plus");
    return build(mp, weights.dims(), extract_tuples(weights));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Semiring sparse-matrix graph toolkit", "gbtool"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--semiring", g.semiring, "Semiring name")->capture_default_str();
    app.add_option("--variant", g.variant, "Half-line for max-min and min-max")
        ->check(CLI::IsMember({"non-negative", "non-positive"}))
        ->capture_default_str();
    app.add_option("--universe", g.universe, "Universe size for union-intersect")
        ->check(CLI::Range(1U, 64U))
        ->capture_default_str();
    app.add_option("--format", g.format, "Input format; default from the file extension")
        ->check(CLI::IsMember({"tsv", "mm"}));
    app.add_flag("--one-based", g.one_based, "TSV files and vertex labels start at 1");
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--output", g.output, "Output path");

    // build
    std::string build_input;
    std::string dup_name;
    std::optional<Index> build_rows;
    std::optional<Index> build_cols;
    auto* build_cmd = app.add_subcommand("build", "Build a matrix from an edge list");
    build_cmd->add_option("input", build_input)->required();
    build_cmd->add_option("--dup", dup_name, "Duplicate rule: an operator name, or 'strict'");
    build_cmd->add_option("--nrows", build_rows);
    build_cmd->add_option("--ncols", build_cols);

    std::string input_a;
    std::string input_b;
    auto* tuples_cmd = app.add_subcommand("tuples", "Print stored entries as TSV triples");
    tuples_cmd->add_option("input", input_a)->required();
    auto* transpose_cmd = app.add_subcommand("transpose", "Swap rows and columns");
    transpose_cmd->add_option("input", input_a)->required();
    auto* mxm_cmd = app.add_subcommand("mxm", "Semiring matrix product A B");
    mxm_cmd->add_option("a", input_a)->required();
    mxm_cmd->add_option("b", input_b)->required();
    auto* union_cmd = app.add_subcommand("union", "Element-wise (+) of two graphs");
    union_cmd->add_option("a", input_a)->required();
    union_cmd->add_option("b", input_b)->required();
    auto* intersect_cmd = app.add_subcommand("intersect", "Element-wise (x) of two graphs");
    intersect_cmd->add_option("a", input_a)->required();
    intersect_cmd->add_option("b", input_b)->required();

    std::vector<Index> sources;
    std::optional<std::size_t> max_hops;
    std::string mode = "structural";
    auto* bfs_cmd = app.add_subcommand("bfs", "Breadth-first levels");
    bfs_cmd->add_option("input", input_a)->required();
    bfs_cmd->add_option("--source", sources, "Source vertex; repeat or comma-join for several")
        ->required()
        ->delimiter(',');
    bfs_cmd->add_option("--max-hops", max_hops);
    bfs_cmd->add_option("--mode", mode)->check(CLI::IsMember({"structural", "gf2"}))->capture_default_str();

    Index sssp_source = 0;
    auto* sssp_cmd = app.add_subcommand("sssp", "Min-plus single-source distances");
    sssp_cmd->add_option("input", input_a)->required();
    sssp_cmd->add_option("--source", sssp_source)->required();

    std::vector<Index> rows;
    std::vector<Index> cols;
    auto* subgraph_cmd = app.add_subcommand("subgraph", "Extract rows and columns");
    subgraph_cmd->add_option("input", input_a)->required();
    subgraph_cmd->add_option("--rows", rows)->required()->delimiter(',');
    subgraph_cmd->add_option("--cols", cols)->required()->delimiter(',');

    auto* assign_cmd = app.add_subcommand("assign", "Write a matrix into selected rows and columns");
    assign_cmd->add_option("input", input_a)->required();
    assign_cmd->add_option("--with", input_b, "Matrix to write")->required();
    assign_cmd->add_option("--rows", rows)->required()->delimiter(',');
    assign_cmd->add_option("--cols", cols)->required()->delimiter(',');

    std::string e_out_path;
    std::string e_in_path;
    std::string edges_path;
    bool weighted = false;
    auto* adjacency_cmd = app.add_subcommand("adjacency", "Adjacency matrix E_out^T E_in from incidence matrices");
    auto* out_opt = adjacency_cmd->add_option("--out-incidence", e_out_path);
    auto* in_opt = adjacency_cmd->add_option("--in-incidence", e_in_path);
    auto* edges_opt = adjacency_cmd->add_option("--edges", edges_path, "Edge list to turn into incidence matrices");
    out_opt->needs(in_opt);
    in_opt->needs(out_opt);
    edges_opt->excludes(out_opt)->excludes(in_opt);
    adjacency_cmd->add_flag("--weighted", weighted, "Carry edge weights on the out-incidence matrix");

    bench::BenchConfig bench_cfg;
    std::string generator = "rmat";
    std::optional<unsigned> gate_scale;
    double gate_percent = 5.0;
    auto* bench_cmd = app.add_subcommand("bench", "Time API calls against the kernels they wrap");
    bench_cmd->add_option("--op", bench_cfg.operations, "Operation; repeat for several (default: all)");
    bench_cmd->add_option("--scale-min", bench_cfg.scale_min)->capture_default_str();
    bench_cmd->add_option("--scale-max", bench_cfg.scale_max)->capture_default_str();
    bench_cmd->add_option("--edge-factor", bench_cfg.edge_factor)->capture_default_str();
    bench_cmd->add_option("--trials", bench_cfg.trials)->capture_default_str();
    bench_cmd->add_option("--generator", generator)->check(CLI::IsMember({"rmat", "er"}))->capture_default_str();
    bench_cmd->add_option("--gate-scale", gate_scale, "Fail unless the median overhead at this scale is under --gate-percent");
    bench_cmd->add_option("--gate-percent", gate_percent)->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageOrDataError;
    }

    try {
        if (*build_cmd) {
            const Semiring sr = global_semiring(g);
            std::optional<Dimensions> dims;
            if (build_rows || build_cols) {
                if (!build_rows || !build_cols) throw ValueError("--nrows and --ncols go together");
                dims = Dimensions{*build_rows, *build_cols};
            }
            SparseMatrix m = [&] {
                if (is_matrix_market(g, build_input)) return read_matrix_market(build_input, sr);
                const bool strict = dup_name == "strict";
                std::optional<BinaryOp> dup;
                if (!strict && !dup_name.empty()) dup = ops::by_name(dup_name, sr.domain());
                return read_tsv_matrix(build_input, sr, g.one_based, dims, dup, strict);
            }();
            emit(g, out, m);
            summary_stream(g, out, err) << m.nrows() << " x " << m.ncols() << ", " << m.nnz() << " entries\n";
        } else if (*tuples_cmd) {
            const SparseMatrix m = load(g, input_a, global_semiring(g));
            if (g.output.empty()) {
                write_tsv(out, m, g.one_based);
            } else {
                write_tsv(g.output, m, g.one_based);
            }
        } else if (*transpose_cmd) {
            emit(g, out, transpose(load(g, input_a, global_semiring(g))));
        } else if (*mxm_cmd) {
            const Semiring sr = global_semiring(g);
            emit(g, out, mxm(sr, load(g, input_a, sr), load(g, input_b, sr)));
        } else if (*union_cmd) {
            const Semiring sr = global_semiring(g);
            emit(g, out, graph_union(sr, load(g, input_a, sr), load(g, input_b, sr)));
        } else if (*intersect_cmd) {
            const Semiring sr = global_semiring(g);
            emit(g, out, graph_intersection(sr, load(g, input_a, sr), load(g, input_b, sr)));
        } else if (*bfs_cmd) {
            const SparseMatrix a = load(g, input_a, global_semiring(g));
            BfsOptions opts;
            opts.max_hops = max_hops;
            opts.mode = mode == "gf2" ? FrontierMode::gf2 : FrontierMode::structural;
            opts.track_parents = opts.mode == FrontierMode::structural;
            const BfsResult r = bfs_levels(a, shift(g, sources, "--source"), opts);
            out << "vertex\tlevel\tparent\n";
            for (Index v = 0; v < r.levels.size(); ++v) {
                out << label(g, v) << '\t';
                if (r.levels[v]) out << *r.levels[v]; else out << '-';
                out << '\t';
                if (r.parents && (*r.parents)[v]) out << label(g, *(*r.parents)[v]); else out << '-';
                out << '\n';
            }
        } else if (*sssp_cmd) {
            // Unweighted edges must default to length 1, so read with the
            // arithmetic 1 and convert.
            const SparseMatrix w = as_min_plus(load(g, input_a, semiring_by_name("arith-real")));
            const auto src = shift(g, {sssp_source}, "--source");
            const auto dist = sssp_minplus(w, src.front());
            out << "vertex\tdistance\n";
            for (Index v = 0; v < dist.size(); ++v) {
                out << label(g, v) << '\t';
                if (std::isinf(dist[v])) out << '-'; else out << format_scalar(real(dist[v]));
                out << '\n';
            }
        } else if (*subgraph_cmd) {
            const SparseMatrix a = load(g, input_a, global_semiring(g));
            const SparseMatrix c = extract(a, shift(g, rows, "--rows"), shift(g, cols, "--cols"));
            emit(g, out, c);
            summary_stream(g, out, err) << c.nrows() << " x " << c.ncols() << ", " << c.nnz() << " entries\n";
        } else if (*assign_cmd) {
            const Semiring sr = global_semiring(g);
            emit(g, out, assign(load(g, input_a, sr), shift(g, rows, "--rows"), shift(g, cols, "--cols"),
                                load(g, input_b, sr)));
        } else if (*adjacency_cmd) {
            const Semiring sr = global_semiring(g);
            SparseMatrix a = [&] {
                if (!edges_path.empty()) {
                    const auto edges = read_edge_list(edges_path, EdgeListOptions{g.one_based, sr});
                    const Index n = vertex_bound(edges);
                    auto [e_out, e_in] = incidence_from_edges(
                        sr, edges, n, n, weighted ? IncidenceWeights::weights_on_out : IncidenceWeights::ones);
                    return adjacency_from_incidence(sr, e_out, e_in);
                }
                if (e_out_path.empty()) throw ValueError("adjacency needs --out-incidence/--in-incidence or --edges");
                return adjacency_from_incidence(sr, read_matrix_market(e_out_path, sr),
                                                read_matrix_market(e_in_path, sr));
            }();
            emit(g, out, a);
            summary_stream(g, out, err) << a.nrows() << " x " << a.ncols() << ", " << a.nnz() << " entries\n";
        } else if (*bench_cmd) {
            bench_cfg.semiring = g.semiring;
            bench_cfg.seed = g.seed;
            bench_cfg.generator = generator == "er" ? bench::Generator::erdos_renyi : bench::Generator::rmat;
            const auto reports = bench::run(bench_cfg);
            bench::print_table(out, reports);
            std::unique_ptr<std::ofstream> file;
            if (!g.output.empty()) {
                file = std::make_unique<std::ofstream>(g.output);
                if (!*file) throw ParseError(g.output, 0, "cannot open file for writing");
            } else {
                out << '\n';
            }
            std::ostream& csv = file ? *file : out;
            for (const auto& r : reports) csv << bench::csv_line(r) << '\n';
            if (gate_scale) {
                const double median = bench::median_overhead(reports, *gate_scale);
                const bool pass = median < gate_percent;
                out << "gate: median overhead at scale " << *gate_scale << " = " << median << "% ("
                    << (pass ? "pass" : "FAIL") << ", limit " << gate_percent << "%)\n";
                if (!pass) return kUsageOrDataError;
            }
        }
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrDataError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kOk;
}

}  // namespace gbcore::cli
