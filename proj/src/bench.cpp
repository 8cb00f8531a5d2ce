#include "gbcore/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "gbcore/error.hpp"
#include "gbcore/kernels.hpp"

namespace gbcore::bench {
namespace {

Scalar nonzero_value(const Semiring& sr, std::mt19937_64& rng) {
    for (;;) {
        Scalar v = random_scalar(sr, rng);
        if (v != sr.zero()) return v;
    }
}

SparseMatrix undirected(const Semiring& sr, Index n, const std::vector<std::pair<Index, Index>>& pairs,
                        std::mt19937_64& rng) {
    TripleList t;
    t.rows.reserve(2 * pairs.size());
    t.cols.reserve(2 * pairs.size());
    t.vals.reserve(2 * pairs.size());
    for (auto [u, v] : pairs) {
        const Scalar w = nonzero_value(sr, rng);
        t.push_back(u, v, w);
        t.push_back(v, u, w);
    }
    return build({n, n}, t, ops::first(sr.domain()), sr.zero());
}

void check_scale(unsigned scale) {
    if (scale > kMaxScale) {
        throw ValueError("scale " + std::to_string(scale) + " exceeds the limit of " + std::to_string(kMaxScale));
    }
}

}  // namespace

SparseMatrix rmat_graph(const Semiring& sr, unsigned scale, unsigned edge_factor, std::uint64_t seed,
                        RmatParams params) {
    check_scale(scale);
    const Index n = Index{1} << scale;
    const std::size_t m = static_cast<std::size_t>(edge_factor) * n;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double ab = params.a + params.b;
    const double abc = ab + params.c;
    std::vector<std::pair<Index, Index>> pairs;
    pairs.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        Index u = 0;
        Index v = 0;
        for (unsigned bit = 0; bit < scale; ++bit) {
            const double r = unit(rng);
            const Index row_bit = r >= ab ? 1 : 0;
            const Index col_bit = (r >= params.a && r < ab) || r >= abc ? 1 : 0;
            u = (u << 1) | row_bit;
            v = (v << 1) | col_bit;
        }
        pairs.emplace_back(u, v);
    }
    return undirected(sr, n, pairs, rng);
}

SparseMatrix erdos_renyi_graph(const Semiring& sr, unsigned scale, unsigned edge_factor,
                               std::uint64_t seed) {
    check_scale(scale);
    const Index n = Index{1} << scale;
    const std::size_t m = static_cast<std::size_t>(edge_factor) * n;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> vertex(0, n - 1);
    std::vector<std::pair<Index, Index>> pairs;
    pairs.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        const Index u = vertex(rng);
        pairs.emplace_back(u, vertex(rng));
    }
    return undirected(sr, n, pairs, rng);
}

std::vector<std::string_view> operation_names() {
    return {"mxm", "mxv", "ewise_add", "ewise_mult", "extract", "assign", "transpose"};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Workload {
    SparseMatrix a;
    SparseMatrix b;
    SparseMatrix block;   // n x 32 multi-source frontier for mxm
    SparseMatrix vector;  // n x 1 for mxv
    IndexVector subset;   // sorted half of the vertices
    SparseMatrix patch;   // |subset| x |subset| for assign
};

Workload make_workload(const Semiring& sr, const BenchConfig& cfg, unsigned scale) {
    const std::uint64_t seed = cfg.seed + 7919ULL * scale;
    auto gen = [&](std::uint64_t s) {
        return cfg.generator == Generator::rmat ? rmat_graph(sr, scale, cfg.edge_factor, s)
                                                : erdos_renyi_graph(sr, scale, cfg.edge_factor, s);
    };
    SparseMatrix a = gen(seed);
    SparseMatrix b = gen(seed + 1);
    const Index n = a.nrows();
    std::mt19937_64 rng(seed + 2);
    std::uniform_int_distribution<Index> vertex(0, n - 1);

    TripleList block;
    for (Index c = 0; c < 32; ++c) block.push_back(vertex(rng), c, nonzero_value(sr, rng));
    TripleList vec;
    for (Index k = 0; k < n; ++k) {
        if (rng() % 10 == 0) vec.push_back(k, 0, nonzero_value(sr, rng));
    }
    IndexVector subset(n);
    for (Index k = 0; k < n; ++k) subset[k] = k;
    std::shuffle(subset.begin(), subset.end(), rng);
    subset.resize(n / 2);
    std::sort(subset.begin(), subset.end());

    SparseMatrix block_m = build({n, 32}, block, ops::first(sr.domain()), sr.zero());
    SparseMatrix vec_m = build({n, 1}, vec, ops::first(sr.domain()), sr.zero());
    SparseMatrix patch = extract(b, subset, subset);
    return {std::move(a), std::move(b), std::move(block_m), std::move(vec_m), std::move(subset), std::move(patch)};
}

template <class F>
double time_us(F&& f) {
    const auto start = Clock::now();
    auto result = f();
    const auto stop = Clock::now();
    volatile std::size_t sink = result.vals.size();
    (void)sink;
    return std::chrono::duration<double, std::micro>(stop - start).count();
}

// The API path returns a SparseMatrix; expose its values for the sink.
struct ApiResult {
    SparseMatrix m;
    std::span<const Scalar> vals;
};

template <class F>
auto api(F&& f) {
    return [f] {
        SparseMatrix m = f();
        ApiResult r{std::move(m), {}};
        r.vals = r.m.values();
        return r;
    };
}

BenchReport time_operation(const Semiring& sr, const BenchConfig& cfg, unsigned scale,
                           std::string_view op, const Workload& w) {
    const IndexVector& s = w.subset;
    std::function<ApiResult()> api_path;
    std::function<CsrParts()> direct_path;
    if (op == "mxm") {
        api_path = api([&] { return mxm(sr, w.a, w.block); });
        direct_path = [&] { return detail::mxm_raw(sr, w.a.view(), w.block.view()); };
    } else if (op == "mxv") {
        api_path = api([&] { return mxv(sr, w.a, w.vector); });
        direct_path = [&] { return detail::mxv_raw(sr, w.a.view(), w.vector.view()); };
    } else if (op == "ewise_add") {
        api_path = api([&] { return ewise_add(sr, w.a, w.b); });
        direct_path = [&] { return detail::ewise_add_raw(sr.add(), sr.zero(), w.a.view(), w.b.view()); };
    } else if (op == "ewise_mult") {
        api_path = api([&] { return ewise_mult(sr, w.a, w.b); });
        direct_path = [&] { return detail::ewise_mult_raw(sr.mul(), sr.zero(), w.a.view(), w.b.view()); };
    } else if (op == "extract") {
        api_path = api([&] { return extract(w.a, s, s); });
        direct_path = [&] { return detail::extract_raw(w.a.view(), s, s); };
    } else if (op == "assign") {
        api_path = api([&] { return assign(w.a, s, s, w.patch); });
        direct_path = [&] { return detail::assign_raw(w.a.view(), s, s, w.patch.view()); };
    } else if (op == "transpose") {
        api_path = api([&] { return transpose(w.a); });
        direct_path = [&] { return detail::transpose_raw(w.a.view()); };
    } else {
        throw ValueError("unknown benchmark operation '" + std::string(op) + "'");
    }

    // Warm both paths once, then alternate which runs first.
    time_us(api_path);
    time_us(direct_path);
    double api_total = 0;
    double direct_total = 0;
    for (unsigned t = 0; t < cfg.trials; ++t) {
        if (t % 2 == 0) {
            api_total += time_us(api_path);
            direct_total += time_us(direct_path);
        } else {
            direct_total += time_us(direct_path);
            api_total += time_us(api_path);
        }
    }

    BenchReport r;
    r.operation = std::string(op);
    r.semiring = cfg.semiring;
    r.scale = scale;
    r.vertices = w.a.nrows();
    r.edges = w.a.nnz();
    r.trials = cfg.trials;
    r.mean_api_us = api_total / cfg.trials;
    r.mean_direct_us = direct_total / cfg.trials;
    return r;
}

}  // namespace

std::vector<BenchReport> run(const BenchConfig& cfg) {
    if (cfg.trials == 0) throw ValueError("bench needs at least one trial");
    if (cfg.scale_min > cfg.scale_max) throw ValueError("bench scale range is empty");
    check_scale(cfg.scale_max);
    std::vector<std::string> ops = cfg.operations;
    if (ops.empty()) {
        for (auto name : operation_names()) ops.emplace_back(name);
    }
    const auto known = operation_names();
    for (const auto& op : ops) {
        if (std::find(known.begin(), known.end(), op) == known.end()) {
            throw ValueError("unknown benchmark operation '" + op + "'");
        }
    }
    const Semiring sr = semiring_by_name(cfg.semiring, 64);

    std::vector<BenchReport> reports;
    for (unsigned scale = cfg.scale_min; scale <= cfg.scale_max; ++scale) {
        const Workload w = make_workload(sr, cfg, scale);
        for (const auto& op : ops) reports.push_back(time_operation(sr, cfg, scale, op, w));
    }
    return reports;
}

double median_overhead(const std::vector<BenchReport>& reports, unsigned scale) {
    std::vector<double> v;
    for (const auto& r : reports) {
        if (r.scale == scale) v.push_back(r.overhead_percent());
    }
    if (v.empty()) throw ValueError("no reports at scale " + std::to_string(scale));
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::string csv_line(const BenchReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%u,%zu,%.3f,%.3f,%.3f", r.operation.c_str(), r.scale, r.edges,
                  r.mean_api_us, r.mean_direct_us, r.overhead_percent());
    return buf;
}

void print_table(std::ostream& out, const std::vector<BenchReport>& reports) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-11s %-16s %5s %8s %10s %6s %14s %14s %10s\n", "op", "semiring",
                  "scale", "vertices", "edges", "trials", "api_us", "direct_us", "overhead%");
    out << buf;
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%-11s %-16s %5u %8zu %10zu %6u %14.3f %14.3f %10.3f\n",
                      r.operation.c_str(), r.semiring.c_str(), r.scale, r.vertices, r.edges, r.trials,
                      r.mean_api_us, r.mean_direct_us, r.overhead_percent());
        out << buf;
    }
}

}  // namespace gbcore::bench
