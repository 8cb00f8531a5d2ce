#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gbcore/matrix.hpp"
#include "gbcore/semiring.hpp"

namespace gbcore::bench {

struct RmatParams {
    double a = 0.57;
    double b = 0.19;
    double c = 0.19;
    double d = 0.05;
};

/// Undirected R-MAT graph with 2^scale vertices and edge_factor * 2^scale
/// generated edges, mirrored to both directions. Values are drawn with
/// random_scalar; duplicates keep the first value. Deterministic in `seed`.
SparseMatrix rmat_graph(const Semiring& sr, unsigned scale, unsigned edge_factor,
                        std::uint64_t seed, RmatParams params = {});

/// Undirected Erdos-Renyi G(n, m) with the same vertex and edge counts as
/// the R-MAT generator.
SparseMatrix erdos_renyi_graph(const Semiring& sr, unsigned scale, unsigned edge_factor,
                               std::uint64_t seed);

enum class Generator { rmat, erdos_renyi };

inline constexpr unsigned kMaxScale = 16;

/// Operations the harness can time.
std::vector<std::string_view> operation_names();

struct BenchConfig {
    std::vector<std::string> operations;
    unsigned scale_min = 10;
    unsigned scale_max = 14;
    unsigned edge_factor = 32;
    std::string semiring = "arith-real";
    unsigned trials = 10;
    std::uint64_t seed = 1;
    Generator generator = Generator::rmat;
};

struct BenchReport {
    std::string operation;
    std::string semiring;
    unsigned scale = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    unsigned trials = 0;
    double mean_api_us = 0;
    double mean_direct_us = 0;

    double overhead_percent() const { return 100.0 * (mean_api_us - mean_direct_us) / mean_direct_us; }
};

/// Times each operation through the public API and through the unchecked
/// kernel it wraps. Trials alternate which path runs first. Graph
/// generation is outside the timed region. Throws ValueError for an unknown
/// operation or a scale above kMaxScale.
std::vector<BenchReport> run(const BenchConfig& cfg);

/// Median overhead_percent over the reports at `scale`.
double median_overhead(const std::vector<BenchReport>& reports, unsigned scale);

/// "op,scale,edges,mean_api_us,mean_direct_us,overhead_pct"
std::string csv_line(const BenchReport& r);
void print_table(std::ostream& out, const std::vector<BenchReport>& reports);

}  // namespace gbcore::bench
