#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gbcore/matrix.hpp"
#include "gbcore/semiring.hpp"

namespace gbcore {

/// A graph held as an adjacency matrix, an incidence pair, or both.
/// When both are present the adjacency equals E_out^T (+).(x) E_in.
class GraphHandle {
public:
    static GraphHandle from_adjacency(SparseMatrix adjacency, bool directed = true);
    /// Derives the adjacency view with adjacency_from_incidence.
    static GraphHandle from_incidence(const Semiring& sr, SparseMatrix e_out, SparseMatrix e_in,
                                      bool directed = true);

    const std::optional<SparseMatrix>& adjacency() const noexcept { return adjacency_; }
    const std::optional<SparseMatrix>& incidence_out() const noexcept { return e_out_; }
    const std::optional<SparseMatrix>& incidence_in() const noexcept { return e_in_; }
    bool directed() const noexcept { return directed_; }

    Index out_vertex_count() const;
    Index in_vertex_count() const;
    /// Incidence rows when present, stored adjacency entries otherwise.
    std::size_t edge_count() const;

private:
    GraphHandle() = default;

    std::optional<SparseMatrix> adjacency_;
    std::optional<SparseMatrix> e_out_;
    std::optional<SparseMatrix> e_in_;
    bool directed_ = true;
};

/// A = E_out^T (+).(x) E_in. Multi-edges fold with (+); a hyper-edge row
/// yields one entry per (out-vertex, in-vertex) pair.
SparseMatrix adjacency_from_incidence(const Semiring& sr, const SparseMatrix& e_out,
                                      const SparseMatrix& e_in);

/// E^T E over arith-real for a +/-1 signed incidence matrix. Each row must
/// hold exactly one -1 and one +1; anything else throws ValueError.
SparseMatrix laplacian_from_incidence(const SparseMatrix& e_signed);

enum class FrontierMode {
    /// or.and over booleans: plain reachability.
    structural,
    /// xor.and over GF(2): a vertex reached an even number of times from the
    /// frontier cancels out and is not visited on that hop.
    gf2,
};

struct BfsOptions {
    /// Defaults to the vertex count.
    std::optional<std::size_t> max_hops;
    FrontierMode mode = FrontierMode::structural;
    /// Records the smallest-index predecessor of every reached vertex.
    /// Uses a min.first semiring over vertex labels; reachability is the
    /// structural one.
    bool track_parents = false;
};

struct BfsResult {
    std::vector<std::optional<std::size_t>> levels;
    /// Present when tracked; sources and unreached vertices have no parent.
    std::optional<std::vector<std::optional<Index>>> parents;
};

/// Level-synchronous BFS from one or more sources: the frontier advances by
/// q = f (+).(x) A and is masked against the visited set with element-wise
/// operations. Stops when the frontier empties or after max_hops hops.
BfsResult bfs_levels(const SparseMatrix& a, const IndexVector& sources, const BfsOptions& opts = {});

/// The or.and boolean semiring used for structural frontiers.
Semiring structure_semiring();

/// Single-source distances over min-plus. A must carry the min-plus
/// 0-element (+inf) and nonnegative weights. Relaxes d = min(d, d (+).(x) A)
/// until a fixpoint or n - 1 rounds. Unreached vertices hold +inf.
std::vector<double> sssp_minplus(const SparseMatrix& a, Index source);

SparseMatrix graph_union(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix graph_intersection(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b);

}  // namespace gbcore
