#include "gbcore/graph.hpp"

#include <cmath>
#include <limits>

#include "gbcore/error.hpp"
#include "gbcore/kernels.hpp"

namespace gbcore {

GraphHandle GraphHandle::from_adjacency(SparseMatrix adjacency, bool directed) {
    GraphHandle g;
    g.adjacency_ = std::move(adjacency);
    g.directed_ = directed;
    return g;
}

GraphHandle GraphHandle::from_incidence(const Semiring& sr, SparseMatrix e_out, SparseMatrix e_in,
                                        bool directed) {
    GraphHandle g;
    g.adjacency_ = adjacency_from_incidence(sr, e_out, e_in);
    g.e_out_ = std::move(e_out);
    g.e_in_ = std::move(e_in);
    g.directed_ = directed;
    return g;
}

Index GraphHandle::out_vertex_count() const {
    return adjacency_ ? adjacency_->nrows() : e_out_->ncols();
}

Index GraphHandle::in_vertex_count() const {
    return adjacency_ ? adjacency_->ncols() : e_in_->ncols();
}

std::size_t GraphHandle::edge_count() const {
    return e_out_ ? e_out_->nrows() : adjacency_->nnz();
}

SparseMatrix adjacency_from_incidence(const Semiring& sr, const SparseMatrix& e_out,
                                      const SparseMatrix& e_in) {
    if (e_out.nrows() != e_in.nrows()) {
        throw DimensionMismatch("adjacency_from_incidence: edge dimension",
                                {e_out.nrows(), e_in.ncols()}, e_in.dims());
    }
    return mxm(sr, transpose(e_out), e_in);
}

SparseMatrix laplacian_from_incidence(const SparseMatrix& e_signed) {
    const Semiring arith = semiring_by_name("arith-real");
    if (e_signed.domain() != Domain::real || e_signed.zero() != arith.zero()) {
        throw DomainMismatch("laplacian_from_incidence: signed incidence must be arith-real");
    }
    for (Index k = 0; k < e_signed.nrows(); ++k) {
        const auto row = e_signed.row(k);
        int outs = 0;
        int ins = 0;
        for (const Scalar& v : row.vals) {
            const double x = std::get<double>(v);
            if (x == -1.0) {
                ++outs;
            } else if (x == 1.0) {
                ++ins;
            } else {
                outs = ins = -1;
                break;
            }
        }
        if (outs != 1 || ins != 1) {
            throw ValueError("signed incidence row " + std::to_string(k) +
                             " must hold exactly one -1 and one +1");
        }
    }
    return mxm(arith, transpose(e_signed), e_signed);
}

Semiring structure_semiring() {
    return Semiring("or-and", Domain::boolean, ops::lor(), ops::land(), boolean(false), boolean(true));
}

namespace {

// min over positive labels with 0 as identity; (x) keeps the frontier label.
Semiring min_first_semiring() {
    BinaryOp add("min-nonzero", [](const Scalar& a, const Scalar& b) -> Scalar {
        const auto x = std::get<std::uint64_t>(a);
        const auto y = std::get<std::uint64_t>(b);
        if (x == 0) return b;
        if (y == 0) return a;
        return natural(x < y ? x : y);
    }, Laws{true, true});
    BinaryOp mul("first-nonzero", [](const Scalar& a, const Scalar& b) -> Scalar {
        if (std::get<std::uint64_t>(a) == 0 || std::get<std::uint64_t>(b) == 0) return natural(0);
        return a;
    }, Laws{false, true});
    return Semiring("min-first", Domain::natural, std::move(add), std::move(mul), natural(0),
                    natural(1));
}

// Entries of q whose position is not stored in `visited`, built from two
// element-wise passes: the first cancels shared positions, the second
// intersects back with q.
SparseMatrix mask_out(const SparseMatrix& q, const SparseMatrix& visited) {
    const Scalar zero = q.zero();
    const BinaryOp cancel("cancel", [zero](const Scalar&, const Scalar&) { return zero; });
    const SparseMatrix differ = ewise_add(cancel, zero, q, visited);
    return ewise_mult(ops::first(q.domain()), zero, differ, q);
}

SparseMatrix labels_vector(const SparseMatrix& frontier) {
    TripleList t = extract_tuples(frontier);
    for (std::size_t k = 0; k < t.size(); ++k) t.vals[k] = natural(t.cols[k] + 1);
    return build(frontier.dims(), t, std::nullopt, natural(0));
}

}  // namespace

BfsResult bfs_levels(const SparseMatrix& a, const IndexVector& sources, const BfsOptions& opts) {
    if (a.nrows() != a.ncols()) {
        throw DimensionMismatch("bfs_levels: adjacency must be square", {a.nrows(), a.nrows()}, a.dims());
    }
    const Index n = a.nrows();
    for (Index s : sources) {
        if (s >= n) throw IndexOutOfBounds("bfs source", s, n);
    }
    if (opts.track_parents && opts.mode == FrontierMode::gf2) {
        throw ValueError("bfs_levels: parent tracking requires the structural frontier mode");
    }

    const Semiring sr = opts.track_parents        ? min_first_semiring()
                        : opts.mode == FrontierMode::gf2 ? semiring_by_name("xor-and")
                                                         : structure_semiring();
    const SparseMatrix structure = pattern(a, sr.one(), sr.zero());

    TripleList seeds;
    for (Index s : sources) seeds.push_back(0, s, sr.one());
    SparseMatrix frontier = build({1, n}, seeds, ops::first(sr.domain()), sr.zero());
    if (opts.track_parents) frontier = labels_vector(frontier);
    SparseMatrix visited = frontier;

    BfsResult result;
    result.levels.assign(n, std::nullopt);
    if (opts.track_parents) result.parents.emplace(n, std::nullopt);
    for (Index s : sources) result.levels[s] = 0;

    const std::size_t max_hops = opts.max_hops.value_or(n);
    for (std::size_t hop = 1; hop <= max_hops && frontier.nnz() > 0; ++hop) {
        const SparseMatrix reached = vxm(sr, frontier, structure);
        SparseMatrix fresh = mask_out(reached, visited);
        if (fresh.nnz() == 0) break;
        const auto row = fresh.row(0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            result.levels[row.cols[k]] = hop;
            if (opts.track_parents) {
                (*result.parents)[row.cols[k]] = std::get<std::uint64_t>(row.vals[k]) - 1;
            }
        }
        visited = ewise_add(ops::first(sr.domain()), sr.zero(), visited, fresh);
        frontier = opts.track_parents ? labels_vector(fresh) : std::move(fresh);
    }
    return result;
}

std::vector<double> sssp_minplus(const SparseMatrix& a, Index source) {
    const Semiring sr = semiring_by_name("min-plus");
    if (a.nrows() != a.ncols()) {
        throw DimensionMismatch("sssp_minplus: adjacency must be square", {a.nrows(), a.nrows()}, a.dims());
    }
    if (a.domain() != Domain::real || a.zero() != sr.zero()) {
        throw DomainMismatch("sssp_minplus: adjacency must use the min-plus 0-element +inf");
    }
    const Index n = a.nrows();
    if (source >= n) throw IndexOutOfBounds("sssp source", source, n);
    for (const Scalar& w : a.values()) {
        if (std::get<double>(w) < 0) throw ValueError("sssp_minplus: negative edge weight " + format_scalar(w));
    }

    TripleList seed;
    seed.push_back(0, source, real(0.0));
    SparseMatrix dist = build(sr, {1, n}, seed);
    for (Index round = 0; round + 1 < n; ++round) {
        SparseMatrix relaxed = ewise_add(sr, dist, vxm(sr, dist, a));
        if (relaxed == dist) break;
        dist = std::move(relaxed);
    }

    std::vector<double> out(n, std::numeric_limits<double>::infinity());
    const auto row = dist.row(0);
    for (std::size_t k = 0; k < row.size(); ++k) out[row.cols[k]] = std::get<double>(row.vals[k]);
    return out;
}

SparseMatrix graph_union(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b) {
    return ewise_add(sr, a, b);
}

SparseMatrix graph_intersection(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b) {
    return ewise_mult(sr, a, b);
}

}  // namespace gbcore
