#include "gbcore/oracle.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <queue>

#include "gbcore/error.hpp"

namespace gbcore::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_cap(Dimensions d) {
    if (d.nrows > kMaxExtent || d.ncols > kMaxExtent) {
        throw ValueError("oracle inputs are capped at " + std::to_string(kMaxExtent) + " x " +
                         std::to_string(kMaxExtent) + ", got " + to_string(d));
    }
}

void check_same(const char* op, const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dims != b.dims) throw DimensionMismatch(op, a.dims, b.dims);
}

bool stored(const DenseMatrix& a, Index i, Index j) { return a(i, j) != a.zero; }

}  // namespace

DenseMatrix::DenseMatrix(Dimensions d, Scalar z) : dims(d), zero(z) {
    check_cap(d);
    values.assign(d.nrows * d.ncols, zero);
}

DenseMatrix densify(const SparseMatrix& a) {
    DenseMatrix d(a.dims(), a.zero());
    for (Index i = 0; i < a.nrows(); ++i) {
        const auto row = a.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) d(i, row.cols[k]) = row.vals[k];
    }
    return d;
}

SparseMatrix sparsify(const DenseMatrix& d) {
    CsrParts parts;
    parts.row_ptr.push_back(0);
    for (Index i = 0; i < d.dims.nrows; ++i) {
        for (Index j = 0; j < d.dims.ncols; ++j) {
            if (stored(d, i, j)) {
                parts.col_idx.push_back(j);
                parts.vals.push_back(d(i, j));
            }
        }
        parts.row_ptr.push_back(parts.vals.size());
    }
    return SparseMatrix::from_csr(d.dims, d.zero, std::move(parts));
}

DenseMatrix dense_mxm(const Semiring& sr, const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dims.ncols != b.dims.nrows) {
        throw DimensionMismatch("dense_mxm", {a.dims.ncols, b.dims.ncols}, b.dims);
    }
    DenseMatrix c({a.dims.nrows, b.dims.ncols}, sr.zero());
    for (Index i = 0; i < a.dims.nrows; ++i) {
        for (Index j = 0; j < b.dims.ncols; ++j) {
            Scalar sum = sr.zero();
            for (Index k = 0; k < a.dims.ncols; ++k) sum = sr.add()(sum, sr.mul()(a(i, k), b(k, j)));
            c(i, j) = sum;
        }
    }
    return c;
}

DenseMatrix dense_ewise(const BinaryOp& op, const DenseMatrix& a, const DenseMatrix& b) {
    check_same("dense_ewise", a, b);
    DenseMatrix c(a.dims, a.zero);
    for (std::size_t k = 0; k < a.values.size(); ++k) c.values[k] = op(a.values[k], b.values[k]);
    return c;
}

DenseMatrix dense_ewise_add(const Semiring& sr, const DenseMatrix& a, const DenseMatrix& b) {
    return dense_ewise(sr.add(), a, b);
}

DenseMatrix dense_ewise_mult(const Semiring& sr, const DenseMatrix& a, const DenseMatrix& b) {
    return dense_ewise(sr.mul(), a, b);
}

DenseMatrix dense_transpose(const DenseMatrix& a) {
    DenseMatrix c({a.dims.ncols, a.dims.nrows}, a.zero);
    for (Index i = 0; i < a.dims.nrows; ++i) {
        for (Index j = 0; j < a.dims.ncols; ++j) c(j, i) = a(i, j);
    }
    return c;
}

DenseMatrix dense_extract(const DenseMatrix& a, const IndexVector& rows, const IndexVector& cols) {
    DenseMatrix c({rows.size(), cols.size()}, a.zero);
    for (Index p = 0; p < rows.size(); ++p) {
        for (Index q = 0; q < cols.size(); ++q) c(p, q) = a(rows.at(p), cols.at(q));
    }
    return c;
}

DenseMatrix dense_assign(const DenseMatrix& c, const IndexVector& rows, const IndexVector& cols,
                         const DenseMatrix& a) {
    DenseMatrix out = c;
    for (Index p = 0; p < rows.size(); ++p) {
        for (Index q = 0; q < cols.size(); ++q) out(rows.at(p), cols.at(q)) = a(p, q);
    }
    return out;
}

std::vector<std::optional<std::size_t>> dense_bfs(const DenseMatrix& a, const IndexVector& sources,
                                                  std::optional<std::size_t> max_hops) {
    const Index n = a.dims.nrows;
    std::vector<std::optional<std::size_t>> level(n);
    std::deque<Index> queue;
    for (Index s : sources) {
        if (!level.at(s)) {
            level[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const Index u = queue.front();
        queue.pop_front();
        if (max_hops && *level[u] >= *max_hops) continue;
        for (Index v = 0; v < n; ++v) {
            if (stored(a, u, v) && !level[v]) {
                level[v] = *level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return level;
}

std::vector<double> dense_sssp(const DenseMatrix& w, Index source) {
    const Index n = w.dims.nrows;
    std::vector<double> dist(n, kInf);
    std::vector<bool> done(n, false);
    using Item = std::pair<double, Index>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist.at(source) = 0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[u]) continue;
        done[u] = true;
        for (Index v = 0; v < n; ++v) {
            if (!stored(w, u, v)) continue;
            const double nd = d + std::get<double>(w(u, v));
            if (nd < dist[v]) {
                dist[v] = nd;
                heap.emplace(nd, v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<double>> dense_hop_limited_distances(const DenseMatrix& w, std::size_t hops) {
    const Index n = w.dims.nrows;
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (Index i = 0; i < n; ++i) d[i][i] = 0;
    for (std::size_t h = 0; h < hops; ++h) {
        auto next = d;
        for (Index i = 0; i < n; ++i) {
            for (Index k = 0; k < n; ++k) {
                if (d[i][k] == kInf) continue;
                for (Index j = 0; j < n; ++j) {
                    if (!stored(w, k, j)) continue;
                    next[i][j] = std::min(next[i][j], d[i][k] + std::get<double>(w(k, j)));
                }
            }
        }
        d = std::move(next);
    }
    return d;
}

}  // namespace gbcore::oracle
