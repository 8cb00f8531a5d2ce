#pragma once

// Dense brute-force reference implementations. Test and benchmark use only;
// nothing here shares code with the sparse kernels.

#include <optional>
#include <vector>

#include "gbcore/matrix.hpp"
#include "gbcore/semiring.hpp"

namespace gbcore::oracle {

inline constexpr Index kMaxExtent = 128;

/// Full row-major array, explicit 0-elements included.
struct DenseMatrix {
    Dimensions dims;
    Scalar zero;
    std::vector<Scalar> values;

    DenseMatrix(Dimensions d, Scalar z);

    Scalar& operator()(Index i, Index j) { return values[i * dims.ncols + j]; }
    const Scalar& operator()(Index i, Index j) const { return values[i * dims.ncols + j]; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

DenseMatrix densify(const SparseMatrix& a);
SparseMatrix sparsify(const DenseMatrix& d);

DenseMatrix dense_mxm(const Semiring& sr, const DenseMatrix& a, const DenseMatrix& b);
/// (+) at every position.
DenseMatrix dense_ewise_add(const Semiring& sr, const DenseMatrix& a, const DenseMatrix& b);
/// (x) at every position.
DenseMatrix dense_ewise_mult(const Semiring& sr, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dense_ewise(const BinaryOp& op, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dense_transpose(const DenseMatrix& a);
DenseMatrix dense_extract(const DenseMatrix& a, const IndexVector& rows, const IndexVector& cols);
DenseMatrix dense_assign(const DenseMatrix& c, const IndexVector& rows, const IndexVector& cols,
                         const DenseMatrix& a);

/// Queue-based BFS over the structure of `a`.
std::vector<std::optional<std::size_t>> dense_bfs(const DenseMatrix& a, const IndexVector& sources,
                                                  std::optional<std::size_t> max_hops = {});

/// Dijkstra with a binary heap over nonnegative weights; implicit entries are
/// absent edges. Unreached vertices get +inf.
std::vector<double> dense_sssp(const DenseMatrix& w, Index source);

/// All-pairs distances over paths of at most `hops` edges (0 hops: 0 on the
/// diagonal), by repeated relaxation.
std::vector<std::vector<double>> dense_hop_limited_distances(const DenseMatrix& w,
                                                             std::size_t hops);

}  // namespace gbcore::oracle
