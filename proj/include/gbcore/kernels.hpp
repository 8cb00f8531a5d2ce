#pragma once

#include "gbcore/matrix.hpp"
#include "gbcore/semiring.hpp"

namespace gbcore {

// All kernels check dimensions and domains before touching any entry, and
// never store a result equal to the 0-element.

/// C(i,j) = (+)_k A(i,k) (x) B(k,j). A is m x l, B is l x n. Row-wise
/// (Gustavson) with contributions folded in ascending k.
SparseMatrix mxm(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b);

/// A (m x n) times column vector v (n x 1).
SparseMatrix mxv(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& v);

/// Row vector u (1 x m) times A (m x n). Since rows of an adjacency matrix
/// are out-vertices, this advances a frontier along out-edges; it equals
/// transpose(mxv(sr, transpose(A), transpose(u))).
SparseMatrix vxm(const Semiring& sr, const SparseMatrix& u, const SparseMatrix& a);

/// Union of structures; `op` where both are stored, the lone value otherwise.
SparseMatrix ewise_add(const BinaryOp& op, const Scalar& zero, const SparseMatrix& a,
                       const SparseMatrix& b);
SparseMatrix ewise_add(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b);

/// Intersection of structures with `op` applied.
SparseMatrix ewise_mult(const BinaryOp& op, const Scalar& zero, const SparseMatrix& a,
                        const SparseMatrix& b);
SparseMatrix ewise_mult(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b);

/// C(p,q) = A(rows[p], cols[q]). Repeats replicate, order permutes.
SparseMatrix extract(const SparseMatrix& a, const IndexVector& rows, const IndexVector& cols);

/// |idx| x n_source matrix with the semiring's 1 at (p, idx[p]).
SparseMatrix selection_matrix(const Semiring& sr, const IndexVector& idx, Index n_source);

/// Copy of C with C(rows[p], cols[q]) = A(p,q) over the whole rectangle;
/// positions where A is implicit are cleared. Repeated indices are rejected.
SparseMatrix assign(const SparseMatrix& c, const IndexVector& rows, const IndexVector& cols,
                    const SparseMatrix& a);

namespace detail {

// Unchecked kernels on raw arrays: the benchmark's direct path.
CsrParts mxm_raw(const Semiring& sr, const CsrView& a, const CsrView& b);
CsrParts mxv_raw(const Semiring& sr, const CsrView& a, const CsrView& v);
CsrParts vxm_raw(const Semiring& sr, const CsrView& u, const CsrView& a);
CsrParts ewise_add_raw(const BinaryOp& op, const Scalar& zero, const CsrView& a, const CsrView& b);
CsrParts ewise_mult_raw(const BinaryOp& op, const Scalar& zero, const CsrView& a,
                        const CsrView& b);
CsrParts extract_raw(const CsrView& a, const IndexVector& rows, const IndexVector& cols);
CsrParts assign_raw(const CsrView& c, const IndexVector& rows, const IndexVector& cols,
                    const CsrView& a);

}  // namespace detail

}  // namespace gbcore
