#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gbcore/scalar.hpp"
#include "gbcore/semiring.hpp"
#include "gbcore/types.hpp"

namespace gbcore {

/// Parallel (rows, cols, vals) vectors of equal length.
struct TripleList {
    std::vector<Index> rows;
    std::vector<Index> cols;
    std::vector<Scalar> vals;

    std::size_t size() const noexcept { return vals.size(); }
    bool empty() const noexcept { return vals.empty(); }
    void push_back(Index r, Index c, Scalar v);

    friend bool operator==(const TripleList&, const TripleList&) = default;
};

/// Raw compressed-row arrays. Kernels produce these; SparseMatrix owns them.
struct CsrParts {
    std::vector<Index> row_ptr;
    std::vector<Index> col_idx;
    std::vector<Scalar> vals;
};

/// Non-owning view over compressed-row arrays.
struct CsrView {
    Dimensions dims;
    std::span<const Index> row_ptr;
    std::span<const Index> col_idx;
    std::span<const Scalar> vals;
};

class SparseMatrix;

namespace detail {
/// Wraps kernel output without re-validating it.
SparseMatrix adopt(Dimensions dims, Scalar zero, CsrParts&& parts);
}  // namespace detail

/// Immutable sparse matrix in canonical compressed-row form.
///
/// Invariants: column indices strictly increase within a row, so there are
/// no duplicate keys, and no stored value equals the 0-element. The 0-element
/// also fixes the scalar domain of the stored values.
class SparseMatrix {
public:
    struct Row {
        std::span<const Index> cols;
        std::span<const Scalar> vals;

        std::size_t size() const noexcept { return cols.size(); }
    };

    /// All-implicit-zero matrix.
    static SparseMatrix empty(Dimensions dims, Scalar zero);

    /// Validates every invariant; throws InvariantViolation, IndexOutOfBounds
    /// or DomainMismatch.
    static SparseMatrix from_csr(Dimensions dims, Scalar zero, CsrParts parts);

    Dimensions dims() const noexcept { return dims_; }
    Index nrows() const noexcept { return dims_.nrows; }
    Index ncols() const noexcept { return dims_.ncols; }
    std::size_t nnz() const noexcept { return vals_.size(); }
    const Scalar& zero() const noexcept { return zero_; }
    Domain domain() const noexcept { return domain_of(zero_); }

    Row row(Index i) const;
    /// Stored value at (i, j), or nullopt when the entry is implicit.
    std::optional<Scalar> find(Index i, Index j) const;
    /// Value at (i, j), the 0-element when implicit.
    Scalar at(Index i, Index j) const;

    std::span<const Index> row_ptr() const noexcept { return row_ptr_; }
    std::span<const Index> col_idx() const noexcept { return col_idx_; }
    std::span<const Scalar> values() const noexcept { return vals_; }
    CsrView view() const noexcept { return {dims_, row_ptr_, col_idx_, vals_}; }

    /// Re-checks the canonical-form invariants. Throws InvariantViolation.
    void audit() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    SparseMatrix(Dimensions dims, Scalar zero, CsrParts&& parts);
    friend SparseMatrix detail::adopt(Dimensions, Scalar, CsrParts&&);

    Dimensions dims_;
    Scalar zero_;
    std::vector<Index> row_ptr_;
    std::vector<Index> col_idx_;
    std::vector<Scalar> vals_;
};

/// Throws ValueError unless both extents are positive.
void check_dimensions(Dimensions dims);

/// Builds a matrix from triples. Entries sharing a key are folded left to
/// right in input order with `dup`; with no `dup` a repeated key throws
/// DuplicateEntry. Values (folded or not) equal to `zero` are dropped.
SparseMatrix build(Dimensions dims, const TripleList& t, const std::optional<BinaryOp>& dup,
                   const Scalar& zero);

/// build with the semiring's (+) as the duplicate rule and its 0-element.
SparseMatrix build(const Semiring& sr, Dimensions dims, const TripleList& t);

/// Stored entries in row-major order.
TripleList extract_tuples(const SparseMatrix& a);

SparseMatrix transpose(const SparseMatrix& a);

/// Same structure, every stored value replaced by `value`.
SparseMatrix pattern(const SparseMatrix& a, const Scalar& value, const Scalar& zero);

/// n x n diagonal of the semiring's 1.
SparseMatrix identity(const Semiring& sr, Index n);

namespace detail {
CsrParts transpose_raw(const CsrView& a);
}  // namespace detail

}  // namespace gbcore
