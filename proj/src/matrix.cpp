#include "gbcore/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "gbcore/error.hpp"

namespace gbcore {

void TripleList::push_back(Index r, Index c, Scalar v) {
    rows.push_back(r);
    cols.push_back(c);
    vals.push_back(std::move(v));
}

void check_dimensions(Dimensions dims) {
    if (dims.nrows == 0 || dims.ncols == 0) {
        throw ValueError("matrix dimensions must be positive, got " + to_string(dims));
    }
}

SparseMatrix::SparseMatrix(Dimensions dims, Scalar zero, CsrParts&& parts)
    : dims_(dims),
      zero_(std::move(zero)),
      row_ptr_(std::move(parts.row_ptr)),
      col_idx_(std::move(parts.col_idx)),
      vals_(std::move(parts.vals)) {}

SparseMatrix detail::adopt(Dimensions dims, Scalar zero, CsrParts&& parts) {
    return SparseMatrix(dims, std::move(zero), std::move(parts));
}

SparseMatrix SparseMatrix::empty(Dimensions dims, Scalar zero) {
    check_dimensions(dims);
    CsrParts parts;
    parts.row_ptr.assign(dims.nrows + 1, 0);
    return SparseMatrix(dims, std::move(zero), std::move(parts));
}

SparseMatrix SparseMatrix::from_csr(Dimensions dims, Scalar zero, CsrParts parts) {
    check_dimensions(dims);
    SparseMatrix m(dims, std::move(zero), std::move(parts));
    m.audit();
    return m;
}

void SparseMatrix::audit() const {
    if (dims_.nrows == 0 || dims_.ncols == 0) throw InvariantViolation("matrix has an empty extent");
    if (row_ptr_.size() != dims_.nrows + 1) throw InvariantViolation("row pointer length != nrows + 1");
    if (row_ptr_.front() != 0 || row_ptr_.back() != vals_.size() || col_idx_.size() != vals_.size()) {
        throw InvariantViolation("row pointers disagree with the stored entry count");
    }
    for (Index i = 0; i < dims_.nrows; ++i) {
        if (row_ptr_[i] > row_ptr_[i + 1]) throw InvariantViolation("row pointers decrease");
        for (Index p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
            if (col_idx_[p] >= dims_.ncols) {
                throw InvariantViolation("column index " + std::to_string(col_idx_[p]) +
                                         " out of bounds in row " + std::to_string(i));
            }
            if (p > row_ptr_[i] && col_idx_[p - 1] >= col_idx_[p]) {
                throw InvariantViolation("column indices not strictly increasing in row " + std::to_string(i));
            }
            if (domain_of(vals_[p]) != domain()) {
                throw InvariantViolation("stored value of the wrong domain in row " + std::to_string(i));
            }
            if (vals_[p] == zero_) {
                throw InvariantViolation("stored 0-element at (" + std::to_string(i) + ", " +
                                         std::to_string(col_idx_[p]) + ")");
            }
        }
    }
}

SparseMatrix::Row SparseMatrix::row(Index i) const {
    if (i >= dims_.nrows) throw IndexOutOfBounds("row", i, dims_.nrows);
    const Index b = row_ptr_[i];
    const Index e = row_ptr_[i + 1];
    return {std::span<const Index>(col_idx_).subspan(b, e - b),
            std::span<const Scalar>(vals_).subspan(b, e - b)};
}

std::optional<Scalar> SparseMatrix::find(Index i, Index j) const {
    if (j >= dims_.ncols) throw IndexOutOfBounds("column", j, dims_.ncols);
    const Row r = row(i);
    auto it = std::lower_bound(r.cols.begin(), r.cols.end(), j);
    if (it == r.cols.end() || *it != j) return std::nullopt;
    return r.vals[static_cast<std::size_t>(it - r.cols.begin())];
}

Scalar SparseMatrix::at(Index i, Index j) const { return find(i, j).value_or(zero_); }

SparseMatrix build(Dimensions dims, const TripleList& t, const std::optional<BinaryOp>& dup,
                   const Scalar& zero) {
    check_dimensions(dims);
    const std::size_t n = t.vals.size();
    if (t.rows.size() != n || t.cols.size() != n) {
        throw ValueError("triple vectors differ in length: rows " + std::to_string(t.rows.size()) +
                         ", cols " + std::to_string(t.cols.size()) + ", vals " + std::to_string(n));
    }
    const Domain domain = domain_of(zero);
    for (std::size_t k = 0; k < n; ++k) {
        if (t.rows[k] >= dims.nrows) throw IndexOutOfBounds("build row", t.rows[k], dims.nrows);
        if (t.cols[k] >= dims.ncols) throw IndexOutOfBounds("build column", t.cols[k], dims.ncols);
        if (domain_of(t.vals[k]) != domain) {
            throw DomainMismatch("build: value " + std::to_string(k) + " has domain " +
                                 std::string(to_string(domain_of(t.vals[k]))) + ", matrix holds " +
                                 std::string(to_string(domain)));
        }
    }

    // Stable bucket by row, then stable sort by column inside each row, so
    // that equal keys stay in input order for folding.
    std::vector<Index> counts(dims.nrows + 1, 0);
    for (Index r : t.rows) ++counts[r + 1];
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    std::vector<std::size_t> order(n);
    {
        std::vector<Index> next(counts.begin(), counts.end() - 1);
        for (std::size_t k = 0; k < n; ++k) order[next[t.rows[k]]++] = k;
    }

    CsrParts out;
    out.row_ptr.assign(dims.nrows + 1, 0);
    out.col_idx.reserve(n);
    out.vals.reserve(n);
    for (Index r = 0; r < dims.nrows; ++r) {
        auto first = order.begin() + static_cast<std::ptrdiff_t>(counts[r]);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(counts[r + 1]);
        std::stable_sort(first, last, [&](std::size_t x, std::size_t y) { return t.cols[x] < t.cols[y]; });
        for (auto it = first; it != last;) {
            const Index c = t.cols[*it];
            Scalar acc = t.vals[*it];
            for (++it; it != last && t.cols[*it] == c; ++it) {
                if (!dup) throw DuplicateEntry(r, c);
                acc = (*dup)(acc, t.vals[*it]);
            }
            if (acc != zero) {
                out.col_idx.push_back(c);
                out.vals.push_back(std::move(acc));
            }
        }
        out.row_ptr[r + 1] = out.vals.size();
    }
    return detail::adopt(dims, zero, std::move(out));
}

SparseMatrix build(const Semiring& sr, Dimensions dims, const TripleList& t) {
    return build(dims, t, sr.add(), sr.zero());
}

TripleList extract_tuples(const SparseMatrix& a) {
    TripleList t;
    t.rows.reserve(a.nnz());
    t.cols.assign(a.col_idx().begin(), a.col_idx().end());
    t.vals.assign(a.values().begin(), a.values().end());
    for (Index i = 0; i < a.nrows(); ++i) {
        t.rows.insert(t.rows.end(), a.row_ptr()[i + 1] - a.row_ptr()[i], i);
    }
    return t;
}

CsrParts detail::transpose_raw(const CsrView& a) {
    const Index m = a.dims.nrows;
    const Index n = a.dims.ncols;
    CsrParts out;
    out.row_ptr.assign(n + 1, 0);
    for (Index c : a.col_idx) ++out.row_ptr[c + 1];
    std::partial_sum(out.row_ptr.begin(), out.row_ptr.end(), out.row_ptr.begin());
    out.col_idx.resize(a.vals.size());
    out.vals.resize(a.vals.size());
    std::vector<Index> next(out.row_ptr.begin(), out.row_ptr.end() - 1);
    for (Index i = 0; i < m; ++i) {
        for (Index p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
            const Index q = next[a.col_idx[p]]++;
            out.col_idx[q] = i;
            out.vals[q] = a.vals[p];
        }
    }
    return out;
}

SparseMatrix transpose(const SparseMatrix& a) {
    return detail::adopt(transposed(a.dims()), a.zero(), detail::transpose_raw(a.view()));
}

SparseMatrix pattern(const SparseMatrix& a, const Scalar& value, const Scalar& zero) {
    if (domain_of(value) != domain_of(zero)) throw DomainMismatch("pattern: value and 0-element differ in domain");
    if (value == zero) throw ValueError("pattern: value equals the 0-element");
    CsrParts out;
    out.row_ptr.assign(a.row_ptr().begin(), a.row_ptr().end());
    out.col_idx.assign(a.col_idx().begin(), a.col_idx().end());
    out.vals.assign(a.nnz(), value);
    return detail::adopt(a.dims(), zero, std::move(out));
}

SparseMatrix identity(const Semiring& sr, Index n) {
    check_dimensions({n, n});
    CsrParts out;
    out.row_ptr.resize(n + 1);
    std::iota(out.row_ptr.begin(), out.row_ptr.end(), Index{0});
    out.col_idx.resize(n);
    std::iota(out.col_idx.begin(), out.col_idx.end(), Index{0});
    out.vals.assign(n, sr.one());
    return detail::adopt({n, n}, sr.zero(), std::move(out));
}

}  // namespace gbcore
