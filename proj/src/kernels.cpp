#include "gbcore/kernels.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "gbcore/error.hpp"

namespace gbcore {
namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

void require_semiring_domain(const char* op, const Semiring& sr, const SparseMatrix& m) {
    if (m.domain() != sr.domain() || m.zero() != sr.zero()) {
        throw DomainMismatch(std::string(op) + ": matrix over " + std::string(to_string(m.domain())) +
                             " with 0-element " + format_scalar(m.zero()) + " does not match semiring '" +
                             sr.name() + "' (0-element " + format_scalar(sr.zero()) + ")");
    }
}

void require_zero(const char* op, const Scalar& zero, const SparseMatrix& m) {
    if (m.zero() != zero) {
        throw DomainMismatch(std::string(op) + ": matrix 0-element " + format_scalar(m.zero()) +
                             " differs from " + format_scalar(zero));
    }
}

void require_same_dims(const char* op, const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dims() != b.dims()) throw DimensionMismatch(op, a.dims(), b.dims());
}

void check_indices(const char* what, const IndexVector& idx, Index bound) {
    for (Index k : idx) {
        if (k >= bound) throw IndexOutOfBounds(what, k, bound);
    }
}

// Dense per-row accumulator; `mark[j] == stamp` means acc[j] is live.
struct Accumulator {
    std::vector<Scalar> acc;
    std::vector<Index> mark;
    std::vector<Index> touched;

    explicit Accumulator(Index n) : acc(n), mark(n, kNone) {}

    void add(const BinaryOp& plus, Index stamp, Index j, Scalar&& v) {
        if (mark[j] != stamp) {
            mark[j] = stamp;
            acc[j] = std::move(v);
            touched.push_back(j);
        } else {
            acc[j] = plus(acc[j], v);
        }
    }

    void flush(const Scalar& zero, CsrParts& out) {
        std::sort(touched.begin(), touched.end());
        for (Index j : touched) {
            if (acc[j] != zero) {
                out.col_idx.push_back(j);
                out.vals.push_back(std::move(acc[j]));
            }
        }
        touched.clear();
    }
};

}  // namespace

namespace detail {

CsrParts mxm_raw(const Semiring& sr, const CsrView& a, const CsrView& b) {
    const Index m = a.dims.nrows;
    const BinaryOp& plus = sr.add();
    const BinaryOp& times = sr.mul();
    CsrParts out;
    out.row_ptr.assign(m + 1, 0);
    Accumulator work(b.dims.ncols);
    for (Index i = 0; i < m; ++i) {
        for (Index p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
            const Index k = a.col_idx[p];
            const Scalar& aik = a.vals[p];
            for (Index q = b.row_ptr[k]; q < b.row_ptr[k + 1]; ++q) {
                work.add(plus, i, b.col_idx[q], times(aik, b.vals[q]));
            }
        }
        work.flush(sr.zero(), out);
        out.row_ptr[i + 1] = out.vals.size();
    }
    return out;
}

CsrParts mxv_raw(const Semiring& sr, const CsrView& a, const CsrView& v) {
    const Index m = a.dims.nrows;
    const BinaryOp& plus = sr.add();
    const BinaryOp& times = sr.mul();
    std::vector<const Scalar*> dense(v.dims.nrows, nullptr);
    for (Index k = 0; k < v.dims.nrows; ++k) {
        if (v.row_ptr[k + 1] > v.row_ptr[k]) dense[k] = &v.vals[v.row_ptr[k]];
    }
    CsrParts out;
    out.row_ptr.assign(m + 1, 0);
    for (Index i = 0; i < m; ++i) {
        std::optional<Scalar> acc;
        for (Index p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
            const Scalar* vk = dense[a.col_idx[p]];
            if (vk == nullptr) continue;
            Scalar prod = times(a.vals[p], *vk);
            acc = acc ? plus(*acc, prod) : std::move(prod);
        }
        if (acc && *acc != sr.zero()) {
            out.col_idx.push_back(0);
            out.vals.push_back(std::move(*acc));
        }
        out.row_ptr[i + 1] = out.vals.size();
    }
    return out;
}

CsrParts vxm_raw(const Semiring& sr, const CsrView& u, const CsrView& a) {
    const BinaryOp& plus = sr.add();
    const BinaryOp& times = sr.mul();
    Accumulator work(a.dims.ncols);
    for (Index p = u.row_ptr[0]; p < u.row_ptr[1]; ++p) {
        const Index k = u.col_idx[p];
        const Scalar& uk = u.vals[p];
        for (Index q = a.row_ptr[k]; q < a.row_ptr[k + 1]; ++q) {
            work.add(plus, 0, a.col_idx[q], times(uk, a.vals[q]));
        }
    }
    CsrParts out;
    out.row_ptr.assign(2, 0);
    work.flush(sr.zero(), out);
    out.row_ptr[1] = out.vals.size();
    return out;
}

CsrParts ewise_add_raw(const BinaryOp& op, const Scalar& zero, const CsrView& a, const CsrView& b) {
    const Index m = a.dims.nrows;
    CsrParts out;
    out.row_ptr.assign(m + 1, 0);
    out.col_idx.reserve(a.vals.size() + b.vals.size());
    out.vals.reserve(a.vals.size() + b.vals.size());
    auto emit = [&](Index c, Scalar v) {
        if (v != zero) {
            out.col_idx.push_back(c);
            out.vals.push_back(std::move(v));
        }
    };
    for (Index i = 0; i < m; ++i) {
        Index p = a.row_ptr[i], pe = a.row_ptr[i + 1];
        Index q = b.row_ptr[i], qe = b.row_ptr[i + 1];
        while (p < pe || q < qe) {
            if (q == qe || (p < pe && a.col_idx[p] < b.col_idx[q])) {
                emit(a.col_idx[p], a.vals[p]);
                ++p;
            } else if (p == pe || b.col_idx[q] < a.col_idx[p]) {
                emit(b.col_idx[q], b.vals[q]);
                ++q;
            } else {
                emit(a.col_idx[p], op(a.vals[p], b.vals[q]));
                ++p;
                ++q;
            }
        }
        out.row_ptr[i + 1] = out.vals.size();
    }
    return out;
}

CsrParts ewise_mult_raw(const BinaryOp& op, const Scalar& zero, const CsrView& a, const CsrView& b) {
    const Index m = a.dims.nrows;
    CsrParts out;
    out.row_ptr.assign(m + 1, 0);
    for (Index i = 0; i < m; ++i) {
        Index p = a.row_ptr[i], pe = a.row_ptr[i + 1];
        Index q = b.row_ptr[i], qe = b.row_ptr[i + 1];
        while (p < pe && q < qe) {
            if (a.col_idx[p] < b.col_idx[q]) {
                ++p;
            } else if (b.col_idx[q] < a.col_idx[p]) {
                ++q;
            } else {
                Scalar v = op(a.vals[p], b.vals[q]);
                if (v != zero) {
                    out.col_idx.push_back(a.col_idx[p]);
                    out.vals.push_back(std::move(v));
                }
                ++p;
                ++q;
            }
        }
        out.row_ptr[i + 1] = out.vals.size();
    }
    return out;
}

CsrParts extract_raw(const CsrView& a, const IndexVector& rows, const IndexVector& cols) {
    // For each source column, the output positions that select it, ascending.
    const Index n = a.dims.ncols;
    std::vector<Index> start(n + 1, 0);
    for (Index c : cols) ++start[c + 1];
    for (Index c = 0; c < n; ++c) start[c + 1] += start[c];
    std::vector<Index> targets(cols.size());
    {
        std::vector<Index> next(start.begin(), start.end() - 1);
        for (Index q = 0; q < cols.size(); ++q) targets[next[cols[q]]++] = q;
    }

    CsrParts out;
    out.row_ptr.assign(rows.size() + 1, 0);
    std::vector<std::pair<Index, Index>> picked;  // (output column, source position)
    for (Index p = 0; p < rows.size(); ++p) {
        const Index r = rows[p];
        picked.clear();
        for (Index s = a.row_ptr[r]; s < a.row_ptr[r + 1]; ++s) {
            const Index c = a.col_idx[s];
            for (Index t = start[c]; t < start[c + 1]; ++t) picked.emplace_back(targets[t], s);
        }
        std::sort(picked.begin(), picked.end());
        for (auto [q, s] : picked) {
            out.col_idx.push_back(q);
            out.vals.push_back(a.vals[s]);
        }
        out.row_ptr[p + 1] = out.vals.size();
    }
    return out;
}

CsrParts assign_raw(const CsrView& c, const IndexVector& rows, const IndexVector& cols,
                    const CsrView& a) {
    std::vector<Index> row_pos(c.dims.nrows, kNone);
    for (Index p = 0; p < rows.size(); ++p) row_pos[rows[p]] = p;
    std::vector<bool> col_selected(c.dims.ncols, false);
    for (Index j : cols) col_selected[j] = true;

    CsrParts out;
    out.row_ptr.assign(c.dims.nrows + 1, 0);
    std::vector<std::pair<Index, const Scalar*>> merged;
    for (Index r = 0; r < c.dims.nrows; ++r) {
        const Index p = row_pos[r];
        if (p == kNone) {
            for (Index s = c.row_ptr[r]; s < c.row_ptr[r + 1]; ++s) {
                out.col_idx.push_back(c.col_idx[s]);
                out.vals.push_back(c.vals[s]);
            }
        } else {
            merged.clear();
            for (Index s = c.row_ptr[r]; s < c.row_ptr[r + 1]; ++s) {
                if (!col_selected[c.col_idx[s]]) merged.emplace_back(c.col_idx[s], &c.vals[s]);
            }
            for (Index s = a.row_ptr[p]; s < a.row_ptr[p + 1]; ++s) {
                merged.emplace_back(cols[a.col_idx[s]], &a.vals[s]);
            }
            std::sort(merged.begin(), merged.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto [col, v] : merged) {
                out.col_idx.push_back(col);
                out.vals.push_back(*v);
            }
        }
        out.row_ptr[r + 1] = out.vals.size();
    }
    return out;
}

}  // namespace detail

SparseMatrix mxm(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b) {
    if (a.ncols() != b.nrows()) {
        throw DimensionMismatch("mxm: inner dimension", {a.ncols(), b.ncols()}, b.dims());
    }
    require_semiring_domain("mxm", sr, a);
    require_semiring_domain("mxm", sr, b);
    return detail::adopt({a.nrows(), b.ncols()}, sr.zero(), detail::mxm_raw(sr, a.view(), b.view()));
}

SparseMatrix mxv(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& v) {
    if (v.dims() != Dimensions{a.ncols(), 1}) {
        throw DimensionMismatch("mxv: vector shape", {a.ncols(), 1}, v.dims());
    }
    require_semiring_domain("mxv", sr, a);
    require_semiring_domain("mxv", sr, v);
    return detail::adopt({a.nrows(), 1}, sr.zero(), detail::mxv_raw(sr, a.view(), v.view()));
}

SparseMatrix vxm(const Semiring& sr, const SparseMatrix& u, const SparseMatrix& a) {
    if (u.dims() != Dimensions{1, a.nrows()}) {
        throw DimensionMismatch("vxm: vector shape", {1, a.nrows()}, u.dims());
    }
    require_semiring_domain("vxm", sr, u);
    require_semiring_domain("vxm", sr, a);
    return detail::adopt({1, a.ncols()}, sr.zero(), detail::vxm_raw(sr, u.view(), a.view()));
}

SparseMatrix ewise_add(const BinaryOp& op, const Scalar& zero, const SparseMatrix& a,
                       const SparseMatrix& b) {
    require_same_dims("ewise_add", a, b);
    require_zero("ewise_add", zero, a);
    require_zero("ewise_add", zero, b);
    return detail::adopt(a.dims(), zero, detail::ewise_add_raw(op, zero, a.view(), b.view()));
}

SparseMatrix ewise_add(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b) {
    return ewise_add(sr.add(), sr.zero(), a, b);
}

SparseMatrix ewise_mult(const BinaryOp& op, const Scalar& zero, const SparseMatrix& a,
                        const SparseMatrix& b) {
    require_same_dims("ewise_mult", a, b);
    require_zero("ewise_mult", zero, a);
    require_zero("ewise_mult", zero, b);
    return detail::adopt(a.dims(), zero, detail::ewise_mult_raw(op, zero, a.view(), b.view()));
}

SparseMatrix ewise_mult(const Semiring& sr, const SparseMatrix& a, const SparseMatrix& b) {
    return ewise_mult(sr.mul(), sr.zero(), a, b);
}

SparseMatrix extract(const SparseMatrix& a, const IndexVector& rows, const IndexVector& cols) {
    const Dimensions dims{rows.size(), cols.size()};
    check_dimensions(dims);
    check_indices("extract row", rows, a.nrows());
    check_indices("extract column", cols, a.ncols());
    return detail::adopt(dims, a.zero(), detail::extract_raw(a.view(), rows, cols));
}

SparseMatrix selection_matrix(const Semiring& sr, const IndexVector& idx, Index n_source) {
    const Dimensions dims{idx.size(), n_source};
    check_dimensions(dims);
    check_indices("selection index", idx, n_source);
    CsrParts out;
    out.row_ptr.resize(idx.size() + 1);
    for (Index p = 0; p <= idx.size(); ++p) out.row_ptr[p] = p;
    out.col_idx = idx;
    out.vals.assign(idx.size(), sr.one());
    return detail::adopt(dims, sr.zero(), std::move(out));
}

namespace {

void check_unique(const char* what, const IndexVector& idx, Index bound) {
    std::vector<bool> seen(bound, false);
    for (Index k : idx) {
        if (seen[k]) throw ValueError(std::string(what) + " index " + std::to_string(k) + " repeated");
        seen[k] = true;
    }
}

}  // namespace

SparseMatrix assign(const SparseMatrix& c, const IndexVector& rows, const IndexVector& cols,
                    const SparseMatrix& a) {
    if (a.dims() != Dimensions{rows.size(), cols.size()}) {
        throw DimensionMismatch("assign: source shape", {rows.size(), cols.size()}, a.dims());
    }
    require_zero("assign", c.zero(), a);
    check_indices("assign row", rows, c.nrows());
    check_indices("assign column", cols, c.ncols());
    check_unique("assign row", rows, c.nrows());
    check_unique("assign column", cols, c.ncols());
    return detail::adopt(c.dims(), c.zero(), detail::assign_raw(c.view(), rows, cols, a.view()));
}

}  // namespace gbcore
