#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbcore/matrix.hpp"
#include "gbcore/semiring.hpp"

namespace gbcore {

/// One logical edge. Several out- or in-vertices make it a hyper-edge.
struct EdgeRecord {
    std::optional<Index> edge_id;
    std::vector<Index> out_vertices;
    std::vector<Index> in_vertices;
    std::optional<Scalar> weight;
    std::size_t line = 0;

    bool is_hyper() const noexcept { return out_vertices.size() + in_vertices.size() > 2; }
};

struct EdgeListOptions {
    /// Vertex labels on disk start at 1.
    bool one_based = false;
    /// Weights parse into this semiring's domain and must be members of it.
    Semiring semiring = semiring_by_name("arith-real");
};

/// Edge list grammar, one edge per line, '#' comments and blank lines ignored:
///
///     out<TAB>in[<TAB>weight]             simple edge
///     o1,o2<TAB>i1,i2[<TAB>weight]        hyper-edge, comma-joined groups
///     e12: out=4 in=3,5 [w=0.5]           labelled form
///
/// Errors are ParseError with "path:line".
std::vector<EdgeRecord> read_edge_list(const std::string& path, const EdgeListOptions& opts = {});
std::vector<EdgeRecord> read_edge_list(std::istream& in, const std::string& source_name,
                                       const EdgeListOptions& opts = {});

/// Which incidence matrix carries the edge weight. The other holds the 1.
enum class IncidenceWeights { ones, weights_on_out };

/// Row k of e_out / e_in marks the out- / in-vertices of edge k.
/// Throws ValueError for an empty edge list, IndexOutOfBounds for vertices
/// outside the given counts.
std::pair<SparseMatrix, SparseMatrix> incidence_from_edges(
    const Semiring& sr, const std::vector<EdgeRecord>& edges, Index n_out_vertices,
    Index n_in_vertices, IncidenceWeights weights = IncidenceWeights::ones);

/// Flattens simple and hyper-edges into (out, in, weight) triples, using the
/// semiring's 1 for unweighted edges.
TripleList edges_to_triples(const Semiring& sr, const std::vector<EdgeRecord>& edges);

/// 1 + the largest vertex label seen on either side.
Index vertex_bound(const std::vector<EdgeRecord>& edges);

/// Matrix Market coordinate format, general symmetry. Reals are written with
/// field "real", every other domain with "integer". "pattern" files load the
/// semiring's 1. Indices are 1-based on disk.
SparseMatrix read_matrix_market(const std::string& path, const Semiring& sr);
SparseMatrix read_matrix_market(std::istream& in, const std::string& source_name,
                                const Semiring& sr);
void write_matrix_market(const std::string& path, const SparseMatrix& a);
void write_matrix_market(std::ostream& out, const SparseMatrix& a);

/// Tuple TSV: a "# nrows ncols" header followed by "row<TAB>col<TAB>value".
void write_tsv(std::ostream& out, const SparseMatrix& a, bool one_based = false);
void write_tsv(const std::string& path, const SparseMatrix& a, bool one_based = false);

/// Reads simple-edge TSV into a matrix. The shape comes from `dims`, else
/// the "# nrows ncols" header, else the largest labels. Duplicates fold with
/// the semiring's (+) unless `dup` overrides it.
SparseMatrix read_tsv_matrix(const std::string& path, const Semiring& sr, bool one_based = false,
                             std::optional<Dimensions> dims = {},
                             const std::optional<BinaryOp>& dup = std::nullopt,
                             bool strict = false);
SparseMatrix read_tsv_matrix(std::istream& in, const std::string& source_name, const Semiring& sr,
                             bool one_based = false, std::optional<Dimensions> dims = {},
                             const std::optional<BinaryOp>& dup = std::nullopt,
                             bool strict = false);

}  // namespace gbcore
