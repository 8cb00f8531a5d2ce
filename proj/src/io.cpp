#include "gbcore/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gbcore/error.hpp"

namespace gbcore {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open file for writing");
    return out;
}

struct LineContext {
    const std::string& source;
    std::size_t line;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(source, line, message); }
};

// Parses an unsigned label; `one_based` shifts it to 0-based.
Index parse_label(const LineContext& ctx, std::string_view text, bool one_based) {
    text = trim(text);
    if (!text.empty() && text.front() == '-') ctx.fail("negative index '" + std::string(text) + "'");
    Index v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        ctx.fail("malformed index '" + std::string(text) + "'");
    }
    if (one_based) {
        if (v == 0) ctx.fail("index 0 in a 1-based file");
        --v;
    }
    return v;
}

std::vector<Index> parse_group(const LineContext& ctx, std::string_view text, bool one_based) {
    std::vector<Index> out;
    for (std::string_view part : split(text, ',')) out.push_back(parse_label(ctx, part, one_based));
    return out;
}

Scalar parse_weight(const LineContext& ctx, std::string_view text, const Semiring& sr) {
    try {
        return sr.make(parse_scalar(sr.domain(), trim(text)));
    } catch (const Error& e) {
        ctx.fail("bad weight: " + std::string(e.what()));
    }
}

EdgeRecord parse_labelled(const LineContext& ctx, std::string_view line, const EdgeListOptions& opts) {
    // e12: out=4 in=3,5 [w=0.5]
    const auto colon = line.find(':');
    EdgeRecord rec;
    rec.line = ctx.line;
    rec.edge_id = parse_label(ctx, line.substr(1, colon - 1), false);
    for (std::string_view tok : split_ws(line.substr(colon + 1))) {
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) ctx.fail("expected key=value, got '" + std::string(tok) + "'");
        const std::string_view key = tok.substr(0, eq);
        const std::string_view value = tok.substr(eq + 1);
        if (key == "out") {
            rec.out_vertices = parse_group(ctx, value, opts.one_based);
        } else if (key == "in") {
            rec.in_vertices = parse_group(ctx, value, opts.one_based);
        } else if (key == "w") {
            rec.weight = parse_weight(ctx, value, opts.semiring);
        } else {
            ctx.fail("unknown key '" + std::string(key) + "'");
        }
    }
    if (rec.out_vertices.empty() || rec.in_vertices.empty()) ctx.fail("edge needs out= and in= groups");
    return rec;
}

bool is_labelled(std::string_view line) {
    if (line.size() < 3 || line.front() != 'e') return false;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos || colon == 1) return false;
    return std::all_of(line.begin() + 1, line.begin() + static_cast<std::ptrdiff_t>(colon),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::optional<Dimensions> parse_tsv_header(std::string_view line) {
    // "# nrows ncols"
    auto toks = split_ws(line.substr(1));
    if (toks.size() != 2) return std::nullopt;
    Dimensions d;
    for (int k = 0; k < 2; ++k) {
        Index v = 0;
        auto [ptr, ec] = std::from_chars(toks[k].data(), toks[k].data() + toks[k].size(), v);
        if (ec != std::errc{} || ptr != toks[k].data() + toks[k].size()) return std::nullopt;
        (k == 0 ? d.nrows : d.ncols) = v;
    }
    return d;
}

std::vector<EdgeRecord> read_edges_impl(std::istream& in, const std::string& source,
                                        const EdgeListOptions& opts,
                                        std::optional<Dimensions>* header) {
    std::vector<EdgeRecord> edges;
    std::string raw;
    std::size_t lineno = 0;
    bool seen_content = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (header != nullptr && !seen_content && !header->has_value()) *header = parse_tsv_header(line);
            continue;
        }
        seen_content = true;
        const LineContext ctx{source, lineno};
        if (is_labelled(line)) {
            edges.push_back(parse_labelled(ctx, line, opts));
            continue;
        }
        const auto fields = split_ws(line);
        if (fields.size() < 2 || fields.size() > 3) {
            ctx.fail("expected 2 or 3 fields, got " + std::to_string(fields.size()));
        }
        EdgeRecord rec;
        rec.line = lineno;
        rec.out_vertices = parse_group(ctx, fields[0], opts.one_based);
        rec.in_vertices = parse_group(ctx, fields[1], opts.one_based);
        if (fields.size() == 3) rec.weight = parse_weight(ctx, fields[2], opts.semiring);
        edges.push_back(std::move(rec));
    }
    return edges;
}

}  // namespace

std::vector<EdgeRecord> read_edge_list(std::istream& in, const std::string& source_name,
                                       const EdgeListOptions& opts) {
    return read_edges_impl(in, source_name, opts, nullptr);
}

std::vector<EdgeRecord> read_edge_list(const std::string& path, const EdgeListOptions& opts) {
    auto in = open_input(path);
    return read_edge_list(in, path, opts);
}

Index vertex_bound(const std::vector<EdgeRecord>& edges) {
    Index bound = 0;
    for (const auto& e : edges) {
        for (Index v : e.out_vertices) bound = std::max(bound, v + 1);
        for (Index v : e.in_vertices) bound = std::max(bound, v + 1);
    }
    return bound;
}

TripleList edges_to_triples(const Semiring& sr, const std::vector<EdgeRecord>& edges) {
    TripleList t;
    for (const auto& e : edges) {
        const Scalar w = e.weight.value_or(sr.one());
        for (Index o : e.out_vertices) {
            for (Index i : e.in_vertices) t.push_back(o, i, w);
        }
    }
    return t;
}

std::pair<SparseMatrix, SparseMatrix> incidence_from_edges(const Semiring& sr,
                                                           const std::vector<EdgeRecord>& edges,
                                                           Index n_out_vertices, Index n_in_vertices,
                                                           IncidenceWeights weights) {
    if (edges.empty()) throw ValueError("incidence_from_edges: edge list is empty");
    TripleList out_t;
    TripleList in_t;
    for (Index k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        const Scalar out_value = weights == IncidenceWeights::weights_on_out ? e.weight.value_or(sr.one()) : sr.one();
        for (Index v : e.out_vertices) {
            if (v >= n_out_vertices) throw IndexOutOfBounds("incidence out-vertex", v, n_out_vertices);
            out_t.push_back(k, v, out_value);
        }
        for (Index v : e.in_vertices) {
            if (v >= n_in_vertices) throw IndexOutOfBounds("incidence in-vertex", v, n_in_vertices);
            in_t.push_back(k, v, sr.one());
        }
    }
    return {build(sr, {edges.size(), n_out_vertices}, out_t), build(sr, {edges.size(), n_in_vertices}, in_t)};
}

SparseMatrix read_matrix_market(std::istream& in, const std::string& source, const Semiring& sr) {
    std::string raw;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) -> void { throw ParseError(source, lineno, msg); };

    if (!std::getline(in, raw)) {
        lineno = 1;
        fail("empty file, expected a %%MatrixMarket header");
    }
    ++lineno;
    bool is_pattern = false;
    {
        std::string lower = raw;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        const auto toks = split_ws(lower);
        if (toks.size() != 5 || toks[0] != "%%matrixmarket" || toks[1] != "matrix") {
            fail("malformed %%MatrixMarket header");
        }
        if (toks[2] != "coordinate") fail("unsupported format '" + std::string(toks[2]) + "', only coordinate");
        if (toks[3] != "real" && toks[3] != "integer" && toks[3] != "pattern") {
            fail("unsupported field '" + std::string(toks[3]) + "'");
        }
        if (toks[4] != "general") fail("unsupported symmetry '" + std::string(toks[4]) + "', only general");
        is_pattern = toks[3] == "pattern";
    }

    std::optional<Dimensions> dims;
    std::size_t declared = 0;
    TripleList t;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '%') continue;
        const auto toks = split_ws(line);
        const LineContext ctx{source, lineno};
        if (!dims) {
            if (toks.size() != 3) fail("expected 'nrows ncols nnz' size line");
            dims = Dimensions{parse_label(ctx, toks[0], false), parse_label(ctx, toks[1], false)};
            declared = parse_label(ctx, toks[2], false);
            if (dims->nrows == 0 || dims->ncols == 0) fail("matrix dimensions must be positive");
            continue;
        }
        if (toks.size() != (is_pattern ? 2U : 3U)) fail("expected " + std::string(is_pattern ? "2" : "3") + " fields per entry");
        if (t.size() == declared) fail("more entries than the declared " + std::to_string(declared));
        const Index i = parse_label(ctx, toks[0], true);
        const Index j = parse_label(ctx, toks[1], true);
        if (i >= dims->nrows) fail("row index " + std::to_string(i + 1) + " exceeds declared " + std::to_string(dims->nrows));
        if (j >= dims->ncols) fail("column index " + std::to_string(j + 1) + " exceeds declared " + std::to_string(dims->ncols));
        t.push_back(i, j, is_pattern ? sr.one() : parse_weight(ctx, toks[2], sr));
    }
    if (!dims) fail("missing size line");
    if (t.size() != declared) {
        fail("declared " + std::to_string(declared) + " entries but found " + std::to_string(t.size()));
    }
    return build(sr, *dims, t);
}

SparseMatrix read_matrix_market(const std::string& path, const Semiring& sr) {
    auto in = open_input(path);
    return read_matrix_market(in, path, sr);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& a) {
    out << "%%MatrixMarket matrix coordinate " << (a.domain() == Domain::real ? "real" : "integer")
        << " general\n";
    out << "% " << to_string(a.domain()) << ", 0-element " << format_scalar(a.zero()) << '\n';
    out << a.nrows() << ' ' << a.ncols() << ' ' << a.nnz() << '\n';
    for (Index i = 0; i < a.nrows(); ++i) {
        const auto row = a.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << i + 1 << ' ' << row.cols[k] + 1 << ' ' << format_scalar(row.vals[k]) << '\n';
        }
    }
}

void write_matrix_market(const std::string& path, const SparseMatrix& a) {
    auto out = open_output(path);
    write_matrix_market(out, a);
}

void write_tsv(std::ostream& out, const SparseMatrix& a, bool one_based) {
    const Index shift = one_based ? 1 : 0;
    out << "# " << a.nrows() << ' ' << a.ncols() << '\n';
    for (Index i = 0; i < a.nrows(); ++i) {
        const auto row = a.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << i + shift << '\t' << row.cols[k] + shift << '\t' << format_scalar(row.vals[k]) << '\n';
        }
    }
}

void write_tsv(const std::string& path, const SparseMatrix& a, bool one_based) {
    auto out = open_output(path);
    write_tsv(out, a, one_based);
}

SparseMatrix read_tsv_matrix(std::istream& in, const std::string& source, const Semiring& sr,
                             bool one_based, std::optional<Dimensions> dims,
                             const std::optional<BinaryOp>& dup, bool strict) {
    std::optional<Dimensions> header;
    const auto edges = read_edges_impl(in, source, EdgeListOptions{one_based, sr}, &header);
    if (!dims) dims = header;
    if (!dims) {
        const Index n = vertex_bound(edges);
        if (n == 0) throw ParseError(source, 0, "cannot infer dimensions of an empty edge list");
        dims = Dimensions{n, n};
    }
    for (const auto& e : edges) {
        for (Index v : e.out_vertices) {
            if (v >= dims->nrows) throw ParseError(source, e.line, "row index out of bounds for " + to_string(*dims));
        }
        for (Index v : e.in_vertices) {
            if (v >= dims->ncols) throw ParseError(source, e.line, "column index out of bounds for " + to_string(*dims));
        }
    }
    const TripleList t = edges_to_triples(sr, edges);
    if (strict) return build(*dims, t, std::nullopt, sr.zero());
    return build(*dims, t, dup ? *dup : sr.add(), sr.zero());
}

SparseMatrix read_tsv_matrix(const std::string& path, const Semiring& sr, bool one_based,
                             std::optional<Dimensions> dims, const std::optional<BinaryOp>& dup,
                             bool strict) {
    auto in = open_input(path);
    return read_tsv_matrix(in, path, sr, one_based, dims, dup, strict);
}

}  // namespace gbcore
