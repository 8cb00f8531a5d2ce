#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gbcore/error.hpp"
#include "gbcore/graph.hpp"
#include "gbcore/io.hpp"
#include "support.hpp"

using namespace gbcore;
using gbtest::data_path;

namespace {

std::vector<EdgeRecord> parse(const std::string& text, const EdgeListOptions& opts = {}) {
    std::istringstream in(text);
    return read_edge_list(in, "mem", opts);
}

ParseError parse_error(const std::string& text, const EdgeListOptions& opts = {}) {
    try {
        parse(text, opts);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return ParseError("", 0, "");
}

ParseError mm_error(const std::string& text) {
    std::istringstream in(text);
    try {
        read_matrix_market(in, "m.mtx", semiring_by_name("arith-real"));
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return ParseError("", 0, "");
}

std::string mm_text(const SparseMatrix& a) {
    std::ostringstream out;
    write_matrix_market(out, a);
    return out.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("edge list line forms") {
    const auto simple = parse("0\t1\t0.5\n");
    REQUIRE(simple.size() == 1);
    CHECK(simple[0].out_vertices == std::vector<Index>{0});
    CHECK(simple[0].in_vertices == std::vector<Index>{1});
    CHECK(simple[0].weight == real(0.5));
    CHECK_FALSE(simple[0].is_hyper());

    const auto labelled = parse("e12: out=4 in=3,5\n");
    REQUIRE(labelled.size() == 1);
    CHECK(labelled[0].edge_id == Index{12});
    CHECK(labelled[0].in_vertices == std::vector<Index>{3, 5});
    CHECK_FALSE(labelled[0].weight.has_value());
    CHECK(labelled[0].is_hyper());

    const auto grouped = parse("# comment\n\n1,2\t3\t2\n", {true, semiring_by_name("arith-natural")});
    REQUIRE(grouped.size() == 1);
    CHECK(grouped[0].out_vertices == std::vector<Index>{0, 1});
    CHECK(grouped[0].in_vertices == std::vector<Index>{2});
    CHECK(grouped[0].weight == natural(2));
    CHECK(grouped[0].line == 3);

    CHECK(parse("").empty());
    CHECK(parse("# only a comment\n").empty());
}

TEST_CASE("edge list errors carry the line number") {
    const ParseError malformed = parse_error("0\t1\n0 1 2 3\n");
    CHECK(malformed.line() == 2);
    CHECK(std::string(malformed.what()).rfind("mem:2:", 0) == 0);
    CHECK(parse_error("0\t1\n\n-1\t2\n").line() == 3);
    CHECK(parse_error("0\t1\tabc\n").line() == 1);
    CHECK(parse_error("0\tx\n").line() == 1);
    CHECK(parse_error("0\t1\n", {true, semiring_by_name("arith-real")}).line() == 1);
    CHECK(parse_error("0\t1\t-2\n", {false, semiring_by_name("arith-natural")}).line() == 1);
    CHECK(parse_error("e1: out=1\n").line() == 1);
    CHECK(parse_error("e1: out=1 in=2 colour=red\n").line() == 1);
    CHECK_THROWS_AS(read_edge_list(data_path("does_not_exist.tsv")), ParseError);
}

TEST_CASE("incidence from the fixture edge file") {
    const Semiring sr = semiring_by_name("arith-real");
    const auto edges = read_edge_list(data_path("example_edges.tsv"), {true, sr});
    REQUIRE(edges.size() == 12);
    CHECK(vertex_bound(edges) == 7);
    const auto [e_out, e_in] = incidence_from_edges(sr, edges, 7, 7);
    CHECK(e_out == read_matrix_market(data_path("example_incidence_out.mtx"), sr));
    CHECK(e_in == read_matrix_market(data_path("example_incidence_in.mtx"), sr));
    CHECK(adjacency_from_incidence(sr, e_out, e_in) == read_matrix_market(data_path("example_adjacency.mtx"), sr));
    CHECK_THROWS_AS(incidence_from_edges(sr, edges, 6, 7), IndexOutOfBounds);
    CHECK_THROWS_AS(incidence_from_edges(sr, {}, 7, 7), ValueError);
}

TEST_CASE("hyper-edge and repeated edge file") {
    const Semiring sr = semiring_by_name("arith-real");
    const auto edges = read_edge_list(data_path("hyper_edges.txt"), {true, sr});
    REQUIRE(edges.size() == 13);
    CHECK(edges[11].is_hyper());
    const auto [e_out, e_in] = incidence_from_edges(sr, edges, 7, 7);
    CHECK(e_in.row(11).size() == 2);
    CHECK(adjacency_from_incidence(sr, e_out, e_in) == read_matrix_market(data_path("hyper_adjacency.mtx"), sr));
}

TEST_CASE("weights go onto the out-incidence when asked") {
    const Semiring sr = semiring_by_name("arith-real");
    const auto edges = parse("0\t1\t2.5\n1\t2\t4\n");
    const auto [e_out, e_in] = incidence_from_edges(sr, edges, 3, 3, IncidenceWeights::weights_on_out);
    CHECK(e_out.at(0, 0) == real(2.5));
    CHECK(e_in.at(0, 1) == real(1));
    const SparseMatrix a = adjacency_from_incidence(sr, e_out, e_in);
    CHECK(a.at(0, 1) == real(2.5));
    CHECK(a.at(1, 2) == real(4));
    CHECK(a == build(sr, {3, 3}, edges_to_triples(sr, edges)));
}

TEST_CASE("Matrix Market output for a single entry") {
    TripleList t;
    t.push_back(1, 0, real(3.25));
    const SparseMatrix a = build(semiring_by_name("arith-real"), {2, 2}, t);
    CHECK(mm_text(a) ==
          "%%MatrixMarket matrix coordinate real general\n"
          "% real, 0-element 0\n"
          "2 2 1\n"
          "2 1 3.25\n");
}

TEST_CASE("Matrix Market golden file is reproduced byte for byte") {
    const Semiring sr = semiring_by_name("arith-real");
    const SparseMatrix a = gbtest::fixture_adjacency(sr);
    CHECK(mm_text(a) == slurp(data_path("example_adjacency.mtx")));
}

TEST_CASE("Matrix Market round trip for every named semiring") {
    std::mt19937_64 rng(21);
    for (const Semiring& sr : gbtest::named_semirings()) {
        CAPTURE(sr.name());
        for (int trial = 0; trial < 30; ++trial) {
            const Dimensions d{gbtest::random_extent(rng), gbtest::random_extent(rng)};
            const SparseMatrix a = gbtest::random_matrix(sr, rng, d, gbtest::random_density(rng));
            std::istringstream in(mm_text(a));
            CHECK(read_matrix_market(in, "rt", sr) == a);
        }
    }
    // Reals that need all 17 significant digits.
    TripleList t;
    t.push_back(0, 0, real(0.1));
    t.push_back(0, 1, real(1.0 / 3.0));
    t.push_back(1, 1, real(-2.718281828459045e-300));
    const SparseMatrix a = build(semiring_by_name("arith-real"), {2, 2}, t);
    std::istringstream in(mm_text(a));
    CHECK(read_matrix_market(in, "rt", semiring_by_name("arith-real")) == a);
}

TEST_CASE("Matrix Market reader errors") {
    const std::string header = "%%MatrixMarket matrix coordinate real general\n";
    const ParseError short_count = mm_error(header + "3 3 3\n1 1 1\n2 2 1\n");
    CHECK(std::string(short_count.what()).find("declared 3 entries but found 2") != std::string::npos);
    CHECK(mm_error(header + "3 3 1\n1 1 1\n2 2 1\n").line() == 4);
    CHECK(mm_error("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n").line() == 1);
    CHECK(mm_error("%%MatrixMarket matrix coordinate complex general\n").line() == 1);
    CHECK(mm_error("%%MatrixMarket matrix coordinate real symmetric\n").line() == 1);
    CHECK(mm_error("not a header\n").line() == 1);
    CHECK(mm_error("").line() == 1);
    CHECK(mm_error(header + "2 2 1\n3 1 1\n").line() == 3);
    CHECK(mm_error(header + "2 2 1\n1 3 1\n").line() == 3);
    CHECK(mm_error(header + "2 2 1\n0 1 1\n").line() == 3);
    CHECK(mm_error(header + "% no size line\n").line() == 2);
}

TEST_CASE("Matrix Market pattern and integer fields") {
    std::istringstream pat("%%MatrixMarket matrix coordinate pattern general\n2 3 2\n1 2\n2 3\n");
    const SparseMatrix a = read_matrix_market(pat, "p", semiring_by_name("min-plus"));
    CHECK(a.at(0, 1) == real(0));
    CHECK(a.at(1, 2) == real(0));
    CHECK(a.nnz() == 2);

    std::istringstream ints("%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 1 7\n");
    CHECK(read_matrix_market(ints, "i", semiring_by_name("arith-natural")).at(0, 0) == natural(7));
}

TEST_CASE("TSV write and read") {
    std::mt19937_64 rng(22);
    for (const Semiring& sr : gbtest::named_semirings()) {
        for (bool one_based : {false, true}) {
            const SparseMatrix a = gbtest::random_matrix(sr, rng, {5, 9}, 0.3);
            std::ostringstream out;
            write_tsv(out, a, one_based);
            std::istringstream in(out.str());
            CHECK(read_tsv_matrix(in, "t", sr, one_based) == a);
        }
    }
    const Semiring arith = semiring_by_name("arith-real");
    std::istringstream dup("0\t1\t2\n0\t1\t3\n");
    CHECK(read_tsv_matrix(dup, "d", arith).at(0, 1) == real(5));
    std::istringstream dup_strict("0\t1\t2\n0\t1\t3\n");
    CHECK_THROWS_AS(read_tsv_matrix(dup_strict, "d", arith, false, {}, std::nullopt, true), DuplicateEntry);
    std::istringstream bounded("0\t4\n");
    CHECK_THROWS_AS(read_tsv_matrix(bounded, "b", arith, false, Dimensions{3, 3}), ParseError);
    std::istringstream inferred("2\t4\n");
    CHECK(read_tsv_matrix(inferred, "i", arith).dims() == Dimensions{5, 5});
}

TEST_CASE("writing to a file and reading it back") {
    const auto dir = std::filesystem::temp_directory_path() / "gbcore_test_io";
    std::filesystem::create_directories(dir);
    const Semiring sr = semiring_by_name("max-plus");
    const SparseMatrix a = gbtest::fixture_adjacency(sr);
    const std::string mm = (dir / "a.mtx").string();
    const std::string tsv = (dir / "a.tsv").string();
    write_matrix_market(mm, a);
    write_tsv(tsv, a);
    CHECK(read_matrix_market(mm, sr) == a);
    CHECK(read_tsv_matrix(tsv, sr) == a);
    std::filesystem::remove_all(dir);
}
