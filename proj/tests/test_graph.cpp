#include <doctest.h>

#include <limits>
#include <set>

#include "gbcore/error.hpp"
#include "gbcore/graph.hpp"
#include "gbcore/io.hpp"
#include "gbcore/kernels.hpp"
#include "support.hpp"

using namespace gbcore;
using gbtest::random_extent;
using oracle::densify;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<EdgeRecord> fixture_records() {
    std::vector<EdgeRecord> out;
    for (auto [u, v] : gbtest::fixture_edges()) {
        EdgeRecord e;
        e.out_vertices = {u};
        e.in_vertices = {v};
        out.push_back(e);
    }
    return out;
}

/// Random simple digraph without self loops, unit weights.
SparseMatrix random_digraph(const Semiring& sr, std::mt19937_64& rng, Index n, double density) {
    std::bernoulli_distribution keep(density);
    TripleList t;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (i != j && keep(rng)) t.push_back(i, j, sr.one());
        }
    }
    return build(sr, {n, n}, t);
}

SparseMatrix random_weighted(std::mt19937_64& rng, Index n, double density, bool integer_weights) {
    const Semiring sr = semiring_by_name("min-plus");
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> iw(0, 20);
    std::uniform_real_distribution<double> rw(0.0, 10.0);
    TripleList t;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (keep(rng)) t.push_back(i, j, real(integer_weights ? iw(rng) : rw(rng)));
        }
    }
    return build(sr, {n, n}, t);
}

SparseMatrix signed_incidence(const std::vector<std::pair<Index, Index>>& edges, Index n) {
    TripleList t;
    for (Index k = 0; k < edges.size(); ++k) {
        t.push_back(k, edges[k].first, real(-1));
        t.push_back(k, edges[k].second, real(1));
    }
    return build(semiring_by_name("arith-real"), {edges.size(), n}, t);
}

}  // namespace

TEST_CASE("incidence pair of the fixture projects to its adjacency") {
    const Semiring sr = semiring_by_name("arith-real");
    const auto [e_out, e_in] = incidence_from_edges(sr, fixture_records(), 7, 7);
    CHECK(e_out.dims() == Dimensions{12, 7});
    CHECK(e_in.dims() == Dimensions{12, 7});
    const SparseMatrix a = adjacency_from_incidence(sr, e_out, e_in);
    CHECK(a.nnz() == 12);
    CHECK(a == gbtest::fixture_adjacency(sr));
    // A(4,3) in 1-based labels comes from edge 7.
    CHECK(a.at(3, 2) == real(1));

    const GraphHandle g = GraphHandle::from_incidence(sr, e_out, e_in);
    CHECK(g.adjacency().has_value());
    CHECK(*g.adjacency() == a);
    CHECK(g.edge_count() == 12);
    CHECK(g.out_vertex_count() == 7);
    CHECK(g.in_vertex_count() == 7);
}

TEST_CASE("duplicate and hyper-edges in the incidence pair") {
    const Semiring sr = semiring_by_name("arith-real");
    auto edges = fixture_records();
    edges[11].in_vertices = {4, 5};  // edge 12: 7 -> {5, 6}
    EdgeRecord dup;
    dup.out_vertices = {4};
    dup.in_vertices = {5};  // edge 13 repeats edge 8: 5 -> 6
    edges.push_back(dup);
    const auto [e_out, e_in] = incidence_from_edges(sr, edges, 7, 7);
    CHECK(e_in.row(11).size() == 2);
    const SparseMatrix a = adjacency_from_incidence(sr, e_out, e_in);
    CHECK(a.at(4, 5) == real(2));
    CHECK(a.at(6, 5) == real(1));
    CHECK(densify(a) == oracle::dense_mxm(sr, oracle::dense_transpose(densify(e_out)), densify(e_in)));
}

TEST_CASE("adjacency from incidence edge cases") {
    const Semiring sr = semiring_by_name("arith-real");
    const SparseMatrix none = SparseMatrix::empty({3, 7}, sr.zero());
    CHECK(adjacency_from_incidence(sr, none, none).nnz() == 0);
    CHECK(adjacency_from_incidence(sr, none, none).dims() == Dimensions{7, 7});
    CHECK_THROWS_AS(adjacency_from_incidence(sr, none, SparseMatrix::empty({4, 7}, sr.zero())), DimensionMismatch);

    EdgeRecord loop;
    loop.out_vertices = {2};
    loop.in_vertices = {2};
    const auto [e_out, e_in] = incidence_from_edges(sr, {loop}, 4, 4);
    CHECK(e_out.at(0, 2) == real(1));
    CHECK(e_in.at(0, 2) == real(1));
    CHECK(adjacency_from_incidence(sr, e_out, e_in).at(2, 2) == real(1));
}

TEST_CASE("incidence round trip on random simple digraphs") {
    std::mt19937_64 rng(11);
    for (const Semiring& sr : gbtest::named_semirings()) {
        for (int trial = 0; trial < 30; ++trial) {
            const Index n = random_extent(rng, 2, 20);
            const SparseMatrix a = random_digraph(sr, rng, n, 0.2);
            if (a.nnz() == 0) continue;
            const TripleList t = extract_tuples(a);
            std::vector<EdgeRecord> edges;
            for (std::size_t k = 0; k < t.size(); ++k) {
                EdgeRecord e;
                e.out_vertices = {t.rows[k]};
                e.in_vertices = {t.cols[k]};
                edges.push_back(e);
            }
            const auto [e_out, e_in] = incidence_from_edges(sr, edges, n, n);
            CHECK(adjacency_from_incidence(sr, e_out, e_in) == a);
        }
    }
}

TEST_CASE("Laplacian examples") {
    const SparseMatrix single = laplacian_from_incidence(signed_incidence({{0, 1}}, 2));
    CHECK(single.at(0, 0) == real(1));
    CHECK(single.at(0, 1) == real(-1));
    CHECK(single.at(1, 0) == real(-1));
    CHECK(single.at(1, 1) == real(1));

    const SparseMatrix path = laplacian_from_incidence(signed_incidence({{0, 1}, {1, 2}}, 3));
    CHECK(path.at(0, 0) == real(1));
    CHECK(path.at(1, 1) == real(2));
    CHECK(path.at(2, 2) == real(1));
    CHECK(path.at(0, 1) == real(-1));
    CHECK(path.at(1, 2) == real(-1));
    CHECK_FALSE(path.find(0, 2).has_value());
}

TEST_CASE("Laplacian rejects rows that are not one -1 and one +1") {
    const Semiring sr = semiring_by_name("arith-real");
    TripleList t;
    t.push_back(0, 0, real(1));
    t.push_back(0, 1, real(1));
    CHECK_THROWS_AS(laplacian_from_incidence(build(sr, {1, 2}, t)), ValueError);
    TripleList half;
    half.push_back(0, 0, real(-1));
    CHECK_THROWS_AS(laplacian_from_incidence(build(sr, {1, 2}, half)), ValueError);
    TripleList scaled;
    scaled.push_back(0, 0, real(-2));
    scaled.push_back(0, 1, real(2));
    CHECK_THROWS_AS(laplacian_from_incidence(build(sr, {1, 2}, scaled)), ValueError);
    CHECK_THROWS_AS(laplacian_from_incidence(SparseMatrix::empty({1, 2}, natural(0))), DomainMismatch);
}

TEST_CASE("Laplacian properties on random simple graphs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const Index n = random_extent(rng, 2, 16);
        std::set<std::pair<Index, Index>> undirected;
        std::bernoulli_distribution keep(0.3);
        for (Index i = 0; i < n; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                if (keep(rng)) undirected.emplace(i, j);
            }
        }
        if (undirected.empty()) continue;
        std::vector<std::pair<Index, Index>> edges(undirected.begin(), undirected.end());
        const SparseMatrix l = laplacian_from_incidence(signed_incidence(edges, n));
        std::vector<double> degree(n, 0.0);
        for (auto [u, v] : edges) {
            degree[u] += 1;
            degree[v] += 1;
        }
        for (Index i = 0; i < n; ++i) {
            double sum = 0;
            for (const Scalar& x : l.row(i).vals) sum += std::get<double>(x);
            CHECK(sum == 0.0);
            CHECK(std::get<double>(l.at(i, i)) == degree[i]);
        }
        CHECK(l == transpose(l));

        // Every edge paired with its reverse.
        std::vector<std::pair<Index, Index>> both = edges;
        for (auto [u, v] : edges) both.emplace_back(v, u);
        const SparseMatrix l2 = laplacian_from_incidence(signed_incidence(both, n));
        CHECK(l2 == transpose(l2));
    }
}

TEST_CASE("BFS from vertex 4 of the fixture") {
    const SparseMatrix a = gbtest::fixture_adjacency(structure_semiring());
    const BfsResult r = bfs_levels(a, {3});
    std::set<Index> level1;
    for (Index v = 0; v < 7; ++v) {
        if (r.levels[v] == std::size_t{1}) level1.insert(v);
    }
    CHECK(level1 == std::set<Index>{0, 2});
    CHECK(r.levels[3] == std::size_t{0});
    CHECK(r.levels == oracle::dense_bfs(densify(a), {3}));

    BfsOptions one_hop;
    one_hop.max_hops = 1;
    const BfsResult limited = bfs_levels(a, {3}, one_hop);
    for (Index v = 0; v < 7; ++v) {
        if (v == 0 || v == 2 || v == 3) {
            CHECK(limited.levels[v].has_value());
        } else {
            CHECK_FALSE(limited.levels[v].has_value());
        }
    }
}

TEST_CASE("BFS from a vertex with no out-edges") {
    TripleList t;
    t.push_back(0, 1, boolean(true));
    const SparseMatrix a = build(structure_semiring(), {3, 3}, t);
    const BfsResult r = bfs_levels(a, {2});
    CHECK(r.levels[2] == std::size_t{0});
    CHECK_FALSE(r.levels[0].has_value());
    CHECK_FALSE(r.levels[1].has_value());
    CHECK_THROWS_AS(bfs_levels(a, {3}), IndexOutOfBounds);
    CHECK_THROWS_AS(bfs_levels(SparseMatrix::empty({2, 3}, boolean(false)), {0}), DimensionMismatch);
}

TEST_CASE("BFS matches the queue oracle on random digraphs") {
    std::mt19937_64 rng(13);
    const Semiring sr = semiring_by_name("arith-real");
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = random_extent(rng, 1, 64);
        const SparseMatrix a = random_digraph(sr, rng, n, std::uniform_real_distribution<double>(0.0, 0.1)(rng));
        IndexVector sources = gbtest::random_distinct(rng, random_extent(rng, 1, std::min<Index>(n, 3)), n);
        BfsOptions opts;
        if (trial % 4 == 0) opts.max_hops = random_extent(rng, 0, 5);
        opts.track_parents = true;
        const BfsResult r = bfs_levels(a, sources, opts);
        CHECK(r.levels == oracle::dense_bfs(densify(a), sources, opts.max_hops));

        // Monotone levels and valid parents.
        const auto& parents = *r.parents;
        for (Index v = 0; v < n; ++v) {
            if (!r.levels[v] || *r.levels[v] == 0) {
                CHECK_FALSE(parents[v].has_value());
                continue;
            }
            bool has_pred = false;
            Index smallest = n;
            for (Index u = 0; u < n; ++u) {
                if (a.find(u, v) && r.levels[u] && *r.levels[u] + 1 == *r.levels[v]) {
                    has_pred = true;
                    smallest = std::min(smallest, u);
                }
            }
            CHECK(has_pred);
            REQUIRE(parents[v].has_value());
            CHECK(*parents[v] == smallest);
        }
    }
}

TEST_CASE("GF(2) frontiers cancel vertices reached twice on one hop") {
    // 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3: vertex 3 is reached twice from level 1.
    TripleList t;
    t.push_back(0, 1, boolean(true));
    t.push_back(0, 2, boolean(true));
    t.push_back(1, 3, boolean(true));
    t.push_back(2, 3, boolean(true));
    const SparseMatrix a = build(structure_semiring(), {4, 4}, t);
    BfsOptions gf2;
    gf2.mode = FrontierMode::gf2;
    const BfsResult r = bfs_levels(a, {0}, gf2);
    CHECK(r.levels[1] == std::size_t{1});
    CHECK(r.levels[2] == std::size_t{1});
    CHECK_FALSE(r.levels[3].has_value());
    CHECK(bfs_levels(a, {0}).levels[3] == std::size_t{2});

    // Without even multiplicities GF(2) agrees with plain reachability.
    const SparseMatrix fx = gbtest::fixture_adjacency(structure_semiring());
    CHECK(bfs_levels(fx, {3}, gf2).levels[0] == std::size_t{1});
}

TEST_CASE("multi-source BFS") {
    const SparseMatrix a = gbtest::fixture_adjacency(structure_semiring());
    const BfsResult r = bfs_levels(a, {0, 5});
    CHECK(r.levels[0] == std::size_t{0});
    CHECK(r.levels[5] == std::size_t{0});
    CHECK(r.levels[2] == std::size_t{1});
    CHECK(r.levels == oracle::dense_bfs(densify(a), {0, 5}));
}

TEST_CASE("SSSP single edge and errors") {
    const Semiring sr = semiring_by_name("min-plus");
    TripleList t;
    t.push_back(0, 1, real(2.5));
    const SparseMatrix a = build(sr, {3, 3}, t);
    const auto d = sssp_minplus(a, 0);
    CHECK(d[0] == 0.0);
    CHECK(d[1] == 2.5);
    CHECK(d[2] == kInf);
    CHECK_THROWS_AS(sssp_minplus(a, 3), IndexOutOfBounds);

    TripleList neg;
    neg.push_back(0, 1, real(-1));
    CHECK_THROWS_AS(sssp_minplus(build(sr, {2, 2}, neg), 0), ValueError);
    CHECK_THROWS_AS(sssp_minplus(gbtest::fixture_adjacency(semiring_by_name("arith-real")), 0), DomainMismatch);
}

TEST_CASE("SSSP matches Dijkstra") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = random_extent(rng, 1, 32);
        const bool integer_weights = trial % 2 == 0;
        const SparseMatrix a = random_weighted(rng, n, 0.15, integer_weights);
        const Index s = std::uniform_int_distribution<Index>(0, n - 1)(rng);
        const auto got = sssp_minplus(a, s);
        const auto want = oracle::dense_sssp(densify(a), s);
        REQUIRE(got.size() == want.size());
        for (Index v = 0; v < n; ++v) {
            if (integer_weights || std::isinf(want[v])) {
                CHECK(got[v] == want[v]);
            } else {
                CHECK(std::fabs(got[v] - want[v]) <= 1e-10 * std::max(1.0, want[v]));
            }
        }
        // Triangle relaxation over every stored edge.
        const TripleList t = extract_tuples(a);
        for (std::size_t k = 0; k < t.size(); ++k) {
            CHECK(got[t.cols[k]] <= got[t.rows[k]] + std::get<double>(t.vals[k]));
        }
    }
}

TEST_CASE("SSSP with unit weights reproduces BFS hop counts") {
    std::mt19937_64 rng(15);
    const Semiring mp = semiring_by_name("min-plus");
    for (int trial = 0; trial < 50; ++trial) {
        const Index n = random_extent(rng, 1, 32);
        const SparseMatrix a = random_digraph(mp, rng, n, 0.1);
        const SparseMatrix unit = pattern(a, real(1), mp.zero());
        const auto d = sssp_minplus(unit, 0);
        const auto levels = bfs_levels(a, {0}).levels;
        for (Index v = 0; v < n; ++v) {
            if (levels[v]) {
                CHECK(d[v] == static_cast<double>(*levels[v]));
            } else {
                CHECK(d[v] == kInf);
            }
        }
    }
}

TEST_CASE("graph union and intersection") {
    std::mt19937_64 rng(16);
    const Semiring arith = semiring_by_name("arith-real");
    const SparseMatrix a = gbtest::fixture_adjacency(arith);
    CHECK(graph_union(arith, a, SparseMatrix::empty({7, 7}, arith.zero())) == a);
    CHECK(graph_intersection(arith, a, SparseMatrix::empty({7, 7}, arith.zero())).nnz() == 0);

    const Semiring mp = semiring_by_name("max-plus");
    for (int trial = 0; trial < 50; ++trial) {
        const Index n = random_extent(rng, 2, 20);
        const SparseMatrix x = gbtest::random_matrix(mp, rng, {n, n}, 0.3);
        const SparseMatrix y = gbtest::random_matrix(mp, rng, {n, n}, 0.3);
        const SparseMatrix u = graph_union(mp, x, y);
        CHECK(densify(u) == oracle::dense_ewise_add(mp, densify(x), densify(y)));
        const SparseMatrix i = graph_intersection(mp, x, y);
        std::set<std::pair<Index, Index>> sx, sy, si, both;
        auto collect = [](const SparseMatrix& m, auto& s) {
            const TripleList t = extract_tuples(m);
            for (std::size_t k = 0; k < t.size(); ++k) s.emplace(t.rows[k], t.cols[k]);
        };
        collect(x, sx);
        collect(y, sy);
        collect(i, si);
        std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::inserter(both, both.end()));
        CHECK(si == both);
    }
    CHECK_THROWS_AS(graph_union(arith, a, SparseMatrix::empty({7, 6}, arith.zero())), DimensionMismatch);
}
