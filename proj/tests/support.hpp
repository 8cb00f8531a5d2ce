#pragma once

// Shared generators and comparisons for the test suites.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "gbcore/matrix.hpp"
#include "gbcore/oracle.hpp"
#include "gbcore/semiring.hpp"

namespace gbtest {

using namespace gbcore;

inline std::string data_path(const std::string& name) { return std::string(GBCORE_TEST_DATA) + "/" + name; }

/// The eight named semirings; union-intersect over a 16-element universe.
inline std::vector<Semiring> named_semirings() {
    std::vector<Semiring> out;
    for (auto name : semiring_names()) out.push_back(semiring_by_name(name, 16));
    return out;
}

inline Scalar random_nonzero(const Semiring& sr, std::mt19937_64& rng) {
    for (;;) {
        Scalar v = random_scalar(sr, rng);
        if (v != sr.zero()) return v;
    }
}

/// Each position is stored independently with probability `density`.
inline SparseMatrix random_matrix(const Semiring& sr, std::mt19937_64& rng, Dimensions dims, double density) {
    std::bernoulli_distribution keep(density);
    TripleList t;
    for (Index i = 0; i < dims.nrows; ++i) {
        for (Index j = 0; j < dims.ncols; ++j) {
            if (keep(rng)) t.push_back(i, j, random_nonzero(sr, rng));
        }
    }
    return build(dims, t, std::nullopt, sr.zero());
}

inline Index random_extent(std::mt19937_64& rng, Index lo = 1, Index hi = 16) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

inline double random_density(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 0.3)(rng); }

inline IndexVector random_indices(std::mt19937_64& rng, std::size_t count, Index bound) {
    std::uniform_int_distribution<Index> pick(0, bound - 1);
    IndexVector v(count);
    for (auto& k : v) k = pick(rng);
    return v;
}

/// `count` distinct indices below `bound`, in random order.
inline IndexVector random_distinct(std::mt19937_64& rng, std::size_t count, Index bound) {
    IndexVector all(bound);
    for (Index k = 0; k < bound; ++k) all[k] = k;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

/// Exact equality, or for arith-real a norm-relative comparison of the dense
/// forms: max |x - y| <= rel * max(max|x|, max|y|).
inline bool same_matrix(const Semiring& sr, const oracle::DenseMatrix& x, const oracle::DenseMatrix& y,
                        double rel = 1e-10) {
    if (x.dims != y.dims) return false;
    if (x == y) return true;
    if (sr.name() != "arith-real") return false;
    double diff = 0;
    double scale = 0;
    for (std::size_t k = 0; k < x.values.size(); ++k) {
        const double a = std::get<double>(x.values[k]);
        const double b = std::get<double>(y.values[k]);
        diff = std::max(diff, std::fabs(a - b));
        scale = std::max({scale, std::fabs(a), std::fabs(b)});
    }
    return diff <= rel * scale;
}

inline bool same_matrix(const Semiring& sr, const SparseMatrix& x, const SparseMatrix& y, double rel = 1e-10) {
    if (x == y) return true;
    return same_matrix(sr, oracle::densify(x), oracle::densify(y), rel);
}

/// Seven-vertex, twelve-edge example digraph (0-based labels).
inline const std::vector<std::pair<Index, Index>>& fixture_edges() {
    static const std::vector<std::pair<Index, Index>> edges = {
        {0, 1}, {0, 3}, {1, 4}, {1, 6}, {2, 5}, {3, 0},
        {3, 2}, {4, 5}, {5, 2}, {6, 2}, {6, 3}, {6, 4},
    };
    return edges;
}

inline SparseMatrix fixture_adjacency(const Semiring& sr) {
    TripleList t;
    for (auto [u, v] : fixture_edges()) t.push_back(u, v, sr.one());
    return build(sr, {7, 7}, t);
}

}  // namespace gbtest
