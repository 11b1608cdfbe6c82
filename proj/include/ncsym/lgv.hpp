#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ncsym/combinatorics.hpp>
#include <ncsym/ncpoly.hpp>

namespace ncsym {

// N/E lattice path from (start_x, 1) going north to infinity after its last
// E step. heights lists the E-step heights left to right.
struct LatticePath {
    int start_x = 0;
    std::vector<int> heights;

    int end_x() const noexcept { return start_x + static_cast<int>(heights.size()); }
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

// Path i runs from (mu_eps(i) - eps(i), 1) to (lambda_i - i, infinity).
struct PathTuple {
    SkewShape shape;
    Permutation epsilon;
    std::vector<LatticePath> paths;

    int steps() const noexcept { return shape.size(); }
    friend bool operator==(const PathTuple&, const PathTuple&) = default;
};

// Empty when some path of eps would need a negative number of E steps.
std::vector<PathTuple> enumerate_path_tuples(const SkewShape& shape, const Permutation& eps, int height_cap);
// Union over all eps.
std::vector<PathTuple> enumerate_path_tuples(const SkewShape& shape, int height_cap);

// Intersection of two paths that is last in traversal order, if any.
std::optional<std::pair<int, int>> last_intersection(const LatticePath& a, const LatticePath& b);
bool has_intersection(const PathTuple& p);

struct SwapResult {
    PathTuple image;
    Permutation xi; // label exchange
    bool fixed = false;
};

SwapResult lgv_swap(const PathTuple& p);
int sign(const PathTuple& p);
// ht(1_P), ..., ht(n_P).
std::vector<int> label_heights(const PathTuple& p);
// x^(delta, P).
Word monomial(const Permutation& delta, const PathTuple& p);

// Row i of the tableau lists the E-heights of P_i; needs eps = id.
SemistandardTableau to_ssyt(const PathTuple& p);

struct SsytCertificate {
    std::size_t path_count = 0; // non-intersecting tuples with eps = id
    std::size_t ssyt_count = 0;
    bool injective = false;
    bool bijective = false;
};

SsytCertificate fixed_points_to_ssyt(const SkewShape& shape, int height_cap);

// "start_x: h1,h2,..." one path per line.
std::string dump(const PathTuple& p);

} // namespace ncsym
