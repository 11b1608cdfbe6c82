#pragma once

#include <utility>
#include <vector>

#include <ncsym/combinatorics.hpp>
#include <ncsym/linalg.hpp>
#include <ncsym/ncsym_core.hpp>

namespace ncsym {

// Leibniz expansion sum_eps sgn(eps) M[1][eps(1)] M[2][eps(2)] ..., the
// factors multiplied top row first. Entries share one multiplicative basis;
// zero entries are skipped.
NCSymExpr nc_determinant(const std::vector<std::vector<NCSymExpr>>& grid);

// det((1/c!) h_[c]) with c = lambda_i - mu_j - i + j.
NCSymExpr source_skew_schur(const SkewShape& shape);
// The same determinant with e_[c] in place of h_[c].
NCSymExpr source_skew_schur_e(const SkewShape& shape);
NCSymExpr skew_schur_nc(const Permutation& delta, const SkewShape& shape);
NCSymExpr standard_schur(const SetPartition& pi);
// e-basis.
NCSymExpr transposed_schur(const SetPartition& pi);
NCSymExpr tabloid_schur(const YoungTableau& t);
// Tabloid whose rows are the blocks of pi.
NCSymExpr tabloid_schur(const SetPartition& pi);

// Basis changes between h and the Schur-type bases s, st, tabloid.
NCSymExpr schur_to_h(const NCSymExpr& f);
NCSymExpr h_to_schur(const NCSymExpr& f, Basis target);

struct SchurTransition {
    std::vector<SetPartition> order;
    Matrix matrix;                     // row i: s_order[i] in h coordinates
    std::vector<Rational> raw_diagonal; // 1 / lambda(pi)!
    bool upper_triangular = false;
    // Determinant after rescaling h_pi to h_pi / lambda(pi)!.
    Rational normalized_determinant;
};

SchurTransition schur_transition(int n);

struct SchurProduct {
    NCSymExpr expanded;
    NCSymExpr structured;
    SkewShape concat_shape;
    SkewShape near_shape; // meaningful only when has_near
    bool has_near = false;
    Permutation delta;
    bool holds = false;
};

// s_(delta, lambda) s_(eta, mu) against s_(delta|eta, lambda.mu) + s_(delta|eta, lambda(.)mu).
SchurProduct schur_product(const Permutation& delta, const IntegerPartition& lambda, const Permutation& eta,
                           const IntegerPartition& mu);
// s_pi s_sigma with delta_pi | delta_sigma.
SchurProduct schur_product(const SetPartition& pi, const SetPartition& sigma);

std::vector<NCSymExpr> permuted_basis(const Permutation& delta, int n);
// Rank of the h-coordinate vectors.
int rank_in_h(const std::vector<NCSymExpr>& family);

NCSymExpr specht_vector(const YoungTableau& t);
int specht_rank(const IntegerPartition& lambda);

// sum_nu nu! K^{lambda/mu}_nu sum_{lambda(pi) = nu} m_pi.
NCSymExpr rosas_sagan(const SkewShape& shape);
// Sum of s_(delta, lambda/mu) over all delta, in the m-basis.
NCSymExpr sum_over_delta(const SkewShape& shape);
bool rs_refinement_check(const SkewShape& shape);

struct LRExpansion {
    std::vector<std::pair<IntegerPartition, Integer>> terms;
    bool holds = false;
};

LRExpansion rs_lr_expand(const SkewShape& shape);

struct CoproductCheck {
    NCTensor lhs;
    NCTensor rhs;
    bool holds = false;
};

CoproductCheck rs_coproduct_check(const IntegerPartition& lambda, int i);

struct RibbonSource {
    NCSymExpr from_coarsenings;
    NCSymExpr from_determinant;
    bool agree = false;
};

RibbonSource ribbon_source(const Composition& alpha);

} // namespace ncsym
