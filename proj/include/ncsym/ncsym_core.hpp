#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

#include <ncsym/combinatorics.hpp>
#include <ncsym/linear_combination.hpp>
#include <ncsym/ncpoly.hpp>
#include <ncsym/sym.hpp>

namespace ncsym {

// st is the transposed Schur basis; tabloid is indexed by the set partition
// whose blocks are the rows of the tabloid.
enum class Basis { m, p, e, h, s, st, tabloid };

using SetPartitionTerms = LinearCombination<SetPartition, BasisOrderLess>;

struct NCSymExpr {
    Basis basis = Basis::m;
    SetPartitionTerms terms;

    static NCSymExpr single(Basis basis, const SetPartition& pi, const Rational& coeff = 1);
    static NCSymExpr one(Basis basis = Basis::h) { return single(basis, SetPartition{}); }
    bool is_zero() const noexcept { return terms.empty(); }
    // Degree of the terms; -1 for zero. Throws when the terms have mixed degrees.
    int degree() const;

    // Both operands must share a basis unless one of them is zero.
    NCSymExpr& operator+=(const NCSymExpr& other);
    NCSymExpr& operator-=(const NCSymExpr& other);
    NCSymExpr& operator*=(const Rational& s);
    friend NCSymExpr operator+(NCSymExpr a, const NCSymExpr& b) { return a += b; }
    friend NCSymExpr operator-(NCSymExpr a, const NCSymExpr& b) { return a -= b; }
    friend NCSymExpr operator*(const Rational& s, NCSymExpr a) { return a *= s; }
    friend bool operator==(const NCSymExpr&, const NCSymExpr&) = default;
};

std::string basis_name(Basis b);

// Brute-force expansion in x_1..x_k; the Schur-type bases are routed through h.
// Throws degree_guard_error above degree 8.
NCPolynomial oracle_expand(const NCSymExpr& f, int k);
inline constexpr int oracle_max_degree = 8;

// Integer word counts of a single basis element (m, p, e or h); words are
// packed four bits per letter, first letter most significant, so k <= 15.
using WordCounts = std::unordered_map<std::uint64_t, long long>;
WordCounts oracle_counts(Basis b, const SetPartition& pi, int k);
std::uint64_t pack_word(const Word& w);
Word unpack_word(std::uint64_t code, int length);

NCSymExpr to_m(const NCSymExpr& f);
// target in {m, p, e, h}.
NCSymExpr from_m(const NCSymExpr& f, Basis target);
// Any basis to any basis.
NCSymExpr convert(const NCSymExpr& f, Basis target);

// Result is in the basis of f.
NCSymExpr product(const NCSymExpr& f, const NCSymExpr& g);
NCSymExpr omega(const NCSymExpr& f);
NCSymExpr delta_action(const Permutation& delta, const NCSymExpr& f);
SymExpr rho(const NCSymExpr& f);

// Elements of NCSym (x) NCSym in the basis m (x) m.
using NCTensor = LinearCombination<std::pair<SetPartition, SetPartition>>;

NCTensor coproduct(const NCSymExpr& f, int i);
NCTensor tensor_product(const NCSymExpr& a, const NCSymExpr& b);

// Order-preserving relabelling of a family of disjoint sets onto 1..n.
SetPartition standardize(std::vector<std::vector<int>> blocks);

} // namespace ncsym
