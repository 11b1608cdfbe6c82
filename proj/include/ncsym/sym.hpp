#pragma once

#include <ncsym/combinatorics.hpp>
#include <ncsym/linear_combination.hpp>
#include <ncsym/ncpoly.hpp>

namespace ncsym {

enum class SymBasis { m, p, e, h, s };

using PartitionTerms = LinearCombination<IntegerPartition, PartitionOrderLess>;

// Element of Sym written in a single basis.
struct SymExpr {
    SymBasis basis = SymBasis::m;
    PartitionTerms terms;

    static SymExpr single(SymBasis basis, const IntegerPartition& lambda, const Rational& coeff = 1);
    bool is_zero() const noexcept { return terms.empty(); }

    // Both operands must share a basis; throws basis_mismatch otherwise.
    SymExpr& operator+=(const SymExpr& other);
    SymExpr& operator-=(const SymExpr& other);
    SymExpr& operator*=(const Rational& s);
    friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
    friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
    friend SymExpr operator*(const Rational& s, SymExpr a) { return a *= s; }
    friend bool operator==(const SymExpr&, const SymExpr&) = default;
};

char basis_letter(SymBasis b);

SymExpr sym_to_m(const SymExpr& f);
SymExpr sym_convert(const SymExpr& f, SymBasis target);
// Result is in the basis of f.
SymExpr sym_product(const SymExpr& f, const SymExpr& g);
SymExpr sym_omega(const SymExpr& f);

enum class JTFlavor { h, e };

// s_{lambda/mu} as a determinant in h (or, dually, in e with transposed shapes).
SymExpr jacobi_trudi(const SkewShape& shape, JTFlavor flavor);
// s_{lambda/mu} in the requested basis.
SymExpr skew_schur(const SkewShape& shape, SymBasis target = SymBasis::s);
// Coefficient of s_nu in s_{lambda/mu}; 0 when the sizes are incompatible.
Integer littlewood_richardson(const IntegerPartition& lambda, const IntegerPartition& mu,
                              const IntegerPartition& nu);

// Truncation to x_1..x_k.
CPolynomial sym_truncate(const SymExpr& f, int k);

} // namespace ncsym
