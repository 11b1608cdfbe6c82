#pragma once

#include <ncsym/combinatorics.hpp>
#include <ncsym/linear_combination.hpp>
#include <ncsym/ncsym_core.hpp>
#include <ncsym/sym.hpp>

namespace ncsym {

enum class NSymBasis { H, R, Immaculate };

using CompositionTerms = LinearCombination<Composition, CompositionOrderLess>;

struct NSymExpr {
    NSymBasis basis = NSymBasis::H;
    CompositionTerms terms;

    static NSymExpr single(NSymBasis basis, const Composition& alpha, const Rational& coeff = 1);
    bool is_zero() const noexcept { return terms.empty(); }

    NSymExpr& operator+=(const NSymExpr& other);
    NSymExpr& operator-=(const NSymExpr& other);
    NSymExpr& operator*=(const Rational& s);
    friend NSymExpr operator+(NSymExpr a, const NSymExpr& b) { return a += b; }
    friend NSymExpr operator-(NSymExpr a, const NSymExpr& b) { return a -= b; }
    friend NSymExpr operator*(const Rational& s, NSymExpr a) { return a *= s; }
    friend bool operator==(const NSymExpr&, const NSymExpr&) = default;
};

std::string basis_name(NSymBasis b);

NSymExpr ribbon_to_H(const Composition& alpha);
NSymExpr immaculate_to_H(const Composition& alpha);
NSymExpr nsym_to_H(const NSymExpr& f);
NSymExpr nsym_convert(const NSymExpr& f, NSymBasis target);
// Result is in the basis of f.
NSymExpr nsym_product(const NSymExpr& f, const NSymExpr& g);

// H_alpha -> (1/alpha!) h_[alpha], as an h-basis element of NCSym.
NCSymExpr iota(const NSymExpr& f);
// H_alpha -> h_lambda(alpha).
SymExpr chi(const NSymExpr& f);

} // namespace ncsym
