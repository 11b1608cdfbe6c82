#pragma once

#include <string>
#include <string_view>

#include <ncsym/combinatorics.hpp>
#include <ncsym/lgv.hpp>
#include <ncsym/ncpoly.hpp>
#include <ncsym/ncsym_core.hpp>
#include <ncsym/nsym.hpp>
#include <ncsym/sym.hpp>

namespace ncsym {

// All parsers throw parse_error carrying the offending character offset.

// "134/25/6/78"; blocks may use commas ("1,10/2,...") and must when n >= 10.
SetPartition parse_set_partition(std::string_view text);
// "3.2.2.1", or "3221" when every part is a single digit; "" is the empty partition.
IntegerPartition parse_partition(std::string_view text);
Composition parse_composition(std::string_view text);
// "1,6,9,3,7,8,4,5,2" or a digit string when n <= 9.
Permutation parse_permutation(std::string_view text);
// "3.2.2.1/2.1"; a missing inner part means a straight shape.
SkewShape parse_skew_shape(std::string_view text);
// Rows separated by '/', entries as in set partitions: "12/3".
YoungTableau parse_tableau(std::string_view text);
Basis parse_basis(std::string_view text);
SymBasis parse_sym_basis(std::string_view text);
NSymBasis parse_nsym_basis(std::string_view text);
// "1/2 h[13/2] - 1/6 h[123]"; all terms must share one basis.
NCSymExpr parse_ncsym_expr(std::string_view text);
NSymExpr parse_nsym_expr(std::string_view text);
NCSymExpr ncsym_expr_from_json(std::string_view text);

std::string format(const SetPartition& pi);
std::string format(const IntegerPartition& lambda);
std::string format(const Composition& alpha);
std::string format(const Permutation& delta);
std::string format(const SkewShape& shape);
std::string format(const YoungTableau& t);
std::string format(const Word& w);

std::string format(const NCSymExpr& f);
std::string format(const SymExpr& f);
std::string format(const NSymExpr& f);
std::string format(const NCPolynomial& p);
std::string format(const NCTensor& t);

std::string to_json(const NCSymExpr& f);
std::string to_json(const SymExpr& f);
std::string to_json(const NSymExpr& f);
std::string to_json(const NCPolynomial& p);
std::string to_json(const NCTensor& t);

} // namespace ncsym
