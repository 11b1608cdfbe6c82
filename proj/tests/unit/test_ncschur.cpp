#include <doctest.h>

#include <ncsym/io.hpp>
#include <ncsym/ncschur.hpp>

using namespace ncsym;

TEST_CASE("source Schur functions")
{
    CHECK(source_skew_schur(parse_skew_shape("2.1")) == parse_ncsym_expr("1/2 h[12/3] - 1/6 h[123]"));
    CHECK(source_skew_schur(parse_skew_shape("2.2/1")) == parse_ncsym_expr("1/2 h[1/23] - 1/6 h[123]"));
    CHECK(source_skew_schur(parse_skew_shape("1")) == parse_ncsym_expr("h[1]"));
    CHECK(source_skew_schur(parse_skew_shape("1.1")) == parse_ncsym_expr("h[1/2] - 1/2 h[12]"));
}

TEST_CASE("standard Schur functions")
{
    CHECK(standard_schur(parse_set_partition("12/3")) == parse_ncsym_expr("1/2 h[12/3] - 1/6 h[123]"));
    CHECK(standard_schur(parse_set_partition("13/2")) == parse_ncsym_expr("1/2 h[13/2] - 1/6 h[123]"));
    const auto t = schur_transition(4);
    CHECK(t.upper_triangular);
    CHECK(t.normalized_determinant == 1);
}

TEST_CASE("tabloid Schur functions")
{
    const YoungTableau t(SkewShape({2, 1}), {{1, 2}, {3}});
    const YoungTableau u(SkewShape({2, 1}), {{2, 1}, {3}});
    CHECK(tabloid_schur(t) == tabloid_schur(u));
    CHECK(tabloid_schur(t) == tabloid_schur(parse_set_partition("12/3")));
    // rho(s_[t]) = sh(t)! s_sh(t)
    CHECK(sym_convert(rho(tabloid_schur(t)), SymBasis::s) == SymExpr::single(SymBasis::s, {2, 1}, 2));
}

TEST_CASE("products of source Schur functions")
{
    const auto r = schur_product(Permutation::identity(1), {1}, Permutation::identity(3), {2, 1});
    CHECK(r.holds);
    CHECK(r.concat_shape == parse_skew_shape("2.2.1/1"));
    CHECK(r.near_shape == parse_skew_shape("3.1"));
    CHECK(schur_product(parse_set_partition("1/2"), parse_set_partition("12")).holds);
}

TEST_CASE("Rosas-Sagan functions")
{
    // S_{21} = 2 (m_12/3 + m_13/2 + m_1/23) + 2 m_1/2/3
    CHECK(rosas_sagan(parse_skew_shape("2.1")) ==
          parse_ncsym_expr("2 m[12/3] + 2 m[13/2] + 2 m[1/23] + 2 m[1/2/3]"));
    CHECK(rs_refinement_check(parse_skew_shape("2.2/1")));
    const auto lr = rs_lr_expand(parse_skew_shape("2.1/1"));
    CHECK(lr.holds);
    CHECK(lr.terms.size() == 2);
    CHECK(rs_coproduct_check({2, 1}, 1).holds);
    CHECK(ribbon_source(Composition{2, 1, 1}).agree);
}

TEST_CASE("permuted bases and Specht vectors")
{
    const auto family = permuted_basis(parse_permutation("2134"), 4);
    CHECK(family.size() == 15);
    CHECK(rank_in_h(family) == 15);
    CHECK(specht_rank({2, 1}) == 2);
    CHECK(specht_rank({1, 1}) == 0);
}
