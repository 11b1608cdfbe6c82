#include <doctest.h>

#include <ncsym/errors.hpp>
#include <ncsym/io.hpp>
#include <ncsym/ncpoly.hpp>
#include <ncsym/sym.hpp>

using namespace ncsym;

TEST_CASE("noncommutative polynomials")
{
    const auto x1 = NCPolynomial::monomial(2, {1});
    const auto x2 = NCPolynomial::monomial(2, {2});
    CHECK_FALSE(x1 * x2 == x2 * x1);
    CHECK((x1 + x2) * (x1 + x2) == x1 * x1 + x1 * x2 + x2 * x1 + x2 * x2);
    CHECK((x1 - x1).is_zero());
    CHECK(nc_scale(x1, 0).is_zero());
    CHECK_THROWS_AS((void)(x1 == NCPolynomial::monomial(3, {1})), size_mismatch);
    const auto image = commutative_image(x1 * x2 - x2 * x1);
    CHECK(image.terms().empty());
}

TEST_CASE("Sym basis changes")
{
    const auto s21 = SymExpr::single(SymBasis::s, {2, 1});
    auto h = SymExpr::single(SymBasis::h, {2, 1});
    h -= SymExpr::single(SymBasis::h, {3});
    CHECK(sym_convert(s21, SymBasis::h) == h);
    CHECK(jacobi_trudi(SkewShape({2, 2}, {1}), JTFlavor::h) == h);
    CHECK(jacobi_trudi(SkewShape({2, 1}), JTFlavor::e) == sym_convert(s21, SymBasis::e));
    // e_2 = m_11, h_2 = m_2 + m_11
    CHECK(sym_to_m(SymExpr::single(SymBasis::e, {2})) == SymExpr::single(SymBasis::m, {1, 1}));
    CHECK(sym_to_m(SymExpr::single(SymBasis::h, {2})) ==
          SymExpr::single(SymBasis::m, {2}) + SymExpr::single(SymBasis::m, {1, 1}));
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto s = SymExpr::single(SymBasis::s, lambda);
            CHECK(sym_convert(sym_omega(s), SymBasis::s) == SymExpr::single(SymBasis::s, transpose(lambda)));
            for (SymBasis b : {SymBasis::m, SymBasis::p, SymBasis::e, SymBasis::h}) {
                CHECK(sym_convert(sym_convert(s, b), SymBasis::s) == s);
            }
        }
    }
}

TEST_CASE("Littlewood-Richardson coefficients")
{
    CHECK(littlewood_richardson({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    CHECK(littlewood_richardson({2, 1}, {1}, {2}) == 1);
    CHECK(littlewood_richardson({2, 1}, {1}, {3}) == 0);
    const auto prod = sym_product(SymExpr::single(SymBasis::s, {1}), SymExpr::single(SymBasis::s, {1}));
    CHECK(prod == SymExpr::single(SymBasis::s, {2}) + SymExpr::single(SymBasis::s, {1, 1}));
}

TEST_CASE("truncation counts monomials")
{
    // h_2 in two variables: x1^2 + x1 x2 + x2^2.
    const auto t = sym_truncate(SymExpr::single(SymBasis::h, {2}), 2);
    CHECK(t.terms().size() == 3);
    CHECK(t.coefficient({1, 1}) == 1);
}
