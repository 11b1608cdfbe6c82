#include <doctest.h>

#include <random>

#include <ncsym/errors.hpp>
#include <ncsym/io.hpp>
#include <ncsym/ncsym_core.hpp>

using namespace ncsym;

namespace {

// m-expansion from the defining sums.
NCSymExpr m_expansion(Basis b, const SetPartition& pi)
{
    NCSymExpr out;
    out.basis = Basis::m;
    const auto bottom = SetPartition::minimum(pi.size());
    for (const auto& sigma : enumerate_set_partitions(pi.size())) {
        const auto meet = set_partition_meet(sigma, pi);
        Rational c = 0;
        if (b == Basis::p) {
            c = refinement_leq(pi, sigma) ? 1 : 0;
        } else if (b == Basis::e) {
            c = meet == bottom ? 1 : 0;
        } else {
            c = Rational(factorial_product(meet.shape()));
        }
        out.terms.add(sigma, c);
    }
    return out;
}

} // namespace

TEST_CASE("m-expansions match the defining sums")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& pi : enumerate_set_partitions(n)) {
            for (Basis b : {Basis::p, Basis::e, Basis::h}) {
                CHECK(to_m(NCSymExpr::single(b, pi)) == m_expansion(b, pi));
            }
        }
    }
    CHECK(to_m(parse_ncsym_expr("h[13/2]")) ==
          parse_ncsym_expr("2 m[123] + m[12/3] + m[1/23] + 2 m[13/2] + m[1/2/3]"));
}

TEST_CASE("basis changes round trip")
{
    for (const auto& pi : enumerate_set_partitions(4)) {
        for (Basis from : {Basis::m, Basis::p, Basis::e, Basis::h, Basis::s, Basis::st, Basis::tabloid}) {
            const auto f = NCSymExpr::single(from, pi);
            for (Basis to : {Basis::m, Basis::p, Basis::e, Basis::h, Basis::s}) {
                CHECK(convert(convert(f, to), from) == f);
            }
        }
    }
}

TEST_CASE("products index by slash product")
{
    const auto pi = parse_set_partition("13/2");
    const auto sigma = parse_set_partition("12");
    for (Basis b : {Basis::p, Basis::e, Basis::h}) {
        CHECK(product(NCSymExpr::single(b, pi), NCSymExpr::single(b, sigma)) ==
              NCSymExpr::single(b, parse_set_partition("13/2/45")));
    }
    // m_1 m_1 = m_12 + m_1/2.
    CHECK(product(parse_ncsym_expr("m[1]"), parse_ncsym_expr("m[1]")) == parse_ncsym_expr("m[12] + m[1/2]"));
    CHECK(product(NCSymExpr::one(Basis::h), parse_ncsym_expr("h[12]")) == parse_ncsym_expr("h[12]"));
}

TEST_CASE("omega, rho and the delta action")
{
    for (const auto& pi : enumerate_set_partitions(4)) {
        const auto h = NCSymExpr::single(Basis::h, pi);
        CHECK(omega(h) == NCSymExpr::single(Basis::e, pi));
        CHECK(convert(omega(omega(to_m(h))), Basis::h) == h);
        // rho(h_pi) = lambda! h_lambda
        CHECK(rho(h) == SymExpr::single(SymBasis::h, pi.shape(), Rational(factorial_product(pi.shape()))));
    }
    const auto d = parse_permutation("132");
    CHECK(delta_action(d, parse_ncsym_expr("h[12/3]")) == parse_ncsym_expr("h[13/2]"));
    CHECK(delta_action(Permutation::identity(3), parse_ncsym_expr("m[1/23]")) == parse_ncsym_expr("m[1/23]"));
    CHECK_THROWS(delta_action(parse_permutation("21"), parse_ncsym_expr("h[123]")));
}

TEST_CASE("oracle agrees with the m-expansion")
{
    for (const auto& pi : enumerate_set_partitions(3)) {
        for (Basis b : {Basis::m, Basis::p, Basis::e, Basis::h}) {
            const auto f = NCSymExpr::single(b, pi);
            CHECK(oracle_expand(f, 3) == oracle_expand(to_m(f), 3));
        }
    }
    CHECK_THROWS_AS(oracle_expand(NCSymExpr::single(Basis::m, SetPartition::maximum(9)), 2), degree_guard_error);
    const Word w{3, 1, 2, 2};
    CHECK(unpack_word(pack_word(w), 4) == w);
}

TEST_CASE("coproduct")
{
    const auto t = coproduct(parse_ncsym_expr("m[1/2]"), 1);
    CHECK(t.coefficient({parse_set_partition("1"), parse_set_partition("1")}) == 2);
    const auto whole = coproduct(parse_ncsym_expr("m[13/2]"), 3);
    CHECK(whole.coefficient({parse_set_partition("13/2"), SetPartition{}}) == 1);
    CHECK(standardize({{4, 9}, {5}}) == parse_set_partition("13/2"));
}
