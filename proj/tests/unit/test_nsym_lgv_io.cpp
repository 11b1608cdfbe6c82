#include <doctest.h>

#include <json.hpp>

#include <ncsym/errors.hpp>
#include <ncsym/io.hpp>
#include <ncsym/lgv.hpp>
#include <ncsym/ncschur.hpp>
#include <ncsym/nsym.hpp>

using namespace ncsym;

TEST_CASE("NSym bases")
{
    CHECK(ribbon_to_H(Composition{1, 2}) == parse_nsym_expr("H[1.2] - H[3]"));
    CHECK(immaculate_to_H(Composition{1, 1}) == parse_nsym_expr("H[1.1] - H[2]"));
    const auto r = NSymExpr::single(NSymBasis::R, Composition{2, 1});
    CHECK(nsym_convert(nsym_convert(r, NSymBasis::H), NSymBasis::R) == r);
    CHECK(nsym_product(parse_nsym_expr("H[1]"), parse_nsym_expr("H[2]")) == parse_nsym_expr("H[1.2]"));
    CHECK(iota(parse_nsym_expr("H[2.1]")) == parse_ncsym_expr("1/2 h[12/3]"));
    CHECK(chi(parse_nsym_expr("H[1.2]")) == SymExpr::single(SymBasis::h, {2, 1}));
    CHECK(iota(NSymExpr::single(NSymBasis::Immaculate, Composition{2, 1})) ==
          source_skew_schur(SkewShape({2, 1})));
}

TEST_CASE("LGV paths")
{
    PathTuple p;
    p.shape = parse_skew_shape("3.3.2/1.1");
    p.epsilon = parse_permutation("213");
    p.paths = {LatticePath{-1, {2, 2, 3}}, LatticePath{0, {3}}, LatticePath{-3, {1, 3}}};
    CHECK(has_intersection(p));
    CHECK(sign(p) == -1);
    CHECK(label_heights(p) == std::vector<int>{2, 2, 3, 3, 1, 3});
    const auto swap = lgv_swap(p);
    CHECK(swap.xi == parse_permutation("342156"));
    CHECK(lgv_swap(swap.image).image == p);
    CHECK(monomial(parse_permutation("315462"), p) == Word{3, 2, 1, 3, 3, 2});
    CHECK(dump(p) == "-1: 2,2,3\n0: 3\n-3: 1,3\n");

    const auto cert = fixed_points_to_ssyt(SkewShape({2, 1}), 3);
    CHECK(cert.bijective);
    CHECK(cert.path_count == 8);
}

TEST_CASE("index parsing")
{
    CHECK(format(parse_set_partition("134/25")) == "134/25");
    CHECK(parse_set_partition("1,10/2,3,4,5,6,7,8,9").size() == 10);
    CHECK(parse_partition("3.2.2.1") == IntegerPartition{3, 2, 2, 1});
    CHECK(parse_partition("3221") == IntegerPartition{3, 2, 2, 1});
    CHECK(parse_skew_shape("3.3.2/1.1") == SkewShape({3, 3, 2}, {1, 1}));
    CHECK(parse_basis("s^t") == Basis::st);
    try {
        (void)parse_set_partition("12/2");
        FAIL("no error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 3);
    }
    try {
        (void)parse_set_partition("1/3");
        FAIL("no error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_partition("2.x"), parse_error);
    CHECK_THROWS_AS(parse_permutation("122"), parse_error);
    CHECK_THROWS_AS(parse_ncsym_expr("h[12] + m[1/2]"), parse_error);
}

TEST_CASE("expression printing and JSON")
{
    const auto f = parse_ncsym_expr("-1/6 h[123] + 1/2 h[13/2]");
    CHECK(format(f) == "1/2 h[13/2] - 1/6 h[123]");
    CHECK(format(NCSymExpr{}) == "0");
    const auto j = nlohmann::json::parse(to_json(f));
    CHECK(j["basis"] == "h");
    CHECK(ncsym_expr_from_json(to_json(f)) == f);
    CHECK(format(Word{1, 2}) == "x1x2");
}
