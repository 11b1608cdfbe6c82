#include <doctest.h>

#include <set>

#include <ncsym/combinatorics.hpp>
#include <ncsym/io.hpp>

using namespace ncsym;

TEST_CASE("partition statistics")
{
    const auto st = partition_stats(IntegerPartition{3, 2, 2, 1});
    CHECK(st.factorial_product == 24);
    CHECK(st.multiplicity_factorial == 2);
    CHECK(st.transpose == IntegerPartition{4, 3, 1});
    CHECK(transpose(IntegerPartition{}) == IntegerPartition{});
    CHECK(IntegerPartition::from_parts({0, 1, 3, 0, 2}) == IntegerPartition{3, 2, 1});
}

TEST_CASE("enumeration counts")
{
    const int bell[] = {1, 1, 2, 5, 15, 52, 203};
    const int parts[] = {1, 1, 2, 3, 5, 7, 11};
    for (int n = 0; n <= 6; ++n) {
        CHECK(enumerate_set_partitions(n).size() == static_cast<std::size_t>(bell[n]));
        CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(parts[n]));
        if (n > 0) {
            CHECK(enumerate_compositions(n).size() == (std::size_t{1} << (n - 1)));
        }
    }
    CHECK(enumerate_permutations(4).size() == 24);
}

TEST_CASE("set partition lattice")
{
    const auto a = parse_set_partition("12/34");
    const auto b = parse_set_partition("13/24");
    CHECK(set_partition_meet(a, b) == SetPartition::minimum(4));
    CHECK(refinement_leq(SetPartition::minimum(4), a));
    CHECK(refinement_leq(a, SetPartition::maximum(4)));
    CHECK_FALSE(refinement_leq(a, b));
    CHECK(set_partition_sign(parse_set_partition("123/4")) == 1);
    CHECK(set_partition_sign(parse_set_partition("12/3/4")) == -1);
}

TEST_CASE("slash product and canonical partitions")
{
    CHECK(slash_product(parse_set_partition("134/25"), parse_set_partition("1/23")) ==
          parse_set_partition("134/25/6/78"));
    CHECK(canonical_partition(Composition{2, 1, 3}) == parse_set_partition("12/3/456"));
    CHECK(canonical_partition(WeakComposition{2, 0, 1}) == parse_set_partition("12/3"));
}

TEST_CASE("basis order is compatible with dominance")
{
    const auto all = enumerate_set_partitions(4);
    BasisOrderLess less;
    CHECK(less(parse_set_partition("1/2/3/4"), parse_set_partition("12/3/4")));
    CHECK(less(parse_set_partition("12/34"), parse_set_partition("123/4")));
    CHECK(less(parse_set_partition("123/4"), parse_set_partition("1234")));
    for (const auto& x : all) {
        CHECK_FALSE(less(x, x));
    }
}

TEST_CASE("permutations")
{
    const auto d = parse_permutation("231");
    CHECK(compose(d, d.inverse()).is_identity());
    CHECK(d.sign() == 1);
    CHECK(parse_permutation("213").sign() == -1);
    CHECK(shifted_concat(parse_permutation("13425"), parse_permutation("123")) == parse_permutation("13425678"));
    CHECK(compose(parse_permutation("213"), parse_permutation("132")) == parse_permutation("231"));
}

TEST_CASE("canonical tableau")
{
    const auto c = delta_pi(parse_set_partition("169/2/378/45"));
    CHECK(c.delta == parse_permutation("169378452"));
    CHECK(c.tableau.shape() == SkewShape(IntegerPartition{3, 3, 2, 1}));
    CHECK(delta_pi(parse_set_partition("13/2")).delta == parse_permutation("132"));
}

TEST_CASE("shape concatenation")
{
    CHECK(shape_concat({1}, {2, 1}, ConcatMode::concat) == parse_skew_shape("2.2.1/1"));
    CHECK(shape_concat({1}, {2, 1}, ConcatMode::near_concat) == parse_skew_shape("3.1"));
    CHECK(shape_concat({2, 1}, {1}, ConcatMode::concat) == parse_skew_shape("2.1.1"));
    CHECK(shape_concat({2, 1}, {1}, ConcatMode::near_concat) == parse_skew_shape("3.2/1"));
    CHECK(ribbon_shape(Composition{1, 2}) == parse_skew_shape("2.2/1"));
}

TEST_CASE("skew shapes have no empty rows or columns")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<SkewShape> seen;
        for (const auto& s : enumerate_skew_shapes(n)) {
            CHECK(s.size() == n);
            CHECK(seen.insert(s).second);
            for (int i = 0; i < s.rows(); ++i) {
                CHECK(s.row_length(i) > 0);
            }
            CHECK((s.inner().empty() || s.inner().length() < s.rows()));
        }
    }
    CHECK(enumerate_skew_shapes(1).size() == 1);
    CHECK(enumerate_skew_shapes(2).size() == 3); // 2, 11, 21/1
}

TEST_CASE("tableaux and Kostka numbers")
{
    CHECK(kostka(SkewShape({2, 1}), IntegerPartition{1, 1, 1}) == 2);
    CHECK(kostka(SkewShape({2, 2}, {1}), IntegerPartition{2, 1}) == 1);
    CHECK(count_standard_tableaux({3, 2}) == 5);
    CHECK(count_standard_tableaux({2, 2, 1}) == 5);
    CHECK(enumerate_young_tableaux(SkewShape({2, 1})).size() == 6);
    CHECK(enumerate_ssyt(SkewShape({2, 1}), 2).size() == 2);
    const YoungTableau t(SkewShape({2, 1}), {{1, 2}, {3}});
    CHECK(row_equivalence_class(t).size() == 2);
    CHECK(column_stabilizer(t).size() == 2);
}
