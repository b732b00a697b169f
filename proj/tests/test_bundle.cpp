#include "ccforge/bundle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace ccforge;

namespace {

/// Fresh one-generator ring and the line bundle living on it.
FormalBundle line_bundle(int order) { return FormalBundle::atomic("x", 1, order); }

GradedSeries x_of(const FormalBundle& line) { return line.chern_class(1); }

}  // namespace

TEST_SUITE("bundle") {

TEST_CASE("chern character of a line bundle is exp") {
    const auto l = line_bundle(3);
    const auto x = x_of(l);
    CHECK(chern_character(l).ch == x.exp());
    CHECK(chern_character(l).rank == 1);
}

TEST_CASE("chern character of rank 2 via newton") {
    const auto e = FormalBundle::atomic("c", 2, 3);
    const auto c1 = e.chern_class(1);
    const auto c2 = e.chern_class(2);
    const auto expected = GradedSeries::constant(e.table(), 3, Rat(2)) + c1 +
                          Rat::of(1, 2) * (c1.pow(2) - Rat(2) * c2) +
                          Rat::of(1, 6) * (c1.pow(3) - Rat(3) * (c1 * c2));
    CHECK(chern_character(e).ch == expected);
}

TEST_CASE("chern character of the zero bundle") {
    const auto table = make_table({{"x", 1}});
    const auto zero = FormalBundle::trivial(table, 4, 0);
    CHECK(chern_character(zero).rank == 0);
    CHECK(chern_character(zero).ch.is_zero());
}

TEST_CASE("todd inverse of a line bundle: alternating factorial profile") {
    const auto l = line_bundle(4);
    const auto x = x_of(l);
    GradedSeries expected = GradedSeries::one(l.table(), 4) - Rat::of(1, 2) * x;
    expected.add_term({2}, Rat::of(1, 6));
    expected.add_term({3}, Rat::of(-1, 24));
    expected.add_term({4}, Rat::of(1, 120));
    CHECK(todd_inverse(l) == expected);
}

TEST_CASE("todd of a line bundle by series inversion of the inverse") {
    const auto l = line_bundle(4);
    // Oracle route: invert the inverse-Todd profile as a 1-variable series.
    const auto td_profile = todd_inverse_profile(4).invert();
    CHECK(todd(l) == substitute(td_profile, x_of(l)));
    // Frozen expansion 1 + x/2 + x^2/12 + 0 x^3 - x^4/720.
    GradedSeries expected = GradedSeries::one(l.table(), 4) + Rat::of(1, 2) * x_of(l);
    expected.add_term({2}, Rat::of(1, 12));
    expected.add_term({4}, Rat::of(-1, 720));
    CHECK(todd(l) == expected);
    CHECK(todd(l) * todd_inverse(l) == GradedSeries::one(l.table(), 4));
}

TEST_CASE("todd of a trivial bundle is 1") {
    const auto table = make_table({{"x", 1}});
    const auto t3 = FormalBundle::trivial(table, 6, 3);
    CHECK(todd(t3) == GradedSeries::one(table, 6));
    CHECK(todd_inverse(t3) == GradedSeries::one(table, 6));
}

TEST_CASE("total and top chern") {
    const auto l = line_bundle(4);
    CHECK(top_chern(l) == x_of(l));
    const auto e = FormalBundle::atomic("c", 2, 4);
    CHECK(total_chern(e) ==
          GradedSeries::one(e.table(), 4) + e.chern_class(1) + e.chern_class(2));
    // Whitney on a sum of two lines.
    const auto lines = FormalBundle::atomic_family({{"x", 1}, {"y", 1}}, 4);
    const auto sum = direct_sum(lines[0], lines[1]);
    const auto x1 = lines[0].chern_class(1);
    const auto x2 = lines[1].chern_class(1);
    CHECK(total_chern(sum) ==
          (GradedSeries::one(sum.table(), 4) + x1) *
              (GradedSeries::one(sum.table(), 4) + x2));
    CHECK(sum.chern_class(2) == x1 * x2);
}

TEST_CASE("dual, sum, line twist") {
    const auto l = line_bundle(4);
    CHECK(dual(l).chern_class(1) == -x_of(l));

    const auto lines = FormalBundle::atomic_family({{"x", 1}, {"y", 1}}, 4);
    CHECK(tensor_line(lines[0], lines[1]).chern_class(1) ==
          lines[0].chern_class(1) + lines[1].chern_class(1));
}

TEST_CASE("exterior powers") {
    const auto e = FormalBundle::atomic("c", 2, 5);
    CHECK(exterior_power_ch(e, 0).ch == GradedSeries::one(e.table(), 5));
    CHECK(exterior_power_ch(e, 0).rank == 1);
    // Lambda^2 of rank 2 is the determinant line: ch = e^{c1}.
    CHECK(exterior_power_ch(e, 2).ch == e.chern_class(1).exp());
    CHECK(exterior_power_ch(e, 1).ch == chern_character(e).ch);
    CHECK(exterior_power_ch(e, 3).ch.is_zero());
    CHECK(exterior_power_ch(e, 3).rank == 0);
}

TEST_CASE("koszul alternating sum, rank 1") {
    const auto l = line_bundle(5);
    const auto x = x_of(l);
    CHECK(koszul_alternating_ch(l).ch ==
          GradedSeries::one(l.table(), 5) - (-x).exp());
    // Trivial line: the alternating sum collapses to zero.
    const auto t1 = FormalBundle::trivial(make_table({{"x", 1}}), 5, 1);
    CHECK(koszul_alternating_ch(t1).ch.is_zero());
}

TEST_CASE("borel-serre identity, small ranks") {
    for (int r = 1; r <= 3; ++r) {
        const auto e = FormalBundle::atomic("c", r, 6);
        CHECK(koszul_alternating_ch(e).ch == top_chern(e) * todd_inverse(e));
    }
}

TEST_CASE("genus evaluation") {
    const OneVarSeries xprofile({Rat(0), Rat(1)}, true);
    const auto e = FormalBundle::atomic("c", 3, 5);
    CHECK(genus_evaluate(Genus::additive(xprofile), e) == e.chern_class(1));

    const auto l = line_bundle(5);
    CHECK(genus_evaluate(Genus::multiplicative(todd_profile(5)), l) == todd(l));

    const OneVarSeries x2profile({Rat(0), Rat(0), Rat(1)}, true);
    const auto e2 = FormalBundle::atomic("c", 2, 5);
    CHECK(genus_evaluate(Genus::additive(x2profile), e2) ==
          e2.chern_class(1).pow(2) - Rat(2) * e2.chern_class(2));

    OneVarSeries not_unital({Rat(0), Rat(1)});
    CHECK_THROWS_AS(Genus::multiplicative(not_unital), std::invalid_argument);
}

TEST_CASE("whitney additivity and multiplicativity") {
    for (int ra = 1; ra <= 3; ++ra) {
        for (int rb = 1; rb <= 2; ++rb) {
            const auto family =
                FormalBundle::atomic_family({{"a", ra}, {"b", rb}}, 6);
            const auto sum = direct_sum(family[0], family[1]);
            CHECK(chern_character(sum).ch ==
                  chern_character(family[0]).ch + chern_character(family[1]).ch);
            CHECK(todd(sum) == todd(family[0]) * todd(family[1]));
        }
    }
}

TEST_CASE("duality negates odd components of ch") {
    const auto e = FormalBundle::atomic("c", 3, 6);
    const auto ch = chern_character(e).ch;
    const auto chd = chern_character(dual(e)).ch;
    for (int w = 0; w <= 6; ++w) {
        const auto part = ch.homogeneous_part(w);
        CHECK(chd.homogeneous_part(w) == (w % 2 == 0 ? part : -part));
    }
}

TEST_CASE("line twist is exponential on ch") {
    const auto family = FormalBundle::atomic_family({{"a", 2}, {"l", 1}}, 6);
    const auto twisted = tensor_line(family[0], family[1]);
    CHECK(chern_character(twisted).ch ==
          chern_character(family[0]).ch * family[1].chern_class(1).exp());
}

TEST_CASE("genus additivity and multiplicativity under direct sum") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> add_coeffs, mult_coeffs;
        for (int k = 0; k <= 6; ++k) add_coeffs.push_back(Rat::of(coeff(rng), 1 + trial));
        mult_coeffs.push_back(Rat(1));
        for (int k = 1; k <= 6; ++k) mult_coeffs.push_back(Rat::of(coeff(rng), 2 + trial));
        const Genus add = Genus::additive(OneVarSeries(add_coeffs, true));
        const Genus mult = Genus::multiplicative(OneVarSeries(mult_coeffs, true));

        const auto family = FormalBundle::atomic_family({{"a", 2}, {"b", 2}}, 6);
        const auto sum = direct_sum(family[0], family[1]);
        CHECK(genus_evaluate(add, sum) ==
              genus_evaluate(add, family[0]) + genus_evaluate(add, family[1]));
        CHECK(genus_evaluate(mult, sum) ==
              genus_evaluate(mult, family[0]) * genus_evaluate(mult, family[1]));
    }
}

TEST_CASE("rank cap is enforced") {
    CHECK_THROWS_AS(FormalBundle::atomic("c", 9, 4), std::invalid_argument);
    CHECK_NOTHROW(FormalBundle::atomic("c", 9, 4, /*rank_cap=*/9));
}

}  // TEST_SUITE
