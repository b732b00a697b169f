#include "ccforge/proj_completion.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace ccforge;
using ccforge::testing::random_series;

namespace {

ProjCompletion line_completion(int order) {
    return ProjCompletion(FormalBundle::atomic("a", 1, order));
}

}  // namespace

TEST_SUITE("proj-completion") {

TEST_CASE("rank 1 relation: xi^2 reduces to -c1 xi") {
    const auto pc = line_completion(6);
    const auto xi = pc.xi();
    const auto a = pc.pullback(pc.normal_bundle().chern_class(1));
    CHECK(pc.reduce(xi * xi) == -(a * xi));
    // Reduction is idempotent.
    CHECK(pc.reduce(pc.reduce(xi * xi)) == pc.reduce(xi * xi));
}

TEST_CASE("rank 1 tautological quotient: c1(Q) = c1(L) + xi") {
    const auto pc = line_completion(6);
    const auto q = pc.tautological_quotient();
    CHECK(q.chern_class(1) ==
          pc.pullback(pc.normal_bundle().chern_class(1)) + pc.xi());
}

TEST_CASE("quotient rank and whitney relation") {
    for (int r = 1; r <= 3; ++r) {
        const auto pc = ProjCompletion(FormalBundle::atomic("a", r, 6));
        const auto q = pc.tautological_quotient();
        CHECK(chern_character(q).rank == r);
        CHECK(pc.reduce(chern_character(q).ch).constant_term() == Rat(r));
        // total_chern(Q) (1 - xi) = pullback(total_chern(N)) after reduction.
        const auto lhs =
            pc.reduce(total_chern(q) * (GradedSeries::one(pc.total_table(), 6) - pc.xi()));
        CHECK(lhs == pc.pullback(total_chern(pc.normal_bundle())));
    }
}

TEST_CASE("build contract: ch(Q) = ch(N) + 1 - exp(-xi) after reduction") {
    for (int r = 1; r <= 3; ++r) {
        const auto pc = ProjCompletion(FormalBundle::atomic("a", r, 6));
        const auto q = pc.tautological_quotient();
        const auto expected =
            pc.pullback(chern_character(pc.normal_bundle()).ch) +
            GradedSeries::one(pc.total_table(), 6) - (-pc.xi()).exp();
        CHECK(pc.reduce(chern_character(q).ch) == pc.reduce(expected));
    }
}

TEST_CASE("pushforward normalization and degree drop") {
    for (int r = 1; r <= 3; ++r) {
        const auto pc = ProjCompletion(FormalBundle::atomic("a", r, 6));
        CHECK(pc.pushforward(pc.xi().pow(r)) ==
              GradedSeries::one(pc.base_table(), 6));
        CHECK(pc.pushforward(GradedSeries::one(pc.total_table(), 6)).is_zero());
        for (int i = 1; i < r; ++i) CHECK(pc.pushforward(pc.xi().pow(i)).is_zero());
    }
}

TEST_CASE("pushforward of an unreduced power uses the segre rule") {
    const auto pc = line_completion(6);
    const auto c1 = pc.normal_bundle().chern_class(1);
    // Unreduced xi^2 pushes to s_1(N) = -c1; reducing first gives the same.
    CHECK(pc.pushforward(pc.xi().pow(2)) == -c1);
    CHECK(pc.pushforward(pc.reduce(pc.xi().pow(2))) == -c1);
}

TEST_CASE("pushforward commutes with reduction on random input") {
    std::mt19937 rng(311);
    for (int r = 1; r <= 3; ++r) {
        const auto pc = ProjCompletion(FormalBundle::atomic("a", r, 6));
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = random_series(rng, pc.total_table(), 6, 8);
            CHECK(pc.pushforward(s) == pc.pushforward(pc.reduce(s)));
        }
    }
}

TEST_CASE("zero section") {
    const auto pc = ProjCompletion(FormalBundle::atomic("a", 2, 6));
    const auto one = GradedSeries::one(pc.base_table(), 6);
    CHECK(pc.zero_section_pushforward(one) ==
          pc.reduce(top_chern(pc.tautological_quotient())));
    CHECK(pc.zero_section_pushforward(GradedSeries::zero(pc.base_table(), 6)).is_zero());
}

TEST_CASE("pushforward of zero-section pushforward is the identity") {
    std::mt19937 rng(1209);
    for (int r = 1; r <= 3; ++r) {
        const auto pc = ProjCompletion(FormalBundle::atomic("a", r, 8));
        for (int trial = 0; trial < 8; ++trial) {
            const auto alpha = random_series(rng, pc.base_table(), 8, 6);
            CHECK(pc.pushforward(pc.zero_section_pushforward(alpha)) == alpha);
        }
    }
}

TEST_CASE("projection formula") {
    std::mt19937 rng(42);
    for (int r = 1; r <= 3; ++r) {
        const auto pc = ProjCompletion(FormalBundle::atomic("a", r, 6));
        for (int trial = 0; trial < 10; ++trial) {
            const auto alpha = random_series(rng, pc.base_table(), 6, 5);
            const auto s = random_series(rng, pc.total_table(), 6, 5);
            CHECK(pc.pushforward(pc.pullback(alpha) * s) == alpha * pc.pushforward(s));
        }
    }
}

TEST_CASE("basis property: xi-decomposition is well-defined and faithful") {
    std::mt19937 rng(5150);
    const auto pc = ProjCompletion(FormalBundle::atomic("a", 2, 6));
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_series(rng, pc.total_table(), 6, 8);
        const auto parts = pc.decompose_xi(s);
        REQUIRE(parts.size() == 3);
        GradedSeries rebuilt = GradedSeries::zero(pc.total_table(), 6);
        for (int k = 0; k <= 2; ++k)
            rebuilt = rebuilt + pc.pullback(parts[static_cast<std::size_t>(k)]) *
                                    pc.xi().pow(k);
        CHECK(rebuilt == pc.reduce(s));
    }
    // Alternate basis in powers of c1(O(-1)) = -xi.
    const auto s = pc.xi();
    const auto taut = pc.decompose_taut(s);
    CHECK(taut[1] == -GradedSeries::one(pc.base_table(), 6));
}

TEST_CASE("taut-todd identity") {
    for (int r = 1; r <= 2; ++r) {
        const auto pc = ProjCompletion(FormalBundle::atomic("a", r, 6));
        const auto result = verify_taut_todd(pc);
        CHECK(result.pass);
        CHECK(result.residual.is_zero());
    }
}

TEST_CASE("normalization identity") {
    for (int r = 1; r <= 3; ++r) {
        const auto pc = ProjCompletion(FormalBundle::atomic("a", r, 6));
        CHECK(verify_normalization(pc).pass);
    }
}

TEST_CASE("grr zero-section identity, small cases") {
    // r = 1 with F the trivial line bundle.
    const auto pc1 = line_completion(6);
    const auto f1 = FormalBundle::trivial(pc1.base_table(), 6, 1);
    CHECK(verify_grr_zero_section(pc1, f1).pass);

    // r = 2 with F an atomic line bundle over the same base.
    const auto family = FormalBundle::atomic_family({{"n", 2}, {"f", 1}}, 6);
    const auto pc2 = ProjCompletion(family[0]);
    CHECK(verify_grr_zero_section(pc2, family[1]).pass);
}

TEST_CASE("rank 0 is rejected") {
    const auto table = make_table({{"x", 1}});
    CHECK_THROWS_AS(ProjCompletion(FormalBundle::trivial(table, 6, 0)),
                    std::invalid_argument);
}

}  // TEST_SUITE
