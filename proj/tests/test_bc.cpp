#include "ccforge/bc_theory.hpp"

#include "ccforge/json_io.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>
#include <type_traits>

using namespace ccforge;

namespace {

OneVarSeries profile_of(const OddClass& line_class, int order) {
    std::vector<Rat> coeffs;
    for (int k = 0; k <= order; ++k)
        coeffs.push_back(line_class.value().coeff_of(Monomial{k}));
    return OneVarSeries(std::move(coeffs));
}

const OneVarSeries kXProfile({Rat(0), Rat(1)}, true);

}  // namespace

TEST_SUITE("singular-bc") {

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == Rat(1));
    CHECK(harmonic(2) == Rat::of(3, 2));
    CHECK(harmonic(4) == Rat::of(25, 12));
    CHECK(harmonic(13) == Rat::of(1145993, 360360));
    CHECK_THROWS_AS(harmonic(0), std::invalid_argument);
}

TEST_CASE("homogeneous profile coefficients") {
    const auto phi = phi_homogeneous(3);
    CHECK(phi.coeff(0) == Rat::of(-1, 4));
    CHECK(phi.coeff(1) == Rat::of(1, 8));
    CHECK(phi.coeff(2) == Rat::of(-11, 288));
    CHECK(phi.coeff(3) == Rat::of(5, 576));
    // Direct evaluation of the closed form for a later coefficient:
    // (-1)^{n+1} H_{n+1} / (2 (n+2)!) at n = 6.
    CHECK(phi_homogeneous(6).coeff(6) ==
          -harmonic(7) / (Rat(2) * Rat::factorial(8)));
}

TEST_CASE("profile assembly from fiber integrals") {
    std::map<int, Rat> harmonic_integrals;
    for (int k = 1; k <= 7; ++k) harmonic_integrals[k] = -harmonic(k);
    CHECK(derive_phi_from_fiber_integrals(harmonic_integrals, 6) == phi_homogeneous(6));

    std::map<int, Rat> zero_integrals;
    for (int k = 1; k <= 7; ++k) zero_integrals[k] = Rat(0);
    CHECK(derive_phi_from_fiber_integrals(zero_integrals, 6).is_zero());

    std::map<int, Rat> missing{{1, Rat(-1)}};
    CHECK_THROWS_AS(derive_phi_from_fiber_integrals(missing, 6), std::invalid_argument);
}

TEST_CASE("line class of the homogeneous theory") {
    const auto t = BCTheory::homogeneous(2);
    const auto cls = class_line(t, 2);
    CHECK(cls.value().coeff_of({0}) == Rat::of(-1, 4));
    CHECK(cls.value().coeff_of({1}) == Rat::of(1, 8));
    CHECK(cls.value().coeff_of({2}) == Rat::of(-11, 288));
}

TEST_CASE("line class of the zero-profile theory is zero") {
    const auto t = BCTheory::from_phi(OneVarSeries::zero(4));
    CHECK(class_line(t, 4).is_zero());
    CHECK(!t.homogeneous_theory());
}

TEST_CASE("line class shifts by S * td-inverse for the defect genus S = x") {
    const auto t = BCTheory::from_genus(kXProfile, 4);
    const auto cls = class_line(t, 4);
    CHECK(cls.value().coeff_of({0}) == Rat::of(-1, 4));
    CHECK(cls.value().coeff_of({1}) == Rat::of(1, 8) + Rat(1));
    CHECK(cls.value().coeff_of({2}) == Rat::of(-11, 288) - Rat::of(1, 2));
}

TEST_CASE("pair defect class") {
    const auto th = BCTheory::homogeneous(4);
    const auto l = FormalBundle::atomic("x", 1, 4);
    const auto unit = FormalBundle::trivial(l.table(), 4, 1);
    CHECK(class_pair_defect(th, unit, l).is_zero());

    // S = x, F = 1, N = L: x * (1 - x/2 + x^2/6 - x^3/24).
    const auto t = BCTheory::from_genus(kXProfile, 4);
    const auto defect = class_pair_defect(t, unit, l);
    const auto x = l.chern_class(1);
    GradedSeries expected = x - Rat::of(1, 2) * x.pow(2);
    expected.add_term({3}, Rat::of(1, 6));
    expected.add_term({4}, Rat::of(-1, 24));
    CHECK(defect.value() == expected);

    // S = x, F = 1, N of rank 2: c1(N) Td^{-1}(N), constant term zero.
    const auto n2 = FormalBundle::atomic("c", 2, 4);
    const auto unit2 = FormalBundle::trivial(n2.table(), 4, 1);
    const auto defect2 = class_pair_defect(t, unit2, n2);
    CHECK(defect2.value() == n2.chern_class(1) * todd_inverse(n2));
    CHECK(defect2.value().constant_term().is_zero());
}

TEST_CASE("grr defect term") {
    const auto th = BCTheory::homogeneous(4);
    const auto l = FormalBundle::atomic("x", 1, 4);
    const auto unit = FormalBundle::trivial(l.table(), 4, 1);
    CHECK(grr_defect_term(th, unit, l).is_zero());

    const auto t = BCTheory::from_genus(kXProfile, 4);
    CHECK(grr_defect_term(t, unit, l) == class_pair_defect(t, unit, l));

    // Constant genus S = 1 with F of rank 2 (trivial): 2 Td^{-1}(L).
    const OneVarSeries one_profile({Rat(1)}, true);
    const auto tc = BCTheory::from_genus(one_profile, 4);
    const auto f2 = FormalBundle::trivial(l.table(), 4, 2);
    CHECK(grr_defect_term(tc, f2, l).value() == Rat(2) * todd_inverse(l));
}

TEST_CASE("genus recovery from a line profile") {
    const auto phi = phi_homogeneous(6);
    CHECK(genus_from_class(phi, 6).profile.is_zero());

    const auto psi_x = phi + kXProfile.pad_to(6) * todd_inverse_profile(6);
    const auto s_x = genus_from_class(psi_x, 6).profile;
    CHECK(s_x == kXProfile.pad_to(6));

    const auto psi_const = phi + todd_inverse_profile(6);
    const auto s_const = genus_from_class(psi_const, 6).profile;
    CHECK(s_const == OneVarSeries({Rat(1)}, true).pad_to(6));
}

TEST_CASE("bijection round trips at order 12") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> coeffs;
        for (int k = 0; k <= 6; ++k) coeffs.push_back(Rat::of(num(rng), den(rng)));
        const OneVarSeries s(coeffs, true);

        const auto theory = BCTheory::from_genus(s, 12);
        // phi -> theory -> phi.
        CHECK(BCTheory::from_phi(theory.phi()).phi() == theory.phi());
        // class_line -> profile -> genus.
        const auto psi = profile_of(class_line(theory, 12), 12);
        CHECK(psi == theory.phi());
        CHECK(genus_from_class(psi, 12).profile == s.pad_to(12));
    }
}

TEST_CASE("projection-formula compatibility at the line level") {
    // The pair class built from the line profile agrees with the defect
    // route: (phi_T - phi_h)(x) ch(F) = ch(F) Td^{-1}(L) S(L).
    const auto t = BCTheory::from_genus(kXProfile, 6);
    const auto th = BCTheory::homogeneous(6);
    for (int rf = 1; rf <= 2; ++rf) {
        const auto l = FormalBundle::atomic("x", 1, 6);
        const auto f = FormalBundle::trivial(l.table(), 6, rf);
        const auto x = l.chern_class(1);
        const auto via_line =
            chern_character(f).ch * (class_line(t, x) - class_line(th, x));
        CHECK(via_line == class_pair_defect(t, f, l));
    }
}

TEST_CASE("homogeneity is equivalent to vanishing defect") {
    const auto th = BCTheory::homogeneous(8);
    CHECK(th.homogeneous_theory());
    CHECK(th.s_genus().profile.is_zero());
    CHECK(th.phi() == phi_homogeneous(8));

    const auto t = BCTheory::from_genus(kXProfile, 8);
    CHECK(!t.homogeneous_theory());
    const auto family = FormalBundle::atomic_family({{"a", 2}, {"f", 1}}, 8);
    CHECK(!class_pair_defect(t, family[1], family[0]).is_zero());
}

TEST_CASE("profile signs alternate and magnitudes decrease") {
    const auto phi = phi_homogeneous(12);
    for (int n = 0; n <= 12; ++n)
        CHECK(phi.coeff(n).sign() == (n % 2 == 0 ? -1 : 1));
    for (int n = 1; n < 12; ++n) {
        const Rat cur = phi.coeff(n).sign() < 0 ? -phi.coeff(n) : phi.coeff(n);
        const Rat nxt =
            phi.coeff(n + 1).sign() < 0 ? -phi.coeff(n + 1) : phi.coeff(n + 1);
        CHECK(nxt < cur);
    }
}

TEST_CASE("odd parity is tracked and odd*odd is not defined") {
    const auto t = BCTheory::homogeneous(4);
    const auto a = class_line(t, 4);
    const auto b = class_line(t, 4);
    CHECK((a + b).value() == Rat(2) * a.value());
    CHECK((a - b).is_zero());
    const auto even = GradedSeries::constant(a.value().table(), 4, Rat(3));
    CHECK((even * a).value() == Rat(3) * a.value());
    static_assert(!std::is_invocable_v<std::multiplies<>, OddClass, OddClass>);
}

TEST_CASE("theory json round trip") {
    const auto t = BCTheory::from_genus(kXProfile, 6);
    const auto j = theory_to_json(t);
    CHECK(j.at("homogeneous") == false);
    const auto back = theory_from_json(j);
    CHECK(back.phi() == t.phi());
    CHECK(back.s_genus().profile.truncate_to(6) == t.s_genus().profile.truncate_to(6));

    auto bad = j;
    bad["homogeneous"] = true;
    CHECK_THROWS_AS(theory_from_json(bad), std::invalid_argument);
}

}  // TEST_SUITE
