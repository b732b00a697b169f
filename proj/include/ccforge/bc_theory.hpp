#pragma once

#include "ccforge/bundle.hpp"
#include "ccforge/series.hpp"

#include <functional>
#include <map>

namespace ccforge {

/// A class carrying the odd-degree unit of the coefficient ring. The unit is
/// square-degenerate bookkeeping, so odd classes admit sums and scaling by
/// even classes but no product of two odd classes is defined.
class OddClass {
public:
    explicit OddClass(GradedSeries value) : value_(std::move(value)) {}

    const GradedSeries& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    friend OddClass operator+(const OddClass& a, const OddClass& b) {
        return OddClass(a.value_ + b.value_);
    }
    friend OddClass operator-(const OddClass& a, const OddClass& b) {
        return OddClass(a.value_ - b.value_);
    }
    /// Even class times odd class stays odd.
    friend OddClass operator*(const GradedSeries& even, const OddClass& odd) {
        return OddClass(even * odd.value_);
    }
    friend bool operator==(const OddClass& a, const OddClass& b) {
        return a.value_ == b.value_;
    }

private:
    GradedSeries value_;
};

/// Exact harmonic number H_n = 1 + 1/2 + ... + 1/n; requires n >= 1.
Rat harmonic(int n);

/// Profile of the homogeneous theory: coefficient n is
/// (-1)^{n+1} H_{n+1} / (2 (n+2)!).
OneVarSeries phi_homogeneous(int order);

/// Assembles the line-bundle profile from the fiber integrals
/// I(n) = pushforward of c_1(Q)^n log||s||^2 divided by c_1(L)^{n-1}:
/// coefficient of x^{k-1} is -1/2 * (-1)^k/(k+1)! * I(k).
/// With I(k) = -H_k this reproduces phi_homogeneous exactly.
OneVarSeries derive_phi_from_fiber_integrals(const std::map<int, Rat>& integrals,
                                             int order);

/// A theory of singular Bott-Chern classes in the transitive,
/// projection-formula-compatible regime, as classification data: the
/// line-bundle profile phi and the additive defect genus S_T. The theory is
/// homogeneous exactly when S_T = 0, equivalently phi = phi_homogeneous.
class BCTheory {
public:
    /// The homogeneous theory at the given order.
    static BCTheory homogeneous(int order);

    /// The theory with defect genus S_T: phi = phi_homogeneous + S * td^{-1}.
    static BCTheory from_genus(const OneVarSeries& s_profile, int order);

    /// The theory with the given line-bundle profile; the defect genus is
    /// recovered as (phi - phi_homogeneous) * td.
    static BCTheory from_phi(const OneVarSeries& phi);

    const OneVarSeries& phi() const { return phi_; }
    const Genus& s_genus() const { return s_genus_; }
    int order() const { return phi_.order(); }

    bool homogeneous_theory() const { return homogeneous_; }
    bool projection_formula() const { return true; }
    bool transitive() const { return true; }

private:
    BCTheory(OneVarSeries phi, Genus s_genus, bool homogeneous)
        : phi_(std::move(phi)), s_genus_(std::move(s_genus)), homogeneous_(homogeneous) {}

    OneVarSeries phi_;
    Genus s_genus_;
    bool homogeneous_;
};

/// C_T(O, L) = 1_1 * phi(c_1(L)) for a line bundle with first Chern class x.
OddClass class_line(const BCTheory& t, const GradedSeries& c1_line);

/// Convenience: class_line on a fresh weight-1 generator "x" at the given order.
OddClass class_line(const BCTheory& t, int order);

/// C_T(F, N) - C_{T^h}(F, N) = ch(F) Td^{-1}(N) S_T(N); zero for the
/// homogeneous theory.
OddClass class_pair_defect(const BCTheory& t, const FormalBundle& f,
                           const FormalBundle& n);

/// The correction integrand of the arithmetic Riemann-Roch identity for a
/// closed immersion: ch(F) Td^{-1}(N) S_T(N), before pushforward along the
/// zero section.
OddClass grr_defect_term(const BCTheory& t, const FormalBundle& f,
                         const FormalBundle& n);

/// Recovers the additive defect genus from a line-bundle class profile:
/// S(x) = (psi(x) - phi_homogeneous(x)) * td(x).
Genus genus_from_class(const OneVarSeries& psi, int order);

}  // namespace ccforge
