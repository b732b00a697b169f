#pragma once

#include "ccforge/bundle.hpp"
#include "ccforge/series.hpp"

#include <optional>
#include <vector>

namespace ccforge {

/// Outcome of a symbolic identity check: pass iff the residual series is
/// exactly zero; the residual is kept for diagnostics.
struct VerifyResult {
    bool pass = false;
    GradedSeries residual;
};

/// The ring of the projective completion P(N + 1) of a rank-r bundle N over a
/// base: the base ring with one adjoined weight-1 class xi = c_1(O(1)) subject
/// to xi^{r+1} + c_1(N) xi^r + ... + c_r(N) xi = 0. Every element reduces to
/// xi-degree <= r, and {1, xi, ..., xi^r} is a basis over the base.
///
/// Sign convention: the tautological line O(-1) has c_1 = -xi.
class ProjCompletion {
public:
    /// Builds the completion of a bundle of rank >= 1 over its own ring.
    ProjCompletion(FormalBundle n, std::string fiber_name = "xi");

    const FormalBundle& normal_bundle() const { return n_; }
    int fiber_rank() const { return n_.rank(); }
    const GeneratorTablePtr& total_table() const { return total_table_; }
    const GeneratorTablePtr& base_table() const { return n_.table(); }
    int truncation() const { return n_.truncation(); }

    /// The class xi = c_1(O(1)) in the completion ring.
    GradedSeries xi() const;

    /// The tautological quotient bundle Q of rank r, with
    /// total_chern(Q) (1 - xi) = pullback(total_chern(N)) after reduction.
    const FormalBundle& tautological_quotient() const { return *q_; }

    /// Base class viewed in the completion ring.
    GradedSeries pullback(const GradedSeries& base_class) const;

    /// Canonical form: rewrites xi^{r+1} -> -(c_1 xi^r + ... + c_r xi)
    /// until every term has xi-degree <= r. Idempotent.
    GradedSeries reduce(const GradedSeries& s) const;

    /// Fiber integration onto the base: linear over the base with
    /// pushforward(xi^r) = 1, pushforward(xi^i) = 0 for i < r, and
    /// pushforward(xi^{r+j}) = s_j(N) (Segre) for unreduced input.
    GradedSeries pushforward(const GradedSeries& s) const;

    /// Pushforward along the zero section: pullback(a) * c_r(Q), reduced.
    GradedSeries zero_section_pushforward(const GradedSeries& base_class) const;

    /// Coefficients of 1, xi, ..., xi^r of the reduced input, as base classes.
    std::vector<GradedSeries> decompose_xi(const GradedSeries& s) const;

    /// Same decomposition in the basis of powers of c_1(O(-1)) = -xi.
    std::vector<GradedSeries> decompose_taut(const GradedSeries& s) const;

    /// Segre class s_j(N), the weight-j part of 1 / total_chern(N).
    GradedSeries segre(int j) const;

private:
    GradedSeries strip_fiber(const GradedSeries& s) const;  // to base ring; xi-free input

    FormalBundle n_;
    GeneratorTablePtr total_table_;
    std::size_t xi_index_;
    GradedSeries segre_total_;                  // 1 / c(N), in the base ring
    std::vector<GradedSeries> xi_power_;        // reduced xi^k for k = 0..truncation
    std::optional<FormalBundle> q_;
};

/// Checks pushforward(c_r(Q) Td^{-1}(Q)) = Td^{-1}(N) exactly.
VerifyResult verify_taut_todd(const ProjCompletion& pc);

/// Checks pushforward(c_r(Q) Td(O(-1))) = 1 exactly.
VerifyResult verify_normalization(const ProjCompletion& pc);

/// Checks sum_k (-1)^k ch(Lambda^k Q^dual) pullback(ch F) =
/// zero_section_pushforward(ch(F) Td^{-1}(N)) exactly, for F over the base.
VerifyResult verify_grr_zero_section(const ProjCompletion& pc, const FormalBundle& f);

}  // namespace ccforge
