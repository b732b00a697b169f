#pragma once

#include "ccforge/series.hpp"

#include <vector>

namespace ccforge {

/// A splitting-principle context of rank r: a root ring with weight-1
/// generators x1..xr and a Chern ring with generators c1..cr of weights 1..r.
/// Symmetric expressions in the roots rewrite uniquely in the Chern ring.
struct RootContext {
    int rank = 0;
    int truncation = kDefaultOrder;
    GeneratorTablePtr root_table;
    GeneratorTablePtr chern_table;

    static RootContext make(int rank, int truncation,
                            const std::string& root_prefix = "x",
                            const std::string& chern_prefix = "c");

    GradedSeries root(int i) const;   // x_{i+1}, 0-based index
    GradedSeries chern(int i) const;  // c_{i+1}, 0-based index
};

/// Elementary symmetric polynomials e_0..e_r of the given series,
/// computed by the one-row recurrence E_k += v_i * E_{k-1}.
std::vector<GradedSeries> elementary_symmetric(const std::vector<GradedSeries>& values);

/// True when s is invariant under every transposition of adjacent roots.
bool is_symmetric(const GradedSeries& s, const RootContext& ctx);

/// Power sum p_1..p_k as polynomials in c_1..c_r via the Newton recurrence,
/// with e_j = 0 for j > r. Entry m-1 satisfies p_m = sum of x_i^m under the
/// splitting substitution c_j -> e_j(x).
std::vector<GradedSeries> power_sums_from_chern(const RootContext& ctx, int up_to);

/// Rewrites a symmetric series over the roots as a series in the Chern
/// generators, by leading-monomial reduction against products of elementary
/// symmetric polynomials. Throws on non-symmetric input.
GradedSeries symmetrize_to_chern(const GradedSeries& s, const RootContext& ctx);

/// Substitutes e_i(x) for c_i: the inverse direction of symmetrize_to_chern.
GradedSeries expand_in_roots(const GradedSeries& s, const RootContext& ctx);

}  // namespace ccforge
