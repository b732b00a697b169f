#pragma once

#include "ccforge/series.hpp"
#include "ccforge/symfunc.hpp"

#include <string>
#include <vector>

namespace ccforge {

/// Guard against combinatorial blowup in root-ring computations.
inline constexpr int kDefaultRankCap = 8;

/// A vector bundle presented by its rank and Chern classes c_1..c_r, each a
/// weight-homogeneous series in a common ambient ring (c_0 = 1 is implicit).
/// Atomic bundles own fresh generators; composite bundles carry derived
/// Chern-class series.
class FormalBundle {
public:
    FormalBundle(int rank, std::vector<GradedSeries> chern);

    /// Rank-r bundle on fresh generators "<prefix>1".."<prefix>r" of weights 1..r.
    static FormalBundle atomic(const std::string& prefix, int rank, int truncation,
                               int rank_cap = kDefaultRankCap);

    /// Several atomic bundles sharing one ambient ring; each entry gives a
    /// generator prefix and a rank.
    static std::vector<FormalBundle> atomic_family(
        const std::vector<std::pair<std::string, int>>& spec, int truncation,
        int rank_cap = kDefaultRankCap);

    /// Rank-r bundle with all Chern classes zero in the given ring.
    static FormalBundle trivial(GeneratorTablePtr table, int truncation, int rank);

    int rank() const { return rank_; }
    const std::vector<GradedSeries>& chern() const { return chern_; }
    const GeneratorTablePtr& table() const { return table_; }
    int truncation() const { return truncation_; }

    /// c_i for 0 <= i; c_0 = 1, c_i = 0 for i > rank.
    GradedSeries chern_class(int i) const;

private:
    FormalBundle() = default;

    int rank_ = 0;
    GeneratorTablePtr table_;
    int truncation_ = kDefaultOrder;
    std::vector<GradedSeries> chern_;
};

/// An element of the formal K-group: an integer rank plus a Chern-character
/// series whose constant term equals the rank.
struct VirtualClass {
    int rank = 0;
    GradedSeries ch;

    VirtualClass(int rank_in, GradedSeries ch_in);

    friend VirtualClass operator+(const VirtualClass& a, const VirtualClass& b) {
        return {a.rank + b.rank, a.ch + b.ch};
    }
    friend VirtualClass operator-(const VirtualClass& a, const VirtualClass& b) {
        return {a.rank - b.rank, a.ch - b.ch};
    }
};

/// A genus determined by a one-variable profile g: additive genera evaluate
/// as sum g(x_i) over the Chern roots, multiplicative ones as the product
/// (requires g(0) = 1).
struct Genus {
    enum class Kind { additive, multiplicative };

    Kind kind = Kind::additive;
    OneVarSeries profile;

    static Genus additive(OneVarSeries profile) {
        return {Kind::additive, std::move(profile)};
    }
    static Genus multiplicative(OneVarSeries profile);
};

/// Line-bundle profile of the inverse Todd class: sum (-x)^k / (k+1)!.
OneVarSeries todd_inverse_profile(int order);

/// Line-bundle profile of the Todd class x / (1 - e^{-x}).
OneVarSeries todd_profile(int order);

VirtualClass chern_character(const FormalBundle& e);

GradedSeries todd(const FormalBundle& e);
GradedSeries todd_inverse(const FormalBundle& e);

GradedSeries total_chern(const FormalBundle& e);
GradedSeries top_chern(const FormalBundle& e);

FormalBundle dual(const FormalBundle& e);
FormalBundle direct_sum(const FormalBundle& e, const FormalBundle& f);

/// E tensor L for a line bundle L in the same ambient ring; every Chern root
/// shifts by c_1(L).
FormalBundle tensor_line(const FormalBundle& e, const FormalBundle& line);

/// ch of the k-th exterior power, via the generating function
/// prod_i (1 + t e^{x_i}) and the splitting principle. k > rank gives zero.
VirtualClass exterior_power_ch(const FormalBundle& e, int k,
                               int rank_cap = kDefaultRankCap);

/// sum_k (-1)^k ch(Lambda^k E^dual); equals top_chern(E) * todd_inverse(E).
VirtualClass koszul_alternating_ch(const FormalBundle& e,
                                   int rank_cap = kDefaultRankCap);

GradedSeries genus_evaluate(const Genus& g, const FormalBundle& e);

}  // namespace ccforge
