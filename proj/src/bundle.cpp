#include "ccforge/bundle.hpp"

#include <algorithm>

namespace ccforge {

FormalBundle::FormalBundle(int rank, std::vector<GradedSeries> chern)
    : rank_(rank), chern_(std::move(chern)) {
    if (rank_ < 0) throw std::invalid_argument("FormalBundle: negative rank");
    if (chern_.size() != static_cast<std::size_t>(rank_))
        throw std::invalid_argument("FormalBundle: need exactly one Chern class per rank");
    if (chern_.empty())
        throw std::invalid_argument(
            "FormalBundle: rank-0 bundle needs an ambient ring; use trivial()");
    table_ = chern_.front().table();
    truncation_ = chern_.front().truncation();
    for (const auto& c : chern_)
        if (*c.table() != *table_ || c.truncation() != truncation_)
            throw std::invalid_argument("FormalBundle: Chern classes live in different rings");
}

FormalBundle FormalBundle::atomic(const std::string& prefix, int rank, int truncation,
                                  int rank_cap) {
    auto family = atomic_family({{prefix, rank}}, truncation, rank_cap);
    return family.front();
}

std::vector<FormalBundle> FormalBundle::atomic_family(
    const std::vector<std::pair<std::string, int>>& spec, int truncation, int rank_cap) {
    std::vector<GeneratorTable::Generator> gens;
    for (const auto& [prefix, rank] : spec) {
        if (rank < 1) throw std::invalid_argument("atomic_family: rank must be >= 1");
        if (rank > rank_cap) throw std::invalid_argument("atomic_family: rank exceeds cap");
        for (int i = 1; i <= rank; ++i) gens.push_back({prefix + std::to_string(i), i});
    }
    auto table = make_table(std::move(gens));
    std::vector<FormalBundle> out;
    std::size_t offset = 0;
    for (const auto& [prefix, rank] : spec) {
        std::vector<GradedSeries> chern;
        for (int i = 0; i < rank; ++i)
            chern.push_back(GradedSeries::generator(table, truncation, offset + i));
        out.emplace_back(rank, std::move(chern));
        offset += static_cast<std::size_t>(rank);
    }
    return out;
}

FormalBundle FormalBundle::trivial(GeneratorTablePtr table, int truncation, int rank) {
    if (rank < 0) throw std::invalid_argument("FormalBundle: negative rank");
    FormalBundle b;
    b.rank_ = rank;
    b.table_ = std::move(table);
    b.truncation_ = truncation;
    b.chern_.assign(static_cast<std::size_t>(rank),
                    GradedSeries::zero(b.table_, truncation));
    return b;
}

GradedSeries FormalBundle::chern_class(int i) const {
    if (i == 0) return GradedSeries::one(table_, truncation_);
    if (i < 0 || i > rank_) return GradedSeries::zero(table_, truncation_);
    return chern_[static_cast<std::size_t>(i - 1)];
}

VirtualClass::VirtualClass(int rank_in, GradedSeries ch_in)
    : rank(rank_in), ch(std::move(ch_in)) {
    if (ch.constant_term() != Rat(rank))
        throw std::invalid_argument("VirtualClass: ch constant term must equal the rank");
}

Genus Genus::multiplicative(OneVarSeries profile) {
    if (!profile.coeff(0).is_one())
        throw std::invalid_argument("Genus: multiplicative profile needs g(0) = 1");
    return {Kind::multiplicative, std::move(profile)};
}

OneVarSeries todd_inverse_profile(int order) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    Rat term(1);  // (-1)^k / (k+1)!
    for (int k = 0; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = term;
        term *= Rat(-1);
        term /= Rat(k + 2);
    }
    return OneVarSeries(std::move(c));
}

OneVarSeries todd_profile(int order) { return todd_inverse_profile(order).invert(); }

namespace {

/// Evaluates a polynomial in formal c_1..c_r at the bundle's Chern classes.
GradedSeries eval_chern_polynomial(const GradedSeries& templ, const FormalBundle& e) {
    return substitute_generators(templ, e.chern());
}

}  // namespace

VirtualClass chern_character(const FormalBundle& e) {
    if (e.rank() == 0)
        return {0, GradedSeries::zero(e.table(), e.truncation())};
    GradedSeries ch = GradedSeries::constant(e.table(), e.truncation(), Rat(e.rank()));
    const auto ctx = RootContext::make(e.rank(), e.truncation());
    const auto p = power_sums_from_chern(ctx, e.truncation());
    Rat inv_fact(1);
    for (int m = 1; m <= e.truncation(); ++m) {
        inv_fact /= Rat(m);
        ch = ch + inv_fact * eval_chern_polynomial(p[static_cast<std::size_t>(m - 1)], e);
    }
    return {e.rank(), std::move(ch)};
}

GradedSeries todd(const FormalBundle& e) {
    return genus_evaluate(Genus::multiplicative(todd_profile(e.truncation())), e);
}

GradedSeries todd_inverse(const FormalBundle& e) {
    return genus_evaluate(Genus::multiplicative(todd_inverse_profile(e.truncation())), e);
}

GradedSeries total_chern(const FormalBundle& e) {
    GradedSeries total = GradedSeries::one(e.table(), e.truncation());
    for (const auto& c : e.chern()) total = total + c;
    return total;
}

GradedSeries top_chern(const FormalBundle& e) {
    if (e.rank() == 0) return GradedSeries::one(e.table(), e.truncation());
    return e.chern().back();
}

FormalBundle dual(const FormalBundle& e) {
    if (e.rank() == 0) return FormalBundle::trivial(e.table(), e.truncation(), 0);
    // Negating every Chern root sends c_i to (-1)^i c_i.
    std::vector<GradedSeries> chern;
    chern.reserve(e.chern().size());
    for (int i = 1; i <= e.rank(); ++i) {
        const auto& c = e.chern()[static_cast<std::size_t>(i - 1)];
        chern.push_back(i % 2 == 0 ? c : -c);
    }
    return {e.rank(), std::move(chern)};
}

FormalBundle direct_sum(const FormalBundle& e, const FormalBundle& f) {
    if (*e.table() != *f.table())
        throw std::invalid_argument("direct_sum: bundles live in different rings");
    const GradedSeries total = total_chern(e) * total_chern(f);
    const int rank = e.rank() + f.rank();
    std::vector<GradedSeries> chern;
    for (int i = 1; i <= rank; ++i) chern.push_back(total.homogeneous_part(i));
    if (rank == 0) return FormalBundle::trivial(e.table(), e.truncation(), 0);
    return {rank, std::move(chern)};
}

FormalBundle tensor_line(const FormalBundle& e, const FormalBundle& line) {
    if (line.rank() != 1) throw std::invalid_argument("tensor_line: second factor must be a line bundle");
    if (*e.table() != *line.table())
        throw std::invalid_argument("tensor_line: bundles live in different rings");
    const GradedSeries t = line.chern_class(1);
    const int r = e.rank();
    std::vector<GradedSeries> chern;
    for (int k = 1; k <= r; ++k) {
        // c_k(E ox L) = sum_i C(r-i, k-i) c_i(E) t^{k-i}
        GradedSeries ck = GradedSeries::zero(e.table(), e.truncation());
        for (int i = 0; i <= k; ++i) {
            const Rat b = Rat::binomial(static_cast<unsigned>(r - i),
                                        static_cast<unsigned>(k - i));
            if (b.is_zero()) continue;
            ck = ck + b * (e.chern_class(i) * t.pow(k - i));
        }
        chern.push_back(std::move(ck));
    }
    if (r == 0) return FormalBundle::trivial(e.table(), e.truncation(), 0);
    return {r, std::move(chern)};
}

VirtualClass exterior_power_ch(const FormalBundle& e, int k, int rank_cap) {
    if (k < 0) throw std::invalid_argument("exterior_power_ch: negative degree");
    if (e.rank() > rank_cap)
        throw std::invalid_argument("exterior_power_ch: rank exceeds cap");
    const int vrank = Rat::binomial(static_cast<unsigned>(e.rank()),
                                    static_cast<unsigned>(k))
                          .num()
                          .convert_to<int>();
    if (k > e.rank() || e.rank() == 0)
        return {vrank, k > e.rank()
                           ? GradedSeries::zero(e.table(), e.truncation())
                           : GradedSeries::one(e.table(), e.truncation())};
    if (k == 0) return {1, GradedSeries::one(e.table(), e.truncation())};

    // e_k(e^{x_1}, ..., e^{x_r}) in the root ring, then rewrite in c_1..c_r.
    const auto ctx = RootContext::make(e.rank(), e.truncation());
    std::vector<GradedSeries> exps;
    for (int i = 0; i < e.rank(); ++i) exps.push_back(ctx.root(i).exp());
    const auto esym = elementary_symmetric(exps);
    const GradedSeries templ =
        symmetrize_to_chern(esym[static_cast<std::size_t>(k)], ctx);
    return {vrank, eval_chern_polynomial(templ, e)};
}

VirtualClass koszul_alternating_ch(const FormalBundle& e, int rank_cap) {
    if (e.rank() < 1)
        throw std::invalid_argument("koszul_alternating_ch: rank must be >= 1");
    const FormalBundle ed = dual(e);
    VirtualClass acc{1, GradedSeries::one(e.table(), e.truncation())};  // k = 0
    for (int k = 1; k <= e.rank(); ++k) {
        const VirtualClass lk = exterior_power_ch(ed, k, rank_cap);
        acc = (k % 2 == 1) ? acc - lk : acc + lk;
    }
    return acc;
}

GradedSeries genus_evaluate(const Genus& g, const FormalBundle& e) {
    if (g.kind == Genus::Kind::multiplicative && !g.profile.coeff(0).is_one())
        throw std::invalid_argument("genus_evaluate: multiplicative profile needs g(0) = 1");
    if (e.rank() == 0)
        return g.kind == Genus::Kind::additive
                   ? GradedSeries::zero(e.table(), e.truncation())
                   : GradedSeries::one(e.table(), e.truncation());

    const int order = e.truncation();
    auto additive_eval = [&](const OneVarSeries& profile) {
        // sum_i g(x_i) = r g_0 + sum_{m>=1} g_m p_m(c)
        GradedSeries acc = GradedSeries::constant(e.table(), order,
                                                  Rat(e.rank()) * profile.coeff(0));
        const auto ctx = RootContext::make(e.rank(), order);
        const int top = std::min(order, profile.order());
        const auto p = power_sums_from_chern(ctx, top);
        for (int m = 1; m <= top; ++m) {
            if (profile.coeff(m).is_zero()) continue;
            acc = acc + profile.coeff(m) *
                            eval_chern_polynomial(p[static_cast<std::size_t>(m - 1)], e);
        }
        return acc;
    };

    if (g.kind == Genus::Kind::additive) {
        if (!g.profile.is_polynomial() && g.profile.order() < order)
            throw std::invalid_argument(
                "genus_evaluate: profile order is below the ring truncation");
        return additive_eval(g.profile);
    }
    // prod_i g(x_i) = exp(sum_i log g(x_i))
    OneVarSeries profile = g.profile;
    if (profile.is_polynomial() && profile.order() < order) profile = profile.pad_to(order);
    if (profile.order() < order)
        throw std::invalid_argument(
            "genus_evaluate: profile order is below the ring truncation");
    return additive_eval(profile.truncate_to(order).log()).exp();
}

}  // namespace ccforge
