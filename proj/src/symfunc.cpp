#include "ccforge/symfunc.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ccforge {

RootContext RootContext::make(int rank, int truncation, const std::string& root_prefix,
                              const std::string& chern_prefix) {
    if (rank < 0) throw std::invalid_argument("RootContext: negative rank");
    RootContext ctx;
    ctx.rank = rank;
    ctx.truncation = truncation;
    std::vector<GeneratorTable::Generator> roots, cherns;
    for (int i = 1; i <= rank; ++i) {
        roots.push_back({root_prefix + std::to_string(i), 1});
        cherns.push_back({chern_prefix + std::to_string(i), i});
    }
    ctx.root_table = make_table(std::move(roots));
    ctx.chern_table = make_table(std::move(cherns));
    return ctx;
}

GradedSeries RootContext::root(int i) const {
    return GradedSeries::generator(root_table, truncation, static_cast<std::size_t>(i));
}

GradedSeries RootContext::chern(int i) const {
    return GradedSeries::generator(chern_table, truncation, static_cast<std::size_t>(i));
}

std::vector<GradedSeries> elementary_symmetric(const std::vector<GradedSeries>& values) {
    if (values.empty())
        throw std::invalid_argument("elementary_symmetric: need at least one value");
    const auto table = values.front().table();
    const int order = values.front().truncation();
    std::vector<GradedSeries> e;
    e.reserve(values.size() + 1);
    e.push_back(GradedSeries::one(table, order));
    for (std::size_t i = 0; i < values.size(); ++i) {
        e.push_back(GradedSeries::zero(table, order));
        for (std::size_t k = e.size() - 1; k >= 1; --k)
            e[k] = e[k] + values[i] * e[k - 1];
    }
    return e;
}

bool is_symmetric(const GradedSeries& s, const RootContext& ctx) {
    if (*s.table() != *ctx.root_table)
        throw std::invalid_argument("is_symmetric: series is not in the root ring");
    const std::size_t r = static_cast<std::size_t>(ctx.rank);
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::swap(perm[i], perm[i + 1]);
        if (s.permute_generators(perm) != s) return false;
    }
    return true;
}

std::vector<GradedSeries> power_sums_from_chern(const RootContext& ctx, int up_to) {
    if (up_to > ctx.truncation)
        throw std::invalid_argument("power_sums_from_chern: order exceeds truncation");
    const auto table = ctx.chern_table;
    const int order = ctx.truncation;
    auto chern = [&](int j) {
        if (j > ctx.rank) return GradedSeries::zero(table, order);
        return ctx.chern(j - 1);
    };
    std::vector<GradedSeries> p;
    p.reserve(static_cast<std::size_t>(std::max(up_to, 0)));
    for (int m = 1; m <= up_to; ++m) {
        // p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
        GradedSeries pm = GradedSeries::zero(table, order);
        for (int i = 1; i < m; ++i) {
            const GradedSeries term = chern(i) * p[static_cast<std::size_t>(m - i - 1)];
            pm = (i % 2 == 1) ? pm + term : pm - term;
        }
        GradedSeries top = Rat(m) * chern(m);
        pm = (m % 2 == 1) ? pm + top : pm - top;
        p.push_back(std::move(pm));
    }
    return p;
}

namespace {

// Partition exponent lambda (weakly decreasing) -> product of elementary
// symmetric polynomials e_1^{l1-l2} e_2^{l2-l3} ... e_r^{lr}, expanded in the
// root ring. The expansion's lex-leading monomial is lambda with coefficient 1.
GradedSeries elementary_product(const Monomial& lambda,
                                const std::vector<GradedSeries>& e,
                                std::map<Monomial, GradedSeries>& cache) {
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    const std::size_t r = lambda.size();
    GradedSeries result = GradedSeries::one(e.front().table(), e.front().truncation());
    for (std::size_t i = 0; i < r; ++i) {
        const int mult = lambda[i] - (i + 1 < r ? lambda[i + 1] : 0);
        for (int k = 0; k < mult; ++k) result = result * e[i + 1];
    }
    cache.emplace(lambda, result);
    return result;
}

Monomial chern_exponent_from_partition(const Monomial& lambda) {
    const std::size_t r = lambda.size();
    Monomial exps(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        exps[i] = lambda[i] - (i + 1 < r ? lambda[i + 1] : 0);
    return exps;
}

}  // namespace

GradedSeries symmetrize_to_chern(const GradedSeries& s, const RootContext& ctx) {
    if (*s.table() != *ctx.root_table)
        throw std::invalid_argument("symmetrize_to_chern: series is not in the root ring");
    if (!is_symmetric(s, ctx))
        throw std::invalid_argument("symmetrize_to_chern: series is not symmetric in the roots");

    std::vector<GradedSeries> roots;
    for (int i = 0; i < ctx.rank; ++i) roots.push_back(ctx.root(i));
    const auto e = ctx.rank > 0 ? elementary_symmetric(roots) : std::vector<GradedSeries>{};

    GradedSeries result = GradedSeries::zero(ctx.chern_table, ctx.truncation);
    GradedSeries work = s;
    std::map<Monomial, GradedSeries> cache;
    while (!work.is_zero()) {
        // Largest monomial in lex order; for symmetric input it is a partition.
        const auto& lead = *work.terms().rbegin();
        const Monomial lambda = lead.first;
        const Rat coeff = lead.second;
        if (!std::is_sorted(lambda.rbegin(), lambda.rend()))
            throw std::invalid_argument(
                "symmetrize_to_chern: leading exponent is not a partition");
        if (lambda == Monomial(lambda.size(), 0)) {
            result.add_term(Monomial(static_cast<std::size_t>(ctx.rank), 0), coeff);
            break;
        }
        result.add_term(chern_exponent_from_partition(lambda), coeff);
        work = work - coeff * elementary_product(lambda, e, cache);
    }
    return result;
}

GradedSeries expand_in_roots(const GradedSeries& s, const RootContext& ctx) {
    if (*s.table() != *ctx.chern_table)
        throw std::invalid_argument("expand_in_roots: series is not in the Chern ring");
    std::vector<GradedSeries> roots;
    for (int i = 0; i < ctx.rank; ++i) roots.push_back(ctx.root(i));
    const auto e = elementary_symmetric(roots);
    std::vector<GradedSeries> values(e.begin() + 1, e.end());
    return substitute_generators(s, values);
}

}  // namespace ccforge
