#include "ccforge/proj_completion.hpp"

#include <algorithm>

namespace ccforge {

ProjCompletion::ProjCompletion(FormalBundle n, std::string fiber_name)
    : n_(std::move(n)),
      total_table_(extend_table(n_.table(), fiber_name, 1)),
      xi_index_(n_.table()->size()),
      segre_total_(GradedSeries::one(n_.table(), n_.truncation())) {
    if (n_.rank() < 1)
        throw std::invalid_argument("ProjCompletion: bundle rank must be >= 1");
    const int order = truncation();
    const int r = n_.rank();

    segre_total_ = total_chern(n_).invert();

    // Reduced powers of xi: for k > r,
    //   xi^k = -(c_1(N) xi^{k-1} + ... + c_r(N) xi^{k-r}).
    xi_power_.push_back(GradedSeries::one(total_table_, order));
    for (int k = 1; k <= order; ++k) {
        if (k <= r) {
            Monomial m(total_table_->size(), 0);
            m[xi_index_] = k;
            GradedSeries p(total_table_, order);
            p.add_term(m, Rat(1));
            xi_power_.push_back(std::move(p));
        } else {
            GradedSeries p(total_table_, order);
            for (int i = 1; i <= r; ++i)
                p = p - pullback(n_.chern_class(i)) * xi_power_[static_cast<std::size_t>(k - i)];
            xi_power_.push_back(std::move(p));
        }
    }

    // Tautological quotient: c_i(Q) is the weight-i part of c(N) / (1 - xi).
    const GradedSeries geom = (GradedSeries::one(total_table_, order) - xi()).invert();
    const GradedSeries quotient = pullback(total_chern(n_)) * geom;
    std::vector<GradedSeries> chern;
    for (int i = 1; i <= r; ++i) chern.push_back(reduce(quotient.homogeneous_part(i)));
    q_.emplace(r, std::move(chern));
}

GradedSeries ProjCompletion::xi() const {
    return GradedSeries::generator(total_table_, truncation(), xi_index_);
}

GradedSeries ProjCompletion::pullback(const GradedSeries& base_class) const {
    if (*base_class.table() != *base_table())
        throw std::invalid_argument("ProjCompletion: pullback input is not a base class");
    GradedSeries out(total_table_, std::min(truncation(), base_class.truncation()));
    Monomial m(total_table_->size(), 0);
    for (const auto& [mono, c] : base_class.terms()) {
        std::copy(mono.begin(), mono.end(), m.begin());
        out.add_term(m, c);
    }
    return out;
}

GradedSeries ProjCompletion::strip_fiber(const GradedSeries& s) const {
    GradedSeries out(base_table(), std::min(truncation(), s.truncation()));
    Monomial m(base_table()->size(), 0);
    for (const auto& [mono, c] : s.terms()) {
        if (mono[xi_index_] != 0)
            throw std::logic_error("ProjCompletion: residual fiber class");
        std::copy(mono.begin(), mono.begin() + static_cast<long>(m.size()), m.begin());
        out.add_term(m, c);
    }
    return out;
}

GradedSeries ProjCompletion::reduce(const GradedSeries& s) const {
    if (*s.table() != *total_table_)
        throw std::invalid_argument("ProjCompletion: input is not in the completion ring");
    const int r = n_.rank();
    GradedSeries out(total_table_, s.truncation());
    for (const auto& [mono, c] : s.terms()) {
        const int k = mono[xi_index_];
        if (k <= r) {
            out.add_term(mono, c);
            continue;
        }
        Monomial base = mono;
        base[xi_index_] = 0;
        GradedSeries factor(total_table_, s.truncation());
        factor.add_term(base, c);
        out = out + factor * xi_power_[static_cast<std::size_t>(k)];
    }
    return out;
}

GradedSeries ProjCompletion::segre(int j) const {
    return segre_total_.homogeneous_part(j);
}

GradedSeries ProjCompletion::pushforward(const GradedSeries& s) const {
    if (*s.table() != *total_table_)
        throw std::invalid_argument("ProjCompletion: input is not in the completion ring");
    const int r = n_.rank();
    GradedSeries out(base_table(), std::min(truncation(), s.truncation()));
    Monomial m(base_table()->size(), 0);
    for (const auto& [mono, c] : s.terms()) {
        const int k = mono[xi_index_];
        if (k < r) continue;
        std::copy(mono.begin(), mono.begin() + static_cast<long>(m.size()), m.begin());
        GradedSeries base_part(base_table(), out.truncation());
        base_part.add_term(m, c);
        out = out + base_part * segre(k - r);
    }
    return out;
}

GradedSeries ProjCompletion::zero_section_pushforward(const GradedSeries& base_class) const {
    return reduce(pullback(base_class) * top_chern(*q_));
}

std::vector<GradedSeries> ProjCompletion::decompose_xi(const GradedSeries& s) const {
    const GradedSeries red = reduce(s);
    const int r = n_.rank();
    std::vector<GradedSeries> out;
    out.reserve(static_cast<std::size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
        GradedSeries part(total_table_, red.truncation());
        for (const auto& [mono, c] : red.terms()) {
            if (mono[xi_index_] != k) continue;
            Monomial base = mono;
            base[xi_index_] = 0;
            part.add_term(base, c);
        }
        out.push_back(strip_fiber(part));
    }
    return out;
}

std::vector<GradedSeries> ProjCompletion::decompose_taut(const GradedSeries& s) const {
    // (-xi)^k basis: flip the sign of every odd-k coefficient.
    auto out = decompose_xi(s);
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return out;
}

VerifyResult verify_taut_todd(const ProjCompletion& pc) {
    const auto& q = pc.tautological_quotient();
    const GradedSeries lhs =
        pc.pushforward(pc.reduce(top_chern(q) * todd_inverse(q)));
    const GradedSeries rhs = todd_inverse(pc.normal_bundle());
    GradedSeries residual = lhs - rhs;
    return {residual.is_zero(), std::move(residual)};
}

VerifyResult verify_normalization(const ProjCompletion& pc) {
    const auto& q = pc.tautological_quotient();
    // Td of the tautological line O(-1), whose first Chern class is -xi.
    const GradedSeries td_taut =
        substitute(todd_profile(pc.truncation()), -pc.xi());
    const GradedSeries lhs = pc.pushforward(pc.reduce(top_chern(q) * td_taut));
    GradedSeries residual =
        lhs - GradedSeries::one(pc.base_table(), lhs.truncation());
    return {residual.is_zero(), std::move(residual)};
}

VerifyResult verify_grr_zero_section(const ProjCompletion& pc, const FormalBundle& f) {
    if (*f.table() != *pc.base_table())
        throw std::invalid_argument("verify_grr_zero_section: F must live over the base");
    const GradedSeries ch_f = chern_character(f).ch;
    const GradedSeries lhs = pc.reduce(koszul_alternating_ch(pc.tautological_quotient()).ch *
                                       pc.pullback(ch_f));
    const GradedSeries rhs =
        pc.zero_section_pushforward(ch_f * todd_inverse(pc.normal_bundle()));
    GradedSeries residual = pc.reduce(lhs - rhs);
    return {residual.is_zero(), std::move(residual)};
}

}  // namespace ccforge
