#include "ccforge/bc_theory.hpp"

namespace ccforge {

Rat harmonic(int n) {
    if (n < 1) throw std::invalid_argument("harmonic: n must be >= 1");
    Rat h(0);
    for (int k = 1; k <= n; ++k) h += Rat(1) / Rat(k);
    return h;
}

OneVarSeries phi_homogeneous(int order) {
    if (order < 0) throw std::invalid_argument("phi_homogeneous: negative order");
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    Rat inv_fact = Rat(1) / Rat(2);  // 1/(n+2)! at n = 0
    for (int n = 0; n <= order; ++n) {
        const Rat sign(n % 2 == 0 ? -1 : 1);
        c[static_cast<std::size_t>(n)] =
            sign * harmonic(n + 1) * inv_fact / Rat(2);
        inv_fact /= Rat(n + 3);
    }
    return OneVarSeries(std::move(c));
}

OneVarSeries derive_phi_from_fiber_integrals(const std::map<int, Rat>& integrals,
                                             int order) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    Rat inv_fact = Rat(1) / Rat(2);  // 1/(k+1)! at k = 1
    for (int k = 1; k <= order + 1; ++k) {
        auto it = integrals.find(k);
        if (it == integrals.end())
            throw std::invalid_argument("derive_phi_from_fiber_integrals: missing I(" +
                                        std::to_string(k) + ")");
        const Rat sign(k % 2 == 0 ? 1 : -1);
        c[static_cast<std::size_t>(k - 1)] =
            Rat(-1) / Rat(2) * sign * inv_fact * it->second;
        inv_fact /= Rat(k + 2);
    }
    return OneVarSeries(std::move(c));
}

BCTheory BCTheory::homogeneous(int order) {
    return BCTheory(phi_homogeneous(order),
                    Genus::additive(OneVarSeries::zero(order)), true);
}

BCTheory BCTheory::from_genus(const OneVarSeries& s_profile, int order) {
    const OneVarSeries s = s_profile.is_polynomial() && s_profile.order() < order
                               ? s_profile.pad_to(order)
                               : s_profile;
    if (s.order() < order)
        throw std::invalid_argument("BCTheory: genus profile order is below the theory order");
    const OneVarSeries phi =
        phi_homogeneous(order) + s.truncate_to(order) * todd_inverse_profile(order);
    return BCTheory(phi, Genus::additive(s), s.is_zero());
}

BCTheory BCTheory::from_phi(const OneVarSeries& phi) {
    const int order = phi.order();
    const OneVarSeries s = (phi - phi_homogeneous(order)) * todd_profile(order);
    return BCTheory(phi, Genus::additive(s), s.is_zero());
}

OddClass class_line(const BCTheory& t, const GradedSeries& c1_line) {
    return OddClass(substitute(t.phi(), c1_line));
}

OddClass class_line(const BCTheory& t, int order) {
    auto table = make_table({{"x", 1}});
    return class_line(t, GradedSeries::generator(table, order, 0));
}

OddClass class_pair_defect(const BCTheory& t, const FormalBundle& f,
                           const FormalBundle& n) {
    if (*f.table() != *n.table())
        throw std::invalid_argument("class_pair_defect: bundles live in different rings");
    if (t.homogeneous_theory())
        return OddClass(GradedSeries::zero(f.table(), f.truncation()));
    return OddClass(chern_character(f).ch * todd_inverse(n) *
                    genus_evaluate(t.s_genus(), n));
}

OddClass grr_defect_term(const BCTheory& t, const FormalBundle& f,
                         const FormalBundle& n) {
    // The same integrand as the class defect; composing with the
    // zero-section pushforward yields the cycle-level correction term.
    return class_pair_defect(t, f, n);
}

Genus genus_from_class(const OneVarSeries& psi, int order) {
    const OneVarSeries diff = psi.truncate_to(order) - phi_homogeneous(order);
    return Genus::additive(diff * todd_profile(order));
}

}  // namespace ccforge
