#include "ccforge/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ccforge {
namespace oracle {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTMax = 6.5;  // abscissa parameter range; weights underflow beyond
constexpr int kMaxLevel = 12;

}  // namespace

QuadratureResult tanh_sinh(const Integrand& f, double tol) {
    if (tol <= 0) throw std::invalid_argument("tanh_sinh: tolerance must be positive");

    long evals = 0;
    auto weight_at = [](double t) {
        // w(t) = (pi/4) cosh t / cosh^2(pi/2 sinh t), interval scale 1/2 folded in.
        const double u = 0.5 * kPi * std::sinh(t);
        const double c = std::cosh(u);
        return 0.25 * kPi * std::cosh(t) / (c * c);
    };
    auto point_at = [](double t) {
        const double u = 0.5 * kPi * std::sinh(t);
        const double e = std::exp(-2.0 * u);
        const double dr = e / (1.0 + e);         // 1 - x, exact for large u
        const double dl = 1.0 / (1.0 + e) - 0.0; // x measured from 0
        return std::pair<double, double>(dl, dr);
    };
    auto eval = [&](double t) {
        const double w = weight_at(t);
        if (!(w > 1e-290)) return 0.0;
        const auto [dl, dr] = point_at(t);
        if (dl <= 0.0 || dr <= 0.0) return 0.0;
        ++evals;
        const double v = f(dl, dl, dr) * w;
        return std::isfinite(v) ? v : 0.0;
    };

    // Level 0: spacing 1.
    double h = 1.0;
    double sum = eval(0.0);
    for (int j = 1; j * h <= kTMax; ++j) sum += eval(j * h) + eval(-j * h);
    double integral = h * sum;

    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        // New nodes are the odd multiples of the refined spacing.
        double new_sum = 0.0;
        for (int j = 1; j * h <= kTMax; j += 2) new_sum += eval(j * h) + eval(-j * h);
        sum += new_sum;
        const double refined = h * sum;
        const double err = std::abs(refined - integral);
        integral = refined;
        if (level >= 3 && err <= tol) {
            return {integral, err, evals};
        }
    }
    throw std::runtime_error("tanh_sinh: tolerance not reached within the level budget");
}

QuadratureResult harmonic_integral(int n, double tol) {
    if (n < 1) throw std::invalid_argument("harmonic_integral: n must be >= 1");
    const double dn = n;
    auto f = [dn](double w, double /*dl*/, double dr) {
        // n log(1-w) w^{n-1}; 1-w is passed cancellation-free.
        return dn * std::log(dr) * std::pow(w, dn - 1.0);
    };
    return tanh_sinh(f, tol);
}

QuadratureResult polar_fiber_integral(int n, double tol) {
    if (n < 1) throw std::invalid_argument("polar_fiber_integral: n must be >= 1");
    const double dn = n;
    auto f = [dn](double u, double /*dl*/, double du1) {
        // r = u/(1-u), dr = du/(1-u)^2; integrand
        //   2 log(r^2/(1+r^2)) r / (1+r^2)^{n+1}.
        const double r = u / du1;
        const double r2 = r * r;
        const double log_ratio = 2.0 * std::log(r) - std::log1p(r2);
        const double jac = 1.0 / (du1 * du1);
        return 2.0 * log_ratio * r * std::pow(1.0 + r2, -(dn + 1.0)) * jac;
    };
    return tanh_sinh(f, tol);
}

QuadratureResult c0_homogeneous_coefficient(double tol, double h_scale) {
    if (h_scale <= 0)
        throw std::invalid_argument("c0_homogeneous_coefficient: metric scale must be positive");
    const double h = h_scale;
    // -1/2 log||s||^2 paired with the (1,1) part of Td^{-1}(Q), which is
    // -1/2 c_1(Q); the normalized c_1 measure is 2 h r dr / (1+h r^2)^2
    // after the angular integration. Net: 1/4 * integral of
    // log(h r^2 / (1 + h r^2)) against that measure, which equals -1/4
    // independently of h.
    auto f = [h](double u, double /*dl*/, double du1) {
        const double r = u / du1;
        const double hr2 = h * r * r;
        const double log_norm2 = std::log(hr2) - std::log1p(hr2);
        const double density = 2.0 * h * r / ((1.0 + hr2) * (1.0 + hr2));
        const double jac = 1.0 / (du1 * du1);
        return 0.25 * log_norm2 * density * jac;
    };
    return tanh_sinh(f, tol);
}

LelongTestFn lelong_test_fn(const std::string& name) {
    if (name == "one") {
        return {name, [](double) { return 1.0; }, [](double) { return 0.0; }, 1.0};
    }
    if (name == "bump1") {
        // f = 1/(1+r^2)
        return {name,
                [](double r) { return 1.0 / (1.0 + r * r); },
                [](double r) {
                    const double s = 1.0 + r * r;
                    return (4.0 * r * r - 4.0) / (s * s * s);
                },
                1.0};
    }
    if (name == "bump2") {
        // f = r^2/(1+r^2)^2
        return {name,
                [](double r) {
                    const double s = 1.0 + r * r;
                    return r * r / (s * s);
                },
                [](double r) {
                    const double r2 = r * r;
                    const double s = 1.0 + r2;
                    return (4.0 - 16.0 * r2 + 4.0 * r2 * r2) / (s * s * s * s);
                },
                0.0};
    }
    throw std::invalid_argument("lelong_test_fn: unknown test function '" + name + "'");
}

QuadratureResult poincare_lelong_check(const LelongTestFn& fn, double tol) {
    // Euler-Green side: integral over the chart of (-log||s||)(Lap f)/(2 pi),
    // radially: integral_0^inf (-log||s||)(r) (Lap f)(r) r dr.
    auto green_side = [&fn](double u, double /*dl*/, double du1) {
        const double r = u / du1;
        const double r2 = r * r;
        const double e_tilde = -0.5 * (2.0 * std::log(r) - std::log1p(r2));
        const double jac = 1.0 / (du1 * du1);
        return e_tilde * fn.laplacian(r) * r * jac;
    };
    // Curvature side: integral of f against the normalized c_1(Q) measure,
    // radially 2 r / (1+r^2)^2 dr.
    auto curvature_side = [&fn](double u, double /*dl*/, double du1) {
        const double r = u / du1;
        const double r2 = r * r;
        const double jac = 1.0 / (du1 * du1);
        return fn.f(r) * 2.0 * r / ((1.0 + r2) * (1.0 + r2)) * jac;
    };
    const QuadratureResult lhs = tanh_sinh(green_side, tol);
    const QuadratureResult rhs = tanh_sinh(curvature_side, tol);
    QuadratureResult out;
    out.value = lhs.value - (rhs.value - fn.at_origin);
    out.abs_error_estimate = lhs.abs_error_estimate + rhs.abs_error_estimate;
    out.evaluations = lhs.evaluations + rhs.evaluations;
    return out;
}

std::map<int, Rat> fiber_integrals_from_quadrature(int count, double tol,
                                                   std::int64_t max_den) {
    std::map<int, Rat> out;
    for (int n = 1; n <= count; ++n)
        out.emplace(n, rational_round(harmonic_integral(n, tol).value, max_den));
    return out;
}

}  // namespace oracle
}  // namespace ccforge
