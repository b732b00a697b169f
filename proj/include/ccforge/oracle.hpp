#pragma once

#include "ccforge/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace ccforge {
namespace oracle {

/// Result of a deterministic numeric integration.
struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

/// Integrand over (0,1). Receives the abscissa and its distances to both
/// endpoints, computed without cancellation, so endpoint-singular factors
/// such as log(1-w) can be evaluated stably.
using Integrand = std::function<double(double x, double dist_left, double dist_right)>;

/// Double-exponential (tanh-sinh) quadrature on (0,1). The transform absorbs
/// integrable endpoint singularities; nodes and summation order are fixed, so
/// results are bit-identical across runs. Throws when the tolerance is not
/// reached within the level budget.
QuadratureResult tanh_sinh(const Integrand& f, double tol);

/// n * integral_0^1 log(1-w) w^{n-1} dw; equals -H_n.
QuadratureResult harmonic_integral(int n, double tol);

/// The fiber integral in polar form, via the compactification r = u/(1-u):
/// 2 * integral_0^inf log(r^2/(1+r^2)) r dr / (1+r^2)^{n+1}; equals -H_n / n
/// and provides an independent check of the w-substitution step.
QuadratureResult polar_fiber_integral(int n, double tol);

/// Degree-zero coefficient of the homogeneous line-bundle class, computed as
/// the fiber integral of -1/2 log||s||^2 against the (1,1) part of
/// Td^{-1}(Q) for the Fubini-Study metric scaled by h; equals -1/4 for
/// every h > 0.
QuadratureResult c0_homogeneous_coefficient(double tol, double h_scale = 1.0);

/// A rotation-invariant test function on the fiber chart with an analytic
/// Laplacian, for the current-equation check.
struct LelongTestFn {
    std::string name;
    std::function<double(double r)> f;          // value at radius r
    std::function<double(double r)> laplacian;  // (f'' + f'/r)(r)
    double at_origin = 0.0;
};

/// Built-in test functions: "one", "bump1" = 1/(1+r^2),
/// "bump2" = r^2/(1+r^2)^2. Throws on unknown names.
LelongTestFn lelong_test_fn(const std::string& name);

/// Residual of the current equation dd e~ = [c_1(Q)] - delta_0 with
/// e~ = -log||s||, paired against the test function:
///   integral e~ (Lap f)/(2 pi) dA  -  [ integral f c_1(Q) - f(0) ].
/// value is the signed residual; it vanishes for the Fubini-Study metric.
QuadratureResult poincare_lelong_check(const LelongTestFn& fn, double tol);

/// Fiber integrals I(1..count) from quadrature, rounded to rationals with
/// bounded denominator, ready for the profile-assembly pipeline.
std::map<int, Rat> fiber_integrals_from_quadrature(int count, double tol,
                                                   std::int64_t max_den);

}  // namespace oracle
}  // namespace ccforge
