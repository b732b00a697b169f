#include "ccforge/rational.hpp"

#include <cmath>
#include <limits>

namespace ccforge {

void Rat::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text), Int(1));
        return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rat: cannot parse '" + text + "'");
    }
}

std::string Rat::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

double Rat::to_double() const {
    using boost::multiprecision::cpp_rational;
    return static_cast<double>(cpp_rational(num_, den_));
}

Rat Rat::factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return Rat(f);
}

Rat Rat::binomial(unsigned n, unsigned k) {
    if (k > n) return Rat(0);
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return Rat(b);
}

Rat rational_round(double x, std::int64_t max_den) {
    if (max_den < 1) throw std::invalid_argument("rational_round: max_den must be >= 1");
    if (!std::isfinite(x)) throw std::domain_error("rational_round: non-finite input");

    const bool neg = x < 0;
    const double v = neg ? -x : x;

    // Continued-fraction walk; p1/q1 is the newest convergent, p0/q0 the
    // one before. Stops at the denominator bound, where the best admissible
    // approximation is either the last convergent or a semiconvergent.
    std::int64_t p0 = 0, q0 = 1;
    std::int64_t p1 = 1, q1 = 0;
    std::int64_t best_p = 0, best_q = 1;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_f = std::floor(frac);
        if (a_f > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4)) break;
        const std::int64_t a = static_cast<std::int64_t>(a_f);
        if (q1 != 0 && a > (max_den - q0) / q1) {
            const std::int64_t t = (max_den - q0) / q1;
            if (t >= 1) {
                const std::int64_t sp = p0 + t * p1;
                const std::int64_t sq = q0 + t * q1;
                const double err_semi = std::abs(v - static_cast<double>(sp) / sq);
                const double err_conv = std::abs(v - static_cast<double>(p1) / q1);
                if (err_semi < err_conv) {
                    best_p = sp;
                    best_q = sq;
                }
            }
            break;
        }
        const std::int64_t p2 = p0 + a * p1;
        const std::int64_t q2 = q0 + a * q1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        best_p = p1;
        best_q = q1;
        const double rem = frac - a_f;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    Rat r(Rat::Int(best_p), Rat::Int(best_q));
    return neg ? -r : r;
}

}  // namespace ccforge
