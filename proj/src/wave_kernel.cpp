#include "stablewave/wave_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stablewave/errors.hpp"
#include "stablewave/quadrature.hpp"

namespace stablewave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// at/r below this threshold counts as the cone boundary: the true kernel is
// O(sqrt(at - r)) there and arccosh would lose all digits anyway.
constexpr double kConeGuard = 1.0 + 1e-12;

void require_kernel_params(const WaveKernelParams& params) {
    if (!(params.a > 0.0)) {
        throw std::invalid_argument("wave speed a must be positive");
    }
    if (!(params.quad_tol > 0.0)) {
        throw std::invalid_argument("quad_tol must be positive");
    }
}

}  // namespace

double kernel_G(const Point2& x, const Point2& y, double t,
                const SigmaCoefficient& sigma, const WaveKernelParams& params) {
    require_kernel_params(params);
    if (!(t >= 0.0)) {
        throw std::domain_error("kernel_G requires t >= 0");
    }
    const double a = params.a;
    const double r = distance(x, y);
    if (r >= a * t) {
        return 0.0;
    }
    if (r == 0.0) {
        throw std::domain_error("kernel_G diverges at zero radius (y == x)");
    }
    const double z = a * t / r;
    if (z < kConeGuard) {
        return 0.0;
    }
    const double u_max = std::acosh(z);
    const double prefactor = 1.0 / (kTwoPi * a * a);
    const double r_over_a = r / a;
    const auto integrand = [&](double u) {
        // Rounding can push the time argument a hair below 0 at u = u_max.
        const double tau = std::max(t - r_over_a * std::cosh(u), 0.0);
        return sigma.eval(y, tau);
    };
    try {
        const QuadResult q = integrate_adaptive(integrand, 0.0, u_max,
                                                params.quad_tol / prefactor,
                                                params.max_refine);
        return prefactor * q.value;
    } catch (const QuadratureBudgetError& e) {
        throw QuadratureBudgetError(e.what(), prefactor * e.partial_value,
                                    prefactor * e.error_estimate);
    }
}

double kernel_G_log_bound(const Point2& x, const Point2& y, double t,
                          double bound_C, double a) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("wave speed a must be positive");
    }
    if (!(t >= 0.0)) {
        throw std::domain_error("kernel_G_log_bound requires t >= 0");
    }
    const double r = distance(x, y);
    if (r >= a * t) {
        return 0.0;
    }
    if (r == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double z = a * t / r;
    if (z < kConeGuard) {
        return 0.0;
    }
    return bound_C / (kTwoPi * a * a) * std::acosh(z);
}

double kernel_G_closed_const(double c, double r, double t, double a) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("wave speed a must be positive");
    }
    if (!(t >= 0.0)) {
        throw std::domain_error("kernel_G_closed_const requires t >= 0");
    }
    if (r >= a * t || r <= 0.0) {
        return r == 0.0 && t > 0.0
                   ? std::numeric_limits<double>::infinity()
                   : 0.0;
    }
    const double z = a * t / r;
    if (z < kConeGuard) {
        return 0.0;
    }
    return c / (kTwoPi * a * a) * std::acosh(z);
}

double kernel_alpha_norm(const Point2& x, double t, const SigmaCoefficient& sigma,
                         double alpha, const WaveKernelParams& params) {
    require_kernel_params(params);
    if (!(t >= 0.0)) {
        throw std::domain_error("kernel_alpha_norm requires t >= 0");
    }
    if (!(alpha > 0.0) || alpha >= 2.0) {
        throw std::domain_error("kernel_alpha_norm requires alpha in (0,2)");
    }
    if (t == 0.0) {
        return 0.0;
    }
    const double a = params.a;
    const double at = a * t;
    const double tol = params.quad_tol;
    // Nested tolerances: the outer angular error plus 2*pi times the worst
    // inner radial error stays below tol (factor-2 safety on each level).
    const double inner_tol = tol / (2.0 * kTwoPi * 2.0);
    const auto radial = [&](double phi) {
        const Point2 e{std::cos(phi), std::sin(phi)};
        const auto f = [&](double r) {
            const Point2 y{x.x + at * r * e.x, x.y + at * r * e.y};
            const double g = kernel_G(x, y, t, sigma, params);
            return std::pow(std::abs(g), alpha) * r;
        };
        return integrate_adaptive(f, 0.0, 1.0, inner_tol, params.max_refine).value;
    };
    try {
        const QuadResult q = integrate_adaptive(radial, 0.0, kTwoPi, tol / 2.0,
                                                params.max_refine);
        return at * at * q.value;
    } catch (const QuadratureBudgetError& e) {
        throw QuadratureBudgetError(e.what(), at * at * e.partial_value,
                                    at * at * e.error_estimate);
    }
}

double kernel_alpha_norm_bound(double t, double bound_C, double a, double alpha,
                               double quad_tol) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("wave speed a must be positive");
    }
    if (!(t >= 0.0)) {
        throw std::domain_error("kernel_alpha_norm_bound requires t >= 0");
    }
    if (t == 0.0) {
        return 0.0;
    }
    const double at = a * t;
    const auto f = [alpha](double r) {
        return r * std::pow(std::log(2.0 / r), alpha);
    };
    const QuadResult q = integrate_adaptive(f, 0.0, 1.0, quad_tol, 20000);
    const double c_pref = std::pow(bound_C / (kTwoPi * a * a), alpha);
    return at * at * c_pref * kTwoPi * q.value;
}

}  // namespace stablewave
