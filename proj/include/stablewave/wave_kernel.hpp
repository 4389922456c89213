#pragma once

#include "stablewave/geometry.hpp"
#include "stablewave/sigma.hpp"

namespace stablewave {

/// Parameters of the wave operator (d^2/dt^2 - a^2 Laplacian) and of the
/// quadratures used to evaluate its kernel.
struct WaveKernelParams {
    double a = 1.0;            // wave speed
    double quad_tol = 1e-6;    // absolute quadrature tolerance
    int max_refine = 2000;     // adaptive refinement budget per integral
};

/// Kernel of the 2-D wave equation with multiplicative coefficient:
///   G(x,y,t) = 1/(2 pi a) int_0^{t-r/a} sigma(y,tau) / sqrt(a^2(t-tau)^2 - r^2) dtau
/// for r = |x-y| < a t, and 0 otherwise.  The endpoint singularity is removed
/// exactly by the substitution t - tau = (r/a) cosh(u), giving
///   G = 1/(2 pi a^2) int_0^{arccosh(at/r)} sigma(y, t - (r/a) cosh u) du.
/// Throws QuadratureBudgetError (partial value scaled to kernel units) when
/// the refinement budget is exhausted, and std::domain_error at r == 0 where
/// the kernel diverges.
double kernel_G(const Point2& x, const Point2& y, double t,
                const SigmaCoefficient& sigma, const WaveKernelParams& params);

/// Explicit upper bound |G(x,y,t)| <= C/(2 pi a^2) * arccosh(at/r) inside the
/// light cone, 0 outside; tight when sigma is the constant C.
double kernel_G_log_bound(const Point2& x, const Point2& y, double t,
                          double bound_C, double a);

/// Closed form for constant sigma == c:  c * arccosh(at/r) / (2 pi a^2).
double kernel_G_closed_const(double c, double r, double t, double a);

/// int_{B(x,at)} |G(x,y,t)|^alpha dy, computed in polar coordinates about x
/// with normalized radius (y = x + at*r*e(phi), r in (0,1]).  The integrand's
/// r -> 0 log singularity is integrable; adaptive quadrature handles it since
/// Gauss-Kronrod nodes avoid the endpoints.
double kernel_alpha_norm(const Point2& x, double t, const SigmaCoefficient& sigma,
                         double alpha, const WaveKernelParams& params);

/// The explicit majorant of the alpha-norm obtained from the log bound:
///   (at)^2 (C/(2 pi a^2))^alpha int_0^{2pi} int_0^1 r (ln(2/r))^alpha dr dphi.
double kernel_alpha_norm_bound(double t, double bound_C, double a, double alpha,
                               double quad_tol);

}  // namespace stablewave
