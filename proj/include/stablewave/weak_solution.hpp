#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stablewave/geometry.hpp"
#include "stablewave/sigma.hpp"
#include "stablewave/stable_measure.hpp"
#include "stablewave/wave_kernel.hpp"

namespace stablewave {

/// Smooth compactly supported test function theta(x,t) with its second time
/// derivative and spatial Laplacian.  Support: B(center, r_space) in space,
/// [t0 - r_time, t0 + r_time] intersected with t >= 0 in time.
struct TestFunction {
    Point2 center{0.0, 0.0};
    double t0 = 0.0;
    double r_space = 1.0;
    double r_time = 1.0;
    std::function<double(const Point2&, double)> eval;
    std::function<double(const Point2&, double)> d2t;
    std::function<double(const Point2&, double)> laplacian;
    // Optional fused d2t - a^2 * laplacian sharing one exponential; when set
    // it must reproduce the two-call composition bit for bit (make_bump does).
    std::function<double(const Point2&, double, double)> psi;
    // Optional separable structure theta(x,t) = space(x) * time(t).  When all
    // four are set, weak-form integrators may use the factored form
    // psi = space * time_d2 - a^2 * space_lap * time, which lets the angular
    // integrals (functions of the radius alone) be hoisted out of the time
    // quadrature.  make_bump provides them; sums or custom evals leave them
    // unset and take the direct space-time path.
    std::function<double(const Point2&)> space;
    std::function<double(const Point2&)> space_lap;
    std::function<double(double)> time;
    std::function<double(double)> time_d2;
    bool fd_derivatives = false;  // derivatives from finite differences, not closed form

    double t_lo() const { return t0 - r_time < 0.0 ? 0.0 : t0 - r_time; }
    double t_hi() const { return t0 + r_time; }
};

/// Both sides of the weak-form identity at truncation level K, with the
/// term-by-term breakdown the proof reduces to.
struct WeakFormReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;                  // lhs - rhs exactly as computed
    std::vector<double> lhs_terms;          // weighted per-atom space-time integrals
    std::vector<double> rhs_terms;          // weighted per-atom time integrals
    std::vector<double> per_atom_residuals; // lhs_terms[k] - rhs_terms[k]
    double quad_tol = 0.0;
    bool fd_derivatives = false;
};

/// Separable bump theta(x,t) = B(|x-center|^2/r_space^2) * B(((t-t0)/r_time)^2)
/// with B(rho) = exp(-1/(1-rho)) for rho < 1 and 0 otherwise; d2t and
/// laplacian are closed-form.
TestFunction make_bump(const Point2& center, double t0, double r_space, double r_time);

/// Wraps an arbitrary smooth compactly supported eval with 5-point central
/// finite differences for d2t and laplacian (fd_derivatives flag set).
TestFunction make_custom_fd(const Point2& center, double t0, double r_space,
                            double r_time,
                            std::function<double(const Point2&, double)> eval);

/// psi(x,t) = d^2 theta/dt^2 - a^2 * Laplacian(theta).
double wave_operator_psi(const TestFunction& theta, const Point2& x, double t, double a);

/// Checks the Poisson-formula identity
///   1/(2 pi a) int_tau^inf iint_{B(x,a(t-tau))}
///       psi(y,t)/sqrt(a^2(t-tau)^2 - |x-y|^2) dy dt  =  theta(x,tau);
/// the radial square-root singularity is removed by rho = a(t-tau) sin(v).
/// Returns |LHS - theta(x,tau)|.
double poisson_identity_residual(const TestFunction& theta, const Point2& x,
                                 double tau, double a, double quad_tol);

/// L(theta): sum over atoms of lepage_weight(k) times the space-time integral
/// of G(., xi_k, .) * psi over the support of theta.  For sigma evaluated at
/// the atom the kernel depends on x only through rho = |x - xi_k|, so the
/// spatial integral runs radially -- in the desingularized variable
/// v = arccosh(a t / rho), where the kernel is smooth -- with an inner
/// angular integral of psi over the arc meeting the support.
double weak_lhs(const TestFunction& theta, const TruncatedLePage& series,
                const SigmaCoefficient& sigma, const WaveKernelParams& params);

/// R(theta): sum over atoms inside the spatial support of lepage_weight(k)
/// times int theta(xi_k,t) sigma(xi_k,t) dt over the time support.
double weak_rhs(const TestFunction& theta, const TruncatedLePage& series,
                const SigmaCoefficient& sigma, const WaveKernelParams& params);

/// Full report: lhs, rhs, and the per-atom term-by-term residuals.
WeakFormReport weak_residual(const TestFunction& theta, const TruncatedLePage& series,
                             const SigmaCoefficient& sigma,
                             const WaveKernelParams& params);

/// Writes `k,lhs_term,rhs_term,residual` rows (k 1-based) plus a summary line.
void save_weak_report_csv(const WeakFormReport& report, const std::string& path);

}  // namespace stablewave
