#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stablewave/geometry.hpp"

namespace stablewave {

/// Sampling density for the series atoms.  Both are continuous and strictly
/// positive on the plane; the heavy-tailed Cauchy default keeps the
/// phi(xi)^(-1/alpha) weights polynomially bounded for remote atoms.
enum class DensityId { cauchy, gauss };

std::string density_name(DensityId id);
DensityId density_from_name(const std::string& name);

/// Parameters of the symmetric alpha-stable law being simulated.
struct StableParams {
    double alpha = 1.5;               // stability index, in (0,2) \ {1}
    DensityId density = DensityId::cauchy;
};

/// One realization of the truncated LePage series: Poisson arrival times
/// Gamma_k, atom locations xi_k, and Gaussian marks g_k with E|g_k|^alpha = 1.
struct TruncatedLePage {
    StableParams params;
    std::uint64_t seed = 0;
    std::size_t K = 0;
    std::vector<double> gammas;       // strictly increasing, positive
    std::vector<Point2> atoms;
    std::vector<double> gaussians;
};

/// Empirical characteristic function of a scalar sample.
struct EmpiricalCF {
    std::vector<double> u_grid;
    std::vector<double> cf_real;      // mean of cos(uX)
    std::vector<double> cf_imag;      // mean of sin(uX); symmetry diagnostic
    std::vector<double> std_errors;   // standard error of the real part
    std::size_t n_samples = 0;
};

/// Normalizing constant of the LePage series, chosen so that the series for
/// M(A) is SaS with scale parameter lambda(A) under the characteristic-
/// function convention E exp(i u X) = exp(-sigma^alpha |u|^alpha):
///
///   C_alpha = ((1 - alpha) / (Gamma(2 - alpha) cos(pi alpha / 2)))^(1/alpha).
///
/// Rejects alpha = 1, where the formula degenerates to 0/0.
double lepage_constant(double alpha);

/// Standard deviation s such that E|N(0, s^2)|^alpha = 1.
double gaussian_alpha_scale(double alpha);

/// Density value phi(p) of the selected atom distribution.
double density_value(DensityId id, const Point2& p);

/// Draws the full series realization.  The master seed is split into three
/// independent sub-streams (arrival times, atoms, marks), mirroring the
/// product structure of the underlying probability space.
TruncatedLePage sample_series(const StableParams& params, std::uint64_t seed, std::size_t K);

/// Weight of the k-th term (0-based), C_alpha Gamma_k^(-1/alpha) phi(xi_k)^(-1/alpha) g_k.
double lepage_weight(const TruncatedLePage& series, std::size_t k);

/// Same weight with a precomputed lepage_constant(series.params.alpha);
/// avoids re-deriving the constant inside per-atom loops.
double lepage_weight(const TruncatedLePage& series, std::size_t k, double c_alpha);

/// K-term series for M(A): compensated sum of weights over atoms inside the
/// region, in ascending k.
double measure_of_set(const TruncatedLePage& series, const Region& region);

/// K-term series for the stochastic integral I(f); terms with f(xi_k) == 0
/// are skipped, which leaves the accumulation sequence identical to
/// measure_of_set when f is an indicator.
double integrate_function(const TruncatedLePage& series,
                          const std::function<double(const Point2&)>& f);

/// Iterated adaptive quadrature of the alpha-norm integral int |f|^alpha
/// over a bounded rectangle.
double alpha_norm_numeric(const std::function<double(const Point2&)>& f, const Rect& domain,
                          double alpha, double tol, int max_panels = 20000);

/// Empirical characteristic function with per-point standard errors.
EmpiricalCF empirical_cf(const std::vector<double>& samples, const std::vector<double>& u_grid);

}  // namespace stablewave
