#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stablewave/geometry.hpp"
#include "stablewave/sigma.hpp"
#include "stablewave/stable_measure.hpp"
#include "stablewave/wave_kernel.hpp"

namespace stablewave {

/// A batch of field evaluations together with everything needed to
/// regenerate them bit-for-bit.
struct FieldSample {
    std::vector<Point2> xs;
    std::vector<double> ts;
    std::vector<double> values;  // row-major: values[it * xs.size() + ix]
    // provenance
    std::uint64_t seed = 0;
    std::size_t K = 0;
    double alpha = 0.0;
    double quad_tol = 0.0;
    std::string sigma_id;
};

/// Result of the dyadic-increment log-log regression.
struct HoelderEstimate {
    double exponent = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double h_min = 0.0;
    double h_max = 0.0;
};

/// Samples of |U| approaching an atom along a ray, with the fitted
/// coefficient of ln(1/r).
struct BlowupProbe {
    std::vector<std::pair<double, double>> samples;  // (radius, |U(xi_k + r e)|)
    double slope = 0.0;            // |fitted coefficient of ln(1/r)|
    double predicted_slope = 0.0;  // C_alpha Gamma_k^{-1/a} phi(xi_k)^{-1/a} |g_k| / (2 pi a^2)
};

/// Truncated series for the candidate solution:
///   U(x,t) = C_alpha sum_{k<=K} Gamma_k^{-1/alpha} phi(xi_k)^{-1/alpha}
///            G(x, xi_k, t) g_k.
/// Atoms outside the light cone B(x, at) are skipped without evaluating the
/// kernel.  Throws SingularAtomError when x coincides with an atom at which
/// sigma(xi_k, t) != 0 (the kernel diverges there).
double evaluate_U(const TruncatedLePage& series, const Point2& x, double t,
                  const SigmaCoefficient& sigma, const WaveKernelParams& params);

/// Evaluates U on the product grid xs x ts.  Values are identical to
/// pointwise evaluate_U calls: each point uses the same fixed per-point
/// summation order, so the result does not depend on how the points are
/// scheduled across threads.
FieldSample evaluate_U_grid(const TruncatedLePage& series,
                            const std::vector<Point2>& xs,
                            const std::vector<double>& ts,
                            const SigmaCoefficient& sigma,
                            const WaveKernelParams& params);

/// Estimates the time-Hoelder exponent of t -> U(x,t) on [0,T]: evaluates U
/// on the dyadic grid t_i = i T 2^{-n}, forms the increment modulus
///   m(h) = max_j |U(x, t_j + h) - U(x, t_j)|,   h = T 2^{-l}, l = 1..n,
/// over all grid windows, and regresses ln m(h) on ln h.  Throws
/// std::runtime_error("degenerate path") when fewer than 3 levels have a
/// nonzero modulus (e.g. sigma == 0).
HoelderEstimate hoelder_exponent(const TruncatedLePage& series, const Point2& x,
                                 double T, int n_levels,
                                 const SigmaCoefficient& sigma,
                                 const WaveKernelParams& params);

/// Evaluates U at xi_k + r * direction for each radius and fits U against
/// ln(1/r); the reported slope is the absolute fitted coefficient, to be
/// compared with the atom's own log-divergence rate (predicted_slope).
/// Radii must all be below at and below half the distance to the nearest
/// other atom (otherwise the fit is contaminated and an error is thrown).
BlowupProbe blowup_probe(const TruncatedLePage& series, std::size_t k, double t,
                         const std::vector<double>& radii, const Point2& direction,
                         const SigmaCoefficient& sigma,
                         const WaveKernelParams& params);

/// Writes a FieldSample as CSV (`x1,x2,t,U`) preceded by a provenance
/// header block (`# seed=...` etc.); 17-significant-digit values.
void save_field_csv(const FieldSample& sample, const std::string& path);

}  // namespace stablewave
