#pragma once

#include <cmath>
#include <functional>

#include "stablewave/errors.hpp"

namespace stablewave {

/// Result of an adaptive quadrature: the integral, an a-posteriori error
/// estimate, and the number of Gauss-Kronrod panels consumed.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
};

/// Adaptive Gauss-Kronrod 7-15 integration of f over [lo, hi] to absolute
/// tolerance abs_tol.  The worst panel (largest error estimate) is bisected
/// until the summed estimate drops below abs_tol; the final value is a
/// compensated sum over panels in left-to-right order, so the result is a
/// deterministic function of (f, lo, hi, abs_tol, max_panels).
///
/// Endpoints are never evaluated (all Kronrod nodes are interior), so
/// integrable endpoint singularities are admissible.
///
/// Throws QuadratureBudgetError with the partial value once max_panels
/// panels exist and the tolerance is still unmet.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double abs_tol, int max_panels = 4000);

/// Running compensated (Neumaier) sum; the accumulation order is the caller's
/// insertion order, which fixes the floating-point result across runs.
class NeumaierSum {
  public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double result() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace stablewave
