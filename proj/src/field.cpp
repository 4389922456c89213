#include "stablewave/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include "stablewave/errors.hpp"
#include "stablewave/quadrature.hpp"

namespace stablewave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Least-squares line y = slope*x + intercept; returns {slope, intercept, r^2}.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy > 0.0) {
        const double ss_res = syy - sxy * sxy / sxx;
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

}  // namespace

double evaluate_U(const TruncatedLePage& series, const Point2& x, double t,
                  const SigmaCoefficient& sigma, const WaveKernelParams& params) {
    if (!(t >= 0.0)) {
        throw std::domain_error("evaluate_U requires t >= 0");
    }
    const double c_alpha = lepage_constant(series.params.alpha);
    const double cone_radius = params.a * t;
    NeumaierSum acc;
    for (std::size_t k = 0; k < series.K; ++k) {
        const double r = distance(x, series.atoms[k]);
        if (r >= cone_radius) {
            continue;  // kernel vanishes: no quadrature needed
        }
        if (r == 0.0) {
            if (sigma.eval(series.atoms[k], t) != 0.0) {
                throw SingularAtomError("evaluation at singular atom", k);
            }
            // sigma vanishes at (xi_k, t): the diverging kernel is suppressed
            // multiplicatively; the term contributes nothing.
            continue;
        }
        const double g = kernel_G(x, series.atoms[k], t, sigma, params);
        acc.add(lepage_weight(series, k, c_alpha) * g);
    }
    return acc.result();
}

FieldSample evaluate_U_grid(const TruncatedLePage& series,
                            const std::vector<Point2>& xs,
                            const std::vector<double>& ts,
                            const SigmaCoefficient& sigma,
                            const WaveKernelParams& params) {
    FieldSample sample;
    sample.xs = xs;
    sample.ts = ts;
    sample.values.assign(xs.size() * ts.size(), 0.0);
    sample.seed = series.seed;
    sample.K = series.K;
    sample.alpha = series.params.alpha;
    sample.quad_tol = params.quad_tol;
    sample.sigma_id = sigma.id;
    // Each point is evaluated independently with its own fixed summation
    // order, so the values cannot depend on the evaluation schedule.
    for (std::size_t it = 0; it < ts.size(); ++it) {
        for (std::size_t ix = 0; ix < xs.size(); ++ix) {
            try {
                sample.values[it * xs.size() + ix] =
                    evaluate_U(series, xs[ix], ts[it], sigma, params);
            } catch (const SingularAtomError& e) {
                throw SingularAtomError("probe " + std::to_string(it * xs.size() + ix) +
                                            ": " + e.what(),
                                        e.atom_index);
            } catch (const QuadratureBudgetError& e) {
                throw QuadratureBudgetError(
                    "probe " + std::to_string(it * xs.size() + ix) + ": " + e.what(),
                    e.partial_value, e.error_estimate);
            }
        }
    }
    return sample;
}

HoelderEstimate hoelder_exponent(const TruncatedLePage& series, const Point2& x,
                                 double T, int n_levels,
                                 const SigmaCoefficient& sigma,
                                 const WaveKernelParams& params) {
    if (!(T > 0.0)) {
        throw std::invalid_argument("horizon T must be positive");
    }
    if (n_levels < 3) {
        throw std::invalid_argument("need n_levels >= 3 dyadic scales");
    }
    const std::size_t n_grid = (std::size_t{1} << n_levels) + 1;
    std::vector<double> ts(n_grid);
    for (std::size_t i = 0; i < n_grid; ++i) {
        ts[i] = T * static_cast<double>(i) / static_cast<double>(n_grid - 1);
    }
    const FieldSample path = evaluate_U_grid(series, {x}, ts, sigma, params);
    const std::vector<double>& vals = path.values;

    std::vector<double> log_h, log_m;
    for (int level = 1; level <= n_levels; ++level) {
        const std::size_t step = std::size_t{1} << (n_levels - level);
        const double h = T * std::pow(2.0, -level);
        double m = 0.0;  // sup over all windows of length h on the grid
        for (std::size_t j = 0; j + step < n_grid; ++j) {
            m = std::max(m, std::abs(vals[j + step] - vals[j]));
        }
        if (m > 0.0) {
            log_h.push_back(std::log(h));
            log_m.push_back(std::log(m));
        }
    }
    if (log_h.size() < 3) {
        throw std::runtime_error(
            "degenerate path: increment moduli span fewer than 3 dyadic scales");
    }
    const LineFit fit = fit_line(log_h, log_m);
    HoelderEstimate est;
    est.exponent = fit.slope;
    est.intercept = fit.intercept;
    est.r_squared = fit.r_squared;
    est.h_min = std::exp(*std::min_element(log_h.begin(), log_h.end()));
    est.h_max = std::exp(*std::max_element(log_h.begin(), log_h.end()));
    return est;
}

BlowupProbe blowup_probe(const TruncatedLePage& series, std::size_t k, double t,
                         const std::vector<double>& radii, const Point2& direction,
                         const SigmaCoefficient& sigma,
                         const WaveKernelParams& params) {
    if (k >= series.K) {
        throw std::out_of_range("atom index beyond truncation length");
    }
    if (radii.empty()) {
        throw std::invalid_argument("need at least one probe radius");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) {
            throw std::invalid_argument("probe radii must be positive");
        }
        if (i > 0 && !(radii[i] < radii[i - 1])) {
            throw std::invalid_argument("probe radii must be strictly decreasing");
        }
    }
    if (std::abs(norm(direction) - 1.0) > 1e-9) {
        throw std::invalid_argument("direction must be a unit vector");
    }
    const double r_max = radii.front();
    if (t > 0.0 && !(r_max < params.a * t)) {
        throw std::invalid_argument("probe radii must stay inside the light cone");
    }
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < series.K; ++j) {
        if (j == k) continue;
        sep = std::min(sep, distance(series.atoms[j], series.atoms[k]));
    }
    if (!(r_max < 0.5 * sep)) {
        throw std::invalid_argument(
            "nearest-atom separation violated: another atom within twice the "
            "largest probe radius would contaminate the log fit");
    }

    BlowupProbe probe;
    probe.samples.reserve(radii.size());
    std::vector<double> log_inv_r(radii.size()), u_signed(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const Point2 y{series.atoms[k].x + radii[i] * direction.x,
                       series.atoms[k].y + radii[i] * direction.y};
        const double u = evaluate_U(series, y, t, sigma, params);
        probe.samples.emplace_back(radii[i], std::abs(u));
        log_inv_r[i] = std::log(1.0 / radii[i]);
        u_signed[i] = u;
    }
    // Fit the signed values: near the atom U = (slope)*ln(1/r) + background,
    // and the background may oppose the atom's term, which would fold a fit
    // of |U|.  The reported slope is the magnitude of the log coefficient.
    probe.slope = radii.size() > 1 ? std::abs(fit_line(log_inv_r, u_signed).slope) : 0.0;
    probe.predicted_slope =
        std::abs(lepage_weight(series, k)) / (kTwoPi * params.a * params.a);
    return probe;
}

void save_field_csv(const FieldSample& sample, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf), "# seed=%llu\n# K=%zu\n# alpha=%.17g\n",
                  static_cast<unsigned long long>(sample.seed), sample.K, sample.alpha);
    out << buf;
    std::snprintf(buf, sizeof(buf), "# quad_tol=%.17g\n# sigma=%s\n",
                  sample.quad_tol, sample.sigma_id.c_str());
    out << buf;
    out << "x1,x2,t,U\n";
    for (std::size_t it = 0; it < sample.ts.size(); ++it) {
        for (std::size_t ix = 0; ix < sample.xs.size(); ++ix) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n",
                          sample.xs[ix].x, sample.xs[ix].y, sample.ts[it],
                          sample.values[it * sample.xs.size() + ix]);
            out << buf;
        }
    }
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

}  // namespace stablewave
