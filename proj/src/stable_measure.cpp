#include "stablewave/stable_measure.hpp"

#include <cmath>
#include <stdexcept>

#include "stablewave/errors.hpp"
#include "stablewave/quadrature.hpp"
#include "stablewave/rng.hpp"

namespace stablewave {

std::string density_name(DensityId id) {
    switch (id) {
        case DensityId::cauchy: return "cauchy";
        case DensityId::gauss: return "gauss";
    }
    throw std::logic_error("unreachable density id");
}

DensityId density_from_name(const std::string& name) {
    if (name == "cauchy") return DensityId::cauchy;
    if (name == "gauss") return DensityId::gauss;
    throw std::invalid_argument("unknown atom density '" + name + "' (expected cauchy or gauss)");
}

double lepage_constant(double alpha) {
    if (alpha == 1.0)
        throw std::domain_error(
            "degenerate normalization (0/0 in the stable series constant at alpha=1)");
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("stability index must lie in (0,2)");
    // Both numerator and cos factor change sign together at alpha = 1, so the
    // ratio stays positive on (0,1) and (1,2).
    const double ratio = (1.0 - alpha) / (std::tgamma(2.0 - alpha) * std::cos(M_PI * alpha / 2.0));
    return std::pow(ratio, 1.0 / alpha);
}

double gaussian_alpha_scale(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::domain_error("stability index must lie in (0,2]");
    // E|N(0,1)|^alpha = 2^(alpha/2) Gamma((alpha+1)/2) / sqrt(pi).
    const double abs_moment =
        std::pow(2.0, alpha / 2.0) * std::tgamma((alpha + 1.0) / 2.0) / std::sqrt(M_PI);
    return std::pow(abs_moment, -1.0 / alpha);
}

double density_value(DensityId id, const Point2& p) {
    const double r2 = p.x * p.x + p.y * p.y;
    switch (id) {
        case DensityId::cauchy:
            // Isotropic bivariate Cauchy-type density (2pi)^-1 (1+|x|^2)^-3/2.
            return 1.0 / (2.0 * M_PI) * std::pow(1.0 + r2, -1.5);
        case DensityId::gauss:
            return 1.0 / (2.0 * M_PI) * std::exp(-0.5 * r2);
    }
    throw std::logic_error("unreachable density id");
}

TruncatedLePage sample_series(const StableParams& params, std::uint64_t seed, std::size_t K) {
    if (params.alpha == 1.0 || !(params.alpha > 0.0 && params.alpha < 2.0))
        throw std::domain_error("stability index must lie in (0,2) excluding 1");

    TruncatedLePage series;
    series.params = params;
    series.seed = seed;
    series.K = K;
    series.gammas.reserve(K);
    series.atoms.reserve(K);
    series.gaussians.reserve(K);

    SplitMix64 split(seed);
    std::mt19937_64 gamma_rng(split.next());
    std::mt19937_64 atom_rng(split.next());
    std::mt19937_64 mark_rng(split.next());

    double arrival = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        arrival += exponential1(gamma_rng);
        series.gammas.push_back(arrival);
    }

    for (std::size_t k = 0; k < K; ++k) {
        if (params.density == DensityId::cauchy) {
            // Radial inverse CDF of the Cauchy-type density: R = sqrt((1-u)^-2 - 1).
            const double u = uniform01(atom_rng);
            const double radius = std::sqrt(1.0 / ((1.0 - u) * (1.0 - u)) - 1.0);
            const double phi = 2.0 * M_PI * uniform01(atom_rng);
            series.atoms.push_back({radius * std::cos(phi), radius * std::sin(phi)});
        } else {
            double z0, z1;
            normal_pair(atom_rng, z0, z1);
            series.atoms.push_back({z0, z1});
        }
    }

    const double scale = gaussian_alpha_scale(params.alpha);
    double cached = 0.0;
    bool have_cached = false;
    for (std::size_t k = 0; k < K; ++k) {
        if (have_cached) {
            series.gaussians.push_back(scale * cached);
            have_cached = false;
        } else {
            double z0, z1;
            normal_pair(mark_rng, z0, z1);
            series.gaussians.push_back(scale * z0);
            cached = z1;
            have_cached = true;
        }
    }
    return series;
}

double lepage_weight(const TruncatedLePage& series, std::size_t k, double c_alpha) {
    const double inv_alpha = 1.0 / series.params.alpha;
    return c_alpha * std::pow(series.gammas[k], -inv_alpha) *
           std::pow(density_value(series.params.density, series.atoms[k]), -inv_alpha) *
           series.gaussians[k];
}

double lepage_weight(const TruncatedLePage& series, std::size_t k) {
    if (k >= series.K) throw std::out_of_range("atom index beyond truncation length");
    return lepage_weight(series, k, lepage_constant(series.params.alpha));
}

double measure_of_set(const TruncatedLePage& series, const Region& region) {
    const double c_alpha = lepage_constant(series.params.alpha);
    NeumaierSum acc;
    for (std::size_t k = 0; k < series.K; ++k) {
        if (!region.contains(series.atoms[k])) continue;
        acc.add(lepage_weight(series, k, c_alpha));
    }
    return acc.result();
}

double integrate_function(const TruncatedLePage& series,
                          const std::function<double(const Point2&)>& f) {
    const double c_alpha = lepage_constant(series.params.alpha);
    NeumaierSum acc;
    for (std::size_t k = 0; k < series.K; ++k) {
        const double fk = f(series.atoms[k]);
        if (!std::isfinite(fk))
            throw NonFiniteAtomError(
                "integrand is non-finite at atom " + std::to_string(k + 1), k);
        if (fk == 0.0) continue;
        acc.add(lepage_weight(series, k, c_alpha) * fk);
    }
    return acc.result();
}

double alpha_norm_numeric(const std::function<double(const Point2&)>& f, const Rect& domain,
                          double alpha, double tol, int max_panels) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("stability index must lie in (0,2)");
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
    const double height = domain.y1 - domain.y0;
    const double inner_tol = tol / (2.0 * std::max(height, 1.0) * 2.0);
    auto outer = [&](double y) {
        auto inner = [&](double x) { return std::pow(std::abs(f({x, y})), alpha); };
        return integrate_adaptive(inner, domain.x0, domain.x1, inner_tol, max_panels).value;
    };
    return integrate_adaptive(outer, domain.y0, domain.y1, tol / 2.0, max_panels).value;
}

EmpiricalCF empirical_cf(const std::vector<double>& samples, const std::vector<double>& u_grid) {
    if (samples.size() < 2)
        throw std::invalid_argument("empirical CF requires at least 2 samples");
    EmpiricalCF out;
    out.u_grid = u_grid;
    out.n_samples = samples.size();
    const double n = static_cast<double>(samples.size());
    for (double u : u_grid) {
        NeumaierSum sum_cos, sum_sin, sum_cos2;
        for (double x : samples) {
            const double c = std::cos(u * x);
            sum_cos.add(c);
            sum_sin.add(std::sin(u * x));
            sum_cos2.add(c * c);
        }
        const double mean_cos = sum_cos.result() / n;
        const double mean_sin = sum_sin.result() / n;
        const double var = std::max(0.0, sum_cos2.result() / n - mean_cos * mean_cos);
        out.cf_real.push_back(mean_cos);
        out.cf_imag.push_back(mean_sin);
        out.std_errors.push_back(std::sqrt(var / n));
    }
    return out;
}

}  // namespace stablewave
