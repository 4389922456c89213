#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "stablewave/errors.hpp"
#include "stablewave/quadrature.hpp"
#include "stablewave/weak_solution.hpp"

using namespace stablewave;

namespace {

TruncatedLePage one_atom_series(double alpha, Point2 atom, double gamma, double mark) {
    TruncatedLePage series;
    series.params.alpha = alpha;
    series.seed = 7;
    series.K = 1;
    series.gammas = {gamma};
    series.atoms = {atom};
    series.gaussians = {mark};
    return series;
}

// Reference 5-point second difference, h chosen so that truncation and
// roundoff are both far below the comparison tolerance.
double second_diff(const std::function<double(double)>& f, double x0, double h) {
    return (-f(x0 - 2 * h) + 16.0 * f(x0 - h) - 30.0 * f(x0) + 16.0 * f(x0 + h) -
            f(x0 + 2 * h)) /
           (12.0 * h * h);
}

}  // namespace

TEST_CASE("bump: peak value, interior value, support boundary") {
    const TestFunction theta = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);
    CHECK(theta.eval({0.0, 0.0}, 0.6) == std::exp(-2.0));

    // One radius = one e-folding of the time factor: theta(x0, t0 - r_t/2)
    // has q = 1/4, so the value is exp(-1 - 4/3).
    const TestFunction wide = make_bump({0.0, 0.0}, 1.0, 1.0, 1.0);
    CHECK(wide.eval({0.0, 0.0}, 0.5) ==
          doctest::Approx(std::exp(-7.0 / 3.0)).epsilon(1e-14));

    CHECK(theta.eval({1.0, 0.0}, 0.6) == 0.0);
    CHECK(theta.eval({2.0, 0.0}, 0.6) == 0.0);
    CHECK(theta.eval({0.0, 0.0}, 1.1) == 0.0);
    CHECK(theta.eval({0.0, 0.0}, -0.2) == 0.0);
    CHECK(theta.d2t({1.5, 0.0}, 0.6) == 0.0);
    CHECK(theta.laplacian({0.0, 0.0}, 1.2) == 0.0);

    CHECK(theta.t_lo() == doctest::Approx(0.1));
    CHECK(theta.t_hi() == doctest::Approx(1.1));
    // Supports reaching below t = 0 are clipped.
    const TestFunction early = make_bump({0.0, 0.0}, 0.1, 1.0, 0.5);
    CHECK(early.t_lo() == 0.0);

    CHECK_THROWS_AS(make_bump({0.0, 0.0}, 0.5, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_bump({0.0, 0.0}, 0.5, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("bump derivatives agree with finite differences") {
    const Point2 center{0.3, -0.1};
    const double t0 = 0.8, rs = 1.2, rt = 0.6;
    const TestFunction theta = make_bump(center, t0, rs, rt);
    std::mt19937_64 rng(555);
    const auto u01 = [&] { return (rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 100; ++i) {
        // Stay at p, q <= 0.72 where the profile's derivatives are moderate.
        const Point2 x{center.x + rs * (1.2 * u01() - 0.6),
                       center.y + rs * (1.2 * u01() - 0.6)};
        const double t = t0 + rt * (1.7 * u01() - 0.85);

        const double d2t_fd = second_diff(
            [&](double s) { return theta.eval(x, s); }, t, 1e-4 * rt);
        const double d2t_an = theta.d2t(x, t);
        CHECK(std::abs(d2t_an - d2t_fd) < 1e-5 * std::max(1.0, std::abs(d2t_an)));

        const double lap_fd =
            second_diff([&](double s) { return theta.eval({s, x.y}, t); }, x.x,
                        1e-4 * rs) +
            second_diff([&](double s) { return theta.eval({x.x, s}, t); }, x.y,
                        1e-4 * rs);
        const double lap_an = theta.laplacian(x, t);
        CHECK(std::abs(lap_an - lap_fd) < 1e-5 * std::max(1.0, std::abs(lap_an)));
    }
}

TEST_CASE("finite-difference wrapper reproduces the closed-form bump") {
    const TestFunction exact = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);
    const TestFunction fd = make_custom_fd({0.0, 0.0}, 0.6, 1.0, 0.5, exact.eval);
    CHECK(fd.fd_derivatives);
    CHECK_FALSE(exact.fd_derivatives);
    for (const Point2 x : {Point2{0.0, 0.0}, Point2{0.3, -0.2}, Point2{-0.5, 0.1}}) {
        for (const double t : {0.45, 0.6, 0.8}) {
            CHECK(std::abs(fd.d2t(x, t) - exact.d2t(x, t)) <
                  1e-5 * std::max(1.0, std::abs(exact.d2t(x, t))));
            CHECK(std::abs(fd.laplacian(x, t) - exact.laplacian(x, t)) <
                  1e-5 * std::max(1.0, std::abs(exact.laplacian(x, t))));
        }
    }
    CHECK_THROWS_AS(make_custom_fd({0.0, 0.0}, 0.6, 1.0, 0.5, nullptr),
                    std::invalid_argument);
}

TEST_CASE("wave operator composition") {
    const TestFunction theta = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);
    const Point2 x{0.2, 0.1};
    CHECK(wave_operator_psi(theta, x, 0.5, 0.0) == theta.d2t(x, 0.5));
    CHECK(wave_operator_psi(theta, x, 0.5, 1.0) ==
          theta.d2t(x, 0.5) - theta.laplacian(x, 0.5));
}

TEST_CASE("Poisson-formula identity for the deterministic wave equation") {
    const TestFunction theta = make_bump({0.0, 0.0}, 1.5, 1.0, 1.0);

    CHECK(poisson_identity_residual(theta, {0.0, 0.0}, 1.0, 1.0, 1e-6) < 1e-6);

    // Both sides vanish beyond the time support or far from the bump.
    CHECK(poisson_identity_residual(theta, {0.0, 0.0}, 3.0, 1.0, 1e-6) == 0.0);
    CHECK(poisson_identity_residual(theta, {10.0, 0.0}, 1.0, 1.0, 1e-6) == 0.0);

    CHECK_THROWS_AS(poisson_identity_residual(theta, {0.0, 0.0}, -1.0, 1.0, 1e-6),
                    std::domain_error);
    CHECK_THROWS_AS(poisson_identity_residual(theta, {0.0, 0.0}, 1.0, 0.0, 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(poisson_identity_residual(theta, {0.0, 0.0}, 1.0, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("single-atom right-hand side against direct quadrature") {
    const WaveKernelParams params;
    const SigmaCoefficient sigma = make_holder_sigma(0.5);
    const Point2 atom{0.2, -0.1};
    const TruncatedLePage series = one_atom_series(1.5, atom, 0.9, 1.1);
    const TestFunction theta = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);

    const auto f = [&](double t) { return theta.eval(atom, t) * sigma.eval(atom, t); };
    const double oracle = lepage_weight(series, 0) *
                          integrate_adaptive(f, theta.t_lo(), theta.t_hi(), 1e-12,
                                             20000)
                              .value;
    CHECK(std::abs(weak_rhs(theta, series, sigma, params) - oracle) <=
          params.quad_tol * std::max(1.0, std::abs(oracle)));

    // An atom outside the spatial support contributes nothing.
    const TruncatedLePage far = one_atom_series(1.5, {5.0, 5.0}, 0.9, 1.1);
    CHECK(weak_rhs(theta, far, sigma, params) == 0.0);
}

TEST_CASE("single-atom weak identity holds to the documented tolerance") {
    WaveKernelParams params;
    params.quad_tol = 1e-6;
    const SigmaCoefficient one = make_const_sigma(1.0);
    const TruncatedLePage series = one_atom_series(1.5, {0.2, -0.1}, 0.9, 1.1);
    const TestFunction theta = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);
    const WeakFormReport report = weak_residual(theta, series, one, params);
    REQUIRE(report.lhs_terms.size() == 1);
    CHECK(std::abs(report.per_atom_residuals[0]) < 1e-3 * std::abs(report.rhs_terms[0]));
}

TEST_CASE("zero coefficient and empty series give exactly zero reports") {
    const WaveKernelParams params;
    const TestFunction theta = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);
    StableParams sp;
    sp.alpha = 1.5;

    const TruncatedLePage series = sample_series(sp, 14, 20);
    const WeakFormReport zero = weak_residual(theta, series, make_zero_sigma(), params);
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.residual == 0.0);
    for (const double v : zero.lhs_terms) CHECK(v == 0.0);
    for (const double v : zero.rhs_terms) CHECK(v == 0.0);

    const TruncatedLePage empty = sample_series(sp, 14, 0);
    const WeakFormReport none =
        weak_residual(theta, empty, make_const_sigma(1.0), params);
    CHECK(none.lhs == 0.0);
    CHECK(none.rhs == 0.0);
    CHECK(none.lhs_terms.empty());
}

TEST_CASE("report totals are the compensated sums of the stored terms") {
    const WaveKernelParams params;
    const SigmaCoefficient one = make_const_sigma(1.0);
    StableParams sp;
    sp.alpha = 1.25;
    const TruncatedLePage series = sample_series(sp, 88, 5);
    const TestFunction theta = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);
    const WeakFormReport report = weak_residual(theta, series, one, params);

    NeumaierSum lhs_acc, rhs_acc;
    for (std::size_t k = 0; k < report.lhs_terms.size(); ++k) {
        lhs_acc.add(report.lhs_terms[k]);
        rhs_acc.add(report.rhs_terms[k]);
        CHECK(report.per_atom_residuals[k] ==
              report.lhs_terms[k] - report.rhs_terms[k]);
    }
    CHECK(report.lhs == lhs_acc.result());
    CHECK(report.rhs == rhs_acc.result());
    CHECK(report.residual == report.lhs - report.rhs);
    CHECK(weak_lhs(theta, series, one, params) == report.lhs);
    CHECK(weak_rhs(theta, series, one, params) == report.rhs);
}

TEST_CASE("both sides are additive in the test function") {
    WaveKernelParams params;
    params.quad_tol = 1e-7;
    const SigmaCoefficient one = make_const_sigma(1.0);
    StableParams sp;
    sp.alpha = 1.5;
    const TruncatedLePage series = sample_series(sp, 60, 3);

    const TestFunction t1 = make_bump({-0.4, 0.0}, 0.6, 1.0, 0.5);
    const TestFunction t2 = make_bump({0.4, 0.0}, 0.6, 1.0, 0.5);
    TestFunction sum;
    sum.center = {0.0, 0.0};
    sum.t0 = 0.6;
    sum.r_space = 1.5;  // encloses both supports
    sum.r_time = 0.5;
    sum.eval = [=](const Point2& x, double t) { return t1.eval(x, t) + t2.eval(x, t); };
    sum.d2t = [=](const Point2& x, double t) { return t1.d2t(x, t) + t2.d2t(x, t); };
    sum.laplacian = [=](const Point2& x, double t) {
        return t1.laplacian(x, t) + t2.laplacian(x, t);
    };

    const double lhs_sum = weak_lhs(sum, series, one, params);
    const double lhs_split =
        weak_lhs(t1, series, one, params) + weak_lhs(t2, series, one, params);
    CHECK(std::abs(lhs_sum - lhs_split) < 1e-5);

    const double rhs_sum = weak_rhs(sum, series, one, params);
    const double rhs_split =
        weak_rhs(t1, series, one, params) + weak_rhs(t2, series, one, params);
    CHECK(std::abs(rhs_sum - rhs_split) < 1e-5);
}

TEST_CASE("per-atom integrals are translation covariant") {
    const WaveKernelParams params;
    const SigmaCoefficient one = make_const_sigma(1.0);
    const Point2 shift{5.5, -3.25};

    const TruncatedLePage series = one_atom_series(1.5, {0.25, -0.15}, 1.3, 0.8);
    TruncatedLePage moved = series;
    moved.atoms[0] = moved.atoms[0] + shift;

    const TestFunction theta = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);
    const TestFunction theta_moved = make_bump(shift, 0.6, 1.0, 0.5);

    const WeakFormReport base = weak_residual(theta, series, one, params);
    const WeakFormReport translated = weak_residual(theta_moved, moved, one, params);

    // The LePage weights differ (the atom density is not translation
    // invariant), but the unweighted space-time and time integrals coincide.
    const double w_base = lepage_weight(series, 0);
    const double w_moved = lepage_weight(moved, 0);
    CHECK(std::abs(base.lhs_terms[0] / w_base - translated.lhs_terms[0] / w_moved) <
          3.0 * params.quad_tol);
    CHECK(std::abs(base.rhs_terms[0] / w_base - translated.rhs_terms[0] / w_moved) <
          3.0 * params.quad_tol);
}

TEST_CASE("weak report CSV layout and determinism") {
    const WaveKernelParams params;
    const SigmaCoefficient one = make_const_sigma(1.0);
    StableParams sp;
    sp.alpha = 1.5;
    const TruncatedLePage series = sample_series(sp, 19, 2);
    const TestFunction theta = make_bump({0.0, 0.0}, 0.6, 1.0, 0.5);
    const WeakFormReport report = weak_residual(theta, series, one, params);

    const std::string path_a = "weak_report_a.csv";
    const std::string path_b = "weak_report_b.csv";
    save_weak_report_csv(report, path_a);
    save_weak_report_csv(report, path_b);

    const auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string body_a = slurp(path_a);
    CHECK(body_a == slurp(path_b));

    std::istringstream lines(body_a);
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line)) all.push_back(line);
    REQUIRE(all.size() == 2 + 1 + 2 + 1);  // headers, columns, rows, summary
    CHECK(all[0].rfind("# quad_tol=", 0) == 0);
    CHECK(all[1] == "# fd_derivatives=0");
    CHECK(all[2] == "k,lhs_term,rhs_term,residual");
    CHECK(all[3].rfind("1,", 0) == 0);
    CHECK(all[4].rfind("2,", 0) == 0);
    CHECK(all[5].rfind("summary,", 0) == 0);
    std::remove(path_a.c_str());
    std::remove(path_b.c_str());
}
