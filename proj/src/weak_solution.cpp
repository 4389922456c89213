#include "stablewave/weak_solution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "stablewave/errors.hpp"
#include "stablewave/quadrature.hpp"

namespace stablewave {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

void require_radii(double r_space, double r_time) {
    if (!(r_space > 0.0) || !(r_time > 0.0)) {
        throw std::invalid_argument("test-function radii must be positive");
    }
}

// Half-angle of the arc of the circle |y - xi| = rho lying inside
// B(center, r_space), with d = |xi - center| > 0.  The clamp covers the
// fully-inside (full circle) and disjoint (empty arc) cases.
double arc_half_angle(double d, double rho, double r_space) {
    const double c =
        std::clamp((d * d + rho * rho - r_space * r_space) / (2.0 * d * rho),
                   -1.0, 1.0);
    return std::acos(c);
}

// Space-time integral of G(., xi, .) * psi for separable theta = S(x) T(t):
// psi = S T'' - a^2 (Lap S) T, so by Fubini
//   int int int G psi dx dt
//     = 1/(2 pi a^2) [ int rho A_S(rho) J2(rho) drho
//                      - a^2 int rho A_L(rho) J0(rho) drho ],
// where A_S, A_L are the angular integrals of S and Lap S over the arc of
// the circle of radius rho about xi inside the support -- functions of rho
// alone, hoisted out of the time integration -- and
//   Jg(rho) = int kern(rho, t) g(t) dt,
//   kern(rho, t) = int_0^{arccosh(a t/rho)} sigma(xi, t - (rho/a) cosh u) du.
// The time variable is desingularized by t = (rho/a) cosh(w): kern's upper
// limit becomes exactly w (so kern = sigma_c * w for constant sigma) and the
// sqrt kink at the cone arrival time t = rho/a disappears:
//   Jg = (rho/a) int kern(w) g((rho/a) cosh w) sinh(w) dw.
// The radial integrand is smooth between the geometric switch radii
// r_space - d (arc becomes the full circle) and a * t_lo (the cone-arrival
// time falls below the support's start), so the radial range splits there.
double atom_spacetime_integral_separable(const TestFunction& theta,
                                         const Point2& xi,
                                         const SigmaCoefficient& sigma,
                                         const WaveKernelParams& params) {
    const double a = params.a;
    const double t_lo = theta.t_lo();
    const double t_hi = theta.t_hi();
    if (!(t_hi > t_lo)) {
        return 0.0;
    }
    const double rs = theta.r_space;
    const double d = distance(xi, theta.center);
    const double rho_min = std::max(0.0, d - rs);
    const double rho_max = std::min(d + rs, a * t_hi);
    if (!(rho_max > rho_min)) {
        return 0.0;  // the light cone never reaches the spatial support
    }
    const double tol = params.quad_tol;
    const double inv_2pi_a2 = 1.0 / (kTwoPi * a * a);
    const double phi_center = d > 1e-12
                                  ? std::atan2(theta.center.y - xi.y,
                                               theta.center.x - xi.x)
                                  : 0.0;

    const auto radial = [&](double rho) {
        // Time window [max(t_lo, rho/a), t_hi] in w = arccosh(a t / rho).
        const double w_hi = std::acosh(a * t_hi / rho);
        const double z_lo = a * t_lo / rho;
        const double w_lo = z_lo > 1.0 ? std::acosh(z_lo) : 0.0;
        if (!(w_hi > w_lo)) {
            return 0.0;
        }
        const double half_angle =
            d > 1e-12 ? arc_half_angle(d, rho, rs) : (rho < rs ? kPi : 0.0);
        if (half_angle == 0.0) {
            return 0.0;
        }
        // Angular integrals over the arc, which is mirror-symmetric about
        // the direction from xi towards the support center.
        const auto angular = [&](const std::function<double(const Point2&)>& h) {
            const auto on_arc = [&](double phi) {
                const Point2 y{xi.x + rho * std::cos(phi),
                               xi.y + rho * std::sin(phi)};
                return h(y);
            };
            return 2.0 * integrate_adaptive(on_arc, phi_center,
                                            phi_center + half_angle, tol / 64.0,
                                            params.max_refine)
                             .value;
        };
        const double arc_s = angular(theta.space);
        const double arc_l = angular(theta.space_lap);
        if (arc_s == 0.0 && arc_l == 0.0) {
            return 0.0;
        }
        const double rho_over_a = rho / a;
        const auto time_integral = [&](const std::function<double(double)>& g) {
            const auto over_w = [&](double w) {
                const double chw = std::cosh(w);
                const double gv = g(rho_over_a * chw);
                if (gv == 0.0) {
                    return 0.0;
                }
                double kern;
                if (sigma.is_const) {
                    kern = sigma.const_value * w;
                } else {
                    const auto over_u = [&](double u) {
                        // Rounding can push the argument a hair below 0 at
                        // u = w, matching the kernel quadrature's guard.
                        const double tau = std::max(
                            rho_over_a * (chw - std::cosh(u)), 0.0);
                        return sigma.eval(xi, tau);
                    };
                    kern = integrate_adaptive(over_u, 0.0, w, tol / 256.0,
                                              params.max_refine)
                               .value;
                }
                return kern * gv * std::sinh(w);
            };
            return rho_over_a * integrate_adaptive(over_w, w_lo, w_hi,
                                                   tol / 16.0,
                                                   params.max_refine)
                                    .value;
        };
        const double j2 = arc_s != 0.0 ? time_integral(theta.time_d2) : 0.0;
        const double j0 = arc_l != 0.0 ? time_integral(theta.time) : 0.0;
        return rho * (arc_s * j2 - a * a * (arc_l * j0));
    };

    double cuts[4] = {rho_min, rho_max, rho_max, rho_max};
    int n_cuts = 2;
    const double full_circle_radius = rs - d;
    if (d < rs && full_circle_radius > rho_min && full_circle_radius < rho_max) {
        cuts[n_cuts++] = full_circle_radius;
    }
    const double arrival_radius = a * t_lo;
    if (t_lo > 0.0 && arrival_radius > rho_min && arrival_radius < rho_max) {
        cuts[n_cuts++] = arrival_radius;
    }
    std::sort(cuts, cuts + n_cuts);
    const double piece_tol = tol / (2.0 * inv_2pi_a2) / (n_cuts - 1);
    NeumaierSum acc;
    for (int i = 0; i + 1 < n_cuts; ++i) {
        acc.add(integrate_adaptive(radial, cuts[i], cuts[i + 1], piece_tol,
                                   params.max_refine)
                    .value);
    }
    return inv_2pi_a2 * acc.result();
}

// Space-time integral of G(., xi, .) * psi over the support of theta, for a
// single atom.  sigma enters G only through its values at the atom, so G
// depends on the field point x only through rho = |x - xi|; the spatial
// integral is taken radially, with psi integrated over the angular arc where
// the circle of radius rho about xi meets the spatial support.
//
// The radial variable is v = arccosh(a t / rho), the kernel's own integration
// limit, so rho = a t / cosh(v) and
//   int rho G(rho,t) arc(rho,t) drho
//     = (a t)^2 / (2 pi a^2) int kern(v) arc(v) tanh(v) sech(v)^2 dv,
// where kern(v) = int_0^v sigma(xi, t (1 - cosh(u)/cosh(v))) du is the kernel
// integral itself -- exactly sigma_c * v for constant sigma.  This removes
// both the sqrt-type kink of G at the cone edge rho -> a t and the log
// divergence at rho -> 0.  The weight tanh(v) sech(v)^2 decays like
// 4 v e^{-2v}, so cutting the range at rho_floor = 3e-8 * a t (v ~ 17.9)
// discards under 1e-13 of the integral, far below quad_tol.
double atom_spacetime_integral(const TestFunction& theta, const Point2& xi,
                               const SigmaCoefficient& sigma,
                               const WaveKernelParams& params) {
    if (theta.space && theta.space_lap && theta.time && theta.time_d2) {
        return atom_spacetime_integral_separable(theta, xi, sigma, params);
    }
    const double a = params.a;
    const double t_hi = theta.t_hi();
    const double d = distance(xi, theta.center);
    if (d >= theta.r_space + a * t_hi) {
        return 0.0;  // the light cone never reaches the spatial support
    }
    // Below (d - r_space)/a the cone has not reached the support either, so
    // the integrand vanishes identically; start the time integral there.
    const double t_lo = std::max(theta.t_lo(), (d - theta.r_space) / a);
    if (!(t_hi > t_lo)) {
        return 0.0;
    }
    const double tol = params.quad_tol;
    const double inv_2pi_a2 = 1.0 / (kTwoPi * a * a);
    const double phi_center = d > 1e-12
                                  ? std::atan2(theta.center.y - xi.y,
                                               theta.center.x - xi.x)
                                  : 0.0;

    const auto at_time = [&](double t) {
        if (t <= 0.0) {
            return 0.0;
        }
        const double at = a * t;
        const double rho_lo = std::max(0.0, d - theta.r_space);
        const double rho_hi = std::min(at, d + theta.r_space);
        if (!(rho_hi > rho_lo)) {
            return 0.0;
        }
        const double v_lo = rho_hi >= at ? 0.0 : std::acosh(at / rho_hi);
        const double v_hi = std::acosh(at / std::max(rho_lo, 3e-8 * at));
        if (!(v_hi > v_lo)) {
            return 0.0;
        }

        // Angular integral of psi over the part of the circle |x - xi| = rho
        // inside B(center, r_space).
        const auto arc_at = [&](double rho) {
            if (d <= 1e-12) {
                // Concentric: full circle when inside the support.
                if (rho >= theta.r_space) {
                    return 0.0;
                }
                const auto on_circle = [&](double phi) {
                    const Point2 y{xi.x + rho * std::cos(phi),
                                   xi.y + rho * std::sin(phi)};
                    return wave_operator_psi(theta, y, t, a);
                };
                return integrate_adaptive(on_circle, 0.0, kTwoPi, tol / 32.0,
                                          params.max_refine)
                    .value;
            }
            // cos of the half-angle of the circle's arc inside
            // B(center, r_space); clamping covers the fully-inside
            // (full circle) and disjoint (empty arc) cases.
            const double c = std::clamp(
                (d * d + rho * rho - theta.r_space * theta.r_space) /
                    (2.0 * d * rho),
                -1.0, 1.0);
            const double half_angle = std::acos(c);
            if (half_angle == 0.0) {
                return 0.0;
            }
            const auto on_arc = [&](double phi) {
                const Point2 y{xi.x + rho * std::cos(phi),
                               xi.y + rho * std::sin(phi)};
                return wave_operator_psi(theta, y, t, a);
            };
            return integrate_adaptive(on_arc, phi_center - half_angle,
                                      phi_center + half_angle, tol / 32.0,
                                      params.max_refine)
                .value;
        };

        const double scale = at * at * inv_2pi_a2;
        const auto radial_v = [&](double v) {
            const double ch = std::cosh(v);
            const double rho = at / ch;
            const double arc = arc_at(rho);
            if (arc == 0.0) {
                return 0.0;
            }
            double kern;
            if (sigma.is_const) {
                kern = sigma.const_value * v;
            } else {
                const auto over_u = [&](double u) {
                    // Rounding can push the time argument a hair below 0
                    // at u = v, matching the kernel quadrature's guard.
                    const double tau =
                        std::max(t * (1.0 - std::cosh(u) / ch), 0.0);
                    return sigma.eval(xi, tau);
                };
                kern = integrate_adaptive(over_u, 0.0, v,
                                          tol / (64.0 * (1.0 + std::abs(arc))),
                                          params.max_refine)
                           .value;
            }
            const double th = std::tanh(v);
            return kern * arc * th / (ch * ch);
        };
        return scale * integrate_adaptive(radial_v, v_lo, v_hi,
                                          tol / (8.0 * scale),
                                          params.max_refine)
                           .value;
    };

    // rho_hi switches from the cone edge to the support edge at
    // t = (d + r_space)/a; splitting there keeps both outer pieces smooth.
    const double t_split = (d + theta.r_space) / a;
    if (t_split > t_lo && t_split < t_hi) {
        NeumaierSum acc;
        acc.add(integrate_adaptive(at_time, t_lo, t_split, tol / 4.0,
                                   params.max_refine)
                    .value);
        acc.add(integrate_adaptive(at_time, t_split, t_hi, tol / 4.0,
                                   params.max_refine)
                    .value);
        return acc.result();
    }
    return integrate_adaptive(at_time, t_lo, t_hi, tol / 2.0, params.max_refine)
        .value;
}

// Time integral of theta(xi, .) * sigma(xi, .) for a single atom.
double atom_time_integral(const TestFunction& theta, const Point2& xi,
                          const SigmaCoefficient& sigma,
                          const WaveKernelParams& params) {
    if (distance(xi, theta.center) >= theta.r_space) {
        return 0.0;  // theta(xi, .) vanishes identically
    }
    const double t_lo = theta.t_lo();
    const double t_hi = theta.t_hi();
    if (!(t_hi > t_lo)) {
        return 0.0;
    }
    const auto f = [&](double t) { return theta.eval(xi, t) * sigma.eval(xi, t); };
    return integrate_adaptive(f, t_lo, t_hi, params.quad_tol / 2.0,
                              params.max_refine)
        .value;
}

}  // namespace

TestFunction make_bump(const Point2& center, double t0, double r_space,
                       double r_time) {
    require_radii(r_space, r_time);
    TestFunction theta;
    theta.center = center;
    theta.t0 = t0;
    theta.r_space = r_space;
    theta.r_time = r_time;
    const double inv_rs2 = 1.0 / (r_space * r_space);
    const double inv_rt2 = 1.0 / (r_time * r_time);
    // All three fields share the product B(p)B(q) = exp(-1/(1-p) - 1/(1-q)),
    // so each needs a single exp; the derivative factors are rational in the
    // complements 1-p, 1-q:
    //   B'(rho)/B(rho)  = -1/(1-rho)^2
    //   B''(rho)/B(rho) =  1/(1-rho)^4 - 2/(1-rho)^3.
    theta.eval = [=](const Point2& x, double t) {
        const double p = ((x.x - center.x) * (x.x - center.x) +
                          (x.y - center.y) * (x.y - center.y)) *
                         inv_rs2;
        const double q = (t - t0) * (t - t0) * inv_rt2;
        if (p >= 1.0 || q >= 1.0) {
            return 0.0;
        }
        return std::exp(-1.0 / (1.0 - p) - 1.0 / (1.0 - q));
    };
    theta.d2t = [=](const Point2& x, double t) {
        const double p = ((x.x - center.x) * (x.x - center.x) +
                          (x.y - center.y) * (x.y - center.y)) *
                         inv_rs2;
        const double q = (t - t0) * (t - t0) * inv_rt2;
        if (p >= 1.0 || q >= 1.0) {
            return 0.0;
        }
        // d^2/dt^2 B(q(t)) = B''(q) (q')^2 + B'(q) q'',  q' = 2(t-t0)/r_t^2,
        // q'' = 2/r_t^2, (q')^2 = 4 q / r_t^2.
        const double wq = 1.0 - q;
        const double factor =
            (1.0 / (wq * wq * wq * wq) - 2.0 / (wq * wq * wq)) * 4.0 * q -
            2.0 / (wq * wq);
        return std::exp(-1.0 / (1.0 - p) - 1.0 / wq) * factor * inv_rt2;
    };
    theta.laplacian = [=](const Point2& x, double t) {
        const double p = ((x.x - center.x) * (x.x - center.x) +
                          (x.y - center.y) * (x.y - center.y)) *
                         inv_rs2;
        const double q = (t - t0) * (t - t0) * inv_rt2;
        if (p >= 1.0 || q >= 1.0) {
            return 0.0;
        }
        // Lap B(p(x)) = B''(p) |grad p|^2 + B'(p) Lap p, with
        // |grad p|^2 = 4p/r_s^2 and Lap p = 4/r_s^2 in the plane.
        const double wp = 1.0 - p;
        const double factor =
            (1.0 / (wp * wp * wp * wp) - 2.0 / (wp * wp * wp)) * 4.0 * p -
            4.0 / (wp * wp);
        return std::exp(-1.0 / wp - 1.0 / (1.0 - q)) * factor * inv_rs2;
    };
    // Fused wave operator: one shared exponential, combined exactly as
    // d2t(x,t) - a*a*laplacian(x,t) would round, so the two paths agree
    // bit for bit.
    theta.psi = [=](const Point2& x, double t, double a) {
        const double p = ((x.x - center.x) * (x.x - center.x) +
                          (x.y - center.y) * (x.y - center.y)) *
                         inv_rs2;
        const double q = (t - t0) * (t - t0) * inv_rt2;
        if (p >= 1.0 || q >= 1.0) {
            return 0.0;
        }
        const double wq = 1.0 - q;
        const double wp = 1.0 - p;
        const double factor_t =
            (1.0 / (wq * wq * wq * wq) - 2.0 / (wq * wq * wq)) * 4.0 * q -
            2.0 / (wq * wq);
        const double factor_s =
            (1.0 / (wp * wp * wp * wp) - 2.0 / (wp * wp * wp)) * 4.0 * p -
            4.0 / (wp * wp);
        const double e = std::exp(-1.0 / wp - 1.0 / wq);
        return e * factor_t * inv_rt2 - a * a * (e * factor_s * inv_rs2);
    };
    // Separable factors theta = space * time for the factored weak-form path.
    theta.space = [=](const Point2& x) {
        const double p = ((x.x - center.x) * (x.x - center.x) +
                          (x.y - center.y) * (x.y - center.y)) *
                         inv_rs2;
        if (p >= 1.0) {
            return 0.0;
        }
        return std::exp(-1.0 / (1.0 - p));
    };
    theta.space_lap = [=](const Point2& x) {
        const double p = ((x.x - center.x) * (x.x - center.x) +
                          (x.y - center.y) * (x.y - center.y)) *
                         inv_rs2;
        if (p >= 1.0) {
            return 0.0;
        }
        const double wp = 1.0 - p;
        const double factor =
            (1.0 / (wp * wp * wp * wp) - 2.0 / (wp * wp * wp)) * 4.0 * p -
            4.0 / (wp * wp);
        return std::exp(-1.0 / wp) * factor * inv_rs2;
    };
    theta.time = [=](double t) {
        const double q = (t - t0) * (t - t0) * inv_rt2;
        if (q >= 1.0) {
            return 0.0;
        }
        return std::exp(-1.0 / (1.0 - q));
    };
    theta.time_d2 = [=](double t) {
        const double q = (t - t0) * (t - t0) * inv_rt2;
        if (q >= 1.0) {
            return 0.0;
        }
        const double wq = 1.0 - q;
        const double factor =
            (1.0 / (wq * wq * wq * wq) - 2.0 / (wq * wq * wq)) * 4.0 * q -
            2.0 / (wq * wq);
        return std::exp(-1.0 / wq) * factor * inv_rt2;
    };
    return theta;
}

TestFunction make_custom_fd(const Point2& center, double t0, double r_space,
                            double r_time,
                            std::function<double(const Point2&, double)> eval) {
    require_radii(r_space, r_time);
    if (!eval) {
        throw std::invalid_argument("custom test function needs an eval callable");
    }
    TestFunction theta;
    theta.center = center;
    theta.t0 = t0;
    theta.r_space = r_space;
    theta.r_time = r_time;
    theta.fd_derivatives = true;
    theta.eval = eval;
    const double ht = 2e-3 * r_time;
    const double hx = 2e-3 * r_space;
    const auto inside = [=](const Point2& x, double t) {
        const double p = ((x.x - center.x) * (x.x - center.x) +
                          (x.y - center.y) * (x.y - center.y)) /
                         (r_space * r_space);
        const double q = (t - t0) * (t - t0) / (r_time * r_time);
        return p < 1.0 && q < 1.0;
    };
    // 5-point second-derivative stencil, O(h^4).
    const auto second = [](double fm2, double fm1, double f0, double fp1,
                           double fp2, double h) {
        return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) /
               (12.0 * h * h);
    };
    theta.d2t = [=](const Point2& x, double t) {
        if (!inside(x, t)) return 0.0;
        return second(eval(x, t - 2 * ht), eval(x, t - ht), eval(x, t),
                      eval(x, t + ht), eval(x, t + 2 * ht), ht);
    };
    theta.laplacian = [=](const Point2& x, double t) {
        if (!inside(x, t)) return 0.0;
        const double fxx =
            second(eval({x.x - 2 * hx, x.y}, t), eval({x.x - hx, x.y}, t),
                   eval(x, t), eval({x.x + hx, x.y}, t),
                   eval({x.x + 2 * hx, x.y}, t), hx);
        const double fyy =
            second(eval({x.x, x.y - 2 * hx}, t), eval({x.x, x.y - hx}, t),
                   eval(x, t), eval({x.x, x.y + hx}, t),
                   eval({x.x, x.y + 2 * hx}, t), hx);
        return fxx + fyy;
    };
    return theta;
}

double wave_operator_psi(const TestFunction& theta, const Point2& x, double t,
                         double a) {
    if (theta.psi) {
        return theta.psi(x, t, a);
    }
    return theta.d2t(x, t) - a * a * theta.laplacian(x, t);
}

double poisson_identity_residual(const TestFunction& theta, const Point2& x,
                                 double tau, double a, double quad_tol) {
    if (!(tau >= 0.0)) {
        throw std::domain_error("poisson_identity_residual requires tau >= 0");
    }
    if (!(a > 0.0)) {
        throw std::invalid_argument("wave speed a must be positive");
    }
    if (!(quad_tol > 0.0)) {
        throw std::invalid_argument("quad_tol must be positive");
    }
    const double target = theta.eval(x, tau);
    const double t_hi = theta.t_hi();
    if (tau >= t_hi) {
        return std::abs(target);  // both sides vanish beyond the support
    }
    const int budget = 2000;
    const auto outer = [&](double t) {
        const double s = a * (t - tau);
        if (s <= 0.0) {
            return 0.0;
        }
        const auto over_phi = [&](double phi) {
            const Point2 e{std::cos(phi), std::sin(phi)};
            const auto over_v = [&](double v) {
                // rho = s sin(v) flattens the square-root cone singularity:
                // the Jacobian rho drho / sqrt(s^2 - rho^2) becomes s sin(v) dv.
                const double rho = s * std::sin(v);
                const Point2 y{x.x + rho * e.x, x.y + rho * e.y};
                return wave_operator_psi(theta, y, t, a) * std::sin(v);
            };
            return integrate_adaptive(over_v, 0.0, kPi / 2.0, quad_tol, budget)
                .value;
        };
        return s *
               integrate_adaptive(over_phi, 0.0, kTwoPi, quad_tol, budget).value;
    };
    try {
        const double lhs =
            integrate_adaptive(outer, tau, t_hi, quad_tol, budget).value /
            (kTwoPi * a);
        return std::abs(lhs - target);
    } catch (const QuadratureBudgetError& e) {
        const double partial = e.partial_value / (kTwoPi * a);
        throw QuadratureBudgetError(e.what(), std::abs(partial - target),
                                    e.error_estimate / (kTwoPi * a));
    }
}

double weak_lhs(const TestFunction& theta, const TruncatedLePage& series,
                const SigmaCoefficient& sigma, const WaveKernelParams& params) {
    const double c_alpha = lepage_constant(series.params.alpha);
    NeumaierSum acc;
    for (std::size_t k = 0; k < series.K; ++k) {
        try {
            const double a_k =
                atom_spacetime_integral(theta, series.atoms[k], sigma, params);
            acc.add(lepage_weight(series, k, c_alpha) * a_k);
        } catch (const QuadratureBudgetError& e) {
            throw QuadratureBudgetError("atom " + std::to_string(k + 1) + ": " +
                                            e.what(),
                                        e.partial_value, e.error_estimate);
        }
    }
    return acc.result();
}

double weak_rhs(const TestFunction& theta, const TruncatedLePage& series,
                const SigmaCoefficient& sigma, const WaveKernelParams& params) {
    const double c_alpha = lepage_constant(series.params.alpha);
    NeumaierSum acc;
    for (std::size_t k = 0; k < series.K; ++k) {
        try {
            const double b_k =
                atom_time_integral(theta, series.atoms[k], sigma, params);
            acc.add(lepage_weight(series, k, c_alpha) * b_k);
        } catch (const QuadratureBudgetError& e) {
            throw QuadratureBudgetError("atom " + std::to_string(k + 1) + ": " +
                                            e.what(),
                                        e.partial_value, e.error_estimate);
        }
    }
    return acc.result();
}

WeakFormReport weak_residual(const TestFunction& theta,
                             const TruncatedLePage& series,
                             const SigmaCoefficient& sigma,
                             const WaveKernelParams& params) {
    WeakFormReport report;
    report.quad_tol = params.quad_tol;
    report.fd_derivatives = theta.fd_derivatives;
    report.lhs_terms.reserve(series.K);
    report.rhs_terms.reserve(series.K);
    report.per_atom_residuals.reserve(series.K);
    const double c_alpha = lepage_constant(series.params.alpha);
    NeumaierSum lhs_acc, rhs_acc;
    for (std::size_t k = 0; k < series.K; ++k) {
        try {
            const double w = lepage_weight(series, k, c_alpha);
            const double l =
                w * atom_spacetime_integral(theta, series.atoms[k], sigma, params);
            const double r =
                w * atom_time_integral(theta, series.atoms[k], sigma, params);
            report.lhs_terms.push_back(l);
            report.rhs_terms.push_back(r);
            report.per_atom_residuals.push_back(l - r);
            lhs_acc.add(l);
            rhs_acc.add(r);
        } catch (const QuadratureBudgetError& e) {
            throw QuadratureBudgetError("atom " + std::to_string(k + 1) + ": " +
                                            e.what(),
                                        e.partial_value, e.error_estimate);
        }
    }
    report.lhs = lhs_acc.result();
    report.rhs = rhs_acc.result();
    report.residual = report.lhs - report.rhs;
    return report;
}

void save_weak_report_csv(const WeakFormReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf), "# quad_tol=%.17g\n# fd_derivatives=%d\n",
                  report.quad_tol, report.fd_derivatives ? 1 : 0);
    out << buf << "k,lhs_term,rhs_term,residual\n";
    for (std::size_t k = 0; k < report.lhs_terms.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g\n", k + 1,
                      report.lhs_terms[k], report.rhs_terms[k],
                      report.per_atom_residuals[k]);
        out << buf;
    }
    std::snprintf(buf, sizeof(buf), "summary,%.17g,%.17g,%.17g\n", report.lhs,
                  report.rhs, report.residual);
    out << buf;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

}  // namespace stablewave
