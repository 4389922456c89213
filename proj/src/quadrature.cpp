#include "stablewave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace stablewave {

namespace {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1] (QUADPACK dqk15).
// Even-index abscissae are the embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi, value, error;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = f(c);
    double res_kronrod = kWgk[7] * fc;
    double res_gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double fsum = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
        res_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) res_gauss += kWg[j / 2] * fsum;
    }
    // The |K15-G7| difference is a conservative error proxy; it overestimates
    // on smooth panels, which only costs a few extra bisections.
    return {lo, hi, res_kronrod * h, std::abs(res_kronrod - res_gauss) * h};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double abs_tol, int max_panels) {
    if (!(abs_tol > 0.0)) throw std::domain_error("quadrature tolerance must be positive");
    if (lo == hi) return {0.0, 0.0, 0};
    if (lo > hi) throw std::domain_error("quadrature interval is reversed");

    // Single-panel fast path: most integrands here are smooth, and skipping
    // the heap machinery keeps nested quadratures cheap.
    const Panel first = gk15(f, lo, hi);
    if (first.error <= abs_tol) {
        return {first.value, first.error, 1};
    }

    std::vector<Panel> panels;
    panels.reserve(64);
    panels.push_back(first);

    // Max-heap of panel indices ordered by error estimate.
    auto worse = [&panels](int a, int b) { return panels[a].error < panels[b].error; };
    std::priority_queue<int, std::vector<int>, decltype(worse)> queue(worse);
    queue.push(0);

    double total_error = panels[0].error;
    while (total_error > abs_tol) {
        if (queue.empty()) break;  // nothing splittable remains; return the best we have
        if (static_cast<int>(panels.size()) >= max_panels) {
            NeumaierSum partial;
            std::vector<Panel> sorted = panels;
            std::sort(sorted.begin(), sorted.end(),
                      [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
            for (const Panel& p : sorted) partial.add(p.value);
            throw QuadratureBudgetError("adaptive quadrature exceeded its panel budget",
                                        partial.result(), total_error);
        }
        const int idx = queue.top();
        queue.pop();
        const Panel worst = panels[idx];
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Interval no longer splittable in double precision; accept as is.
            continue;
        }
        const Panel left = gk15(f, worst.lo, mid);
        const Panel right = gk15(f, mid, worst.hi);
        total_error += left.error + right.error - worst.error;
        panels[idx] = left;
        panels.push_back(right);
        queue.push(idx);
        queue.push(static_cast<int>(panels.size()) - 1);
    }

    std::sort(panels.begin(), panels.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    NeumaierSum sum;
    for (const Panel& p : panels) sum.add(p.value);
    return {sum.result(), total_error, static_cast<int>(panels.size())};
}

}  // namespace stablewave
