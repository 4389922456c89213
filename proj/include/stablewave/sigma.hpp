#pragma once

#include <functional>
#include <string>

#include "stablewave/geometry.hpp"

namespace stablewave {

/// Multiplicative coefficient sigma(x, t) with its declared uniform bound C
/// and time-Hoelder exponent gamma (assumptions S1-S3).  The declarations are
/// metadata: they are spot-checked by tests, not proven.
struct SigmaCoefficient {
    std::function<double(const Point2&, double)> eval;
    double bound_C = 1.0;
    double holder_gamma = 1.0;
    std::string id;
    // Set by the constant builders; lets integrators replace the inner kernel
    // quadrature by the arccosh closed form.  eval stays authoritative.
    bool is_const = false;
    double const_value = 0.0;
};

/// sigma == c (Lipschitz in time, so declared gamma = 1).
SigmaCoefficient make_const_sigma(double c);

/// sigma == 0.
SigmaCoefficient make_zero_sigma();

/// Built-in Hoelder-gamma coefficient sigma(x,t) = ((1+t)^gamma - 1)/gamma
/// clamped to 1; globally Hoelder-gamma in t with constant 1, bounded by 1.
SigmaCoefficient make_holder_sigma(double gamma);

/// Parses the named built-ins "const:<c>", "holder:<gamma>", "zero".
SigmaCoefficient parse_sigma(const std::string& spec);

}  // namespace stablewave
