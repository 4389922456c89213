#include "stablewave/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace stablewave {

SigmaCoefficient make_const_sigma(double c) {
    if (!std::isfinite(c)) {
        throw std::invalid_argument("const sigma level must be finite");
    }
    SigmaCoefficient s;
    s.eval = [c](const Point2&, double) { return c; };
    s.bound_C = std::abs(c);
    s.holder_gamma = 1.0;
    s.is_const = true;
    s.const_value = c;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "const:%.17g", c);
    s.id = buf;
    return s;
}

SigmaCoefficient make_zero_sigma() {
    SigmaCoefficient s;
    s.eval = [](const Point2&, double) { return 0.0; };
    s.bound_C = 0.0;
    s.holder_gamma = 1.0;
    s.is_const = true;
    s.const_value = 0.0;
    s.id = "zero";
    return s;
}

SigmaCoefficient make_holder_sigma(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0) {
        throw std::invalid_argument("holder sigma exponent must lie in (0, 1]");
    }
    SigmaCoefficient s;
    s.eval = [gamma](const Point2&, double t) {
        // ((1+t)^gamma - 1)/gamma, clamped to 1; only evaluated at t >= 0.
        const double v = std::expm1(gamma * std::log1p(t)) / gamma;
        return std::min(v, 1.0);
    };
    s.bound_C = 1.0;
    s.holder_gamma = gamma;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "holder:%.17g", gamma);
    s.id = buf;
    return s;
}

SigmaCoefficient parse_sigma(const std::string& spec) {
    if (spec == "zero") {
        return make_zero_sigma();
    }
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        const std::string arg = spec.substr(colon + 1);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("sigma spec '" + spec +
                                        "': cannot parse numeric argument");
        }
        if (used != arg.size()) {
            throw std::invalid_argument("sigma spec '" + spec +
                                        "': trailing characters after number");
        }
        if (kind == "const") {
            return make_const_sigma(value);
        }
        if (kind == "holder") {
            return make_holder_sigma(value);
        }
    }
    throw std::invalid_argument("unknown sigma spec '" + spec +
                                "' (expected const:<c>, holder:<gamma>, or zero)");
}

}  // namespace stablewave
