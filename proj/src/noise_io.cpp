#include "stablewave/noise_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "stablewave/errors.hpp"

namespace stablewave {

namespace {

constexpr const char* kColumnLine = "k,gamma,xi1,xi2,g";

// Splits "key=value"; returns false when '=' is absent.
bool split_key_value(const std::string& line, std::string& key, std::string& value) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
        return false;
    }
    key = line.substr(0, eq);
    value = line.substr(eq + 1);
    return true;
}

double parse_double(const std::string& text, int line_no) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError("cannot parse real number from '" + text + "'", line_no);
    }
    if (used != text.size()) {
        throw ParseError("trailing characters after number in '" + text + "'",
                         line_no);
    }
    return v;
}

unsigned long long parse_count(const std::string& text, int line_no) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        throw ParseError("cannot parse integer from '" + text + "'", line_no);
    }
    if (used != text.size()) {
        throw ParseError("trailing characters after integer in '" + text + "'",
                         line_no);
    }
    return v;
}

}  // namespace

void save_noise(const TruncatedLePage& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf), "alpha=%.17g\nseed=%llu\nK=%zu\ndensity=%s\n",
                  series.params.alpha,
                  static_cast<unsigned long long>(series.seed), series.K,
                  density_name(series.params.density).c_str());
    out << buf << kColumnLine << '\n';
    for (std::size_t k = 0; k < series.K; ++k) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g\n", k + 1,
                      series.gammas[k], series.atoms[k].x, series.atoms[k].y,
                      series.gaussians[k]);
        out << buf;
    }
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

TruncatedLePage load_noise(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    TruncatedLePage series;
    bool have_alpha = false, have_seed = false, have_k = false, have_density = false;
    unsigned long long declared_k = 0;
    std::string line;
    int line_no = 0;

    // Header block: key=value lines up to the column line.
    while (true) {
        if (!std::getline(in, line)) {
            throw ParseError("unexpected end of file inside header", line_no);
        }
        ++line_no;
        if (line == kColumnLine) {
            break;
        }
        std::string key, value;
        if (!split_key_value(line, key, value)) {
            throw ParseError("expected 'key=value' header or '" +
                                 std::string(kColumnLine) + "', got '" + line + "'",
                             line_no);
        }
        if (key == "alpha") {
            series.params.alpha = parse_double(value, line_no);
            have_alpha = true;
        } else if (key == "seed") {
            series.seed = parse_count(value, line_no);
            have_seed = true;
        } else if (key == "K") {
            declared_k = parse_count(value, line_no);
            have_k = true;
        } else if (key == "density") {
            try {
                series.params.density = density_from_name(value);
            } catch (const std::exception& e) {
                throw ParseError(e.what(), line_no);
            }
            have_density = true;
        } else {
            throw ParseError("unknown header key '" + key + "'", line_no);
        }
    }
    if (!have_alpha || !have_seed || !have_k || !have_density) {
        throw ParseError("header incomplete: need alpha, seed, K, density",
                         line_no);
    }
    if (!(series.params.alpha > 0.0) || series.params.alpha >= 2.0) {
        throw IntegrityError("header alpha=" + std::to_string(series.params.alpha) +
                             " outside the stable range (0,2)");
    }

    series.gammas.reserve(declared_k);
    series.atoms.reserve(declared_k);
    series.gaussians.reserve(declared_k);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::string fields[5];
        std::size_t start = 0;
        int n_fields = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                if (n_fields == 5) {
                    throw ParseError("expected 5 comma-separated fields", line_no);
                }
                fields[n_fields++] = line.substr(start, i - start);
                start = i + 1;
            }
        }
        if (n_fields != 5) {
            throw ParseError("expected 5 comma-separated fields", line_no);
        }
        const unsigned long long k = parse_count(fields[0], line_no);
        if (k != series.gammas.size() + 1) {
            throw IntegrityError("row index " + std::to_string(k) + " at line " +
                                 std::to_string(line_no) + ", expected " +
                                 std::to_string(series.gammas.size() + 1));
        }
        const double gamma = parse_double(fields[1], line_no);
        const Point2 atom{parse_double(fields[2], line_no),
                          parse_double(fields[3], line_no)};
        const double g = parse_double(fields[4], line_no);
        if (!(gamma > 0.0) ||
            (!series.gammas.empty() && !(gamma > series.gammas.back()))) {
            throw IntegrityError("arrival times must be strictly increasing "
                                 "and positive (line " +
                                 std::to_string(line_no) + ")");
        }
        series.gammas.push_back(gamma);
        series.atoms.push_back(atom);
        series.gaussians.push_back(g);
    }
    if (series.gammas.size() != declared_k) {
        throw IntegrityError("header declares K=" + std::to_string(declared_k) +
                             " but the body has " +
                             std::to_string(series.gammas.size()) + " rows");
    }
    series.K = series.gammas.size();
    return series;
}

}  // namespace stablewave
