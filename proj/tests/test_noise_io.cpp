#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "stablewave/errors.hpp"
#include "stablewave/field.hpp"
#include "stablewave/noise_io.hpp"
#include "stablewave/quadrature.hpp"

using namespace stablewave;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& p) : path(p) {}
    ~TempFile() { std::remove(path.c_str()); }
};

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    out << body;
}

const std::string kGoodHeader = "alpha=1.5\nseed=9\nK=2\ndensity=cauchy\nk,gamma,xi1,xi2,g\n";

}  // namespace

TEST_CASE("noise file round trip is bit exact") {
    StableParams sp;
    sp.alpha = 1.25;
    sp.density = DensityId::gauss;
    const TruncatedLePage series = sample_series(sp, 333, 50);
    TempFile tmp("noise_roundtrip.txt");
    save_noise(series, tmp.path);
    const TruncatedLePage loaded = load_noise(tmp.path);

    CHECK(loaded.params.alpha == series.params.alpha);
    CHECK(loaded.params.density == series.params.density);
    CHECK(loaded.seed == series.seed);
    REQUIRE(loaded.K == series.K);
    CHECK(loaded.gammas == series.gammas);
    CHECK(loaded.gaussians == series.gaussians);
    for (std::size_t k = 0; k < series.K; ++k) {
        CHECK(loaded.atoms[k].x == series.atoms[k].x);
        CHECK(loaded.atoms[k].y == series.atoms[k].y);
    }

    // Saving the loaded series reproduces the file byte for byte.
    TempFile tmp2("noise_roundtrip2.txt");
    save_noise(loaded, tmp2.path);
    const auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(slurp(tmp.path) == slurp(tmp2.path));
}

TEST_CASE("loader rejects structurally broken files") {
    TempFile tmp("noise_bad.txt");

    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_noise("no_such_noise_file.txt"), std::runtime_error);
    }
    SUBCASE("truncated body") {
        write_text(tmp.path, kGoodHeader + "1,0.5,0.25,0,1\n");
        CHECK_THROWS_WITH_AS(load_noise(tmp.path), doctest::Contains("K=2"),
                             IntegrityError);
    }
    SUBCASE("malformed row") {
        write_text(tmp.path,
                   "alpha=1.5\nseed=9\nK=3\ndensity=cauchy\nk,gamma,xi1,xi2,g\n"
                   "1,0.5,0.25,0,1\n2,0.9,0.5,0.5,-1\n3,1.3,0.1\n");
        bool threw = false;
        try {
            load_noise(tmp.path);
        } catch (const ParseError& e) {
            threw = true;
            CHECK(e.line_no == 8);
            CHECK(std::string(e.what()).find("(line 8)") != std::string::npos);
        }
        CHECK(threw);
    }
    SUBCASE("alpha outside the stable range") {
        write_text(tmp.path, "alpha=2.5\nseed=9\nK=0\ndensity=cauchy\nk,gamma,xi1,xi2,g\n");
        CHECK_THROWS_AS(load_noise(tmp.path), IntegrityError);
    }
    SUBCASE("row indices out of order") {
        write_text(tmp.path, kGoodHeader + "2,0.5,0.25,0,1\n1,0.9,0.5,0.5,-1\n");
        CHECK_THROWS_AS(load_noise(tmp.path), IntegrityError);
    }
    SUBCASE("arrival times not increasing") {
        write_text(tmp.path, kGoodHeader + "1,0.9,0.25,0,1\n2,0.5,0.5,0.5,-1\n");
        CHECK_THROWS_AS(load_noise(tmp.path), IntegrityError);
    }
    SUBCASE("unknown header key") {
        write_text(tmp.path, "alpha=1.5\nbeta=1\n" + kGoodHeader.substr(10));
        CHECK_THROWS_AS(load_noise(tmp.path), ParseError);
    }
    SUBCASE("missing header field") {
        write_text(tmp.path, "alpha=1.5\nseed=9\nK=2\nk,gamma,xi1,xi2,g\n");
        CHECK_THROWS_AS(load_noise(tmp.path), ParseError);
    }
    SUBCASE("junk instead of a number") {
        write_text(tmp.path, kGoodHeader + "1,abc,0.25,0,1\n2,0.9,0.5,0.5,-1\n");
        CHECK_THROWS_AS(load_noise(tmp.path), ParseError);
    }
}

TEST_CASE("a hand-written noise file drives the field evaluation") {
    TempFile tmp("noise_hand.txt");
    write_text(tmp.path, kGoodHeader + "1,0.5,0.25,0,1\n2,1.5,0,0.5,-2\n");
    const TruncatedLePage series = load_noise(tmp.path);
    REQUIRE(series.K == 2);

    const WaveKernelParams params;
    const SigmaCoefficient one = make_const_sigma(1.0);
    const Point2 x{0.0, 0.0};
    NeumaierSum hand;
    hand.add(lepage_weight(series, 0) * kernel_G(x, {0.25, 0.0}, 1.0, one, params));
    hand.add(lepage_weight(series, 1) * kernel_G(x, {0.0, 0.5}, 1.0, one, params));
    CHECK(evaluate_U(series, x, 1.0, one, params) == hand.result());
}
