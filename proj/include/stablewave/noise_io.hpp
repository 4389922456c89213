#pragma once

#include <string>

#include "stablewave/stable_measure.hpp"

namespace stablewave {

/// Writes a realization as plain text: header lines `alpha=`, `seed=`, `K=`,
/// `density=`, a column line, then one CSV row `k,gamma,xi1,xi2,g` per term
/// at 17 significant digits (so reloading reproduces every double exactly).
void save_noise(const TruncatedLePage& series, const std::string& path);

/// Reads a file produced by save_noise (or written by hand in the same
/// format).  Throws ParseError (with the line number) on malformed input and
/// IntegrityError when the header contradicts the body (row count vs K,
/// out-of-order indices, non-increasing arrival times).
TruncatedLePage load_noise(const std::string& path);

}  // namespace stablewave
