#pragma once

#include <random>

#include "hwv/lie.hpp"
#include "hwv/weight.hpp"

namespace hwv {

/// Random invertible flag-compatible base change: block-upper-triangular with
/// small integer entries, re-drawn until invertible.
inline Matrix random_flag_frame(const FlagSpec& flag, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> diagonal(1, 3);
    while (true) {
        Matrix frame(flag.n);
        for (int r = 1; r <= flag.n; ++r)
            for (int c = 1; c <= flag.n; ++c) {
                if (flag.block_of(r) > flag.block_of(c)) continue;
                frame.at(r, c) = (r == c) ? diagonal(rng) : entry(rng);
            }
        try {
            frame.inverse();
            return frame;
        } catch (const std::domain_error&) {
            // singular draw, retry
        }
    }
}

}  // namespace hwv
