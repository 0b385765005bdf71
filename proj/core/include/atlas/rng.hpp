#pragma once
/// @file rng.hpp
/// Deterministic pseudo-random generator shared by every randomized check.
///
/// The recurrence and the rational-drawing rule are fixed so that any
/// reimplementation (in any language) reproduces the same sample streams:
///   state ← state·6364136223846793005 + 1442695040888963407   (mod 2⁶⁴)
/// and random rationals use numerator ∈ [−9, 9], denominator ∈ {1, 2, 3},
/// both drawn from the high bits of successive states.

#include <cstdint>

#include "atlas/scalar.hpp"

namespace atlas {

class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t state() const noexcept { return state_; }

    std::uint64_t next_u64() noexcept {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform value in {0, …, n−1}, taken from the high 32 bits of the state.
    std::uint64_t next_below(std::uint64_t n) noexcept { return (next_u64() >> 32) % n; }

    bool next_bool() noexcept { return next_below(2) != 0; }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) noexcept {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Numerator ∈ [−9, 9], then denominator ∈ {1, 2, 3}.
    Rational next_rational() { return Rational(next_int(-9, 9), next_int(1, 3)); }

    /// Four rational draws in component order a_re, a_im, b_re, b_im.
    ExtScalar next_scalar() {
        Rational are = next_rational();
        Rational aim = next_rational();
        Rational bre = next_rational();
        Rational bim = next_rational();
        return ExtScalar(are, aim, bre, bim);
    }

    /// Nonzero variant of next_scalar (rejection sampling).
    ExtScalar next_nonzero_scalar() {
        for (;;) {
            ExtScalar x = next_scalar();
            if (!x.is_zero()) return x;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace atlas
