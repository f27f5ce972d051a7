#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace axo::rng {

/// SplitMix64 step; used for seeding and for deriving independent
/// sub-streams from a user seed.
std::uint64_t splitmix64(std::uint64_t& state);

/// Hash of (seed, tag) giving the seed of an independent sub-stream.
std::uint64_t split(std::uint64_t seed, std::uint64_t tag);

/// xoshiro256++ with SplitMix64 seed expansion.
///
/// The raw 64-bit stream is a pure function of the seed and is identical
/// across platforms. Floating-point variates derive from it through libm,
/// so they are bit-stable per platform and equal across platforms up to
/// last-ulp libm differences.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// exp(uniform(log lo, log hi)); lo, hi > 0.
    double log_uniform(double lo, double hi);
    /// Standard normal via the Box-Muller transform (pairs are cached).
    double gaussian();

private:
    std::array<std::uint64_t, 4> state_;
    std::optional<double> spare_gaussian_;
};

}  // namespace axo::rng
