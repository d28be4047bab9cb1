#pragma once

#include <cstdint>
#include <span>

namespace radnet {

/// Deterministic pseudo-random stream.
///
/// Generator: splitmix64 (Steele, Lea, Flood 2014) — a 64-bit counter-based
/// mixer with a fixed odd increment. The same seed always yields the same
/// bit stream on every platform; there is no dependence on libstdc++
/// distribution internals.
///
/// Normal deviates use the Box-Muller transform, two uniforms per deviate
/// with no cached second value, so the number of raw draws consumed by a
/// sequence of calls depends only on the calls themselves.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    /// Next raw 64-bit word of the stream.
    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal deviate (mean 0, variance 1).
    double normal();

    /// Independent child stream addressed by a tag path, e.g.
    /// derive(trial, kStreamMeasurement). Children of distinct tag paths
    /// (or distinct parents) are statistically independent.
    SeededRng derive(std::uint64_t tag) const;
    SeededRng derive(std::uint64_t tag_a, std::uint64_t tag_b) const;

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// Stream tags used by the simulation harness. One tag per noise purpose so
/// that runs compared under common random numbers consume identical draws.
enum StreamTag : std::uint64_t {
    kStreamInit = 1,
    kStreamProcess = 2,
    kStreamMeasurement = 3,
    kStreamInfoSampling = 4,
};

}  // namespace radnet
