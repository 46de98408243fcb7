#pragma once

#include <cstdint>

namespace fracineq::cli {

// Counter-based generator: draw(c) = splitmix64_finalize(seed + kGolden * (c + 1)).
// Any draw can be recomputed from (seed, counter) alone, so a trial never
// depends on how many draws earlier trials consumed or on thread schedule.
class CounterRng {
public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kDrawsPerTrial = 64;

    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t draw(std::uint64_t counter) const {
        std::uint64_t z = seed_ + kGolden * (counter + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(draw(counter) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
};

// Draws for one trial: counter = trial * 64 + index.
class TrialStream {
public:
    TrialStream(const CounterRng& rng, std::uint64_t trial) : rng_(rng), base_(trial * CounterRng::kDrawsPerTrial) {}

    double uniform() { return rng_.uniform(base_ + next_++); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // (lo, hi]: never returns lo.
    double uniform_open_low(double lo, double hi) { return hi - (hi - lo) * uniform(); }
    bool chance(double p) { return uniform() < p; }

private:
    const CounterRng& rng_;
    std::uint64_t base_;
    std::uint64_t next_ = 0;
};

} // namespace fracineq::cli
