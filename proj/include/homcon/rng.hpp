#pragma once

#include <cstdint>

namespace homcon {

// SplitMix64 (Steele/Lea/Flood).  The one generator used everywhere: output
// is a pure function of the 64-bit seed, so every sampled object is
// bit-reproducible across platforms and compilers.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    uint64_t state_;
};

// Trial seed derivation: mix the trial index into the master seed through one
// SplitMix64 round.  Fixed contract so records are replayable from
// (master_seed, trial_index) alone.
inline uint64_t derive_seed(uint64_t master_seed, uint64_t trial_index) {
    SplitMix64 mixer(master_seed ^ (0xA3EC647659359ACDULL * (trial_index + 1)));
    return mixer.next();
}

}  // namespace homcon
