#pragma once

#include <cstdint>
#include <string>

namespace hardcore {

// Deterministic random generator with labeled splitting.  All randomness in a
// run flows from one root seed; independent consumers take sub-generators via
// split("label") so that adding a consumer never perturbs the streams of the
// others.  The core is SplitMix64, which is plenty for simulation use and,
// unlike std:: distributions, produces identical streams on every platform.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n) by rejection, bias-free.
    uint64_t uniform_below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Derives an independent child generator.  The child seed mixes the
    // parent's current state with an FNV-1a hash of the label, so streams are
    // stable functions of (root seed, label path).
    Rng split(const std::string& label) {
        uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : label) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        Rng child(state ^ h);
        // Decorrelate from the parent by one mixing round.
        child.next_u64();
        return child;
    }
};

}  // namespace hardcore
