#pragma once

#include <cstdint>
#include <random>

namespace specsal {

// Finalizer step of SplitMix64; bijective on 64-bit words.
inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

// Decorrelated sub-seed for (base, stream, index). Used to partition seed
// space so samples can be generated independently and in any order.
inline uint64_t derive_seed(uint64_t base, uint64_t stream, uint64_t index = 0) {
    uint64_t x = mix64(base + 0x9e3779b97f4a7c15ull * (stream + 1));
    return mix64(x ^ (index + 0x510e527fade682d1ull));
}

// Deterministic RNG. Distribution helpers are implemented by hand because
// std:: distributions are not bit-identical across standard libraries and
// datasets must be byte-reproducible from their seed.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t bits() { return gen_(); }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace specsal
