#pragma once

#include <cstdint>

namespace rgsslab {

// Counter-based generator: each draw is a pure function of (seed, stream, counter), so probe
// sets do not depend on evaluation order or thread count.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
        std::uint64_t z = mix(seed_ ^ mix(stream + 0x9e3779b97f4a7c15ULL));
        return mix(z + counter * 0xbf58476d1ce4e5b9ULL);
    }
    // Uniform on [0, 1) with 53 random bits.
    double uniform(std::uint64_t stream, std::uint64_t counter) const {
        return static_cast<double>(bits(stream, counter) >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi, std::uint64_t stream, std::uint64_t counter) const {
        return lo + (hi - lo) * uniform(stream, counter);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t seed_;
};

}  // namespace rgsslab
