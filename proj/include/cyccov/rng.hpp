#pragma once

#include <cstdint>

namespace cyccov {

// Counter-friendly splitmix64 generator. Streams derived with mix_seed(seed, i)
// are independent of how work is partitioned across workers, which keeps
// sampling reproducible for any worker count.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = -n % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t v = next();
            if (v >= threshold) return v % n;
        }
    }

  private:
    std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
    return g.next();
}

}  // namespace cyccov
