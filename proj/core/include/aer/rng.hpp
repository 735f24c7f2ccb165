#ifndef AER_RNG_HPP
#define AER_RNG_HPP

#include <cstdint>

namespace aer {

// splitmix64 (Vigna 2015), emitting its 64-bit outputs as bytes
// little-endian first. Fixed here so seeded runs reproduce across builds
// and implementations. Not cryptographic; production use would swap in a
// CSPRNG behind the same byte-stream interface.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint8_t next_byte() {
        if (avail_ == 0) {
            buffer_ = next_u64();
            avail_ = 8;
        }
        std::uint8_t b = static_cast<std::uint8_t>(buffer_ & 0xFF);
        buffer_ >>= 8;
        --avail_;
        return b;
    }

    // uniform in [0, bound) by rejection; bound >= 1
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
    std::uint64_t buffer_ = 0;
    int avail_ = 0;
};

} // namespace aer

#endif
