#pragma once

#include <cstdint>
#include <vector>

namespace nzsh {

// Deterministic 64-bit generator (splitmix64). Self-contained so that the
// same seed yields the same stream on every platform/compiler; std::shuffle
// and std::uniform_int_distribution are implementation-defined and would
// break byte-identical reproducibility.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

// Stable derivation of independent sub-seeds (per tile, per sweep tuple, ...).
inline uint64_t derive_seed(uint64_t master, uint64_t salt) {
    Rng r(master ^ (0x51c2f37f04b5dfd5ULL * (salt + 1)));
    r.next();
    return r.next();
}

// FNV-1a over a small list of integers; used to key sweep tuples.
inline uint64_t hash_ints(std::initializer_list<int64_t> xs) {
    uint64_t h = 1469598103934665603ULL;
    for (int64_t x : xs) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<uint64_t>(x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

} // namespace nzsh
